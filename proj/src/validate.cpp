#include <algorithm>
#include <set>

#include "wsg/description.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

namespace {

// Riemann-Roch samples: this many points of the region per degree.
constexpr std::size_t kSamplesPerDegree = 512;

template <class Visit>
void sample_degree(const Lattice& lattice, const Int& degree, Visit&& visit) {
    std::size_t taken = 0;
    for_each_in_region_slab(lattice, degree, degree, [&](const IntTuple& a) {
        visit(a);
        // lattice translates of the same point
        visit(a + lattice.generator(0));
        visit(a - lattice.generator(lattice.m() - 2));
        return ++taken < kSamplesPerDegree;
    });
}

}  // namespace

std::vector<Violation> validate_description(const Description& d) {
    std::vector<Violation> out;
    const Semigroup sg(d);
    const std::size_t m = d.m();
    const Int g = d.genus();

    // (a) every listed gamma is absolute maximal
    for (const auto& gamma : d.gamma_fundamental()) {
        if (!sg.is_absolute_maximal(gamma))
            out.push_back({Violation::Kind::NotAbsoluteMaximal, gamma,
                           "listed element " + gamma.to_string() + " is not absolute maximal (l = " +
                               sg.ell(gamma).get_str() + ", l(alpha-1) = " + sg.ell(gamma - ones(m)).get_str() + ")"});
    }

    // (b) nothing absolute maximal is missing from the fundamental slab
    const std::set<IntTuple> listed(d.gamma_fundamental().begin(), d.gamma_fundamental().end());
    for_each_in_region_slab(d.lattice(), Int(0), d.top_degree(), [&](const IntTuple& a) {
        if (!listed.count(a) && sg.is_absolute_maximal(a))
            out.push_back({Violation::Kind::MissingAbsoluteMaximal, a,
                           "absolute maximal element " + a.to_string() + " of C is not listed"});
    });

    // (c) l(alpha) = |alpha| + 1 - g once |alpha| >= 2g - 1
    for (Int s = 2 * g - 1; s <= 2 * g + Int(static_cast<unsigned long>(m)); ++s) {
        sample_degree(d.lattice(), s, [&](const IntTuple& a) {
            Int expected = s + 1 - g;
            Int got = sg.ell(a);
            if (got != expected)
                out.push_back({Violation::Kind::RiemannRoch, a,
                               "l" + a.to_string() + " = " + got.get_str() + ", Riemann-Roch requires " +
                                   expected.get_str()});
        });
    }

    // (d) l(alpha) = 0 for |alpha| < 0
    for (long s : {-1L, -2L, -static_cast<long>(m) - 1}) {
        sample_degree(d.lattice(), Int(s), [&](const IntTuple& a) {
            Int got = sg.ell(a);
            if (got != 0)
                out.push_back({Violation::Kind::NegativeDegree, a,
                               "l" + a.to_string() + " = " + got.get_str() + " although |alpha| < 0"});
        });
    }
    return out;
}

}  // namespace wsg
