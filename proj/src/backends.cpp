#include "wsg/backends.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

Int genus0_ell(std::size_t m, const IntTuple& alpha) {
    require_length(alpha, m);
    Int v = alpha.sum() + 1;
    return v < 0 ? Int(0) : v;
}

Description genus0_description(std::size_t m) {
    if (m < 2) throw std::invalid_argument("genus0_description: m must be at least 2");
    return Description(0, Lattice(std::vector<Int>(m - 1, Int(1))), {IntTuple::zero(m)},
                       "genus0 m=" + std::to_string(m));
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

IntTuple MonomialExponent::pole_vector(long q) const {
    Int qq(q), q1(q + 1);
    return IntTuple(std::vector<Int>{Int(a) * qq + b * q1, Int(-a) - b * q1});
}

Int hermitian_ell(long q, const IntTuple& alpha) {
    require_length(alpha, 2);
    const Int q1(q + 1);
    Int count = 0;
    for (long a = 0; a <= q; ++a) {
        Int hi = floor_div(alpha[0] - Int(a * q), q1);
        Int lo = ceil_div(-alpha[1] - Int(a), q1);
        if (hi >= lo) count += hi - lo + 1;
    }
    return count;
}

Description hermitian_description(long q) {
    if (!is_prime_power(q)) throw std::invalid_argument("hermitian_description: q must be a prime power >= 2, got " + std::to_string(q));
    const long genus = q * (q - 1) / 2;
    const Lattice lattice(std::vector<Int>{Int(q + 1)});
    auto ell = [q](const IntTuple& a) { return hermitian_ell(q, a); };
    std::vector<IntTuple> gamma;
    for_each_in_region_slab(lattice, Int(0), Int(2 * genus), [&](const IntTuple& a) {
        Int l = ell(a);
        if (l - ell(a - basis_vector(2, 0)) == 1 && l - ell(a - basis_vector(2, 1)) == 1 && l - ell(a - ones(2)) == 1)
            gamma.push_back(a);
    });
    return Description(genus, lattice, std::move(gamma), "hermitian q=" + std::to_string(q) + " (Qinf,P00)");
}

bool cross_validate(long q, const Box& box) {
    const Semigroup sg(hermitian_description(q));
    Int n = box.point_count();
    if (!n.fits_ulong_p()) throw std::length_error("cross_validate: box too large");
    std::vector<char> ok(n.get_ui(), 1);
    detail::parallel_for(ok.size(), [&](std::size_t i) {
        IntTuple a = box.point_at(i);
        ok[i] = sg.ell(a) == hermitian_ell(q, a) ? 1 : 0;
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

}  // namespace wsg
