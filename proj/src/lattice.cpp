#include "wsg/lattice.hpp"

#include <stdexcept>

namespace wsg {

Lattice::Lattice(std::vector<Int> periods) : periods_(std::move(periods)) {
    if (periods_.empty()) throw std::invalid_argument("lattice needs m >= 2 (at least one period)");
    const std::size_t m = periods_.size() + 1;
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        if (periods_[i] <= 0)
            throw std::invalid_argument("lattice period a_" + std::to_string(i + 1) + " = " + periods_[i].get_str() +
                                        " is not positive");
        IntTuple eta(m);
        eta[i] = periods_[i];
        eta[i + 1] = -periods_[i];
        generators_.push_back(std::move(eta));
    }
}

Lattice Lattice::from_generators(const std::vector<IntTuple>& generators) {
    if (generators.empty()) throw std::invalid_argument("lattice needs at least one generator");
    const std::size_t m = generators.size() + 1;
    std::vector<Int> periods;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const IntTuple& eta = generators[i];
        require_length(eta, m, "lattice generator");
        for (std::size_t j = 0; j < m; ++j) {
            bool ok = (j == i) ? eta[j] > 0 : (j == i + 1) ? eta[j] == -eta[i] : eta[j] == 0;
            if (!ok)
                throw std::invalid_argument("lattice generator " + std::to_string(i + 1) + " " + eta.to_string() +
                                            " is not of the form a(e_i - e_{i+1}) with a > 0");
        }
        periods.push_back(eta[i]);
    }
    return Lattice(std::move(periods));
}

bool Lattice::in_region(const IntTuple& alpha) const {
    require_length(alpha, m());
    for (std::size_t i = 0; i < periods_.size(); ++i)
        if (alpha[i] < 0 || alpha[i] >= periods_[i]) return false;
    return true;
}

IntTuple Lattice::combine(const std::vector<Int>& coeffs) const {
    if (coeffs.size() != periods_.size()) throw std::invalid_argument("wrong number of lattice coefficients");
    IntTuple r(m());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        r[i] += coeffs[i] * periods_[i];
        r[i + 1] -= coeffs[i] * periods_[i];
    }
    return r;
}

Canonical canonicalize(const Lattice& lattice, const IntTuple& alpha) {
    require_length(alpha, lattice.m());
    Canonical out{alpha, std::vector<Int>(lattice.periods().size())};
    for (std::size_t i = 0; i < lattice.periods().size(); ++i) {
        const Int& a = lattice.period(i);
        Int k = floor_div(out.rep[i], a);
        out.rep[i] -= k * a;
        out.rep[i + 1] += k * a;
        out.coeffs[i] = std::move(k);
    }
    return out;
}

}  // namespace wsg
