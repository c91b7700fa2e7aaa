#pragma once

#include <cstddef>
#include <vector>

#include "wsg/int_tuple.hpp"

namespace wsg {

/**
 * The sublattice of the sum-zero hyperplane spanned by
 * eta^i = a_i (e_i - e_{i+1}), i = 0..m-2, together with its fundamental
 * region C = {alpha : 0 <= alpha_i < a_i for i < m-1}.  The last
 * coordinate of C is unconstrained.
 */
class Lattice {
public:
    /// Periods a_0..a_{m-2}, all positive.
    explicit Lattice(std::vector<Int> periods);

    /// Rebuilds a lattice from explicit generators; throws
    /// std::invalid_argument unless they have the a_i(e_i - e_{i+1}) shape.
    static Lattice from_generators(const std::vector<IntTuple>& generators);

    std::size_t m() const { return periods_.size() + 1; }
    const std::vector<Int>& periods() const { return periods_; }
    const Int& period(std::size_t i) const { return periods_.at(i); }
    const std::vector<IntTuple>& generators() const { return generators_; }
    const IntTuple& generator(std::size_t i) const { return generators_.at(i); }

    /// Whether alpha lies in the fundamental region C.
    bool in_region(const IntTuple& alpha) const;

    /// sum_i coeffs[i] * eta^i
    IntTuple combine(const std::vector<Int>& coeffs) const;

    bool operator==(const Lattice& other) const { return periods_ == other.periods_; }

private:
    std::vector<Int> periods_;
    std::vector<IntTuple> generators_;
};

struct Canonical {
    IntTuple rep;
    std::vector<Int> coeffs;
};

/**
 * The unique representative of alpha + Theta inside C.
 *
 * Coefficients are produced left to right by floor division:
 * k_0 = floor(alpha_0 / a_0), the carry k_0 a_0 is added to coordinate 1,
 * and so on.  alpha == rep + lattice.combine(coeffs) always holds.
 */
Canonical canonicalize(const Lattice& lattice, const IntTuple& alpha);

}  // namespace wsg
