#pragma once

#include <cstddef>

#include "wsg/description.hpp"
#include "wsg/int_tuple.hpp"

namespace wsg {

/// l(alpha) on m distinct rational points of the projective line.
Int genus0_ell(std::size_t m, const IntTuple& alpha);

/// Periods all 1, Γ∩C = {0}.  Throws std::invalid_argument for m < 2.
Description genus0_description(std::size_t m);

bool is_prime_power(long q);

/// x^a y^b on the Hermitian curve y^q + y = x^(q+1), 0 <= a <= q.
struct MonomialExponent {
    long a = 0;
    Int b;

    /// (-v_Qinf, -v_P00) = (aq + b(q+1), -a - b(q+1)).
    IntTuple pole_vector(long q) const;
};

/// Number of reduced monomials x^a y^b with pole vector <= alpha at (Qinf, P00).
Int hermitian_ell(long q, const IntTuple& alpha);

/// Two-point description at (Qinf, P00), with Γ∩C found by the monomial
/// count rather than the combinatorial dimension.  Throws
/// std::invalid_argument unless q is a prime power.
Description hermitian_description(long q);

/// Semigroup(hermitian_description(q)).ell == hermitian_ell(q, .) on the box.
bool cross_validate(long q, const Box& box);

}  // namespace wsg
