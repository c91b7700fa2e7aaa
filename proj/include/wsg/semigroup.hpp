#pragma once

#include <cstddef>
#include <memory>
#include <type_traits>
#include <vector>

#include "wsg/description.hpp"
#include "wsg/int_tuple.hpp"

namespace wsg {

/// m = 2 data: sigma_2(j) = min{t : (j, t) in H} on one period, extended by
/// sigma_2(j + a) = sigma_2(j) - a.
struct TwoPointProfile {
    Int a;
    std::vector<Int> sigma2;

    Int sigma2_at(const Int& j) const;
};

struct RegionClassification {
    std::vector<IntTuple> maximal;   // M(Q) ∩ C
    std::vector<IntTuple> absolute;  // Γ(Q) ∩ C
};

/**
 * Query engine over a Description.
 *
 * Every set-theoretic question reduces to the dimension function
 * l(alpha) = #(Γ(alpha) / ≡_m), where Γ(alpha) is the finite set of
 * absolute maximal elements dominated by alpha.  Dimensions are memoized;
 * the cache is internally synchronized, so a const Semigroup may be shared
 * across threads.
 *
 * Coordinate indices are 0-based throughout.
 */
class Semigroup {
public:
    explicit Semigroup(Description d);
    ~Semigroup();
    Semigroup(Semigroup&&) noexcept;
    Semigroup& operator=(Semigroup&&) noexcept;

    const Description& description() const { return desc_; }
    std::size_t m() const { return desc_.m(); }

    /// Γ(alpha) = {gamma + eta : gamma in Γ∩C, eta in Θ, gamma + eta <= alpha},
    /// sorted lexicographically.
    std::vector<IntTuple> gamma_below(const IntTuple& alpha) const;

    /// Riemann-Roch dimension l(alpha), counted along the last coordinate.
    Int ell(const IntTuple& alpha) const;

    /// #(Γ(alpha) / ≡_i) by explicit enumeration; equals ell() for every i.
    Int ell_by_index(const IntTuple& alpha, std::size_t i) const;

    /// d_i(alpha) = l(alpha) - l(alpha - e_i), always 0 or 1.
    int d_jump(const IntTuple& alpha, std::size_t i) const;

    bool member(const IntTuple& alpha) const;
    bool nabla_im_empty(const IntTuple& alpha, std::size_t i) const;

    /// ∇_J(alpha) for nonempty proper J (0-based, any order).  Throws
    /// std::invalid_argument for J empty, full or out of range.
    std::vector<IntTuple> nabla_J(const IntTuple& alpha, const std::vector<std::size_t>& J) const;
    bool nabla_J_empty(const IntTuple& alpha, const std::vector<std::size_t>& J) const;

    bool is_maximal(const IntTuple& alpha) const;
    bool is_absolute_maximal(const IntTuple& alpha) const;

    /// Exhaustive scan of {alpha in C : 0 <= |alpha| <= 2g-2+m}.
    RegionClassification maximals_in_region() const;

    /// Points of the box that are lubs of m elements of Γ(Q), sorted.
    std::vector<IntTuple> members_by_lub(const Box& box) const;

    /// One element per ≡_m class of Γ(alpha) (the lexicographically least),
    /// sorted; its length is l(alpha).
    std::vector<IntTuple> rr_basis_exponents(const IntTuple& alpha) const;

    /// m = 2 only; throws std::invalid_argument otherwise and
    /// std::domain_error if sigma_1(sigma_2(j)) != j.
    TwoPointProfile sigma_profile() const;

    /// min{s : (s, t) in H}; m = 2 only.
    Int sigma1(const Int& t) const;
    /// min{t : (j, t) in H}; m = 2 only.
    Int sigma2(const Int& j) const;

    std::size_t cache_size() const;
    void clear_cache() const;

private:
    Int compute_ell(const IntTuple& alpha) const;

    template <class Visit>
    void enumerate_gamma_below(const IntTuple& alpha, Visit&& visit) const;

    Description desc_;
    struct Cache;
    std::unique_ptr<Cache> cache_;
};

/// Visits every alpha in C with lo <= |alpha| <= hi, constrained coordinates
/// in lexicographic order and the free last coordinate innermost.  A visitor
/// returning bool stops the walk by returning false.
template <class Visit>
void for_each_in_region_slab(const Lattice& lattice, const Int& lo, const Int& hi, Visit&& visit);

/// All nonempty proper subsets of {0..m-1}, each sorted, in a fixed order.
std::vector<std::vector<std::size_t>> proper_subsets(std::size_t m);

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_in_region_slab(const Lattice& lattice, const Int& lo, const Int& hi, Visit&& visit) {
    const std::size_t m = lattice.m();
    IntTuple cur(m);
    Int prefix = 0;
    // odometer over the m-1 constrained coordinates
    while (true) {
        for (Int s = lo; s <= hi; ++s) {
            cur[m - 1] = s - prefix;
            if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const IntTuple&>, bool>) {
                if (!visit(static_cast<const IntTuple&>(cur))) return;
            } else {
                visit(static_cast<const IntTuple&>(cur));
            }
        }
        std::size_t i = m - 1;
        while (true) {
            if (i == 0) return;
            --i;
            if (cur[i] + 1 < lattice.period(i)) {
                ++cur[i];
                ++prefix;
                break;
            }
            prefix -= cur[i];
            cur[i] = 0;
        }
    }
}

}  // namespace wsg
