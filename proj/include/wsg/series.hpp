#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsg/int_tuple.hpp"
#include "wsg/semigroup.hpp"

namespace wsg {

enum class SeriesKind { L, Q, P, Custom };

const char* to_string(SeriesKind kind);
/// "L", "Q" or "P"; throws std::invalid_argument otherwise.
SeriesKind parse_series_kind(const std::string& text);

/**
 * Truncation of a formal series sum s(alpha) t^alpha to a box.  Storage is
 * dense in row-major (lexicographic) order, so every box point has a
 * coefficient.
 */
class BoxSeries {
public:
    BoxSeries(Box box, SeriesKind kind);

    const Box& box() const { return box_; }
    SeriesKind kind() const { return kind_; }
    const Int& at(const IntTuple& alpha) const { return coeffs_.at(box_.index_of(alpha)); }
    void set(const IntTuple& alpha, Int value) { coeffs_.at(box_.index_of(alpha)) = std::move(value); }
    const std::vector<Int>& dense() const { return coeffs_; }
    std::vector<Int>& dense() { return coeffs_; }

    /// Nonzero coefficients in lexicographic order.
    std::vector<std::pair<IntTuple, Int>> support() const;

    /// {"box": {"lower", "upper"}, "kind", "coeffs": [[alpha, c], ...]}
    /// with zero coefficients omitted.
    std::string to_json(int indent = -1) const;
    static BoxSeries from_json(const std::string& text);

private:
    Box box_;
    SeriesKind kind_;
    std::vector<Int> coeffs_;
};

/// The finite part P*(t) = sum over M(Q) ∩ C of p(alpha) t^alpha.
struct SemigroupPolynomial {
    std::map<IntTuple, Int> terms;

    Int coefficient(const IntTuple& alpha) const;
    /// e.g. "1 + t1^1*t2^5 - t3"
    std::string to_string() const;
    std::string to_json(int indent = -1) const;
};

struct SymmetryReport {
    bool symmetric = false;
    /// Lexicographically least maximal element of C with |sigma| = 2g-2+m.
    std::optional<IntTuple> sigma;
    /// Non-member of degree 2g-1, first in the scan of C.
    std::optional<IntTuple> gamma_witness;
    /// Some maximal sigma' with |sigma'| = 2g-2+m and no coordinate equal to 1.
    bool canonical_full_support = false;
    std::optional<IntTuple> full_support_witness;

    std::string to_json(int indent = -1) const;
};

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t points_checked = 0;
    std::optional<IntTuple> counterexample;
    std::string detail;
};

/// d(alpha) = l(alpha) - l(alpha - 1), in [0, m].
Int coeff_d(const Semigroup& sg, const IntTuple& alpha);
/// q(alpha) = sum over J of (-1)^#J d(alpha - 1_J).
Int coeff_q(const Semigroup& sg, const IntTuple& alpha);
/// p_i(alpha) = (-1)^{m-1} sum over J ⊆ I∖{i} of (-1)^#J d_i(alpha - 1 + 1_J + e_i).
/// The value does not depend on i.
Int coeff_p(const Semigroup& sg, const IntTuple& alpha, std::size_t i = 0);

/// Coefficients of L, Q or P on every box point (evaluated in parallel).
BoxSeries series_on_box(const Semigroup& sg, SeriesKind kind, const Box& box);

/// q(alpha) = p(alpha) - p(alpha - 1) on the box.
CheckResult check_QP_equation(const Semigroup& sg, const Box& box);

SemigroupPolynomial semigroup_polynomial(const Semigroup& sg);

/// p(alpha) = P*[C-representative of alpha] on the box.
CheckResult check_reconstruction(const Semigroup& sg, const Box& box);
CheckResult check_reconstruction(const Semigroup& sg, const SemigroupPolynomial& poly, const Box& box);

SymmetryReport symmetry_report(const Semigroup& sg);

/**
 * On every box point and every i:
 *   p(alpha) = (-1)^m p(sigma - alpha),
 *   q(alpha) = (-1)^{m-1} q(sigma - alpha + 1),
 *   d_i(alpha) + d_i(sigma - alpha - 1 + e_i) = 1.
 * Throws std::invalid_argument when the semigroup is not symmetric.
 */
CheckResult check_symmetry_equations(const Semigroup& sg, const Box& box);
CheckResult check_symmetry_equations(const Semigroup& sg, const IntTuple& sigma, const Box& box);

/**
 * Evaluates ok(alpha) over the box (in parallel) and reports the
 * lexicographically first failure.
 */
CheckResult check_on_box(std::string name, const Box& box, const std::function<bool(const IntTuple&)>& ok);

}  // namespace wsg
