#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace wsg {

/// Arbitrary precision integer used for every coordinate and count.
using Int = mpz_class;

/// floor(a / b) for b != 0.
Int floor_div(const Int& a, const Int& b);
/// ceil(a / b) for b != 0.
Int ceil_div(const Int& a, const Int& b);
/// Parses a decimal integer; throws std::invalid_argument on garbage.
Int parse_int(std::string_view text);

/**
 * A point of Z^m.
 *
 * Comparison operators give the lexicographic order, which is the
 * canonical output order everywhere in the library.  The coordinatewise
 * (product) order is spelled `leq`.
 */
class IntTuple {
public:
    IntTuple() = default;
    explicit IntTuple(std::size_t m) : coords_(m) {}
    explicit IntTuple(std::vector<Int> coords) : coords_(std::move(coords)) {}
    IntTuple(std::initializer_list<long> coords);

    static IntTuple zero(std::size_t m) { return IntTuple(m); }

    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    /// |alpha|, the coordinate sum.
    Int sum() const;

    IntTuple& operator+=(const IntTuple& other);
    IntTuple& operator-=(const IntTuple& other);
    IntTuple operator-() const;

    friend IntTuple operator+(IntTuple a, const IntTuple& b) { return a += b; }
    friend IntTuple operator-(IntTuple a, const IntTuple& b) { return a -= b; }
    friend IntTuple operator*(const Int& k, const IntTuple& a);

    friend bool operator==(const IntTuple& a, const IntTuple& b);
    friend bool operator!=(const IntTuple& a, const IntTuple& b) { return !(a == b); }
    friend bool operator<(const IntTuple& a, const IntTuple& b);
    friend bool operator>(const IntTuple& a, const IntTuple& b) { return b < a; }

    /// "(1,-2,3)"
    std::string to_string() const;

private:
    std::vector<Int> coords_;
};

std::ostream& operator<<(std::ostream& os, const IntTuple& t);

/// Coordinatewise order: a_i <= b_i for every i.
bool leq(const IntTuple& a, const IntTuple& b);

/// Throws std::invalid_argument unless a.size() == m.
void require_length(const IntTuple& a, std::size_t m, std::string_view what = "tuple");

/**
 * 1_J for a 0-based index set J; J = all gives the all-ones tuple and
 * J = {i} gives e_i.  Throws std::out_of_range on an index >= m.
 */
IntTuple unit_tuple(std::size_t m, const std::vector<std::size_t>& indices);
IntTuple ones(std::size_t m);
IntTuple basis_vector(std::size_t m, std::size_t i);

/// Coordinatewise maximum of a nonempty list of equal-length tuples.
IntTuple lub(const std::vector<IntTuple>& tuples);

/// Parses "3,-1" or "(3,-1)".
IntTuple parse_tuple(std::string_view text);

struct IntTupleHash {
    std::size_t operator()(const IntTuple& t) const noexcept;
};

/// Finite window {alpha : lower <= alpha <= upper}.
class Box {
public:
    Box(IntTuple lower, IntTuple upper);

    /// The cube [lo, hi]^m.
    static Box cube(std::size_t m, long lo, long hi);

    const IntTuple& lower() const { return lower_; }
    const IntTuple& upper() const { return upper_; }
    std::size_t dimension() const { return lower_.size(); }

    Int point_count() const;
    bool contains(const IntTuple& a) const;

    /// Row-major position of a contained point (first coordinate slowest),
    /// so increasing index is increasing lexicographic order.
    std::size_t index_of(const IntTuple& a) const;
    IntTuple point_at(std::size_t index) const;

    /// Visits every point in lexicographic order.
    void for_each(const std::function<void(const IntTuple&)>& visit) const;

    /// Parses "l1..u1,l2..u2,...".
    static Box parse(std::string_view text);
    std::string to_string() const;

private:
    IntTuple lower_;
    IntTuple upper_;
    std::vector<std::size_t> extents_;
};

}  // namespace wsg
