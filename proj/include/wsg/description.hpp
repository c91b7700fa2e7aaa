#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wsg/int_tuple.hpp"
#include "wsg/lattice.hpp"

namespace wsg {

/**
 * Finite presentation of a generalized Weierstrass semigroup at m points:
 * the genus, the lattice Theta of principal sum-zero translations, and the
 * absolute maximal elements lying in the fundamental region C.  The whole
 * semigroup is (gamma_fundamental + Theta) closed under lub.
 *
 * Construction checks the structural invariants (shapes, membership of
 * every gamma in C, 0 <= |gamma| <= 2g-2+m, zero present) and throws
 * std::invalid_argument on failure.  Semantic consistency is the job of
 * validate_description().
 */
class Description {
public:
    Description(long genus, Lattice lattice, std::vector<IntTuple> gamma_fundamental, std::string label = {});

    std::size_t m() const { return lattice_.m(); }
    long genus() const { return genus_; }
    const Lattice& lattice() const { return lattice_; }
    /// Sorted lexicographically, duplicates removed.
    const std::vector<IntTuple>& gamma_fundamental() const { return gamma_; }
    const std::string& label() const { return label_; }

    /// 2g - 2 + m, the largest possible |alpha| of a maximal element.
    Int top_degree() const { return Int(2 * genus_ - 2 + static_cast<long>(m())); }

    bool operator==(const Description& other) const;

private:
    long genus_;
    Lattice lattice_;
    std::vector<IntTuple> gamma_;
    std::string label_;
};

/// Serializes to the single-object JSON schema
/// {"m", "genus", "lattice_generators", "gamma_fundamental", "label"}.
std::string to_json_string(const Description& d, int indent = -1);
/// Parses and structurally validates; throws std::invalid_argument.
Description description_from_json_string(const std::string& text);

Description load_description(const std::filesystem::path& path);
void save_description(const Description& d, const std::filesystem::path& path);

struct Violation {
    enum class Kind {
        NotAbsoluteMaximal,      // listed gamma fails l(alpha) = l(alpha-1)+1
        MissingAbsoluteMaximal,  // slab scan found an unlisted absolute maximal
        RiemannRoch,             // l(alpha) != |alpha|+1-g although |alpha| >= 2g-1
        NegativeDegree,          // l(alpha) != 0 although |alpha| < 0
    };
    Kind kind;
    IntTuple alpha;
    std::string message;
};

const char* to_string(Violation::Kind kind);

/**
 * Self-consistency of a description, with l computed from the description
 * itself.  Violations are data: an empty result means every check held.
 */
std::vector<Violation> validate_description(const Description& d);

}  // namespace wsg
