#pragma once

#include <string>
#include <vector>

#include "wsg/int_tuple.hpp"
#include "wsg/semigroup.hpp"
#include "wsg/series.hpp"

namespace wsg {

/**
 * Every structural identity on one box, in a fixed order:
 * description, region-classification, lub-generation, ell-index,
 * periodicity, QP-equation, p-index, support-law, reconstruction,
 * symmetry-equations.  The symmetry check passes vacuously (with a note in
 * detail) when the semigroup is not symmetric.
 */
std::vector<CheckResult> run_verification(const Semigroup& sg, const Box& box);

bool all_passed(const std::vector<CheckResult>& results);

std::string report_text(const std::vector<CheckResult>& results);
std::string report_json(const std::vector<CheckResult>& results, int indent = -1);

}  // namespace wsg
