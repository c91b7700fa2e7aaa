#include "wsg/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wsg {

namespace {

CheckResult description_check(const Semigroup& sg) {
    CheckResult r{"description", true, 0, std::nullopt, {}};
    auto violations = validate_description(sg.description());
    if (!violations.empty()) {
        r.passed = false;
        r.counterexample = violations.front().alpha;
        r.detail = std::to_string(violations.size()) + " violation(s); first: " + to_string(violations.front().kind) +
                   ": " + violations.front().message;
    }
    return r;
}

CheckResult region_check(const Semigroup& sg) {
    CheckResult r{"region-classification", true, 0, std::nullopt, {}};
    auto found = sg.maximals_in_region().absolute;
    const auto& listed = sg.description().gamma_fundamental();
    r.points_checked = found.size();
    if (found != listed) {
        std::vector<IntTuple> diff;
        std::set_symmetric_difference(found.begin(), found.end(), listed.begin(), listed.end(), std::back_inserter(diff));
        r.passed = false;
        r.counterexample = diff.front();
        r.detail = "absolute maximal elements of C differ from the listed ones at " + diff.front().to_string();
    }
    return r;
}

CheckResult lub_check(const Semigroup& sg, const Box& box) {
    CheckResult r{"lub-generation", true, 0, std::nullopt, {}};
    auto by_lub = sg.members_by_lub(box);
    std::vector<IntTuple> members;
    box.for_each([&](const IntTuple& a) {
        if (sg.member(a)) members.push_back(a);
    });
    r.points_checked = box.point_count().get_ui();
    if (by_lub != members) {
        std::vector<IntTuple> diff;
        std::set_symmetric_difference(by_lub.begin(), by_lub.end(), members.begin(), members.end(), std::back_inserter(diff));
        r.passed = false;
        r.counterexample = diff.front();
        r.detail = "lubs of m elements of Γ and members disagree at " + diff.front().to_string();
    }
    return r;
}

CheckResult periodicity_check(const Semigroup& sg, const Box& box) {
    const auto& gens = sg.description().lattice().generators();
    auto r = check_on_box("periodicity", box, [&](const IntTuple& a) {
        for (const auto& eta : gens) {
            IntTuple b = a + eta;
            if (sg.member(a) != sg.member(b) || sg.is_maximal(a) != sg.is_maximal(b) ||
                sg.is_absolute_maximal(a) != sg.is_absolute_maximal(b) || sg.ell(a) != sg.ell(b) ||
                coeff_p(sg, a) != coeff_p(sg, b))
                return false;
        }
        return true;
    });
    if (!r.passed) r.detail = "translation by a lattice generator changes the data at " + r.counterexample->to_string();
    return r;
}

CheckResult support_check(const Semigroup& sg, const Box& box) {
    const bool two_point = sg.m() == 2;
    auto r = check_on_box("support-law", box, [&](const IntTuple& a) {
        Int p = coeff_p(sg, a);
        if (!sg.is_maximal(a) && p != 0) return false;
        if (sg.is_absolute_maximal(a) && p != 1) return false;
        if (two_point && p != (sg.is_maximal(a) ? 1 : 0)) return false;
        return true;
    });
    if (!r.passed) r.detail = "p" + r.counterexample->to_string() + " = " + coeff_p(sg, *r.counterexample).get_str();
    return r;
}

}  // namespace

std::vector<CheckResult> run_verification(const Semigroup& sg, const Box& box) {
    require_length(box.lower(), sg.m(), "box");
    const std::size_t m = sg.m();
    std::vector<CheckResult> out;
    out.push_back(description_check(sg));
    out.push_back(region_check(sg));
    out.push_back(lub_check(sg, box));

    auto ell_index = check_on_box("ell-index", box, [&](const IntTuple& a) {
        Int l = sg.ell(a);
        for (std::size_t i = 0; i < m; ++i)
            if (sg.ell_by_index(a, i) != l) return false;
        return true;
    });
    if (!ell_index.passed) ell_index.detail = "class counts differ by index at " + ell_index.counterexample->to_string();
    out.push_back(std::move(ell_index));

    out.push_back(periodicity_check(sg, box));
    out.push_back(check_QP_equation(sg, box));

    auto p_index = check_on_box("p-index", box, [&](const IntTuple& a) {
        Int p = coeff_p(sg, a, 0);
        for (std::size_t i = 1; i < m; ++i)
            if (coeff_p(sg, a, i) != p) return false;
        return true;
    });
    if (!p_index.passed) p_index.detail = "p_i differs by index at " + p_index.counterexample->to_string();
    out.push_back(std::move(p_index));

    out.push_back(support_check(sg, box));
    out.push_back(check_reconstruction(sg, box));

    auto rep = symmetry_report(sg);
    if (rep.symmetric) {
        out.push_back(check_symmetry_equations(sg, *rep.sigma, box));
    } else {
        out.push_back({"symmetry-equations", true, 0, std::nullopt, "skipped: not symmetric"});
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string report_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.points_checked << " points)";
        if (r.counterexample) os << " counterexample " << r.counterexample->to_string();
        if (!r.detail.empty()) os << ": " << r.detail;
        os << '\n';
    }
    os << (all_passed(results) ? "all checks passed" : "verification FAILED") << '\n';
    return os.str();
}

std::string report_json(const std::vector<CheckResult>& results, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json j;
        j["name"] = r.name;
        j["passed"] = r.passed;
        j["points_checked"] = r.points_checked;
        j["counterexample"] = r.counterexample ? nlohmann::ordered_json(r.counterexample->to_string()) : nlohmann::ordered_json(nullptr);
        j["detail"] = r.detail;
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json out;
    out["passed"] = all_passed(results);
    out["checks"] = std::move(arr);
    return out.dump(indent);
}

}  // namespace wsg
