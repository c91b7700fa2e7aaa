#include "wsg/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "parallel.hpp"

namespace wsg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json int_json(const Int& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

ordered_json tuple_json(const IntTuple& t) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : t) arr.push_back(int_json(c));
    return arr;
}

Int json_int(const ordered_json& j) {
    if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()), 10);
    if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()), 10);
    if (j.is_string()) return parse_int(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

IntTuple json_tuple(const ordered_json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array, got " + j.dump());
    std::vector<Int> coords;
    for (const auto& c : j) coords.push_back(json_int(c));
    return IntTuple(std::move(coords));
}

int sign_pow(std::size_t n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::L: return "L";
        case SeriesKind::Q: return "Q";
        case SeriesKind::P: return "P";
        case SeriesKind::Custom: return "custom";
    }
    return "custom";
}

SeriesKind parse_series_kind(const std::string& text) {
    if (text == "L") return SeriesKind::L;
    if (text == "Q") return SeriesKind::Q;
    if (text == "P") return SeriesKind::P;
    if (text == "custom") return SeriesKind::Custom;
    throw std::invalid_argument("unknown series kind '" + text + "' (expected L, Q or P)");
}

BoxSeries::BoxSeries(Box box, SeriesKind kind) : box_(std::move(box)), kind_(kind) {
    Int n = box_.point_count();
    if (!n.fits_ulong_p()) throw std::length_error("box too large for a dense series");
    coeffs_.assign(n.get_ui(), Int(0));
}

std::vector<std::pair<IntTuple, Int>> BoxSeries::support() const {
    std::vector<std::pair<IntTuple, Int>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(box_.point_at(i), coeffs_[i]);
    return out;
}

std::string BoxSeries::to_json(int indent) const {
    ordered_json j;
    j["box"] = {{"lower", tuple_json(box_.lower())}, {"upper", tuple_json(box_.upper())}};
    j["kind"] = wsg::to_string(kind_);
    ordered_json coeffs = ordered_json::array();
    for (const auto& [alpha, c] : support()) coeffs.push_back(ordered_json::array({tuple_json(alpha), int_json(c)}));
    j["coeffs"] = std::move(coeffs);
    return j.dump(indent);
}

BoxSeries BoxSeries::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Box box(json_tuple(j.at("box").at("lower")), json_tuple(j.at("box").at("upper")));
    BoxSeries s(std::move(box), parse_series_kind(j.at("kind").get<std::string>()));
    for (const auto& entry : j.at("coeffs")) s.set(json_tuple(entry.at(0)), json_int(entry.at(1)));
    return s;
}

Int SemigroupPolynomial::coefficient(const IntTuple& alpha) const {
    auto it = terms.find(alpha);
    return it == terms.end() ? Int(0) : it->second;
}

std::string SemigroupPolynomial::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, c] : terms) {
        std::string mono;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "t" + std::to_string(i + 1);
            if (alpha[i] != 1) mono += "^" + alpha[i].get_str();
        }
        Int mag = abs(c);
        std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string SemigroupPolynomial::to_json(int indent) const {
    ordered_json terms_json = ordered_json::array();
    for (const auto& [alpha, c] : terms) terms_json.push_back(ordered_json::array({tuple_json(alpha), int_json(c)}));
    ordered_json j;
    j["terms"] = std::move(terms_json);
    return j.dump(indent);
}

std::string SymmetryReport::to_json(int indent) const {
    ordered_json j;
    j["symmetric"] = symmetric;
    j["sigma"] = sigma ? tuple_json(*sigma) : ordered_json(nullptr);
    j["gamma_witness"] = gamma_witness ? tuple_json(*gamma_witness) : ordered_json(nullptr);
    j["canonical_full_support"] = canonical_full_support;
    j["full_support_witness"] = full_support_witness ? tuple_json(*full_support_witness) : ordered_json(nullptr);
    return j.dump(indent);
}

Int coeff_d(const Semigroup& sg, const IntTuple& alpha) { return sg.ell(alpha) - sg.ell(alpha - ones(sg.m())); }

Int coeff_q(const Semigroup& sg, const IntTuple& alpha) {
    const std::size_t m = sg.m();
    require_length(alpha, m);
    Int q = 0;
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        IntTuple shifted = alpha;
        std::size_t bits = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (1UL << j)) {
                --shifted[j];
                ++bits;
            }
        Int d = coeff_d(sg, shifted);
        if (bits % 2) q -= d; else q += d;
    }
    return q;
}

Int coeff_p(const Semigroup& sg, const IntTuple& alpha, std::size_t i) {
    const std::size_t m = sg.m();
    require_length(alpha, m);
    if (i >= m) throw std::out_of_range("coeff_p: index out of range");
    // alpha - 1 + e_i, then add 1_J for J ⊆ I∖{i}
    IntTuple base = alpha - ones(m) + basis_vector(m, i);
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j)
        if (j != i) others.push_back(j);
    Int sum = 0;
    for (unsigned long mask = 0; mask < (1UL << others.size()); ++mask) {
        IntTuple point = base;
        std::size_t bits = 0;
        for (std::size_t t = 0; t < others.size(); ++t)
            if (mask & (1UL << t)) {
                ++point[others[t]];
                ++bits;
            }
        sum += sign_pow(bits) * sg.d_jump(point, i);
    }
    return sign_pow(m - 1) * sum;
}

BoxSeries series_on_box(const Semigroup& sg, SeriesKind kind, const Box& box) {
    require_length(box.lower(), sg.m(), "box");
    BoxSeries out(box, kind);
    auto& dense = out.dense();
    detail::parallel_for(dense.size(), [&](std::size_t idx) {
        const IntTuple alpha = box.point_at(idx);
        switch (kind) {
            case SeriesKind::L: dense[idx] = coeff_d(sg, alpha); break;
            case SeriesKind::Q: dense[idx] = coeff_q(sg, alpha); break;
            case SeriesKind::P: dense[idx] = coeff_p(sg, alpha); break;
            case SeriesKind::Custom: throw std::invalid_argument("series_on_box: kind must be L, Q or P");
        }
    });
    return out;
}

CheckResult check_on_box(std::string name, const Box& box, const std::function<bool(const IntTuple&)>& ok) {
    CheckResult r;
    r.name = std::move(name);
    Int n = box.point_count();
    if (!n.fits_ulong_p()) throw std::length_error("box too large to check");
    std::vector<char> good(n.get_ui(), 1);
    detail::parallel_for(good.size(), [&](std::size_t idx) { good[idx] = ok(box.point_at(idx)) ? 1 : 0; });
    r.points_checked = good.size();
    auto bad = std::find(good.begin(), good.end(), 0);
    if (bad != good.end()) {
        r.passed = false;
        r.counterexample = box.point_at(static_cast<std::size_t>(bad - good.begin()));
    }
    return r;
}

CheckResult check_QP_equation(const Semigroup& sg, const Box& box) {
    const IntTuple one = ones(sg.m());
    auto r = check_on_box("QP-equation", box, [&](const IntTuple& a) {
        return coeff_q(sg, a) == coeff_p(sg, a) - coeff_p(sg, a - one);
    });
    if (!r.passed) {
        const auto& a = *r.counterexample;
        r.detail = "q" + a.to_string() + " = " + coeff_q(sg, a).get_str() + ", p(alpha) - p(alpha-1) = " +
                   Int(coeff_p(sg, a) - coeff_p(sg, a - one)).get_str();
    }
    return r;
}

SemigroupPolynomial semigroup_polynomial(const Semigroup& sg) {
    SemigroupPolynomial poly;
    for (const auto& alpha : sg.maximals_in_region().maximal) {
        Int p = coeff_p(sg, alpha);
        if (p != 0) poly.terms.emplace(alpha, std::move(p));
    }
    return poly;
}

CheckResult check_reconstruction(const Semigroup& sg, const Box& box) {
    return check_reconstruction(sg, semigroup_polynomial(sg), box);
}

// Translates of C by Θ tile Z^m, so the lattice-sum product has exactly one
// contributing term per monomial: the coefficient at the C-representative.
CheckResult check_reconstruction(const Semigroup& sg, const SemigroupPolynomial& poly, const Box& box) {
    const Lattice& lat = sg.description().lattice();
    auto r = check_on_box("reconstruction", box, [&](const IntTuple& a) {
        return coeff_p(sg, a) == poly.coefficient(canonicalize(lat, a).rep);
    });
    if (!r.passed) {
        const auto& a = *r.counterexample;
        r.detail = "p" + a.to_string() + " = " + coeff_p(sg, a).get_str() + " but P* coefficient at " +
                   canonicalize(lat, a).rep.to_string() + " is " + poly.coefficient(canonicalize(lat, a).rep).get_str();
    }
    return r;
}

SymmetryReport symmetry_report(const Semigroup& sg) {
    SymmetryReport rep;
    const Description& d = sg.description();
    const Lattice& lat = d.lattice();
    const std::size_t m = d.m();
    const Int top = d.top_degree();

    std::vector<IntTuple> top_maximals;
    for (const auto& a : sg.maximals_in_region().maximal)
        if (a.sum() == top) top_maximals.push_back(a);
    rep.symmetric = !top_maximals.empty();
    if (rep.symmetric) rep.sigma = top_maximals.front();

    for_each_in_region_slab(lat, top - Int(static_cast<unsigned long>(m)) + 1,
                            top - Int(static_cast<unsigned long>(m)) + 1, [&](const IntTuple& a) {
                                if (sg.member(a)) return true;
                                rep.gamma_witness = a;
                                return false;
                            });

    // Coordinate i of sigma + sum k_j eta^j is sigma_i + a_i k_i - a_{i-1} k_{i-1}.
    // Choosing k_0, k_1, ... in turn, each coordinate rules out at most one
    // value of the current k, and the last coordinate one more value of
    // k_{m-2}; so k in {-1,0,1}^{m-1} always contains a full-support translate.
    std::vector<IntTuple> found;
    for (const auto& s : top_maximals) {
        std::vector<Int> k(m - 1, Int(-1));
        while (true) {
            IntTuple cand = s + lat.combine(k);
            if (std::none_of(cand.begin(), cand.end(), [](const Int& c) { return c == 1; }) && sg.is_maximal(cand))
                found.push_back(cand);
            std::size_t i = m - 1;
            while (i-- > 0) {
                if (k[i] < 1) {
                    ++k[i];
                    break;
                }
                k[i] = -1;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    if (!found.empty()) {
        rep.canonical_full_support = true;
        rep.full_support_witness = *std::min_element(found.begin(), found.end());
    }
    return rep;
}

CheckResult check_symmetry_equations(const Semigroup& sg, const Box& box) {
    auto rep = symmetry_report(sg);
    if (!rep.symmetric) throw std::invalid_argument("check_symmetry_equations: semigroup is not symmetric");
    return check_symmetry_equations(sg, *rep.sigma, box);
}

CheckResult check_symmetry_equations(const Semigroup& sg, const IntTuple& sigma, const Box& box) {
    const std::size_t m = sg.m();
    const IntTuple one = ones(m);
    const int sign_m = sign_pow(m);
    auto r = check_on_box("symmetry-equations", box, [&](const IntTuple& a) {
        if (coeff_p(sg, a) != sign_m * coeff_p(sg, sigma - a)) return false;
        if (coeff_q(sg, a) != -sign_m * coeff_q(sg, sigma - a + one)) return false;
        for (std::size_t i = 0; i < m; ++i)
            if (sg.d_jump(a, i) + sg.d_jump(sigma - a - one + basis_vector(m, i), i) != 1) return false;
        return true;
    });
    if (!r.passed) r.detail = "functional equation fails at sigma = " + sigma.to_string();
    return r;
}

}  // namespace wsg
