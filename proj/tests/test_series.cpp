#include <doctest.h>

#include "hermitian_q3_points.hpp"
#include "oracle.hpp"
#include "wsg/backends.hpp"
#include "wsg/series.hpp"
#include "wsg/verify.hpp"

using namespace wsg;

namespace {

const Semigroup& herm3() {
    static const Semigroup sg(hermitian_description(3));
    return sg;
}

const Semigroup& genus0(std::size_t m) {
    static const Semigroup g2(genus0_description(2)), g3(genus0_description(3)), g4(genus0_description(4));
    return m == 2 ? g2 : m == 3 ? g3 : g4;
}

oracle::Ell g0_ell(std::size_t m) {
    return [m](const IntTuple& a) { return genus0_ell(m, a); };
}

}  // namespace

TEST_CASE("coefficient examples") {
    CHECK(coeff_d(herm3(), IntTuple{2, 2}) == 1);
    CHECK(coeff_d(herm3(), IntTuple{-3, 1}) == 0);
    CHECK(coeff_d(genus0(3), IntTuple{1, 1, 1}) == 3);

    CHECK(coeff_q(genus0(3), IntTuple{0, 0, 0}) == 1);
    CHECK(coeff_q(herm3(), IntTuple{-9, -9}) == 0);
    CHECK(coeff_q(herm3(), IntTuple{0, 0}) == 1);

    CHECK(coeff_p(herm3(), IntTuple{2, 2}) == 1);
    CHECK(coeff_p(genus0(3), IntTuple{0, 0, 1}) == -1);
    CHECK(coeff_p(herm3(), IntTuple{1, 1}) == 0);
    for (std::size_t i = 0; i < 3; ++i) CHECK(coeff_p(genus0(3), IntTuple{0, 0, 1}, i) == -1);
    CHECK_THROWS_AS(coeff_p(herm3(), IntTuple{0, 0}, 2), std::out_of_range);
}

TEST_CASE("coefficients agree with the oracle") {
    for (std::size_t m : {2u, 3u}) {
        auto ell = g0_ell(m);
        Box::cube(m, -3, 3).for_each([&](const IntTuple& a) {
            CHECK(coeff_d(genus0(m), a) == oracle::d(ell, a));
            CHECK(coeff_q(genus0(m), a) == oracle::q(ell, a));
            for (std::size_t i = 0; i < m; ++i) CHECK(coeff_p(genus0(m), a, i) == oracle::p(ell, a, i));
        });
    }
    oracle::Ell ell = [](const IntTuple& a) { return hermitian_ell(3, a); };
    Box::cube(2, -6, 9).for_each([&](const IntTuple& a) {
        CHECK(coeff_q(herm3(), a) == oracle::q(ell, a));
        CHECK(coeff_p(herm3(), a) == oracle::p(ell, a));
        CHECK(coeff_p(herm3(), a, 1) == oracle::p(ell, a, 1));
    });
}

TEST_CASE("d lies in [0, m] and d_i obeys the exchange relation") {
    for (std::size_t m : {2u, 3u}) {
        const Semigroup& sg = m == 2 ? herm3() : genus0(3);
        Box::cube(m, -3, 5).for_each([&](const IntTuple& b) {
            Int d = coeff_d(sg, b);
            CHECK(d >= 0);
            CHECK(d <= Int(static_cast<long>(m)));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (i == j) continue;
                    CHECK(sg.d_jump(b, i) - sg.d_jump(b - basis_vector(m, j), i) ==
                          sg.d_jump(b, j) - sg.d_jump(b - basis_vector(m, i), j));
                }
        });
    }
}

TEST_CASE("d_i chain is monotone while coordinates are restored") {
    const Semigroup& sg = genus0(3);
    Box::cube(3, -2, 3).for_each([&](const IntTuple& a) {
        for (std::size_t i = 0; i < 3; ++i) {
            IntTuple cur = a - ones(3) + basis_vector(3, i);
            int prev = sg.d_jump(cur, i);
            for (std::size_t j = 0; j < 3; ++j) {
                if (j == i) continue;
                cur[j] += 1;
                int next = sg.d_jump(cur, i);
                CHECK(prev <= next);
                prev = next;
            }
            CHECK(cur == a);
        }
    });
}

TEST_CASE("series on boxes") {
    Box fig = Box::parse("-8..9,-8..10");
    BoxSeries p = series_on_box(herm3(), SeriesKind::P, fig);
    std::vector<IntTuple> support;
    for (const auto& [a, c] : p.support()) {
        CHECK(c == 1);
        support.push_back(a);
    }
    std::vector<IntTuple> circles;
    for (auto [x, y] : fixtures::kHermitianQ3Maximal) circles.push_back(IntTuple{x, y});
    std::sort(circles.begin(), circles.end());
    CHECK(support == circles);

    BoxSeries l = series_on_box(herm3(), SeriesKind::L, Box(IntTuple{-5, -5}, IntTuple{-3, 1}));
    CHECK(l.support().empty());

    BoxSeries g = series_on_box(genus0(2), SeriesKind::P, Box::cube(2, -2, 2));
    for (const auto& [a, c] : g.support()) {
        CHECK(a.sum() == 0);
        CHECK(c == 1);
    }
    CHECK(g.support().size() == 5);

    BoxSeries g3 = series_on_box(genus0(3), SeriesKind::P, Box::cube(3, -2, 2));
    for (const auto& [a, c] : g3.support()) {
        CHECK(a.sum() >= 0);
        CHECK(a.sum() <= 1);
        CHECK(c == coeff_p(genus0(3), a));
    }
}

TEST_CASE("BoxSeries JSON") {
    BoxSeries s = series_on_box(herm3(), SeriesKind::P, Box::parse("0..2,0..2"));
    const std::string text = s.to_json();
    CHECK(text == R"({"box":{"lower":[0,0],"upper":[2,2]},"kind":"P","coeffs":[[[0,0],1],[[2,2],1]]})");
    BoxSeries back = BoxSeries::from_json(text);
    CHECK(back.kind() == SeriesKind::P);
    CHECK(back.dense() == s.dense());
    CHECK_THROWS_AS(parse_series_kind("X"), std::invalid_argument);
}

TEST_CASE("QP equation") {
    CHECK(check_QP_equation(herm3(), Box::cube(2, -6, 6)).passed);
    CHECK(check_QP_equation(genus0(3), Box::cube(3, -4, 4)).passed);
    auto single = check_QP_equation(herm3(), Box::cube(2, 0, 0));
    CHECK(single.passed);
    CHECK(single.points_checked == 1);
}

TEST_CASE("semigroup polynomial") {
    auto h = semigroup_polynomial(herm3());
    CHECK(h.terms.size() == 4);
    for (const auto& [a, c] : h.terms) CHECK(c == 1);
    CHECK(h.to_string() == "1 + t1*t2^5 + t1^2*t2^2 + t1^3*t2^-1");

    auto g3 = semigroup_polynomial(genus0(3));
    CHECK(g3.to_string() == "1 - t3");
    CHECK(g3.coefficient(IntTuple{0, 0, 1}) == -1);

    auto g2 = semigroup_polynomial(genus0(2));
    CHECK(g2.to_string() == "1");
    CHECK(g2.to_json() == R"({"terms":[[[0,0],1]]})");
}

TEST_CASE("reconstruction from the semigroup polynomial") {
    CHECK(check_reconstruction(herm3(), Box::parse("-8..9,-8..10")).passed);
    CHECK(check_reconstruction(genus0(3), Box::cube(3, -3, 3)).passed);
    CHECK(check_reconstruction(herm3(), Box::cube(2, 0, 0)).passed);

    SemigroupPolynomial wrong = semigroup_polynomial(herm3());
    wrong.terms.erase(IntTuple{2, 2});
    auto r = check_reconstruction(herm3(), wrong, Box::parse("-8..9,-8..10"));
    CHECK(!r.passed);
    REQUIRE(r.counterexample);
    CHECK(canonicalize(herm3().description().lattice(), *r.counterexample).rep == IntTuple{2, 2});
}

TEST_CASE("symmetry report") {
    auto h = symmetry_report(herm3());
    CHECK(h.symmetric);
    CHECK(h.sigma == IntTuple{1, 5});
    REQUIRE(h.gamma_witness);
    CHECK(h.gamma_witness == IntTuple{0, 5});
    CHECK(h.gamma_witness->sum() == 5);
    CHECK(!herm3().member(*h.gamma_witness));
    CHECK(!herm3().member(IntTuple{5, 0}));
    CHECK(h.canonical_full_support);
    CHECK(h.full_support_witness == IntTuple{-3, 9});

    auto g3 = symmetry_report(genus0(3));
    CHECK(g3.symmetric);
    CHECK(g3.sigma == IntTuple{0, 0, 1});
    CHECK(g3.canonical_full_support);
    REQUIRE(g3.full_support_witness);
    CHECK(g3.full_support_witness == IntTuple{-1, 0, 2});
    CHECK(genus0(3).is_maximal(*g3.full_support_witness));
    for (const auto& c : *g3.full_support_witness) CHECK(c != 1);

    auto g2 = symmetry_report(genus0(2));
    CHECK(g2.symmetric);
    CHECK(g2.sigma == IntTuple{0, 0});
    CHECK(g2.full_support_witness == IntTuple{0, 0});
}

TEST_CASE("symmetry report on a non-symmetric description") {
    // all maximal elements have degree 0, short of 2g-2+m = 2
    Description d(1, Lattice(std::vector<Int>{1}), {IntTuple{0, 0}}, "period-1 genus 1");
    const Semigroup sg(d);
    auto r = symmetry_report(sg);
    CHECK(!r.symmetric);
    CHECK(!r.sigma);
    CHECK_THROWS_AS(check_symmetry_equations(sg, Box::cube(2, -1, 1)), std::invalid_argument);
}

TEST_CASE("symmetry equations") {
    CHECK(check_symmetry_equations(herm3(), Box::parse("-6..8,-6..8")).passed);
    CHECK(check_symmetry_equations(genus0(3), Box::cube(3, -3, 3)).passed);
    auto at_sigma = check_symmetry_equations(genus0(3), Box(IntTuple{0, 0, 1}, IntTuple{0, 0, 1}));
    CHECK(at_sigma.passed);
    CHECK(coeff_p(genus0(3), IntTuple{0, 0, 1}) == -coeff_p(genus0(3), IntTuple{0, 0, 0}));

    auto bad = check_symmetry_equations(herm3(), IntTuple{2, 2}, Box::cube(2, -3, 3));
    CHECK(!bad.passed);
}

TEST_CASE("support law and two-point specialization") {
    Box::cube(2, -8, 10).for_each([&](const IntTuple& a) {
        Int p = coeff_p(herm3(), a);
        CHECK(p == (herm3().is_maximal(a) ? 1 : 0));
    });
    Box::cube(3, -2, 3).for_each([&](const IntTuple& a) {
        Int p = coeff_p(genus0(3), a);
        if (!genus0(3).is_maximal(a)) CHECK(p == 0);
        if (genus0(3).is_absolute_maximal(a)) CHECK(p == 1);
    });
}

TEST_CASE("periodicity of p") {
    const Semigroup& sg = genus0(3);
    Box::cube(3, -2, 2).for_each([&](const IntTuple& a) {
        for (const auto& eta : sg.description().lattice().generators()) CHECK(coeff_p(sg, a) == coeff_p(sg, a + eta));
    });
    Box::cube(2, -8, 8).for_each([&](const IntTuple& a) {
        CHECK(coeff_p(herm3(), a) == coeff_p(herm3(), a + IntTuple{4, -4}));
    });
}

TEST_CASE("verification suite") {
    auto h = run_verification(herm3(), Box::parse("-8..9,-8..10"));
    CHECK(all_passed(h));
    CHECK(h.size() == 10);
    CHECK(report_text(h).find("FAIL") == std::string::npos);

    auto g = run_verification(genus0(4), Box::cube(4, -2, 2));
    CHECK(all_passed(g));

    Description broken(3, Lattice(std::vector<Int>{4}), {IntTuple{0, 0}, IntTuple{1, 5}, IntTuple{3, -1}});
    const Semigroup sg(broken);
    auto b = run_verification(sg, Box::cube(2, -3, 3));
    CHECK(!all_passed(b));
    CHECK(!b.front().passed);
    CHECK(b.front().name == "description");
    CHECK(report_json(b).find("\"passed\":false") != std::string::npos);
}

TEST_CASE("check_on_box reports the lexicographically first failure") {
    auto r = check_on_box("demo", Box::cube(2, -3, 3), [](const IntTuple& a) { return a.sum() < 2; });
    CHECK(!r.passed);
    CHECK(r.counterexample == IntTuple{-1, 3});
    CHECK(r.points_checked == 49);
}
