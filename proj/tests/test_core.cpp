#include <doctest.h>

#include <random>
#include <set>

#include "wsg/backends.hpp"
#include "wsg/description.hpp"
#include "wsg/int_tuple.hpp"
#include "wsg/lattice.hpp"

using namespace wsg;

TEST_CASE("floor and ceil division round toward the correct side") {
    CHECK(floor_div(Int(7), Int(2)) == 3);
    CHECK(floor_div(Int(-7), Int(2)) == -4);
    CHECK(ceil_div(Int(7), Int(2)) == 4);
    CHECK(ceil_div(Int(-7), Int(2)) == -3);
    CHECK(floor_div(Int(-8), Int(4)) == -2);
    CHECK(ceil_div(Int(-8), Int(4)) == -2);
}

TEST_CASE("parse_int") {
    CHECK(parse_int("-42") == -42);
    CHECK(parse_int("123456789012345678901234567890").get_str() == "123456789012345678901234567890");
    CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
}

TEST_CASE("IntTuple arithmetic and orders") {
    IntTuple a{1, -2, 3};
    IntTuple b{0, 5, -1};
    CHECK(a + b == IntTuple{1, 3, 2});
    CHECK(a - b == IntTuple{1, -7, 4});
    CHECK(-a == IntTuple{-1, 2, -3});
    CHECK(Int(3) * a == IntTuple{3, -6, 9});
    CHECK(a.sum() == 2);
    CHECK(b < a);
    CHECK(!leq(b, a));
    CHECK(leq(IntTuple{0, -3, 1}, a));
    CHECK(a.to_string() == "(1,-2,3)");
}

TEST_CASE("unit_tuple") {
    CHECK(unit_tuple(3, {0, 2}) == IntTuple{1, 0, 1});
    CHECK(unit_tuple(2, {}) == IntTuple{0, 0});
    CHECK(unit_tuple(4, {0, 1, 2, 3}) == IntTuple{1, 1, 1, 1});
    CHECK(unit_tuple(4, {0, 1, 2, 3}) == ones(4));
    CHECK(unit_tuple(3, {1}) == basis_vector(3, 1));
    CHECK_THROWS_AS(unit_tuple(3, {3}), std::out_of_range);
}

TEST_CASE("lub") {
    CHECK(lub({IntTuple{1, 5}, IntTuple{3, -1}}) == IntTuple{3, 5});
    CHECK(lub({IntTuple{0, 0, 0}}) == IntTuple{0, 0, 0});
    CHECK(lub({IntTuple{4, -4}, IntTuple{-1, 3}, IntTuple{2, 2}}) == IntTuple{4, 3});
    CHECK_THROWS(lub({}));
    CHECK_THROWS(lub({IntTuple{1}, IntTuple{1, 2}}));
}

TEST_CASE("lub is idempotent, commutative and associative") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coord(-20, 20);
    auto random_tuple = [&] { return IntTuple{coord(rng), coord(rng), coord(rng)}; };
    for (int n = 0; n < 500; ++n) {
        IntTuple a = random_tuple(), b = random_tuple(), c = random_tuple();
        CHECK(lub({a, a}) == a);
        CHECK(lub({a, b}) == lub({b, a}));
        CHECK(lub({lub({a, b}), c}) == lub({a, lub({b, c})}));
        CHECK(lub({a, b, c}) == lub({a, lub({b, c})}));
    }
}

TEST_CASE("parse_tuple") {
    CHECK(parse_tuple("3,-1") == IntTuple{3, -1});
    CHECK(parse_tuple("(3, -1)") == IntTuple{3, -1});
    CHECK(parse_tuple("0") == IntTuple{0});
    CHECK_THROWS(parse_tuple("3,,1"));
    CHECK_THROWS(parse_tuple("a,b"));
}

TEST_CASE("Box indexing is lexicographic") {
    Box box(IntTuple{-1, 2}, IntTuple{1, 4});
    CHECK(box.point_count() == 9);
    CHECK(box.point_at(0) == IntTuple{-1, 2});
    CHECK(box.point_at(1) == IntTuple{-1, 3});
    CHECK(box.point_at(3) == IntTuple{0, 2});
    CHECK(box.point_at(8) == IntTuple{1, 4});
    std::vector<IntTuple> seen;
    box.for_each([&](const IntTuple& a) { seen.push_back(a); });
    REQUIRE(seen.size() == 9);
    for (std::size_t i = 0; i < seen.size(); ++i) {
        CHECK(box.index_of(seen[i]) == i);
        CHECK(box.point_at(i) == seen[i]);
        if (i) CHECK(seen[i - 1] < seen[i]);
    }
    CHECK(box.contains(IntTuple{0, 3}));
    CHECK(!box.contains(IntTuple{2, 3}));
    CHECK_THROWS(Box(IntTuple{1, 0}, IntTuple{0, 0}));
}

TEST_CASE("Box parsing") {
    Box box = Box::parse("-8..9,-8..10");
    CHECK(box.lower() == IntTuple{-8, -8});
    CHECK(box.upper() == IntTuple{9, 10});
    CHECK(box.point_count() == 18 * 19);
    CHECK(box.to_string() == "-8..9,-8..10");
    CHECK(Box::cube(3, -2, 2).point_count() == 125);
    CHECK_THROWS(Box::parse("1..0"));
    CHECK_THROWS(Box::parse("1-3"));
}

TEST_CASE("Lattice generators have the expected shape") {
    Lattice lat(std::vector<Int>{2, 3});
    CHECK(lat.m() == 3);
    CHECK(lat.generator(0) == IntTuple{2, -2, 0});
    CHECK(lat.generator(1) == IntTuple{0, 3, -3});
    for (const auto& eta : lat.generators()) CHECK(eta.sum() == 0);
    CHECK(Lattice::from_generators({IntTuple{2, -2, 0}, IntTuple{0, 3, -3}}) == lat);
    CHECK_THROWS_AS(Lattice::from_generators({IntTuple{2, -1, 0}, IntTuple{0, 3, -3}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::from_generators({IntTuple{0, 3, -3}, IntTuple{2, -2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(std::vector<Int>{0}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice(std::vector<Int>{}), std::invalid_argument);
}

TEST_CASE("canonicalize examples") {
    Lattice herm(std::vector<Int>{4});
    auto c = canonicalize(herm, IntTuple{5, 1});
    CHECK(c.rep == IntTuple{1, 5});
    CHECK(c.coeffs == std::vector<Int>{1});

    Lattice g0(std::vector<Int>{1, 1});
    auto z = canonicalize(g0, IntTuple{0, 0, 0});
    CHECK(z.rep == IntTuple{0, 0, 0});
    CHECK(z.coeffs == std::vector<Int>{0, 0});

    auto e = canonicalize(g0, IntTuple{2, -1, 0});
    CHECK(e.rep == IntTuple{0, 0, 1});
    CHECK(e.coeffs == std::vector<Int>{2, 1});
}

TEST_CASE("canonicalize round trip and translation") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coord(-50, 50);
    for (auto periods : {std::vector<Int>{4}, std::vector<Int>{2, 3}, std::vector<Int>{1, 5, 2}}) {
        Lattice lat(periods);
        const std::size_t m = lat.m();
        for (int n = 0; n < 300; ++n) {
            IntTuple a(m);
            for (std::size_t i = 0; i < m; ++i) a[i] = coord(rng);
            auto c = canonicalize(lat, a);
            CHECK(lat.in_region(c.rep));
            CHECK(c.rep + lat.combine(c.coeffs) == a);
            for (std::size_t i = 0; i + 1 < m; ++i) {
                auto t = canonicalize(lat, a + lat.generator(i));
                CHECK(t.rep == c.rep);
                auto expected = c.coeffs;
                expected[i] += 1;
                CHECK(t.coeffs == expected);
            }
        }
    }
}

TEST_CASE("Description structural checks") {
    Lattice lat(std::vector<Int>{4});
    CHECK_NOTHROW(Description(3, lat, {IntTuple{0, 0}, IntTuple{1, 5}}));
    CHECK_THROWS_AS(Description(3, lat, {IntTuple{1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Description(3, lat, {IntTuple{0, 0}, IntTuple{5, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Description(3, lat, {IntTuple{0, 0}, IntTuple{1, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(Description(3, lat, {IntTuple{0, 0}, IntTuple{1, -2}}), std::invalid_argument);
    CHECK_THROWS_AS(Description(3, lat, {IntTuple{0, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Description(-1, lat, {IntTuple{0, 0}}), std::invalid_argument);

    Description d(3, lat, {IntTuple{2, 2}, IntTuple{0, 0}, IntTuple{2, 2}});
    CHECK(d.gamma_fundamental() == std::vector<IntTuple>{IntTuple{0, 0}, IntTuple{2, 2}});
    CHECK(d.top_degree() == 6);
}

TEST_CASE("Description JSON") {
    const std::string fixture =
        R"j({"m":2,"genus":3,"lattice_generators":[[4,-4]],"gamma_fundamental":[[0,0],[1,5],[2,2],[3,-1]],"label":"hermitian q=3 (Qinf,P00)"})j";
    Description d = description_from_json_string(fixture);
    CHECK(d.genus() == 3);
    CHECK(d.lattice().period(0) == 4);
    CHECK(d.gamma_fundamental().size() == 4);
    CHECK(to_json_string(d) == fixture);
    CHECK(description_from_json_string(to_json_string(d, 2)) == d);
    CHECK(load_description(WSG_DATA_DIR "/hermitian_q3.json") == d);

    Description g0 = genus0_description(4);
    CHECK(description_from_json_string(to_json_string(g0)) == g0);

    CHECK_THROWS_AS(description_from_json_string(R"({"m":2,"genus":3})"), std::invalid_argument);
    CHECK_THROWS_AS(description_from_json_string(
                        R"({"m":3,"genus":3,"lattice_generators":[[4,-4]],"gamma_fundamental":[[0,0]],"label":""})"),
                    std::invalid_argument);
    CHECK_THROWS(description_from_json_string("not json"));
    CHECK_THROWS_AS(load_description("/nonexistent/file.json"), std::runtime_error);
}

TEST_CASE("Description JSON carries integers beyond 64 bits as strings") {
    const std::string big = "100000000000000000000000";
    Description d(0, Lattice(std::vector<Int>{Int(big, 10)}), {IntTuple{0, 0}});
    std::string text = to_json_string(d);
    CHECK(text.find("\"" + big + "\"") != std::string::npos);
    CHECK(description_from_json_string(text) == d);
}

TEST_CASE("validate_description on built-in families") {
    CHECK(validate_description(hermitian_description(3)).empty());
    CHECK(validate_description(hermitian_description(2)).empty());
    CHECK(validate_description(genus0_description(2)).empty());
    CHECK(validate_description(genus0_description(3)).empty());
    CHECK(validate_description(genus0_description(4)).empty());
}

TEST_CASE("validate_description detects a removed absolute maximal element") {
    Lattice lat(std::vector<Int>{4});
    Description broken(3, lat, {IntTuple{0, 0}, IntTuple{1, 5}, IntTuple{3, -1}});
    auto v = validate_description(broken);
    REQUIRE(!v.empty());
    std::set<Violation::Kind> kinds;
    for (const auto& x : v) kinds.insert(x.kind);
    CHECK((kinds.count(Violation::Kind::RiemannRoch) || kinds.count(Violation::Kind::MissingAbsoluteMaximal)));
}

TEST_CASE("validate_description detects a spurious element") {
    Lattice lat(std::vector<Int>{4});
    Description broken(3, lat, {IntTuple{0, 0}, IntTuple{1, 5}, IntTuple{2, 2}, IntTuple{3, -1}, IntTuple{1, 1}});
    auto v = validate_description(broken);
    REQUIRE(!v.empty());
}
