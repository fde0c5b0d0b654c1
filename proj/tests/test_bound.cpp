#include <doctest.h>

#include <random>

#include "gbs/error.hpp"
#include "gbs/gf2.hpp"
#include "oracles/cochains.hpp"
#include "support.hpp"

using namespace gbs;
using gbs::test::complex;

TEST_CASE("mod-2 ranks") {
    Gf2Matrix m(3, 3);
    m.set(0, 0, true);
    m.set(1, 1, true);
    m.set(2, 0, true);
    m.set(2, 1, true);
    CHECK(m.rank() == 2);
    CHECK(m.transpose().rank() == 2);
    CHECK((m * Gf2Matrix(3, 2)).is_zero());
    CHECK(Gf2Matrix(0, 4).rank() == 0);
}

TEST_CASE("H^1 mod 2 of the standard complexes") {
    CHECK(h1_dim_mod2(complex(gbs::test::kHollowTriangle)) == 1);
    CHECK(h1_dim_mod2(complex(gbs::test::kFilledTriangle)) == 0);
    CHECK(h1_dim_mod2(complex(gbs::test::kPoint)) == 0);
    CHECK(h1_dim_mod2(complex(gbs::test::kFreeWedge)) == 2);
    CHECK(h2_dim_mod2(complex(gbs::test::kFilledTriangle)) == 0);
    // Projective plane: one vertex, one edge, a disc glued along it twice.
    const auto rp2 = complex("cell0 p\ncell1 a p p\ncell2 d a a\n");
    CHECK(h1_dim_mod2(rp2) == 1);
    CHECK(h2_dim_mod2(rp2) == 1);
}

TEST_CASE("delta") {
    CHECK(delta(complex(gbs::test::kHollowTriangle)) == 5);
    CHECK(delta(complex(gbs::test::kFilledTriangle)) == 4);
    CHECK(delta(complex(gbs::test::kPoint)) == 1);
    CHECK(delta(complex(gbs::test::kFreeWedge)) == 9);
}

TEST_CASE("accessibility bounds") {
    const auto hollow = accessibility_bounds(complex(gbs::test::kHollowTriangle), 1);
    CHECK(hollow.vertex_bound == 6);
    CHECK(hollow.edge_bound == 6);
    CHECK(hollow.total_bound == 12);
    CHECK(hollow.bf_vertex_bound == 24);
    CHECK_FALSE(hollow.beta1_is_upper_bound);

    const auto point = accessibility_bounds(complex(gbs::test::kPoint), 0);
    CHECK(point.vertex_bound == 1);
    CHECK(point.edge_bound == 0);

    const auto wedge = accessibility_bounds(complex(gbs::test::kFreeWedge), 2);
    CHECK(wedge.vertex_bound == 11);
    CHECK(wedge.edge_bound == 12);
    CHECK(wedge.total_bound == 23);

    const auto derived = accessibility_bounds_from_complex(complex(gbs::test::kFreeWedge));
    CHECK(derived.beta1_is_upper_bound);
    CHECK(derived.beta1 == 2);
    CHECK(derived.total_bound == wedge.total_bound);

    CHECK_THROWS_AS(accessibility_bounds(complex(gbs::test::kPoint), -1), GbsError);
}

TEST_CASE("H^1 agrees with cochain enumeration on random complexes") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t l0 = 1 + rng() % 6;
        const std::size_t l1 = l0 - 1 + rng() % (13 - l0 + 1);
        const std::size_t l2 = rng() % 4;
        const auto c = gbs::test::random_complex(rng, l0, l1, l2);
        REQUIRE(validate(c).empty());
        const auto h1 = h1_dim_mod2(c);
        CHECK(h1 == oracle::h1_by_enumeration(c));
        // Euler characteristic.
        CHECK(static_cast<std::int64_t>(h0_dim_mod2(c)) - static_cast<std::int64_t>(h1) +
                  static_cast<std::int64_t>(h2_dim_mod2(c)) ==
              static_cast<std::int64_t>(l0) - static_cast<std::int64_t>(l1) + static_cast<std::int64_t>(l2));
        CHECK(h0_dim_mod2(c) == 1);
    }
}

TEST_CASE("subdividing a 1-cell keeps H^1 and raises delta by one") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = gbs::test::random_complex(rng, 2 + rng() % 4, 6, rng() % 3);
        const auto before_h1 = h1_dim_mod2(c);
        const auto before_delta = delta(c);
        const std::size_t e = rng() % c.cells1.size();
        const std::size_t mid = c.cells0.size();
        c.cells0.push_back("mid");
        const std::size_t e2 = c.cells1.size();
        c.cells1.push_back("half");
        c.boundary1.emplace_back(mid, c.boundary1[e].second);
        c.boundary1[e].second = mid;
        for (auto& face : c.boundary2) {
            const auto n = std::count(face.begin(), face.end(), e);
            for (long i = 0; i < n; ++i) face.push_back(e2);
        }
        REQUIRE(validate(c).empty());
        CHECK(h1_dim_mod2(c) == before_h1);
        CHECK(delta(c) == before_delta + 1);
    }
}

TEST_CASE("complex validation and parsing") {
    // A face whose boundary is not a cycle.
    CHECK_THROWS_AS(require_valid(complex("cell0 a\ncell0 b\ncell1 x a b\ncell2 f x\n")), GbsError);
    CHECK_THROWS_AS(require_valid(complex("cell0 a\ncell0 b\n")), GbsError);
    CHECK_THROWS_AS(require_valid(ChainComplex2{}), GbsError);
    try {
        parse_complex("cell0 a\ncell1 x a b\n", "c.txt");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_complex("cell0 a\ncell0 a\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("cell3 z\n"), ParseError);
    CHECK_THROWS_AS(parse_complex("cell0 a\ncell2 f nope\n"), ParseError);
}
