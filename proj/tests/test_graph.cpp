#include <doctest.h>

#include <algorithm>
#include <random>

#include "gbs/error.hpp"
#include "gbs/graph.hpp"
#include "support.hpp"

using namespace gbs;
using gbs::test::graph;

TEST_CASE("validate accepts well-formed graphs") {
    CHECK(validate(graph("vertex v\n")).empty());
    CHECK(validate(graph("vertex v\nedge e v v 2 3\n")).empty());
    CHECK(validate(graph("# comment\nvertex a  # trailing\nvertex b\nedge e a b 1 3\n")).empty());
}

TEST_CASE("validate names the offending element") {
    const auto zero = validate(graph("vertex v\nvertex w\nedge bad v w 0 3\n"));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].find("bad") != std::string::npos);

    const auto split = validate(graph("vertex v\nvertex w\n"));
    REQUIRE(split.size() == 1);
    CHECK(split[0].find("not connected") != std::string::npos);

    CHECK(!validate(GbsGraph({}, {})).empty());
    CHECK(!validate(GbsGraph({"v", "v"}, {})).empty());
    CHECK(!validate(GbsGraph({"v"}, {GeometricEdge{"e", 0, 3, 1, 1}})).empty());
}

TEST_CASE("reversal is a fixed-point-free involution pairing the oriented edges") {
    const auto g = graph("vertex a\nvertex b\nedge e a b 2 3\nedge f b b 1 2\n");
    const auto edges = g.oriented_edges();
    CHECK(edges.size() % 2 == 0);
    for (Edge e : edges) {
        CHECK(g.reversal(e) != e);
        CHECK(g.reversal(g.reversal(e)) == e);
        CHECK(g.origin(g.reversal(e)) == g.terminus(e));
    }
    CHECK(g.label(g.edge("~e")) == 3);
    CHECK(g.edge_name(g.edge("~e")) == "~e");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_graph("vertex v\n\nedge e v w 1 2\n", "g.txt");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("g.txt:3") == 0);
    }
    CHECK_THROWS_AS(parse_graph("vertex v\nedge e v v 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex v\nedge e v v 1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vertex v\nvertex v\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("node v\n"), ParseError);
}

TEST_CASE("is_reduced") {
    CHECK(is_reduced(gbs::test::loop_graph(1, 2)));
    CHECK_FALSE(is_reduced(graph("vertex v\nvertex w\nedge e v w 1 3\n")));
    CHECK_FALSE(is_reduced(graph("vertex v\nvertex w\nedge e v w 3 -1\n")));
    CHECK(is_reduced(make_chain(ChainSpec{{2, 2, 2}, {3, 3, 3}})));
    CHECK_THROWS_AS(is_reduced(graph("vertex v\nvertex w\n")), GbsError);
}

TEST_CASE("is_locally_finite") {
    CHECK(is_locally_finite(graph("vertex v\nedge e v v 2 3\n")));
    CHECK_FALSE(is_locally_finite(graph("vertex v\nvertex w\nedge e v w inf 3\n")));
    for (std::size_t k = 1; k <= 6; ++k) CHECK(is_locally_finite(make_chain(regular_five_chain(k))));
    CHECK(validate(graph("vertex v\nvertex w\nedge e v w inf 3\n")).empty());
}

TEST_CASE("first_betti_number") {
    CHECK(first_betti_number(make_chain(ChainSpec{{2, 2}, {3, 3}})) == 0);
    CHECK(first_betti_number(graph("vertex v\nedge e v v 1 1\n")) == 1);
    // Oracle: E - V + 1 counted from the declarations, 3 - 2 + 1.
    CHECK(first_betti_number(graph("vertex a\nvertex b\nedge x a b 1 1\nedge y a b 2 2\nedge z b a 3 1\n")) == 2);
    CHECK_THROWS_AS(first_betti_number(graph("vertex a\nvertex b\n")), GbsError);
}

TEST_CASE("format and parse round trip") {
    const auto g = graph("vertex a\nvertex b\nedge e a b -2 3\nedge f b b 1 inf\n");
    CHECK(parse_graph(format_graph(g)) == g);
}

namespace {

GbsGraph relabeled(const GbsGraph& g, std::mt19937_64& rng) {
    std::vector<std::int32_t> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<std::int32_t>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(g.vertex_count());
    for (Vertex v : g.vertices()) names[static_cast<std::size_t>(perm[static_cast<std::size_t>(v.index)])] = "n" + std::to_string(rng() % 1000) + "_" + std::to_string(v.index);
    std::vector<GeometricEdge> edges;
    for (const auto& ge : g.geometric_edges()) {
        GeometricEdge out{"x" + ge.name, perm[static_cast<std::size_t>(ge.origin)], perm[static_cast<std::size_t>(ge.terminus)],
                          ge.origin_label, ge.terminus_label};
        if (rng() & 1u) {
            std::swap(out.origin, out.terminus);
            std::swap(out.origin_label, out.terminus_label);
        }
        edges.push_back(out);
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    return GbsGraph(std::move(names), std::move(edges));
}

}  // namespace

TEST_CASE("is_reduced and isomorphism are invariant under relabeling") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const auto g = gbs::test::random_graph(rng, n, n - 1 + rng() % 3, {1, -1, 2, 3, -2, 6});
        REQUIRE(validate(g).empty());
        const auto h = relabeled(g, rng);
        CHECK(is_reduced(g) == is_reduced(h));
        CHECK(isomorphic(g, h));
        CHECK(first_betti_number(g) == first_betti_number(h));
    }
}

TEST_CASE("isomorphism distinguishes labels and incidence") {
    const auto a = graph("vertex u\nvertex v\nedge e u v 2 3\n");
    CHECK(isomorphic(a, graph("vertex p\nvertex q\nedge z q p 3 2\n")));
    CHECK(isomorphic(a, graph("vertex p\nvertex q\nedge z p q 3 2\n")));
    CHECK_FALSE(isomorphic(a, graph("vertex p\nvertex q\nedge z p q 2 -3\n")));
    CHECK_FALSE(isomorphic(graph("vertex u\nedge e u u 2 3\nedge f u u 2 3\n"),
                           graph("vertex u\nedge e u u 2 3\nedge f u u 3 3\n")));
    CHECK_FALSE(isomorphic(graph("vertex a\nvertex b\nvertex c\nedge x a b 2 2\nedge y b c 3 3\n"),
                           graph("vertex a\nvertex b\nvertex c\nedge x a b 2 3\nedge y b c 2 3\n")));
}
