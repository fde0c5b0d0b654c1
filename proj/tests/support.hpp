#pragma once

// Shared fixtures and seeded generators for the test suites.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gbs/bound.hpp"
#include "gbs/chain_family.hpp"
#include "gbs/graph.hpp"
#include "gbs/words.hpp"

namespace gbs::test {

inline GbsGraph graph(std::string_view text) { return parse_graph(text, "<test>"); }

/// One vertex v with a loop e labeled (origin, terminus).
inline GbsGraph loop_graph(Label origin, Label terminus) {
    return GbsGraph({"v"}, {GeometricEdge{"e", 0, 0, origin, terminus}});
}

inline GogWord word(const GbsGraph& g, std::string_view text) { return parse_word(g, text, "<test>"); }

/// Shapes with at most two geometric edges, labels filled in by the caller.
struct Shape {
    std::size_t vertices;
    std::vector<std::pair<int, int>> edges;
};

inline const std::vector<Shape>& shapes_up_to_two_edges() {
    static const std::vector<Shape> shapes{
        {1, {}},
        {1, {{0, 0}}},
        {2, {{0, 1}}},
        {1, {{0, 0}, {0, 0}}},
        {2, {{0, 0}, {0, 1}}},
        {2, {{0, 1}, {0, 1}}},
        {3, {{0, 1}, {1, 2}}},
    };
    return shapes;
}

inline GbsGraph realize(const Shape& s, const std::vector<Label>& labels) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s.vertices; ++i) names.push_back("v" + std::to_string(i));
    std::vector<GeometricEdge> edges;
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        edges.push_back(GeometricEdge{"e" + std::to_string(i), s.edges[i].first, s.edges[i].second, labels[2 * i],
                                      labels[2 * i + 1]});
    return GbsGraph(std::move(names), std::move(edges));
}

/// Calls f on every labeling of every shape with labels drawn from `alphabet`.
inline void for_each_labeled_graph(const std::vector<Shape>& shapes, const std::vector<Label>& alphabet,
                                   const std::function<void(const GbsGraph&)>& f) {
    for (const auto& s : shapes) {
        const std::size_t ends = 2 * s.edges.size();
        std::vector<std::size_t> digits(ends, 0);
        for (;;) {
            std::vector<Label> labels(ends);
            for (std::size_t i = 0; i < ends; ++i) labels[i] = alphabet[digits[i]];
            f(realize(s, labels));
            std::size_t i = 0;
            while (i < ends && ++digits[i] == alphabet.size()) digits[i++] = 0;
            if (i == ends) break;
        }
    }
}

/// Every closed edge path of length <= max_len at base.
inline std::vector<std::vector<Edge>> closed_paths(const GbsGraph& g, Vertex base, std::size_t max_len) {
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> path;
    std::function<void(Vertex)> dfs = [&](Vertex at) {
        if (at == base) out.push_back(path);
        if (path.size() == max_len) return;
        for (Edge f : g.ends_at(at)) {
            path.push_back(f);
            dfs(g.terminus(f));
            path.pop_back();
        }
    };
    dfs(base);
    return out;
}

/// Every word on the given path with syllables drawn from `values`.
inline void for_each_word_on(const Vertex base, const std::vector<Edge>& path, const std::vector<std::int64_t>& values,
                             const std::function<void(const GogWord&)>& f) {
    const std::size_t slots = path.size() + 1;
    std::vector<std::size_t> digits(slots, 0);
    for (;;) {
        GogWord w{base, values[digits[0]], {}};
        for (std::size_t i = 0; i < path.size(); ++i) w.syllables.push_back(Syllable{path[i], values[digits[i + 1]]});
        f(w);
        std::size_t i = 0;
        while (i < slots && ++digits[i] == values.size()) digits[i++] = 0;
        if (i == slots) break;
    }
}

/// Random closed word with at most max_len edges: a short random walk closed
/// up along a shortest path back to the base.
inline GogWord random_word(const GbsGraph& g, std::mt19937_64& rng, std::size_t max_len, std::int64_t max_value) {
    std::uniform_int_distribution<std::int64_t> value(-max_value, max_value);
    const auto vs = g.vertices();
    for (;;) {
        const Vertex base = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        std::vector<Edge> path;
        Vertex at = base;
        const std::size_t walk = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
        for (std::size_t i = 0; i < walk; ++i) {
            const auto& ends = g.ends_at(at);
            if (ends.empty()) break;
            const Edge f = ends[std::uniform_int_distribution<std::size_t>(0, ends.size() - 1)(rng)];
            path.push_back(f);
            at = g.terminus(f);
        }
        // BFS back to base.
        std::vector<std::int64_t> prev(g.vertex_count(), -2);
        std::vector<Edge> via(g.vertex_count());
        std::vector<Vertex> queue{at};
        prev[static_cast<std::size_t>(at.index)] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (Edge f : g.ends_at(queue[qi])) {
                const auto t = static_cast<std::size_t>(g.terminus(f).index);
                if (prev[t] != -2) continue;
                prev[t] = queue[qi].index;
                via[t] = f;
                queue.push_back(g.terminus(f));
            }
        std::vector<Edge> back;
        for (Vertex x = base; x != at; x = g.origin(via[static_cast<std::size_t>(x.index)]))
            back.push_back(via[static_cast<std::size_t>(x.index)]);
        path.insert(path.end(), back.rbegin(), back.rend());
        if (path.size() > max_len) continue;
        GogWord w{base, value(rng), {}};
        for (Edge f : path) w.syllables.push_back(Syllable{f, value(rng)});
        return w;
    }
}

/// Random connected graph with n vertices and m >= n-1 geometric edges.
inline GbsGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t m, const std::vector<Label>& labels) {
    auto pick_label = [&] { return labels[std::uniform_int_distribution<std::size_t>(0, labels.size() - 1)(rng)]; };
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<GeometricEdge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const auto parent = static_cast<std::int32_t>(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng));
        edges.push_back(GeometricEdge{"e" + std::to_string(edges.size()), parent, static_cast<std::int32_t>(i),
                                      pick_label(), pick_label()});
    }
    while (edges.size() < m) {
        const auto a = static_cast<std::int32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        const auto b = static_cast<std::int32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        edges.push_back(GeometricEdge{"e" + std::to_string(edges.size()), a, b, pick_label(), pick_label()});
    }
    return GbsGraph(std::move(names), std::move(edges));
}

/// Random connected cell complex whose 2-cells bound cycles (so d^2 = 0).
inline ChainComplex2 random_complex(std::mt19937_64& rng, std::size_t l0, std::size_t l1, std::size_t l2) {
    ChainComplex2 c;
    for (std::size_t i = 0; i < l0; ++i) c.cells0.push_back("p" + std::to_string(i));
    std::vector<std::size_t> parent_edge(l0, 0), parent(l0, 0), depth(l0, 0);
    for (std::size_t i = 1; i < l0 && c.cells1.size() < l1; ++i) {
        parent[i] = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        depth[i] = depth[parent[i]] + 1;
        parent_edge[i] = c.cells1.size();
        c.boundary1.emplace_back(parent[i], i);
        c.cells1.push_back("a" + std::to_string(c.cells1.size()));
    }
    std::vector<std::vector<std::size_t>> cycles;
    while (c.cells1.size() < l1) {
        const std::size_t a = std::uniform_int_distribution<std::size_t>(0, l0 - 1)(rng);
        const std::size_t b = std::uniform_int_distribution<std::size_t>(0, l0 - 1)(rng);
        // The new edge plus the tree path from b to a is a cycle.
        std::vector<std::size_t> cyc{c.cells1.size()};
        std::size_t x = a, y = b;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                cyc.push_back(parent_edge[x]);
                x = parent[x];
            } else {
                cyc.push_back(parent_edge[y]);
                y = parent[y];
            }
        }
        c.boundary1.emplace_back(a, b);
        c.cells1.push_back("a" + std::to_string(c.cells1.size()));
        cycles.push_back(std::move(cyc));
    }
    for (std::size_t f = 0; f < l2; ++f) {
        std::vector<std::size_t> face;
        for (const auto& cyc : cycles)
            if (rng() & 1u) face.insert(face.end(), cyc.begin(), cyc.end());
        // Cancelling pairs exercise the mod-2 reduction of repeated 1-cells.
        if (!c.cells1.empty() && (rng() & 1u)) {
            const std::size_t e = std::uniform_int_distribution<std::size_t>(0, c.cells1.size() - 1)(rng);
            face.push_back(e);
            face.push_back(e);
        }
        c.cells2.push_back("f" + std::to_string(f));
        c.boundary2.push_back(std::move(face));
    }
    return c;
}

inline ChainComplex2 complex(std::string_view text) { return parse_complex(text, "<test>"); }

inline const char* kHollowTriangle = "cell0 a\ncell0 b\ncell0 c\ncell1 ab a b\ncell1 bc b c\ncell1 ca c a\n";
inline const char* kFilledTriangle =
    "cell0 a\ncell0 b\ncell0 c\ncell1 ab a b\ncell1 bc b c\ncell1 ca c a\ncell2 t ab bc ca\n";
inline const char* kPoint = "cell0 p\n";
inline const char* kFreeWedge =
    "cell0 o\ncell0 a\ncell0 b\ncell0 c\ncell0 d\n"
    "cell1 oa o a\ncell1 ab a b\ncell1 bo b o\n"
    "cell1 oc o c\ncell1 cd c d\ncell1 do d o\n";

}  // namespace gbs::test
