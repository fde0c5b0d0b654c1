#pragma once

// Graphs of groups with infinite cyclic vertex and edge groups (GBS graphs).
//
// A geometric edge is stored once, with a chosen orientation origin -> terminus
// and one label per end. Oriented edges are (geometric index, reversed flag);
// reversal flips the flag, so the involution is fixed-point free by construction.
// label(e) is the multiplier of the edge group inclusion into the vertex group
// at origin(e).

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gbs {

using Label = std::int64_t;

/// Reserved label for an edge group of infinite index in its vertex group.
/// GBS inclusions never produce it; it exists so local finiteness is checkable.
inline constexpr Label kInfiniteIndex = std::numeric_limits<Label>::min();

inline bool is_unit(Label l) { return l == 1 || l == -1; }
Label abs_label(Label l);

struct Vertex {
    std::int32_t index = -1;
    auto operator<=>(const Vertex&) const = default;
};

struct Edge {
    std::int32_t geometric = -1;
    bool reversed = false;

    Edge reverse() const { return Edge{geometric, !reversed}; }
    auto operator<=>(const Edge&) const = default;
};

struct GeometricEdge {
    std::string name;
    std::int32_t origin = -1;
    std::int32_t terminus = -1;
    Label origin_label = 1;
    Label terminus_label = 1;
};

class GbsGraph {
public:
    GbsGraph() = default;
    /// Accepts anything; use validate() to find out whether it is a GBS graph.
    GbsGraph(std::vector<std::string> vertex_names, std::vector<GeometricEdge> edges);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }  // geometric edges
    std::size_t oriented_edge_count() const { return 2 * edges_.size(); }

    std::vector<Vertex> vertices() const;
    /// Every oriented edge, forward before reversed, in storage order.
    std::vector<Edge> oriented_edges() const;
    /// Oriented edges whose origin is v (the edge ends at v).
    const std::vector<Edge>& ends_at(Vertex v) const { return ends_[static_cast<std::size_t>(v.index)]; }

    Vertex origin(Edge e) const;
    Vertex terminus(Edge e) const { return origin(e.reverse()); }
    Label label(Edge e) const;
    Edge reversal(Edge e) const { return e.reverse(); }
    bool is_loop(Edge e) const { return origin(e) == terminus(e); }

    const std::string& vertex_name(Vertex v) const { return vertex_names_.at(static_cast<std::size_t>(v.index)); }
    /// "name" for the stored orientation, "~name" for its reversal.
    std::string edge_name(Edge e) const;
    const GeometricEdge& geometric(std::int32_t index) const { return edges_.at(static_cast<std::size_t>(index)); }
    const std::vector<GeometricEdge>& geometric_edges() const { return edges_; }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }

    std::optional<Vertex> find_vertex(std::string_view name) const;
    /// Accepts "name" or "~name".
    std::optional<Edge> find_edge(std::string_view name) const;
    Vertex vertex(std::string_view name) const;  // throws GbsError if absent
    Edge edge(std::string_view name) const;      // throws GbsError if absent

    /// Sum of |label| over the edge ends at v: the valence of any lift of v.
    Label valence(Vertex v) const;

    /// A vertex or edge name not yet used, of the form prefix + number.
    std::string fresh_vertex_name(std::string_view prefix = "x") const;
    std::string fresh_edge_name(std::string_view prefix = "d") const;

    friend bool operator==(const GbsGraph& a, const GbsGraph& b);

private:
    std::vector<std::string> vertex_names_;
    std::vector<GeometricEdge> edges_;
    std::vector<std::vector<Edge>> ends_;
};

/// Empty iff g is a GBS graph; otherwise one description per violation.
std::vector<std::string> validate(const GbsGraph& g);
/// Throws GbsError listing the violations when g is not valid.
void require_valid(const GbsGraph& g);
/// Valid and every label finite (the operations that do label arithmetic need this).
void require_finite(const GbsGraph& g);

bool is_connected(const GbsGraph& g);
bool is_reduced(const GbsGraph& g);
bool is_locally_finite(const GbsGraph& g);
/// |geometric edges| - |vertices| + 1 of the quotient graph.
std::size_t first_betti_number(const GbsGraph& g);

/// Labeled-graph isomorphism: bijections of vertices and geometric edges that
/// respect incidence and labels (an edge may be matched with either orientation).
bool isomorphic(const GbsGraph& a, const GbsGraph& b);

/// Text format: `vertex <name>` / `edge <name> <origin> <terminus> <l0> <l1>`.
GbsGraph parse_graph(std::string_view text, const std::string& source = "<input>");
GbsGraph read_graph_file(const std::string& path);
std::string format_graph(const GbsGraph& g);

}  // namespace gbs
