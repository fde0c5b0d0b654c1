#pragma once

// Elementary moves on GBS graphs: collapse, expansion, subdivision and its
// inverse. Each move returns the new graph together with a MoveRecord holding
// the move's parameters, its source and target graphs, and enough label data
// to build the inverse move.

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/words.hpp"

namespace gbs {

enum class MoveKind { Collapse, Expand, Subdivide, Unsubdivide };

std::string to_string(MoveKind k);

/// An edge end that moved to a new vertex, with its label before and after.
struct EndRelabel {
    std::string end;  // oriented edge name, "e" or "~e"
    Label before = 0;
    Label after = 0;
};

struct MoveRecord {
    MoveKind kind = MoveKind::Collapse;

    // Collapse / Unsubdivide: the collapsed oriented edge; its origin is removed.
    // Expand: the new oriented edge, running from the new vertex to `vertex`.
    // Subdivide: the subdivided geometric edge (keeps the origin-side half).
    std::string edge;
    // Collapse / Unsubdivide: the absorbing vertex. Expand: the vertex expanded at.
    std::string vertex;
    // Collapse / Unsubdivide: the removed vertex. Expand / Subdivide: the new vertex.
    std::string new_vertex;
    // Subdivide: name of the terminus-side half.
    std::string new_edge;

    // Collapse: label(e), label(~e). Expand: label at the new vertex (+-1), b.
    Label near_label = 1;
    Label far_label = 1;

    std::vector<EndRelabel> moved_ends;

    GbsGraph source;
    GbsGraph target;
};

/// Merges origin(e) into terminus(e). Requires origin != terminus and label(e) = +-1.
std::pair<GbsGraph, MoveRecord> collapse(const GbsGraph& g, Edge e);

/// New vertex x and edge d: x -> v labeled (1 at x, b at v); ends in `ends`
/// move to x with label(f) / b. Names default to fresh ones.
std::pair<GbsGraph, MoveRecord> expand(const GbsGraph& g, Vertex v, const std::set<Edge>& ends, Label b,
                                       std::optional<std::string> new_vertex = std::nullopt,
                                       std::optional<std::string> new_edge = std::nullopt);

/// Same as expand but with label `unit` (+-1) at the new vertex; the general
/// inverse of a collapse along an edge labeled -1.
std::pair<GbsGraph, MoveRecord> expand_signed(const GbsGraph& g, Vertex v, const std::set<Edge>& ends, Label b,
                                              Label unit, std::optional<std::string> new_vertex,
                                              std::optional<std::string> new_edge);

/// Edge (a, b) becomes (a, 1) and (1, b) through a new valence-2 vertex.
std::pair<GbsGraph, MoveRecord> subdivide(const GbsGraph& g, Edge e,
                                          std::optional<std::string> new_vertex = std::nullopt,
                                          std::optional<std::string> new_edge = std::nullopt);

/// Removes a vertex with exactly two ends, both labeled +-1, joining its edges.
std::pair<GbsGraph, MoveRecord> unsubdivide(const GbsGraph& g, Vertex x);

/// Re-executes a recorded move on g (looked up by names).
std::pair<GbsGraph, MoveRecord> apply_move(const GbsGraph& g, const MoveRecord& rec);

/// A move that, applied to rec.target, gives a graph isomorphic to rec.source.
MoveRecord inverse_move(const MoveRecord& rec);

/// Collapses eligible edges, lowest edge name first, until reduced.
std::pair<GbsGraph, std::vector<MoveRecord>> reduce_graph(const GbsGraph& g);

/// Vertices other than those with exactly two ends, both labeled +-1.
std::set<Vertex> essential_vertices(const GbsGraph& g);

/// Image of w (a word on rec.source) under the induced isomorphism of fundamental groups.
GogWord transport_word(const MoveRecord& rec, const GogWord& w);

/// One line per move; `replay` reads it back.
std::string format_move(const MoveRecord& rec);
std::string format_move_log(const std::vector<MoveRecord>& log);
/// Applies each logged move in turn; returns the final graph and the re-derived records.
std::pair<GbsGraph, std::vector<MoveRecord>> replay(const GbsGraph& g, std::string_view log,
                                                    const std::string& source = "<log>");

}  // namespace gbs
