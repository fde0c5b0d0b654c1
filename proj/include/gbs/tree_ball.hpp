#pragma once

// Finite balls in the Bass-Serre tree of a GBS graph of groups.
//
// A tree vertex is addressed by its path from the root: a sequence of steps
// (edge end f, coset c) with 0 <= c < |label(f)|. Leaving a vertex reached by
// step (e, c), slot 0 of reversal(e) is the edge back to the parent and is not
// a child. Coset indices are canonical representatives; the ball realizes the
// valences and orbit structure of the tree, not the full group action.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

inline constexpr std::size_t kDefaultBallCap = 1'000'000;

/// GBS_BALL_CAP from the environment, else kDefaultBallCap.
std::size_t ball_cap_from_env();

struct Step {
    Edge edge;
    std::int64_t coset = 0;
    auto operator<=>(const Step&) const = default;
};

struct BallNode {
    std::int64_t parent = -1;  // -1 for the root
    Step step;                 // step from the parent (unused for the root)
    Vertex image;              // quotient vertex
    std::size_t depth = 0;
    std::vector<std::size_t> children;
};

class TreeBall {
public:
    TreeBall(GbsGraph graph, std::vector<BallNode> nodes, std::size_t radius)
        : graph_(std::move(graph)), nodes_(std::move(nodes)), radius_(radius) {}

    const GbsGraph& graph() const { return graph_; }
    std::size_t radius() const { return radius_; }
    std::size_t size() const { return nodes_.size(); }
    const BallNode& node(std::size_t i) const { return nodes_.at(i); }
    static constexpr std::size_t root() { return 0; }

    bool is_frontier(std::size_t i) const { return node(i).depth == radius_; }
    std::vector<std::size_t> frontier() const;
    /// Neighbors present in the ball (exact valence for non-frontier vertices).
    std::size_t valence(std::size_t i) const;

    std::vector<Step> address(std::size_t i) const;
    /// "/" for the root, otherwise "/<edge>:<coset>/..." from the root.
    std::string address_string(std::size_t i) const;
    std::optional<std::size_t> find(std::string_view address) const;

private:
    GbsGraph graph_;
    std::vector<BallNode> nodes_;
    std::size_t radius_;
};

/// Exact vertex count of the radius-r ball, computed without building it.
std::size_t projected_ball_size(const GbsGraph& g, Vertex base, std::size_t radius);

/// Throws GbsError for negative radius or when the ball would exceed `cap` vertices.
TreeBall expand_ball(const GbsGraph& g, Vertex base, std::int64_t radius, std::size_t cap = kDefaultBallCap);

/// (quotient vertex, valence) -> count over non-frontier vertices.
using ValenceMultiset = std::map<std::pair<Vertex, std::size_t>, std::size_t>;
ValenceMultiset interior_valences(const TreeBall& b);

/// Interior vertices of valence 2 whose two incident edges come from ends labeled +-1.
std::vector<std::size_t> inessential_tree_vertices(const TreeBall& b);

/// A tree edge from one ball vertex to an adjacent one.
struct TreeEdge {
    std::size_t from = 0;
    std::size_t to = 0;
};

enum class FoldType { IA, IB, IIA, IIB, IIIA, IIIB, Degenerate };
std::string to_string(FoldType t);

/// The oriented quotient edge a tree edge lies over.
Edge quotient_edge(const TreeBall& b, TreeEdge e);

/// Bestvina-Feighn fold type of identifying e1 and e2, which share an origin.
FoldType classify_fold(const TreeBall& b, TreeEdge e1, TreeEdge e2);

}  // namespace gbs
