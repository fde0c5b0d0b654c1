#include "gbs/tree_ball.hpp"

#include <cstdlib>
#include <limits>

#include "gbs/error.hpp"

namespace gbs {

std::size_t ball_cap_from_env() {
    const char* raw = std::getenv("GBS_BALL_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultBallCap;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == nullptr || *end != '\0' || v == 0) throw GbsError(std::string("bad GBS_BALL_CAP value '") + raw + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> TreeBall::frontier() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (is_frontier(i)) out.push_back(i);
    return out;
}

std::size_t TreeBall::valence(std::size_t i) const {
    const auto& n = node(i);
    return n.children.size() + (n.parent >= 0 ? 1 : 0);
}

std::vector<Step> TreeBall::address(std::size_t i) const {
    std::vector<Step> out;
    for (auto at = static_cast<std::int64_t>(i); nodes_.at(static_cast<std::size_t>(at)).parent >= 0;
         at = nodes_[static_cast<std::size_t>(at)].parent)
        out.push_back(nodes_[static_cast<std::size_t>(at)].step);
    return {out.rbegin(), out.rend()};
}

std::string TreeBall::address_string(std::size_t i) const {
    const auto steps = address(i);
    if (steps.empty()) return "/";
    std::string out;
    for (const auto& s : steps) out += "/" + graph_.edge_name(s.edge) + ":" + std::to_string(s.coset);
    return out;
}

std::optional<std::size_t> TreeBall::find(std::string_view address) const {
    if (address.empty() || address.front() != '/') return std::nullopt;
    std::size_t at = root();
    address.remove_prefix(1);
    while (!address.empty()) {
        const auto slash = address.find('/');
        const std::string_view part = address.substr(0, slash);
        address = slash == std::string_view::npos ? std::string_view{} : address.substr(slash + 1);
        const auto colon = part.rfind(':');
        if (colon == std::string_view::npos) return std::nullopt;
        const auto e = graph_.find_edge(part.substr(0, colon));
        if (!e) return std::nullopt;
        std::int64_t coset = 0;
        try {
            std::size_t pos = 0;
            const std::string digits(part.substr(colon + 1));
            coset = std::stoll(digits, &pos);
            if (pos != digits.size()) return std::nullopt;
        } catch (const std::exception&) {
            return std::nullopt;
        }
        const Step want{*e, coset};
        std::optional<std::size_t> next;
        for (auto c : nodes_[at].children)
            if (nodes_[c].step == want) next = c;
        if (!next) return std::nullopt;
        at = *next;
    }
    return at;
}

namespace {

// Children of a vertex over v reached through `incoming` (nullopt at the root).
template <typename F>
void for_each_child_step(const GbsGraph& g, Vertex v, std::optional<Edge> incoming, F&& f) {
    for (Edge end : g.ends_at(v)) {
        const auto slots = abs_label(g.label(end));
        const bool back = incoming && end == incoming->reverse();
        for (std::int64_t c = back ? 1 : 0; c < slots; ++c) f(Step{end, c});
    }
}

}  // namespace

std::size_t projected_ball_size(const GbsGraph& g, Vertex base, std::size_t radius) {
    require_finite(g);
    // Count vertices per (incoming oriented edge) layer by layer.
    const auto saturate = std::numeric_limits<std::size_t>::max();
    auto add = [&](std::size_t a, std::size_t b) { return a > saturate - b ? saturate : a + b; };
    auto mul = [&](std::size_t a, std::size_t b) { return (b != 0 && a > saturate / b) ? saturate : a * b; };

    const std::size_t m = g.oriented_edge_count();
    auto slot = [](Edge e) { return static_cast<std::size_t>(2 * e.geometric + (e.reversed ? 1 : 0)); };
    std::vector<std::size_t> layer(m, 0);
    std::size_t total = 1;
    if (radius == 0) return total;
    for (Edge end : g.ends_at(base)) layer[slot(end)] = add(layer[slot(end)], static_cast<std::size_t>(abs_label(g.label(end))));
    for (auto c : layer) total = add(total, c);
    for (std::size_t d = 1; d < radius; ++d) {
        std::vector<std::size_t> next(m, 0);
        for (Edge in : g.oriented_edges()) {
            const auto count = layer[slot(in)];
            if (count == 0) continue;
            for (Edge end : g.ends_at(g.terminus(in))) {
                auto slots = static_cast<std::size_t>(abs_label(g.label(end)));
                if (end == in.reverse()) slots -= 1;
                next[slot(end)] = add(next[slot(end)], mul(count, slots));
            }
        }
        layer = std::move(next);
        for (auto c : layer) total = add(total, c);
    }
    return total;
}

TreeBall expand_ball(const GbsGraph& g, Vertex base, std::int64_t radius, std::size_t cap) {
    if (radius < 0) throw GbsError("ball radius must be nonnegative, got " + std::to_string(radius));
    require_finite(g);
    if (base.index < 0 || static_cast<std::size_t>(base.index) >= g.vertex_count())
        throw GbsError("ball base is not a vertex of the graph");
    const auto r = static_cast<std::size_t>(radius);
    const std::size_t projected = projected_ball_size(g, base, r);
    if (projected > cap)
        throw GbsError("tree ball of radius " + std::to_string(r) + " would have " + std::to_string(projected) +
                       " vertices, over the cap of " + std::to_string(cap) + " (set GBS_BALL_CAP to raise it)");

    std::vector<BallNode> nodes;
    nodes.reserve(projected);
    nodes.push_back(BallNode{-1, Step{}, base, 0, {}});
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].depth == r) continue;
        const std::optional<Edge> incoming = nodes[i].parent < 0 ? std::nullopt : std::optional<Edge>(nodes[i].step.edge);
        for_each_child_step(g, nodes[i].image, incoming, [&](Step s) {
            nodes[i].children.push_back(nodes.size());
            nodes.push_back(BallNode{static_cast<std::int64_t>(i), s, g.terminus(s.edge), nodes[i].depth + 1, {}});
        });
    }
    return TreeBall(g, std::move(nodes), r);
}

ValenceMultiset interior_valences(const TreeBall& b) {
    if (b.radius() < 1) throw GbsError("interior valences need a ball of radius at least 1");
    ValenceMultiset out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b.is_frontier(i)) ++out[{b.node(i).image, b.valence(i)}];
    return out;
}

std::vector<std::size_t> inessential_tree_vertices(const TreeBall& b) {
    if (b.radius() < 1) throw GbsError("inessential vertices need a ball of radius at least 1");
    const GbsGraph& g = b.graph();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b.is_frontier(i) || b.valence(i) != 2) continue;
        // Incident tree edges lie over the ends at the image vertex.
        std::vector<Edge> incident;
        const auto& n = b.node(i);
        if (n.parent >= 0) incident.push_back(n.step.edge.reverse());
        for (auto c : n.children) incident.push_back(b.node(c).step.edge);
        bool all_units = true;
        for (Edge f : incident) all_units = all_units && is_unit(g.label(f));
        if (all_units) out.push_back(i);
    }
    return out;
}

std::string to_string(FoldType t) {
    switch (t) {
        case FoldType::IA: return "IA";
        case FoldType::IB: return "IB";
        case FoldType::IIA: return "IIA";
        case FoldType::IIB: return "IIB";
        case FoldType::IIIA: return "IIIA";
        case FoldType::IIIB: return "IIIB";
        case FoldType::Degenerate: return "degenerate";
    }
    return "?";
}

Edge quotient_edge(const TreeBall& b, TreeEdge e) {
    if (e.from >= b.size() || e.to >= b.size()) throw GbsError("tree edge endpoint outside the ball");
    const auto& to = b.node(e.to);
    const auto& from = b.node(e.from);
    if (to.parent == static_cast<std::int64_t>(e.from)) return to.step.edge;
    if (from.parent == static_cast<std::int64_t>(e.to)) return from.step.edge.reverse();
    throw GbsError("ball vertices " + b.address_string(e.from) + " and " + b.address_string(e.to) + " are not adjacent");
}

FoldType classify_fold(const TreeBall& b, TreeEdge e1, TreeEdge e2) {
    if (e1.from != e2.from)
        throw GbsError("fold edges must share an origin: " + b.address_string(e1.from) + " vs " +
                       b.address_string(e2.from));
    const Edge q1 = quotient_edge(b, e1);
    const Edge q2 = quotient_edge(b, e2);
    if (e1.to == e2.to) return FoldType::Degenerate;

    const Vertex v = b.node(e1.from).image;
    const Vertex u1 = b.node(e1.to).image;
    const Vertex u2 = b.node(e2.to).image;
    const bool type_a = v != u1 && v != u2;
    if (q1 == q2) return type_a ? FoldType::IIA : FoldType::IIB;
    if (u1 == u2) return type_a ? FoldType::IIIA : FoldType::IIIB;
    return type_a ? FoldType::IA : FoldType::IB;
}

}  // namespace gbs
