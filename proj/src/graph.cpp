#include "gbs/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "gbs/error.hpp"

namespace gbs {

Label abs_label(Label l) {
    if (l == kInfiniteIndex) return l;
    return l < 0 ? -l : l;
}

GbsGraph::GbsGraph(std::vector<std::string> vertex_names, std::vector<GeometricEdge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)), ends_(vertex_names_.size()) {
    const auto n = static_cast<std::int32_t>(vertex_names_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& ge = edges_[i];
        const auto gi = static_cast<std::int32_t>(i);
        if (ge.origin >= 0 && ge.origin < n) ends_[static_cast<std::size_t>(ge.origin)].push_back(Edge{gi, false});
        if (ge.terminus >= 0 && ge.terminus < n) ends_[static_cast<std::size_t>(ge.terminus)].push_back(Edge{gi, true});
    }
}

std::vector<Vertex> GbsGraph::vertices() const {
    std::vector<Vertex> out(vertex_names_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = Vertex{static_cast<std::int32_t>(i)};
    return out;
}

std::vector<Edge> GbsGraph::oriented_edges() const {
    std::vector<Edge> out;
    out.reserve(2 * edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        out.push_back(Edge{static_cast<std::int32_t>(i), false});
        out.push_back(Edge{static_cast<std::int32_t>(i), true});
    }
    return out;
}

Vertex GbsGraph::origin(Edge e) const {
    const auto& ge = geometric(e.geometric);
    return Vertex{e.reversed ? ge.terminus : ge.origin};
}

Label GbsGraph::label(Edge e) const {
    const auto& ge = geometric(e.geometric);
    return e.reversed ? ge.terminus_label : ge.origin_label;
}

std::string GbsGraph::edge_name(Edge e) const {
    const auto& name = geometric(e.geometric).name;
    return e.reversed ? "~" + name : name;
}

std::optional<Vertex> GbsGraph::find_vertex(std::string_view name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i)
        if (vertex_names_[i] == name) return Vertex{static_cast<std::int32_t>(i)};
    return std::nullopt;
}

std::optional<Edge> GbsGraph::find_edge(std::string_view name) const {
    bool reversed = false;
    if (!name.empty() && name.front() == '~') {
        reversed = true;
        name.remove_prefix(1);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return Edge{static_cast<std::int32_t>(i), reversed};
    return std::nullopt;
}

Vertex GbsGraph::vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw GbsError("unknown vertex '" + std::string(name) + "'");
}

Edge GbsGraph::edge(std::string_view name) const {
    if (auto e = find_edge(name)) return *e;
    throw GbsError("unknown edge '" + std::string(name) + "'");
}

Label GbsGraph::valence(Vertex v) const {
    Label sum = 0;
    for (Edge f : ends_at(v)) {
        const Label l = label(f);
        if (l == kInfiniteIndex) return kInfiniteIndex;
        sum = checked_add(sum, abs_label(l));
    }
    return sum;
}

std::string GbsGraph::fresh_vertex_name(std::string_view prefix) const {
    for (std::size_t i = 0;; ++i) {
        std::string candidate = std::string(prefix) + std::to_string(i);
        if (!find_vertex(candidate)) return candidate;
    }
}

std::string GbsGraph::fresh_edge_name(std::string_view prefix) const {
    for (std::size_t i = 0;; ++i) {
        std::string candidate = std::string(prefix) + std::to_string(i);
        if (!find_edge(candidate)) return candidate;
    }
}

bool operator==(const GbsGraph& a, const GbsGraph& b) {
    if (a.vertex_names_ != b.vertex_names_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (std::tie(x.name, x.origin, x.terminus, x.origin_label, x.terminus_label) !=
            std::tie(y.name, y.origin, y.terminus, y.origin_label, y.terminus_label))
            return false;
    }
    return true;
}

namespace {

bool connected_unchecked(const GbsGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<std::int32_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (Edge f : g.ends_at(Vertex{v})) {
            const auto w = g.terminus(f).index;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

}  // namespace

std::vector<std::string> validate(const GbsGraph& g) {
    std::vector<std::string> out;
    if (g.vertex_count() == 0) out.emplace_back("graph has no vertices");

    std::set<std::string> names;
    for (const auto& name : g.vertex_names()) {
        if (name.empty()) out.emplace_back("vertex with empty name");
        if (!names.insert(name).second) out.push_back("duplicate vertex '" + name + "'");
    }

    const auto n = static_cast<std::int32_t>(g.vertex_count());
    bool endpoints_ok = true;
    std::set<std::string> edge_names;
    for (const auto& ge : g.geometric_edges()) {
        if (ge.name.empty() || ge.name.front() == '~') out.push_back("edge '" + ge.name + "' has an invalid name");
        if (!edge_names.insert(ge.name).second) out.push_back("duplicate edge '" + ge.name + "'");
        if (ge.origin < 0 || ge.origin >= n || ge.terminus < 0 || ge.terminus >= n) {
            out.push_back("edge '" + ge.name + "' has an endpoint outside the vertex set");
            endpoints_ok = false;
        }
        if (ge.origin_label == 0) out.push_back("edge '" + ge.name + "' has label 0 at its origin end");
        if (ge.terminus_label == 0) out.push_back("edge '" + ge.name + "' has label 0 at its terminus end");
    }

    if (endpoints_ok && n > 0 && !connected_unchecked(g)) out.emplace_back("graph is not connected");
    return out;
}

void require_valid(const GbsGraph& g) {
    const auto violations = validate(g);
    if (violations.empty()) return;
    std::string msg = "invalid graph:";
    for (const auto& v : violations) msg += " " + v + ";";
    msg.pop_back();
    throw GbsError(msg);
}

void require_finite(const GbsGraph& g) {
    require_valid(g);
    for (const auto& ge : g.geometric_edges())
        if (ge.origin_label == kInfiniteIndex || ge.terminus_label == kInfiniteIndex)
            throw GbsError("edge '" + ge.name + "' has an infinite-index label; operation needs finite labels");
}

bool is_connected(const GbsGraph& g) {
    for (const auto& ge : g.geometric_edges()) {
        const auto n = static_cast<std::int32_t>(g.vertex_count());
        if (ge.origin < 0 || ge.origin >= n || ge.terminus < 0 || ge.terminus >= n) return false;
    }
    return connected_unchecked(g);
}

bool is_reduced(const GbsGraph& g) {
    require_valid(g);
    for (Edge e : g.oriented_edges())
        if (!g.is_loop(e) && is_unit(g.label(e))) return false;
    return true;
}

bool is_locally_finite(const GbsGraph& g) {
    for (const auto& ge : g.geometric_edges())
        if (ge.origin_label == kInfiniteIndex || ge.terminus_label == kInfiniteIndex || ge.origin_label == 0 ||
            ge.terminus_label == 0)
            return false;
    return true;
}

std::size_t first_betti_number(const GbsGraph& g) {
    if (!is_connected(g)) throw GbsError("first Betti number needs a connected graph");
    return g.edge_count() + 1 - g.vertex_count();
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

using EdgeKey = std::tuple<std::int32_t, std::int32_t, Label, Label>;

EdgeKey normalized(std::int32_t o, std::int32_t t, Label lo, Label lt) {
    return std::min(EdgeKey{o, t, lo, lt}, EdgeKey{t, o, lt, lo});
}

std::vector<EdgeKey> mapped_edges(const GbsGraph& g, const std::vector<std::int32_t>& phi) {
    std::vector<EdgeKey> out;
    out.reserve(g.edge_count());
    for (const auto& ge : g.geometric_edges())
        out.push_back(normalized(phi[static_cast<std::size_t>(ge.origin)], phi[static_cast<std::size_t>(ge.terminus)],
                                 ge.origin_label, ge.terminus_label));
    std::sort(out.begin(), out.end());
    return out;
}

// Per-vertex invariant: sorted list of (label here, label there, is loop).
using Signature = std::vector<std::tuple<Label, Label, bool>>;

Signature signature(const GbsGraph& g, Vertex v) {
    Signature s;
    for (Edge f : g.ends_at(v)) s.emplace_back(g.label(f), g.label(f.reverse()), g.is_loop(f));
    std::sort(s.begin(), s.end());
    return s;
}

struct IsoSearch {
    const GbsGraph& a;
    const GbsGraph& b;
    std::vector<Signature> sig_a, sig_b;
    std::vector<EdgeKey> target;
    std::vector<std::int32_t> phi;
    std::vector<char> used;

    bool extend(std::size_t i) {
        if (i == a.vertex_count()) return mapped_edges(a, phi) == target;
        for (std::size_t j = 0; j < b.vertex_count(); ++j) {
            if (used[j] || sig_a[i] != sig_b[j]) continue;
            // Edges among already-mapped vertices must already agree in count.
            if (!partial_ok(i, j)) continue;
            used[j] = 1;
            phi[i] = static_cast<std::int32_t>(j);
            if (extend(i + 1)) return true;
            used[j] = 0;
        }
        phi[i] = -1;
        return false;
    }

    bool partial_ok(std::size_t i, std::size_t j) {
        // Compare labeled edges between vertex i and mapped vertices k <= i.
        std::vector<EdgeKey> lhs, rhs;
        const auto vi = static_cast<std::int32_t>(i);
        for (Edge f : a.ends_at(Vertex{vi})) {
            const auto t = a.terminus(f).index;
            if (t != vi && phi[static_cast<std::size_t>(t)] < 0) continue;
            const auto mapped_t = t == vi ? static_cast<std::int32_t>(j) : phi[static_cast<std::size_t>(t)];
            lhs.emplace_back(static_cast<std::int32_t>(j), mapped_t, a.label(f), a.label(f.reverse()));
        }
        const auto vj = static_cast<std::int32_t>(j);
        for (Edge f : b.ends_at(Vertex{vj})) {
            const auto t = b.terminus(f).index;
            if (t != vj && !used[static_cast<std::size_t>(t)]) continue;
            rhs.emplace_back(vj, t, b.label(f), b.label(f.reverse()));
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        return lhs == rhs;
    }
};

}  // namespace

bool isomorphic(const GbsGraph& a, const GbsGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    // Fast path: the name-preserving bijection.
    {
        std::vector<std::int32_t> phi(a.vertex_count(), -1);
        bool all_found = true;
        for (Vertex v : a.vertices()) {
            auto w = b.find_vertex(a.vertex_name(v));
            if (!w) {
                all_found = false;
                break;
            }
            phi[static_cast<std::size_t>(v.index)] = w->index;
        }
        if (all_found) {
            std::vector<std::int32_t> id(b.vertex_count());
            std::iota(id.begin(), id.end(), 0);
            if (mapped_edges(a, phi) == mapped_edges(b, id)) return true;
        }
    }

    IsoSearch s{a, b, {}, {}, {}, std::vector<std::int32_t>(a.vertex_count(), -1), std::vector<char>(b.vertex_count(), 0)};
    for (Vertex v : a.vertices()) s.sig_a.push_back(signature(a, v));
    for (Vertex v : b.vertices()) s.sig_b.push_back(signature(b, v));
    {
        auto sa = s.sig_a, sb = s.sig_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::int32_t> id(b.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    s.target = mapped_edges(b, id);
    return s.extend(0);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

Label parse_label(const std::string& tok, const std::string& source, std::size_t line) {
    if (tok == "inf") return kInfiniteIndex;
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source, line, "bad label '" + tok + "'");
    }
}

std::string format_label(Label l) { return l == kInfiniteIndex ? "inf" : std::to_string(l); }

}  // namespace

GbsGraph parse_graph(std::string_view text, const std::string& source) {
    std::vector<std::string> vertices;
    std::map<std::string, std::int32_t, std::less<>> index;
    std::vector<GeometricEdge> edges;

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto toks = tokens_of(line);
        if (toks.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (toks[0] == "vertex") {
            if (toks.size() != 2) throw ParseError(source, lineno, "expected 'vertex <name>'");
            if (index.count(toks[1])) throw ParseError(source, lineno, "duplicate vertex '" + toks[1] + "'");
            index.emplace(toks[1], static_cast<std::int32_t>(vertices.size()));
            vertices.push_back(toks[1]);
        } else if (toks[0] == "edge") {
            if (toks.size() != 6)
                throw ParseError(source, lineno,
                                 "expected 'edge <name> <origin> <terminus> <label_at_origin> <label_at_terminus>'");
            auto lookup = [&](const std::string& name) {
                auto it = index.find(name);
                if (it == index.end()) throw ParseError(source, lineno, "unknown vertex '" + name + "'");
                return it->second;
            };
            if (toks[1].front() == '~') throw ParseError(source, lineno, "edge names may not start with '~'");
            for (const auto& e : edges)
                if (e.name == toks[1]) throw ParseError(source, lineno, "duplicate edge '" + toks[1] + "'");
            edges.push_back(GeometricEdge{toks[1], lookup(toks[2]), lookup(toks[3]), parse_label(toks[4], source, lineno),
                                          parse_label(toks[5], source, lineno)});
        } else {
            throw ParseError(source, lineno, "unknown declaration '" + toks[0] + "'");
        }
        if (end == text.size()) break;
    }
    return GbsGraph(std::move(vertices), std::move(edges));
}

GbsGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GbsError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), path);
}

std::string format_graph(const GbsGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertex_names()) out << "vertex " << v << '\n';
    for (const auto& e : g.geometric_edges())
        out << "edge " << e.name << ' ' << g.vertex_names().at(static_cast<std::size_t>(e.origin)) << ' '
            << g.vertex_names().at(static_cast<std::size_t>(e.terminus)) << ' ' << format_label(e.origin_label) << ' '
            << format_label(e.terminus_label) << '\n';
    return out.str();
}

}  // namespace gbs
