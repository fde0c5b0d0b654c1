#include "gbs/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gbs/error.hpp"

namespace gbs {

std::string to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Collapse: return "collapse";
        case MoveKind::Expand: return "expand";
        case MoveKind::Subdivide: return "subdivide";
        case MoveKind::Unsubdivide: return "unsubdivide";
    }
    return "?";
}

namespace {

std::string geometric_name(const std::string& oriented) {
    return !oriented.empty() && oriented.front() == '~' ? oriented.substr(1) : oriented;
}

void require_fresh(const GbsGraph& g, const std::string& vertex, const std::string& edge) {
    if (vertex.empty() || g.find_vertex(vertex)) throw GbsError("vertex name '" + vertex + "' is empty or already in use");
    if (edge.empty() || edge.front() == '~' || g.find_edge(edge))
        throw GbsError("edge name '" + edge + "' is empty, reversed or already in use");
}

}  // namespace

std::pair<GbsGraph, MoveRecord> collapse(const GbsGraph& g, Edge e) {
    require_finite(g);
    const Vertex v = g.origin(e);
    const Vertex w = g.terminus(e);
    if (v == w)
        throw GbsError("cannot collapse '" + g.edge_name(e) + "': it is a loop (endpoints are not distinct)");
    if (!is_unit(g.label(e)))
        throw GbsError("cannot collapse '" + g.edge_name(e) + "': label at its origin is " + std::to_string(g.label(e)) +
                       ", not +-1");

    const Label factor = checked_mul(g.label(e), g.label(e.reverse()));
    MoveRecord rec;
    rec.kind = MoveKind::Collapse;
    rec.edge = g.edge_name(e);
    rec.vertex = g.vertex_name(w);
    rec.new_vertex = g.vertex_name(v);
    rec.near_label = g.label(e);
    rec.far_label = g.label(e.reverse());

    auto remap = [&](std::int32_t x) {
        if (x == v.index) x = w.index;
        return x > v.index ? x - 1 : x;
    };

    std::vector<std::string> names;
    for (Vertex u : g.vertices())
        if (u != v) names.push_back(g.vertex_name(u));

    std::vector<GeometricEdge> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (static_cast<std::int32_t>(i) == e.geometric) continue;
        GeometricEdge ge = g.geometric(static_cast<std::int32_t>(i));
        if (ge.origin == v.index) {
            const Label after = checked_mul(ge.origin_label, factor);
            rec.moved_ends.push_back(EndRelabel{ge.name, ge.origin_label, after});
            ge.origin_label = after;
        }
        if (ge.terminus == v.index) {
            const Label after = checked_mul(ge.terminus_label, factor);
            rec.moved_ends.push_back(EndRelabel{"~" + ge.name, ge.terminus_label, after});
            ge.terminus_label = after;
        }
        ge.origin = remap(ge.origin);
        ge.terminus = remap(ge.terminus);
        edges.push_back(std::move(ge));
    }
    GbsGraph out(std::move(names), std::move(edges));
    rec.source = g;
    rec.target = out;
    return {std::move(out), std::move(rec)};
}

std::pair<GbsGraph, MoveRecord> expand_signed(const GbsGraph& g, Vertex v, const std::set<Edge>& ends, Label b,
                                              Label unit, std::optional<std::string> new_vertex,
                                              std::optional<std::string> new_edge) {
    require_finite(g);
    if (b == 0) throw GbsError("expansion label b must be nonzero");
    if (!is_unit(unit)) throw GbsError("expansion label at the new vertex must be +-1");
    for (Edge f : ends) {
        if (g.origin(f) != v)
            throw GbsError("end '" + g.edge_name(f) + "' is not at vertex '" + g.vertex_name(v) + "'");
        if (g.label(f) % b != 0)
            throw GbsError("b = " + std::to_string(b) + " does not divide label " + std::to_string(g.label(f)) +
                           " of end '" + g.edge_name(f) + "'");
    }
    const std::string x = new_vertex.value_or(g.fresh_vertex_name());
    const std::string d = new_edge.value_or(g.fresh_edge_name());
    require_fresh(g, x, d);

    MoveRecord rec;
    rec.kind = MoveKind::Expand;
    rec.edge = d;
    rec.vertex = g.vertex_name(v);
    rec.new_vertex = x;
    rec.near_label = unit;
    rec.far_label = b;

    std::vector<std::string> names = g.vertex_names();
    const auto xi = static_cast<std::int32_t>(names.size());
    names.push_back(x);
    std::vector<GeometricEdge> edges = g.geometric_edges();
    const Label divisor = unit * b;
    for (Edge f : ends) {
        auto& ge = edges[static_cast<std::size_t>(f.geometric)];
        Label& l = f.reversed ? ge.terminus_label : ge.origin_label;
        const Label after = l / divisor;
        rec.moved_ends.push_back(EndRelabel{g.edge_name(f), l, after});
        l = after;
        (f.reversed ? ge.terminus : ge.origin) = xi;
    }
    edges.push_back(GeometricEdge{d, xi, v.index, unit, b});

    GbsGraph out(std::move(names), std::move(edges));
    rec.source = g;
    rec.target = out;
    return {std::move(out), std::move(rec)};
}

std::pair<GbsGraph, MoveRecord> expand(const GbsGraph& g, Vertex v, const std::set<Edge>& ends, Label b,
                                       std::optional<std::string> new_vertex, std::optional<std::string> new_edge) {
    return expand_signed(g, v, ends, b, 1, std::move(new_vertex), std::move(new_edge));
}

std::pair<GbsGraph, MoveRecord> subdivide(const GbsGraph& g, Edge e, std::optional<std::string> new_vertex,
                                          std::optional<std::string> new_edge) {
    require_finite(g);
    const std::string x = new_vertex.value_or(g.fresh_vertex_name());
    const std::string n = new_edge.value_or(g.fresh_edge_name());
    require_fresh(g, x, n);

    std::vector<std::string> names = g.vertex_names();
    const auto xi = static_cast<std::int32_t>(names.size());
    names.push_back(x);
    std::vector<GeometricEdge> edges = g.geometric_edges();
    auto& ge = edges[static_cast<std::size_t>(e.geometric)];
    GeometricEdge second{n, xi, ge.terminus, 1, ge.terminus_label};
    ge.terminus = xi;
    ge.terminus_label = 1;
    edges.push_back(std::move(second));

    MoveRecord rec;
    rec.kind = MoveKind::Subdivide;
    rec.edge = g.geometric(e.geometric).name;
    rec.new_vertex = x;
    rec.new_edge = n;
    GbsGraph out(std::move(names), std::move(edges));
    rec.source = g;
    rec.target = out;
    return {std::move(out), std::move(rec)};
}

std::pair<GbsGraph, MoveRecord> unsubdivide(const GbsGraph& g, Vertex x) {
    require_finite(g);
    const auto& ends = g.ends_at(x);
    if (ends.size() != 2 || !is_unit(g.label(ends[0])) || !is_unit(g.label(ends[1])))
        throw GbsError("cannot unsubdivide at '" + g.vertex_name(x) + "': it needs exactly two edge ends labeled +-1");
    if (ends[0].geometric == ends[1].geometric)
        throw GbsError("cannot unsubdivide at '" + g.vertex_name(x) + "': its only edge is a loop");
    const Edge c = ends[0].geometric > ends[1].geometric ? ends[0] : ends[1];
    auto result = collapse(g, c);
    result.second.kind = MoveKind::Unsubdivide;
    return result;
}

std::pair<GbsGraph, MoveRecord> apply_move(const GbsGraph& g, const MoveRecord& rec) {
    switch (rec.kind) {
        case MoveKind::Collapse: return collapse(g, g.edge(rec.edge));
        case MoveKind::Expand: {
            std::set<Edge> ends;
            for (const auto& m : rec.moved_ends) ends.insert(g.edge(m.end));
            return expand_signed(g, g.vertex(rec.vertex), ends, rec.far_label, rec.near_label, rec.new_vertex, rec.edge);
        }
        case MoveKind::Subdivide: return subdivide(g, g.edge(rec.edge), rec.new_vertex, rec.new_edge);
        case MoveKind::Unsubdivide: return unsubdivide(g, g.vertex(rec.new_vertex));
    }
    throw GbsError("unknown move kind");
}

MoveRecord inverse_move(const MoveRecord& rec) {
    MoveRecord params;
    switch (rec.kind) {
        case MoveKind::Collapse:
        case MoveKind::Unsubdivide:
            params.kind = MoveKind::Expand;
            params.vertex = rec.vertex;
            params.new_vertex = rec.new_vertex;
            params.edge = geometric_name(rec.edge);
            params.near_label = rec.near_label;
            params.far_label = rec.far_label;
            params.moved_ends = rec.moved_ends;
            break;
        case MoveKind::Expand:
            params.kind = MoveKind::Collapse;
            params.edge = rec.edge;
            break;
        case MoveKind::Subdivide:
            params.kind = MoveKind::Unsubdivide;
            params.new_vertex = rec.new_vertex;
            break;
    }
    return apply_move(rec.target, params).second;
}

std::pair<GbsGraph, std::vector<MoveRecord>> reduce_graph(const GbsGraph& g) {
    require_finite(g);
    GbsGraph cur = g;
    std::vector<MoveRecord> log;
    for (;;) {
        std::vector<std::int32_t> order(cur.edge_count());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<std::int32_t>(i);
        std::sort(order.begin(), order.end(),
                  [&](std::int32_t a, std::int32_t b) { return cur.geometric(a).name < cur.geometric(b).name; });
        std::optional<Edge> pick;
        for (auto i : order) {
            for (Edge e : {Edge{i, false}, Edge{i, true}}) {
                if (!cur.is_loop(e) && is_unit(cur.label(e))) {
                    pick = e;
                    break;
                }
            }
            if (pick) break;
        }
        if (!pick) return {std::move(cur), std::move(log)};
        auto [next, rec] = collapse(cur, *pick);
        cur = std::move(next);
        log.push_back(std::move(rec));
    }
}

std::set<Vertex> essential_vertices(const GbsGraph& g) {
    require_valid(g);
    std::set<Vertex> out;
    for (Vertex v : g.vertices()) {
        const auto& ends = g.ends_at(v);
        const bool inessential = ends.size() == 2 && is_unit(g.label(ends[0])) && is_unit(g.label(ends[1]));
        if (!inessential) out.insert(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Word transport

namespace {

GogWord transport_across_collapse(const MoveRecord& rec, const GogWord& w) {
    const GbsGraph& src = rec.source;
    const GbsGraph& dst = rec.target;
    const Vertex removed = src.vertex(rec.new_vertex);
    const auto collapsed = src.edge(rec.edge).geometric;
    const Label factor = checked_mul(rec.near_label, rec.far_label);
    auto scaled = [&](Vertex at, std::int64_t x) { return at == removed ? checked_mul(x, factor) : x; };

    GogWord out;
    out.base = w.base == removed ? dst.vertex(rec.vertex) : dst.vertex(src.vertex_name(w.base));
    out.head = scaled(w.base, w.head);
    for (const auto& s : w.syllables) {
        const std::int64_t value = scaled(src.terminus(s.edge), s.value);
        if (s.edge.geometric == collapsed) {
            auto& last = out.syllables.empty() ? out.head : out.syllables.back().value;
            last = checked_add(last, value);
        } else {
            out.syllables.push_back(Syllable{dst.edge(src.edge_name(s.edge)), value});
        }
    }
    return out;
}

GogWord transport_across_expand(const MoveRecord& rec, const GogWord& w) {
    const GbsGraph& src = rec.source;
    const GbsGraph& dst = rec.target;
    std::set<std::string> moved;
    for (const auto& m : rec.moved_ends) moved.insert(m.end);
    const Edge d = dst.edge(rec.edge);  // new vertex -> expanded vertex

    GogWord out;
    out.base = dst.vertex(src.vertex_name(w.base));
    out.head = w.head;
    for (const auto& s : w.syllables) {
        const std::string name = src.edge_name(s.edge);
        const bool origin_moved = moved.count(name) > 0;
        const bool terminus_moved = moved.count(src.edge_name(s.edge.reverse())) > 0;
        if (origin_moved) out.syllables.push_back(Syllable{d.reverse(), 0});
        if (terminus_moved) {
            out.syllables.push_back(Syllable{dst.edge(name), 0});
            out.syllables.push_back(Syllable{d, s.value});
        } else {
            out.syllables.push_back(Syllable{dst.edge(name), s.value});
        }
    }
    return out;
}

GogWord transport_across_subdivide(const MoveRecord& rec, const GogWord& w) {
    const GbsGraph& src = rec.source;
    const GbsGraph& dst = rec.target;
    const auto split = src.edge(rec.edge).geometric;
    const Edge first = dst.edge(rec.edge);
    const Edge second = dst.edge(rec.new_edge);

    GogWord out;
    out.base = dst.vertex(src.vertex_name(w.base));
    out.head = w.head;
    for (const auto& s : w.syllables) {
        if (s.edge.geometric != split) {
            out.syllables.push_back(Syllable{dst.edge(src.edge_name(s.edge)), s.value});
        } else if (!s.edge.reversed) {
            out.syllables.push_back(Syllable{first, 0});
            out.syllables.push_back(Syllable{second, s.value});
        } else {
            out.syllables.push_back(Syllable{second.reverse(), 0});
            out.syllables.push_back(Syllable{first.reverse(), s.value});
        }
    }
    return out;
}

}  // namespace

GogWord transport_word(const MoveRecord& rec, const GogWord& w) {
    require_well_formed(rec.source, w);
    GogWord out;
    switch (rec.kind) {
        case MoveKind::Collapse:
        case MoveKind::Unsubdivide: out = transport_across_collapse(rec, w); break;
        case MoveKind::Expand: out = transport_across_expand(rec, w); break;
        case MoveKind::Subdivide: out = transport_across_subdivide(rec, w); break;
    }
    require_well_formed(rec.target, out);
    return out;
}

// ---------------------------------------------------------------------------
// Move logs

std::string format_move(const MoveRecord& rec) {
    std::ostringstream out;
    out << to_string(rec.kind);
    switch (rec.kind) {
        case MoveKind::Collapse: out << ' ' << rec.edge; break;
        case MoveKind::Expand:
            out << ' ' << rec.vertex << ' ' << rec.far_label << ' ' << rec.near_label << ' ' << rec.new_vertex << ' '
                << rec.edge;
            for (const auto& m : rec.moved_ends) out << ' ' << m.end;
            break;
        case MoveKind::Subdivide: out << ' ' << rec.edge << ' ' << rec.new_vertex << ' ' << rec.new_edge; break;
        case MoveKind::Unsubdivide: out << ' ' << rec.new_vertex; break;
    }
    return out.str();
}

std::string format_move_log(const std::vector<MoveRecord>& log) {
    std::string out = "# gbs move log\n";
    for (const auto& rec : log) out += format_move(rec) + "\n";
    return out;
}

std::pair<GbsGraph, std::vector<MoveRecord>> replay(const GbsGraph& g, std::string_view log, const std::string& source) {
    GbsGraph cur = g;
    std::vector<MoveRecord> records;
    std::istringstream in{std::string(log)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        MoveRecord params;
        auto integer = [&](const std::string& t) {
            try {
                std::size_t pos = 0;
                const long long x = std::stoll(t, &pos);
                if (pos != t.size()) throw std::invalid_argument(t);
                return static_cast<Label>(x);
            } catch (const std::exception&) {
                throw ParseError(source, lineno, "expected an integer, got '" + t + "'");
            }
        };
        if (toks[0] == "collapse" && toks.size() == 2) {
            params.kind = MoveKind::Collapse;
            params.edge = toks[1];
        } else if (toks[0] == "expand" && toks.size() >= 6) {
            params.kind = MoveKind::Expand;
            params.vertex = toks[1];
            params.far_label = integer(toks[2]);
            params.near_label = integer(toks[3]);
            params.new_vertex = toks[4];
            params.edge = toks[5];
            for (std::size_t i = 6; i < toks.size(); ++i) params.moved_ends.push_back(EndRelabel{toks[i], 0, 0});
        } else if (toks[0] == "subdivide" && toks.size() == 4) {
            params.kind = MoveKind::Subdivide;
            params.edge = toks[1];
            params.new_vertex = toks[2];
            params.new_edge = toks[3];
        } else if (toks[0] == "unsubdivide" && toks.size() == 2) {
            params.kind = MoveKind::Unsubdivide;
            params.new_vertex = toks[1];
        } else {
            throw ParseError(source, lineno, "unrecognized move '" + line + "'");
        }
        try {
            auto [next, rec] = apply_move(cur, params);
            cur = std::move(next);
            records.push_back(std::move(rec));
        } catch (const ParseError&) {
            throw;
        } catch (const GbsError& err) {
            throw ParseError(source, lineno, err.what());
        }
    }
    return {std::move(cur), std::move(records)};
}

}  // namespace gbs
