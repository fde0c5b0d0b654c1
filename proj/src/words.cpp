#include "gbs/words.hpp"

#include <sstream>

#include "gbs/error.hpp"

namespace gbs {

namespace {

std::int64_t& value_before(GogWord& w, std::size_t j) { return j == 0 ? w.head : w.syllables[j - 1].value; }

// Pinch at syllable j: e_j = syllables[j].edge, e_{j+1} = reversal(e_j), and the
// exponent between them is a multiple of label(~e_j).
bool pinch_at(const GbsGraph& g, const GogWord& w, std::size_t j) {
    if (j + 1 >= w.syllables.size()) return false;
    const Edge e = w.syllables[j].edge;
    if (w.syllables[j + 1].edge != e.reverse()) return false;
    return w.syllables[j].value % g.label(e.reverse()) == 0;
}

void remove_pinch(const GbsGraph& g, GogWord& w, std::size_t j) {
    const Edge e = w.syllables[j].edge;
    const std::int64_t c = w.syllables[j].value / g.label(e.reverse());
    auto& before = value_before(w, j);
    before = checked_add(checked_add(before, checked_mul(g.label(e), c)), w.syllables[j + 1].value);
    w.syllables.erase(w.syllables.begin() + static_cast<std::ptrdiff_t>(j),
                      w.syllables.begin() + static_cast<std::ptrdiff_t>(j) + 2);
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
    const std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

void require_well_formed(const GbsGraph& g, const GogWord& w) {
    if (w.base.index < 0 || static_cast<std::size_t>(w.base.index) >= g.vertex_count())
        throw GbsError("word base is not a vertex of the graph");
    Vertex at = w.base;
    for (std::size_t i = 0; i < w.syllables.size(); ++i) {
        const Edge e = w.syllables[i].edge;
        if (e.geometric < 0 || static_cast<std::size_t>(e.geometric) >= g.edge_count())
            throw GbsError("word syllable " + std::to_string(i + 1) + " names an edge outside the graph");
        if (g.origin(e) != at) {
            throw GbsError("malformed word: edge " + std::to_string(i + 1) + " (" + g.edge_name(e) + ") starts at " +
                           g.vertex_name(g.origin(e)) + " but the path is at " + g.vertex_name(at));
        }
        at = g.terminus(e);
    }
    if (at != w.base)
        throw GbsError("malformed word: path ends at " + g.vertex_name(at) + ", not at base " + g.vertex_name(w.base));
}

bool has_pinch(const GbsGraph& g, const GogWord& w) {
    for (std::size_t j = 0; j + 1 < w.syllables.size(); ++j)
        if (pinch_at(g, w, j)) return true;
    return false;
}

GogWord reduce_word(const GbsGraph& g, const GogWord& w) {
    require_well_formed(g, w);
    GogWord out = w;
    std::size_t j = 0;
    while (j + 1 < out.syllables.size()) {
        if (pinch_at(g, out, j)) {
            remove_pinch(g, out, j);
            // Removing a pinch can only create a new one just to its left.
            j = j == 0 ? 0 : j - 1;
        } else {
            ++j;
        }
    }
    return out;
}

GogWord reduce_word(const GbsGraph& g, const GogWord& w, const PinchChooser& choose) {
    require_well_formed(g, w);
    GogWord out = w;
    std::vector<std::size_t> candidates;
    for (;;) {
        candidates.clear();
        for (std::size_t j = 0; j + 1 < out.syllables.size(); ++j)
            if (pinch_at(g, out, j)) candidates.push_back(j);
        if (candidates.empty()) return out;
        const std::size_t pick = choose(candidates);
        remove_pinch(g, out, candidates.at(pick));
    }
}

GogWord normal_form(const GbsGraph& g, const GogWord& w) {
    GogWord out = reduce_word(g, w);
    for (std::size_t i = 0; i < out.syllables.size(); ++i) {
        const Edge e = out.syllables[i].edge;
        const Label l = g.label(e);
        auto& v = value_before(out, i);
        const std::int64_t r = floor_mod(v, abs_label(l));
        const std::int64_t q = (v - r) / l;
        v = r;
        // a^{lq} e = e a^{label(~e) q}
        out.syllables[i].value = checked_add(out.syllables[i].value, checked_mul(g.label(e.reverse()), q));
    }
    return out;
}

bool same_element(const GbsGraph& g, const GogWord& a, const GogWord& b) {
    if (a.base != b.base) throw GbsError("words at different base vertices are not comparable");
    return normal_form(g, a) == normal_form(g, b);
}

GogWord multiply(const GbsGraph& g, const GogWord& a, const GogWord& b) {
    require_well_formed(g, a);
    require_well_formed(g, b);
    if (a.base != b.base) throw GbsError("cannot multiply words at different base vertices");
    GogWord out = a;
    auto& last = out.syllables.empty() ? out.head : out.syllables.back().value;
    last = checked_add(last, b.head);
    out.syllables.insert(out.syllables.end(), b.syllables.begin(), b.syllables.end());
    return out;
}

GogWord inverse(const GogWord& w) {
    GogWord out;
    out.base = w.base;
    const std::size_t n = w.syllables.size();
    out.head = n == 0 ? -w.head : -w.syllables.back().value;
    for (std::size_t i = n; i-- > 0;) {
        const std::int64_t before = i == 0 ? w.head : w.syllables[i - 1].value;
        out.syllables.push_back(Syllable{w.syllables[i].edge.reverse(), -before});
    }
    return out;
}

GogWord power(const GbsGraph& g, const GogWord& w, unsigned n) {
    GogWord out{w.base, 0, {}};
    for (unsigned i = 0; i < n; ++i) out = multiply(g, out, w);
    return out;
}

GogWord rotate(const GbsGraph& g, const GogWord& w, std::size_t k) {
    require_well_formed(g, w);
    const std::size_t n = w.syllables.size();
    if (n == 0) return w;
    if (k >= n) throw GbsError("rotation index out of range");
    // c_0 = g_0 + g_n, c_i = g_i
    auto cyc = [&](std::size_t i) {
        return i == 0 ? checked_add(w.head, w.syllables.back().value) : w.syllables[i - 1].value;
    };
    GogWord out;
    out.base = g.origin(w.syllables[k].edge);
    out.head = cyc(k);
    for (std::size_t j = k + 1; j <= n; ++j) out.syllables.push_back(Syllable{w.syllables[j - 1].edge, cyc(j % n)});
    for (std::size_t j = 1; j <= k; ++j) out.syllables.push_back(Syllable{w.syllables[j - 1].edge, j == k ? 0 : cyc(j)});
    if (k > 0) return out;
    // k == 0: the wrap syllable ends up in the head, the tail closes with 0.
    out.syllables.back().value = 0;
    return out;
}

GogWord cyclic_reduce(const GbsGraph& g, const GogWord& w) {
    GogWord cur = reduce_word(g, w);
    if (cur.syllables.empty()) return cur;
    cur = rotate(g, cur, 0);
    // cur = h e1 g1 ... e_{n-1} g_{n-1} e_n 0, interior already pinch-free.
    while (cur.syllables.size() >= 2) {
        const Edge first = cur.syllables.front().edge;
        const Edge last = cur.syllables.back().edge;
        if (last != first.reverse() || cur.head % g.label(first) != 0) break;
        const std::int64_t c = cur.head / g.label(first);
        const std::int64_t absorbed = checked_mul(g.label(first.reverse()), c);
        const std::size_t n = cur.syllables.size();
        GogWord next;
        next.base = g.terminus(first);
        if (n == 2) {
            next.head = checked_add(cur.syllables[0].value, absorbed);
        } else {
            next.head = checked_add(checked_add(cur.syllables[n - 2].value, absorbed), cur.syllables[0].value);
            for (std::size_t j = 1; j + 1 < n; ++j) next.syllables.push_back(cur.syllables[j]);
            next.syllables.back().value = 0;
        }
        cur = std::move(next);
    }
    return cur;
}

std::size_t translation_length(const GbsGraph& g, const GogWord& w) { return cyclic_reduce(g, w).length(); }

bool is_elliptic(const GbsGraph& g, const GogWord& w) { return translation_length(g, w) == 0; }

// ---------------------------------------------------------------------------

GogWord parse_word(const GbsGraph& g, std::string_view line, const std::string& source, std::size_t lineno) {
    std::string text(line);
    if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError(source, lineno, "expected 'word <base>: g0 e1 g1 ... en gn'");
    std::istringstream head(text.substr(0, colon));
    std::string keyword, base, extra;
    if (!(head >> keyword >> base) || keyword != "word" || (head >> extra))
        throw ParseError(source, lineno, "expected 'word <base>: g0 e1 g1 ... en gn'");
    const auto v = g.find_vertex(base);
    if (!v) throw ParseError(source, lineno, "unknown vertex '" + base + "'");

    std::istringstream body(text.substr(colon + 1));
    std::vector<std::string> toks;
    for (std::string t; body >> t;) toks.push_back(t);
    if (toks.size() % 2 == 0) throw ParseError(source, lineno, "word must alternate integers and edges, starting and ending with an integer");

    auto integer = [&](const std::string& t) {
        try {
            std::size_t pos = 0;
            const long long x = std::stoll(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            return static_cast<std::int64_t>(x);
        } catch (const std::exception&) {
            throw ParseError(source, lineno, "expected an integer, got '" + t + "'");
        }
    };

    GogWord w;
    w.base = *v;
    w.head = integer(toks[0]);
    for (std::size_t i = 1; i < toks.size(); i += 2) {
        const auto e = g.find_edge(toks[i]);
        if (!e) throw ParseError(source, lineno, "unknown edge '" + toks[i] + "'");
        w.syllables.push_back(Syllable{*e, integer(toks[i + 1])});
    }
    try {
        require_well_formed(g, w);
    } catch (const GbsError& err) {
        throw ParseError(source, lineno, err.what());
    }
    return w;
}

std::vector<GogWord> parse_words(const GbsGraph& g, std::string_view text, const std::string& source) {
    std::vector<GogWord> out;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back(parse_word(g, line, source, lineno));
    }
    return out;
}

std::string format_word(const GbsGraph& g, const GogWord& w) {
    std::string out = "word " + g.vertex_name(w.base) + ": " + std::to_string(w.head);
    for (const auto& s : w.syllables) out += " " + g.edge_name(s.edge) + " " + std::to_string(s.value);
    return out;
}

}  // namespace gbs
