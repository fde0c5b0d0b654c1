#include "gbs/bound.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "gbs/error.hpp"
#include "gbs/gf2.hpp"

namespace gbs {

namespace {

// Columns are cells of the higher dimension.
Gf2Matrix boundary1_matrix(const ChainComplex2& c) {
    Gf2Matrix m(c.cells0.size(), c.cells1.size());
    for (std::size_t e = 0; e < c.boundary1.size(); ++e) {
        m.flip(c.boundary1[e].first, e);
        m.flip(c.boundary1[e].second, e);
    }
    return m;
}

Gf2Matrix boundary2_matrix(const ChainComplex2& c) {
    Gf2Matrix m(c.cells1.size(), c.cells2.size());
    for (std::size_t f = 0; f < c.boundary2.size(); ++f)
        for (auto e : c.boundary2[f]) m.flip(e, f);
    return m;
}

bool indices_ok(const ChainComplex2& c) {
    if (c.boundary1.size() != c.cells1.size() || c.boundary2.size() != c.cells2.size()) return false;
    for (const auto& [v, w] : c.boundary1)
        if (v >= c.cells0.size() || w >= c.cells0.size()) return false;
    for (const auto& face : c.boundary2)
        for (auto e : face)
            if (e >= c.cells1.size()) return false;
    return true;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::vector<std::string> validate(const ChainComplex2& c) {
    std::vector<std::string> out;
    if (c.cells0.empty()) out.emplace_back("complex has no 0-cells");
    if (!indices_ok(c)) {
        out.emplace_back("a boundary refers to a cell that does not exist");
        return out;
    }
    if (!(boundary1_matrix(c) * boundary2_matrix(c)).is_zero())
        out.emplace_back("boundary of a boundary is nonzero mod 2");

    std::vector<std::size_t> parent(c.cells0.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [v, w] : c.boundary1) parent[find_root(parent, v)] = find_root(parent, w);
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < parent.size(); ++v) roots.insert(find_root(parent, v));
    if (roots.size() > 1) out.emplace_back("complex is not connected");
    return out;
}

void require_valid(const ChainComplex2& c) {
    const auto problems = validate(c);
    if (problems.empty()) return;
    std::string msg = "invalid complex:";
    for (const auto& p : problems) msg += " " + p + ";";
    msg.pop_back();
    throw GbsError(msg);
}

std::size_t boundary1_rank(const ChainComplex2& c) { return boundary1_matrix(c).rank(); }
std::size_t boundary2_rank(const ChainComplex2& c) { return boundary2_matrix(c).rank(); }

// Over a field, the coboundary d^k is the transpose of the boundary, so the
// ranks agree: dim H^1 = dim ker d^1 - rank d^0 = (l1 - rk B2) - rk B1.
std::size_t h0_dim_mod2(const ChainComplex2& c) {
    require_valid(c);
    return c.cells0.size() - boundary1_rank(c);
}

std::size_t h1_dim_mod2(const ChainComplex2& c) {
    require_valid(c);
    return c.cells1.size() - boundary2_rank(c) - boundary1_rank(c);
}

std::size_t h2_dim_mod2(const ChainComplex2& c) {
    require_valid(c);
    return c.cells2.size() - boundary2_rank(c);
}

std::int64_t delta(const ChainComplex2& c) {
    return 2 * static_cast<std::int64_t>(h1_dim_mod2(c)) + static_cast<std::int64_t>(c.cells0.size()) +
           static_cast<std::int64_t>(c.cells2.size());
}

BoundReport accessibility_bounds(const ChainComplex2& c, std::int64_t beta1) {
    if (beta1 < 0) throw GbsError("beta1 must be nonnegative");
    BoundReport r;
    r.delta = delta(c);
    r.beta1 = beta1;
    r.vertex_bound = r.delta + beta1;
    r.edge_bound = r.vertex_bound - 1 + beta1;
    r.total_bound = r.vertex_bound + r.edge_bound;
    r.bf_vertex_bound = 4 * r.delta + 9 * beta1 - 5;
    return r;
}

BoundReport accessibility_bounds_from_complex(const ChainComplex2& c) {
    auto r = accessibility_bounds(c, static_cast<std::int64_t>(h1_dim_mod2(c)));
    r.beta1_is_upper_bound = true;
    return r;
}

ChainComplex2 parse_complex(std::string_view text, const std::string& source) {
    ChainComplex2 c;
    std::map<std::string, std::size_t, std::less<>> idx0, idx1;
    std::set<std::string> names2;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;

        if (toks[0] == "cell0") {
            if (toks.size() != 2) throw ParseError(source, lineno, "expected 'cell0 <name>'");
            if (!idx0.emplace(toks[1], c.cells0.size()).second)
                throw ParseError(source, lineno, "duplicate 0-cell '" + toks[1] + "'");
            c.cells0.push_back(toks[1]);
        } else if (toks[0] == "cell1") {
            if (toks.size() != 4) throw ParseError(source, lineno, "expected 'cell1 <name> <v> <w>'");
            auto lookup = [&](const std::string& n) {
                auto it = idx0.find(n);
                if (it == idx0.end()) throw ParseError(source, lineno, "unknown 0-cell '" + n + "'");
                return it->second;
            };
            if (!idx1.emplace(toks[1], c.cells1.size()).second)
                throw ParseError(source, lineno, "duplicate 1-cell '" + toks[1] + "'");
            c.cells1.push_back(toks[1]);
            c.boundary1.emplace_back(lookup(toks[2]), lookup(toks[3]));
        } else if (toks[0] == "cell2") {
            if (toks.size() < 2) throw ParseError(source, lineno, "expected 'cell2 <name> <e1> ... <ek>'");
            if (!names2.insert(toks[1]).second) throw ParseError(source, lineno, "duplicate 2-cell '" + toks[1] + "'");
            std::vector<std::size_t> face;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto it = idx1.find(toks[i]);
                if (it == idx1.end()) throw ParseError(source, lineno, "unknown 1-cell '" + toks[i] + "'");
                face.push_back(it->second);
            }
            c.cells2.push_back(toks[1]);
            c.boundary2.push_back(std::move(face));
        } else {
            throw ParseError(source, lineno, "unknown declaration '" + toks[0] + "'");
        }
    }
    return c;
}

ChainComplex2 read_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GbsError("cannot open complex file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str(), path);
}

}  // namespace gbs
