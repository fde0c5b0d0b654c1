#pragma once

// Elements of the fundamental group of a GBS graph of groups, as closed
// Bass-Serre words g0 e1 g1 ... en gn at a base vertex.
//
// Orientation convention: for an edge e with label p at its origin end and
// label q at its terminus end, the defining relation is
//
//     e * a_{terminus}^q * ~e = a_{origin}^p
//
// so a loop labeled (n, m) presents BS(m, n) = <a, t | t a^m t^-1 = a^n> with
// t = e. The loop "(1,2)" is therefore t a^2 t^-1 = a.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

/// Edge e_i followed by the vertex-group exponent g_i at terminus(e_i).
struct Syllable {
    Edge edge;
    std::int64_t value = 0;
    auto operator<=>(const Syllable&) const = default;
};

struct GogWord {
    Vertex base;
    std::int64_t head = 0;           // g0, at base
    std::vector<Syllable> syllables;  // (e1, g1) ... (en, gn)

    std::size_t length() const { return syllables.size(); }
    auto operator<=>(const GogWord&) const = default;
};

/// Throws GbsError naming the first broken adjacency.
void require_well_formed(const GbsGraph& g, const GogWord& w);

/// Picks which pinch to remove next, given the candidate syllable positions.
using PinchChooser = std::function<std::size_t(std::span<const std::size_t>)>;

/// Removes pinches e * a^{label(~e) c} * ~e -> a^{label(e) c}, leftmost first.
GogWord reduce_word(const GbsGraph& g, const GogWord& w);
GogWord reduce_word(const GbsGraph& g, const GogWord& w, const PinchChooser& choose);
bool has_pinch(const GbsGraph& g, const GogWord& w);

/// Reduced word with every g_i (i < n) pushed to its coset representative
/// 0 <= g_i < |label(e_{i+1})|. Unique for each group element.
GogWord normal_form(const GbsGraph& g, const GogWord& w);
bool same_element(const GbsGraph& g, const GogWord& a, const GogWord& b);

GogWord multiply(const GbsGraph& g, const GogWord& a, const GogWord& b);
GogWord inverse(const GogWord& w);
GogWord power(const GbsGraph& g, const GogWord& w, unsigned n);
/// Conjugate read from the origin of e_{k+1}: g_k e_{k+1} ... e_n (g_n + g_0) e_1 ... e_k 0.
GogWord rotate(const GbsGraph& g, const GogWord& w, std::size_t k);

/// Conjugate of w with no pinch, including across the wrap-around position.
GogWord cyclic_reduce(const GbsGraph& g, const GogWord& w);
std::size_t translation_length(const GbsGraph& g, const GogWord& w);
bool is_elliptic(const GbsGraph& g, const GogWord& w);

/// `word <base>: g0 e1 g1 ... en gn`, with `~e` for reversal(e).
GogWord parse_word(const GbsGraph& g, std::string_view line, const std::string& source = "<input>",
                   std::size_t lineno = 1);
std::vector<GogWord> parse_words(const GbsGraph& g, std::string_view text, const std::string& source = "<input>");
std::string format_word(const GbsGraph& g, const GogWord& w);

}  // namespace gbs
