#pragma once

// Test-only oracle: the left action of pi_1 on the Bass-Serre tree, computed
// on normal-form vertices by carry propagation. Independent of the pinch
// reduction in words.cpp: the translation length of w is read off as the
// minimum displacement d(x, w x) over a ball that contains its axis or fixed set.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/words.hpp"

namespace gbs::oracle {

/// a^{c_0} t_{e_1} a^{c_1} ... t_{e_n} G_{v_n}, with 0 <= c_i < |label(e_{i+1})|
/// and c_i != 0 whenever e_{i+1} backtracks along e_i.
struct TreeVertex {
    Vertex start;
    std::vector<std::pair<std::int64_t, Edge>> steps;

    bool operator==(const TreeVertex&) const = default;
};

class TreeAction {
public:
    explicit TreeAction(const GbsGraph& g) : g_(g) {}

    TreeVertex act(const GogWord& w, TreeVertex x) const {
        for (std::size_t i = w.syllables.size(); i-- > 0;) {
            x = power(std::move(x), w.syllables[i].value);
            x = edge(std::move(x), w.syllables[i].edge);
        }
        return power(std::move(x), w.head);
    }

    static std::size_t distance(const TreeVertex& x, const TreeVertex& y) {
        std::size_t common = 0;
        while (common < x.steps.size() && common < y.steps.size() && x.steps[common] == y.steps[common]) ++common;
        return x.steps.size() + y.steps.size() - 2 * common;
    }

    /// Every normal-form vertex within `radius` of the base vertex.
    std::vector<TreeVertex> ball(Vertex base, std::size_t radius) const {
        std::vector<TreeVertex> out{TreeVertex{base, {}}};
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].steps.size() == radius) continue;
            const Vertex at = out[i].steps.empty() ? base : g_.terminus(out[i].steps.back().second);
            for (Edge f : g_.ends_at(at)) {
                const auto slots = abs_label(g_.label(f));
                for (std::int64_t c = 0; c < slots; ++c) {
                    if (!out[i].steps.empty() && c == 0 && f == out[i].steps.back().second.reverse()) continue;
                    TreeVertex next = out[i];
                    next.steps.emplace_back(c, f);
                    out.push_back(std::move(next));
                }
            }
        }
        return out;
    }

    std::size_t min_displacement(const GogWord& w, std::size_t radius) const {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (const auto& x : ball(w.base, radius)) best = std::min(best, distance(x, act(w, x)));
        return best;
    }

private:
    static std::int64_t floor_mod(std::int64_t v, std::int64_t m) {
        const std::int64_t r = v % m;
        return r < 0 ? r + m : r;
    }

    // a^k * x, with a the generator at x.start.
    TreeVertex power(TreeVertex x, std::int64_t k) const {
        std::size_t i = 0;
        while (k != 0 && i < x.steps.size()) {
            auto& [c, e] = x.steps[i];
            const Label l = g_.label(e);
            const std::int64_t v = c + k;
            const std::int64_t r = floor_mod(v, abs_label(l));
            const std::int64_t q = (v - r) / l;
            c = r;
            k = g_.label(e.reverse()) * q;  // a^{lq} t_e = t_e a^{label(~e) q}
            ++i;
        }
        return x;
    }

    // t_e * x, where terminus(e) = x.start.
    TreeVertex edge(TreeVertex x, Edge e) const {
        const Vertex origin = g_.origin(e);
        if (!x.steps.empty() && x.steps.front().second == e.reverse() && x.steps.front().first == 0) {
            x.steps.erase(x.steps.begin());
        } else {
            x.steps.insert(x.steps.begin(), {0, e});
        }
        x.start = origin;
        return x;
    }

    const GbsGraph& g_;
};

/// Translation length via the tree action, searching a ball of radius max(1, n).
inline std::size_t translation_length(const GbsGraph& g, const GogWord& w) {
    return TreeAction(g).min_displacement(w, std::max<std::size_t>(1, w.length()));
}

}  // namespace gbs::oracle
