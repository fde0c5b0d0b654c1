#include "gbs/chain_family.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <thread>
#include <numeric>

#include "gbs/error.hpp"
#include "gbs/moves.hpp"
#include "gbs/tree_ball.hpp"

namespace gbs {

void require_valid(const ChainSpec& spec) {
    if (spec.q.empty()) throw GbsError("chain length k must be at least 1");
    if (spec.q.size() != spec.r.size())
        throw GbsError("chain needs as many q entries as r entries (got " + std::to_string(spec.q.size()) + " and " +
                       std::to_string(spec.r.size()) + ")");
    for (std::size_t i = 0; i < spec.k(); ++i) {
        if (spec.q[i] == 0) throw GbsError("chain entry q" + std::to_string(i) + " is zero");
        if (spec.r[i] == 0) throw GbsError("chain entry r" + std::to_string(i + 1) + " is zero");
    }
}

bool is_reduced(const ChainSpec& spec) {
    require_valid(spec);
    return std::none_of(spec.q.begin(), spec.q.end(), is_unit) && std::none_of(spec.r.begin(), spec.r.end(), is_unit);
}

GbsGraph make_chain(const ChainSpec& spec) {
    require_valid(spec);
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= spec.k(); ++i) names.push_back("v" + std::to_string(i));
    std::vector<GeometricEdge> edges;
    for (std::size_t i = 1; i <= spec.k(); ++i)
        edges.push_back(GeometricEdge{"e" + std::to_string(i), static_cast<std::int32_t>(i - 1),
                                      static_cast<std::int32_t>(i), spec.q[i - 1], spec.r[i - 1]});
    return GbsGraph(std::move(names), std::move(edges));
}

bool is_two_generated(const ChainSpec& spec) {
    if (!is_reduced(spec)) throw GbsError("the 2-generation criterion is stated for reduced chains only");
    const std::size_t k = spec.k();
    // r_i is spec.r[i-1], q_j is spec.q[j].
    for (std::size_t i = 1; i + 1 <= k; ++i)
        for (std::size_t j = i; j + 1 <= k; ++j)
            if (std::gcd(spec.r[i - 1], spec.q[j]) != 1) return false;
    return true;
}

ChainSpec regular_five_chain(std::size_t k) {
    ChainSpec spec;
    spec.q.assign(k, 2);
    spec.r.assign(k, 3);
    if (k > 0) {
        spec.q.front() = 5;
        spec.r.back() = 5;
    }
    return spec;
}

bool FamilyReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.ok(); });
}

namespace {

FamilyRow check_member(std::size_t k) {
    FamilyRow row;
    row.k = k;
    const ChainSpec spec = regular_five_chain(k);
    const GbsGraph g = make_chain(spec);
    row.vertices = g.vertex_count();
    row.edges = g.edge_count();
    row.reduced = is_reduced(g) && is_reduced(spec);
    row.two_generated = row.reduced && is_two_generated(spec);
    if (!row.reduced) row.failures.emplace_back("not reduced");
    if (!row.two_generated) row.failures.emplace_back("not 2-generated");
    if (row.vertices != k + 1) row.failures.emplace_back("vertex count is not k+1");
    if (first_betti_number(g) != 0) row.failures.emplace_back("quotient is not a tree");

    row.min_valence = std::numeric_limits<std::size_t>::max();
    for (Vertex base : g.vertices()) {
        const auto ball = expand_ball(g, base, kFamilyBallRadius);
        for (const auto& [key, count] : interior_valences(ball)) {
            row.min_valence = std::min(row.min_valence, key.second);
            row.max_valence = std::max(row.max_valence, key.second);
        }
    }
    if (row.min_valence != 5 || row.max_valence != 5) row.failures.emplace_back("interior valence is not 5");

    row.essential = essential_vertices(g).size();
    if (row.essential != k + 1) row.failures.emplace_back("essential vertex count is not k+1");
    return row;
}

}  // namespace

FamilyReport verify_family(std::int64_t kmax, bool parallel) {
    if (kmax < 1) throw GbsError("verify-family needs kmax >= 1, got " + std::to_string(kmax));
    const auto n = static_cast<std::size_t>(kmax);
    FamilyReport report;
    report.rows.resize(n);
    if (parallel) {
        // Rows land in their own slots, so output order does not depend on scheduling.
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < n; i = next++) report.rows[i] = check_member(i + 1);
        };
        const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, n);
        std::vector<std::future<void>> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
        for (auto& f : pool) f.get();
    } else {
        for (std::size_t k = 1; k <= n; ++k) report.rows[k - 1] = check_member(k);
    }
    return report;
}

}  // namespace gbs
