#pragma once

// Linear GBS chains v0 - v1 - ... - vk with edge i labeled q_{i-1} at v_{i-1}
// and r_i at v_i. With q0 = rk = 5 and interior labels q = 2, r = 3 the
// Bass-Serre tree is the 5-regular tree for every k, while the quotient has
// k+1 vertices: reduced locally finite splittings of unbounded complexity.

#include <cstdint>
#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

struct ChainSpec {
    std::vector<Label> q;  // q_0 .. q_{k-1}
    std::vector<Label> r;  // r_1 .. r_k

    std::size_t k() const { return q.size(); }
};

/// Throws GbsError for a length mismatch, k = 0 or a zero entry.
void require_valid(const ChainSpec& spec);
bool is_reduced(const ChainSpec& spec);

GbsGraph make_chain(const ChainSpec& spec);

/// gcd(r_i, q_j) = 1 whenever 1 <= i <= j <= k-1. Only defined for reduced specs.
bool is_two_generated(const ChainSpec& spec);

/// q0 = rk = 5, interior q = 2 and r = 3.
ChainSpec regular_five_chain(std::size_t k);

struct FamilyRow {
    std::size_t k = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool reduced = false;
    bool two_generated = false;
    std::size_t min_valence = 0;
    std::size_t max_valence = 0;
    std::size_t essential = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

struct FamilyReport {
    std::vector<FamilyRow> rows;
    bool ok() const;
};

inline constexpr std::size_t kFamilyBallRadius = 3;

/// Builds and checks regular_five_chain(k) for k = 1..kmax, balls at every base vertex.
FamilyReport verify_family(std::int64_t kmax, bool parallel = true);

}  // namespace gbs
