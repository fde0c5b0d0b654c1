#pragma once

// Accessibility bounds for reduced locally finite trees, computed from a
// finite 2-complex L via mod-2 cohomology:
//
//     delta = 2 dim H^1(L; Z/2) + l0 + l2
//     vertices <= delta + b1,  edges <= vertices - 1 + b1
//     BF-reduced vertices <= 4 delta + 9 b1 - 5

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gbs {

struct ChainComplex2 {
    std::vector<std::string> cells0;
    std::vector<std::string> cells1;
    std::vector<std::string> cells2;
    std::vector<std::pair<std::size_t, std::size_t>> boundary1;  // endpoints of each 1-cell
    std::vector<std::vector<std::size_t>> boundary2;             // 1-cells around each 2-cell, repeats allowed
};

std::vector<std::string> validate(const ChainComplex2& c);
void require_valid(const ChainComplex2& c);

/// Mod-2 ranks of the boundary maps.
std::size_t boundary1_rank(const ChainComplex2& c);
std::size_t boundary2_rank(const ChainComplex2& c);

std::size_t h0_dim_mod2(const ChainComplex2& c);
std::size_t h1_dim_mod2(const ChainComplex2& c);
std::size_t h2_dim_mod2(const ChainComplex2& c);

std::int64_t delta(const ChainComplex2& c);

struct BoundReport {
    std::int64_t delta = 0;
    std::int64_t beta1 = 0;
    bool beta1_is_upper_bound = false;  // taken from dim H^1(L; Z/2) rather than supplied
    std::int64_t vertex_bound = 0;
    std::int64_t edge_bound = 0;
    std::int64_t total_bound = 0;
    std::int64_t bf_vertex_bound = 0;
};

BoundReport accessibility_bounds(const ChainComplex2& c, std::int64_t beta1);
/// Uses dim H^1(L; Z/2) in place of b1 and flags the report accordingly.
BoundReport accessibility_bounds_from_complex(const ChainComplex2& c);

/// `cell0 <name>` / `cell1 <name> <v> <w>` / `cell2 <name> <e1> ... <ek>`.
ChainComplex2 parse_complex(std::string_view text, const std::string& source = "<input>");
ChainComplex2 read_complex_file(const std::string& path);

}  // namespace gbs
