#pragma once

// Test-only oracle: dim H^1(L; Z/2) by enumerating every 1-cochain and every
// 0-cochain. Exponential; meant for complexes with at most ~12 1-cells.

#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "gbs/bound.hpp"

namespace gbs::oracle {

inline std::size_t h1_by_enumeration(const ChainComplex2& c) {
    const std::size_t l0 = c.cells0.size();
    const std::size_t l1 = c.cells1.size();
    if (l1 > 20 || l0 > 20) throw std::invalid_argument("complex too large for enumeration");

    std::uint64_t cocycles = 0;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << l1); ++z) {
        bool closed = true;
        for (const auto& face : c.boundary2) {
            unsigned parity = 0;
            for (auto e : face) parity ^= static_cast<unsigned>((z >> e) & 1u);
            if (parity) {
                closed = false;
                break;
            }
        }
        if (closed) ++cocycles;
    }

    std::set<std::uint64_t> coboundaries;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << l0); ++x) {
        std::uint64_t dx = 0;
        for (std::size_t e = 0; e < l1; ++e) {
            const auto [v, w] = c.boundary1[e];
            if (((x >> v) ^ (x >> w)) & 1u) dx |= std::uint64_t{1} << e;
        }
        coboundaries.insert(dx);
    }
    // Both counts are powers of two.
    return static_cast<std::size_t>(std::countr_zero(cocycles) - std::countr_zero(coboundaries.size()));
}

}  // namespace gbs::oracle
