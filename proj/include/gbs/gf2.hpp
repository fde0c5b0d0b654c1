#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <vector>

namespace gbs {

/// Dense matrix over GF(2), one bitset per row.
class Gf2Matrix {
public:
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, boost::dynamic_bitset<>(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return rows_.at(r).test(c); }
    void flip(std::size_t r, std::size_t c) { rows_.at(r).flip(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

    Gf2Matrix transpose() const;
    Gf2Matrix operator*(const Gf2Matrix& rhs) const;
    bool is_zero() const;

    /// Gaussian elimination on a copy.
    std::size_t rank() const;

private:
    std::size_t cols_;
    std::vector<boost::dynamic_bitset<>> rows_;
};

}  // namespace gbs
