#include "gbs/gf2.hpp"

#include <stdexcept>

namespace gbs {

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix out(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto c = rows_[r].find_first(); c != boost::dynamic_bitset<>::npos; c = rows_[r].find_next(c))
            out.set(c, r, true);
    return out;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("GF(2) matrix shapes do not match");
    Gf2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r)
        for (auto k = rows_[r].find_first(); k != boost::dynamic_bitset<>::npos; k = rows_[r].find_next(k))
            out.rows_[r] ^= rhs.rows_[k];
    return out;
}

bool Gf2Matrix::is_zero() const {
    for (const auto& row : rows_)
        if (row.any()) return false;
    return true;
}

std::size_t Gf2Matrix::rank() const {
    auto work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t r = 0; r < work.size(); ++r)
            if (r != rank && work[r].test(col)) work[r] ^= work[rank];
        ++rank;
    }
    return rank;
}

}  // namespace gbs
