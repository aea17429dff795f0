#pragma once

#include <cstddef>
#include <set>
#include <utility>

namespace orbhf {

/// Sparse GF(2) matrix. Entries are (row, col) positions holding a 1;
/// inserting an existing position cancels it.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::set<std::pair<std::size_t, std::size_t>>& entries() const { return entries_; }
    bool get(std::size_t r, std::size_t c) const { return entries_.contains({r, c}); }
    bool is_zero() const { return entries_.empty(); }

    void toggle(std::size_t r, std::size_t c);

    friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::set<std::pair<std::size_t, std::size_t>> entries_;
};

/// Rank over GF(2) by Gaussian elimination on packed rows.
std::size_t rank_gf2(const Gf2Matrix& m);

}  // namespace orbhf
