#include "orbhf/gf2.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace orbhf {

void Gf2Matrix::toggle(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("Gf2Matrix::toggle");
    if (auto [it, inserted] = entries_.insert({r, c}); !inserted) entries_.erase(it);
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Gf2Matrix: shape mismatch");
    std::vector<std::vector<std::size_t>> b_rows(b.rows_);
    for (auto [r, c] : b.entries_) b_rows[r].push_back(c);
    Gf2Matrix out(a.rows_, b.cols_);
    for (auto [r, k] : a.entries_)
        for (std::size_t c : b_rows[k]) out.toggle(r, c);
    return out;
}

std::size_t rank_gf2(const Gf2Matrix& m) {
    using Block = std::uint64_t;
    const std::size_t width = (m.cols() + 63) / 64;
    std::vector<std::vector<Block>> rows(m.rows(), std::vector<Block>(width, 0));
    for (auto [r, c] : m.entries()) rows[r][c / 64] ^= Block{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < rows.size(); ++col) {
        const std::size_t blk = col / 64;
        const Block mask = Block{1} << (col % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot][blk] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (!(rows[r][blk] & mask)) continue;
            for (std::size_t w = blk; w < width; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace orbhf
