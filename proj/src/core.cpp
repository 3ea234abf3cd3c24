#include "rookmaze/core.hpp"

#include <algorithm>
#include <numeric>

namespace rookmaze {

RookPlacement::RookPlacement(int m, int n, std::vector<Cell> rooks)
    : m_(m), n_(n), rooks_(std::move(rooks)) {
    if (m < 0 || n < 0) throw DomainError("negative board dimension");
    std::sort(rooks_.begin(), rooks_.end());
    std::vector<char> row_used(m + 1, 0), col_used(n + 1, 0);
    for (const Cell& c : rooks_) {
        if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
            throw DomainError("rook out of bounds");
        if (row_used[c.row] || col_used[c.col]) throw DomainError("attacking rooks");
        row_used[c.row] = col_used[c.col] = 1;
    }
}

int RookPlacement::col_of_row(int row) const {
    for (const Cell& c : rooks_)
        if (c.row == row) return c.col;
    return 0;
}

int RookPlacement::row_of_col(int col) const {
    for (const Cell& c : rooks_)
        if (c.col == col) return c.row;
    return 0;
}

bool RookPlacement::contains(Cell c) const {
    return std::binary_search(rooks_.begin(), rooks_.end(), c);
}

ColoredPermutation::ColoredPermutation(std::vector<int> w, std::set<int> blue)
    : w_(std::move(w)), blue_(std::move(blue)) {
    const int n = static_cast<int>(w_.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : w_) {
        if (v < 1 || v > n || seen[v]) throw DomainError("w is not a permutation");
        seen[v] = 1;
    }
    for (int b : blue_)
        if (b < 1 || b > n) throw DomainError("blue position out of range");
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace rookmaze
