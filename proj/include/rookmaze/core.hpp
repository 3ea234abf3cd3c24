#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rookmaze {

// Raised for invalid inputs to library operations (bad shapes, invalid mazes, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed the configured object ceiling.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

class RookPlacement {
public:
    // Throws DomainError on out-of-bounds or attacking rooks.
    RookPlacement(int m, int n, std::vector<Cell> rooks);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Cell>& rooks() const { return rooks_; }  // sorted
    std::size_t size() const { return rooks_.size(); }

    // Column of the rook in `row`, or 0.
    int col_of_row(int row) const;
    int row_of_col(int col) const;
    bool contains(Cell c) const;

    bool operator==(const RookPlacement&) const = default;
    auto operator<=>(const RookPlacement& o) const {
        if (auto c = m_ <=> o.m_; c != 0) return c;
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return rooks_ <=> o.rooks_;
    }

private:
    int m_, n_;
    std::vector<Cell> rooks_;
};

class ColoredPermutation {
public:
    // w is one-line notation of a permutation of {1..nn}; blue is a subset of {1..nn}.
    ColoredPermutation(std::vector<int> w, std::set<int> blue);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[i - 1]; }
    const std::vector<int>& w() const { return w_; }
    const std::set<int>& blue() const { return blue_; }
    bool is_blue(int i) const { return blue_.count(i) != 0; }

    bool operator==(const ColoredPermutation&) const = default;
    auto operator<=>(const ColoredPermutation&) const = default;

private:
    std::vector<int> w_;
    std::set<int> blue_;
};

// All permutations of {1..n} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

}  // namespace rookmaze
