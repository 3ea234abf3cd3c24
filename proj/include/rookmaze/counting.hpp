#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rookmaze/core.hpp"
#include "rookmaze/maze.hpp"

namespace rookmaze {

struct EnumerationLimits {
    std::uint64_t max_objects = 10'000'000;
    unsigned jobs = 1;
};

// Placements on an M x N board in lexicographic order of their sorted cell lists.
std::vector<RookPlacement> enumerate_rooks(int m, int n, const EnumerationLimits& limits = {});
void for_each_rook_placement(int m, int n, const std::function<void(const RookPlacement&)>& f,
                             const EnumerationLimits& limits = {});

// sum_k C(M,k) C(N,k) k!; throws DomainError on 64-bit overflow.
std::uint64_t count_rooks_closed(int m, int n);

// varpi over enumerate_rooks, in the same order.
std::vector<Maze> enumerate_mazes(int m, int n, const EnumerationLimits& limits = {});
std::vector<Maze> enumerate_symmetric_mazes(int m, int n, const EnumerationLimits& limits = {});

enum class SymmetricShape { Square, Tall };  // 2n x 2n, (2n+2) x 2n
std::uint64_t count_symmetric_closed(SymmetricShape shape, int n);

struct CountReport {
    std::string family;  // e.g. "gl(M|N)", "osp(2m+1|2n)"
    std::string label;   // e.g. "gl(1|2)"
    std::vector<std::pair<std::string, int>> params;
    std::uint64_t enumerated = 0;
    std::optional<std::uint64_t> closed_form;
    // Further counts that must agree with `enumerated` (e.g. the odd-size symmetric mazes).
    std::vector<std::pair<std::string, std::uint64_t>> companions;
    bool computed = true;  // false for constants echoed from configuration
    bool match = true;
};

struct Table1Config {
    std::uint64_t f4_count = 9;
    std::uint64_t g3_count = 7;
};

std::vector<CountReport> table1(int max_m, int max_n, const EnumerationLimits& limits = {},
                                const Table1Config& config = {});
std::string format_table1(const std::vector<CountReport>& rows, const std::string& format);  // csv | md

}  // namespace rookmaze
