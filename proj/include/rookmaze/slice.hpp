#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "rookmaze/linear_side.hpp"
#include "rookmaze/maze.hpp"

namespace rookmaze {

// Subgroups of GL(n) cut out by an entry pattern. Diagonal entries are One or Unit (a torus
// factor); off-diagonal entries are Zero or Free. Only upper-triangular patterns closed under
// multiplication are meaningful.
enum class PatternEntry : std::uint8_t { Zero, One, Free, Unit };

struct PatternGroup {
    int size = 0;
    std::vector<PatternEntry> entries;

    PatternGroup() = default;
    explicit PatternGroup(int n);  // the trivial group
    PatternEntry& at(int i, int j) { return entries[static_cast<std::size_t>(i - 1) * size + (j - 1)]; }  // 1-based
    PatternEntry at(int i, int j) const { return entries[static_cast<std::size_t>(i - 1) * size + (j - 1)]; }
    // Dimension of the Lie algebra.
    int dimension() const;
    bool operator==(const PatternGroup&) const = default;
};

PatternGroup upper_borel(int n);
// B_M embedded in GL(M+1) away from row/column k, times the unipotent group with upper
// unitriangular blocks of sizes r (top) and s (bottom) and the identity on the middle block.
// Requires r + s = n - m - 1 and r + 1 <= k <= n - s.
PatternGroup slice_subgroup(int m, int n, int r, int s, int k);
// B_M on the rows r+2..n-s, unitriangular blocks of sizes r+1 and s around it.
PatternGroup projection_subgroup(int m, int n, int r, int s);
// M = 2m', N = 2n' even, M < N: B_M in the centre, a Heisenberg group on the surrounding
// (M+2)-block, unitriangular blocks of size n'-m'-1 at both ends.
PatternGroup middle_subgroup(int m, int n);

// Linear functional on a pattern Lie algebra: sum of coef * u_{row,col} (1-based, strictly upper).
struct CharacterSpec {
    std::vector<std::tuple<int, int, Rational>> terms;
};
CharacterSpec slice_character(int m, int n, int r, int s, int k);
CharacterSpec middle_character(int m, int n);

// Relevance of the double coset H g B at the Lie-algebra level: the character vanishes on
// {xi in Lie(H) : g^{-1} xi g upper triangular}.
bool coset_relevant(const QMatrix& g, const PatternGroup& h, const CharacterSpec& psi);

// Permutation matrix of w (1's at (i, w(i))) plus 1's at (M+1, K) for K <= M in sigma.
// w is 1-based one-line notation; sigma is non-empty and strictly decreasing.
QMatrix slice_representative_A(const std::vector<int>& w, const std::vector<int>& sigma, int m, int n);

// The M x N maze with r type-III walls turned into type II through r new top rows and s turned
// into type I through s new bottom rows (rightmost ones up, leftmost ones down); the remaining
// type-III walls run straight through the new rows. Result is (M + r + s) x N.
Maze extend_type_three(const Maze& maze, int r, int s);

QMatrix slice_representative_A_rsk(const Maze& maze, int r, int s, int k);
QMatrix slice_representative_E(const Maze& maze);

// Rows k..k2 rotated so that row k moves to k2 (k <= k2) and the rows in between move up.
QMatrix cycle_rows(const QMatrix& a, int k, int k2);
// w0 tg^{-1} w0, or -w0' tg^{-1} w0' with the symplectic antidiagonal when symplectic is set.
QMatrix iota_group(const QMatrix& g, bool symplectic);

struct FqLimits {
    std::uint64_t max_states = 20'000'000;
};

// Is b in left * a * right over F_q? Entries must reduce to F_q.
bool double_coset_equal_Fq(const QMatrix& a, const QMatrix& b, const PatternGroup& left, const PatternGroup& right, int q,
                           const FqLimits& limits = {});
// Number of (left x right)-orbits on all rows x cols matrices over F_q, X -> g X h.
std::uint64_t count_double_cosets_Fq(const PatternGroup& left, const PatternGroup& right, int q, const FqLimits& limits = {});

}  // namespace rookmaze
