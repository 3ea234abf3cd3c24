#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rookmaze/core.hpp"
#include "rookmaze/maze.hpp"

namespace rookmaze {

// x-marker placement of a valid maze.
RookPlacement pi(const Maze& m);
// Inverse of pi via iterated north-west envelope peeling on the board with one extra row and column.
Maze varpi(const RookPlacement& r);

// Vertical cut after column nl: x's on the left part, o's on the right part.
RookPlacement pi_v(const Maze& m, int nl, int nr);
Maze varpi_v(const RookPlacement& r, int nl, int nr);
// Horizontal cut after row mu: x's in the upper part, o's in the lower part.
RookPlacement pi_h(const Maze& m, int mu, int md);
Maze varpi_h(const RookPlacement& r, int mu, int md);

// Central reflection exchanging x and o.
Maze iota(const Maze& m);
bool is_centrally_symmetric(const Maze& m);

RookPlacement transpose(const RookPlacement& r);
RookPlacement central_flip(const RookPlacement& r);

// Symmetric 2a x 2b maze -> symmetric 2a x (2b+1) maze; the row version goes to (2a+1) x 2b.
Maze insert_middle_column(const Maze& m);
Maze insert_middle_row(const Maze& m);

// Square mazes <-> colored permutations. Blue positions are the rows of the type-I x corners.
ColoredPermutation phi(const Maze& m);
// Empty result (with a reason) when the colored permutation is outside the valid set.
std::optional<Maze> varphi(const ColoredPermutation& c, std::string* reason = nullptr);
bool in_rb(const ColoredPermutation& c);
std::vector<ColoredPermutation> rb_elements(int n);

struct RbMembership {
    bool upper = false;  // M+1 blue, M+2..N red
    bool rb_mn = false;  // additionally w(M+1) > ... > w(N)
};
// Throws DomainError unless c is in the valid set and M < N.
RbMembership rb_subset_tests(const ColoredPermutation& c, int m);

RookPlacement rho(const ColoredPermutation& c, int m);
ColoredPermutation varrho(const RookPlacement& r);

// pi(iota(varpi(r))).
RookPlacement fourier(const RookPlacement& r);

}  // namespace rookmaze
