#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rookmaze/core.hpp"

namespace rookmaze {

// Boundary sides a wall may touch: I = upper+left, II = right+lower, III = upper+lower, IV = right+left.
enum class WallKind { I, II, III, IV };

const char* to_string(WallKind k);
WallKind wall_kind_from_string(const std::string& s);

enum class Marker { X, O };

// What a single cell of the board contains.
enum class Piece : std::uint8_t { Empty, Vertical, Horizontal, X, O };

// A wall is stored as its cell path traversed from the north-east end to the south-west end;
// every step goes one cell south or one cell west.
struct Wall {
    WallKind kind;
    std::vector<Cell> path;

    std::vector<std::pair<Cell, Marker>> corners() const;
    // Piece drawn by the wall in path[i].
    Piece piece_at(std::size_t i) const;

    bool operator==(const Wall&) const = default;
};

struct PieceGrid {
    int m = 0, n = 0;
    std::vector<Piece> cells;

    PieceGrid() = default;
    PieceGrid(int m_, int n_) : m(m_), n(n_), cells(static_cast<std::size_t>(m_) * n_, Piece::Empty) {}

    Piece& at(int r, int c) { return cells[static_cast<std::size_t>(r - 1) * n + (c - 1)]; }
    Piece at(int r, int c) const { return cells[static_cast<std::size_t>(r - 1) * n + (c - 1)]; }
    bool operator==(const PieceGrid&) const = default;

    std::string key() const;
};

bool opens_north(Piece p);
bool opens_south(Piece p);
bool opens_east(Piece p);
bool opens_west(Piece p);

class Maze {
public:
    // Structural checks only (positive dimensions, non-empty in-bounds paths); use validate_maze for the rest.
    Maze(int m, int n, std::vector<Wall> walls);

    // Traces walls out of a piece grid. Throws DomainError on pieces that do not connect into boundary-to-boundary walls.
    static Maze from_pieces(const PieceGrid& g);

    int m() const { return m_; }
    int n() const { return n_; }
    const std::vector<Wall>& walls() const { return walls_; }  // canonical order

    // Throws DomainError when two walls share a cell.
    PieceGrid pieces() const;

    bool operator==(const Maze&) const = default;

private:
    int m_, n_;
    std::vector<Wall> walls_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_maze(const Maze& m);
bool is_valid(const Maze& m);
// Throws DomainError listing the violations.
void require_valid(const Maze& m);

// (x-placement, o-placement).
std::pair<RookPlacement, RookPlacement> markers(const Maze& m);

// Geometric symmetries (no validity requirement beyond structure).
Maze central_flip_swap(const Maze& m);  // point reflection; x and o exchange roles
Maze transpose(const Maze& m);          // M x N -> N x M, III <-> IV
Cell flip_cell(Cell c, int m, int n);

}  // namespace rookmaze
