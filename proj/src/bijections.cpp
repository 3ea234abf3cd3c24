#include "rookmaze/bijections.hpp"

#include <algorithm>

namespace rookmaze {

namespace {

// Successive layers of maximal points (nothing weakly south-east of them), each sorted by row.
std::vector<std::vector<Cell>> nw_layers(std::vector<Cell> pts) {
    std::vector<std::vector<Cell>> layers;
    while (!pts.empty()) {
        std::vector<Cell> top, rest;
        for (const Cell& p : pts) {
            bool dominated = std::any_of(pts.begin(), pts.end(), [&](const Cell& q) {
                return q != p && q.row >= p.row && q.col >= p.col;
            });
            (dominated ? rest : top).push_back(p);
        }
        if (top.empty()) throw std::logic_error("envelope peeling made no progress");
        std::sort(top.begin(), top.end());
        layers.push_back(std::move(top));
        pts = std::move(rest);
    }
    return layers;
}

// Boundary of the NW envelope of `corners` (sorted by row, so columns decrease), clipped to m x n.
// The staircase enters at the top above the first corner and leaves to the left of the last one;
// the parts lying in the extra row/column are cut away, which turns the ends into right/bottom ends.
Wall envelope_wall(const std::vector<Cell>& corners, int m, int n) {
    std::vector<Cell> path;
    auto push = [&](int r, int c) {
        if (r <= m && c <= n) path.push_back({r, c});
    };
    int r = 1, c = corners.front().col;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        for (; r < corners[i].row; ++r) push(r, c);
        push(r, c);
        const bool more = i + 1 < corners.size();
        const int stop = more ? corners[i + 1].col : 1;
        for (--c; c >= stop; --c) push(r, c);
        if (more) {
            ++r;
            c = stop;
        }
    }
    if (path.empty()) throw std::logic_error("envelope wall lies outside the board");
    bool top = corners.front().col <= n;
    bool left = corners.back().row <= m;
    WallKind kind = top ? (left ? WallKind::I : WallKind::III) : (left ? WallKind::IV : WallKind::II);
    return Wall{kind, std::move(path)};
}

std::vector<Wall> peel(const std::vector<Cell>& pts, int m, int n) {
    std::vector<Wall> walls;
    for (const auto& layer : nw_layers(pts)) walls.push_back(envelope_wall(layer, m, n));
    return walls;
}

// Inserts the rows missing from `keep` (sorted target rows of g's rows) into a grid with `total` rows.
// An inserted row carries a vertical piece wherever a wall crosses the corresponding gap of g.
PieceGrid restitute_rows(const std::optional<PieceGrid>& g, int total, int width, const std::vector<int>& keep) {
    PieceGrid out(total, width);
    const int kept = static_cast<int>(keep.size());
    std::size_t next = 0;
    for (int t = 1; t <= total; ++t) {
        if (next < keep.size() && keep[next] == t) {
            for (int c = 1; c <= width; ++c) out.at(t, c) = g->at(static_cast<int>(next) + 1, c);
            ++next;
            continue;
        }
        const int gap = static_cast<int>(next);
        for (int c = 1; c <= width; ++c) {
            bool crosses;
            if (kept == 0)
                crosses = true;
            else if (gap == 0)
                crosses = opens_north(g->at(1, c));
            else
                crosses = opens_south(g->at(gap, c));
            if (crosses) out.at(t, c) = Piece::Vertical;
        }
    }
    return out;
}

Maze checked_from_pieces(const PieceGrid& g) {
    Maze m = Maze::from_pieces(g);
    require_valid(m);
    return m;
}

}  // namespace

RookPlacement pi(const Maze& m) { return markers(m).first; }

Maze varpi(const RookPlacement& r) {
    const int m = r.m(), n = r.n();
    std::vector<Cell> pts = r.rooks();
    for (int c = 1; c <= n; ++c)
        if (!r.row_of_col(c)) pts.push_back({m + 1, c});
    for (int row = 1; row <= m; ++row)
        if (!r.col_of_row(row)) pts.push_back({row, n + 1});
    return Maze(m, n, peel(pts, m, n));
}

RookPlacement pi_v(const Maze& m, int nl, int nr) {
    if (nl < 0 || nr < 0 || nl + nr != m.n()) throw DomainError("split sizes do not add up to the column count");
    auto [xs, os] = markers(m);
    std::vector<Cell> cells;
    for (Cell c : xs.rooks())
        if (c.col <= nl) cells.push_back(c);
    for (Cell c : os.rooks())
        if (c.col > nl) cells.push_back(c);
    return RookPlacement(m.m(), m.n(), std::move(cells));
}

Maze varpi_v(const RookPlacement& r, int nl, int nr) {
    const int m = r.m(), n = r.n();
    if (nl < 0 || nr < 0 || nl + nr != n) throw DomainError("split sizes do not add up to the column count");
    std::vector<Cell> left, right;
    for (Cell c : r.rooks()) (c.col <= nl ? left : right).push_back(c);
    auto rows_free_of = [&](const std::vector<Cell>& other) {
        std::vector<int> rows;
        for (int row = 1; row <= m; ++row)
            if (std::none_of(other.begin(), other.end(), [&](Cell c) { return c.row == row; })) rows.push_back(row);
        return rows;
    };
    auto compress = [](const std::vector<int>& rows, int row) {
        return static_cast<int>(std::lower_bound(rows.begin(), rows.end(), row) - rows.begin()) + 1;
    };
    PieceGrid full(m, n);
    if (nl > 0) {
        std::vector<int> rows = rows_free_of(right);
        std::optional<PieceGrid> sub;
        if (!rows.empty()) {
            std::vector<Cell> cells;
            for (Cell c : left) cells.push_back({compress(rows, c.row), c.col});
            sub = varpi(RookPlacement(static_cast<int>(rows.size()), nl, cells)).pieces();
        }
        PieceGrid part = restitute_rows(sub, m, nl, rows);
        for (int row = 1; row <= m; ++row)
            for (int c = 1; c <= nl; ++c) full.at(row, c) = part.at(row, c);
    }
    if (nr > 0) {
        std::vector<int> rows = rows_free_of(left);
        std::optional<PieceGrid> sub;
        if (!rows.empty()) {
            const int rm = static_cast<int>(rows.size());
            std::vector<Cell> cells;
            for (Cell c : right) cells.push_back(flip_cell({compress(rows, c.row), c.col - nl}, rm, nr));
            sub = central_flip_swap(varpi(RookPlacement(rm, nr, cells))).pieces();
        }
        PieceGrid part = restitute_rows(sub, m, nr, rows);
        for (int row = 1; row <= m; ++row)
            for (int c = 1; c <= nr; ++c) full.at(row, nl + c) = part.at(row, c);
    }
    return checked_from_pieces(full);
}

RookPlacement transpose(const RookPlacement& r) {
    std::vector<Cell> cells;
    for (Cell c : r.rooks()) cells.push_back({c.col, c.row});
    return RookPlacement(r.n(), r.m(), std::move(cells));
}

RookPlacement central_flip(const RookPlacement& r) {
    std::vector<Cell> cells;
    for (Cell c : r.rooks()) cells.push_back(flip_cell(c, r.m(), r.n()));
    return RookPlacement(r.m(), r.n(), std::move(cells));
}

RookPlacement pi_h(const Maze& m, int mu, int md) { return transpose(pi_v(transpose(m), mu, md)); }

Maze varpi_h(const RookPlacement& r, int mu, int md) { return transpose(varpi_v(transpose(r), mu, md)); }

Maze iota(const Maze& m) {
    require_valid(m);
    return central_flip_swap(m);
}

bool is_centrally_symmetric(const Maze& m) { return iota(m) == m; }

Maze insert_middle_column(const Maze& mz) {
    const int m = mz.m(), n = mz.n();
    if (m % 2 || n % 2) throw DomainError("insert_middle_column needs even dimensions");
    if (!is_centrally_symmetric(mz)) throw DomainError("maze is not centrally symmetric");
    const int a = m / 2, b = n / 2;
    PieceGrid g = mz.pieces();
    bool split = true;
    for (int r = 1; r <= m; ++r) split = split && !opens_east(g.at(r, b));
    if (split) {
        PieceGrid out(m, n + 1);
        for (int r = 1; r <= m; ++r) {
            for (int c = 1; c <= b; ++c) out.at(r, c) = g.at(r, c);
            out.at(r, b + 1) = Piece::Vertical;
            for (int c = b + 1; c <= n; ++c) out.at(r, c + 1) = g.at(r, c);
        }
        return checked_from_pieces(out);
    }
    RookPlacement rooks = pi_v(mz, b, b);
    std::vector<Cell> cells;
    for (Cell c : rooks.rooks()) cells.push_back({c.row, c.col <= b ? c.col : c.col + 1});
    int free_row = 0;
    for (int r = a + 1; r <= m && !free_row; ++r)
        if (!rooks.col_of_row(r)) free_row = r;
    if (!free_row) throw std::logic_error("non-split symmetric maze with all rows occupied");
    cells.push_back({free_row, b + 1});
    return varpi_v(RookPlacement(m, n + 1, std::move(cells)), b + 1, b);
}

Maze insert_middle_row(const Maze& m) { return transpose(insert_middle_column(transpose(m))); }

ColoredPermutation phi(const Maze& m) {
    if (m.m() != m.n()) throw DomainError("phi needs a square maze");
    require_valid(m);
    const int n = m.n();
    std::vector<int> w(n, 0);
    std::set<int> blue;
    for (const Wall& wall : m.walls())
        for (auto [cell, mk] : wall.corners()) {
            bool take = (wall.kind == WallKind::I && mk == Marker::X) || (wall.kind == WallKind::II && mk == Marker::O);
            if (!take) continue;
            if (w[cell.row - 1]) throw std::logic_error("phi graph is not a permutation");
            w[cell.row - 1] = cell.col;
            if (mk == Marker::X) blue.insert(cell.row);
        }
    return ColoredPermutation(std::move(w), std::move(blue));
}

std::optional<Maze> varphi(const ColoredPermutation& cp, std::string* reason) {
    const int n = cp.size();
    auto fail = [&](const std::string& why) -> std::optional<Maze> {
        if (reason) *reason = why;
        return std::nullopt;
    };
    if (n == 0) return fail("empty permutation");
    std::vector<Cell> blue, red_flipped;
    for (int i = 1; i <= n; ++i) {
        if (cp.is_blue(i))
            blue.push_back({i, cp(i)});
        else
            red_flipped.push_back(flip_cell({i, cp(i)}, n, n));
    }
    std::vector<Wall> walls = peel(blue, n, n);
    for (const Wall& w : peel(red_flipped, n, n)) {
        Wall back{WallKind::II, {}};
        for (auto it = w.path.rbegin(); it != w.path.rend(); ++it) back.path.push_back(flip_cell(*it, n, n));
        walls.push_back(std::move(back));
    }
    Maze m(n, n, std::move(walls));
    ValidationReport rep = validate_maze(m);
    if (!rep.ok()) return fail(rep.violations.front());
    if (phi(m) != cp) return fail("phi does not return the input");
    return m;
}

bool in_rb(const ColoredPermutation& c) { return varphi(c).has_value(); }

std::vector<ColoredPermutation> rb_elements(int n) {
    std::vector<ColoredPermutation> out;
    for (const auto& w : all_permutations(n))
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::set<int> blue;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) blue.insert(i + 1);
            ColoredPermutation c(w, std::move(blue));
            if (in_rb(c)) out.push_back(std::move(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

RbMembership rb_subset_tests(const ColoredPermutation& c, int m) {
    const int n = c.size();
    if (m < 0 || m >= n) throw DomainError("need 0 <= M < N");
    if (!in_rb(c)) throw DomainError("colored permutation is not in RB_N");
    RbMembership res;
    res.upper = c.is_blue(m + 1);
    for (int i = m + 2; i <= n; ++i) res.upper = res.upper && !c.is_blue(i);
    res.rb_mn = res.upper;
    for (int i = m + 1; i < n; ++i) res.rb_mn = res.rb_mn && c(i) > c(i + 1);
    return res;
}

RookPlacement rho(const ColoredPermutation& c, int m) {
    if (!rb_subset_tests(c, m).rb_mn) throw DomainError("colored permutation is not in RB_{M,N}");
    const int n = c.size();
    std::vector<int> w = c.w();
    std::set<int> blue = c.blue();
    for (int k = 1; k <= n - m; ++k) w[m + k - 1] = c(n + 1 - k);
    for (int i = m + 2; i <= n; ++i) blue.insert(i);
    auto maze = varphi(ColoredPermutation(std::move(w), std::move(blue)));
    if (!maze) throw std::logic_error("rearranged colored permutation left the valid set");
    std::vector<Cell> cells;
    const RookPlacement full = pi(*maze);
    for (Cell x : full.rooks())
        if (x.row <= m) cells.push_back(x);
    return RookPlacement(m, n, std::move(cells));
}

ColoredPermutation varrho(const RookPlacement& r) {
    const int m = r.m(), n = r.n();
    if (m >= n) throw DomainError("varrho needs M < N");
    Maze small = varpi(r);
    PieceGrid g = small.pieces();
    PieceGrid big(n, n);
    for (int row = 1; row <= m; ++row)
        for (int c = 1; c <= n; ++c) big.at(row, c) = g.at(row, c);
    // Type-III walls, left to right, turn west at rows M+1, M+2, ...; type-II walls continue straight down.
    int turned = 0;
    std::vector<const Wall*> bottom;
    for (const Wall& w : small.walls())
        if (w.kind == WallKind::II || w.kind == WallKind::III) bottom.push_back(&w);
    std::sort(bottom.begin(), bottom.end(), [](const Wall* a, const Wall* b) { return a->path.back().col < b->path.back().col; });
    for (const Wall* w : bottom) {
        const int col = w->path.back().col;
        if (w->kind == WallKind::II) {
            for (int row = m + 1; row <= n; ++row) big.at(row, col) = Piece::Vertical;
            continue;
        }
        const int turn = m + (++turned);
        for (int row = m + 1; row < turn; ++row) big.at(row, col) = Piece::Vertical;
        big.at(turn, col) = Piece::X;
        for (int c = 1; c < col; ++c) {
            if (big.at(turn, c) != Piece::Empty) throw std::logic_error("maze extension collides");
            big.at(turn, c) = Piece::Horizontal;
        }
    }
    ColoredPermutation wb = phi(checked_from_pieces(big));
    std::vector<int> w = wb.w();
    std::set<int> blue = wb.blue();
    for (int k = 1; k <= n - m; ++k) w[m + k - 1] = wb(n + 1 - k);
    for (int i = m + 2; i <= n; ++i) blue.erase(i);
    return ColoredPermutation(std::move(w), std::move(blue));
}

RookPlacement fourier(const RookPlacement& r) { return pi(iota(varpi(r))); }

}  // namespace rookmaze
