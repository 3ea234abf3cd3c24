#include "rookmaze/maze.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>

namespace rookmaze {

const char* to_string(WallKind k) {
    switch (k) {
        case WallKind::I: return "I";
        case WallKind::II: return "II";
        case WallKind::III: return "III";
        case WallKind::IV: return "IV";
    }
    return "?";
}

WallKind wall_kind_from_string(const std::string& s) {
    if (s == "I") return WallKind::I;
    if (s == "II") return WallKind::II;
    if (s == "III") return WallKind::III;
    if (s == "IV") return WallKind::IV;
    throw DomainError("unknown wall kind '" + s + "'");
}

bool opens_north(Piece p) { return p == Piece::Vertical || p == Piece::X; }
bool opens_south(Piece p) { return p == Piece::Vertical || p == Piece::O; }
bool opens_east(Piece p) { return p == Piece::Horizontal || p == Piece::O; }
bool opens_west(Piece p) { return p == Piece::Horizontal || p == Piece::X; }

namespace {

bool enters_from_top(WallKind k) { return k == WallKind::I || k == WallKind::III; }
bool exits_left(WallKind k) { return k == WallKind::I || k == WallKind::IV; }

WallKind kind_from_sides(bool top, bool left) {
    if (top) return left ? WallKind::I : WallKind::III;
    return left ? WallKind::IV : WallKind::II;
}

// Sort key realizing the canonical order: top boundary by column, left by row, right by row.
std::tuple<int, int> canonical_key(const Wall& w) {
    switch (w.kind) {
        case WallKind::I:
        case WallKind::III: return {0, w.path.front().col};
        case WallKind::IV: return {1, w.path.back().row};
        case WallKind::II: return {3, w.path.front().row};
    }
    return {4, 0};
}

}  // namespace

Piece Wall::piece_at(std::size_t i) const {
    bool from_north;
    if (i == 0) {
        from_north = enters_from_top(kind);
    } else {
        from_north = path[i - 1].col == path[i].col;
    }
    bool to_south;
    if (i + 1 == path.size()) {
        to_south = !exits_left(kind);
    } else {
        to_south = path[i + 1].col == path[i].col;
    }
    if (from_north) return to_south ? Piece::Vertical : Piece::X;
    return to_south ? Piece::O : Piece::Horizontal;
}

std::vector<std::pair<Cell, Marker>> Wall::corners() const {
    std::vector<std::pair<Cell, Marker>> out;
    for (std::size_t i = 0; i < path.size(); ++i) {
        Piece p = piece_at(i);
        if (p == Piece::X) out.emplace_back(path[i], Marker::X);
        if (p == Piece::O) out.emplace_back(path[i], Marker::O);
    }
    return out;
}

std::string PieceGrid::key() const {
    std::string s(cells.size(), '.');
    for (std::size_t i = 0; i < cells.size(); ++i) s[i] = static_cast<char>('0' + static_cast<int>(cells[i]));
    return s;
}

Maze::Maze(int m, int n, std::vector<Wall> walls) : m_(m), n_(n), walls_(std::move(walls)) {
    if (m < 1 || n < 1) throw DomainError("board dimensions must be positive");
    for (const Wall& w : walls_) {
        if (w.path.empty()) throw DomainError("empty wall path");
        for (const Cell& c : w.path)
            if (c.row < 1 || c.row > m || c.col < 1 || c.col > n)
                throw DomainError("wall path out of bounds");
    }
    std::stable_sort(walls_.begin(), walls_.end(),
                     [](const Wall& a, const Wall& b) { return canonical_key(a) < canonical_key(b); });
}

Maze Maze::from_pieces(const PieceGrid& g) {
    std::vector<char> seen(g.cells.size(), 0);
    std::vector<Wall> walls;
    auto trace = [&](Cell start, bool from_top) {
        Wall w{WallKind::I, {}};
        Cell cur = start;
        bool from_north = from_top;
        while (true) {
            Piece p = g.at(cur.row, cur.col);
            bool ok = from_north ? opens_north(p) : opens_east(p);
            if (!ok) throw DomainError("pieces do not connect");
            std::size_t idx = static_cast<std::size_t>(cur.row - 1) * g.n + (cur.col - 1);
            if (seen[idx]) throw DomainError("pieces do not connect");
            seen[idx] = 1;
            w.path.push_back(cur);
            if (opens_south(p)) {
                if (cur.row == g.m) {
                    w.kind = kind_from_sides(from_top, false);
                    break;
                }
                cur.row += 1;
                from_north = true;
            } else {
                if (cur.col == 1) {
                    w.kind = kind_from_sides(from_top, true);
                    break;
                }
                cur.col -= 1;
                from_north = false;
            }
        }
        walls.push_back(std::move(w));
    };
    for (int c = 1; c <= g.n; ++c)
        if (opens_north(g.at(1, c))) trace({1, c}, true);
    for (int r = 1; r <= g.m; ++r)
        if (opens_east(g.at(r, g.n))) trace({r, g.n}, false);
    for (std::size_t i = 0; i < g.cells.size(); ++i)
        if (g.cells[i] != Piece::Empty && !seen[i]) throw DomainError("pieces do not connect");
    return Maze(g.m, g.n, std::move(walls));
}

PieceGrid Maze::pieces() const {
    PieceGrid g(m_, n_);
    for (const Wall& w : walls_)
        for (std::size_t i = 0; i < w.path.size(); ++i) {
            Piece& slot = g.at(w.path[i].row, w.path[i].col);
            if (slot != Piece::Empty) throw DomainError("walls intersect");
            slot = w.piece_at(i);
        }
    return g;
}

ValidationReport validate_maze(const Maze& mz) {
    ValidationReport rep;
    auto flag = [&](const std::string& v) {
        if (std::find(rep.violations.begin(), rep.violations.end(), v) == rep.violations.end())
            rep.violations.push_back(v);
    };
    const int m = mz.m(), n = mz.n();
    bool geometry_ok = true;
    for (const Wall& w : mz.walls()) {
        for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
            Cell a = w.path[i], b = w.path[i + 1];
            int dr = b.row - a.row, dc = b.col - a.col;
            if ((dr == 1 && dc == 0) || (dr == 0 && dc == -1)) continue;
            geometry_ok = false;
            if (std::abs(dr) + std::abs(dc) != 1)
                flag("disconnected path");
            else
                flag("illegal bend");
        }
        Cell first = w.path.front(), last = w.path.back();
        bool start_ok = enters_from_top(w.kind) ? first.row == 1 : first.col == n;
        bool end_ok = exits_left(w.kind) ? last.col == 1 : last.row == m;
        if (!start_ok || !end_ok) flag("wrong endpoint");
    }
    // Which wall owns each cell, and which walls have vertical/horizontal runs in each column/row.
    std::vector<int> owner(static_cast<std::size_t>(m) * n, -1);
    std::vector<std::vector<int>> col_walls(n + 1), row_walls(m + 1);
    const auto& walls = mz.walls();
    for (std::size_t wi = 0; wi < walls.size(); ++wi) {
        const Wall& w = walls[wi];
        for (std::size_t i = 0; i < w.path.size(); ++i) {
            Cell c = w.path[i];
            int& o = owner[static_cast<std::size_t>(c.row - 1) * n + (c.col - 1)];
            if (o != -1) flag("walls intersect");
            o = static_cast<int>(wi);
            if (!geometry_ok) continue;
            Piece p = w.piece_at(i);
            auto add = [&](std::vector<int>& v) {
                if (std::find(v.begin(), v.end(), static_cast<int>(wi)) == v.end()) v.push_back(static_cast<int>(wi));
            };
            if (p != Piece::Horizontal) add(col_walls[c.col]);
            if (p != Piece::Vertical) add(row_walls[c.row]);
        }
    }
    if (geometry_ok) {
        for (int c = 1; c <= n; ++c) {
            if (col_walls[c].empty()) flag("column run missing");
            if (col_walls[c].size() > 1) flag("column run multiple");
        }
        for (int r = 1; r <= m; ++r) {
            if (row_walls[r].empty()) flag("row run missing");
            if (row_walls[r].size() > 1) flag("row run multiple");
        }
    }
    int n3 = 0, n4 = 0;
    for (const Wall& w : walls) {
        n3 += w.kind == WallKind::III;
        n4 += w.kind == WallKind::IV;
    }
    if (n3 != std::max(n - m, 0) || n4 != std::max(m - n, 0)) flag("wrong type count");
    if (geometry_ok) {
        std::vector<char> xr(m + 1), xc(n + 1), orow(m + 1), oc(n + 1);
        for (const Wall& w : walls)
            for (auto [cell, mk] : w.corners()) {
                auto& rr = mk == Marker::X ? xr : orow;
                auto& cc = mk == Marker::X ? xc : oc;
                if (rr[cell.row] || cc[cell.col]) flag(mk == Marker::X ? "x markers attack" : "o markers attack");
                rr[cell.row] = cc[cell.col] = 1;
            }
    }
    return rep;
}

bool is_valid(const Maze& m) { return validate_maze(m).ok(); }

void require_valid(const Maze& m) {
    ValidationReport rep = validate_maze(m);
    if (rep.ok()) return;
    std::string msg = "invalid maze:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw DomainError(msg);
}

std::pair<RookPlacement, RookPlacement> markers(const Maze& mz) {
    require_valid(mz);
    std::vector<Cell> xs, os;
    for (const Wall& w : mz.walls())
        for (auto [cell, mk] : w.corners()) (mk == Marker::X ? xs : os).push_back(cell);
    return {RookPlacement(mz.m(), mz.n(), xs), RookPlacement(mz.m(), mz.n(), os)};
}

Cell flip_cell(Cell c, int m, int n) { return {m + 1 - c.row, n + 1 - c.col}; }

Maze central_flip_swap(const Maze& mz) {
    std::vector<Wall> walls;
    for (const Wall& w : mz.walls()) {
        Wall f;
        f.kind = w.kind == WallKind::I ? WallKind::II : w.kind == WallKind::II ? WallKind::I : w.kind;
        for (auto it = w.path.rbegin(); it != w.path.rend(); ++it) f.path.push_back(flip_cell(*it, mz.m(), mz.n()));
        walls.push_back(std::move(f));
    }
    return Maze(mz.m(), mz.n(), std::move(walls));
}

Maze transpose(const Maze& mz) {
    std::vector<Wall> walls;
    for (const Wall& w : mz.walls()) {
        Wall t;
        t.kind = w.kind == WallKind::III ? WallKind::IV : w.kind == WallKind::IV ? WallKind::III : w.kind;
        for (auto it = w.path.rbegin(); it != w.path.rend(); ++it) t.path.push_back({it->col, it->row});
        walls.push_back(std::move(t));
    }
    return Maze(mz.n(), mz.m(), std::move(walls));
}

}  // namespace rookmaze
