#include "rookmaze/slice.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace rookmaze {

PatternGroup::PatternGroup(int n) : size(n), entries(static_cast<std::size_t>(n) * n, PatternEntry::Zero) {
    for (int i = 1; i <= n; ++i) at(i, i) = PatternEntry::One;
}

int PatternGroup::dimension() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                          [](PatternEntry e) { return e == PatternEntry::Free || e == PatternEntry::Unit; }));
}

PatternGroup upper_borel(int n) {
    PatternGroup g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) g.at(i, j) = i == j ? PatternEntry::Unit : PatternEntry::Free;
    return g;
}

namespace {

void check_rsk(int m, int n, int r, int s) {
    if (m < 1 || m >= n) throw DomainError("slice parameters need 1 <= M < N");
    if (r < 0 || s < 0 || r + s != n - m - 1) throw DomainError("slice parameters need r, s >= 0 and r + s = N - M - 1");
}

void check_k(int n, int r, int s, int k) {
    if (k < r + 1 || k > n - s) throw DomainError("slice parameter k must satisfy r + 1 <= k <= N - s");
}

void check_even(int m, int n) {
    if (m < 1 || m >= n || m % 2 || n % 2) throw DomainError("middle slice needs even 1 <= M < N");
}

// Upper unitriangular outside [lo, hi], torus on [lo, hi] minus `skip`, all upper entries free
// except those with one index equal to `skip` inside [lo, hi].
PatternGroup block_pattern(int n, int lo, int hi, int skip) {
    PatternGroup g(n);
    auto inside = [&](int a) { return a >= lo && a <= hi; };
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) {
            if (a == b) {
                g.at(a, a) = inside(a) && a != skip ? PatternEntry::Unit : PatternEntry::One;
                continue;
            }
            const bool blocked = inside(a) && inside(b) && (a == skip || b == skip);
            g.at(a, b) = blocked ? PatternEntry::Zero : PatternEntry::Free;
        }
    return g;
}

}  // namespace

PatternGroup slice_subgroup(int m, int n, int r, int s, int k) {
    check_rsk(m, n, r, s);
    check_k(n, r, s, k);
    return block_pattern(n, r + 1, n - s, k);
}

PatternGroup projection_subgroup(int m, int n, int r, int s) {
    check_rsk(m, n, r, s);
    if (s < 1) throw DomainError("projection subgroup needs s >= 1");
    return block_pattern(n, r + 2, n - s, 0);
}

PatternGroup middle_subgroup(int m, int n) {
    check_even(m, n);
    const int u = (n - m) / 2, half = n / 2, first = u, last = n - u + 1;
    PatternGroup g = block_pattern(n, u + 1, n - u, 0);
    for (int a = first; a <= last; ++a)
        for (int b = a + 1; b <= last; ++b) {
            const bool central = a > first && b < last;
            const bool heisenberg = (a == first && b > half) || (b == last && a <= half);
            if (!central && !heisenberg) g.at(a, b) = PatternEntry::Zero;
        }
    return g;
}

CharacterSpec slice_character(int m, int n, int r, int s, int k) {
    check_rsk(m, n, r, s);
    check_k(n, r, s, k);
    CharacterSpec psi;
    for (int i = 1; i < r; ++i) psi.terms.emplace_back(i, i + 1, 1);
    if (r >= 1) psi.terms.emplace_back(r, k, 1);
    if (s >= 1) psi.terms.emplace_back(k, n - s + 1, 1);
    for (int i = n - s + 1; i < n; ++i) psi.terms.emplace_back(i, i + 1, 1);
    return psi;
}

CharacterSpec middle_character(int m, int n) {
    check_even(m, n);
    const int u = (n - m) / 2;
    CharacterSpec psi;
    for (int i = 1; i < u; ++i) psi.terms.emplace_back(i, i + 1, 1);
    psi.terms.emplace_back(u, n - u + 1, 1);
    for (int i = n - u + 1; i < n; ++i) psi.terms.emplace_back(i, i + 1, 1);
    return psi;
}

bool coset_relevant(const QMatrix& g, const PatternGroup& h, const CharacterSpec& psi) {
    const int n = h.size;
    if (g.rows() != n || g.cols() != n) throw DomainError("coset_relevant: size mismatch");
    const QMatrix ginv = inverse(g);
    std::vector<std::pair<int, int>> basis;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (h.at(a, b) == PatternEntry::Free || h.at(a, b) == PatternEntry::Unit) basis.emplace_back(a, b);
    const int lower = n * (n - 1) / 2;
    QMatrix system(lower, static_cast<int>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        QMatrix e(n, n);
        e(basis[k].first - 1, basis[k].second - 1) = 1;
        QMatrix conj = ginv * e * g;
        int row = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) system(row++, static_cast<int>(k)) = conj(i, j);
    }
    for (const auto& v : nullspace(system)) {
        Rational value = 0;
        for (const auto& [a, b, coef] : psi.terms) {
            auto it = std::find(basis.begin(), basis.end(), std::make_pair(a, b));
            if (it != basis.end()) value += coef * v[it - basis.begin()];
        }
        if (!is_zero(value)) return false;
    }
    return true;
}

QMatrix slice_representative_A(const std::vector<int>& w, const std::vector<int>& sigma, int m, int n) {
    if (static_cast<int>(w.size()) != n) throw DomainError("w must be a permutation of 1..N");
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) throw DomainError("w must be a permutation of 1..N");
    if (m < 0 || m >= n) throw DomainError("slice_representative_A needs 0 <= M < N");
    if (sigma.empty()) throw DomainError("sigma must be non-empty");
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] < 1 || sigma[i] > n) throw DomainError("sigma entries must lie in 1..N");
        if (i > 0 && sigma[i] >= sigma[i - 1]) throw DomainError("sigma must be strictly decreasing");
    }
    QMatrix a(n, n);
    for (int i = 0; i < n; ++i) a(i, w[i] - 1) = 1;
    for (int kk : sigma)
        if (kk <= m) a(m, kk - 1) += 1;
    return a;
}

Maze extend_type_three(const Maze& maze, int r, int s) {
    require_valid(maze);
    const int m = maze.m(), n = maze.n(), rows = m + r + s;
    std::vector<const Wall*> threes;
    for (const Wall& w : maze.walls())
        if (w.kind == WallKind::III) threes.push_back(&w);
    std::sort(threes.begin(), threes.end(), [](const Wall* a, const Wall* b) { return a->path.front().col < b->path.front().col; });
    const int t = static_cast<int>(threes.size());
    if (r < 0 || s < 0 || r + s > t) throw DomainError("not enough type-III walls to extend");

    std::vector<Wall> walls;
    for (const Wall& w : maze.walls()) {
        const int top = w.path.front().col, bottom = w.path.back().col;
        std::vector<Cell> shifted;
        for (Cell c : w.path) shifted.push_back({c.row + r, c.col});
        auto up_through = [&](std::vector<Cell>& out) {
            for (int row = 1; row <= r; ++row) out.push_back({row, top});
        };
        auto down_through = [&](std::vector<Cell>& out) {
            for (int row = m + r + 1; row <= rows; ++row) out.push_back({row, bottom});
        };
        Wall out{w.kind, {}};
        if (w.kind == WallKind::I) {
            up_through(out.path);
            out.path.insert(out.path.end(), shifted.begin(), shifted.end());
        } else if (w.kind == WallKind::II) {
            out.path = shifted;
            down_through(out.path);
        } else if (w.kind == WallKind::IV) {
            out.path = shifted;
        } else {
            const int j = static_cast<int>(std::find(threes.begin(), threes.end(), &w) - threes.begin());
            if (j < s) {
                out.kind = WallKind::I;
                up_through(out.path);
                out.path.insert(out.path.end(), shifted.begin(), shifted.end());
                const int turn = m + r + 1 + j;
                for (int row = m + r + 1; row <= turn; ++row) out.path.push_back({row, bottom});
                for (int c = bottom - 1; c >= 1; --c) out.path.push_back({turn, c});
            } else if (j >= t - r) {
                out.kind = WallKind::II;
                const int turn = r - (t - 1 - j);
                for (int c = n; c >= top; --c) out.path.push_back({turn, c});
                for (int row = turn + 1; row <= r; ++row) out.path.push_back({row, top});
                out.path.insert(out.path.end(), shifted.begin(), shifted.end());
                down_through(out.path);
            } else {
                up_through(out.path);
                out.path.insert(out.path.end(), shifted.begin(), shifted.end());
                down_through(out.path);
            }
        }
        walls.push_back(std::move(out));
    }
    Maze ext(rows, n, std::move(walls));
    require_valid(ext);
    return ext;
}

namespace {

const Wall& wall_through(const Maze& m, Cell c) {
    for (const Wall& w : m.walls())
        if (std::find(w.path.begin(), w.path.end(), c) != w.path.end()) return w;
    throw DomainError("no wall through the given cell");
}

// Column where a wall crosses from row `above` to row above + 1.
int crossing_column(const Wall& w, int above) {
    int col = -1;
    for (Cell c : w.path)
        if (c.row == above) col = c.col;
    if (col < 0) throw DomainError("wall does not cross the given row");
    return col;
}

// Permutation matrix from rooks (one per row and column), with the rows in [1, top] and
// [bottom, n] reversed.
QMatrix reversed_permutation(const std::vector<Cell>& rooks, int n, int top, int bottom) {
    std::set<int> rows, cols;
    for (Cell c : rooks) {
        rows.insert(c.row);
        cols.insert(c.col);
    }
    if (static_cast<int>(rooks.size()) != n || static_cast<int>(rows.size()) != n || static_cast<int>(cols.size()) != n)
        throw DomainError("rook placement of the extended maze is not a permutation");
    QMatrix a(n, n);
    for (Cell c : rooks) {
        int row = c.row;
        if (row <= top)
            row = top + 1 - row;
        else if (row >= bottom)
            row = bottom + n - row;
        a(row - 1, c.col - 1) = 1;
    }
    return a;
}

}  // namespace

QMatrix slice_representative_A_rsk(const Maze& maze, int r, int s, int k) {
    const int m = maze.m(), n = maze.n();
    check_rsk(m, n, r, s);
    check_k(n, r, s, k);
    Maze ext = extend_type_three(maze, r, s);
    const Wall* middle = nullptr;
    for (const Wall& w : ext.walls())
        if (w.kind == WallKind::III) middle = &w;
    if (!middle) throw DomainError("extended maze has no type-III wall");
    const int i = k == 1 ? middle->path.front().col : k == n ? middle->path.back().col : crossing_column(*middle, k - 1);
    auto lift_row = [k](int row) { return row < k ? row : row + 1; };

    std::vector<Cell> rooks{{k, i}};
    for (const Wall& w : ext.walls())
        for (const auto& [cell, marker] : w.corners()) {
            const Cell at{lift_row(cell.row), cell.col};
            const bool above = cell.row < k;
            if (&w == middle) {
                if ((marker == Marker::X && above) || (marker == Marker::O && !above)) rooks.push_back(at);
            } else if ((w.kind == WallKind::I && marker == Marker::X) || (w.kind == WallKind::II && marker == Marker::O)) {
                rooks.push_back(at);
            }
        }
    QMatrix a = reversed_permutation(rooks, n, r, n - s + 1);
    for (const auto& [cell, marker] : middle->corners()) {
        if (cell.row < k)
            a(cell.row - 1, i - 1) = 1;
        else
            a(k - 1, cell.col - 1) = 1;
    }
    return a;
}

QMatrix slice_representative_E(const Maze& maze) {
    const int m = maze.m(), n = maze.n();
    check_even(m, n);
    const int u = (n - m) / 2, half = n / 2;
    std::vector<Cell> tops;
    for (const Wall& w : maze.walls())
        if (w.kind == WallKind::III) tops.push_back(w.path.front());
    std::sort(tops.begin(), tops.end(), [](Cell a, Cell b) { return a.col < b.col; });
    Maze ext = extend_type_three(maze, u, u);
    const Wall& left = wall_through(ext, {tops[u - 1].row + u, tops[u - 1].col});
    const Wall& right = wall_through(ext, {tops[u].row + u, tops[u].col});

    std::vector<Cell> rooks;
    for (const Wall& w : ext.walls())
        for (const auto& [cell, marker] : w.corners())
            if ((w.kind == WallKind::I && marker == Marker::X) || (w.kind == WallKind::II && marker == Marker::O)) rooks.push_back(cell);
    QMatrix a = reversed_permutation(rooks, n, u, n - u + 1);

    const int upper_row = u, lower_row = n - u + 1;
    for (const auto& [cell, marker] : right.corners())
        if (cell.row <= half) a(upper_row - 1, cell.col - 1) = 1;
    a(upper_row - 1, crossing_column(right, half) - 1) = 1;
    for (const auto& [cell, marker] : left.corners())
        if (cell.row > half) a(lower_row - 1, cell.col - 1) = 1;
    a(lower_row - 1, crossing_column(left, half) - 1) = 1;
    return a;
}

QMatrix cycle_rows(const QMatrix& a, int k, int k2) {
    if (k < 1 || k2 < k || k2 > a.rows()) throw DomainError("cycle_rows needs 1 <= k <= k2 <= rows");
    QMatrix out = a;
    for (int j = 0; j < a.cols(); ++j) {
        out(k2 - 1, j) = a(k - 1, j);
        for (int row = k; row < k2; ++row) out(row - 1, j) = a(row, j);
    }
    return out;
}

QMatrix iota_group(const QMatrix& g, bool symplectic) {
    const int n = g.rows();
    FormSpec form{n, symplectic ? FormKind::Symplectic : FormKind::Orthogonal};
    QMatrix j = form.matrix<Rational>();
    QMatrix out = j * inverse(g).transpose() * j;
    return symplectic ? -out : out;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

int primitive_root(int q) {
    for (int g = 1; g < q; ++g) {
        int x = 1, order = 0;
        do {
            x = x * g % q;
            ++order;
        } while (x != 1);
        if (order == q - 1) return g;
    }
    return 1;
}

int reduce_entry(const Rational& x, int q) {
    mpz_class num = x.get_num() % q, den = x.get_den() % q;
    if (num < 0) num += q;
    if (den == 0) throw DomainError("entry denominator vanishes modulo " + std::to_string(q));
    int d = static_cast<int>(den.get_si()), inv = 1;
    while (d * inv % q != 1) ++inv;
    return static_cast<int>(num.get_si()) * inv % q;
}

// Orbit exploration for X -> g X h over F_q with pattern generators.
class FqOrbits {
public:
    FqOrbits(const PatternGroup& left, const PatternGroup& right, int q, const FqLimits& limits)
        : left_(left), right_(right), q_(q), rows_(left.size), cols_(right.size), limits_(limits) {
        if (!is_prime(q) || q > 13) throw DomainError("q must be a prime not exceeding 13");
        root_ = primitive_root(q);
        states_ = 1;
        for (int i = 0; i < rows_ * cols_; ++i) {
            if (states_ > (std::uint64_t{1} << 62) / q) throw DomainError("matrix space too large to encode");
            states_ *= q;
        }
        power_.resize(rows_ * cols_);
        std::uint64_t p = 1;
        for (int i = 0; i < rows_ * cols_; ++i, p *= q) power_[i] = p;
    }

    std::uint64_t states() const { return states_; }

    std::uint64_t encode(const QMatrix& a) const {
        if (a.rows() != rows_ || a.cols() != cols_) throw DomainError("matrix shape does not match the subgroups");
        std::uint64_t code = 0;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) code += power_[i * cols_ + j] * reduce_entry(a(i, j), q_);
        return code;
    }

    // Visits the orbit of `start`; stops early when `stop` returns true for a state.
    template <class Visited, class Stop>
    bool explore(std::uint64_t start, Visited& visited, Stop stop) const {
        std::deque<std::uint64_t> queue{start};
        visited.insert(start);
        std::vector<int> x(rows_ * cols_), y;
        std::uint64_t seen = 1;
        while (!queue.empty()) {
            std::uint64_t code = queue.front();
            queue.pop_front();
            if (stop(code)) return true;
            decode(code, x);
            auto push = [&](const std::vector<int>& z) {
                std::uint64_t c = 0;
                for (std::size_t t = 0; t < z.size(); ++t) c += power_[t] * z[t];
                if (visited.insert(c)) {
                    if (++seen > limits_.max_states) throw ResourceLimit("double coset exploration exceeded the state ceiling");
                    queue.push_back(c);
                }
            };
            for (int a = 1; a <= rows_; ++a)
                for (int b = 1; b <= rows_; ++b) {
                    PatternEntry e = left_.at(a, b);
                    if (a != b && e == PatternEntry::Free) {
                        y = x;
                        for (int j = 0; j < cols_; ++j) y[(a - 1) * cols_ + j] = (y[(a - 1) * cols_ + j] + x[(b - 1) * cols_ + j]) % q_;
                        push(y);
                    } else if (a == b && e == PatternEntry::Unit && q_ > 2) {
                        y = x;
                        for (int j = 0; j < cols_; ++j) y[(a - 1) * cols_ + j] = y[(a - 1) * cols_ + j] * root_ % q_;
                        push(y);
                    }
                }
            for (int a = 1; a <= cols_; ++a)
                for (int b = 1; b <= cols_; ++b) {
                    PatternEntry e = right_.at(a, b);
                    if (a != b && e == PatternEntry::Free) {
                        y = x;
                        for (int i = 0; i < rows_; ++i) y[i * cols_ + b - 1] = (y[i * cols_ + b - 1] + x[i * cols_ + a - 1]) % q_;
                        push(y);
                    } else if (a == b && e == PatternEntry::Unit && q_ > 2) {
                        y = x;
                        for (int i = 0; i < rows_; ++i) y[i * cols_ + a - 1] = y[i * cols_ + a - 1] * root_ % q_;
                        push(y);
                    }
                }
        }
        return false;
    }

private:
    void decode(std::uint64_t code, std::vector<int>& x) const {
        for (int t = 0; t < rows_ * cols_; ++t) {
            x[t] = static_cast<int>(code % q_);
            code /= q_;
        }
    }

    const PatternGroup& left_;
    const PatternGroup& right_;
    int q_, rows_, cols_, root_ = 1;
    FqLimits limits_;
    std::uint64_t states_ = 1;
    std::vector<std::uint64_t> power_;
};

struct HashVisited {
    std::unordered_set<std::uint64_t> set;
    bool insert(std::uint64_t c) { return set.insert(c).second; }
};

struct BitVisited {
    std::vector<bool> bits;
    bool insert(std::uint64_t c) {
        if (bits[c]) return false;
        bits[c] = true;
        return true;
    }
};

}  // namespace

bool double_coset_equal_Fq(const QMatrix& a, const QMatrix& b, const PatternGroup& left, const PatternGroup& right, int q,
                           const FqLimits& limits) {
    FqOrbits orbits(left, right, q, limits);
    const std::uint64_t start = orbits.encode(a), target = orbits.encode(b);
    HashVisited visited;
    return orbits.explore(start, visited, [&](std::uint64_t c) { return c == target; });
}

std::uint64_t count_double_cosets_Fq(const PatternGroup& left, const PatternGroup& right, int q, const FqLimits& limits) {
    FqOrbits orbits(left, right, q, limits);
    if (orbits.states() > limits.max_states) throw ResourceLimit("matrix space exceeds the state ceiling");
    BitVisited visited{std::vector<bool>(orbits.states(), false)};
    std::uint64_t count = 0;
    for (std::uint64_t c = 0; c < orbits.states(); ++c) {
        if (visited.bits[c]) continue;
        ++count;
        orbits.explore(c, visited, [](std::uint64_t) { return false; });
    }
    return count;
}

}  // namespace rookmaze
