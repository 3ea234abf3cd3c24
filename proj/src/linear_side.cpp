#include "rookmaze/linear_side.hpp"

#include "rookmaze/bijections.hpp"
#include "rookmaze/codec.hpp"

namespace rookmaze {

namespace {

// Unknown upper-triangular blocks stacked into one coordinate vector.
struct UpperBlocks {
    std::vector<int> sizes;
    std::vector<int> offsets;
    int total = 0;

    explicit UpperBlocks(std::vector<int> s) : sizes(std::move(s)) {
        for (int n : sizes) {
            offsets.push_back(total);
            total += n * (n + 1) / 2;
        }
    }
    // Coordinate index of entry (i, j), i <= j, of block b.
    int index(int b, int i, int j) const {
        const int n = sizes[b];
        return offsets[b] + i * n - i * (i - 1) / 2 + (j - i);
    }
    // The matrices of all blocks for coordinate vector v.
    std::vector<QMatrix> unpack(const std::vector<Rational>& v) const {
        std::vector<QMatrix> out;
        for (std::size_t b = 0; b < sizes.size(); ++b) {
            QMatrix m(sizes[b], sizes[b]);
            for (int i = 0; i < sizes[b]; ++i)
                for (int j = i; j < sizes[b]; ++j) m(i, j) = v[index(static_cast<int>(b), i, j)];
            out.push_back(std::move(m));
        }
        return out;
    }
    std::vector<Rational> unit(int k) const {
        std::vector<Rational> v(total, Rational(0));
        v[k] = 1;
        return v;
    }
};

void flatten_into(std::vector<Rational>& out, const QMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
}

// Given a linear map from the block coordinates to residuals, decide whether its kernel
// contains a point with every diagonal entry nonzero.
template <class Residual>
bool kernel_has_invertible_point(const UpperBlocks& blocks, Residual residual) {
    std::vector<std::vector<Rational>> columns;
    for (int k = 0; k < blocks.total; ++k) columns.push_back(residual(blocks.unpack(blocks.unit(k))));
    const int eqs = columns.empty() ? 0 : static_cast<int>(columns[0].size());
    QMatrix system(eqs, blocks.total);
    for (int k = 0; k < blocks.total; ++k)
        for (int e = 0; e < eqs; ++e) system(e, k) = columns[k][e];
    auto kernel = nullspace(system);
    for (std::size_t b = 0; b < blocks.sizes.size(); ++b)
        for (int i = 0; i < blocks.sizes[b]; ++i) {
            const int k = blocks.index(static_cast<int>(b), i, i);
            bool seen = false;
            for (const auto& v : kernel)
                if (!is_zero(v[k])) seen = true;
            if (!seen) return false;
        }
    return true;
}

void require_upper_invertible(const QMatrix& g, int n, const char* what) {
    if (g.rows() != n || g.cols() != n || !g.is_upper() || is_zero(det(g)))
        throw DomainError(std::string(what) + " must be an invertible upper-triangular matrix of size " + std::to_string(n));
}

}  // namespace

QuotientPoint act(const QuotientPoint& p, const QMatrix& g, const QMatrix& h) {
    p.check();
    const int hf = p.half();
    require_upper_invertible(g, p.model_rows(), "g");
    require_upper_invertible(h, p.model_cols(), "h");
    QMatrix h11 = h.block(0, 0, hf, hf), h22 = h.block(hf, hf, hf, hf);
    QuotientPoint q = p;
    q.c = g * p.c * inverse(h11);
    q.dt = h22 * p.dt * inverse(g);
    return q;
}

bool same_orbit(const QuotientPoint& p, const QuotientPoint& q) {
    p.check();
    q.check();
    if (p.orientation != q.orientation || p.m != q.m || p.n != q.n) return false;
    const int mr = p.model_rows(), hf = p.half();
    UpperBlocks blocks({mr, hf, hf});
    return kernel_has_invertible_point(blocks, [&](const std::vector<QMatrix>& u) {
        std::vector<Rational> r;
        flatten_into(r, u[0] * p.c - q.c * u[1]);
        flatten_into(r, u[2] * p.dt - q.dt * u[0]);
        return r;
    });
}

bool same_borel_orbit(const QMatrix& x, const QMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    UpperBlocks blocks({x.rows(), x.cols()});
    return kernel_has_invertible_point(blocks, [&](const std::vector<QMatrix>& u) {
        std::vector<Rational> r;
        flatten_into(r, u[0] * x - y * u[1]);
        return r;
    });
}

QuotientPoint representative_point(const Maze& maze, Split orientation) {
    if (orientation == Split::Row) {
        if (maze.m() % 2) throw DomainError("row split needs an even number of rows");
        QuotientPoint p = representative_point(transpose(maze), Split::Column);
        p.orientation = Split::Row;
        p.m = maze.m();
        p.n = maze.n();
        return p;
    }
    if (maze.n() % 2) throw DomainError("column split needs an even number of columns");
    const int hf = maze.n() / 2;
    auto [xs, os] = markers(maze);
    QMatrix c(maze.m(), hf), dt(hf, maze.m());
    for (Cell x : xs.rooks())
        if (x.col <= hf) c(x.row - 1, x.col - 1) = 1;
    for (Cell o : os.rooks())
        if (o.col > hf) dt(o.col - hf - 1, o.row - 1) = 1;
    return make_quotient_point(Split::Column, maze.m(), maze.n(), std::move(c), std::move(dt));
}

std::pair<QMatrix, QMatrix> iota_point(const QMatrix& a, const QMatrix& b, const FormSpec& form_m, const FormSpec& form_n) {
    if (a.rows() != form_m.size || a.cols() != form_n.size || b.rows() != form_n.size || b.cols() != form_m.size)
        throw DomainError("iota: matrix shapes do not match the forms");
    QMatrix fm = form_m.matrix<Rational>(), fn = form_n.matrix<Rational>();
    QMatrix a_adj = inverse(fn) * a.transpose() * fm;
    QMatrix b_adj = inverse(fm) * b.transpose() * fn;
    return {b_adj, -a_adj};
}

bool is_iota_fixed(const QuotientPoint& p, const FormSpec& form_m, const FormSpec& form_n) {
    auto [a, b] = lift(p, zero_fiber(p));
    auto [a2, b2] = iota_point(a, b, form_m, form_n);
    return a2 == a && b2 == b;
}

QuotientPoint symmetric_representative_point(const Maze& maze) {
    QuotientPoint p = representative_point(maze, Split::Column);
    p.dt = -p.dt;
    return p;
}

bool symmetric_relevance(const QuotientPoint& p, const FormSpec& form_m, const FormSpec& form_n) {
    if (!is_iota_fixed(p, form_m, form_n)) throw DomainError("point is not fixed by iota");
    for (const Rational& v : stabilizer_pairings(p, zero_fiber(p), std::make_optional(std::make_pair(form_m, form_n))))
        if (!is_zero(v)) return false;
    return true;
}

QMatrix half_supercommutator(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.cols() || a.cols() != b.rows()) throw DomainError("shape mismatch");
    const int m = a.rows(), n = a.cols();
    QMatrix x(m + n, m + n);
    x.set_block(0, m, a);
    x.set_block(m, 0, b);
    return x * x;
}

bool super_moment_nilpotent(const QMatrix& a, const QMatrix& b) { return half_supercommutator(a, b).is_strictly_upper(); }

FourierCertificate fourier_certificate(const RookPlacement& r) {
    const int m = r.m(), n = r.n();
    auto [xs, os] = markers(varpi(r));
    QMatrix w0 = QMatrix::antidiagonal(m);
    FourierCertificate cert{w0 * rook_matrix<Rational>(xs), rook_matrix<Rational>(os).transpose() * w0, false,
                            RookPlacement(m, n, {}), RookPlacement(m, n, {})};
    cert.lambda_ok = lambda_member(cert.a, cert.b);
    std::vector<Cell> first, second;
    const RookPlacement left = rook_normal_form(cert.a), right = rook_normal_form(cert.b);
    for (Cell c : left.rooks()) first.push_back({m + 1 - c.row, c.col});
    for (Cell c : right.rooks()) second.push_back({c.col, n + 1 - c.row});
    cert.factor1 = RookPlacement(m, n, std::move(first));
    cert.factor2 = RookPlacement(m, n, std::move(second));
    return cert;
}

std::string encode_matrix(const QMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows.dump();
}

QMatrix decode_matrix(const std::string& text) {
    Json j = parse_json(text);
    if (!j.is_array()) throw DomainError("parse error at matrix: expected array of rows");
    const int rows = static_cast<int>(j.size());
    int cols = -1;
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array()) throw DomainError("parse error at matrix[" + std::to_string(i) + "]: expected array");
        if (cols < 0) cols = static_cast<int>(j[i].size());
        if (static_cast<int>(j[i].size()) != cols) throw DomainError("parse error at matrix[" + std::to_string(i) + "]: ragged row");
    }
    QMatrix m(rows, cols < 0 ? 0 : cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Json& e = j[i][k];
            const std::string where = "matrix[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            if (e.is_number_integer()) {
                m(i, k) = Rational(std::to_string(e.get<long long>()));
            } else if (e.is_string()) {
                try {
                    m(i, k) = parse_rational(e.get<std::string>());
                } catch (const DomainError& err) {
                    throw DomainError("parse error at " + where + ": " + err.what());
                }
            } else {
                throw DomainError("parse error at " + where + ": expected rational string");
            }
        }
    return m;
}

}  // namespace rookmaze
