#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rookmaze/core.hpp"
#include "rookmaze/matrix.hpp"
#include "rookmaze/maze.hpp"

namespace rookmaze {

using QMatrix = Matrix<Rational>;

// A*B and B*A both strictly upper triangular (A is M x N, B is N x M).
template <class F>
bool lambda_member(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.cols() || a.cols() != b.rows()) throw DomainError("lambda_member: shape mismatch");
    return (a * b).is_strictly_upper() && (b * a).is_strictly_upper();
}

// Rook placement read off the corner ranks R(i,j) = rank(rows i..M, cols 1..j).
template <class F>
RookPlacement rook_normal_form(const Matrix<F>& x) {
    const int m = x.rows(), n = x.cols();
    std::vector<std::vector<int>> r(m + 2, std::vector<int>(n + 1, 0));
    for (int i = m; i >= 1; --i)
        for (int j = 1; j <= n; ++j) r[i][j] = rank(x.block(i - 1, 0, m - i + 1, j));
    std::vector<Cell> cells;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            if (r[i][j] - r[i + 1][j] - r[i][j - 1] + r[i + 1][j - 1] == 1) cells.push_back({i, j});
    return RookPlacement(m, n, std::move(cells));
}

template <class F>
Matrix<F> rook_matrix(const RookPlacement& r) {
    Matrix<F> x(r.m(), r.n());
    for (Cell c : r.rooks()) x(c.row - 1, c.col - 1) = F(1);
    return x;
}

enum class Split { Column, Row };

// A point of the quotient by the Lagrangian subspace. Both orientations are stored through the
// column-split model: with N = 2n, C is M x n and Dt is n x M. A row split of an M x N problem
// (M = 2m) is stored as the column split of the transposed N x M problem, so model_rows() = N.
template <class F>
struct QuotientPointT {
    Split orientation = Split::Column;
    int m = 0, n = 0;  // dimensions of the original problem
    Matrix<F> c, dt;

    int model_rows() const { return orientation == Split::Column ? m : n; }
    int model_cols() const { return orientation == Split::Column ? n : m; }
    int half() const { return model_cols() / 2; }

    void check() const {
        const int mr = model_rows(), mc = model_cols();
        if (mc % 2) throw DomainError("the split side must have even size");
        if (c.rows() != mr || c.cols() != mc / 2 || dt.rows() != mc / 2 || dt.cols() != mr)
            throw DomainError("quotient point blocks have inconsistent shapes");
    }
    bool operator==(const QuotientPointT&) const = default;
};
using QuotientPoint = QuotientPointT<Rational>;

template <class F>
QuotientPointT<F> make_quotient_point(Split orientation, int m, int n, Matrix<F> c, Matrix<F> dt) {
    QuotientPointT<F> p{orientation, m, n, std::move(c), std::move(dt)};
    p.check();
    return p;
}

// The fiber coordinates y_{Mn'} (model_rows x n') and y_{nM} (n x model_rows) completing a lift.
template <class F>
struct LagrangianFiberT {
    Matrix<F> upper_right;
    Matrix<F> top;
};
using LagrangianFiber = LagrangianFiberT<Rational>;

template <class F>
LagrangianFiberT<F> zero_fiber(const QuotientPointT<F>& p) {
    return {Matrix<F>(p.model_rows(), p.half()), Matrix<F>(p.half(), p.model_rows())};
}

// Full lift (A, B) = ([C | y_{Mn'}], [y_{nM} ; Dt]).
template <class F>
std::pair<Matrix<F>, Matrix<F>> lift(const QuotientPointT<F>& p, const LagrangianFiberT<F>& fiber) {
    p.check();
    const int mr = p.model_rows(), h = p.half();
    if (fiber.upper_right.rows() != mr || fiber.upper_right.cols() != h || fiber.top.rows() != h ||
        fiber.top.cols() != mr)
        throw DomainError("fiber blocks have inconsistent shapes");
    Matrix<F> a(mr, 2 * h), b(2 * h, mr);
    a.set_block(0, 0, p.c);
    a.set_block(0, h, fiber.upper_right);
    b.set_block(0, 0, fiber.top);
    b.set_block(h, 0, p.dt);
    return {a, b};
}

// The four block conditions cutting out the Lagrangian over a quotient point.
template <class F>
bool lambda_member_split(const QuotientPointT<F>& p, const LagrangianFiberT<F>& y) {
    p.check();
    const Matrix<F>& yp_mn = p.c;
    const Matrix<F>& yp_npm = p.dt;
    return (y.top * yp_mn).is_strictly_upper() && (yp_npm * y.upper_right).is_strictly_upper() &&
           (yp_mn * y.top + y.upper_right * yp_npm).is_strictly_upper() && (yp_npm * yp_mn).is_zero_matrix();
}

// Nondegenerate forms on the two sides.
enum class FormKind { Orthogonal, Symplectic };

struct FormSpec {
    int size = 0;
    FormKind kind = FormKind::Orthogonal;

    // Orthogonal: 1's on the antidiagonal. Symplectic: 1's on the upper-right half of the antidiagonal,
    // -1's on the lower-left half.
    template <class F>
    Matrix<F> matrix() const {
        if (kind == FormKind::Symplectic && size % 2) throw DomainError("symplectic form needs even size");
        Matrix<F> f(size, size);
        for (int i = 0; i < size; ++i)
            f(i, size - 1 - i) = (kind == FormKind::Symplectic && i >= size / 2) ? F(-1) : F(1);
        return f;
    }
};

// Element (X, Y) of the Borel subalgebra acting on the model.
template <class F>
struct BorelElement {
    Matrix<F> x, y;
};

namespace detail {

template <class F>
std::vector<BorelElement<F>> borel_basis(int mr, int mc) {
    std::vector<BorelElement<F>> basis;
    for (int i = 0; i < mr; ++i)
        for (int j = i; j < mr; ++j) {
            BorelElement<F> e{Matrix<F>(mr, mr), Matrix<F>(mc, mc)};
            e.x(i, j) = F(1);
            basis.push_back(std::move(e));
        }
    for (int i = 0; i < mc; ++i)
        for (int j = i; j < mc; ++j) {
            BorelElement<F> e{Matrix<F>(mr, mr), Matrix<F>(mc, mc)};
            e.y(i, j) = F(1);
            basis.push_back(std::move(e));
        }
    return basis;
}

// (XA - AY, YB - BX).
template <class F>
std::pair<Matrix<F>, Matrix<F>> infinitesimal_action(const BorelElement<F>& xi, const Matrix<F>& a, const Matrix<F>& b) {
    return {xi.x * a - a * xi.y, xi.y * b - b * xi.x};
}

// Quotient coordinates of a tangent vector: the first n columns of A', the last n' rows of B'.
template <class F>
std::vector<F> quotient_coordinates(const Matrix<F>& a, const Matrix<F>& b, int h) {
    std::vector<F> out;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < h; ++j) out.push_back(a(i, j));
    for (int i = h; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
    return out;
}

template <class F>
void append_rows(Matrix<F>& system, int col, const std::vector<F>& values, int row0) {
    for (std::size_t i = 0; i < values.size(); ++i) system(row0 + static_cast<int>(i), col) = values[i];
}

}  // namespace detail

// Basis of {xi in b_M + b_N : xi . p = 0 in the quotient}, optionally restricted to the
// form-preserving part (t X F + F X = 0 on both sides).
template <class F>
std::vector<BorelElement<F>> lie_stabilizer(const QuotientPointT<F>& p, const std::optional<std::pair<FormSpec, FormSpec>>& forms = std::nullopt) {
    p.check();
    const int mr = p.model_rows(), mc = p.model_cols(), h = p.half();
    auto [a, b] = lift(p, zero_fiber(p));
    auto basis = detail::borel_basis<F>(mr, mc);
    const int coords = mr * h + (mc - h) * mr;
    const int form_rows = forms ? mr * mr + mc * mc : 0;
    Matrix<F> system(coords + form_rows, static_cast<int>(basis.size()));
    Matrix<F> fm, fn;
    if (forms) {
        fm = forms->first.template matrix<F>();
        fn = forms->second.template matrix<F>();
        if (fm.rows() != mr || fn.rows() != mc) throw DomainError("form sizes do not match the point");
    }
    for (std::size_t k = 0; k < basis.size(); ++k) {
        auto [da, db] = detail::infinitesimal_action(basis[k], a, b);
        detail::append_rows(system, static_cast<int>(k), detail::quotient_coordinates(da, db, h), 0);
        if (forms) {
            Matrix<F> gx = basis[k].x.transpose() * fm + fm * basis[k].x;
            Matrix<F> gy = basis[k].y.transpose() * fn + fn * basis[k].y;
            int row = coords;
            for (int i = 0; i < mr; ++i)
                for (int j = 0; j < mr; ++j) system(row++, static_cast<int>(k)) = gx(i, j);
            for (int i = 0; i < mc; ++i)
                for (int j = 0; j < mc; ++j) system(row++, static_cast<int>(k)) = gy(i, j);
        }
    }
    std::vector<BorelElement<F>> out;
    for (const auto& v : nullspace(system)) {
        BorelElement<F> e{Matrix<F>(mr, mr), Matrix<F>(mc, mc)};
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (is_zero(v[k])) continue;
            e.x = e.x + basis[k].x.scaled(v[k]);
            e.y = e.y + basis[k].y.scaled(v[k]);
        }
        out.push_back(std::move(e));
    }
    return out;
}

// <(A,B),(A',B')> = tr(A B') - tr(A' B).
template <class F>
F symplectic_pairing(const Matrix<F>& a, const Matrix<F>& b, const Matrix<F>& a2, const Matrix<F>& b2) {
    return (a * b2).trace() - (a2 * b).trace();
}

// <x, xi x> for each stabilizer basis vector xi, using the lift of p with the given fiber.
template <class F>
std::vector<F> stabilizer_pairings(const QuotientPointT<F>& p, const LagrangianFiberT<F>& fiber,
                                   const std::optional<std::pair<FormSpec, FormSpec>>& forms = std::nullopt) {
    auto [a, b] = lift(p, fiber);
    std::vector<F> out;
    for (const auto& xi : lie_stabilizer(p, forms)) {
        auto [da, db] = detail::infinitesimal_action(xi, a, b);
        out.push_back(symplectic_pairing(a, b, da, db));
    }
    return out;
}

template <class F>
bool relevance(const QuotientPointT<F>& p) {
    for (const F& v : stabilizer_pairings(p, zero_fiber(p)))
        if (!is_zero(v)) return false;
    return true;
}

// (g, h) . p for invertible upper-triangular g (model_rows) and h (model_cols).
QuotientPoint act(const QuotientPoint& p, const QMatrix& g, const QMatrix& h);

// Exact orbit test over the rationals: is there an invertible upper-triangular triple with
// g C = C' h1 and h2 Dt = Dt' g?
bool same_orbit(const QuotientPoint& p, const QuotientPoint& q);
// Same question for B_M x B_N acting on M x N matrices by X -> g X h^{-1}.
bool same_borel_orbit(const QMatrix& x, const QMatrix& y);

// Blocks of a maze: x's of the left half and transposed o's of the right half (column split),
// or the same data for the transposed maze (row split).
QuotientPoint representative_point(const Maze& m, Split orientation);

// Adjoint pair (B*, -A*) with respect to the forms on the M side and the N side.
std::pair<QMatrix, QMatrix> iota_point(const QMatrix& a, const QMatrix& b, const FormSpec& form_m, const FormSpec& form_n);

// Column-split point whose zero-fiber lift is fixed by iota_point.
bool is_iota_fixed(const QuotientPoint& p, const FormSpec& form_m, const FormSpec& form_n);
// (C, -Dt) for a maze with even column count; literally fixed by iota when the maze is centrally
// symmetric (orthogonal form on the rows, symplectic on the columns), and in the same orbit as
// representative_point.
QuotientPoint symmetric_representative_point(const Maze& m);
// Relevance with the Borel subalgebra cut down to the form-preserving part. Throws unless p is iota-fixed.
bool symmetric_relevance(const QuotientPoint& p, const FormSpec& form_m, const FormSpec& form_n);

// x = [[0, A], [B, 0]] in gl(M+N); returns x^2 = diag(AB, BA), the half-supercommutator of x with itself.
QMatrix half_supercommutator(const QMatrix& a, const QMatrix& b);
// x^2 lies in the nilpotent radical (strictly upper triangular) of gl(M+N).
bool super_moment_nilpotent(const QMatrix& a, const QMatrix& b);

// Point (w0 C, tD w0) built from the x's and o's of varpi(r), with its two Borel-orbit labels:
// factor1 is the row flip of the normal form of w0 C, factor2 the normal form of tD w0 read back
// as an M x N placement via (p, q) -> (q, N + 1 - p).
struct FourierCertificate {
    QMatrix a, b;
    bool lambda_ok = false;
    RookPlacement factor1, factor2;
};
FourierCertificate fourier_certificate(const RookPlacement& r);

// Matrix codec: JSON array of rows, entries as strings "p/q" (integers also accepted on input).
std::string encode_matrix(const QMatrix& m);
QMatrix decode_matrix(const std::string& text);

}  // namespace rookmaze
