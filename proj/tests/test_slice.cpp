#include <doctest.h>

#include <random>

#include "rookmaze/bijections.hpp"
#include "rookmaze/counting.hpp"
#include "rookmaze/slice.hpp"

#include <set>

using namespace rookmaze;

namespace {

QMatrix random_element(const PatternGroup& g, std::mt19937_64& rng) {
    QMatrix x(g.size, g.size);
    for (int a = 1; a <= g.size; ++a)
        for (int b = 1; b <= g.size; ++b) switch (g.at(a, b)) {
                case PatternEntry::One: x(a - 1, b - 1) = 1; break;
                case PatternEntry::Unit: x(a - 1, b - 1) = static_cast<long>(1 + rng() % 2); break;
                case PatternEntry::Free: x(a - 1, b - 1) = static_cast<long>(rng() % 5) - 2; break;
                case PatternEntry::Zero: break;
            }
    return x;
}

bool in_pattern(const QMatrix& x, const PatternGroup& g) {
    for (int a = 1; a <= g.size; ++a)
        for (int b = 1; b <= g.size; ++b) {
            const Rational& v = x(a - 1, b - 1);
            switch (g.at(a, b)) {
                case PatternEntry::Zero:
                    if (!is_zero(v)) return false;
                    break;
                case PatternEntry::One:
                    if (v != 1) return false;
                    break;
                case PatternEntry::Unit:
                    if (is_zero(v)) return false;
                    break;
                case PatternEntry::Free: break;
            }
        }
    return true;
}

void check_closed(const PatternGroup& g, std::mt19937_64& rng) {
    for (int t = 0; t < 20; ++t) {
        QMatrix x = random_element(g, rng), y = random_element(g, rng);
        CHECK(in_pattern(x * y, g));
        CHECK(in_pattern(inverse(x), g));
    }
}

bool iota_parity(int m, int n) { return (m + n) % 2 == 1 || (m % 2 == 0 && n % 2 == 0); }

}  // namespace

TEST_CASE("pattern subgroups") {
    CHECK(upper_borel(3).dimension() == 6);
    auto h = slice_subgroup(1, 3, 0, 1, 1);
    CHECK(h.at(1, 1) == PatternEntry::One);
    CHECK(h.at(2, 2) == PatternEntry::Unit);
    CHECK(h.at(1, 2) == PatternEntry::Zero);
    CHECK(h.at(1, 3) == PatternEntry::Free);
    CHECK_THROWS_AS(slice_subgroup(1, 3, 1, 1, 2), DomainError);
    CHECK_THROWS_AS(slice_subgroup(1, 3, 1, 0, 1), DomainError);
    // B_2 in the centre plus a 3-dimensional Heisenberg group.
    CHECK(middle_subgroup(2, 4).dimension() == 3 + 3);
    CHECK_THROWS_AS(middle_subgroup(1, 4), DomainError);

    std::mt19937_64 rng(1);
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m)
            for (int r = 0; r <= n - m - 1; ++r) {
                const int s = n - m - 1 - r;
                for (int k = r + 1; k <= n - s; ++k) check_closed(slice_subgroup(m, n, r, s, k), rng);
                if (s >= 1) check_closed(projection_subgroup(m, n, r, s), rng);
            }
    check_closed(middle_subgroup(2, 4), rng);
    check_closed(middle_subgroup(2, 6), rng);
    check_closed(middle_subgroup(4, 6), rng);
}

TEST_CASE("representatives from permutations and decreasing sequences") {
    CHECK(slice_representative_A({1, 2}, {2}, 1, 2) == QMatrix::identity(2));
    QMatrix a = slice_representative_A({2, 1}, {2, 1}, 1, 2);
    CHECK(a(1, 0) == 2);
    CHECK(det(a) == -2);
    CHECK_THROWS_AS(slice_representative_A({1, 2}, {}, 1, 2), DomainError);
    CHECK_THROWS_AS(slice_representative_A({1, 2}, {1, 2}, 1, 2), DomainError);
    CHECK_THROWS_AS(slice_representative_A({1, 1}, {2}, 1, 2), DomainError);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        const int n = 2 + rng() % 4, m = rng() % n;
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        std::shuffle(w.begin(), w.end(), rng);
        std::vector<int> sigma;
        for (int v = n; v >= 1; --v)
            if (rng() % 2) sigma.push_back(v);
        if (sigma.empty()) sigma.push_back(n);
        CHECK_FALSE(is_zero(det(slice_representative_A(w, sigma, m, n))));
    }
}

TEST_CASE("extended mazes") {
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m)
            for (const Maze& mz : enumerate_mazes(m, n))
                for (int r = 0; r <= n - m; ++r)
                    for (int s = 0; r + s <= n - m; ++s) {
                        Maze ext = extend_type_three(mz, r, s);
                        CHECK(ext.m() == m + r + s);
                        CHECK(is_valid(ext));
                    }
    CHECK_THROWS_AS(extend_type_three(varpi(RookPlacement(1, 2, {})), 1, 1), DomainError);
}

TEST_CASE("wall-extension representatives are invertible and relevant") {
    auto three = enumerate_mazes(1, 2);
    std::set<std::string> distinct;
    for (const Maze& mz : three) distinct.insert(encode_matrix(slice_representative_A_rsk(mz, 0, 0, 2)));
    CHECK(distinct.size() == 3);

    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m)
            for (const Maze& mz : enumerate_mazes(m, n))
                for (int r = 0; r <= n - m - 1; ++r) {
                    const int s = n - m - 1 - r;
                    for (int k = r + 1; k <= n - s; ++k) {
                        QMatrix a = slice_representative_A_rsk(mz, r, s, k);
                        CHECK_FALSE(is_zero(det(a)));
                        CHECK(coset_relevant(a, slice_subgroup(m, n, r, s, k), slice_character(m, n, r, s, k)));
                    }
                }
    CHECK_THROWS_AS(slice_representative_A_rsk(three[0], 0, 0, 3), DomainError);

    for (auto [m, n] : {std::pair{2, 4}, {2, 6}, {4, 6}})
        for (const Maze& mz : enumerate_mazes(m, n)) {
            QMatrix e = slice_representative_E(mz);
            CHECK_FALSE(is_zero(det(e)));
            CHECK(coset_relevant(e, middle_subgroup(m, n), middle_character(m, n)));
        }
    CHECK_THROWS_AS(slice_representative_E(three[0]), DomainError);
}

TEST_CASE("finite-field double cosets") {
    QMatrix a = QMatrix::identity(2);
    CHECK(double_coset_equal_Fq(a, a, upper_borel(2), upper_borel(2), 2));
    QMatrix w0 = QMatrix::antidiagonal(2);
    CHECK_FALSE(double_coset_equal_Fq(a, w0, upper_borel(2), upper_borel(2), 2));
    CHECK_FALSE(double_coset_equal_Fq(a, w0, upper_borel(2), upper_borel(2), 3));
    std::mt19937_64 rng(8);
    auto b = upper_borel(3);
    for (int t = 0; t < 10; ++t) {
        QMatrix x = QMatrix::antidiagonal(3);
        QMatrix y = random_element(b, rng) * x * random_element(b, rng);
        CHECK(double_coset_equal_Fq(x, y, b, b, 3));
    }
    CHECK_THROWS_AS(double_coset_equal_Fq(a, a, upper_borel(2), upper_borel(2), 4), DomainError);
    FqLimits tiny;
    tiny.max_states = 3;
    CHECK_THROWS_AS(double_coset_equal_Fq(a, w0, upper_borel(2), upper_borel(2), 3, tiny), ResourceLimit);

    // Borel orbits on rectangular matrices are counted by rook placements.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n) CHECK(count_double_cosets_Fq(upper_borel(m), upper_borel(n), 2) == count_rooks_closed(m, n));
    CHECK(count_double_cosets_Fq(upper_borel(2), upper_borel(2), 3) == 7);
}

TEST_CASE("independence of the slice parameters over F2") {
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m < n; ++m)
            for (int r = 0; r <= n - m - 1; ++r) {
                const int s = n - m - 1 - r;
                auto mazes = enumerate_mazes(m, n);
                for (int k = r + 1; k <= n - s; ++k) {
                    std::vector<QMatrix> reps;
                    for (const Maze& mz : mazes) reps.push_back(slice_representative_A_rsk(mz, r, s, k));
                    // Different mazes give different double cosets.
                    for (std::size_t i = 0; i < reps.size(); ++i)
                        for (std::size_t j = i + 1; j < reps.size(); ++j)
                            CHECK_FALSE(double_coset_equal_Fq(reps[i], reps[j], slice_subgroup(m, n, r, s, k), upper_borel(n), 2));
                    for (std::size_t i = 0; i < mazes.size(); ++i) {
                        for (int k2 = k + 1; k2 <= n - s; ++k2)
                            CHECK(double_coset_equal_Fq(cycle_rows(reps[i], k, k2), slice_representative_A_rsk(mazes[i], r, s, k2),
                                                        slice_subgroup(m, n, r, s, k2), upper_borel(n), 2));
                        if (s >= 1 && k == r + 1)
                            CHECK(double_coset_equal_Fq(reps[i], slice_representative_A_rsk(mazes[i], r + 1, s - 1, n - s + 1),
                                                        projection_subgroup(m, n, r, s), upper_borel(n), 2));
                    }
                }
            }
}

TEST_CASE("iota commutes with the slice bijection") {
    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m < n; ++m) {
            if (!iota_parity(m, n)) continue;
            const bool symplectic = m % 2 == 0 && n % 2 == 0;
            for (const Maze& mz : enumerate_mazes(m, n))
                for (int r = 0; r <= n - m - 1; ++r) {
                    const int s = n - m - 1 - r;
                    for (int k = r + 1; k <= n - s; ++k) {
                        QMatrix ia = iota_group(slice_representative_A_rsk(mz, r, s, k), symplectic);
                        CHECK(coset_relevant(ia, slice_subgroup(m, n, s, r, n + 1 - k), slice_character(m, n, s, r, n + 1 - k)));
                        if (n <= 3)
                            CHECK(double_coset_equal_Fq(ia, slice_representative_A_rsk(iota(mz), s, r, n + 1 - k),
                                                        slice_subgroup(m, n, s, r, n + 1 - k), upper_borel(n), 2));
                    }
                }
        }
    QMatrix g = QMatrix::identity(2);
    g(0, 1) = 3;
    CHECK(iota_group(iota_group(g, false), false) == g);
    CHECK(iota_group(iota_group(g, true), true) == g);
}
