// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rookmaze/bijections.hpp"
#include "rookmaze/codec.hpp"
#include "rookmaze/counting.hpp"
#include "rookmaze/linear_side.hpp"
#include "rookmaze/slice.hpp"
#include "rookmaze/weyl_f4.hpp"

using namespace rookmaze;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
    int failures = 0;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ++failures;
        if (ok) detail << "first failure: " << what << "; ";
        ok = false;
    }
};

QMatrix random_upper(int n, std::mt19937_64& rng) {
    QMatrix g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            long v = static_cast<long>(rng() % 7) - 3;
            if (i == j && v == 0) v = 2;
            g(i, j) = v;
        }
    return g;
}

std::string dims(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

void counting_identities(Outcome& o) {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            o.expect(enumerate_rooks(m, n).size() == count_rooks_closed(m, n), "rooks " + dims(m, n));
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            o.expect(enumerate_mazes(m, n).size() == enumerate_rooks(m, n).size(), "mazes " + dims(m, n));
    o.detail << "rooks M,N<=5 and mazes M,N<=4 checked";
}

void symmetric_formulas(Outcome& o) {
    const std::uint64_t square[] = {3, 17, 139}, tall[] = {5, 37};
    std::string got;
    for (int n = 1; n <= 3; ++n) {
        const auto c = enumerate_symmetric_mazes(2 * n, 2 * n).size();
        o.expect(c == square[n - 1], "square n=" + std::to_string(n));
        o.expect(count_symmetric_closed(SymmetricShape::Square, n) == square[n - 1], "square closed form");
        got += std::to_string(c) + " ";
    }
    for (int n = 1; n <= 2; ++n) {
        const auto c = enumerate_symmetric_mazes(2 * n + 2, 2 * n).size();
        o.expect(c == tall[n - 1], "tall n=" + std::to_string(n));
        o.expect(count_symmetric_closed(SymmetricShape::Tall, n) == tall[n - 1], "tall closed form");
        got += std::to_string(c) + " ";
    }
    o.detail << "counts " << got;
}

void symmetric_insertions(Outcome& o) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const auto base = enumerate_symmetric_mazes(2 * a, 2 * b);
            const auto cols = enumerate_symmetric_mazes(2 * a, 2 * b + 1);
            const auto rows = enumerate_symmetric_mazes(2 * a + 1, 2 * b);
            o.expect(base.size() == cols.size() && base.size() == rows.size(), "counts at " + dims(2 * a, 2 * b));
            std::set<std::string> col_img, row_img, col_all, row_all;
            for (const Maze& mz : base) {
                col_img.insert(encode(insert_middle_column(mz)));
                row_img.insert(encode(insert_middle_row(mz)));
            }
            for (const Maze& mz : cols) col_all.insert(encode(mz));
            for (const Maze& mz : rows) row_all.insert(encode(mz));
            o.expect(col_img.size() == base.size() && row_img.size() == base.size(), "injective at " + dims(2 * a, 2 * b));
            o.expect(col_img == col_all && row_img == row_all, "surjective at " + dims(2 * a, 2 * b));
        }
    o.detail << "m,n<=3";
}

void round_trips(Outcome& o) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto rooks = enumerate_rooks(m, n);
            const auto mazes = enumerate_mazes(m, n);
            for (const auto& r : rooks) {
                o.expect(pi(varpi(r)) == r, "pi(varpi) " + encode(r));
                o.expect(fourier(fourier(r)) == r, "fourier^2 " + encode(r));
                for (int nl = 0; nl <= n; ++nl) o.expect(pi_v(varpi_v(r, nl, n - nl), nl, n - nl) == r, "pi_v " + encode(r));
                for (int mu = 0; mu <= m; ++mu) o.expect(pi_h(varpi_h(r, mu, m - mu), mu, m - mu) == r, "pi_h " + encode(r));
                if (m < n) o.expect(rho(varrho(r), m) == r, "rho(varrho) " + encode(r));
            }
            for (const auto& mz : mazes) {
                o.expect(varpi(pi(mz)) == mz, "varpi(pi) " + encode(mz));
                o.expect(iota(iota(mz)) == mz, "iota^2 " + encode(mz));
                for (int nl = 0; nl <= n; ++nl) o.expect(varpi_v(pi_v(mz, nl, n - nl), nl, n - nl) == mz, "varpi_v " + encode(mz));
                for (int mu = 0; mu <= m; ++mu) o.expect(varpi_h(pi_h(mz, mu, m - mu), mu, m - mu) == mz, "varpi_h " + encode(mz));
                if (m == n) {
                    auto back = varphi(phi(mz));
                    o.expect(back.has_value() && *back == mz, "varphi(phi) " + encode(mz));
                }
            }
            if (m < n)
                for (const auto& c : rb_elements(n))
                    if (rb_subset_tests(c, m).rb_mn) o.expect(varrho(rho(c, m)) == c, "varrho(rho) " + encode(c));
        }
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : rb_elements(n)) {
            auto mz = varphi(c);
            o.expect(mz.has_value() && phi(*mz) == c, "phi(varphi) " + encode(c));
        }
    o.detail << "all placements and mazes with M,N<=4, " << o.failures << " failures";
}

void fourier_certificates(Outcome& o) {
    std::size_t n_checked = 0;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            for (const auto& r : enumerate_rooks(m, n)) {
                const auto cert = fourier_certificate(r);
                o.expect(cert.lambda_ok && lambda_member(cert.a, cert.b), "lambda " + encode(r));
                o.expect(cert.factor1 == r, "factor1 " + encode(r));
                o.expect(cert.factor2 == fourier(r), "factor2 " + encode(r));
                ++n_checked;
            }
    o.detail << n_checked << " placements, " << o.failures << " failures";
}

void relevance_suite(Outcome& o) {
    std::mt19937_64 rng(6);
    std::size_t points = 0, fixed = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            const auto mazes = enumerate_mazes(m, n);
            for (const Maze& mz : mazes)
                for (Split split : {Split::Column, Split::Row}) {
                    if ((split == Split::Column ? n : m) % 2) continue;
                    const QuotientPoint p = representative_point(mz, split);
                    o.expect(relevance(p), "relevance " + encode(mz));
                    for (int t = 0; t < 20; ++t)
                        o.expect(relevance(act(p, random_upper(p.model_rows(), rng), random_upper(p.model_cols(), rng))),
                                 "orbit " + encode(mz));
                    ++points;
                }
            if (n % 2) continue;
            const FormSpec fm{m, FormKind::Orthogonal}, fn{n, FormKind::Symplectic};
            std::size_t here = 0, symmetric = 0;
            for (const Maze& mz : mazes) {
                const QuotientPoint p = symmetric_representative_point(mz);
                if (!is_iota_fixed(p, fm, fn)) continue;
                ++here;
                o.expect(symmetric_relevance(p, fm, fn), "symmetric relevance " + encode(mz));
            }
            for (const Maze& mz : enumerate_symmetric_mazes(m, n)) symmetric += !mz.walls().empty();
            o.expect(here == symmetric, "iota-fixed count " + dims(m, n));
            fixed += here;
        }
    o.detail << points << " representative points x 20 Borel elements, " << fixed << " iota-fixed";
}

void borel_orbits(Outcome& o) {
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 3; ++n)
            o.expect(count_double_cosets_Fq(upper_borel(m), upper_borel(n), 2) == count_rooks_closed(m, n), "orbits " + dims(m, n));
    o.detail << "exhaustive over F2, M,N<=3";
}

void f4_pipeline(Outcome& o) {
    auto words = [](std::initializer_list<const char*> ws) {
        std::set<WeylElement> out;
        for (const char* w : ws) {
            std::vector<int> d;
            for (const char* c = w; *c; ++c) d.push_back(*c - '0');
            out.insert(WeylElement::from_word(d));
        }
        return out;
    };
    o.expect(weyl_elements().size() == 48, "48 elements");
    const auto rel = relevant_weyl_filter();
    o.expect(std::set<WeylElement>(rel.begin(), rel.end()) ==
                 words({"21321", "213213", "1232132", "2321232", "32123213", "23212323", "23212321", "121321323"}),
             "relevant filter");
    const auto split = coset_maximal(rel);
    o.expect(std::set<WeylElement>(split.begin(), split.end()) == words({"213213", "32123213", "121321323"}), "coset maxima");
    const WeylElement w2 = WeylElement::from_word({2, 1, 3, 2, 1, 3}), w5 = WeylElement::from_word({3, 2, 1, 2, 3, 2, 1, 3}),
                      w8 = WeylElement::from_word({1, 2, 1, 3, 2, 1, 3, 2, 3});
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        o.expect(!split_orbit_relevance(w2, 20, seed).relevant, "w2 seed " + std::to_string(seed));
        o.expect(!split_orbit_relevance(w5, 20, seed).relevant, "w5 seed " + std::to_string(seed));
        o.expect(split_orbit_relevance(w8, 20, seed).relevant, "w8 seed " + std::to_string(seed));
    }
    const F4Audit audit = f4_component_count();
    o.expect(audit.count == 9, "count");
    o.detail << "count " << audit.count << ", 20 seeds";
}

void slice_representatives(Outcome& o) {
    std::size_t matrices = 0, cosets = 0;
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = i + 1;
        do {
            for (int m = 0; m < n; ++m)
                for (unsigned mask = 1; mask < (1u << n); ++mask) {
                    std::vector<int> sigma;
                    for (int v = n; v >= 1; --v)
                        if (mask >> (v - 1) & 1) sigma.push_back(v);
                    o.expect(!is_zero(det(slice_representative_A(w, sigma, m, n))), "A(w,sigma)");
                    ++matrices;
                }
        } while (std::next_permutation(w.begin(), w.end()));
    }
    for (int n = 2; n <= 5; ++n)
        for (int m = 1; m < n; ++m)
            for (const Maze& mz : enumerate_mazes(m, n)) {
                for (int r = 0; r <= n - m - 1; ++r) {
                    const int s = n - m - 1 - r;
                    for (int k = r + 1; k <= n - s; ++k) {
                        o.expect(!is_zero(det(slice_representative_A_rsk(mz, r, s, k))), "A_rsk " + encode(mz));
                        ++matrices;
                    }
                }
                if (m % 2 == 0 && n % 2 == 0) {
                    o.expect(!is_zero(det(slice_representative_E(mz))), "E " + encode(mz));
                    ++matrices;
                }
            }
    // Independence of (r, s, k) and compatibility with iota, as double-coset equalities over F2.
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m < n; ++m) {
            const auto mazes = enumerate_mazes(m, n);
            const bool iota_ok = (m + n) % 2 == 1 || (m % 2 == 0 && n % 2 == 0);
            const bool symplectic = m % 2 == 0 && n % 2 == 0;
            for (int r = 0; r <= n - m - 1; ++r) {
                const int s = n - m - 1 - r;
                for (int k = r + 1; k <= n - s; ++k) {
                    const PatternGroup h = slice_subgroup(m, n, r, s, k), b = upper_borel(n);
                    std::vector<QMatrix> reps;
                    for (const Maze& mz : mazes) reps.push_back(slice_representative_A_rsk(mz, r, s, k));
                    for (std::size_t i = 0; i < reps.size(); ++i)
                        for (std::size_t j = i + 1; j < reps.size(); ++j, ++cosets)
                            o.expect(!double_coset_equal_Fq(reps[i], reps[j], h, b, 2), "distinct " + encode(mazes[i]));
                    for (std::size_t i = 0; i < mazes.size(); ++i) {
                        for (int k2 = k + 1; k2 <= n - s; ++k2, ++cosets)
                            o.expect(double_coset_equal_Fq(cycle_rows(reps[i], k, k2), slice_representative_A_rsk(mazes[i], r, s, k2),
                                                           slice_subgroup(m, n, r, s, k2), b, 2),
                                     "k independence " + encode(mazes[i]));
                        if (s >= 1 && k == r + 1) {
                            o.expect(double_coset_equal_Fq(reps[i], slice_representative_A_rsk(mazes[i], r + 1, s - 1, n - s + 1),
                                                           projection_subgroup(m, n, r, s), b, 2),
                                     "rs independence " + encode(mazes[i]));
                            ++cosets;
                        }
                        if (iota_ok) {
                            o.expect(double_coset_equal_Fq(iota_group(reps[i], symplectic),
                                                           slice_representative_A_rsk(iota(mazes[i]), s, r, n + 1 - k),
                                                           slice_subgroup(m, n, s, r, n + 1 - k), b, 2),
                                     "iota slice " + encode(mazes[i]));
                            ++cosets;
                        }
                    }
                }
            }
        }
    o.detail << matrices << " matrices invertible, " << cosets << " double-coset checks";
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "counting identities", 10, counting_identities},
        {2, "symmetric maze formulas", 30, symmetric_formulas},
        {3, "symmetric insertions", 600, symmetric_insertions},
        {4, "round trips", 600, round_trips},
        {5, "fourier certificate", 600, fourier_certificates},
        {6, "relevance suite", 60, relevance_suite},
        {7, "Borel orbits over F2", 600, borel_orbits},
        {8, "F(4) pipeline", 60, f4_pipeline},
        {9, "slice representatives", 600, slice_representatives},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_seconds) {
            o.ok = false;
            o.detail << "; over time limit";
        }
        all = all && o.ok;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.limit_seconds);
        std::cout << "criterion " << c.id << " " << (o.ok ? "PASS" : "FAIL") << ": " << c.name << ": " << o.detail.str() << ", "
                  << timing << std::endl;
    }
    return all ? 0 : 1;
}
