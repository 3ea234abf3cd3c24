#include "rookmaze/counting.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "rookmaze/bijections.hpp"

namespace rookmaze {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw DomainError("count overflows 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw DomainError("count overflows 64 bits");
    return r;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = checked_mul(r, static_cast<std::uint64_t>(n - k + i)) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t factorial(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r = checked_mul(r, static_cast<std::uint64_t>(i));
    return r;
}

void check_ceiling(std::uint64_t count, const EnumerationLimits& limits) {
    if (count > limits.max_objects)
        throw ResourceLimit("enumeration of " + std::to_string(count) + " objects exceeds the ceiling of " +
                            std::to_string(limits.max_objects));
}

// Applies f to every index in [0, size) using `jobs` threads; results land in index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t size, unsigned jobs, F f) {
    std::vector<std::optional<T>> slots(size);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(size, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < size; ++i) slots[i].emplace(f(i));
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < size; i += jobs) slots[i].emplace(f(i));
            });
        for (auto& th : pool) th.join();
    }
    std::vector<T> out;
    out.reserve(size);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace

std::uint64_t count_rooks_closed(int m, int n) {
    if (m < 0 || n < 0) throw DomainError("negative board dimension");
    std::uint64_t total = 0;
    for (int k = 0; k <= std::min(m, n); ++k)
        total = checked_add(total, checked_mul(checked_mul(binom(m, k), binom(n, k)), factorial(k)));
    return total;
}

void for_each_rook_placement(int m, int n, const std::function<void(const RookPlacement&)>& f,
                             const EnumerationLimits& limits) {
    for (const auto& r : enumerate_rooks(m, n, limits)) f(r);
}

std::vector<RookPlacement> enumerate_rooks(int m, int n, const EnumerationLimits& limits) {
    if (m < 1 || n < 1) throw DomainError("board dimensions must be positive");
    check_ceiling(count_rooks_closed(m, n), limits);
    std::vector<std::vector<Cell>> all;
    std::vector<Cell> cur;
    std::vector<char> used(n + 1, 0);
    std::function<void(int)> rec = [&](int row) {
        if (row > m) {
            all.push_back(cur);
            return;
        }
        rec(row + 1);
        for (int c = 1; c <= n; ++c) {
            if (used[c]) continue;
            used[c] = 1;
            cur.push_back({row, c});
            rec(row + 1);
            cur.pop_back();
            used[c] = 0;
        }
    };
    rec(1);
    std::sort(all.begin(), all.end());
    std::vector<RookPlacement> out;
    out.reserve(all.size());
    for (auto& cells : all) out.emplace_back(m, n, std::move(cells));
    return out;
}

std::vector<Maze> enumerate_mazes(int m, int n, const EnumerationLimits& limits) {
    auto rooks = enumerate_rooks(m, n, limits);
    return parallel_map<Maze>(rooks.size(), limits.jobs, [&](std::size_t i) { return varpi(rooks[i]); });
}

std::vector<Maze> enumerate_symmetric_mazes(int m, int n, const EnumerationLimits& limits) {
    std::vector<Maze> out;
    if (m % 2 && n % 2) return out;
    auto rooks = enumerate_rooks(m, n, limits);
    auto found = parallel_map<std::optional<Maze>>(rooks.size(), limits.jobs, [&](std::size_t i) -> std::optional<Maze> {
        Maze mz = varpi(rooks[i]);
        if (central_flip_swap(mz) == mz) return mz;
        return std::nullopt;
    });
    for (auto& f : found)
        if (f) out.push_back(std::move(*f));
    return out;
}

std::uint64_t count_symmetric_closed(SymmetricShape shape, int n) {
    if (n < 1) throw DomainError("n must be positive");
    std::uint64_t total = 0;
    for (int k = 1; k <= n + 1; ++k) {
        std::uint64_t lists = shape == SymmetricShape::Square ? factorial(n) / factorial(k - 1)
                                                              : factorial(n + 1) / factorial(k);
        std::uint64_t term = checked_mul(checked_mul(lists, binom(n, k - 1)), std::uint64_t{1} << (n - k + 1));
        total = checked_add(total, term);
    }
    return total;
}

namespace {

std::uint64_t symmetric_count(int m, int n, const EnumerationLimits& limits) {
    return enumerate_symmetric_mazes(m, n, limits).size();
}

// Closed form for #symmetric 2m x 2n mazes when one is available (square, or sides differing by 2).
std::optional<std::uint64_t> symmetric_closed(int m, int n) {
    if (m == n) return count_symmetric_closed(SymmetricShape::Square, n);
    if (m == n + 1) return count_symmetric_closed(SymmetricShape::Tall, n);
    if (n == m + 1) return count_symmetric_closed(SymmetricShape::Tall, m);
    return std::nullopt;
}

CountReport symmetric_row(const std::string& family, const std::string& label, int m, int n, bool odd_rows,
                          bool odd_cols, const EnumerationLimits& limits) {
    CountReport rep;
    rep.family = family;
    rep.label = label;
    rep.params = {{"m", m}, {"n", n}};
    rep.enumerated = symmetric_count(2 * m, 2 * n, limits);
    rep.closed_form = symmetric_closed(m, n);
    if (odd_rows)
        rep.companions.emplace_back("#sym(" + std::to_string(2 * m + 1) + "x" + std::to_string(2 * n) + ")",
                                    symmetric_count(2 * m + 1, 2 * n, limits));
    if (odd_cols)
        rep.companions.emplace_back("#sym(" + std::to_string(2 * m) + "x" + std::to_string(2 * n + 1) + ")",
                                    symmetric_count(2 * m, 2 * n + 1, limits));
    return rep;
}

std::string osp(int a, int b) { return "osp(" + std::to_string(a) + "|" + std::to_string(b) + ")"; }

}  // namespace

std::vector<CountReport> table1(int max_m, int max_n, const EnumerationLimits& limits, const Table1Config& config) {
    if (max_m < 1 || max_n < 1) throw DomainError("table bounds must be positive");
    std::vector<CountReport> rows;
    auto gl_row = [&](const std::string& family, int m, int n) {
        CountReport rep;
        rep.family = family;
        rep.label = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
        rep.params = {{"M", m}, {"N", n}};
        rep.enumerated = enumerate_mazes(m, n, limits).size();
        rep.closed_form = count_rooks_closed(m, n);
        rows.push_back(std::move(rep));
    };
    for (int n = 1; n <= max_n; ++n) gl_row("gl(N|N)", n, n);
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m < n && m <= max_m; ++m) gl_row("gl(M|N)", m, n);
    for (int n = 1; n <= std::min(max_m, max_n); ++n)
        rows.push_back(symmetric_row("osp(2n+1|2n)", osp(2 * n + 1, 2 * n), n, n, true, false, limits));
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m < n && m <= max_m; ++m) {
            rows.push_back(symmetric_row("osp(2m+1|2n)", osp(2 * m + 1, 2 * n), m, n, true, false, limits));
            rows.push_back(symmetric_row("osp(2n+1|2m)", osp(2 * n + 1, 2 * m), m, n, false, true, limits));
            rows.push_back(symmetric_row("osp(2n|2m)", osp(2 * n, 2 * m), m, n, true, false, limits));
        }
    for (int n = 1; n <= max_n; ++n)
        for (int m = 1; m <= n && m <= max_m; ++m)
            rows.push_back(symmetric_row("osp(2m|2n)", osp(2 * m, 2 * n), m, n, false, true, limits));
    for (auto [family, value] : {std::pair<const char*, std::uint64_t>{"f(4)", config.f4_count},
                                 std::pair<const char*, std::uint64_t>{"g(3)", config.g3_count}}) {
        CountReport rep;
        rep.family = family;
        rep.label = family;
        rep.enumerated = value;
        rep.computed = false;
        rows.push_back(std::move(rep));
    }
    for (auto& rep : rows) {
        rep.match = !rep.closed_form || *rep.closed_form == rep.enumerated;
        for (auto& [name, v] : rep.companions) rep.match = rep.match && v == rep.enumerated;
    }
    return rows;
}

std::string format_table1(const std::vector<CountReport>& rows, const std::string& format) {
    if (format != "csv" && format != "md") throw DomainError("table format must be csv or md");
    std::ostringstream out;
    auto params = [](const CountReport& r) {
        std::string s;
        for (auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
        return s;
    };
    auto companions = [](const CountReport& r) {
        std::string s;
        for (auto& [k, v] : r.companions) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
        return s;
    };
    if (format == "csv") {
        out << "family,label,params,count,closed_form,companions,source,match\n";
        for (const auto& r : rows)
            out << '"' << r.family << "\"," << r.label << ',' << params(r) << ',' << r.enumerated << ','
                << (r.closed_form ? std::to_string(*r.closed_form) : "") << ',' << companions(r) << ','
                << (r.computed ? "enumerated" : "configured") << ',' << (r.match ? "true" : "false") << '\n';
    } else {
        out << "| family | label | params | count | closed form | companions | source | match |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (const auto& r : rows)
            out << "| " << r.family << " | " << r.label << " | " << params(r) << " | " << r.enumerated << " | "
                << (r.closed_form ? std::to_string(*r.closed_form) : "") << " | " << companions(r) << " | "
                << (r.computed ? "enumerated" : "configured") << " | " << (r.match ? "yes" : "NO") << " |\n";
    }
    return out.str();
}

}  // namespace rookmaze
