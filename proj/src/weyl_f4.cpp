#include "rookmaze/weyl_f4.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

namespace rookmaze {

const std::vector<RootC3>& positive_roots() {
    static const std::vector<RootC3> roots{{2, 0, 0}, {0, 2, 0}, {0, 0, 2},  {1, -1, 0}, {1, 0, -1},
                                           {0, 1, -1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
    return roots;
}

bool is_positive_root(const RootC3& a) {
    const auto& r = positive_roots();
    return std::find(r.begin(), r.end(), a) != r.end();
}

std::string root_name(const RootC3& a) {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        const std::string e = "e" + std::to_string(i + 1);
        if (a[i] == 2) out += "2" + e;
        else if (a[i] == -2) out += "-2" + e;
        else if (a[i] == 1) out += (out.empty() ? "" : "+") + e;
        else out += "-" + e;
    }
    return out.empty() ? "0" : out;
}

WeylElement::WeylElement() = default;

WeylElement WeylElement::simple(int i) {
    WeylElement w;
    if (i == 1) std::swap(w.target_[0], w.target_[1]);
    else if (i == 2) std::swap(w.target_[1], w.target_[2]);
    else if (i == 3) w.sign_[2] = -1;
    else throw DomainError("simple reflection index must be 1, 2 or 3");
    w.word_ = {i};
    return w;
}

WeylElement WeylElement::from_word(const std::vector<int>& word) {
    WeylElement w;
    for (int i : word) w = w * simple(i);
    w.word_ = word;
    return w;
}

RootC3 WeylElement::apply(const RootC3& a) const {
    RootC3 out{0, 0, 0};
    for (int i = 0; i < 3; ++i) out[target_[i]] += sign_[i] * a[i];
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement w;
    for (int i = 0; i < 3; ++i) {
        w.target_[i] = target_[o.target_[i]];
        w.sign_[i] = o.sign_[i] * sign_[o.target_[i]];
    }
    w.word_ = word_;
    w.word_.insert(w.word_.end(), o.word_.begin(), o.word_.end());
    return w;
}

WeylElement WeylElement::inverse() const {
    WeylElement w;
    for (int i = 0; i < 3; ++i) {
        w.target_[target_[i]] = i;
        w.sign_[target_[i]] = sign_[i];
    }
    w.word_.assign(word_.rbegin(), word_.rend());
    return w;
}

int WeylElement::length() const {
    int l = 0;
    for (const RootC3& a : positive_roots()) {
        RootC3 b = apply(a);
        if (!is_positive_root(b)) ++l;
    }
    return l;
}

std::string WeylElement::name() const {
    if (word_.empty()) return "e";
    std::string s = "s";
    for (int i : word_) s += std::to_string(i);
    return s;
}

std::vector<WeylElement> weyl_elements() {
    std::vector<WeylElement> out{WeylElement()};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const WeylElement w = out[queue.front()];
        queue.pop_front();
        for (int i = 1; i <= 3; ++i) {
            WeylElement next = w * WeylElement::simple(i);
            if (std::find(out.begin(), out.end(), next) != out.end()) continue;
            out.push_back(next);
            queue.push_back(out.size() - 1);
        }
    }
    return out;
}

std::vector<WeylElement> relevant_weyl_filter() {
    std::vector<WeylElement> out;
    for (const WeylElement& w : weyl_elements()) {
        WeylElement inv = w.inverse();
        if (!is_positive_root(inv.apply({1, 0, -1})) && !is_positive_root(inv.apply({0, 1, 1}))) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> coset_maximal(const std::vector<WeylElement>& ws) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : ws) {
        const int l = w.length();
        if ((w * WeylElement::simple(1)).length() < l && (w * WeylElement::simple(3)).length() < l) out.push_back(w);
    }
    return out;
}

std::vector<WeylElement> left_coset_maximal(const std::vector<WeylElement>& ws) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : ws) {
        const int l = w.length();
        if ((WeylElement::simple(1) * w).length() < l && (WeylElement::simple(3) * w).length() < l) out.push_back(w);
    }
    return out;
}

std::vector<RootC3> stabilizer_roots(const WeylElement& w) {
    std::vector<RootC3> out;
    const WeylElement inv = w.inverse();
    for (const RootC3& a : positive_roots())
        if (is_positive_root(inv.apply(a))) out.push_back(a);
    return out;
}

namespace {

// Weight of basis vector v_j (1-based).
RootC3 weight(int j) {
    RootC3 w{0, 0, 0};
    if (j <= 3) w[j - 1] = 1;
    else w[6 - j] = -1;
    return w;
}

int index_of_weight(const RootC3& w) {
    for (int j = 1; j <= 6; ++j)
        if (weight(j) == w) return j;
    throw DomainError("not a weight of the standard representation");
}

RootC3 diff(const RootC3& a, const RootC3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

QMatrix exp_nilpotent(const QMatrix& x) {
    QMatrix out = QMatrix::identity(x.rows()), term = QMatrix::identity(x.rows());
    for (int k = 1; k <= x.rows(); ++k) {
        term = (term * x).scaled(Rational(1, k));
        if (term.is_zero_matrix()) break;
        out = out + term;
    }
    return out;
}

QMatrix random_unipotent(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-10, 10);
    QMatrix u = QMatrix::identity(6);
    for (const RootC3& a : positive_roots()) u = u * exp_nilpotent(root_vector(a).scaled(Rational(coef(rng))));
    return u;
}

std::vector<QMatrix> full_unipotent_algebra() {
    std::vector<QMatrix> basis;
    for (const RootC3& a : positive_roots()) basis.push_back(root_vector(a));
    return basis;
}

// The 8-dimensional algebra: root spaces other than e1-e2 and 2e3, plus the diagonal generator.
std::vector<QMatrix> literal_unipotent_algebra() {
    std::vector<QMatrix> basis;
    for (const RootC3& a : positive_roots())
        if (a != RootC3{1, -1, 0} && a != RootC3{0, 0, 2}) basis.push_back(root_vector(a));
    basis.push_back(diagonal_unipotent_generator());
    return basis;
}

// Samples generic points u . x_w, requiring stabilizer dimension `expected` inside `probe`,
// and evaluates the character on the stabilizer inside `algebra`.
SplitVerdict sample_character(const WeylElement& w, const std::vector<QMatrix>& probe, std::size_t expected,
                              const std::vector<QMatrix>& algebra, int trials, std::uint64_t seed) {
    SplitVerdict v;
    v.word = w.name();
    v.trials = trials;
    v.stabilizer_roots = stabilizer_roots(w);
    std::mt19937_64 rng(seed);
    const QMatrix wdot = weyl_matrix(w);
    for (int t = 0; t < trials;) {
        QMatrix g = random_unipotent(rng) * wdot;
        if (flag_stabilizer(g, probe).size() != expected) {
            if (++v.resamples > 100 * trials) throw DomainError("sampling keeps hitting degenerate points");
            continue;
        }
        ++t;
        for (const QMatrix& xi : flag_stabilizer(g, algebra))
            if (!is_zero(f4_character(xi))) {
                ++v.nonzero_trials;
                break;
            }
    }
    bool structural = true;
    for (const RootC3& a : v.stabilizer_roots)
        if (a == RootC3{1, 0, -1} || a == RootC3{0, 1, 1}) structural = false;
    v.relevant = v.nonzero_trials == 0 && structural;
    return v;
}

}  // namespace

QMatrix sp6_form() {
    QMatrix j(6, 6);
    for (int i = 0; i < 6; ++i) j(i, 5 - i) = i < 3 ? 1 : -1;
    return j;
}

bool in_sp6(const QMatrix& x) {
    QMatrix j = sp6_form();
    return (x.transpose() * j + j * x).is_zero_matrix();
}

QMatrix weyl_matrix(const WeylElement& w) {
    QMatrix p(6, 6);
    for (int i = 1; i <= 3; ++i) {
        const int a = index_of_weight(w.apply(weight(i)));
        p(a - 1, i - 1) = 1;
        p(6 - a, 6 - i) = a <= 3 ? 1 : -1;
    }
    return p;
}

QMatrix root_vector(const RootC3& a) {
    std::vector<std::pair<int, int>> positions;
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j)
            if (i != j && diff(weight(i), weight(j)) == a) positions.emplace_back(i, j);
    if (positions.empty()) throw DomainError("not a root: " + root_name(a));
    const QMatrix form = sp6_form();
    QMatrix system(36, static_cast<int>(positions.size()));
    for (std::size_t k = 0; k < positions.size(); ++k) {
        QMatrix e(6, 6);
        e(positions[k].first - 1, positions[k].second - 1) = 1;
        QMatrix c = e.transpose() * form + form * e;
        for (int t = 0; t < 36; ++t) system(t, static_cast<int>(k)) = c(t / 6, t % 6);
    }
    auto kernel = nullspace(system);
    if (kernel.size() != 1) throw DomainError("root space is not one-dimensional");
    QMatrix x(6, 6);
    for (std::size_t k = 0; k < positions.size(); ++k) x(positions[k].first - 1, positions[k].second - 1) = kernel[0][k];
    for (int t = 0; t < 36; ++t)
        if (!is_zero(x(t / 6, t % 6))) return x.scaled(1 / Rational(x(t / 6, t % 6)));
    return x;
}

Rational f4_character(const QMatrix& x) { return x(0, 2) + x(1, 3); }

QMatrix diagonal_unipotent_generator() {
    const QMatrix e1 = root_vector({1, -1, 0}), e3 = root_vector({0, 0, 2});
    // f(X) = psi([E, X]) on the root spaces of the 7-dimensional radical.
    Rational c;
    bool found = false;
    std::vector<std::pair<Rational, Rational>> values;
    for (const RootC3& a : positive_roots()) {
        if (a == RootC3{1, -1, 0} || a == RootC3{0, 0, 2}) continue;
        QMatrix x = root_vector(a);
        values.emplace_back(f4_character(e1 * x - x * e1), f4_character(e3 * x - x * e3));
    }
    for (const auto& [f1, f3] : values)
        if (!is_zero(f3)) {
            c = -f1 / f3;
            found = true;
            break;
        }
    if (!found) throw DomainError("character is not preserved by any diagonal generator");
    for (const auto& [f1, f3] : values)
        if (!is_zero(f1 + c * f3)) throw DomainError("character is not preserved by any diagonal generator");
    return e1 + e3.scaled(c);
}

QMatrix diagonal_torus_generator() {
    QMatrix t(6, 6);
    for (int i = 0; i < 6; ++i) t(i, i) = i % 2 == 0 ? 1 : -1;
    return t;
}

std::vector<QMatrix> flag_stabilizer(const QMatrix& g, const std::vector<QMatrix>& algebra) {
    const int n = g.rows();
    const QMatrix ginv = inverse(g);
    QMatrix system(n * (n - 1) / 2, static_cast<int>(algebra.size()));
    for (std::size_t k = 0; k < algebra.size(); ++k) {
        QMatrix c = ginv * algebra[k] * g;
        int row = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) system(row++, static_cast<int>(k)) = c(i, j);
    }
    std::vector<QMatrix> out;
    for (const auto& v : nullspace(system)) {
        QMatrix x(n, n);
        for (std::size_t k = 0; k < algebra.size(); ++k)
            if (!is_zero(v[k])) x = x + algebra[k].scaled(v[k]);
        out.push_back(std::move(x));
    }
    return out;
}

SplitVerdict split_orbit_relevance(const WeylElement& w, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be positive");
    auto algebra = full_unipotent_algebra();
    return sample_character(w, algebra, static_cast<std::size_t>(9 - w.length()), algebra, trials, seed);
}

F4Audit f4_component_count(int trials, std::uint64_t seed) {
    F4Audit audit;
    const auto relevant = relevant_weyl_filter();
    for (const auto& w : relevant) audit.relevant_words.push_back(w.name());
    int count = static_cast<int>(relevant.size());
    for (const auto& w : coset_maximal(relevant)) {
        audit.split_words.push_back(w.name());
        audit.split_verdicts.push_back(split_orbit_relevance(w, trials, seed));
        count += audit.split_verdicts.back().relevant;
    }
    audit.count = count;

    // Literal model: stabilizer dimensions at torus-fixed points, all 48 elements.
    const auto literal = literal_unipotent_algebra();
    audit.stabilizer_dimensions_agree = true;
    for (const auto& w : weyl_elements()) {
        const auto roots = stabilizer_roots(w);
        auto has = [&](RootC3 a) { return std::find(roots.begin(), roots.end(), a) != roots.end(); };
        std::size_t expected = 0;
        for (const RootC3& a : roots)
            if (a != RootC3{1, -1, 0} && a != RootC3{0, 0, 2}) ++expected;
        if (has({1, -1, 0}) && has({0, 0, 2})) ++expected;
        if (flag_stabilizer(weyl_matrix(w), literal).size() != expected) audit.stabilizer_dimensions_agree = false;
    }
    auto with_torus = literal;
    with_torus.push_back(diagonal_torus_generator());
    int literal_count = static_cast<int>(relevant.size());
    for (const auto& w : relevant) {
        // The torus-fixed point's orbit has dimension 8 - dim Stab; splitting means it misses a direction.
        const int orbit_dim = 8 - static_cast<int>(flag_stabilizer(weyl_matrix(w), literal).size());
        if (orbit_dim == w.length()) continue;
        audit.literal_split_words.push_back(w.name());
        SplitVerdict v = w.length() == 9 ? SplitVerdict{w.name(), true, 0, trials, 0, stabilizer_roots(w)}
                                         : sample_character(w, literal, static_cast<std::size_t>(9 - w.length()), with_torus, trials, seed);
        literal_count += v.relevant;
        audit.literal_split_verdicts.push_back(std::move(v));
    }
    audit.literal_count = literal_count;
    return audit;
}

Json to_json(const F4Audit& audit) {
    auto verdicts = [](const std::vector<SplitVerdict>& vs) {
        Json arr = Json::array();
        for (const auto& v : vs) {
            Json j;
            j["word"] = v.word;
            j["relevant"] = v.relevant;
            j["nonzero_trials"] = v.nonzero_trials;
            j["trials"] = v.trials;
            j["resamples"] = v.resamples;
            Json roots = Json::array();
            for (const auto& a : v.stabilizer_roots) roots.push_back(root_name(a));
            j["stabilizer_roots"] = roots;
            arr.push_back(j);
        }
        return arr;
    };
    Json j;
    j["count"] = audit.count;
    j["relevant_words"] = audit.relevant_words;
    j["split_words"] = audit.split_words;
    j["split_verdicts"] = verdicts(audit.split_verdicts);
    Json lit;
    lit["stabilizer_dimensions_agree"] = audit.stabilizer_dimensions_agree;
    lit["split_words"] = audit.literal_split_words;
    lit["split_verdicts"] = verdicts(audit.literal_split_verdicts);
    lit["count"] = audit.literal_count;
    j["literal_unipotent_check"] = lit;
    return j;
}

}  // namespace rookmaze
