#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "rookmaze/codec.hpp"
#include "rookmaze/linear_side.hpp"

namespace rookmaze {

// Root of type C3 in the basis e1, e2, e3.
using RootC3 = std::array<int, 3>;

// 2e_i, e_i - e_j, e_i + e_j (i < j): nine roots. Simple roots e1-e2, e2-e3, 2e3.
const std::vector<RootC3>& positive_roots();
bool is_positive_root(const RootC3& a);
std::string root_name(const RootC3& a);

// Signed permutation of e1, e2, e3, with a reduced word over s1 (swap e1,e2), s2 (swap e2,e3),
// s3 (negate e3). The word reads left to right as a product of reflections.
class WeylElement {
public:
    WeylElement();  // identity
    static WeylElement simple(int i);
    static WeylElement from_word(const std::vector<int>& word);

    RootC3 apply(const RootC3& a) const;
    WeylElement operator*(const WeylElement& o) const;  // composition, this after o
    WeylElement inverse() const;
    int length() const;  // number of positive roots sent to negative roots

    const std::vector<int>& word() const { return word_; }
    std::string name() const;  // "s21321", "e" for the identity
    // 0-based index and sign of the image of e_{i+1}.
    std::pair<int, int> image_of_basis(int i) const { return {target_[i], sign_[i]}; }

    bool operator==(const WeylElement& o) const { return target_ == o.target_ && sign_ == o.sign_; }
    bool operator<(const WeylElement& o) const { return std::tie(target_, sign_) < std::tie(o.target_, o.sign_); }

private:
    std::array<int, 3> target_{0, 1, 2};
    std::array<int, 3> sign_{1, 1, 1};
    std::vector<int> word_;
};

// All 48 elements with shortest words (breadth-first, generators appended on the right in order s1, s2, s3).
std::vector<WeylElement> weyl_elements();
// {w : w^{-1}(e1-e3) and w^{-1}(e2+e3) are negative}.
std::vector<WeylElement> relevant_weyl_filter();
// Elements of maximal length in w<s1,s3> (right coset).
std::vector<WeylElement> coset_maximal(const std::vector<WeylElement>& ws);
// Elements of maximal length in <s1,s3>w (left coset).
std::vector<WeylElement> left_coset_maximal(const std::vector<WeylElement>& ws);
// Roots of the stabilizer of the torus-fixed point of the Schubert cell: R+ intersected with w(R+).
std::vector<RootC3> stabilizer_roots(const WeylElement& w);

// sp(6) on v1..v6 with <v_i, v_{7-i}> = 1 = -<v_{7-i}, v_i>; v_i has weight e_i, v_{7-i} weight -e_i (i <= 3).
QMatrix sp6_form();
bool in_sp6(const QMatrix& x);
// Signed permutation matrix in Sp(6) moving weight spaces by w.
QMatrix weyl_matrix(const WeylElement& w);
// Root vector in sp(6), normalised to 1 at its first nonzero entry in row-major order.
QMatrix root_vector(const RootC3& a);
// The character u_13 + u_24.
Rational f4_character(const QMatrix& x);
// E_{e1-e2} + c E_{2e3} for the unique c making it preserve the character on the unipotent radical.
QMatrix diagonal_unipotent_generator();
// diag(1,-1,1,-1,1,-1): the coweight e1* - e2* + e3*.
QMatrix diagonal_torus_generator();
// Basis of {xi in span(algebra) : g^{-1} xi g upper triangular}.
std::vector<QMatrix> flag_stabilizer(const QMatrix& g, const std::vector<QMatrix>& algebra);

struct SplitVerdict {
    std::string word;
    bool relevant = false;
    int nonzero_trials = 0;  // samples on which the character did not vanish
    int trials = 0;
    int resamples = 0;
    std::vector<RootC3> stabilizer_roots;
};

// Character test on the stabilizer in the full unipotent radical of a generic point u . x_w of the
// Schubert cell, u a product of root-group elements with integer parameters in [-10, 10].
SplitVerdict split_orbit_relevance(const WeylElement& w, int trials, std::uint64_t seed);

struct F4Audit {
    std::vector<std::string> relevant_words;
    std::vector<std::string> split_words;
    std::vector<SplitVerdict> split_verdicts;
    int count = 0;
    // Recomputation with the 8-dimensional unipotent group itself (root spaces other than e1-e2 and
    // 2e3, plus the diagonal generator) and the one-dimensional torus.
    bool stabilizer_dimensions_agree = false;  // matrix vs combinatorial, all 48 elements
    std::vector<std::string> literal_split_words;
    std::vector<SplitVerdict> literal_split_verdicts;
    int literal_count = 0;
};

F4Audit f4_component_count(int trials = 20, std::uint64_t seed = 1);
Json to_json(const F4Audit& audit);

}  // namespace rookmaze
