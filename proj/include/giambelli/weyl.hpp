#pragma once

#include <map>
#include <string>
#include <vector>

#include "giambelli/formal_sum.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/theta_ring.hpp"

namespace isotropic {

// Signed permutation in window notation: w(i) for i = 1..n, with negative
// entries for barred values.
class SignedPerm {
public:
    SignedPerm() = default;
    explicit SignedPerm(std::vector<int> window);
    static SignedPerm identity(int n);
    // s_{a_1} s_{a_2} ... s_{a_l} in W_n, where s_0 negates position 1.
    static SignedPerm from_word(const std::vector<int>& word, int n);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const;  // w(0) = 0, w(i) = i past the window
    const std::vector<int>& window() const { return w_; }

    // Right multiplication by s_i acts on positions.
    SignedPerm times_generator(int i) const;
    SignedPerm inverse() const;
    SignedPerm resized(int n) const;
    friend SignedPerm operator*(const SignedPerm& a, const SignedPerm& b);
    friend bool operator==(const SignedPerm& a, const SignedPerm& b);
    friend bool operator<(const SignedPerm& a, const SignedPerm& b);

    // inv(w) + #{i <= j : w(i) + w(j) < 0}.
    int length() const;
    bool has_descent(int i) const;
    std::vector<int> descents() const;
    bool uses_sign_change() const;

    std::string str() const;

private:
    std::vector<int> w_;
};

// The k-Grassmannian element of λ ∈ P(k,n).
SignedPerm w_lambda(const Partition& lambda, int k, int n);
// Smallest n with λ ∈ P(k,n).
int minimal_rank(const Partition& lambda, int k);

std::vector<std::vector<int>> reduced_words(const SignedPerm& w);
bool is_reduced_word(const std::vector<int>& word, int n);

// Rows T_1, T_2, ... of a Kraśkiewicz tableau; T_1 is the top row.
struct KTableau {
    std::vector<std::vector<int>> rows;
    Partition shape() const;
    std::vector<int> row_word() const;  // T_l ... T_1
    std::string str() const;
    friend bool operator<(const KTableau& a, const KTableau& b) { return a.rows < b.rows; }
    friend bool operator==(const KTableau& a, const KTableau& b) { return a.rows == b.rows; }
};

bool is_unimodal(const std::vector<int>& seq);
// Length of a longest unimodal subsequence, by dynamic programming.
int longest_unimodal(const std::vector<int>& seq);
// Same quantity by exhaustive search over subsequences (short inputs only).
int longest_unimodal_bruteforce(const std::vector<int>& seq);
bool is_ktableau(const KTableau& t, const SignedPerm& w);

std::vector<KTableau> ktableaux(const SignedPerm& w);
std::vector<KTableau> ktableaux(const SignedPerm& w, const Partition& shape);

// F_w in the Q basis: sum over strict shapes of the tableau counts.
ThetaSum stanley_Q(const SignedPerm& w);
// F_w in the q-monomial basis (k = 0 ϑ basis).
ThetaSum stanley_F(const SignedPerm& w);

struct BHTerm {
    Partition nu;          // right factor is w_ν (type A Grassmannian, descent at k)
    SignedPerm u;          // w_λ w_ν^{-1}
    std::vector<KTableau> tableaux;
};
// Reduced factorizations w_λ = u w_ν with w_ν ∈ S_n, discovered from
// suffixes of reduced words.
std::vector<BHTerm> bh_factorizations(const Partition& lambda, int k);
// Coefficients e^λ_{μν} keyed by (μ, ν).
MixedSum bh_expand(const Partition& lambda, int k);

}  // namespace isotropic
