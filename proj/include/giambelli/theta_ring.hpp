#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "giambelli/formal_sum.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/raising_ops.hpp"

namespace isotropic {

// Elements of the ring generated by ϑ_1, ϑ_2, ... . Keys are sorted index
// multisets; after straightening every key is k-strict. The same type holds
// coordinates in the Θ basis when returned by to_theta_basis.
using ThetaSum = FormalSum<Partition>;

// Rewrites the leftmost repeated index m > k with
// ϑ_m^2 = 2 sum_{i=1}^{m} (-1)^{i+1} ϑ_{m+i} ϑ_{m-i} until all keys are k-strict.
ThetaSum straighten(const Monomial& alpha, int k);
ThetaSum straighten(const MonomialSum& e, int k);
// Same normal form reached by rewriting a uniformly random repeated pair.
ThetaSum straighten_random(const Monomial& alpha, int k, std::mt19937_64& rng);

ThetaSum theta_multiply(const ThetaSum& a, const ThetaSum& b, int k);

// Θ_λ = R^λ ϑ_λ in the ϑ basis.
const ThetaSum& theta(const Partition& lambda, int k);
// Coordinates in the Θ basis, by elimination of lex-smallest keys.
ThetaSum to_theta_basis(const ThetaSum& e, int k);
// Convert Θ-basis coordinates back to the ϑ basis.
ThetaSum from_theta_basis(const ThetaSum& coords, int k);

// ϑ̂_r = det(ϑ_{1+j-i})_{r×r}.
ThetaSum hat_theta(int r, int k);
// ϑ̂_λ = prod_i ϑ̂_{λ_i}.
ThetaSum hat_product(const Partition& lambda, int k);
// Coordinates in the basis {ϑ̂_λ : λ k-strict}, by exact elimination per
// degree (the transition matrix is not triangular). Coefficients may be
// non-integral.
ThetaSum to_hat_basis(const ThetaSum& e, int k);
// det(ϑ_{λ_i - μ_j + j - i}).
ThetaSum skew_S(const IntVec& lambda, const IntVec& mu, int k);
// Product of ϑ-basis elements given by a list of factors.
ThetaSum theta_product(const std::vector<ThetaSum>& factors, int k);

// Q_μ(x) ⊗ s_{ν'}(y) basis: key = (μ strict, ν with ν_1 <= k).
using MixedKey = std::pair<Partition, Partition>;
using MixedSum = FormalSum<MixedKey>;

// Substitutes ϑ_r = sum_i q_{r-i}(x) e_i(y) into Θ_λ.
MixedSum mixed_expand(const Partition& lambda, int k);
// Same expansion assembled as sum_α e_α(y) R^λ q_{λ-α}(x).
MixedSum mixed_expand_by_columns(const Partition& lambda, int k);
// Expansion of a product of e_i(y) in the s_{ν'} basis (k variables).
FormalSum<Partition> e_monomial_to_schur(const Monomial& e, int k);
// Q basis coordinates of a q-monomial sum.
ThetaSum q_to_Q_basis(const MonomialSum& q);

// Sparse polynomial in x_1..x_m, y_1..y_k with exact coefficients,
// truncated above a fixed total degree.
class Poly {
public:
    using Exp = std::vector<unsigned char>;
    Poly() = default;
    Poly(int nvars, int maxdeg) : nvars_(nvars), maxdeg_(maxdeg) {}
    static Poly constant(int nvars, int maxdeg, const Rational& c);
    static Poly variable(int nvars, int maxdeg, int var);

    int nvars() const { return nvars_; }
    int maxdeg() const { return maxdeg_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<Exp, Rational>& terms() const { return terms_; }
    void add_term(const Exp& e, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    int nvars_ = 0;
    int maxdeg_ = 0;
    std::map<Exp, Rational> terms_;
};

// Evaluation in m x-variables and k y-variables, truncated at degree maxdeg.
class Evaluator {
public:
    Evaluator(int m, int k, int maxdeg);
    int m() const { return m_; }
    int k() const { return k_; }

    const Poly& q(int r);
    const Poly& e_y(int i);
    const Poly& theta_r(int r);
    Poly one() const;

    Poly q_monomials(const MonomialSum& s);
    Poly e_monomials(const MonomialSum& s);
    Poly theta_monomials(const ThetaSum& s);
    // Q_μ(x) from its Pfaffian.
    Poly Q(const Partition& mu);
    // s_{ν'}(y) = det(e_{ν_i + j - i}(y)).
    Poly schur_conj(const Partition& nu);
    Poly mixed(const MixedSum& s);

private:
    int m_, k_, maxdeg_, nv_;
    std::vector<Poly> q_, e_, th_;
    std::map<Partition, Poly> Q_cache_;
};

void clear_theta_caches();

}  // namespace isotropic
