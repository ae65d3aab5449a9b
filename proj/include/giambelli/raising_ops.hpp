#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "giambelli/formal_sum.hpp"
#include "giambelli/partitions.hpp"

namespace isotropic {

using Pair = std::pair<int, int>;

// Strict: pairs i < j. Diagonal: pairs i <= j.
enum class PairMode { Strict, Diagonal };

// Finite set of index pairs (i, j), 1-indexed, kept sorted.
class PairSet {
public:
    explicit PairSet(PairMode mode = PairMode::Strict) : mode_(mode) {}
    PairSet(PairMode mode, std::vector<Pair> pairs);

    PairMode mode() const { return mode_; }
    bool in_domain(const Pair& p) const;
    bool contains(const Pair& p) const;
    bool contains(int i, int j) const { return contains(Pair{i, j}); }
    void insert(const Pair& p);
    void erase(const Pair& p);
    PairSet with(const Pair& p) const;

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }
    int diagonal_count() const;

    // Order ideal: (i,j) in D implies every domain pair (i',j') with
    // i' <= i and j' <= j is in D.
    bool is_valid() const;
    bool is_outer_corner(const Pair& p) const;
    std::optional<Pair> outer_corner_in_row(int i) const;
    std::optional<Pair> outer_corner_in_column(int j) const;
    std::vector<Pair> outer_corners() const;

    // Pairs with column index at most t.
    PairSet restrict_columns(int t) const;
    PairSet strict_part() const;
    bool subset_of(const PairSet& o) const;

    friend bool operator==(const PairSet& a, const PairSet& b) { return a.mode_ == b.mode_ && a.pairs_ == b.pairs_; }
    friend bool operator<(const PairSet& a, const PairSet& b) {
        return a.mode_ != b.mode_ ? a.mode_ < b.mode_ : a.pairs_ < b.pairs_;
    }

private:
    PairMode mode_;
    std::vector<Pair> pairs_;
};

// C_t(λ) = {(i,j) : i <= j <= t, λ_i + λ_j > 2k + j - i} (diagonal mode).
PairSet C_t(const IntVec& lambda, int k, int t);
// C(λ) = C_ℓ(λ).
PairSet C_of(const Partition& lambda, int k);
// C(λ) ∩ Δ°, the pair set of the raising operator R^λ.
PairSet C_strict(const Partition& lambda, int k);
// Least m with λ_m <= k.
int middle_row(const Partition& lambda, int k);
// Rim of D: pairs (i,j) not in D with i = 1 or (i-1, j-1) in D, j <= max_col.
std::vector<Pair> rim(const PairSet& d, int max_col);
// Rim pairs (i,j) of C with (i, j-1) in C or i = j = m.
std::vector<Pair> rim1(const PairSet& c, int m, int max_col);

// Polynomials in commuting variables c_1, c_2, ...; a key is the multiset
// of indices sorted in decreasing order (c_0 = 1 is dropped).
using Monomial = IntVec;
using MonomialSum = FormalSum<Monomial>;

Monomial sort_monomial(IntVec v);
MonomialSum monomial_product(const MonomialSum& a, const MonomialSum& b);

// R^D m_λ where R^D = prod_{(i,j) in D} (1-R_ij)/(1+R_ij) prod_{others i<j<=ℓ} (1-R_ij),
// evaluated with the recursion on the last entry of λ. D must be strict.
MonomialSum expand(const PairSet& d, const IntVec& lambda);

// Pfaffian of the matrix C_{λ_i, λ_j}, λ strict, padded to even length.
MonomialSum pfaffian_expand(const Partition& lambda);

// det(c_{f(i,j)}) for 1 <= i,j <= n, c_0 = 1 and c_r = 0 for r < 0.
MonomialSum det_expand(int n, const std::function<int(int, int)>& f);

// det(c_{λ_i - μ_j + j - i}).
MonomialSum jacobi_trudi(const IntVec& lambda, const IntVec& mu = {});

void clear_expand_cache();

}  // namespace isotropic
