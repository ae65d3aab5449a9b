#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "giambelli/formal_sum.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/raising_ops.hpp"

namespace isotropic {

// Family C: IG(n-k, 2n), basis σ_λ, special classes σ_p.
// Family B: OG(n-k, 2n+1), basis τ_λ, special classes c_p (= τ_p or 2τ_p).
struct Space {
    Family family = Family::C;
    int k = 0;
    int n = 1;
    friend auto operator<=>(const Space&, const Space&) = default;
};

std::string describe(const Space& s);
void validate(const Space& s);

using SchubertSum = FormalSum<Partition>;

// λ_j - 1 <= μ_j <= λ_{j-1}, and λ_j <= μ_j whenever λ_j > k.
bool interlaces(const Partition& lambda, const Partition& mu, int k);

// Boxes of μ∖λ in columns > k that are not tied to the first k columns by
// the k-related conditions; nullopt if λ → μ fails.
std::optional<std::vector<Box>> pieri_free_boxes(const Partition& lambda, const Partition& mu, int k);
// N(λ,μ): number of connected components of the free boxes, nullopt if λ ↛ μ.
std::optional<int> pieri_exponent(const Partition& lambda, const Partition& mu, int k);
// Number of 8-connected components of a box set.
int box_components(const std::vector<Box>& bs);

// c_p τ_λ (family B) or σ_p σ_λ (family C), truncated to P(k,n).
const SchubertSum& pieri(const Partition& lambda, int p, const Space& s);
// Product of special classes, indices in 1..n+k.
SchubertSum reduce_monomial(const Monomial& alpha, const Space& s);
// Raising-operator formula for the Schubert class of λ, reduced with Pieri.
SchubertSum giambelli(const Partition& lambda, const Space& s);
// Giambelli expansion of a class in special-class monomials (entries > n+k dropped).
MonomialSum giambelli_monomials(const Partition& lambda, const Space& s);

// Product via Giambelli and iterated Pieri.
SchubertSum multiply(const SchubertSum& a, const SchubertSum& b, const Space& s);
// Product computed in the theta ring and truncated to P(k,n).
SchubertSum multiply_via_theta(const SchubertSum& a, const SchubertSum& b, const Space& s);

// σ_r^2 + 2 sum_{i=1}^{n+k-r} (-1)^i σ_{r+i} σ_{r-i} (c in place of σ for B).
SchubertSum presentation_relation(const Space& s, int r);
bool verify_presentation(const Space& s, int r);

// Rank at which products of classes of the given weights are stable.
int stable_n(int weight_a, int weight_b, int k);

void clear_cohomology_caches();

// Cache persistence: Pieri tables of every space touched so far.
std::size_t pieri_cache_entries();
void save_pieri_cache(const std::string& path);
std::size_t load_pieri_cache(const std::string& path);

}  // namespace isotropic
