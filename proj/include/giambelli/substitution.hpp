#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "giambelli/cohomology.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/raising_ops.hpp"
#include "giambelli/theta_ring.hpp"

namespace isotropic {

// A 4-tuple (D, μ, S, h). D and S hold pairs i <= j; μ has ℓ+1 entries.
struct FourTuple {
    PairSet D{PairMode::Diagonal};
    IntVec mu;
    PairSet S{PairMode::Diagonal};
    int h = 0;

    friend bool operator==(const FourTuple& a, const FourTuple& b) {
        return a.h == b.h && a.mu == b.mu && a.D == b.D && a.S == b.S;
    }
    friend bool operator<(const FourTuple& a, const FourTuple& b);
    std::string str() const;
};

enum class Rule { None, I, II, III, IV, V, Descend };
const char* rule_name(Rule r);

// Data attached to (λ, k): the auxiliary integers r(y), b_h, g_h and
// the sets R(μ) used by the rewriting rules.
class SubstitutionContext {
public:
    SubstitutionContext(Partition lambda, int k, bool modified = false);

    const Partition& lambda() const { return lambda_; }
    int k() const { return k_; }
    int ell() const { return ell_; }
    int middle() const { return m_; }
    bool modified() const { return modified_; }
    const PairSet& C() const { return C_; }

    int lam(int i) const;  // λ_i with λ_0 = +∞
    static int mu_at(const IntVec& mu, int i);  // μ_i with μ_0 = +∞

    int r(int y) const;
    int b(int h) const;
    int g(int h) const;
    bool in_R(const IntVec& mu, const Box& box) const;
    std::vector<Box> R_set(const IntVec& mu) const;
    // Defined for h >= 2 with μ_h >= λ_{h-1}; throws otherwise.
    int e(const IntVec& mu, int h) const;
    int f(const IntVec& mu, int h) const;

    bool W(const IntVec& mu, int i, int j) const;
    bool X(const FourTuple& t) const;

    struct Step {
        Rule rule = Rule::None;
        std::vector<FourTuple> children;
        bool stop = false;
    };
    // h = 0 tuples are leaves and yield Rule::None.
    Step apply(const FourTuple& t) const;

    std::vector<IntVec> root_compositions(int p) const;
    FourTuple root(const IntVec& nu) const;

    // The involution on stopped tuples; throws when undefined.
    FourTuple involution(const FourTuple& t) const;

private:
    Partition lambda_;
    int k_, ell_, m_;
    bool modified_;
    PairSet C_;
};

struct ForestNode {
    FourTuple tuple;
    Rule rule = Rule::None;
    int parent = -1;
    std::vector<int> children;
};

struct Forest {
    Partition lambda;
    int p = 0;
    int k = 0;
    bool modified = false;
    std::vector<ForestNode> nodes;
    std::vector<int> roots;
    std::vector<int> psi0;  // leaves with h = 0
    std::vector<int> psi1;  // leaves that met a stop rule
};

Forest build_forest(const Partition& lambda, int p, int k, bool modified = false);
// Trees grown from the given roots only.
Forest build_forest_from(const SubstitutionContext& ctx, int p, const std::vector<IntVec>& roots);

// OG space in which ev is computed for (λ, p).
Space ev_space(const Partition& lambda, int p, int k);
// ev(ψ) = T(D, μ) in the cohomology of the given space (family B).
SchubertSum ev(const FourTuple& t, const Space& s);
// Image of T(D, μ) in the theta ring (ϑ basis).
ThetaSum ev_theta(const FourTuple& t, int k);

struct ModifiedStats {
    std::size_t psi1 = 0;
    std::size_t nonzero = 0;
};
ModifiedStats modified_forest(const Partition& lambda, int p, int k);

struct SSets {
    std::vector<Box> A;
    std::vector<Box> distinguished;
    std::vector<Box> optional_boxes;
    std::vector<Pair> E, F, G;
    std::vector<PairSet> S;  // S(E') for every E' ⊆ E
};
// nullopt when λ ↛ μ.
std::optional<SSets> pieri_S_sets(const Partition& lambda, const Partition& mu, int k);

// Free boxes of the Pieri rule characterized through R(μ): boxes of μ∖λ
// in columns > k outside R(μ).
std::vector<Box> free_boxes_via_R(const Partition& lambda, const Partition& mu, int k);

struct ClaimReport {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<std::string> failures;
    void fail(std::string msg);
};

ClaimReport verify_claim1(const Partition& lambda, int p, int k);
ClaimReport verify_claim2(const Partition& lambda, int p, int k);
// Claim 1 for a single μ, growing only trees whose roots can reach μ.
struct TargetedClaim {
    ClaimReport report;
    std::size_t roots = 0;
    std::vector<std::size_t> sets_per_root;
    SSets ssets;
};
TargetedClaim verify_claim1_targeted(const Partition& lambda, const Partition& mu, int k);

}  // namespace isotropic
