#include <doctest.h>

#include <map>
#include <set>

#include "giambelli/substitution.hpp"

using namespace isotropic;

namespace {

PairSet pairs(std::vector<Pair> ps) { return PairSet(PairMode::Diagonal, std::move(ps)); }

FourTuple tuple(std::vector<Pair> d, IntVec mu, std::vector<Pair> s, int h) {
    FourTuple t;
    t.D = pairs(std::move(d));
    t.mu = std::move(mu);
    t.S = pairs(std::move(s));
    t.h = h;
    return t;
}

std::set<FourTuple> leaves(const Forest& f, const std::vector<int>& ids) {
    std::set<FourTuple> out;
    for (int id : ids) out.insert(f.nodes[id].tuple);
    return out;
}

bool subset(const std::vector<Pair>& a, const std::set<Pair>& b) {
    for (const auto& p : a)
        if (!b.count(p)) return false;
    return true;
}

template <class F>
void for_small_cases(int max_weight, int max_p, F&& f) {
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(max_weight, k))
            for (int p = 1; p <= max_p; ++p) f(lam, p, k);
}

}  // namespace

TEST_CASE("forest for (2,1,1), p=1, k=1") {
    SubstitutionContext ctx({2, 1, 1}, 1);
    const auto roots = ctx.root_compositions(1);
    CHECK(std::set<IntVec>(roots.begin(), roots.end()) ==
          std::set<IntVec>{{2, 1, 1, 1}, {2, 1, 2, 0}, {2, 2, 1, 0}, {3, 1, 1, 0}});
    const Forest f = build_forest({2, 1, 1}, 1, 1);
    CHECK(leaves(f, f.psi0) == std::set<FourTuple>{
                                   tuple({{1, 1}}, {2, 1, 1, 1}, {}, 0),
                                   tuple({{1, 1}, {1, 2}}, {3, 1, 1, 0}, {{1, 2}}, 0),
                                   tuple({{1, 1}, {1, 2}}, {3, 1, 1, 0}, {}, 0),
                                   tuple({{1, 1}, {1, 2}, {1, 3}}, {5, 0, 0, 0}, {{1, 2}, {1, 3}}, 0),
                               });
    CHECK(leaves(f, f.psi1) == std::set<FourTuple>{
                                   tuple({{1, 1}, {1, 2}, {2, 2}}, {2, 2, 1, 0}, {}, 2),
                                   tuple({{1, 1}, {1, 2}, {2, 2}}, {2, 2, 1, 0}, {{2, 2}}, 2),
                                   tuple({{1, 1}}, {2, 1, 2, 0}, {}, 3),
                               });
}

TEST_CASE("single rule applications") {
    SubstitutionContext ctx({2, 1, 1}, 1);
    const auto stop = ctx.apply(tuple({{1, 1}}, {2, 1, 2, 0}, {}, 3));
    CHECK(stop.stop);
    CHECK(stop.rule == Rule::II);
    const auto split = ctx.apply(tuple({{1, 1}}, {2, 2, 1, 0}, {}, 2));
    CHECK(split.children.size() == 2);
    CHECK(split.children[0] == tuple({{1, 1}, {1, 2}}, {2, 2, 1, 0}, {}, 2));
    CHECK(split.children[1] == tuple({{1, 1}, {1, 2}}, {3, 1, 1, 0}, {{1, 2}}, 2));
    CHECK(ctx.apply(tuple({{1, 1}}, {2, 1, 1, 1}, {}, 0)).rule == Rule::None);
    CHECK_THROWS_AS(ctx.e({2, 1, 1, 1}, 1), std::logic_error);
}

TEST_CASE("forest for (1), p=1, k=1") {
    const Forest f = build_forest({1}, 1, 1);
    CHECK(leaves(f, f.psi0) == std::set<FourTuple>{
                                   tuple({}, {1, 1}, {}, 0),
                                   tuple({{1, 1}}, {2, 0}, {}, 0),
                                   tuple({{1, 1}}, {2, 0}, {{1, 1}}, 0),
                               });
    CHECK(f.psi1.empty());
    CHECK_THROWS_AS(build_forest({1}, 0, 1), std::invalid_argument);
}

TEST_CASE("involution example") {
    SubstitutionContext ctx({3, 1}, 1);
    const FourTuple psi = tuple({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}, {3, 4, 1}, {{2, 2}}, 2);
    const FourTuple img = ctx.involution(psi);
    CHECK(img == tuple({{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}, {4, 3, 1}, {{1, 3}}, 2));
    CHECK(ctx.involution(img) == psi);
}

TEST_CASE("modified forest") {
    const ModifiedStats st = modified_forest({4, 3, 1, 1}, 6, 1);
    CHECK(st.psi1 == 1119);
    CHECK(st.nonzero == 543);
    const Forest a = build_forest({2, 1, 1}, 1, 1), b = build_forest({2, 1, 1}, 1, 1, true);
    CHECK(leaves(a, a.psi0) == leaves(b, b.psi0));
    CHECK(leaves(a, a.psi1) == leaves(b, b.psi1));
}

TEST_CASE("large example with k = 5") {
    const auto r = verify_claim1_targeted({22, 21, 18, 16, 14, 7, 5, 4, 3, 3, 1}, {25, 21, 19, 17, 15, 14, 6, 5, 3, 2, 2}, 5);
    CHECK(r.report.ok);
    CHECK(r.roots == 32);
    for (auto n : r.sets_per_root) CHECK(n == 2);
    CHECK(std::find(r.ssets.E.begin(), r.ssets.E.end(), Pair{7, 7}) != r.ssets.E.end());
}

TEST_CASE("S-sets") {
    const auto s = pieri_S_sets({2, 1, 1}, {5}, 1);
    REQUIRE(s.has_value());
    CHECK(s->A.empty());
    CHECK(s->E.empty());
    CHECK(s->F.empty());
    CHECK(s->G == std::vector<Pair>{{1, 2}, {1, 3}});
    CHECK(s->S.size() == 1);
    CHECK_FALSE(pieri_S_sets({2, 1, 1}, {2, 2, 1}, 1).has_value());
}

TEST_CASE("free boxes through R agree with the Pieri rule") {
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(6, k))
            for (int p = 1; p <= 4; ++p)
                for (const auto& [mu, c] : pieri(lam, p, ev_space(lam, p, k))) {
                    auto a = *pieri_free_boxes(lam, mu, k);
                    auto b = free_boxes_via_R(lam, mu, k);
                    std::sort(a.begin(), a.end());
                    std::sort(b.begin(), b.end());
                    CHECK(a == b);
                }
}

TEST_CASE("claims on the small sweep") {
    for_small_cases(5, 3, [](const Partition& lam, int p, int k) {
        INFO("lambda=(", to_string(lam), ") p=", p, " k=", k);
        const auto r1 = verify_claim1(lam, p, k);
        CHECK(r1.ok);
        const auto r2 = verify_claim2(lam, p, k);
        CHECK(r2.ok);
    });
}

TEST_CASE("forest invariants") {
    for_small_cases(5, 3, [](const Partition& lam, int p, int k) {
        INFO("lambda=(", to_string(lam), ") p=", p, " k=", k);
        const Forest f = build_forest(lam, p, k);
        const Space s = ev_space(lam, p, k);
        SubstitutionContext ctx(lam, k);
        const int l = static_cast<int>(lam.size());

        // Each 4-tuple arises once.
        std::set<FourTuple> seen;
        for (const auto& n : f.nodes) seen.insert(n.tuple);
        CHECK(seen.size() == f.nodes.size());

        // D stays inside C and its rim.
        std::set<Pair> allowed(ctx.C().pairs().begin(), ctx.C().pairs().end());
        for (const auto& pr : rim(ctx.C(), l + 1)) allowed.insert(pr);
        bool inside = true;
        for (const auto& n : f.nodes) inside = inside && subset(n.tuple.D.pairs(), allowed);
        CHECK(inside);

        // Rewriting preserves ev at every internal node.
        std::vector<SchubertSum> ev_of(f.nodes.size());
        for (std::size_t i = 0; i < f.nodes.size(); ++i) ev_of[i] = ev(f.nodes[i].tuple, s);
        for (std::size_t i = 0; i < f.nodes.size(); ++i) {
            if (f.nodes[i].children.empty()) continue;
            SchubertSum sum;
            for (int c : f.nodes[i].children) sum += ev_of[c];
            CHECK(sum == ev_of[i]);
        }

        // Conservation.
        SchubertSum roots, ends;
        for (int id : f.roots) roots += ev_of[id];
        for (int id : f.psi0) ends += ev_of[id];
        for (int id : f.psi1) ends += ev_of[id];
        CHECK(roots == ends);

        // Leaf containments C_l(λ) ⊆ C_{l+1}(μ) ⊆ C_l(λ) ∪ rim.
        const PairSet Cl = C_t(lam, k, l);
        std::set<Pair> outer(Cl.pairs().begin(), Cl.pairs().end());
        for (const auto& pr : rim(Cl, l + 1)) outer.insert(pr);
        for (int id : f.psi0) {
            const FourTuple& t = f.nodes[id].tuple;
            if (t.mu.back() < 0) continue;
            const PairSet Cm = C_t(t.mu, k, l + 1);
            CHECK(Cl.subset_of(Cm));
            CHECK(subset(Cm.pairs(), outer));
        }

        // Fixed points of the involution evaluate to zero.
        for (int id : f.psi1) {
            const FourTuple& t = f.nodes[id].tuple;
            if (ctx.involution(t) == t) CHECK(ev_of[id].empty());
        }
    });
}

TEST_CASE("modified forests still produce the Pieri multiplicities") {
    for_small_cases(5, 3, [](const Partition& lam, int p, int k) {
        INFO("lambda=(", to_string(lam), ") p=", p, " k=", k);
        const Forest f = build_forest(lam, p, k, true);
        std::map<Partition, long long> counts;
        for (int id : f.psi0) {
            const FourTuple& t = f.nodes[id].tuple;
            if (t.mu.back() >= 0) ++counts[normalize(t.mu)];
        }
        SchubertSum got;
        for (const auto& [mu, n] : counts) got.add(mu, Rational(n));
        CHECK(got == pieri(lam, p, ev_space(lam, p, k)));
    });
}
