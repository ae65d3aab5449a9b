#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "giambelli/raising_ops.hpp"

using namespace isotropic;

namespace {

PairSet strict(std::vector<Pair> ps) { return PairSet(PairMode::Strict, std::move(ps)); }
PairSet diag(std::vector<Pair> ps) { return PairSet(PairMode::Diagonal, std::move(ps)); }

// All valid strict pair sets with columns <= l.
std::vector<PairSet> strict_ideals(int l) {
    std::set<PairSet> seen{PairSet(PairMode::Strict)};
    std::vector<PairSet> todo{PairSet(PairMode::Strict)};
    while (!todo.empty()) {
        PairSet d = todo.back();
        todo.pop_back();
        for (const auto& c : d.outer_corners())
            if (c.second <= l) {
                PairSet e = d.with(c);
                if (seen.insert(e).second) todo.push_back(e);
            }
    }
    return {seen.begin(), seen.end()};
}

// Leibniz expansion of det(c_{λ_i + j - i}) over all permutations.
MonomialSum leibniz(const Partition& lam) {
    const int n = static_cast<int>(lam.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    MonomialSum out;
    do {
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (perm[a] > perm[b]) ++inv;
        Monomial m;
        bool zero = false;
        for (int i = 0; i < n; ++i) {
            const int v = lam[i] + perm[i] - i;
            if (v < 0) zero = true;
            if (v > 0) m.push_back(v);
        }
        if (!zero) out.add(sort_monomial(m), inv % 2 ? Rational(-1) : Rational(1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

TEST_CASE("C_t sets") {
    CHECK(C_t({9, 7, 3, 2, 1, 1}, 3, 6) == diag({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}}));
    CHECK(C_of({3, 2, 1}, 1) == diag({{1, 1}, {1, 2}, {2, 2}}));
    CHECK(C_strict({3, 2, 1}, 1) == strict({{1, 2}}));
    CHECK(C_of({1, 1}, 2).empty());
    CHECK(middle_row({3, 2, 1}, 1) == 3);
}

TEST_CASE("C_t agrees with the defining inequality") {
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(9, k)) {
            const int l = static_cast<int>(lam.size());
            for (int t = l; t <= l + 1; ++t) {
                PairSet want(PairMode::Diagonal);
                for (int i = 1; i <= t; ++i)
                    for (int j = i; j <= t; ++j)
                        if (part(lam, i) + part(lam, j) > 2 * k + j - i) want.insert({i, j});
                CHECK(C_t(lam, k, t) == want);
                CHECK(C_t(lam, k, t).is_valid());
            }
        }
}

TEST_CASE("pair set geometry") {
    PairSet empty(PairMode::Diagonal);
    CHECK(empty.outer_corners() == std::vector<Pair>{{1, 1}});
    PairSet c = C_of({3, 2, 1}, 1);
    CHECK(c.is_outer_corner({1, 3}));
    CHECK(c.is_outer_corner({3, 3}) == false);  // (2,3) missing
    CHECK(c.outer_corner_in_row(1) == Pair{1, 3});
    CHECK_FALSE(c.outer_corner_in_row(2).has_value());
    CHECK(c.outer_corner_in_column(3) == Pair{1, 3});
    CHECK_FALSE(diag({{1, 2}}).is_valid());
    const auto r = rim(c, 4);
    CHECK(std::find(r.begin(), r.end(), Pair{3, 3}) != r.end());
    CHECK(std::find(r.begin(), r.end(), Pair{1, 3}) != r.end());
}

TEST_CASE("expand on the introductory example") {
    const MonomialSum want{{{3, 2, 1}, 1}, {{4, 1, 1}, -2}, {{4, 2}, 1}, {{5, 1}, 2}, {{3, 3}, -1}};
    CHECK(expand(strict({{1, 2}}), {3, 2, 1}) == want);
    CHECK(expand(PairSet(), {5}) == MonomialSum::single({5}));
}

TEST_CASE("pfaffian two-row series") {
    CHECK(pfaffian_expand({3, 1}) == MonomialSum{{{3, 1}, 1}, {{4}, -2}});
    CHECK(pfaffian_expand({4}) == MonomialSum::single({4}));
}

TEST_CASE("determinant degeneration") {
    for (int d = 1; d <= 8; ++d)
        for (const auto& lam : partitions_of(d)) {
            const MonomialSum e = expand(PairSet(), lam);
            CHECK(e == jacobi_trudi(lam));
            if (lam.size() <= 6) CHECK(e == leibniz(lam));
        }
}

TEST_CASE("pfaffian degeneration") {
    for (int d = 1; d <= 10; ++d)
        for (const auto& lam : k_strict_partitions(d, 0)) {
            const int l = static_cast<int>(lam.size());
            PairSet full(PairMode::Strict);
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) full.insert({i, j});
            CHECK(pfaffian_expand(lam) == expand(full, lam));
        }
}

TEST_CASE("splitting identity, degree and integrality") {
    for (int d = 2; d <= 7; ++d)
        for (const auto& lam : partitions_of(d)) {
            const int l = static_cast<int>(lam.size());
            if (l < 2 || l > 4) continue;
            for (const auto& D : strict_ideals(l)) {
                const MonomialSum base = expand(D, lam);
                for (const auto& [key, c] : base) {
                    CHECK(weight(key) == d);
                    CHECK(c.is_integer());
                }
                for (const auto& [i, j] : D.outer_corners()) {
                    if (j > l) continue;
                    IntVec raised = lam;
                    ++raised[i - 1];
                    --raised[j - 1];
                    const PairSet E = D.with({i, j});
                    CHECK(base == expand(E, lam) + expand(E, raised));
                }
            }
        }
}

TEST_CASE("monomial product") {
    const MonomialSum a{{{2}, 1}, {{1, 1}, -1}};
    const MonomialSum b{{{1}, 2}};
    CHECK(monomial_product(a, b) == MonomialSum{{{2, 1}, 2}, {{1, 1, 1}, -2}});
    CHECK(sort_monomial({1, 0, 3}) == Monomial{3, 1});
}
