#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "giambelli/theta_ring.hpp"

using namespace isotropic;

namespace {

ThetaSum th(int r) { return r == 0 ? ThetaSum::single({}) : ThetaSum::single({r}); }

bool strictly_dominates(const Partition& a, const Partition& b) { return a != b && dominates(a, b); }

// Θ_λ = Π_{(i,j) ∈ C°} (1 + R_ij)^{-1} S_λ, expanded as a finite signed sum
// of determinants S_γ over raised sequences γ.
ThetaSum theta_via_determinants(const Partition& lam, int k) {
    const int l = static_cast<int>(lam.size());
    std::vector<Pair> ps = C_strict(lam, k).pairs();
    std::sort(ps.begin(), ps.end(), [](const Pair& a, const Pair& b) { return a.second > b.second; });
    ThetaSum out;
    IntVec g = lam;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int sign) {
        if (idx == ps.size()) {
            out.add_scaled(skew_S(g, {}, k), Rational(sign));
            return;
        }
        const auto [i, j] = ps[idx];
        const IntVec saved = g;
        for (int a = 0; g[j - 1] + l - j >= 0; ++a) {
            rec(idx + 1, a % 2 ? -sign : sign);
            ++g[i - 1];
            --g[j - 1];
        }
        g = saved;
    };
    rec(0, 1);
    return out;
}

Poly y_squares_e(Evaluator& ev, int r, int maxdeg) {
    const int nv = ev.m() + ev.k();
    Poly out(nv, maxdeg);
    std::function<void(int, int, Poly)> rec = [&](int start, int left, Poly acc) {
        if (left == 0) {
            out += acc;
            return;
        }
        for (int j = start; j < ev.k(); ++j) {
            Poly y = Poly::variable(nv, maxdeg, ev.m() + j);
            rec(j + 1, left - 1, acc * y * y);
        }
    };
    rec(0, r, ev.one());
    return out;
}

}  // namespace

TEST_CASE("straightening examples") {
    CHECK(straighten(Monomial{2, 2}, 1) == ThetaSum{{{3, 1}, 2}, {{4}, -2}});
    CHECK(straighten(Monomial{3, 1}, 1) == ThetaSum::single({3, 1}));
    CHECK(straighten(Monomial{2, -1}, 1).empty());
    CHECK(straighten(Monomial{1, 1}, 1) == ThetaSum::single({1, 1}));
    CHECK(theta_multiply(th(2), th(2), 1) == straighten(Monomial{2, 2}, 1));
}

TEST_CASE("straightening is confluent") {
    std::mt19937_64 rng(11);
    for (int k = 0; k <= 3; ++k)
        for (int d = 1; d <= 10; ++d)
            for (const auto& a : partitions_of(d)) {
                Monomial alpha = a;
                std::shuffle(alpha.begin(), alpha.end(), rng);
                CHECK(straighten_random(alpha, k, rng) == straighten(alpha, k));
            }
}

TEST_CASE("theta polynomials") {
    CHECK(theta({4}, 1) == ThetaSum::single({4}));
    CHECK(to_theta_basis(theta({3, 1}, 1), 1) == ThetaSum::single({3, 1}));
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(8, k)) {
            const ThetaSum& t = theta(lam, k);
            CHECK(t.coeff(lam) == Rational(1));
            for (const auto& [key, c] : t)
                if (key != lam) CHECK(strictly_dominates(key, lam));
            const ThetaSum coords = to_theta_basis(ThetaSum::single(lam), k);
            CHECK(coords.coeff(lam) == Rational(1));
            for (const auto& [key, c] : coords)
                if (key != lam) CHECK(strictly_dominates(key, lam));
            CHECK(from_theta_basis(coords, k) == ThetaSum::single(lam));
        }
}

TEST_CASE("dual theta duality recurrence") {
    CHECK(hat_theta(0, 1) == ThetaSum::single({}));
    CHECK(hat_theta(1, 1) == th(1));
    CHECK(hat_theta(-1, 1).empty());
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 8; ++n) {
            ThetaSum s;
            for (int i = 0; i <= n; ++i) s.add_scaled(theta_multiply(th(i), hat_theta(n - i, k), k), Rational(i % 2 ? -1 : 1));
            CHECK(s.empty());
        }
}

TEST_CASE("dual theta products as a basis") {
    const ThetaSum want{{{4}, Rational(2, 3)}, {{3, 1}, Rational(-5, 3)}, {{2, 1, 1}, Rational(4, 3)}, {{1, 1, 1, 1}, Rational(-1, 3)}};
    CHECK(to_hat_basis(theta({3, 1}, 1), 1) == want);
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(7, k)) {
            const ThetaSum coords = to_hat_basis(ThetaSum::single(lam), k);
            ThetaSum back;
            for (const auto& [mu, c] : coords) back.add_scaled(hat_product(mu, k), c);
            CHECK(back == ThetaSum::single(lam));
        }
}

TEST_CASE("skew determinants") {
    // 21/1 is two disconnected boxes: det[[ϑ1, ϑ3], [0, ϑ1]].
    CHECK(skew_S({2, 1}, {1}, 1) == ThetaSum::single({1, 1}));
    CHECK(skew_S({1, 1}, {}, 1) == ThetaSum{{{1, 1}, 1}, {{2}, -1}});
    CHECK(skew_S({2, 1}, {3}, 1).empty());
    for (int k = 1; k <= 3; ++k)
        for (const auto& lam : k_strict_partitions_up_to(8, k))
            if (C_strict(lam, k).empty()) CHECK(skew_S(lam, {}, k) == theta(lam, k));
}

TEST_CASE("theta from determinants with geometric factors") {
    for (int k = 0; k <= 3; ++k)
        for (const auto& lam : k_strict_partitions_up_to(9, k)) CHECK(theta_via_determinants(lam, k) == theta(lam, k));
}

TEST_CASE("mixed expansion of Theta_321") {
    const MixedSum want{{{{4, 2}, {}}, 1},  {{{3, 2, 1}, {}}, 1},   {{{4, 1}, {1}}, 1},
                        {{{3, 2}, {1}}, 2}, {{{3, 1}, {1, 1}}, 2}, {{{2, 1}, {1, 1, 1}}, 1}};
    CHECK(mixed_expand({3, 2, 1}, 1) == want);
    CHECK(mixed_expand({4, 2, 1}, 0) == MixedSum::single({{4, 2, 1}, {}}));
}

TEST_CASE("mixed expansion: routes agree and coefficients are nonnegative integers") {
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(8, k)) {
            const MixedSum m = mixed_expand(lam, k);
            for (const auto& [key, c] : m) {
                CHECK(c.is_integer());
                CHECK(c.sign() > 0);
                CHECK(is_strict(key.first));
                CHECK(part(key.second, 1) <= k);
            }
            CHECK(m == mixed_expand_by_columns(lam, k));
        }
}

TEST_CASE("evaluator basics") {
    Evaluator a(1, 1, 1);
    Poly want = Poly::variable(2, 1, 0) * Poly::constant(2, 1, 2) + Poly::variable(2, 1, 1);
    CHECK(a.theta_r(1) == want);
    Evaluator b(2, 0, 1);
    CHECK(b.Q({1}) == (Poly::variable(2, 1, 0) + Poly::variable(2, 1, 1)) * Poly::constant(2, 1, 2));
    CHECK(b.mixed(MixedSum()).is_zero());
}

TEST_CASE("theta and mixed evaluations agree") {
    for (int k = 1; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(5, k)) {
            if (lam.empty()) continue;
            const int w = weight(lam);
            Evaluator ev(w, k, w);
            CHECK(ev.theta_monomials(theta(lam, k)) == ev.mixed(mixed_expand(lam, k)));
        }
}

TEST_CASE("q-monomials in the Q basis") {
    for (int d = 1; d <= 6; ++d) {
        Evaluator ev(d, 0, d);
        for (const auto& lam : partitions_of(d)) {
            const ThetaSum coords = q_to_Q_basis(MonomialSum::single(lam));
            Poly rhs(d, d);
            for (const auto& [mu, c] : coords) {
                Poly t = ev.Q(mu);
                t *= c;
                rhs += t;
            }
            CHECK(ev.q_monomials(MonomialSum::single(lam)) == rhs);
        }
    }
}

TEST_CASE("alternating square sums") {
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= 2 * k; ++r) {
            ThetaSum s;
            for (int i = 0; i <= r; ++i) s.add_scaled(theta_multiply(th(i), th(r - i), k), Rational(i % 2 ? -1 : 1));
            Evaluator ev(r, k, r);
            Poly lhs = ev.theta_monomials(s);
            if (r % 2) {
                CHECK(lhs.is_zero());
            } else {
                Poly want = y_squares_e(ev, r / 2, r);
                if ((r / 2) % 2) want *= Rational(-1);
                CHECK(lhs == want);
            }
        }
}

TEST_CASE("skew determinants split over the x and y variables") {
    for (int k = 1; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(6, k)) {
            if (lam.empty()) continue;
            const int w = weight(lam);
            Evaluator ev(w, k, w);
            for (const Partition& mu : {Partition{}, Partition{1}, Partition{lam[0]}}) {
                if (!contains(lam, mu)) continue;
                const Poly lhs = ev.theta_monomials(skew_S(lam, mu, k));
                Poly rhs(lhs.nvars(), lhs.maxdeg());
                std::function<void(std::size_t, Partition&)> rec = [&](std::size_t i, Partition& nu) {
                    if (i == lam.size()) {
                        const Partition n = normalize(nu);
                        rhs += ev.q_monomials(jacobi_trudi(lam, n)) * ev.e_monomials(jacobi_trudi(n, mu));
                        return;
                    }
                    const int hi = std::min(lam[i], i ? nu[i - 1] : lam[i]);
                    for (int v = part(mu, static_cast<int>(i) + 1); v <= hi; ++v) {
                        nu[i] = v;
                        rec(i + 1, nu);
                    }
                };
                Partition nu(lam.size(), 0);
                rec(0, nu);
                CHECK(lhs == rhs);
            }
        }
}
