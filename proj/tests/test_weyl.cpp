#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "giambelli/theta_ring.hpp"
#include "giambelli/weyl.hpp"

using namespace isotropic;

TEST_CASE("signed permutation basics") {
    const SignedPerm s0 = SignedPerm::from_word({0}, 2);
    CHECK(s0.window() == std::vector<int>{-1, 2});
    CHECK(s0.length() == 1);
    const SignedPerm w({4, -2, -1, 3});
    CHECK((w * w.inverse()) == SignedPerm::identity(4));
    CHECK(w.resized(6).window() == std::vector<int>{4, -2, -1, 3, 5, 6});
    CHECK(w.str() == "(4,-2,-1,3)");
    CHECK(w.uses_sign_change());
    CHECK_FALSE(SignedPerm({2, 1, 3}).uses_sign_change());
}

TEST_CASE("k-Grassmannian elements") {
    CHECK(w_lambda({7, 4, 2}, 3, 7).window() == std::vector<int>{2, 5, 6, -4, -1, 3, 7});
    CHECK(w_lambda({3, 2, 1}, 1, 4).window() == std::vector<int>{4, -2, -1, 3});
    CHECK(minimal_rank({3, 2, 1}, 1) == 4);
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(8, k)) {
            if (lam.empty()) continue;
            const SignedPerm w = w_lambda(lam, k, minimal_rank(lam, k));
            CHECK(w.length() == weight(lam));
            CHECK(w.descents() == std::vector<int>{k});
        }
}

TEST_CASE("reduced words against exhaustive search") {
    for (const auto& [lam, k] : std::vector<std::pair<Partition, int>>{{{2, 1}, 0}, {{2, 1}, 1}, {{3, 1}, 1}, {{2, 2}, 2}, {{3, 2}, 1}}) {
        const int n = minimal_rank(lam, k);
        const SignedPerm w = w_lambda(lam, k, n);
        const int len = w.length();
        std::set<std::vector<int>> brute;
        std::vector<int> word(len);
        std::function<void(int)> rec = [&](int i) {
            if (i == len) {
                if (SignedPerm::from_word(word, n) == w) brute.insert(word);
                return;
            }
            for (int g = 0; g < n; ++g) {
                word[i] = g;
                rec(i + 1);
            }
        };
        rec(0);
        const auto words = reduced_words(w);
        CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == brute);
        for (const auto& x : words) CHECK(is_reduced_word(x, n));
    }
    CHECK_FALSE(is_reduced_word({1, 1}, 3));
}

TEST_CASE("unimodal subsequences") {
    CHECK(is_unimodal({3, 2, 0, 1}));
    CHECK(is_unimodal({}));
    CHECK_FALSE(is_unimodal({1, 2, 1}));
    CHECK(longest_unimodal({1, 2, 1}) == 2);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 10), val(0, 5);
    for (int t = 0; t < 300; ++t) {
        std::vector<int> s(len(rng));
        for (int& x : s) x = val(rng);
        CHECK(longest_unimodal(s) == longest_unimodal_bruteforce(s));
    }
}

TEST_CASE("Kraskiewicz tableaux of w_321, k=1") {
    const SignedPerm w = w_lambda({3, 2, 1}, 1, 4);
    const auto tabs = ktableaux(w);
    for (const auto& t : tabs) {
        CHECK(is_ktableau(t, w));
        CHECK(is_strict(t.shape()));
        CHECK(SignedPerm::from_word(t.row_word(), 4) == w);
    }
    std::set<std::string> shapes42;
    for (const auto& t : ktableaux(w, {4, 2})) shapes42.insert(t.str());
    CHECK(shapes42 == std::set<std::string>{"3201/01"});
}

TEST_CASE("Stanley functions of Grassmannian elements") {
    CHECK(stanley_Q(w_lambda({3, 1}, 0, 3)) == ThetaSum::single({3, 1}));
    for (const auto& lam : k_strict_partitions_up_to(7, 0)) {
        if (lam.empty()) continue;
        const SignedPerm w = w_lambda(lam, 0, minimal_rank(lam, 0));
        CHECK(stanley_Q(w) == ThetaSum::single(lam));
        CHECK(stanley_F(w) == theta(lam, 0));
    }
}

TEST_CASE("factorization expansion table for 321") {
    const auto terms = bh_factorizations({3, 2, 1}, 1);
    std::map<Partition, std::set<std::string>> got;
    for (const auto& t : terms)
        for (const auto& x : t.tableaux) got[t.nu].insert(x.str());
    const std::map<Partition, std::set<std::string>> want{
        {{}, {"3201/01", "321/10/0"}},
        {{1}, {"302/01", "3102/0", "320/01"}},
        {{1, 1}, {"103/0", "310/0"}},
        {{1, 1, 1}, {"10/0"}},
    };
    CHECK(got == want);
}

TEST_CASE("factorization expansion equals the substitution expansion") {
    for (int k = 0; k <= 2; ++k)
        for (const auto& lam : k_strict_partitions_up_to(7, k)) {
            if (lam.empty()) continue;
            CHECK(bh_expand(lam, k) == mixed_expand(lam, k));
        }
}
