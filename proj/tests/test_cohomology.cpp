#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "giambelli/cohomology.hpp"

using namespace isotropic;

TEST_CASE("pieri examples") {
    CHECK(pieri({2, 1, 1}, 1, Space{Family::B, 1, 7}) == SchubertSum{{{2, 1, 1, 1}, 1}, {{3, 1, 1}, 2}, {{5}, 1}});
    CHECK(pieri({1}, 1, Space{Family::B, 1, 4}) == SchubertSum{{{1, 1}, 1}, {{2}, 2}});
    CHECK(pieri({1}, 1, Space{Family::C, 1, 4}) == SchubertSum{{{1, 1}, 1}, {{2}, 1}});
    CHECK(pieri({}, 3, Space{Family::C, 1, 4}) == SchubertSum::single({3}));
}

TEST_CASE("pieri relation: boxes and exponents") {
    CHECK(interlaces({2, 1, 1}, {3, 1, 1}, 1));
    CHECK_FALSE(interlaces({3, 1}, {2, 2}, 1));
    CHECK(pieri_exponent({2, 1, 1}, {3, 1, 1}, 1) == 1);
    CHECK(pieri_exponent({2, 1, 1}, {5}, 1) == 0);
    CHECK_FALSE(pieri_exponent({2, 1, 1}, {2, 2, 1}, 1).has_value());
    CHECK(box_components({{1, 1}, {2, 2}, {4, 4}}) == 2);
}

TEST_CASE("pieri agrees with multiplication in the theta ring") {
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k) {
            const Space s{fam, k, stable_n(6, 4, k)};
            for (const auto& lam : k_strict_partitions_up_to(6, k))
                for (int p = 1; p <= 4; ++p) {
                    SchubertSum want = multiply_via_theta(SchubertSum::single(lam), SchubertSum::single({p}), s);
                    if (fam == Family::B && p > k) want *= Rational(2);
                    CHECK(pieri(lam, p, s) == want);
                }
        }
}

TEST_CASE("giambelli on the introductory example") {
    const Space s{Family::C, 1, 5};
    CHECK(giambelli_monomials({3, 2, 1}, s) ==
          MonomialSum{{{3, 2, 1}, 1}, {{4, 1, 1}, -2}, {{4, 2}, 1}, {{5, 1}, 2}, {{3, 3}, -1}});
    CHECK(giambelli({3, 2, 1}, s) == SchubertSum::single({3, 2, 1}));
    const Space b{Family::B, 1, 5};
    CHECK(giambelli_monomials({3, 2, 1}, b) == giambelli_monomials({3, 2, 1}, s) * Rational(1, 4));
    CHECK(giambelli({3, 2, 1}, b) == SchubertSum::single({3, 2, 1}));
}

TEST_CASE("giambelli holds in every small space") {
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k)
            for (int n = k + 1; n <= 5; ++n) {
                const Space s{fam, k, n};
                for (const auto& lam : P_kn(k, n)) CHECK(giambelli(lam, s) == SchubertSum::single(lam));
            }
}

TEST_CASE("products are commutative and associative") {
    for (Family fam : {Family::B, Family::C}) {
        const Space s{fam, 1, 4};
        const auto all = P_kn(1, 4);
        for (std::size_t i = 0; i < all.size(); i += 3)
            for (std::size_t j = 0; j < all.size(); j += 5) {
                const auto a = SchubertSum::single(all[i]), b = SchubertSum::single(all[j]);
                const SchubertSum ab = multiply(a, b, s);
                CHECK(ab == multiply(b, a, s));
                CHECK(ab == multiply_via_theta(a, b, s));
                const auto c = SchubertSum::single({1});
                CHECK(multiply(ab, c, s) == multiply(a, multiply(b, c, s), s));
            }
    }
}

TEST_CASE("presentation relations") {
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k)
            for (int n = k + 1; n <= 5; ++n)
                for (int r = k + 1; r <= n + k; ++r) CHECK(verify_presentation(Space{fam, k, n}, r));
    CHECK_THROWS_AS(presentation_relation(Space{Family::C, 1, 3}, 1), std::invalid_argument);
}

TEST_CASE("argument checking") {
    CHECK_THROWS_AS(validate(Space{Family::C, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(reduce_monomial({9}, Space{Family::C, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(giambelli({2, 2}, Space{Family::C, 1, 4}), std::invalid_argument);
    CHECK(reduce_monomial({}, Space{Family::C, 1, 3}) == SchubertSum::single({}));
}

TEST_CASE("pieri cache survives a round trip through disk") {
    const Space s{Family::B, 2, 5};
    const SchubertSum before = pieri({3, 1}, 2, s);
    const auto path = (std::filesystem::temp_directory_path() / "giambelli_cache_test.bin").string();
    save_pieri_cache(path);
    clear_cohomology_caches();
    CHECK(pieri_cache_entries() == 0);
    CHECK(load_pieri_cache(path) > 0);
    CHECK(pieri_cache_entries() > 0);
    CHECK(pieri({3, 1}, 2, s) == before);
    std::remove(path.c_str());
    CHECK(load_pieri_cache(path) == 0);
}
