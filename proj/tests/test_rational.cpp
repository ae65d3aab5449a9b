#include <doctest.h>

#include <random>

#include "giambelli/rational.hpp"

using isotropic::Rational;

TEST_CASE("rational normalization and printing") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).str() == "-1/2");
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
    CHECK(Rational::from_string("7").is_integer());
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(10) == Rational(1024));
}

TEST_CASE("rational spills to GMP and comes back") {
    Rational big = Rational::pow2(62);
    Rational x = big * big * Rational(3);
    CHECK(x.str() == "63802943797675961899382738893456539648");
    CHECK((x / (big * big)) == Rational(3));
    CHECK((x / (big * big)).to_int64() == 3);
    CHECK(x > big);
    CHECK(-x < Rational(0));
}

TEST_CASE("rational arithmetic agrees with GMP") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-(1LL << 40), 1LL << 40), den(1, 1LL << 20);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
        CHECK((a + b).to_mpq() == qa + qb);
        CHECK((a - b).to_mpq() == qa - qb);
        CHECK((a * b).to_mpq() == qa * qb);
        if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
        CHECK(((a <=> b) < 0) == (qa < qb));
    }
}
