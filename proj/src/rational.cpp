#include "giambelli/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace isotropic {

namespace {

constexpr __int128 kMax = std::numeric_limits<std::int64_t>::max();

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 x) { return x <= kMax && x >= -kMax; }

mpz_class mpz_from_i128(__int128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64));
    mpz_class lo = static_cast<unsigned long>(static_cast<std::uint64_t>(u));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

mpz_class mpz_from_i64(std::int64_t x) { return mpz_from_i128(x); }

}  // namespace

Rational::Rational(long long n) : num_(n), den_(1) {
    if (n == std::numeric_limits<long long>::min()) assign_i128(n, 1);
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    assign_i128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    q.canonicalize();
    return Rational(q);
}

void Rational::assign_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_mpq(mpq_class q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    big_ = std::make_shared<const mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_from_i64(num_), mpz_from_i64(den_));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

long long Rational::to_int64() const {
    if (big_ || den_ != 1) throw std::range_error("Rational: not a 64-bit integer");
    return num_;
}

std::string Rational::num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
std::string Rational::den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }

std::string Rational::str() const {
    if (is_integer()) return num_str();
    return num_str() + "/" + den_str();
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) r.assign_mpq(-*big_);
    else r.assign_i128(-static_cast<__int128>(num_), den_);
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<std::int64_t>::min()) {
                num_ = s;
                return *this;
            }
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        assign_i128(n, d);
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            std::int64_t p;
            if (!__builtin_mul_overflow(num_, o.num_, &p) && p != std::numeric_limits<std::int64_t>::min()) {
                num_ = p;
                return *this;
            }
        }
        // Cross-cancel first so the 128-bit product cannot overflow.
        __int128 g1 = gcd128(num_, o.den_);
        __int128 g2 = gcd128(o.num_, den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        __int128 n = (num_ / g1) * (o.num_ / g2);
        __int128 d = (den_ / g2) * (o.den_ / g1);
        assign_i128(n, d);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!o.big_) {
        Rational inv;
        inv.assign_i128(o.den_, o.num_);
        return *this *= inv;
    }
    assign_mpq(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a spilled value never fits inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

Rational Rational::pow2(int e) {
    if (e >= 0 && e < 62) return Rational(1LL << e);
    if (e < 0 && e > -62) return Rational(1, 1LL << (-e));
    mpq_class q = 1;
    if (e >= 0) q.get_num() <<= e;
    else q.get_den() <<= -e;
    return Rational(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace isotropic
