#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace isotropic {

// Exact rational number. Values that fit in 64 bits stay inline; anything
// larger spills into a shared, immutable GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long long n);  // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q);

    static Rational from_string(std::string_view s);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const;
    int sign() const;

    std::string str() const;
    std::string num_str() const;
    std::string den_str() const;
    mpq_class to_mpq() const;
    // Only valid when the value is an integer that fits in 64 bits.
    long long to_int64() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    static Rational pow2(int e);

private:
    void assign_i128(__int128 n, __int128 d);
    void assign_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isotropic
