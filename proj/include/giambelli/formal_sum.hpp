#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <type_traits>
#include <utility>
#include <vector>

#include "giambelli/rational.hpp"

namespace isotropic {

// Finite linear combination of keys with exact rational coefficients.
// Zero coefficients are never stored, so equality is structural.
template <class Key, class Compare = std::less<Key>>
class FormalSum {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    FormalSum() = default;
    FormalSum(std::initializer_list<std::pair<const Key, Rational>> init) {
        for (const auto& [k, c] : init) add(k, c);
    }
    static FormalSum single(const Key& k, const Rational& c = Rational(1)) {
        FormalSum s;
        s.add(k, c);
        return s;
    }

    void add(const Key& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add(Key&& k, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    void add_scaled(const FormalSum& o, const Rational& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.terms_) add(k, v * c);
    }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    bool contains(const Key& k) const { return terms_.count(k) != 0; }
    void erase(const Key& k) { terms_.erase(k); }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, v] : o.terms_) add(k, v);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, v] : o.terms_) add(k, -v);
        return *this;
    }
    FormalSum& operator*=(const Rational& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& kv : terms_) kv.second *= c;
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const Rational& c) { return a *= c; }
    friend FormalSum operator*(const Rational& c, FormalSum a) { return a *= c; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) { return a.terms_ == b.terms_; }

    template <class F>
    FormalSum map_keys(F&& f) const {
        FormalSum out;
        for (const auto& [k, v] : terms_) out.add(f(k), v);
        return out;
    }

private:
    map_type terms_;
};

inline std::ostream& print_key(std::ostream& os, const std::vector<int>& k) {
    os << '(';
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os << ')';
}

inline std::ostream& print_key(std::ostream& os, const std::pair<std::vector<int>, std::vector<int>>& k) {
    os << "Q";
    print_key(os, k.first);
    os << "s'";
    return print_key(os, k.second);
}

template <class Key, class Compare>
std::ostream& operator<<(std::ostream& os, const FormalSum<Key, Compare>& s) {
    if (s.empty()) return os << "0";
    bool first = true;
    for (const auto& [k, v] : s) {
        if (!first) os << " + ";
        first = false;
        os << v << "*";
        if constexpr (std::is_same_v<Key, std::vector<int>> ||
                      std::is_same_v<Key, std::pair<std::vector<int>, std::vector<int>>>)
            print_key(os, k);
        else os << k;
    }
    return os;
}

}  // namespace isotropic
