#include "giambelli/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isotropic {

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
    const int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int x : w_) {
        int a = std::abs(x);
        if (a < 1 || a > n || seen[a]) throw std::invalid_argument("SignedPerm: not a signed permutation");
        seen[a] = true;
    }
}

SignedPerm SignedPerm::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::from_word(const std::vector<int>& word, int n) {
    SignedPerm w = identity(n);
    for (int a : word) w = w.times_generator(a);
    return w;
}

int SignedPerm::operator()(int i) const {
    if (i == 0) return 0;
    const int a = std::abs(i);
    const int v = a <= size() ? w_[a - 1] : a;
    return i < 0 ? -v : v;
}

SignedPerm SignedPerm::times_generator(int i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("SignedPerm: generator index out of range");
    SignedPerm out = *this;
    if (i == 0) out.w_[0] = -out.w_[0];
    else std::swap(out.w_[i - 1], out.w_[i]);
    return out;
}

SignedPerm SignedPerm::inverse() const {
    std::vector<int> inv(size());
    for (int i = 1; i <= size(); ++i) {
        int v = w_[i - 1];
        inv[std::abs(v) - 1] = v < 0 ? -i : i;
    }
    return SignedPerm(std::move(inv));
}

SignedPerm SignedPerm::resized(int n) const {
    if (n < size()) {
        for (int i = n + 1; i <= size(); ++i)
            if (w_[i - 1] != i) throw std::invalid_argument("SignedPerm: cannot shrink");
        return SignedPerm(std::vector<int>(w_.begin(), w_.begin() + n));
    }
    std::vector<int> w = w_;
    for (int i = size() + 1; i <= n; ++i) w.push_back(i);
    return SignedPerm(std::move(w));
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
    const int n = std::max(a.size(), b.size());
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = a(b(i));
    return SignedPerm(std::move(w));
}

bool operator==(const SignedPerm& a, const SignedPerm& b) {
    const int n = std::max(a.size(), b.size());
    for (int i = 1; i <= n; ++i)
        if (a(i) != b(i)) return false;
    return true;
}

bool operator<(const SignedPerm& a, const SignedPerm& b) {
    const int n = std::max(a.size(), b.size());
    for (int i = 1; i <= n; ++i)
        if (a(i) != b(i)) return a(i) < b(i);
    return false;
}

int SignedPerm::length() const {
    const int n = size();
    int len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (j > i && w_[i] > w_[j]) ++len;
            if (w_[i] + w_[j] < 0) ++len;
        }
    return len;
}

bool SignedPerm::has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

std::vector<int> SignedPerm::descents() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (has_descent(i)) out.push_back(i);
    return out;
}

bool SignedPerm::uses_sign_change() const {
    for (int x : w_)
        if (x < 0) return true;
    return false;
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < size(); ++i) os << (i ? "," : "") << w_[i];
    os << ')';
    return os.str();
}

int minimal_rank(const Partition& lambda, int k) {
    int n = k + 1;
    n = std::max(n, static_cast<int>(lambda.size()) + k);
    if (!lambda.empty()) n = std::max(n, lambda[0] - k);
    return n;
}

SignedPerm w_lambda(const Partition& lambda, int k, int n) {
    if (!in_P(lambda, k, n)) throw std::invalid_argument("w_lambda: partition not in P(k,n)");
    const Partition lc = conjugate(lambda);
    // Staircase box [i, k+j] lies on diagonal i+j-1, which has i+j-1 boxes.
    std::vector<int> inside(n + 1, 0);
    for (int i = 1; i <= static_cast<int>(lambda.size()); ++i)
        for (int j = 1; j <= lambda[i - 1] - k; ++j) ++inside[i + j - 1];
    std::vector<bool> related(n + 1, false);
    for (int c = 1; c <= k; ++c) {
        // Bottom box of column c, or the box [1, c] of an empty column.
        const int d = k_diagonal({part(lc, c), c}, k);
        if (d >= 1 && d <= n) related[d] = true;
    }
    std::vector<int> r, u;
    for (int d = 1; d <= n; ++d) {
        const int len = d - inside[d];
        if (related[d]) r.push_back(len);
        else if (len > 0) u.push_back(len);
    }
    const auto [l1, l2] = k_split(lambda, k);
    std::vector<int> w(r.begin(), r.end());
    for (int x : l1) w.push_back(-x);
    w.insert(w.end(), u.begin(), u.end());
    return SignedPerm(std::move(w));
}

std::vector<std::vector<int>> reduced_words(const SignedPerm& w) {
    std::map<SignedPerm, std::vector<std::vector<int>>> memo;
    std::function<const std::vector<std::vector<int>>&(const SignedPerm&)> rec =
        [&](const SignedPerm& v) -> const std::vector<std::vector<int>>& {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        std::vector<std::vector<int>> out;
        bool any = false;
        for (int i = 0; i < v.size(); ++i) {
            if (!v.has_descent(i)) continue;
            any = true;
            for (auto word : rec(v.times_generator(i))) {
                word.push_back(i);
                out.push_back(std::move(word));
            }
        }
        if (!any) out.push_back({});
        std::sort(out.begin(), out.end());
        return memo.emplace(v, std::move(out)).first->second;
    };
    return rec(w);
}

bool is_reduced_word(const std::vector<int>& word, int n) {
    for (int a : word)
        if (a < 0 || a >= n) return false;
    return SignedPerm::from_word(word, n).length() == static_cast<int>(word.size());
}

Partition KTableau::shape() const {
    Partition p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return p;
}

std::vector<int> KTableau::row_word() const {
    std::vector<int> out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) out.insert(out.end(), it->begin(), it->end());
    return out;
}

std::string KTableau::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) os << '/';
        for (int x : rows[i]) os << x << (x > 9 ? " " : "");
    }
    return os.str();
}

bool is_unimodal(const std::vector<int>& s) {
    std::size_t i = 1;
    while (i < s.size() && s[i] < s[i - 1]) ++i;
    while (i < s.size() && s[i] > s[i - 1]) ++i;
    return i >= s.size();
}

int longest_unimodal(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n == 0) return 0;
    // dec[r]: longest strictly decreasing subsequence ending at r.
    // inc[r]: longest strictly increasing subsequence starting at r.
    std::vector<int> dec(n, 1), inc(n, 1);
    for (int r = 0; r < n; ++r)
        for (int q = 0; q < r; ++q)
            if (s[q] > s[r]) dec[r] = std::max(dec[r], dec[q] + 1);
    for (int r = n - 1; r >= 0; --r)
        for (int q = r + 1; q < n; ++q)
            if (s[q] > s[r]) inc[r] = std::max(inc[r], inc[q] + 1);
    int best = 0;
    for (int r = 0; r < n; ++r) best = std::max(best, dec[r] + inc[r] - 1);
    return best;
}

int longest_unimodal_bruteforce(const std::vector<int>& s) {
    const int n = static_cast<int>(s.size());
    if (n > 20) throw std::invalid_argument("longest_unimodal_bruteforce: sequence too long");
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(s[i]);
        if (static_cast<int>(sub.size()) > best && is_unimodal(sub)) best = static_cast<int>(sub.size());
    }
    return best;
}

bool is_ktableau(const KTableau& t, const SignedPerm& w) {
    const Partition sh = t.shape();
    if (!is_partition(sh) || !is_strict(sh)) return false;
    const std::vector<int> word = t.row_word();
    if (!is_reduced_word(word, w.size())) return false;
    if (!(SignedPerm::from_word(word, w.size()) == w)) return false;
    // T_i must be a longest unimodal subsequence of T_l ... T_i.
    std::vector<int> suffix;
    for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
        suffix.insert(suffix.end(), t.rows[i].begin(), t.rows[i].end());
        if (!is_unimodal(t.rows[i])) return false;
        if (longest_unimodal_bruteforce(suffix) != static_cast<int>(t.rows[i].size())) return false;
    }
    return true;
}

std::vector<KTableau> ktableaux(const SignedPerm& w) {
    std::set<KTableau> found;
    for (const auto& word : reduced_words(w)) {
        KTableau t;
        std::vector<int> rest = word;
        bool ok = true;
        while (!rest.empty()) {
            const int len = longest_unimodal(rest);
            std::vector<int> row(rest.end() - len, rest.end());
            if (!is_unimodal(row)) {
                ok = false;
                break;
            }
            t.rows.push_back(std::move(row));
            rest.resize(rest.size() - len);
        }
        if (!ok) continue;
        if (!is_strict(t.shape())) continue;
        found.insert(std::move(t));
    }
    return {found.begin(), found.end()};
}

std::vector<KTableau> ktableaux(const SignedPerm& w, const Partition& shape) {
    std::vector<KTableau> out;
    for (auto& t : ktableaux(w))
        if (t.shape() == shape) out.push_back(std::move(t));
    return out;
}

ThetaSum stanley_Q(const SignedPerm& w) {
    ThetaSum out;
    for (const auto& t : ktableaux(w)) out.add(t.shape(), 1);
    return out;
}

ThetaSum stanley_F(const SignedPerm& w) { return from_theta_basis(stanley_Q(w), 0); }

std::vector<BHTerm> bh_factorizations(const Partition& lambda, int k) {
    const int n = minimal_rank(lambda, k);
    const SignedPerm w = w_lambda(lambda, k, n);
    // Right factors in S_n: suffixes of reduced words avoiding s_0.
    std::set<SignedPerm> factors;
    for (const auto& word : reduced_words(w)) {
        int j = static_cast<int>(word.size());
        factors.insert(SignedPerm::identity(n));
        while (j > 0 && word[j - 1] != 0) {
            --j;
            factors.insert(SignedPerm::from_word(std::vector<int>(word.begin() + j, word.end()), n));
        }
    }
    const Partition l2 = k_split(lambda, k).second;
    std::map<SignedPerm, Partition> grassmannian;
    for (int d = 0; d <= weight(l2); ++d)
        for (const auto& nu : partitions_of(d, k))
            if (contains(l2, nu)) grassmannian.emplace(w_lambda(nu, k, n), nu);

    std::vector<BHTerm> out;
    for (const auto& v : factors) {
        auto it = grassmannian.find(v);
        if (it == grassmannian.end())
            throw std::logic_error("bh_factorizations: right factor " + v.str() + " of " + w.str() +
                                   " is not w_nu for a partition nu inside lambda^2");
        SignedPerm u = w * v.inverse();
        if (u.length() + v.length() != w.length()) throw std::logic_error("bh_factorizations: factorization not reduced");
        out.push_back({it->second, u, ktableaux(u)});
    }
    std::sort(out.begin(), out.end(), [](const BHTerm& a, const BHTerm& b) { return a.nu < b.nu; });
    return out;
}

MixedSum bh_expand(const Partition& lambda, int k) {
    MixedSum out;
    for (const auto& term : bh_factorizations(lambda, k))
        for (const auto& t : term.tableaux) out.add({t.shape(), term.nu}, 1);
    return out;
}

}  // namespace isotropic
