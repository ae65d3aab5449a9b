#include "giambelli/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace isotropic {

Partition normalize(IntVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

bool is_partition(const IntVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] <= 0) return false;
        if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
}

bool is_strict(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] >= p[i - 1]) return false;
    return true;
}

bool is_k_strict(const Partition& p, int k) {
    if (!is_partition(p)) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1] && p[i] > k) return false;
    return true;
}

int weight(const IntVec& v) {
    int s = 0;
    for (int x : v) s += x;
    return s;
}

int part(const IntVec& v, int i) {
    if (i < 1 || i > static_cast<int>(v.size())) return 0;
    return v[i - 1];
}

Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    c.assign(p[0], 0);
    for (int x : p)
        for (int j = 0; j < x; ++j) ++c[j];
    return c;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

std::pair<Partition, Partition> k_split(const Partition& p, int k) {
    Partition a, b;
    for (int x : p) {
        if (x > k) a.push_back(x - k);
        b.push_back(std::min(x, k));
    }
    return {a, normalize(b)};
}

int ell_k(const Partition& p, int k) {
    int c = 0;
    for (int x : p)
        if (x > k) ++c;
    return c;
}

bool in_P(const Partition& p, int k, int n) {
    if (!is_k_strict(p, k)) return false;
    if (static_cast<int>(p.size()) > n - k) return false;
    return p.empty() || p[0] <= n + k;
}

std::vector<int> schubert_index(const Partition& p, int k, int n, Family family) {
    if (!in_P(p, k, n)) throw std::invalid_argument("schubert_index: partition not in P(k,n)");
    const int l = static_cast<int>(p.size());
    std::vector<int> out;
    for (int j = 1; j <= l; ++j) {
        int lj = p[j - 1];
        int cnt = 0;
        int upto = family == Family::C ? j - 1 : j;
        for (int i = 1; i <= upto; ++i)
            if (p[i - 1] + lj > 2 * k + j - i) ++cnt;
        int base = family == Family::C ? n + k + j - lj : n + k + 1 + j - lj;
        out.push_back(base - cnt);
    }
    return out;
}

int k_diagonal(const Box& b, int k) { return std::abs(b.col - k - 1) + b.row; }

bool k_related(const Box& a, const Box& b, int k) { return k_diagonal(a, k) == k_diagonal(b, k); }

std::vector<Box> boxes(const Partition& p) {
    std::vector<Box> out;
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int c = 1; c <= p[i]; ++c) out.push_back({i + 1, c});
    return out;
}

std::vector<Box> skew_boxes(const IntVec& outer, const IntVec& inner) {
    std::vector<Box> out;
    for (int i = 1; i <= static_cast<int>(outer.size()); ++i)
        for (int c = std::max(part(inner, i), 0) + 1; c <= outer[i - 1]; ++c) out.push_back({i, c});
    return out;
}

bool dominates(const IntVec& mu, const IntVec& lambda) {
    std::size_t n = std::max(mu.size(), lambda.size());
    long a = 0, b = 0;
    for (std::size_t i = 0; i < n; ++i) {
        a += i < mu.size() ? mu[i] : 0;
        b += i < lambda.size() ? lambda[i] : 0;
        if (a < b) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int d, int max_part) {
    if (max_part < 0) max_part = d;
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rem, int mx) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rem, mx); x >= 1; --x) {
            cur.push_back(x);
            rec(rem - x, x);
            cur.pop_back();
        }
    };
    rec(d, max_part);
    return out;
}

std::vector<Partition> k_strict_partitions(int d, int k) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(d))
        if (is_k_strict(p, k)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> k_strict_partitions_up_to(int max_weight, int k) {
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d)
        for (auto& p : k_strict_partitions(d, k)) out.push_back(std::move(p));
    return out;
}

std::vector<Partition> P_kn(int k, int n) {
    if (k < 0 || n <= k) throw std::invalid_argument("P_kn: need 0 <= k < n");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int)> rec = [&](int mx) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == n - k) return;
        for (int x = mx; x >= 1; --x) {
            if (!cur.empty() && x == cur.back() && x > k) continue;
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(n + k);
    return out;
}

std::pair<std::uint64_t, std::uint64_t> count_bases(int d, int k) {
    if (d < 0 || k < 0) throw std::invalid_argument("count_bases: need d, k >= 0");
    // Coefficients of prod_{i<=k} 1/(1-t^i) prod_{i>k} (1+t^i) and of
    // prod_{i<=2k or i odd} 1/(1-t^i).
    std::vector<std::uint64_t> a(d + 1, 0), b(d + 1, 0);
    a[0] = b[0] = 1;
    for (int i = 1; i <= d; ++i) {
        if (i <= k) {
            for (int s = i; s <= d; ++s) a[s] += a[s - i];
        } else {
            for (int s = d; s >= i; --s) a[s] += a[s - i];
        }
        if (i <= 2 * k || i % 2 == 1)
            for (int s = i; s <= d; ++s) b[s] += b[s - i];
    }
    return {a[d], b[d]};
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

IntVec parse_intvec(const std::string& s) {
    IntVec out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int x = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("cannot parse integer list '" + s + "'");
        out.push_back(x);
    }
    return out;
}

}  // namespace isotropic
