#include "giambelli/raising_ops.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace isotropic {

PairSet::PairSet(PairMode mode, std::vector<Pair> pairs) : mode_(mode) {
    for (const auto& p : pairs) insert(p);
}

bool PairSet::in_domain(const Pair& p) const {
    if (p.first < 1) return false;
    return mode_ == PairMode::Strict ? p.first < p.second : p.first <= p.second;
}

bool PairSet::contains(const Pair& p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

void PairSet::insert(const Pair& p) {
    if (!in_domain(p)) throw std::invalid_argument("PairSet: pair outside domain");
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it == pairs_.end() || *it != p) pairs_.insert(it, p);
}

void PairSet::erase(const Pair& p) {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
    if (it != pairs_.end() && *it == p) pairs_.erase(it);
}

PairSet PairSet::with(const Pair& p) const {
    PairSet out = *this;
    out.insert(p);
    return out;
}

int PairSet::diagonal_count() const {
    int c = 0;
    for (const auto& [i, j] : pairs_)
        if (i == j) ++c;
    return c;
}

bool PairSet::is_valid() const {
    for (const auto& [i, j] : pairs_) {
        Pair up{i - 1, j}, left{i, j - 1};
        if (in_domain(up) && !contains(up)) return false;
        if (in_domain(left) && !contains(left)) return false;
    }
    return true;
}

bool PairSet::is_outer_corner(const Pair& p) const {
    if (!in_domain(p) || contains(p)) return false;
    Pair up{p.first - 1, p.second}, left{p.first, p.second - 1};
    if (in_domain(up) && !contains(up)) return false;
    if (in_domain(left) && !contains(left)) return false;
    return true;
}

std::optional<Pair> PairSet::outer_corner_in_row(int i) const {
    if (i < 1) return std::nullopt;
    int j = mode_ == PairMode::Strict ? i + 1 : i;
    while (contains({i, j})) ++j;
    Pair p{i, j};
    if (is_outer_corner(p)) return p;
    return std::nullopt;
}

std::optional<Pair> PairSet::outer_corner_in_column(int j) const {
    int i = 1;
    while (contains({i, j})) ++i;
    Pair p{i, j};
    if (is_outer_corner(p)) return p;
    return std::nullopt;
}

std::vector<Pair> PairSet::outer_corners() const {
    std::vector<Pair> out;
    int rows = 1;
    for (const auto& pr : pairs_) rows = std::max(rows, pr.first + 1);
    for (int i = 1; i <= rows; ++i)
        if (auto p = outer_corner_in_row(i)) out.push_back(*p);
    return out;
}

PairSet PairSet::restrict_columns(int t) const {
    PairSet out(mode_);
    for (const auto& p : pairs_)
        if (p.second <= t) out.pairs_.push_back(p);
    return out;
}

PairSet PairSet::strict_part() const {
    PairSet out(PairMode::Strict);
    for (const auto& p : pairs_)
        if (p.first < p.second) out.pairs_.push_back(p);
    return out;
}

bool PairSet::subset_of(const PairSet& o) const {
    return std::includes(o.pairs_.begin(), o.pairs_.end(), pairs_.begin(), pairs_.end());
}

PairSet C_t(const IntVec& lambda, int k, int t) {
    PairSet out(PairMode::Diagonal);
    for (int j = 1; j <= t; ++j)
        for (int i = 1; i <= j; ++i)
            if (part(lambda, i) + part(lambda, j) > 2 * k + j - i) out.insert({i, j});
    return out;
}

PairSet C_of(const Partition& lambda, int k) { return C_t(lambda, k, static_cast<int>(lambda.size())); }

PairSet C_strict(const Partition& lambda, int k) { return C_of(lambda, k).strict_part(); }

int middle_row(const Partition& lambda, int k) {
    int m = 1;
    while (part(lambda, m) > k) ++m;
    return m;
}

std::vector<Pair> rim(const PairSet& d, int max_col) {
    std::vector<Pair> out;
    for (int j = 1; j <= max_col; ++j)
        for (int i = 1; i <= j; ++i) {
            Pair p{i, j};
            if (!d.in_domain(p) || d.contains(p)) continue;
            if (i == 1 || d.contains({i - 1, j - 1})) out.push_back(p);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pair> rim1(const PairSet& c, int m, int max_col) {
    std::vector<Pair> out;
    for (const auto& p : rim(c, max_col))
        if (c.contains({p.first, p.second - 1}) || (p.first == m && p.second == m)) out.push_back(p);
    return out;
}

Monomial sort_monomial(IntVec v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

MonomialSum monomial_product(const MonomialSum& a, const MonomialSum& b) {
    MonomialSum out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Monomial k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            out.add(sort_monomial(std::move(k)), ca * cb);
        }
    return out;
}

namespace {

using ExpandKey = std::pair<std::vector<Pair>, IntVec>;

std::shared_mutex g_expand_mutex;
std::map<ExpandKey, MonomialSum> g_expand_cache;

// Inserts r into a sorted monomial.
Monomial with_factor(const Monomial& m, int r) {
    Monomial out;
    out.reserve(m.size() + 1);
    bool placed = r <= 0;
    for (int x : m) {
        if (!placed && r >= x) {
            out.push_back(r);
            placed = true;
        }
        out.push_back(x);
    }
    if (!placed) out.push_back(r);
    return out;
}

MonomialSum expand_rec(const PairSet& d, IntVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return MonomialSum::single({});
    const int r = v.back();
    if (r < 0) return {};
    const int len = static_cast<int>(v.size());
    if (len == 1) return MonomialSum::single({r});

    ExpandKey key{d.restrict_columns(len).pairs(), v};
    {
        std::shared_lock lock(g_expand_mutex);
        auto it = g_expand_cache.find(key);
        if (it != g_expand_cache.end()) return it->second;
    }

    const int l1 = len - 1;
    std::vector<bool> in_d(l1);
    for (int i = 0; i < l1; ++i) in_d[i] = d.contains({i + 1, len});

    MonomialSum out;
    IntVec mu(v.begin(), v.end() - 1);
    IntVec alpha(l1, 0);
    // Enumerate (D,ℓ)-compatible α with |α| <= r.
    std::function<void(int, int, int)> rec = [&](int i, int used, int mult) {
        if (i == l1) {
            IntVec nu = mu;
            for (int t = 0; t < l1; ++t) nu[t] += alpha[t];
            MonomialSum sub = expand_rec(d, std::move(nu));
            if (sub.empty()) return;
            Rational coef = Rational::pow2(mult);
            if (used % 2) coef = -coef;
            const int last = r - used;
            for (const auto& [mk, mc] : sub) out.add(with_factor(mk, last), mc * coef);
            return;
        }
        const int cap = in_d[i] ? r - used : std::min(1, r - used);
        for (int a = 0; a <= cap; ++a) {
            alpha[i] = a;
            rec(i + 1, used + a, mult + (a > 0 && in_d[i] ? 1 : 0));
        }
        alpha[i] = 0;
    };
    rec(0, 0, 0);

    std::unique_lock lock(g_expand_mutex);
    g_expand_cache.emplace(std::move(key), out);
    return out;
}

}  // namespace

MonomialSum expand(const PairSet& d, const IntVec& lambda) {
    PairSet ds = d;
    if (d.mode() == PairMode::Diagonal) {
        if (d.diagonal_count() != 0) throw std::invalid_argument("expand: pair set must be strict");
        ds = d.strict_part();
    }
    return expand_rec(ds, lambda);
}

void clear_expand_cache() {
    std::unique_lock lock(g_expand_mutex);
    g_expand_cache.clear();
}

MonomialSum det_expand(int n, const std::function<int(int, int)>& f) {
    if (n == 0) return MonomialSum::single({});
    if (n > 20) throw std::invalid_argument("det_expand: matrix too large");
    std::map<unsigned, MonomialSum> memo;
    // Laplace expansion along the first remaining row; mask marks used columns.
    std::function<MonomialSum(int, unsigned)> rec = [&](int row, unsigned mask) -> MonomialSum {
        if (row > n) return MonomialSum::single({});
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MonomialSum out;
        int pos = 0;
        for (int j = 1; j <= n; ++j) {
            if (mask & (1u << (j - 1))) continue;
            int idx = f(row, j);
            int sgn = pos % 2 ? -1 : 1;
            ++pos;
            if (idx < 0) continue;
            MonomialSum sub = rec(row + 1, mask | (1u << (j - 1)));
            for (const auto& [mk, mc] : sub) out.add(with_factor(mk, idx), mc * Rational(sgn));
        }
        memo.emplace(mask, out);
        return out;
    };
    return rec(1, 0);
}

MonomialSum jacobi_trudi(const IntVec& lambda, const IntVec& mu) {
    const int n = static_cast<int>(lambda.size());
    return det_expand(n, [&](int i, int j) { return part(lambda, i) - part(mu, j) + j - i; });
}

MonomialSum pfaffian_expand(const Partition& lambda) {
    if (!is_strict(lambda) || !is_partition(lambda)) throw std::invalid_argument("pfaffian_expand: need a strict partition");
    IntVec v = lambda;
    if (v.size() % 2) v.push_back(0);
    const int n = static_cast<int>(v.size());
    if (n == 0) return MonomialSum::single({});

    auto entry = [](int a, int b) {
        MonomialSum s;
        for (int i = 0; i <= b; ++i) {
            Rational c = i == 0 ? Rational(1) : Rational(2);
            if (i % 2) c = -c;
            s.add(sort_monomial({a + i, b - i}), c);
        }
        return s;
    };

    std::map<unsigned, MonomialSum> memo;
    std::function<MonomialSum(unsigned)> rec = [&](unsigned mask) -> MonomialSum {
        if (mask == (1u << n) - 1) return MonomialSum::single({});
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int first = 0;
        while (mask & (1u << first)) ++first;
        MonomialSum out;
        int pos = 0;
        for (int j = first + 1; j < n; ++j) {
            if (mask & (1u << j)) continue;
            Rational sgn = pos % 2 ? Rational(-1) : Rational(1);
            ++pos;
            MonomialSum sub = rec(mask | (1u << first) | (1u << j));
            out.add_scaled(monomial_product(entry(v[first], v[j]), sub), sgn);
        }
        memo.emplace(mask, out);
        return out;
    };
    return rec(0);
}

}  // namespace isotropic
