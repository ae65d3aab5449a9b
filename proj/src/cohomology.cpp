#include "giambelli/cohomology.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "giambelli/theta_ring.hpp"

namespace isotropic {

std::string describe(const Space& s) {
    std::ostringstream os;
    if (s.family == Family::C) os << "IG(" << s.n - s.k << "," << 2 * s.n << ")";
    else os << "OG(" << s.n - s.k << "," << 2 * s.n + 1 << ")";
    return os.str();
}

void validate(const Space& s) {
    if (s.k < 0 || s.n <= s.k) throw std::invalid_argument("space: need 0 <= k < n");
}

bool interlaces(const Partition& lambda, const Partition& mu, int k) {
    const int len = static_cast<int>(std::max(lambda.size(), mu.size()));
    for (int j = 1; j <= len; ++j) {
        const int lj = part(lambda, j), mj = part(mu, j);
        if (mj < lj - 1) return false;
        if (j > 1 && mj > part(lambda, j - 1)) return false;
        if (lj > k && mj < lj) return false;
    }
    return true;
}

int box_components(const std::vector<Box>& bs) {
    const int n = static_cast<int>(bs.size());
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && std::abs(bs[u].row - bs[v].row) <= 1 && std::abs(bs[u].col - bs[v].col) <= 1) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return count;
}

std::optional<std::vector<Box>> pieri_free_boxes(const Partition& lambda, const Partition& mu, int k) {
    if (!is_k_strict(mu, k) || !interlaces(lambda, mu, k)) return std::nullopt;
    const std::vector<Box> added = skew_boxes(mu, lambda);
    const Partition lc = conjugate(lambda), mc = conjugate(mu);
    std::vector<bool> tied(added.size(), false);
    auto related_to = [&](const Box& b) {
        std::vector<int> idx;
        for (int t = 0; t < static_cast<int>(added.size()); ++t)
            if (k_related(added[t], b, k)) idx.push_back(t);
        return idx;
    };
    for (int c = 1; c <= k; ++c) {
        const int lh = part(lc, c), mh = part(mc, c);
        if (mh == lh) {
            if (lh == 0) continue;
            auto idx = related_to({lh, c});
            if (idx.size() > 1) return std::nullopt;
            for (int t : idx) tied[t] = true;
        } else if (mh < lh) {
            // A column that lost boxes must keep a bottom box to be tied.
            if (mh == 0) return std::nullopt;
            std::vector<Box> targets;
            for (int r = mh; r <= lh; ++r) targets.push_back({r, c});
            int row = -1;
            for (const Box& b : targets) {
                auto idx = related_to(b);
                if (idx.size() != 1) return std::nullopt;
                if (row >= 0 && added[idx[0]].row != row) return std::nullopt;
                row = added[idx[0]].row;
                tied[idx[0]] = true;
            }
        }
    }
    std::vector<Box> free;
    for (int t = 0; t < static_cast<int>(added.size()); ++t)
        if (added[t].col > k && !tied[t]) free.push_back(added[t]);
    return free;
}

std::optional<int> pieri_exponent(const Partition& lambda, const Partition& mu, int k) {
    auto a = pieri_free_boxes(lambda, mu, k);
    if (!a) return std::nullopt;
    return box_components(*a);
}

namespace {

struct SpaceCache {
    std::shared_mutex mutex;
    std::map<std::pair<Partition, int>, SchubertSum> pieri;
    std::map<Monomial, SchubertSum> reduce;
};

std::mutex g_registry_mutex;
std::map<Space, std::unique_ptr<SpaceCache>> g_registry;

SpaceCache& cache_for(const Space& s) {
    std::lock_guard lock(g_registry_mutex);
    auto& p = g_registry[s];
    if (!p) p = std::make_unique<SpaceCache>();
    return *p;
}

SchubertSum compute_pieri(const Partition& lambda, int p, const Space& s) {
    const int k = s.k, n = s.n;
    const int len = static_cast<int>(lambda.size());
    const int target = weight(lambda) + p;
    SchubertSum out;
    Partition mu(len + 1, 0);
    std::function<void(int, int)> rec = [&](int j, int sum) {
        if (j == len + 1) {
            if (sum != target) return;
            Partition m = normalize(mu);
            if (!in_P(m, k, n)) return;
            auto nexp = pieri_exponent(lambda, m, k);
            if (!nexp) return;
            int e = *nexp;
            if (s.family == Family::C) e += ell_k(lambda, k) - ell_k(m, k);
            out.add(m, Rational::pow2(e));
            return;
        }
        const int lj = part(lambda, j + 1);
        int lo = std::max(lj - 1, 0);
        if (lj > k) lo = lj;
        const int hi = j == 0 ? n + k : lambda[j - 1];
        for (int v = lo; v <= hi; ++v) {
            int ns = sum + v;
            if (ns > target) break;
            mu[j] = v;
            rec(j + 1, ns);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

const SchubertSum& pieri(const Partition& lambda, int p, const Space& s) {
    validate(s);
    if (!in_P(lambda, s.k, s.n)) throw std::invalid_argument("pieri: partition " + to_string(lambda) + " not in P(k,n)");
    if (p < 1 || p > s.n + s.k) throw std::invalid_argument("pieri: special index out of range");
    SpaceCache& c = cache_for(s);
    auto key = std::make_pair(lambda, p);
    {
        std::shared_lock lock(c.mutex);
        auto it = c.pieri.find(key);
        if (it != c.pieri.end()) return it->second;
    }
    SchubertSum v = compute_pieri(lambda, p, s);
    std::unique_lock lock(c.mutex);
    return c.pieri.emplace(std::move(key), std::move(v)).first->second;
}

namespace {

SchubertSum apply_special(const SchubertSum& a, int p, const Space& s) {
    SchubertSum out;
    for (const auto& [lam, c] : a) out.add_scaled(pieri(lam, p, s), c);
    return out;
}

}  // namespace

SchubertSum reduce_monomial(const Monomial& alpha_in, const Space& s) {
    validate(s);
    Monomial alpha = sort_monomial(alpha_in);
    for (int x : alpha)
        if (x < 0 || x > s.n + s.k) throw std::invalid_argument("reduce_monomial: index out of range");
    if (alpha.empty()) return SchubertSum::single({});
    SpaceCache& c = cache_for(s);
    {
        std::shared_lock lock(c.mutex);
        auto it = c.reduce.find(alpha);
        if (it != c.reduce.end()) return it->second;
    }
    Monomial prefix(alpha.begin(), alpha.end() - 1);
    SchubertSum v = apply_special(reduce_monomial(prefix, s), alpha.back(), s);
    std::unique_lock lock(c.mutex);
    c.reduce.emplace(std::move(alpha), v);
    return v;
}

MonomialSum giambelli_monomials(const Partition& lambda, const Space& s) {
    validate(s);
    if (!is_k_strict(lambda, s.k)) throw std::invalid_argument("giambelli: partition is not k-strict");
    MonomialSum out;
    for (const auto& [a, c] : expand(C_strict(lambda, s.k), lambda))
        if (a.empty() || a.front() <= s.n + s.k) out.add(a, c);
    if (s.family == Family::B) out *= Rational::pow2(-ell_k(lambda, s.k));
    return out;
}

SchubertSum giambelli(const Partition& lambda, const Space& s) {
    if (!in_P(lambda, s.k, s.n)) throw std::invalid_argument("giambelli: partition not in P(k,n)");
    SchubertSum out;
    for (const auto& [a, c] : giambelli_monomials(lambda, s)) out.add_scaled(reduce_monomial(a, s), c);
    return out;
}

SchubertSum multiply(const SchubertSum& a, const SchubertSum& b, const Space& s) {
    SchubertSum out;
    for (const auto& [mu, cb] : b)
        for (const auto& [alpha, cm] : giambelli_monomials(mu, s)) {
            SchubertSum cur = a;
            for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) cur = apply_special(cur, *it, s);
            out.add_scaled(cur, cb * cm);
        }
    return out;
}

SchubertSum multiply_via_theta(const SchubertSum& a, const SchubertSum& b, const Space& s) {
    validate(s);
    const int k = s.k;
    auto lift = [&](const SchubertSum& x) {
        ThetaSum t;
        for (const auto& [lam, c] : x) {
            Rational f = s.family == Family::B ? Rational::pow2(-ell_k(lam, k)) : Rational(1);
            t.add_scaled(theta(lam, k), c * f);
        }
        return t;
    };
    ThetaSum coords = to_theta_basis(theta_multiply(lift(a), lift(b), k), k);
    SchubertSum out;
    for (const auto& [nu, c] : coords) {
        if (!in_P(nu, k, s.n)) continue;
        Rational f = s.family == Family::B ? Rational::pow2(ell_k(nu, k)) : Rational(1);
        out.add(nu, c * f);
    }
    return out;
}

SchubertSum presentation_relation(const Space& s, int r) {
    validate(s);
    if (r <= s.k || r > s.n + s.k) throw std::invalid_argument("presentation_relation: need k < r <= n+k");
    SchubertSum out = reduce_monomial({r, r}, s);
    for (int i = 1; i <= s.n + s.k - r && i <= r; ++i) {
        Rational c = i % 2 ? Rational(-2) : Rational(2);
        out.add_scaled(reduce_monomial({r + i, r - i}, s), c);
    }
    return out;
}

bool verify_presentation(const Space& s, int r) { return presentation_relation(s, r).empty(); }

int stable_n(int weight_a, int weight_b, int k) { return weight_a + weight_b + k + 2; }

void clear_cohomology_caches() {
    std::lock_guard lock(g_registry_mutex);
    g_registry.clear();
}

// ---- persistence ----

namespace {

constexpr char kMagic[4] = {'G', 'B', 'P', 'C'};
constexpr std::uint32_t kVersion = 1;

void put_i32(std::ostream& os, std::int32_t v) { os.write(reinterpret_cast<const char*>(&v), sizeof v); }
std::int32_t get_i32(std::istream& is) {
    std::int32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw std::runtime_error("pieri cache: truncated file");
    return v;
}
void put_vec(std::ostream& os, const IntVec& v) {
    put_i32(os, static_cast<std::int32_t>(v.size()));
    for (int x : v) put_i32(os, x);
}
IntVec get_vec(std::istream& is) {
    std::int32_t n = get_i32(is);
    if (n < 0 || n > 4096) throw std::runtime_error("pieri cache: corrupt vector");
    IntVec v(n);
    for (auto& x : v) x = get_i32(is);
    return v;
}
void put_str(std::ostream& os, const std::string& s) {
    put_i32(os, static_cast<std::int32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}
std::string get_str(std::istream& is) {
    std::int32_t n = get_i32(is);
    if (n < 0 || n > (1 << 20)) throw std::runtime_error("pieri cache: corrupt string");
    std::string s(n, '\0');
    is.read(s.data(), n);
    if (!is) throw std::runtime_error("pieri cache: truncated file");
    return s;
}

}  // namespace

std::size_t pieri_cache_entries() {
    std::lock_guard lock(g_registry_mutex);
    std::size_t n = 0;
    for (auto& [sp, c] : g_registry) {
        std::shared_lock l2(c->mutex);
        n += c->pieri.size();
    }
    return n;
}

void save_pieri_cache(const std::string& path) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write " + path);
    os.write(kMagic, 4);
    put_i32(os, static_cast<std::int32_t>(kVersion));
    std::lock_guard lock(g_registry_mutex);
    std::int32_t spaces = static_cast<std::int32_t>(g_registry.size());
    put_i32(os, spaces);
    for (auto& [sp, c] : g_registry) {
        std::shared_lock l2(c->mutex);
        put_i32(os, sp.family == Family::B ? 0 : 1);
        put_i32(os, sp.k);
        put_i32(os, sp.n);
        put_i32(os, static_cast<std::int32_t>(c->pieri.size()));
        for (const auto& [key, val] : c->pieri) {
            put_vec(os, key.first);
            put_i32(os, key.second);
            put_i32(os, static_cast<std::int32_t>(val.size()));
            for (const auto& [mu, coef] : val) {
                put_vec(os, mu);
                put_str(os, coef.str());
            }
        }
    }
}

std::size_t load_pieri_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) return 0;
    char magic[4];
    is.read(magic, 4);
    if (!is || !std::equal(magic, magic + 4, kMagic)) return 0;
    if (get_i32(is) != static_cast<std::int32_t>(kVersion)) return 0;
    std::size_t loaded = 0;
    std::int32_t spaces = get_i32(is);
    for (int t = 0; t < spaces; ++t) {
        Space sp;
        sp.family = get_i32(is) == 0 ? Family::B : Family::C;
        sp.k = get_i32(is);
        sp.n = get_i32(is);
        validate(sp);
        SpaceCache& c = cache_for(sp);
        std::int32_t entries = get_i32(is);
        for (int e = 0; e < entries; ++e) {
            Partition lam = get_vec(is);
            int p = get_i32(is);
            std::int32_t terms = get_i32(is);
            SchubertSum val;
            for (int u = 0; u < terms; ++u) {
                Partition mu = get_vec(is);
                val.add(mu, Rational::from_string(get_str(is)));
            }
            std::unique_lock lock(c.mutex);
            if (c.pieri.emplace(std::make_pair(lam, p), std::move(val)).second) ++loaded;
        }
    }
    return loaded;
}

}  // namespace isotropic
