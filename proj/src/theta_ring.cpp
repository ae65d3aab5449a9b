#include "giambelli/theta_ring.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace isotropic {

namespace {

std::shared_mutex g_straighten_mutex;
std::map<std::pair<int, Monomial>, ThetaSum> g_straighten_cache;

std::shared_mutex g_theta_mutex;
std::map<std::pair<int, Partition>, ThetaSum> g_theta_cache;

std::shared_mutex g_q_mutex;
std::map<Monomial, ThetaSum> g_q_cache;

std::shared_mutex g_schur_mutex;
std::map<std::pair<int, Monomial>, FormalSum<Partition>> g_schur_cache;

// Position of the first index m > k that occurs twice, or -1.
int repeated_position(const Monomial& a, int k) {
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
        if (a[i] == a[i + 1] && a[i] > k) return static_cast<int>(i);
    return -1;
}

// One application of the quadratic relation at position pos (and pos+1).
std::vector<std::pair<Monomial, Rational>> rewrite_at(const Monomial& a, int pos) {
    const int m = a[pos];
    Monomial rest;
    rest.reserve(a.size());
    for (int i = 0; i < static_cast<int>(a.size()); ++i)
        if (i != pos && i != pos + 1) rest.push_back(a[i]);
    std::vector<std::pair<Monomial, Rational>> out;
    for (int s = 1; s <= m; ++s) {
        Monomial b = rest;
        b.push_back(m + s);
        b.push_back(m - s);
        out.emplace_back(sort_monomial(std::move(b)), s % 2 ? Rational(2) : Rational(-2));
    }
    return out;
}

}  // namespace

ThetaSum straighten(const Monomial& alpha_in, int k) {
    Monomial alpha = sort_monomial(alpha_in);
    for (int x : alpha)
        if (x < 0) return {};
    const int pos = repeated_position(alpha, k);
    if (pos < 0) return ThetaSum::single(alpha);
    auto key = std::make_pair(k, alpha);
    {
        std::shared_lock lock(g_straighten_mutex);
        auto it = g_straighten_cache.find(key);
        if (it != g_straighten_cache.end()) return it->second;
    }
    ThetaSum out;
    for (const auto& [b, c] : rewrite_at(alpha, pos)) out.add_scaled(straighten(b, k), c);
    std::unique_lock lock(g_straighten_mutex);
    g_straighten_cache.emplace(std::move(key), out);
    return out;
}

ThetaSum straighten(const MonomialSum& e, int k) {
    ThetaSum out;
    for (const auto& [a, c] : e) out.add_scaled(straighten(a, k), c);
    return out;
}

ThetaSum straighten_random(const Monomial& alpha_in, int k, std::mt19937_64& rng) {
    Monomial alpha = sort_monomial(alpha_in);
    std::vector<int> candidates;
    for (std::size_t i = 0; i + 1 < alpha.size(); ++i)
        if (alpha[i] == alpha[i + 1] && alpha[i] > k) candidates.push_back(static_cast<int>(i));
    if (candidates.empty()) return ThetaSum::single(alpha);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    ThetaSum out;
    for (const auto& [b, c] : rewrite_at(alpha, candidates[pick(rng)])) out.add_scaled(straighten_random(b, k, rng), c);
    return out;
}

ThetaSum theta_multiply(const ThetaSum& a, const ThetaSum& b, int k) {
    ThetaSum out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) {
            Monomial m = ka;
            m.insert(m.end(), kb.begin(), kb.end());
            out.add_scaled(straighten(m, k), ca * cb);
        }
    return out;
}

ThetaSum theta_product(const std::vector<ThetaSum>& factors, int k) {
    ThetaSum acc = ThetaSum::single({});
    for (const auto& f : factors) acc = theta_multiply(acc, f, k);
    return acc;
}

const ThetaSum& theta(const Partition& lambda, int k) {
    if (!is_k_strict(lambda, k)) throw std::invalid_argument("theta: partition is not k-strict");
    auto key = std::make_pair(k, lambda);
    {
        std::shared_lock lock(g_theta_mutex);
        auto it = g_theta_cache.find(key);
        if (it != g_theta_cache.end()) return it->second;
    }
    ThetaSum val = straighten(expand(C_strict(lambda, k), lambda), k);
    std::unique_lock lock(g_theta_mutex);
    return g_theta_cache.emplace(std::move(key), std::move(val)).first->second;
}

ThetaSum to_theta_basis(const ThetaSum& e, int k) {
    ThetaSum work;
    for (const auto& [a, c] : e) work.add_scaled(straighten(a, k), c);
    ThetaSum coords;
    while (!work.empty()) {
        const auto [mu, c] = *work.begin();
        const ThetaSum& th = theta(mu, k);
        if (th.coeff(mu) != Rational(1) || th.begin()->first != mu)
            throw std::logic_error("to_theta_basis: Θ_" + to_string(mu) + " is not unitriangular");
        coords.add(mu, c);
        work.add_scaled(th, -c);
    }
    return coords;
}

ThetaSum from_theta_basis(const ThetaSum& coords, int k) {
    ThetaSum out;
    for (const auto& [mu, c] : coords) out.add_scaled(theta(mu, k), c);
    return out;
}

ThetaSum hat_theta(int r, int k) {
    if (r < 0) return {};
    return straighten(expand(PairSet(), IntVec(r, 1)), k);
}

ThetaSum hat_product(const Partition& lambda, int k) {
    std::vector<ThetaSum> fs;
    for (int r : lambda) fs.push_back(hat_theta(r, k));
    return theta_product(fs, k);
}

ThetaSum to_hat_basis(const ThetaSum& e, int k) {
    std::map<int, ThetaSum> by_degree;
    for (const auto& [key, c] : e) by_degree[weight(key)].add(key, c);
    ThetaSum out;
    for (const auto& [d, part_d] : by_degree) {
        // Dense solve M x = b, column j of M being ϑ̂_{basis[j]} in the ϑ basis.
        const auto basis = k_strict_partitions(d, k);
        const std::size_t n = basis.size();
        std::map<Partition, std::size_t> row;
        for (std::size_t i = 0; i < n; ++i) row[basis[i]] = i;
        std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [key, c] : hat_product(basis[j], k)) M[row.at(key)][j] = c;
        for (const auto& [key, c] : part_d) M[row.at(key)][n] = c;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && M[piv][col].is_zero()) ++piv;
            if (piv == n) throw std::logic_error("to_hat_basis: products of dual thetas are not a basis in degree " + std::to_string(d));
            std::swap(M[piv], M[col]);
            const Rational inv = Rational(1) / M[col][col];
            for (std::size_t c = col; c <= n; ++c) M[col][c] *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || M[r][col].is_zero()) continue;
                const Rational f = M[r][col];
                for (std::size_t c = col; c <= n; ++c) M[r][c] -= f * M[col][c];
            }
        }
        for (std::size_t j = 0; j < n; ++j) out.add(basis[j], M[j][n]);
    }
    return out;
}

ThetaSum skew_S(const IntVec& lambda, const IntVec& mu, int k) {
    return straighten(jacobi_trudi(lambda, mu), k);
}

ThetaSum q_to_Q_basis(const MonomialSum& q) {
    ThetaSum out;
    for (const auto& [a, c] : q) {
        {
            std::shared_lock lock(g_q_mutex);
            auto it = g_q_cache.find(a);
            if (it != g_q_cache.end()) {
                out.add_scaled(it->second, c);
                continue;
            }
        }
        ThetaSum v = to_theta_basis(straighten(a, 0), 0);
        out.add_scaled(v, c);
        std::unique_lock lock(g_q_mutex);
        g_q_cache.emplace(a, std::move(v));
    }
    return out;
}

FormalSum<Partition> e_monomial_to_schur(const Monomial& e_in, int k) {
    Monomial e = sort_monomial(e_in);
    auto key = std::make_pair(k, e);
    {
        std::shared_lock lock(g_schur_mutex);
        auto it = g_schur_cache.find(key);
        if (it != g_schur_cache.end()) return it->second;
    }
    FormalSum<Partition> cur = FormalSum<Partition>::single({});
    for (int i : e) {
        if (i > k) {
            cur = {};
            break;
        }
        FormalSum<Partition> next;
        for (const auto& [nu, c] : cur) {
            // Horizontal strips of size i on ν, first row capped at k.
            const int len = static_cast<int>(nu.size());
            Partition rho(len + 1, 0);
            std::function<void(int, int)> rec = [&](int row, int left) {
                if (row == len + 1) {
                    if (left == 0) next.add(normalize(rho), c);
                    return;
                }
                const int lo = part(nu, row + 1);
                const int hi = row == 0 ? k : nu[row - 1];
                for (int v = lo; v <= hi && v - lo <= left; ++v) {
                    rho[row] = v;
                    rec(row + 1, left - (v - lo));
                }
            };
            rec(0, i);
        }
        cur = std::move(next);
    }
    std::unique_lock lock(g_schur_mutex);
    g_schur_cache.emplace(std::move(key), cur);
    return cur;
}

namespace {

MixedSum assemble_mixed(const std::map<std::pair<Monomial, Monomial>, Rational>& qe, int k) {
    MixedSum out;
    for (const auto& [xy, c] : qe) {
        ThetaSum xq = q_to_Q_basis(MonomialSum::single(xy.first));
        FormalSum<Partition> ys = e_monomial_to_schur(xy.second, k);
        for (const auto& [mu, a] : xq)
            for (const auto& [nu, b] : ys) out.add({mu, nu}, c * a * b);
    }
    return out;
}

}  // namespace

MixedSum mixed_expand(const Partition& lambda, int k) {
    std::map<std::pair<Monomial, Monomial>, Rational> qe;
    for (const auto& [a, c] : theta(lambda, k)) {
        const int t = static_cast<int>(a.size());
        std::vector<int> choice(t, 0);
        std::function<void(int)> rec = [&](int s) {
            if (s == t) {
                Monomial x, y;
                for (int u = 0; u < t; ++u) {
                    x.push_back(a[u] - choice[u]);
                    y.push_back(choice[u]);
                }
                auto key = std::make_pair(sort_monomial(std::move(x)), sort_monomial(std::move(y)));
                auto [it, inserted] = qe.try_emplace(key, c);
                if (!inserted) it->second += c;
                return;
            }
            for (int i = 0; i <= std::min(k, a[s]); ++i) {
                choice[s] = i;
                rec(s + 1);
            }
        };
        rec(0);
    }
    return assemble_mixed(qe, k);
}

MixedSum mixed_expand_by_columns(const Partition& lambda, int k) {
    if (!is_k_strict(lambda, k)) throw std::invalid_argument("mixed_expand: partition is not k-strict");
    const PairSet d = C_strict(lambda, k);
    const int len = static_cast<int>(lambda.size());
    std::map<std::pair<Monomial, Monomial>, Rational> qe;
    std::vector<int> alpha(len, 0);
    std::function<void(int)> rec = [&](int s) {
        if (s == len) {
            IntVec g(len);
            for (int u = 0; u < len; ++u) g[u] = lambda[u] - alpha[u];
            MonomialSum qs = expand(d, g);
            Monomial y = sort_monomial(alpha);
            for (const auto& [x, c] : qs) {
                auto [it, inserted] = qe.try_emplace({x, y}, c);
                if (!inserted) it->second += c;
            }
            return;
        }
        for (int i = 0; i <= k; ++i) {
            alpha[s] = i;
            rec(s + 1);
        }
    };
    rec(0);
    return assemble_mixed(qe, k);
}

void clear_theta_caches() {
    {
        std::unique_lock lock(g_straighten_mutex);
        g_straighten_cache.clear();
    }
    {
        std::unique_lock lock(g_theta_mutex);
        g_theta_cache.clear();
    }
    {
        std::unique_lock lock(g_q_mutex);
        g_q_cache.clear();
    }
    std::unique_lock lock(g_schur_mutex);
    g_schur_cache.clear();
}

// ---- Poly ----

Poly Poly::constant(int nvars, int maxdeg, const Rational& c) {
    Poly p(nvars, maxdeg);
    p.add_term(Exp(nvars, 0), c);
    return p;
}

Poly Poly::variable(int nvars, int maxdeg, int var) {
    Poly p(nvars, maxdeg);
    Exp e(nvars, 0);
    e[var] = 1;
    p.add_term(e, 1);
    return p;
}

void Poly::add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    int deg = 0;
    for (unsigned char x : e) deg += x;
    if (deg > maxdeg_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ == 0 && terms_.empty()) {
        nvars_ = o.nvars_;
        maxdeg_ = o.maxdeg_;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ == 0 && terms_.empty()) {
        nvars_ = o.nvars_;
        maxdeg_ = o.maxdeg_;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
    Poly out(a.nvars_, std::min(a.maxdeg_, b.maxdeg_));
    Poly::Exp e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = static_cast<unsigned char>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    return out;
}

// ---- Evaluator ----

Evaluator::Evaluator(int m, int k, int maxdeg) : m_(m), k_(k), maxdeg_(maxdeg), nv_(m + k) {
    if (m < 1) throw std::invalid_argument("Evaluator: need at least one x variable");
    if (maxdeg < 0 || maxdeg > 60) throw std::invalid_argument("Evaluator: unsupported truncation degree");
    // prod_i (1 + x_i t)/(1 - x_i t) = prod_i (1 + 2 sum_{s>=1} x_i^s t^s)
    std::vector<Poly> series(maxdeg + 1, Poly(nv_, maxdeg));
    series[0] = Poly::constant(nv_, maxdeg, 1);
    for (int v = 0; v < m; ++v) {
        std::vector<Poly> next(maxdeg + 1, Poly(nv_, maxdeg));
        for (int d = 0; d <= maxdeg; ++d)
            for (int s = 0; s <= d; ++s)
                for (const auto& [e, c] : series[d - s].terms()) {
                    Poly::Exp f = e;
                    f[v] = static_cast<unsigned char>(f[v] + s);
                    next[d].add_term(f, s == 0 ? c : c * Rational(2));
                }
        series = std::move(next);
    }
    q_ = std::move(series);
    std::vector<Poly> es(maxdeg + 1, Poly(nv_, maxdeg));
    es[0] = Poly::constant(nv_, maxdeg, 1);
    for (int v = 0; v < k; ++v)
        for (int d = std::min(maxdeg, v + 1); d >= 1; --d) es[d] += es[d - 1] * Poly::variable(nv_, maxdeg, m + v);
    e_ = std::move(es);
    th_.assign(maxdeg + 1, Poly(nv_, maxdeg));
    for (int r = 0; r <= maxdeg; ++r)
        for (int i = 0; i <= std::min(k, r); ++i) th_[r] += q_[r - i] * e_[i];
}

Poly Evaluator::one() const { return Poly::constant(nv_, maxdeg_, 1); }

const Poly& Evaluator::q(int r) {
    if (r < 0 || r > maxdeg_) throw std::out_of_range("Evaluator: truncation degree too small");
    return q_[r];
}

const Poly& Evaluator::e_y(int i) {
    if (i < 0 || i > maxdeg_) throw std::out_of_range("Evaluator: truncation degree too small");
    return e_[i];
}

const Poly& Evaluator::theta_r(int r) {
    if (r < 0 || r > maxdeg_) throw std::out_of_range("Evaluator: truncation degree too small");
    return th_[r];
}

namespace {

template <class F>
Poly eval_monomials(const MonomialSum& s, int nv, int maxdeg, F&& gen) {
    Poly out(nv, maxdeg);
    for (const auto& [a, c] : s) {
        if (weight(a) > maxdeg) throw std::out_of_range("Evaluator: truncation degree too small");
        Poly t = Poly::constant(nv, maxdeg, c);
        for (int x : a) t = t * gen(x);
        out += t;
    }
    return out;
}

}  // namespace

Poly Evaluator::q_monomials(const MonomialSum& s) {
    return eval_monomials(s, nv_, maxdeg_, [&](int r) -> const Poly& { return q(r); });
}

Poly Evaluator::e_monomials(const MonomialSum& s) {
    return eval_monomials(s, nv_, maxdeg_, [&](int r) -> const Poly& { return e_y(r); });
}

Poly Evaluator::theta_monomials(const ThetaSum& s) {
    return eval_monomials(s, nv_, maxdeg_, [&](int r) -> const Poly& { return theta_r(r); });
}

Poly Evaluator::Q(const Partition& mu) {
    auto it = Q_cache_.find(mu);
    if (it != Q_cache_.end()) return it->second;
    Poly p = q_monomials(pfaffian_expand(mu));
    Q_cache_.emplace(mu, p);
    return p;
}

Poly Evaluator::schur_conj(const Partition& nu) {
    const int len = static_cast<int>(nu.size());
    return e_monomials(det_expand(len, [&](int i, int j) { return part(nu, i) + j - i; }));
}

Poly Evaluator::mixed(const MixedSum& s) {
    Poly out(nv_, maxdeg_);
    for (const auto& [key, c] : s) {
        Poly t = Q(key.first) * schur_conj(key.second);
        t *= c;
        out += t;
    }
    return out;
}

}  // namespace isotropic
