#include "giambelli/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "giambelli/cohomology.hpp"
#include "giambelli/parallel.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/raising_ops.hpp"
#include "giambelli/substitution.hpp"
#include "giambelli/theta_ring.hpp"
#include "giambelli/weyl.hpp"

namespace isotropic {

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

template <class T>
std::string str(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string pstr(const Partition& p) { return "(" + to_string(p) + ")"; }

int cap(const SuiteOptions& o, int full) { return o.max_weight < 0 ? full : std::min(full, o.max_weight); }

// Collects the first failure of a parallel sweep; later failures are
// only counted.
class FailureLog {
public:
    void fail(std::string msg) {
        std::lock_guard lock(mu_);
        if (count_++ == 0) first_ = std::move(msg);
    }
    Outcome outcome(const std::string& summary) const {
        if (count_ == 0) return {true, summary};
        return {false, std::to_string(count_) + " failure(s); first: " + first_};
    }

private:
    std::mutex mu_;
    std::size_t count_ = 0;
    std::string first_;
};

void guarded(FailureLog& log, const std::string& where, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        log.fail(where + ": exception: " + e.what());
    }
}

PairSet pairs(std::initializer_list<Pair> ps) { return PairSet(PairMode::Diagonal, std::vector<Pair>(ps)); }

FourTuple tuple(std::initializer_list<Pair> d, IntVec mu, std::initializer_list<Pair> s, int h) {
    FourTuple t;
    t.D = pairs(d);
    t.mu = std::move(mu);
    t.S = pairs(s);
    t.h = h;
    return t;
}

// ---- criteria ----

Outcome intro_giambelli(const SuiteOptions&) {
    const Space s{Family::C, 1, 5};
    const MonomialSum expected{{{3, 2, 1}, 1}, {{4, 1, 1}, -2}, {{4, 2}, 1}, {{5, 1}, 2}, {{3, 3}, -1}};
    const MonomialSum got = giambelli_monomials({3, 2, 1}, s);
    if (!(got == expected)) return {false, "monomial expansion is " + str(got)};
    const SchubertSum cls = giambelli({3, 2, 1}, s);
    if (!(cls == SchubertSum::single({3, 2, 1}))) return {false, "reduces to " + str(cls)};
    return {true, "5 monomials reduce to sigma_321 in " + describe(s)};
}

Outcome pieri_example(const SuiteOptions&) {
    const Space s{Family::B, 1, 7};
    const SchubertSum expected{{{2, 1, 1, 1}, 1}, {{3, 1, 1}, 2}, {{5}, 1}};
    const SchubertSum& got = pieri({2, 1, 1}, 1, s);
    if (!(got == expected)) return {false, "c_1 tau_211 = " + str(got)};
    return {true, "c_1 tau_211 = " + str(got)};
}

Outcome giambelli_sweep(const SuiteOptions& o) {
    FailureLog log;
    std::vector<std::pair<Space, Partition>> cases;
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k)
            for (int n = k + 1; n <= 6; ++n)
                for (auto& lam : P_kn(k, n))
                    if (o.max_weight < 0 || weight(lam) <= o.max_weight) cases.push_back({Space{fam, k, n}, lam});
    parallel_for(
        cases.size(),
        [&](std::size_t i) {
            const auto& [s, lam] = cases[i];
            guarded(log, describe(s) + " " + pstr(lam), [&] {
                SchubertSum got = giambelli(lam, s);
                if (!(got == SchubertSum::single(lam)))
                    log.fail(describe(s) + " lambda=" + pstr(lam) + " gives " + str(got));
            });
        },
        o.threads);
    return log.outcome(std::to_string(cases.size()) + " classes");
}

Outcome forest_example(const SuiteOptions&) {
    const Forest f = build_forest({2, 1, 1}, 1, 1);
    std::set<FourTuple> psi0, psi1;
    for (int id : f.psi0) psi0.insert(f.nodes[id].tuple);
    for (int id : f.psi1) psi1.insert(f.nodes[id].tuple);
    const std::set<FourTuple> want0{
        tuple({{1, 1}}, {2, 1, 1, 1}, {}, 0),
        tuple({{1, 1}, {1, 2}}, {3, 1, 1, 0}, {{1, 2}}, 0),
        tuple({{1, 1}, {1, 2}}, {3, 1, 1, 0}, {}, 0),
        tuple({{1, 1}, {1, 2}, {1, 3}}, {5, 0, 0, 0}, {{1, 2}, {1, 3}}, 0),
    };
    const std::set<FourTuple> want1{
        tuple({{1, 1}, {1, 2}, {2, 2}}, {2, 2, 1, 0}, {}, 2),
        tuple({{1, 1}, {1, 2}, {2, 2}}, {2, 2, 1, 0}, {{2, 2}}, 2),
        tuple({{1, 1}}, {2, 1, 2, 0}, {}, 3),
    };
    if (f.psi0.size() != 4 || psi0 != want0) {
        std::string got;
        for (const auto& t : psi0) got += t.str() + " ";
        return {false, "Psi0 = " + got};
    }
    if (f.psi1.size() != 3 || psi1 != want1) {
        std::string got;
        for (const auto& t : psi1) got += t.str() + " ";
        return {false, "Psi1 = " + got};
    }
    return {true, "|Psi0| = 4, |Psi1| = 3, " + std::to_string(f.nodes.size()) + " nodes"};
}

Outcome claims_sweep(const SuiteOptions& o) {
    struct Case {
        Partition lam;
        int p, k;
    };
    std::vector<Case> cases;
    for (int k = 0; k <= 2; ++k)
        for (auto& lam : k_strict_partitions_up_to(cap(o, 6), k))
            for (int p = 1; p <= 4; ++p) cases.push_back({lam, p, k});
    FailureLog log;
    std::atomic<std::size_t> leaves{0}, stopped{0};
    parallel_for(
        cases.size(),
        [&](std::size_t i) {
            const auto& c = cases[i];
            const std::string where = "lambda=" + pstr(c.lam) + " p=" + std::to_string(c.p) + " k=" + std::to_string(c.k);
            guarded(log, where, [&] {
                auto r1 = verify_claim1(c.lam, c.p, c.k);
                auto r2 = verify_claim2(c.lam, c.p, c.k);
                leaves += r1.checked;
                stopped += r2.checked;
                if (!r1.ok) log.fail(where + " claim 1: " + r1.failures.front());
                if (!r2.ok) log.fail(where + " claim 2: " + r2.failures.front());
            });
        },
        o.threads);
    return log.outcome(std::to_string(cases.size()) + " cases, " + std::to_string(leaves.load()) + " leaves, " +
                       std::to_string(stopped.load()) + " stopped tuples");
}

Outcome modified_remark(const SuiteOptions&) {
    const ModifiedStats st = modified_forest({4, 3, 1, 1}, 6, 1);
    const std::string got = "(" + std::to_string(st.psi1) + ", " + std::to_string(st.nonzero) + ")";
    return {st.psi1 == 1119 && st.nonzero == 543, "|Psi1|, nonzero = " + got};
}

Outcome hat_identity(const SuiteOptions&) {
    const int k = 1;
    auto h = [&](int r) { return hat_theta(r, k); };
    ThetaSum lhs = theta({3, 1}, k) * Rational(3);
    ThetaSum rhs = h(4) * Rational(2);
    rhs -= theta_product({h(3), h(1)}, k) * Rational(5);
    rhs += theta_product({h(2), h(1), h(1)}, k) * Rational(4);
    rhs -= theta_product({h(1), h(1), h(1), h(1)}, k);
    if (!(lhs == rhs)) return {false, "lhs = " + str(lhs) + ", rhs = " + str(rhs)};
    const ThetaSum coords = to_hat_basis(lhs, k);
    const ThetaSum want{{{4}, 2}, {{3, 1}, -5}, {{2, 1, 1}, 4}, {{1, 1, 1, 1}, -1}};
    if (!(coords == want)) return {false, "dual basis coordinates " + str(coords)};
    return {true, "3 Theta_31 = " + str(lhs) + " = " + str(coords) + " in dual products"};
}

Outcome hat_equals_column(const SuiteOptions& o) {
    const int rmax = cap(o, 8);
    for (int k = 1; k <= 3; ++k)
        for (int r = 1; r <= rmax; ++r) {
            const ThetaSum a = hat_theta(r, k);
            const ThetaSum& b = theta(Partition(r, 1), k);
            if (!(a == b)) return {false, "r=" + std::to_string(r) + " k=" + std::to_string(k) + ": " + str(a) + " vs " + str(b)};
        }
    return {true, "r <= " + std::to_string(rmax) + ", k = 1..3"};
}

Outcome bh_example(const SuiteOptions&) {
    const Partition lam{3, 2, 1};
    const MixedSum table{{{{4, 2}, {}}, 1},         {{{3, 2, 1}, {}}, 1},     {{{4, 1}, {1}}, 1},
                         {{{3, 2}, {1}}, 2},        {{{3, 1}, {1, 1}}, 2},    {{{2, 1}, {1, 1, 1}}, 1}};
    const std::map<Partition, std::set<std::string>> tabs{
        {{}, {"3201/01", "321/10/0"}},
        {{1}, {"302/01", "3102/0", "320/01"}},
        {{1, 1}, {"103/0", "310/0"}},
        {{1, 1, 1}, {"10/0"}},
    };
    const MixedSum bh = bh_expand(lam, 1);
    if (!(bh == table)) return {false, "factorization route gives " + str(bh.size()) + " terms differing from the table"};
    const MixedSum mx = mixed_expand(lam, 1);
    if (!(mx == table)) return {false, "substitution route differs from the table"};
    std::map<Partition, std::set<std::string>> got;
    std::size_t total = 0;
    for (const auto& t : bh_factorizations(lam, 1))
        for (const auto& x : t.tableaux) {
            got[t.nu].insert(x.str());
            ++total;
        }
    if (total != 8 || got != tabs) return {false, std::to_string(total) + " tableaux, grouped differently from the table"};
    return {true, "6 terms, 8 tableaux"};
}

Outcome product_routes(const SuiteOptions& o) {
    const int W = cap(o, 10);
    struct Case {
        Space s;
        Partition a, b;
    };
    std::vector<Case> cases;
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k) {
            const Space s{fam, k, stable_n(W, 0, k)};
            const auto parts = k_strict_partitions_up_to(W, k);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i].empty()) continue;
                for (std::size_t j = i; j < parts.size(); ++j)
                    if (!parts[j].empty() && weight(parts[i]) + weight(parts[j]) <= W)
                        cases.push_back({s, parts[i], parts[j]});
            }
        }
    FailureLog log;
    parallel_for(
        cases.size(),
        [&](std::size_t i) {
            const auto& c = cases[i];
            const std::string where = describe(c.s) + " " + pstr(c.a) + "*" + pstr(c.b);
            guarded(log, where, [&] {
                const auto A = SchubertSum::single(c.a), B = SchubertSum::single(c.b);
                const SchubertSum r1 = multiply(A, B, c.s);
                const SchubertSum r2 = multiply_via_theta(A, B, c.s);
                if (!(r1 == r2)) log.fail(where + ": " + str(r1) + " vs " + str(r2));
            });
        },
        o.threads);
    return log.outcome(std::to_string(cases.size()) + " products, total weight <= " + std::to_string(W));
}

Outcome basis_counts(const SuiteOptions&) {
    for (int k = 0; k <= 4; ++k)
        for (int d = 0; d <= 20; ++d) {
            const auto [a, b] = count_bases(d, k);
            if (a != b) return {false, "d=" + std::to_string(d) + " k=" + std::to_string(k) + ": " + std::to_string(a) + " vs " + std::to_string(b)};
        }
    return {true, "d <= 20, k <= 4"};
}

Outcome stanley_strata(const SuiteOptions& o) {
    std::vector<std::pair<Partition, int>> cases;
    for (int k = 0; k <= 2; ++k)
        for (auto& lam : k_strict_partitions_up_to(cap(o, 8), k))
            if (!lam.empty()) cases.push_back({lam, k});
    FailureLog log;
    parallel_for(
        cases.size(),
        [&](std::size_t i) {
            const auto& [lam, k] = cases[i];
            const std::string where = pstr(lam) + " k=" + std::to_string(k);
            guarded(log, where, [&] {
                const ThetaSum F = stanley_F(w_lambda(lam, k, minimal_rank(lam, k)));
                ThetaSum stratum;
                for (const auto& [key, c] : mixed_expand(lam, k))
                    if (key.second.empty()) stratum.add(key.first, c);
                const ThetaSum viaQ = from_theta_basis(stratum, 0);
                const ThetaSum direct = straighten(expand(C_strict(lam, k), lam), 0);
                if (!(F == viaQ)) log.fail(where + ": F_w = " + str(F) + " but stratum = " + str(viaQ));
                else if (!(F == direct)) log.fail(where + ": F_w = " + str(F) + " but R q = " + str(direct));
            });
        },
        o.threads);
    return log.outcome(std::to_string(cases.size()) + " shapes");
}

bool all_pairs(const Partition& lam, int k, bool above) {
    const int l = static_cast<int>(lam.size());
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l; ++j)
            if ((lam[i - 1] + lam[j - 1] > 2 * k + j - i) != above) return false;
    return true;
}

// Ten regime samples spread over the candidate list.
std::vector<std::pair<Partition, int>> regime_samples(bool above, int max_weight) {
    std::vector<std::pair<Partition, int>> cand;
    for (int d = 3; d <= max_weight; ++d)
        for (int k = 1; k <= 2; ++k)
            for (auto& lam : k_strict_partitions(d, k))
                if (lam.size() >= 2 && all_pairs(lam, k, above)) cand.push_back({lam, k});
    if (cand.size() <= 10) return cand;
    std::vector<std::pair<Partition, int>> out;
    for (std::size_t i = 0; i < 10; ++i) out.push_back(cand[i * (cand.size() - 1) / 9]);
    return out;
}

void subpartitions(const Partition& lam, std::size_t i, int bound, Partition& cur, std::vector<Partition>& out) {
    if (i == lam.size()) {
        out.push_back(normalize(cur));
        return;
    }
    for (int v = 0; v <= std::min(bound, lam[i]); ++v) {
        cur[i] = v;
        subpartitions(lam, i + 1, v, cur, out);
    }
}

std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    Partition cur(lam.size(), 0);
    if (lam.empty()) return {Partition{}};
    subpartitions(lam, 0, lam[0], cur, out);
    return out;
}

Outcome closed_forms(const SuiteOptions& o) {
    const int W = cap(o, 7);
    FailureLog log;
    std::size_t n = 0;
    for (bool above : {false, true}) {
        const auto samples = regime_samples(above, W);
        n += samples.size();
        parallel_for(
            samples.size(),
            [&](std::size_t i) {
                const auto& [lam, k] = samples[i];
                const std::string where = std::string(above ? "(b) " : "(a) ") + pstr(lam) + " k=" + std::to_string(k);
                guarded(log, where, [&] {
                    const int w = weight(lam), l = static_cast<int>(lam.size());
                    Evaluator ev(w, k, w);
                    const Poly lhs = ev.mixed(mixed_expand(lam, k));
                    Poly rhs(lhs.nvars(), lhs.maxdeg());
                    for (const auto& mu : subpartitions(lam)) {
                        if (!above) {
                            rhs += ev.q_monomials(jacobi_trudi(mu)) * ev.e_monomials(jacobi_trudi(lam, mu));
                        } else {
                            if (!is_strict(mu) || static_cast<int>(mu.size()) < l - 1) continue;
                            auto e = det_expand(l, [&](int a, int b) { return lam[a - 1] - part(mu, b); });
                            rhs += ev.Q(mu) * ev.e_monomials(e);
                        }
                    }
                    if (!(lhs == rhs)) log.fail(where + ": evaluations differ");
                });
            },
            o.threads);
    }
    return log.outcome(std::to_string(n) + " samples");
}

Outcome presentation(const SuiteOptions& o) {
    FailureLog log;
    std::size_t n = 0;
    for (Family fam : {Family::B, Family::C})
        for (int k = 0; k <= 2; ++k)
            for (int nn = k + 1; nn <= 6; ++nn) {
                const Space s{fam, k, nn};
                for (int r = k + 1; r <= nn + k; ++r) {
                    if (o.max_weight >= 0 && 2 * r > o.max_weight) continue;
                    ++n;
                    guarded(log, describe(s), [&] {
                        if (!verify_presentation(s, r))
                            log.fail(describe(s) + " r=" + std::to_string(r) + ": " + str(presentation_relation(s, r)));
                    });
                }
            }
    return log.outcome(std::to_string(n) + " relations");
}

using Check = Outcome (*)(const SuiteOptions&);

struct Entry {
    CriterionInfo info;
    Check check;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r{
        {{1, "giambelli formula for sigma_321 on IG(4,10)", "giambelli", 1}, intro_giambelli},
        {{2, "pieri rule c_1 tau_211, type B", "pieri", 1}, pieri_example},
        {{3, "giambelli sweep, k <= 2, n <= 6", "giambelli", 120}, giambelli_sweep},
        {{4, "substitution forest for (2,1,1), p=1, k=1", "forest", 1}, forest_example},
        {{5, "claims 1 and 2, |lambda| <= 6, p <= 4, k <= 2", "forest", 600}, claims_sweep},
        {{6, "modified forest for (4,3,1,1), p=6, k=1", "forest", 60}, modified_remark},
        {{7, "3 Theta_31 in dual theta products, k=1", "theta", 1}, hat_identity},
        {{8, "dual theta_r equals Theta_(1^r)", "theta", 10}, hat_equals_column},
        {{9, "type C Schubert expansion of Theta_321, k=1", "weyl", 5}, bh_example},
        {{10, "product routes agree, total weight <= 10", "product", 300}, product_routes},
        {{11, "k-strict and k-odd partition counts", "theta", 1}, basis_counts},
        {{12, "Stanley function equals the y-free stratum", "weyl", 120}, stanley_strata},
        {{13, "closed forms in both regimes", "theta", 120}, closed_forms},
        {{14, "quadratic presentation relations", "presentation", 60}, presentation},
    };
    return r;
}

}  // namespace

const std::vector<CriterionInfo>& criteria() {
    static const std::vector<CriterionInfo> out = [] {
        std::vector<CriterionInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return out;
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out{"all"};
    for (const auto& c : criteria())
        if (std::find(out.begin(), out.end(), c.group) == out.end()) out.push_back(c.group);
    return out;
}

std::vector<int> suite_members(const std::string& suite) {
    std::vector<int> out;
    for (const auto& c : criteria())
        if (suite == "all" || suite == c.group || suite == std::to_string(c.id)) out.push_back(c.id);
    if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
    return out;
}

CriterionResult run_criterion(int id, const SuiteOptions& opts) {
    const auto& reg = registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const Entry& e) { return e.info.id == id; });
    if (it == reg.end()) throw std::invalid_argument("no criterion " + std::to_string(id));
    CriterionResult r;
    r.id = id;
    r.name = it->info.name;
    r.limit_seconds = it->info.limit_seconds;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = it->check(opts);
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.check_ok = out.ok;
    r.detail = out.detail;
    r.passed = out.ok && r.seconds <= r.limit_seconds;
    if (out.ok && !r.passed) r.detail += " (time limit exceeded)";
    return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
    std::vector<CriterionResult> out;
    for (int id : suite_members(suite)) out.push_back(run_criterion(id, opts));
    return out;
}

std::string format_result(const CriterionResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs / %.0fs", r.seconds, r.limit_seconds);
    return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + buf +
           "): " + r.detail;
}

}  // namespace isotropic
