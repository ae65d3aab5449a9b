#include "giambelli/substitution.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace isotropic {

namespace {

constexpr int kInf = INT_MAX / 4;

std::string pairs_str(const std::vector<Pair>& ps) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << '(' << ps[i].first << ',' << ps[i].second << ')';
    os << '}';
    return os.str();
}

void raise(IntVec& mu, int i, int j) {
    if (i == j) return;
    ++mu[i - 1];
    --mu[j - 1];
}

}  // namespace

bool operator<(const FourTuple& a, const FourTuple& b) {
    if (a.h != b.h) return a.h < b.h;
    if (a.mu != b.mu) return a.mu < b.mu;
    if (!(a.D == b.D)) return a.D < b.D;
    return a.S < b.S;
}

std::string FourTuple::str() const {
    std::ostringstream os;
    os << '(' << pairs_str(D.pairs()) << ",(" << to_string(mu) << ")," << pairs_str(S.pairs()) << ',' << h << ')';
    return os.str();
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::None: return "leaf";
        case Rule::I: return "i";
        case Rule::II: return "ii";
        case Rule::III: return "iii";
        case Rule::IV: return "iv";
        case Rule::V: return "v";
        case Rule::Descend: return "descend";
    }
    return "?";
}

void ClaimReport::fail(std::string msg) {
    ok = false;
    if (failures.size() < 20) failures.push_back(std::move(msg));
}

SubstitutionContext::SubstitutionContext(Partition lambda, int k, bool modified)
    : lambda_(std::move(lambda)), k_(k), modified_(modified) {
    if (!is_k_strict(lambda_, k_)) throw std::invalid_argument("substitution: partition is not k-strict");
    ell_ = static_cast<int>(lambda_.size());
    m_ = middle_row(lambda_, k_);
    C_ = C_of(lambda_, k_);
}

int SubstitutionContext::lam(int i) const { return i == 0 ? kInf : part(lambda_, i); }

int SubstitutionContext::mu_at(const IntVec& mu, int i) {
    if (i == 0) return kInf;
    if (i < 0 || i > static_cast<int>(mu.size())) return 0;
    return mu[i - 1];
}

int SubstitutionContext::r(int y) const {
    for (int rr = ell_ + 1; rr >= 1; --rr)
        if (lam(rr - 1) > 2 * k_ + rr - y) return rr;
    throw std::logic_error("substitution: r(y) undefined");
}

int SubstitutionContext::b(int h) const { return r(h + lam(h) + 1); }

int SubstitutionContext::g(int h) const { return h == 1 ? ell_ + 1 : b(h - 1); }

bool SubstitutionContext::in_R(const IntVec& mu, const Box& box) const {
    const int i = box.row, c = box.col;
    if (i < 1 || c <= k_) return false;
    if (c <= lam(i) || c > mu_at(mu, i)) return false;
    const int rr = r(i + c);
    return mu_at(mu, rr) <= 2 * k_ + rr - i - c;
}

std::vector<Box> SubstitutionContext::R_set(const IntVec& mu) const {
    std::vector<Box> out;
    for (const Box& b : skew_boxes(mu, lambda_))
        if (in_R(mu, b)) out.push_back(b);
    return out;
}

int SubstitutionContext::e(const IntVec& mu, int h) const {
    if (h < 2 || mu_at(mu, h) < lam(h - 1))
        throw std::logic_error("substitution: e_h requested for h=" + std::to_string(h) + " outside its domain, mu=(" +
                               to_string(mu) + ")");
    const int top = lam(h - 1);
    if (in_R(mu, {h, top})) return top;
    const int lo = std::max(k_, lam(h));
    if (top <= lo) throw std::logic_error("substitution: e_h has an empty range");
    int e = lo + 1;
    for (int c = top; c > lo; --c)
        if (in_R(mu, {h, c})) {
            e = c + 1;
            break;
        }
    return e;
}

int SubstitutionContext::f(const IntVec& mu, int h) const { return r(h + e(mu, h)); }

bool SubstitutionContext::W(const IntVec& mu, int i, int j) const {
    return mu_at(mu, i) + mu_at(mu, j) > 2 * k_ + j - i;
}

bool SubstitutionContext::X(const FourTuple& t) const {
    const int h = t.h;
    if (h < 1 || !t.D.contains({h, h})) return false;
    const int mh = mu_at(t.mu, h), mp = mu_at(t.mu, h - 1), lp = lam(h - 1);
    if (mh >= mp || mh > lp) return true;
    if (mh == lp) return !t.S.contains({h, f(t.mu, h)});
    return false;
}

SubstitutionContext::Step SubstitutionContext::apply(const FourTuple& t) const {
    Step step;
    const int h = t.h;
    if (h == 0) return step;

    auto two_children = [&](const Pair& pr, bool keep_plain) {
        FourTuple plain = t;
        plain.D.insert(pr);
        FourTuple raised = plain;
        raise(raised.mu, pr.first, pr.second);
        raised.S.insert(pr);
        if (keep_plain) step.children.push_back(std::move(plain));
        step.children.push_back(std::move(raised));
    };

    if (!t.D.contains({h, h})) {
        auto oc = t.D.outer_corner_in_column(h);
        if (oc && oc->first <= m_ && W(t.mu, oc->first, h)) {
            step.rule = Rule::I;
            two_children(*oc, true);
            return step;
        }
        if (!oc && mu_at(t.mu, h) > lam(h - 1)) {
            step.rule = Rule::II;
            step.stop = true;
            return step;
        }
    } else {
        auto oc = t.D.outer_corner_in_row(h);
        if (oc && oc->second <= ell_ + 1 && W(t.mu, h, oc->second)) {
            const int j = oc->second;
            step.rule = Rule::III;
            two_children(*oc, mu_at(t.mu, j) <= mu_at(t.mu, j - 1));
            return step;
        }
        const int gh = g(h);
        const bool x = X(t);
        const bool trigger = modified_ ? x : (W(t.mu, h, gh) || x);
        if (trigger) {
            auto oc2 = t.D.outer_corner_in_column(gh);
            if (oc2 && oc2->first <= h) {
                step.rule = Rule::IV;
                two_children(*oc2, true);
                return step;
            }
        }
        if (x) {
            step.rule = Rule::V;
            step.stop = true;
            return step;
        }
    }
    step.rule = Rule::Descend;
    FourTuple next = t;
    next.h = h - 1;
    step.children.push_back(std::move(next));
    return step;
}

std::vector<IntVec> SubstitutionContext::root_compositions(int p) const {
    std::vector<IntVec> out;
    IntVec nu(ell_ + 1, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == ell_) {
            nu[i] = left;
            out.push_back(nu);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            nu[i] = lambda_[i] + a;
            rec(i + 1, left - a);
        }
    };
    rec(0, p);
    return out;
}

FourTuple SubstitutionContext::root(const IntVec& nu) const {
    FourTuple t;
    t.D = C_;
    t.mu = nu;
    t.h = ell_ + 1;
    return t;
}

FourTuple SubstitutionContext::involution(const FourTuple& t) const {
    const int h = t.h;
    if (h < 2 || mu_at(t.mu, h) < lam(h - 1))
        throw std::logic_error("involution undefined at " + t.str());
    FourTuple out = t;
    if (!t.D.contains({h, h})) {
        out.mu[h - 2] = t.mu[h - 1] - 1;
        out.mu[h - 1] = t.mu[h - 2] + 1;
        return out;
    }
    if (t.mu[h - 2] == t.mu[h - 1]) return out;
    const Pair a{h - 1, g(h)}, b{h, f(t.mu, h)};
    std::swap(out.mu[h - 2], out.mu[h - 1]);
    const bool has_a = t.S.contains(a), has_b = t.S.contains(b);
    if (has_a != has_b) {
        if (has_a) {
            out.S.erase(a);
            out.S.insert(b);
        } else {
            out.S.erase(b);
            out.S.insert(a);
        }
    }
    return out;
}

Forest build_forest_from(const SubstitutionContext& ctx, int p, const std::vector<IntVec>& roots) {
    Forest forest;
    forest.lambda = ctx.lambda();
    forest.p = p;
    forest.k = ctx.k();
    forest.modified = ctx.modified();
    std::set<FourTuple> seen;
    for (const auto& nu : roots) {
        const int root_id = static_cast<int>(forest.nodes.size());
        forest.nodes.push_back({ctx.root(nu), Rule::None, -1, {}});
        forest.roots.push_back(root_id);
        std::vector<int> stack{root_id};
        while (!stack.empty()) {
            const int id = stack.back();
            stack.pop_back();
            auto step = ctx.apply(forest.nodes[id].tuple);
            forest.nodes[id].rule = step.rule;
            if (step.rule == Rule::None) {
                forest.psi0.push_back(id);
                continue;
            }
            if (step.stop) {
                forest.psi1.push_back(id);
                continue;
            }
            std::vector<int> kids;
            for (auto& c : step.children) {
                if (!seen.insert(c).second) throw std::logic_error("substitution: 4-tuple produced twice: " + c.str());
                const int cid = static_cast<int>(forest.nodes.size());
                forest.nodes.push_back({std::move(c), Rule::None, id, {}});
                kids.push_back(cid);
            }
            forest.nodes[id].children = kids;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
        }
    }
    return forest;
}

Forest build_forest(const Partition& lambda, int p, int k, bool modified) {
    if (p < 1) throw std::invalid_argument("build_forest: need p >= 1");
    SubstitutionContext ctx(lambda, k, modified);
    return build_forest_from(ctx, p, ctx.root_compositions(p));
}

Space ev_space(const Partition& lambda, int p, int k) {
    Space s;
    s.family = Family::B;
    s.k = k;
    s.n = weight(lambda) + p + static_cast<int>(lambda.size()) + k + 2;
    return s;
}

SchubertSum ev(const FourTuple& t, const Space& s) {
    SchubertSum out;
    for (const auto& [a, c] : expand(t.D.strict_part(), t.mu)) {
        if (!a.empty() && a.front() > s.n + s.k) throw std::logic_error("ev: ambient space too small");
        out.add_scaled(reduce_monomial(a, s), c);
    }
    out *= Rational::pow2(-t.D.diagonal_count());
    return out;
}

ThetaSum ev_theta(const FourTuple& t, int k) {
    ThetaSum out = straighten(expand(t.D.strict_part(), t.mu), k);
    out *= Rational::pow2(-t.D.diagonal_count());
    return out;
}

ModifiedStats modified_forest(const Partition& lambda, int p, int k) {
    Forest forest = build_forest(lambda, p, k, true);
    const Space s = ev_space(lambda, p, k);
    ModifiedStats st;
    st.psi1 = forest.psi1.size();
    for (int id : forest.psi1)
        if (!ev(forest.nodes[id].tuple, s).empty()) ++st.nonzero;
    return st;
}

std::vector<Box> free_boxes_via_R(const Partition& lambda, const Partition& mu, int k) {
    SubstitutionContext ctx(lambda, k);
    IntVec m = mu;
    m.resize(std::max<std::size_t>(m.size(), lambda.size() + 1), 0);
    std::vector<Box> out;
    for (const Box& b : skew_boxes(mu, lambda))
        if (b.col > k && !ctx.in_R(m, b)) out.push_back(b);
    return out;
}

std::optional<SSets> pieri_S_sets(const Partition& lambda, const Partition& mu, int k) {
    auto free = pieri_free_boxes(lambda, mu, k);
    if (!free) return std::nullopt;
    SubstitutionContext ctx(lambda, k);
    SSets out;
    out.A = *free;
    std::sort(out.A.begin(), out.A.end());
    auto inA = [&](const Box& b) { return std::binary_search(out.A.begin(), out.A.end(), b); };
    for (const Box& b : out.A)
        if (!inA({b.row, b.col - 1})) out.distinguished.push_back(b);

    // Component labels within A.
    const int n = static_cast<int>(out.A.size());
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (comp[v] < 0 && std::abs(out.A[u].row - out.A[v].row) <= 1 &&
                    std::abs(out.A[u].col - out.A[v].col) <= 1) {
                    comp[v] = ncomp;
                    stack.push_back(v);
                }
        }
        ++ncomp;
    }
    auto comp_of = [&](const Box& b) {
        return comp[std::lower_bound(out.A.begin(), out.A.end(), b) - out.A.begin()];
    };
    std::map<int, Box> rightmost;
    for (const Box& b : out.distinguished) {
        auto it = rightmost.find(comp_of(b));
        if (it == rightmost.end() || b.col > it->second.col || (b.col == it->second.col && b.row > it->second.row))
            rightmost[comp_of(b)] = b;
    }
    for (const Box& b : out.distinguished) {
        const Pair pr{b.row, ctx.r(b.row + b.col)};
        if (rightmost.at(comp_of(b)) == b) {
            out.optional_boxes.push_back(b);
            out.E.push_back(pr);
        } else {
            out.F.push_back(pr);
        }
    }
    const auto added = skew_boxes(mu, lambda);
    const auto removed = skew_boxes(lambda, mu);
    for (const Box& a : added)
        for (const Box& r : removed)
            if (k_related(a, r, k)) out.G.push_back({a.row, r.row});
    for (auto* v : {&out.E, &out.F, &out.G}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    const std::size_t ne = out.E.size();
    if (ne > 20) throw std::logic_error("pieri_S_sets: too many optional boxes");
    for (unsigned mask = 0; mask < (1u << ne); ++mask) {
        PairSet s(PairMode::Diagonal);
        for (std::size_t i = 0; i < ne; ++i)
            if (mask & (1u << i)) s.insert(out.E[i]);
        for (const auto& pr : out.F) s.insert(pr);
        for (const auto& pr : out.G) s.insert(pr);
        out.S.push_back(std::move(s));
    }
    return out;
}

namespace {

bool disjoint(std::vector<Pair> a, std::vector<Pair> b) {
    std::vector<Pair> c;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
    return c.empty();
}

// Checks every Ψ0 leaf against the Pieri rule: the leaf data (μ, D, S)
// and the multiplicities 2^N(λ,μ).
void check_psi0(const SubstitutionContext& ctx, const Forest& forest, const SchubertSum* expected,
                ClaimReport& rep, std::map<Partition, std::set<PairSet>>& sets,
                std::map<Partition, std::size_t>& counts) {
    const Partition& lambda = ctx.lambda();
    const int k = ctx.k();
    const int l1 = ctx.ell() + 1;
    for (int id : forest.psi0) {
        const FourTuple& t = forest.nodes[id].tuple;
        if (t.mu[l1 - 1] < 0) continue;
        ++rep.checked;
        bool weakly = true;
        for (int i = 1; i < l1; ++i)
            if (t.mu[i] > t.mu[i - 1]) weakly = false;
        Partition m = normalize(t.mu);
        if (!weakly || !is_k_strict(m, k)) {
            rep.fail("leaf " + t.str() + " is not a k-strict partition");
            continue;
        }
        if (!pieri_exponent(lambda, m, k)) rep.fail("leaf " + t.str() + " violates lambda -> mu");
        if (!(t.D == C_t(t.mu, k, l1))) rep.fail("leaf " + t.str() + " has D != C_{l+1}(mu)");
        ++counts[m];
        sets[m].insert(t.S);
    }
    if (!expected) return;
    for (const auto& [mu, c] : *expected) {
        const Rational have = static_cast<long long>(counts.count(mu) ? counts.at(mu) : 0);
        if (have != c) rep.fail("multiplicity of " + to_string(mu) + " is " + have.str() + ", expected " + c.str());
    }
    for (const auto& [mu, n] : counts)
        if (!expected->contains(mu)) rep.fail("leaf partition " + to_string(mu) + " missing from the Pieri rule");
}

void check_ssets(const Partition& lambda, int k, const std::map<Partition, std::set<PairSet>>& sets, ClaimReport& rep) {
    for (const auto& [mu, found] : sets) {
        auto ss = pieri_S_sets(lambda, mu, k);
        if (!ss) continue;
        std::vector<Box> viaR = free_boxes_via_R(lambda, mu, k);
        std::sort(viaR.begin(), viaR.end());
        if (viaR != ss->A) rep.fail("free boxes of " + to_string(mu) + " differ between the two characterizations");
        if (!disjoint(ss->E, ss->F) || !disjoint(ss->E, ss->G) || !disjoint(ss->F, ss->G))
            rep.fail("E, F, G not disjoint for " + to_string(mu));
        std::set<PairSet> predicted(ss->S.begin(), ss->S.end());
        if (predicted != found) rep.fail("S-sets of leaves with mu=" + to_string(mu) + " differ from S(E')");
    }
}

}  // namespace

ClaimReport verify_claim1(const Partition& lambda, int p, int k) {
    ClaimReport rep;
    SubstitutionContext ctx(lambda, k);
    Forest forest = build_forest_from(ctx, p, ctx.root_compositions(p));
    const Space s = ev_space(lambda, p, k);
    const SchubertSum& expected = pieri(lambda, p, s);
    std::map<Partition, std::set<PairSet>> sets;
    std::map<Partition, std::size_t> counts;
    check_psi0(ctx, forest, &expected, rep, sets, counts);
    check_ssets(lambda, k, sets, rep);
    return rep;
}

ClaimReport verify_claim2(const Partition& lambda, int p, int k) {
    ClaimReport rep;
    SubstitutionContext ctx(lambda, k);
    Forest forest = build_forest_from(ctx, p, ctx.root_compositions(p));
    const Space s = ev_space(lambda, p, k);
    std::set<FourTuple> psi1;
    for (int id : forest.psi1) psi1.insert(forest.nodes[id].tuple);
    for (int id : forest.psi1) {
        const FourTuple& t = forest.nodes[id].tuple;
        ++rep.checked;
        FourTuple it;
        try {
            it = ctx.involution(t);
        } catch (const std::exception& e) {
            rep.fail(e.what());
            continue;
        }
        if (!psi1.count(it)) rep.fail("image of " + t.str() + " is " + it.str() + ", not a stopped tuple");
        FourTuple back;
        try {
            back = ctx.involution(it);
        } catch (const std::exception& e) {
            rep.fail(e.what());
            continue;
        }
        if (!(back == t)) rep.fail("involution is not an involution at " + t.str());
        if (!(ev(t, s) + ev(it, s)).empty()) rep.fail("ev does not cancel at " + t.str());
    }
    // Total of the initial tuples equals c_p τ_λ.
    SchubertSum total;
    for (int id : forest.roots) total += ev(forest.nodes[id].tuple, s);
    if (!(total == pieri(lambda, p, s))) rep.fail("initial tuples do not sum to c_p tau_lambda");
    return rep;
}

TargetedClaim verify_claim1_targeted(const Partition& lambda, const Partition& mu, int k) {
    TargetedClaim out;
    SubstitutionContext ctx(lambda, k);
    const int l1 = ctx.ell() + 1;
    if (static_cast<int>(mu.size()) > l1) throw std::invalid_argument("verify_claim1_targeted: mu too long");
    const int p = weight(mu) - weight(lambda);
    if (p < 1) throw std::invalid_argument("verify_claim1_targeted: need |mu| > |lambda|");
    auto ss = pieri_S_sets(lambda, mu, k);
    if (!ss) {
        out.report.fail("lambda -> mu fails");
        return out;
    }
    out.ssets = *ss;
    IntVec m = mu;
    m.resize(l1, 0);
    std::vector<Pair> extra;
    const PairSet target = C_t(m, k, l1);
    for (const auto& pr : target.pairs())
        if (!ctx.C().contains(pr)) extra.push_back(pr);
    if (extra.size() > 24) throw std::logic_error("verify_claim1_targeted: search space too large");
    std::set<IntVec> roots;
    for (unsigned long mask = 0; mask < (1ul << extra.size()); ++mask) {
        IntVec nu = m;
        for (std::size_t i = 0; i < extra.size(); ++i)
            if (mask & (1ul << i)) {
                const auto [a, b] = extra[i];
                if (a == b) continue;
                --nu[a - 1];
                ++nu[b - 1];
            }
        bool ok = nu[l1 - 1] >= 0;
        for (int i = 0; i < ctx.ell() && ok; ++i) ok = nu[i] >= lambda[i];
        if (ok) roots.insert(nu);
    }
    Forest forest = build_forest_from(ctx, p, {roots.begin(), roots.end()});
    std::map<int, std::set<PairSet>> by_root;
    std::set<PairSet> all;
    for (int id : forest.psi0) {
        const FourTuple& t = forest.nodes[id].tuple;
        if (t.mu != m) continue;
        int r = id;
        while (forest.nodes[r].parent >= 0) r = forest.nodes[r].parent;
        by_root[r].insert(t.S);
        all.insert(t.S);
        ++out.report.checked;
        if (!(t.D == C_t(m, k, l1))) out.report.fail("leaf " + t.str() + " has D != C_{l+1}(mu)");
    }
    out.roots = by_root.size();
    for (const auto& [r, s] : by_root) out.sets_per_root.push_back(s.size());
    const auto nexp = pieri_exponent(lambda, mu, k);
    if (out.report.checked != (std::size_t{1} << *nexp))
        out.report.fail("found " + std::to_string(out.report.checked) + " leaves, expected 2^" + std::to_string(*nexp));
    std::set<PairSet> predicted(ss->S.begin(), ss->S.end());
    if (predicted != all) out.report.fail("S-sets differ from S(E')");
    return out;
}

}  // namespace isotropic
