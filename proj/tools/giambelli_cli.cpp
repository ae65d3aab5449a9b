#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "giambelli/cohomology.hpp"
#include "giambelli/partitions.hpp"
#include "giambelli/serialize.hpp"
#include "giambelli/substitution.hpp"
#include "giambelli/theta_ring.hpp"
#include "giambelli/verification.hpp"
#include "giambelli/weyl.hpp"

using namespace isotropic;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string type = "C";
    int n = -1;
    int k = 0;
    int p = 1;
    int d = 10;
    std::string lambda, mu, perm, shape;
    std::string format = "text";
    std::string basis;
    std::string route = "pieri";
    std::string suite = "all";
    int max_weight = -1;
    unsigned threads = 0;
    bool modified = false, stats = false, dump_json = false;
};

Partition parse_partition(const std::string& s, const char* what) {
    IntVec v;
    try {
        v = parse_intvec(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("--") + what + ": expected a list like 3,2,1, got '" + s + "'");
    }
    if (!is_partition(v)) throw UsageError(std::string("--") + what + ": '" + s + "' is not a partition");
    return normalize(v);
}

Partition k_strict_arg(const Options& o, const std::string& s, const char* what) {
    Partition p = parse_partition(s, what);
    if (!is_k_strict(p, o.k))
        throw UsageError(std::string("--") + what + ": (" + s + ") is not " + std::to_string(o.k) + "-strict");
    return p;
}

Space space_arg(const Options& o) {
    Space s;
    if (o.type == "B" || o.type == "b") s.family = Family::B;
    else if (o.type == "C" || o.type == "c") s.family = Family::C;
    else throw UsageError("--type must be B or C");
    if (o.n < 0) throw UsageError("--n is required");
    s.k = o.k;
    s.n = o.n;
    if (s.k < 0 || s.n <= s.k) throw UsageError("need 0 <= k < n");
    return s;
}

SignedPerm perm_arg(const Options& o) {
    if (!o.perm.empty()) {
        try {
            return SignedPerm(parse_intvec(o.perm));
        } catch (const std::exception& e) {
            throw UsageError(std::string("--perm: ") + e.what());
        }
    }
    if (o.lambda.empty()) throw UsageError("give --perm or --lambda");
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    return w_lambda(lam, o.k, o.n > 0 ? o.n : minimal_rank(lam, o.k));
}

bool json_out(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const json& j, const std::string& text) {
    if (json_out(o)) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
}

template <class T>
std::string text(const T& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string class_text(const SchubertSum& s, const char* sym) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : s) {
        if (!out.empty()) out += " + ";
        out += c.str() + " " + sym + "_(" + to_string(key) + ")";
    }
    return out;
}

std::string mixed_text(const MixedSum& s) {
    if (s.empty()) return "0";
    std::string out;
    for (const auto& [key, c] : s) {
        if (!out.empty()) out += " + ";
        out += c.str() + " Q_(" + to_string(key.first) + ") s'_(" + to_string(key.second) + ")";
    }
    return out;
}

const char* class_symbol(const Space& s) { return s.family == Family::B ? "tau" : "sigma"; }

int cmd_giambelli(const Options& o) {
    const Space s = space_arg(o);
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    if (!in_P(lam, s.k, s.n)) throw UsageError("(" + o.lambda + ") does not fit in " + describe(s));
    const MonomialSum mons = giambelli_monomials(lam, s);
    const SchubertSum cls = giambelli(lam, s);
    emit(o, {{"space", describe(s)}, {"lambda", lam}, {"monomials", to_json(mons)}, {"class", to_json(cls)}},
         "special-class expansion: " + text(mons) + "\nreduces to: " + class_text(cls, class_symbol(s)));
    return 0;
}

int cmd_pieri(const Options& o) {
    const Space s = space_arg(o);
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    if (o.p < 1 || o.p > s.n + s.k) throw UsageError("--p must lie in 1..n+k");
    const SchubertSum& r = pieri(lam, o.p, s);
    emit(o, {{"space", describe(s)}, {"lambda", lam}, {"p", o.p}, {"product", to_json(r)}}, class_text(r, class_symbol(s)));
    return 0;
}

int cmd_product(const Options& o) {
    const Space s = space_arg(o);
    const Partition a = k_strict_arg(o, o.lambda, "lambda"), b = k_strict_arg(o, o.mu, "mu");
    SchubertSum r;
    const auto A = SchubertSum::single(a), B = SchubertSum::single(b);
    if (o.route == "pieri") r = multiply(A, B, s);
    else if (o.route == "theta") r = multiply_via_theta(A, B, s);
    else throw UsageError("--route must be pieri or theta");
    emit(o, {{"space", describe(s)}, {"lambda", a}, {"mu", b}, {"product", to_json(r)}}, class_text(r, class_symbol(s)));
    return 0;
}

int cmd_theta(const Options& o) {
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    const std::string basis = o.basis.empty() ? "theta" : o.basis;
    if (basis == "theta") {
        const ThetaSum& t = theta(lam, o.k);
        emit(o, {{"k", o.k}, {"lambda", lam}, {"basis", "theta"}, {"terms", to_json(t)}}, text(t));
    } else if (basis == "hat") {
        const ThetaSum h = to_hat_basis(theta(lam, o.k), o.k);
        emit(o, {{"k", o.k}, {"lambda", lam}, {"basis", "hat"}, {"terms", to_json(h)}}, text(h));
    } else if (basis == "mixed") {
        const MixedSum m = mixed_expand(lam, o.k);
        emit(o, {{"k", o.k}, {"lambda", lam}, {"basis", "mixed"}, {"terms", to_json(m)}}, mixed_text(m));
    } else {
        throw UsageError("--basis must be theta, hat or mixed");
    }
    return 0;
}

int cmd_skews(const Options& o) {
    const Partition lam = parse_partition(o.lambda, "lambda");
    const Partition mu = o.mu.empty() ? Partition{} : parse_partition(o.mu, "mu");
    const ThetaSum t = skew_S(lam, mu, o.k);
    emit(o, {{"k", o.k}, {"lambda", lam}, {"mu", mu}, {"terms", to_json(t)}}, text(t));
    return 0;
}

int cmd_wlambda(const Options& o) {
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    const int n = o.n > 0 ? o.n : minimal_rank(lam, o.k);
    if (n < minimal_rank(lam, o.k)) throw UsageError("--n too small for this partition");
    const SignedPerm w = w_lambda(lam, o.k, n);
    emit(o, {{"k", o.k}, {"n", n}, {"lambda", lam}, {"w", to_json(w)}, {"length", w.length()}},
         w.str() + "  (length " + std::to_string(w.length()) + ")");
    return 0;
}

int cmd_stanley(const Options& o) {
    const SignedPerm w = perm_arg(o);
    const std::string basis = o.basis.empty() ? "Q" : o.basis;
    ThetaSum f;
    if (basis == "Q") f = stanley_Q(w);
    else if (basis == "q") f = stanley_F(w);
    else throw UsageError("--basis must be Q or q");
    emit(o, {{"w", to_json(w)}, {"basis", basis}, {"terms", to_json(f)}}, text(f));
    return 0;
}

int cmd_ktableaux(const Options& o) {
    const SignedPerm w = perm_arg(o);
    const auto tabs = o.shape.empty() ? ktableaux(w) : ktableaux(w, parse_partition(o.shape, "shape"));
    json j = json::array();
    std::string t;
    for (const auto& x : tabs) {
        j.push_back(to_json(x));
        t += x.str() + "\n";
    }
    emit(o, {{"w", to_json(w)}, {"tableaux", j}}, t + std::to_string(tabs.size()) + " tableaux");
    return 0;
}

int cmd_bh(const Options& o) {
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    const auto terms = bh_factorizations(lam, o.k);
    json j = json::array();
    std::string t;
    for (const auto& term : terms) {
        if (term.tableaux.empty()) continue;
        j.push_back(to_json(term));
        t += "nu=(" + to_string(term.nu) + ") u=" + term.u.str() + ":";
        for (const auto& x : term.tableaux) t += " " + x.str();
        t += "\n";
    }
    const MixedSum m = bh_expand(lam, o.k);
    emit(o, {{"k", o.k}, {"lambda", lam}, {"factorizations", j}, {"expansion", to_json(m)}}, t + mixed_text(m));
    return 0;
}

int cmd_forest(const Options& o) {
    const Partition lam = k_strict_arg(o, o.lambda, "lambda");
    if (o.p < 1) throw UsageError("--p must be at least 1");
    const Forest f = build_forest(lam, o.p, o.k, o.modified);
    if (o.dump_json) {
        std::cout << to_json(f).dump(2) << "\n";
        return 0;
    }
    json stats{{"nodes", f.nodes.size()}, {"roots", f.roots.size()}, {"psi0", f.psi0.size()}, {"psi1", f.psi1.size()}};
    std::string t = "nodes " + std::to_string(f.nodes.size()) + ", roots " + std::to_string(f.roots.size()) +
                    ", |Psi0| " + std::to_string(f.psi0.size()) + ", |Psi1| " + std::to_string(f.psi1.size());
    if (o.modified) {
        const ModifiedStats ms = modified_forest(lam, o.p, o.k);
        stats["psi1_nonzero"] = ms.nonzero;
        t += ", nonzero evaluations on Psi1 " + std::to_string(ms.nonzero);
    }
    if (!o.stats) {
        json psi0 = json::array(), psi1 = json::array();
        for (int id : f.psi0) {
            psi0.push_back(to_json(f.nodes[id].tuple));
            t += "\nPsi0 " + f.nodes[id].tuple.str();
        }
        for (int id : f.psi1) {
            json n = to_json(f.nodes[id].tuple);
            n["rule"] = rule_name(f.nodes[id].rule);
            psi1.push_back(std::move(n));
            t += "\nPsi1 " + f.nodes[id].tuple.str() + " stop at (" + rule_name(f.nodes[id].rule) + ")";
        }
        stats["Psi0"] = psi0;
        stats["Psi1"] = psi1;
    }
    emit(o, stats, t);
    return 0;
}

int cmd_verify(const Options& o) {
    SuiteOptions so;
    so.max_weight = o.max_weight;
    so.threads = o.threads;
    std::vector<int> ids;
    try {
        ids = suite_members(o.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    json j = json::array();
    for (int id : ids) {
        const CriterionResult r = run_criterion(id, so);
        ok = ok && r.passed;
        if (json_out(o)) {
            j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds},
                         {"limit_seconds", r.limit_seconds}, {"detail", r.detail}});
        } else {
            std::cout << format_result(r) << std::endl;
        }
    }
    if (json_out(o)) std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_count_bases(const Options& o) {
    json j = json::array();
    std::string t;
    for (int d = 0; d <= o.d; ++d) {
        const auto [strict, odd] = count_bases(d, o.k);
        j.push_back({{"d", d}, {"k_strict", strict}, {"k_odd", odd}});
        t += "d=" + std::to_string(d) + " k-strict " + std::to_string(strict) + " k-odd " + std::to_string(odd) + "\n";
    }
    emit(o, j, t.substr(0, t.size() - 1));
    return 0;
}

std::string cache_file() {
    const char* dir = std::getenv("GIAMBELLI_CACHE_DIR");
    if (!dir || !*dir) return {};
    return (std::filesystem::path(dir) / "pieri.bin").string();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert calculus on isotropic Grassmannians"};
    app.require_subcommand(1);
    Options o;

    auto add_space = [&](CLI::App* c) {
        c->add_option("--type", o.type, "B (odd orthogonal) or C (symplectic)")->check(CLI::IsMember({"B", "C", "b", "c"}));
        c->add_option("--n", o.n, "rank n")->required();
        c->add_option("--k", o.k, "k")->required();
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* g = app.add_subcommand("giambelli", "special-class expansion of a Schubert class");
    add_space(g);
    g->add_option("--lambda", o.lambda, "k-strict partition, e.g. 3,2,1")->required();
    add_format(g);

    auto* pi = app.add_subcommand("pieri", "product of a special class with a Schubert class");
    add_space(pi);
    pi->add_option("--lambda", o.lambda)->required();
    pi->add_option("--p", o.p, "index of the special class")->required();
    add_format(pi);

    auto* pr = app.add_subcommand("product", "product of two Schubert classes");
    add_space(pr);
    pr->add_option("--lambda", o.lambda)->required();
    pr->add_option("--mu", o.mu)->required();
    pr->add_option("--route", o.route, "pieri or theta");
    add_format(pr);

    auto* th = app.add_subcommand("theta", "theta polynomial of a k-strict partition");
    th->add_option("--k", o.k)->required();
    th->add_option("--lambda", o.lambda)->required();
    th->add_option("--basis", o.basis, "theta, hat (dual theta products) or mixed");
    add_format(th);

    auto* sk = app.add_subcommand("skews", "skew determinant det(theta_{lambda_i - mu_j + j - i})");
    sk->add_option("--k", o.k)->required();
    sk->add_option("--lambda", o.lambda)->required();
    sk->add_option("--mu", o.mu);
    add_format(sk);

    auto* wl = app.add_subcommand("wlambda", "k-Grassmannian signed permutation");
    wl->add_option("--k", o.k)->required();
    wl->add_option("--lambda", o.lambda)->required();
    wl->add_option("--n", o.n, "rank (default: smallest possible)");
    add_format(wl);

    auto* st = app.add_subcommand("stanley", "type C Stanley symmetric function");
    st->add_option("--perm", o.perm, "signed permutation, e.g. 4,-2,-1,3");
    st->add_option("--k", o.k);
    st->add_option("--lambda", o.lambda);
    st->add_option("--n", o.n);
    st->add_option("--basis", o.basis, "Q or q");
    add_format(st);

    auto* kt = app.add_subcommand("ktableaux", "Kraskiewicz tableaux of a signed permutation");
    kt->add_option("--perm", o.perm);
    kt->add_option("--k", o.k);
    kt->add_option("--lambda", o.lambda);
    kt->add_option("--n", o.n);
    kt->add_option("--shape", o.shape, "restrict to one strict shape");
    add_format(kt);

    auto* bh = app.add_subcommand("bh", "expansion of Theta_lambda in Q_mu(x) s_nu'(y)");
    bh->add_option("--k", o.k)->required();
    bh->add_option("--lambda", o.lambda)->required();
    add_format(bh);

    auto* fo = app.add_subcommand("forest", "substitution forest for c_p times a Schubert class");
    fo->add_option("--k", o.k)->required();
    fo->add_option("--lambda", o.lambda)->required();
    fo->add_option("--p", o.p)->required();
    fo->add_flag("--modified", o.modified, "restrict rule (iv) to tuples satisfying X");
    fo->add_flag("--stats", o.stats, "print counts only");
    fo->add_flag("--dump-json", o.dump_json, "dump every node as JSON");
    add_format(fo);

    auto* ve = app.add_subcommand("verify", "run the verification suites");
    ve->add_option("--suite", o.suite, "all, a group name or a criterion number");
    ve->add_option("--max-weight", o.max_weight, "cap the weight bound of the sweeps");
    ve->add_option("--threads", o.threads, "worker threads (default: all cores)");
    add_format(ve);

    auto* cb = app.add_subcommand("count-bases", "count k-strict and k-odd partitions");
    cb->add_option("--k", o.k)->required();
    cb->add_option("--d", o.d, "largest weight");
    add_format(cb);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string cache = cache_file();
    if (!cache.empty()) {
        try {
            load_pieri_cache(cache);
        } catch (const std::exception& e) {
            std::cerr << "warning: ignoring cache " << cache << ": " << e.what() << "\n";
        }
    }

    int rc = 0;
    try {
        auto* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "giambelli") rc = cmd_giambelli(o);
        else if (name == "pieri") rc = cmd_pieri(o);
        else if (name == "product") rc = cmd_product(o);
        else if (name == "theta") rc = cmd_theta(o);
        else if (name == "skews") rc = cmd_skews(o);
        else if (name == "wlambda") rc = cmd_wlambda(o);
        else if (name == "stanley") rc = cmd_stanley(o);
        else if (name == "ktableaux") rc = cmd_ktableaux(o);
        else if (name == "bh") rc = cmd_bh(o);
        else if (name == "forest") rc = cmd_forest(o);
        else if (name == "verify") rc = cmd_verify(o);
        else if (name == "count-bases") rc = cmd_count_bases(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (!cache.empty()) {
        try {
            std::filesystem::create_directories(std::filesystem::path(cache).parent_path());
            save_pieri_cache(cache);
        } catch (const std::exception& e) {
            std::cerr << "warning: could not write cache " << cache << ": " << e.what() << "\n";
        }
    }
    return rc;
}
