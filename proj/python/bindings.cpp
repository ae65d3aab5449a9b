#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "giambelli/cohomology.hpp"
#include "giambelli/substitution.hpp"
#include "giambelli/theta_ring.hpp"
#include "giambelli/verification.hpp"
#include "giambelli/weyl.hpp"

namespace py = pybind11;
using namespace isotropic;

namespace {

// Sums cross the boundary as (key, "p/q") pairs; the Python layer turns
// them into dicts of Fractions.
using Terms = std::vector<std::pair<Partition, std::string>>;
using MixedTerms = std::vector<std::tuple<Partition, Partition, std::string>>;

Terms terms(const FormalSum<Partition>& s) {
    Terms out;
    for (const auto& [k, c] : s) out.emplace_back(k, c.str());
    return out;
}

MixedTerms mixed_terms(const MixedSum& s) {
    MixedTerms out;
    for (const auto& [k, c] : s) out.emplace_back(k.first, k.second, c.str());
    return out;
}

Family family(const std::string& t) {
    if (t == "B" || t == "b") return Family::B;
    if (t == "C" || t == "c") return Family::C;
    throw std::invalid_argument("type must be 'B' or 'C'");
}

Space space(const std::string& t, int n, int k) {
    Space s{family(t), k, n};
    validate(s);
    return s;
}

SchubertSum from_terms(const Terms& t) {
    SchubertSum s;
    for (const auto& [k, c] : t) s.add(normalize(k), Rational::from_string(c));
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schubert calculus on isotropic Grassmannians";

    m.def("giambelli", [](const std::string& t, int n, int k, const Partition& lam) {
        return terms(giambelli(normalize(lam), space(t, n, k)));
    });
    m.def("giambelli_monomials", [](const std::string& t, int n, int k, const Partition& lam) {
        return terms(giambelli_monomials(normalize(lam), space(t, n, k)));
    });
    m.def("pieri", [](const std::string& t, int n, int k, const Partition& lam, int p) {
        return terms(pieri(normalize(lam), p, space(t, n, k)));
    });
    m.def("multiply", [](const std::string& t, int n, int k, const Terms& a, const Terms& b, const std::string& route) {
        const Space s = space(t, n, k);
        if (route == "pieri") return terms(multiply(from_terms(a), from_terms(b), s));
        if (route == "theta") return terms(multiply_via_theta(from_terms(a), from_terms(b), s));
        throw std::invalid_argument("route must be 'pieri' or 'theta'");
    });
    m.def("theta", [](const Partition& lam, int k) { return terms(theta(normalize(lam), k)); });
    m.def("hat_theta", [](int r, int k) { return terms(hat_theta(r, k)); });
    m.def("straighten", [](const IntVec& alpha, int k) { return terms(straighten(alpha, k)); });
    m.def("mixed_expand", [](const Partition& lam, int k) { return mixed_terms(mixed_expand(normalize(lam), k)); });
    m.def("w_lambda", [](const Partition& lam, int k, int n) {
        const Partition l = normalize(lam);
        return w_lambda(l, k, n > 0 ? n : minimal_rank(l, k)).window();
    }, py::arg("lam"), py::arg("k"), py::arg("n") = 0);
    m.def("stanley_Q", [](const std::vector<int>& w) { return terms(stanley_Q(SignedPerm(w))); });
    m.def("ktableaux", [](const std::vector<int>& w) {
        std::vector<std::string> out;
        for (const auto& t : ktableaux(SignedPerm(w))) out.push_back(t.str());
        return out;
    });
    m.def("forest_counts", [](const Partition& lam, int p, int k, bool modified) {
        const Forest f = build_forest(normalize(lam), p, k, modified);
        py::dict d;
        d["nodes"] = f.nodes.size();
        d["roots"] = f.roots.size();
        d["psi0"] = f.psi0.size();
        d["psi1"] = f.psi1.size();
        return d;
    }, py::arg("lam"), py::arg("p"), py::arg("k"), py::arg("modified") = false);
    m.def("modified_forest", [](const Partition& lam, int p, int k) {
        const ModifiedStats st = modified_forest(normalize(lam), p, k);
        return std::make_pair(st.psi1, st.nonzero);
    });
    m.def("count_bases", &count_bases);
    m.def("run_criterion", [](int id, int max_weight) {
        SuiteOptions o;
        o.max_weight = max_weight;
        const CriterionResult r = run_criterion(id, o);
        py::dict d;
        d["id"] = r.id;
        d["name"] = r.name;
        d["passed"] = r.passed;
        d["seconds"] = r.seconds;
        d["detail"] = r.detail;
        return d;
    }, py::arg("id"), py::arg("max_weight") = -1);
    m.def("criteria", [] {
        std::vector<int> ids;
        for (const auto& c : criteria()) ids.push_back(c.id);
        return ids;
    });
}
