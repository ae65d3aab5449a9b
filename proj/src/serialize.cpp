#include "giambelli/serialize.hpp"

namespace isotropic {

namespace {

json pair_list(const std::vector<Pair>& ps) {
    json a = json::array();
    for (const auto& [i, j] : ps) a.push_back({i, j});
    return a;
}

json box_list(const std::vector<Box>& bs) {
    json a = json::array();
    for (const auto& b : bs) a.push_back({b.row, b.col});
    return a;
}

void put_coeff(json& o, const Rational& c) {
    o["num"] = c.num_str();
    o["den"] = c.den_str();
}

}  // namespace

json to_json(const Rational& r) { return {{"num", r.num_str()}, {"den", r.den_str()}}; }

json to_json(const FormalSum<Partition>& s) {
    json a = json::array();
    for (const auto& [key, c] : s) {
        json o{{"key", key}};
        put_coeff(o, c);
        a.push_back(std::move(o));
    }
    return a;
}

json to_json(const MixedSum& s) {
    json a = json::array();
    for (const auto& [key, c] : s) a.push_back({{"Q", key.first}, {"s_conj_of", key.second}, {"coeff", c.str()}});
    return a;
}

json to_json(const PairSet& d) { return pair_list(d.pairs()); }

json to_json(const FourTuple& t) {
    return {{"D", to_json(t.D)}, {"mu", t.mu}, {"S", to_json(t.S)}, {"h", t.h}};
}

json to_json(const Forest& f) {
    json nodes = json::array();
    for (const auto& n : f.nodes) {
        json o = to_json(n.tuple);
        o["rule"] = rule_name(n.rule);
        o["parent"] = n.parent;
        o["children"] = n.children;
        nodes.push_back(std::move(o));
    }
    return {{"lambda", f.lambda}, {"p", f.p},         {"k", f.k},       {"modified", f.modified},
            {"roots", f.roots},   {"psi0", f.psi0},   {"psi1", f.psi1}, {"nodes", std::move(nodes)}};
}

json to_json(const SignedPerm& w) { return w.window(); }

json to_json(const KTableau& t) { return {{"rows", t.rows}, {"shape", t.shape()}, {"text", t.str()}}; }

json to_json(const BHTerm& t) {
    json tabs = json::array();
    for (const auto& x : t.tableaux) tabs.push_back(to_json(x));
    return {{"nu", t.nu}, {"u", to_json(t.u)}, {"tableaux", std::move(tabs)}};
}

json to_json(const SSets& s) {
    json sets = json::array();
    for (const auto& x : s.S) sets.push_back(to_json(x));
    return {{"A", box_list(s.A)},
            {"distinguished", box_list(s.distinguished)},
            {"optional", box_list(s.optional_boxes)},
            {"E", pair_list(s.E)},
            {"F", pair_list(s.F)},
            {"G", pair_list(s.G)},
            {"S", std::move(sets)}};
}

FormalSum<Partition> partition_sum_from_json(const json& j) {
    FormalSum<Partition> out;
    for (const auto& o : j) {
        const Rational c = Rational::from_string(o.at("num").get<std::string>() + "/" + o.at("den").get<std::string>());
        out.add(o.at("key").get<Partition>(), c);
    }
    return out;
}

}  // namespace isotropic
