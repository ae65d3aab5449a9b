#pragma once

#include "json.hpp"

#include "giambelli/cohomology.hpp"
#include "giambelli/substitution.hpp"
#include "giambelli/theta_ring.hpp"
#include "giambelli/weyl.hpp"

namespace isotropic {

using json = nlohmann::json;

json to_json(const Rational& r);
// [{"key": [...], "num": "...", "den": "..."}], sorted by key.
json to_json(const FormalSum<Partition>& s);
// [{"Q": [...], "s_conj_of": [...], "coeff": "p/q"}]
json to_json(const MixedSum& s);
json to_json(const PairSet& d);
json to_json(const FourTuple& t);
json to_json(const Forest& f);
json to_json(const SignedPerm& w);
json to_json(const KTableau& t);
json to_json(const BHTerm& t);
json to_json(const SSets& s);

FormalSum<Partition> partition_sum_from_json(const json& j);

}  // namespace isotropic
