#pragma once

#include <nlohmann/json.hpp>

#include "grass/diffop.hpp"
#include "grass/exterior.hpp"
#include "grass/gorenstein.hpp"
#include "grass/reconstruct.hpp"

namespace grass {

using nlohmann::json;

/// [2,1]; the empty partition is [].
json to_json(const Partition& lambda);
Partition partition_from_json(const json& j);

/// [{"coeff": "a/b", "exps": {"p1": 2}}, ...] in term order.
json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const RingContext& ctx, const json& j);

/// {"k":..,"n":..,"coords":[{"partition":[..],"coeff":"1"}, ...]} in basis order.
json to_json(const SchubertVector& v);
SchubertVector schubert_from_json(const json& j);

/// {"indices":[3,1]}
json to_json(const WedgeBasisElement& e);

/// [{"orders": {"p1": 2}, "coeff": <polynomial>}, ...]
json to_json(const DiffOperator& op);
DiffOperator diffop_from_json(const RingContext& ctx, const json& j);

/// Polynomial schema with variables x1.., y1...
json to_json(const DualPolynomial& P);

/// {"k","n","shift","basis":[...],"entries":[["1","0"],...]}
json to_json(const OperatorMatrix& m);

json to_json(const Reconstruction& r);

/// {"k":2,"n":4,"betti":[1,1,2,1,1],"total":6}
json betti_json(const RingContext& ctx);

}  // namespace grass
