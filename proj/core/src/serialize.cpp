#include "grass/serialize.hpp"

#include <functional>

namespace grass {

json to_json(const Partition& lambda) { return json(lambda.parts()); }

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
  return Partition(j.get<std::vector<int>>());
}

namespace {

json exponent_object(std::span<const int> exps, const std::function<std::string(int)>& name) {
  json out = json::object();
  for (std::size_t s = 0; s < exps.size(); ++s) {
    if (exps[s] != 0) out[name(static_cast<int>(s))] = exps[s];
  }
  return out;
}

json terms_json(const Polynomial::TermMap& terms, const std::function<std::string(int)>& name) {
  json out = json::array();
  for (const auto& [mono, c] : terms) out.push_back({{"coeff", to_string(c)}, {"exps", exponent_object(mono.exponents(), name)}});
  return out;
}

std::vector<int> exponents_from_object(const RingContext& ctx, const json& exps) {
  std::vector<int> out(ctx.num_vars(), 0);
  for (const auto& [name, e] : exps.items()) {
    int value = e.get<int>();
    if (value < 0) throw std::invalid_argument("negative exponent for " + name);
    out[slot(parse_var(name, ctx), ctx)] += value;
  }
  return out;
}

}  // namespace

json to_json(const Polynomial& f) {
  const RingContext& ctx = f.context();
  return terms_json(f.terms(), [&](int s) { return var_at(s, ctx).name(); });
}

Polynomial polynomial_from_json(const RingContext& ctx, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Polynomial out(ctx);
  for (const auto& term : j) {
    out.add_term(Monomial(exponents_from_object(ctx, term.at("exps"))), parse_rational(term.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const SchubertVector& v) {
  json coords = json::array();
  for (const auto& [lambda, c] : v.coords()) coords.push_back({{"partition", to_json(lambda)}, {"coeff", to_string(c)}});
  return {{"k", v.context().k()}, {"n", v.context().n()}, {"coords", coords}};
}

SchubertVector schubert_from_json(const json& j) {
  RingContext ctx(j.at("k").get<int>(), j.at("n").get<int>());
  SchubertVector out(ctx);
  for (const auto& entry : j.at("coords")) {
    out.add(partition_from_json(entry.at("partition")), parse_rational(entry.at("coeff").get<std::string>()));
  }
  return out;
}

json to_json(const WedgeBasisElement& e) { return {{"indices", e.indices()}}; }

json to_json(const DiffOperator& op) {
  const RingContext& ctx = op.context();
  json out = json::array();
  for (const auto& [deriv, coeff] : op.terms()) {
    out.push_back({{"orders", exponent_object(deriv.orders(), [&](int s) { return var_at(s, ctx).name(); })},
                   {"coeff", to_json(coeff)}});
  }
  return out;
}

DiffOperator diffop_from_json(const RingContext& ctx, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("operator JSON must be an array");
  DiffOperator out(ctx);
  for (const auto& term : j) {
    out.add_term(DerivMonomial(exponents_from_object(ctx, term.at("orders"))), polynomial_from_json(ctx, term.at("coeff")));
  }
  return out;
}

json to_json(const DualPolynomial& P) {
  const RingContext& ctx = P.context();
  return terms_json(P.terms(), [&](int s) { return dual_var_name(s, ctx); });
}

json to_json(const OperatorMatrix& m) {
  const SchubertBasis& basis = schubert_basis(m.context());
  json names = json::array();
  for (const auto& lambda : basis.elements()) names.push_back(to_json(lambda));
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_string(m.entries()(i, j)));
    rows.push_back(row);
  }
  return {{"k", m.context().k()},
          {"n", m.context().n()},
          {"shift", m.shift() ? json(*m.shift()) : json(nullptr)},
          {"basis", names},
          {"entries", rows}};
}

json to_json(const Reconstruction& r) {
  const RingContext& ctx = r.op.context();
  json layers = json::array();
  for (const auto& layer : r.layers) {
    json coeffs = json::array();
    for (const auto& rc : layer.coefficients) {
      coeffs.push_back({{"derivative", deriv_text(rc.deriv, ctx)},
                        {"class", to_text(rc.value)},
                        {"lift", to_text(lift(rc.value))}});
    }
    layers.push_back({{"order", layer.order}, {"coefficients", coeffs}});
  }
  return {{"k", ctx.k()},
          {"n", ctx.n()},
          {"detected_order", r.detected_order},
          {"coefficient_lift", "q-only Jacobi-Trudi"},
          {"layers", layers},
          {"operator", to_json(r.op)},
          {"text", to_text(r.op)}};
}

json betti_json(const RingContext& ctx) {
  std::vector<std::int64_t> b = betti(ctx);
  std::int64_t total = 0;
  for (auto x : b) total += x;
  return {{"k", ctx.k()}, {"n", ctx.n()}, {"betti", b}, {"total", total}};
}

}  // namespace grass
