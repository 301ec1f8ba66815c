#include "grass/reconstruct.hpp"

#include <map>

#include "grass/sl2.hpp"

namespace grass {

BlackBoxOperator::BlackBoxOperator(RingContext ctx, const Action& action)
    : matrix_(OperatorMatrix::from_map(ctx, [&](const Partition& lambda) {
        return action(SchubertVector::basis(ctx, lambda));
      })) {
  const SchubertBasis& basis = schubert_basis(ctx);
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
    SchubertVector a = SchubertVector::basis(ctx, basis.at(i));
    SchubertVector b = SchubertVector::basis(ctx, basis.at(i + 1));
    if (action(a + b) != matrix_.apply(a) + matrix_.apply(b)) {
      throw std::invalid_argument("black box on " + ctx.name() + " is not additive on s[" + to_text(basis.at(i)) +
                                  "] + s[" + to_text(basis.at(i + 1)) + "]");
    }
  }
}

BlackBoxOperator BlackBoxOperator::from_matrix(const OperatorMatrix& m) { return BlackBoxOperator(m); }

namespace {

OperatorMatrix multiplication_by(VarId v, const RingContext& ctx) {
  return multiplication_matrix(normal_form(Polynomial::variable(ctx, v)));
}

OperatorMatrix matrix_adjoint(const OperatorMatrix& L, const OperatorMatrix& x) {
  return OperatorMatrix(L.context(), L.entries() * x.entries() - x.entries() * L.entries());
}

}  // namespace

BlackBoxOperator adjoint_descend(const BlackBoxOperator& L, VarId v) {
  return BlackBoxOperator::from_matrix(matrix_adjoint(L.materialize(), multiplication_by(v, L.context())));
}

DiffOperator weyl_adjoint(const DiffOperator& op, VarId v) {
  const int s = slot(v, op.context());
  DiffOperator out(op.context());
  for (const auto& [deriv, coeff] : op.terms()) {
    if (deriv[s] == 0) continue;
    DerivMonomial lowered(deriv);
    --lowered[s];
    out.add_term(lowered, coeff * Rational(deriv[s]));
  }
  return out;
}

Reconstruction reconstruct(const BlackBoxOperator& L, std::optional<int> max_order) {
  const RingContext& ctx = L.context();
  // Since x^(k(n-k)+1) = 0 for every x in the maximal ideal, every
  // (2k(n-k)+1)-fold adjoint vanishes.
  const int bound = max_order.value_or(2 * ctx.top_half_degree());
  if (bound < 0) throw std::invalid_argument("max_order must be nonnegative");
  const int nv = ctx.num_vars();
  std::vector<OperatorMatrix> mult;
  for (int s = 0; s < nv; ++s) mult.push_back(multiplication_by(var_at(s, ctx), ctx));
  const Partition empty;

  // Adjoints commute, so each derivative multiset is visited once, with
  // slots in nondecreasing order. Only nonzero adjoints are expanded further.
  struct Node {
    DerivMonomial deriv;
    int last_slot;
    OperatorMatrix adj;
  };
  std::map<DerivMonomial, SchubertVector> at_one;
  std::vector<Node> level{{DerivMonomial(nv), 0, L.materialize()}};
  int detected = -1;
  for (int order = 0; !level.empty(); ++order) {
    if (order > bound) {
      const Node& witness = level.front();
      throw NotDifferentialOperator("operator on " + ctx.name() + " is not a differential operator of order <= " +
                                    std::to_string(bound) + ": the adjoint along " +
                                    deriv_text(witness.deriv, ctx) + " is nonzero");
    }
    detected = order;
    std::vector<Node> next;
    for (const Node& node : level) {
      at_one.emplace(node.deriv, node.adj.column(empty));
      for (int s = node.last_slot; s < nv; ++s) {
        OperatorMatrix adj = matrix_adjoint(node.adj, mult[s]);
        if (adj.entries().is_zero()) continue;
        DerivMonomial deriv(node.deriv);
        ++deriv[s];
        next.push_back({std::move(deriv), s, std::move(adj)});
      }
    }
    level = std::move(next);
  }

  Reconstruction out{DiffOperator(ctx), detected, {}};
  std::map<int, std::vector<const std::pair<const DerivMonomial, SchubertVector>*>> by_order;
  for (const auto& entry : at_one) by_order[entry.first.total_order()].push_back(&entry);
  for (int order = detected; order >= 0; --order) {
    ReconstructionLayer layer{order, {}};
    for (const auto* entry : by_order[order]) {
      const DerivMonomial& deriv = entry->first;
      // Remove what the already recovered higher layers contribute to this adjoint.
      DiffOperator reduced = out.op;
      for (int s = 0; s < nv; ++s) {
        for (int t = 0; t < deriv[s]; ++t) reduced = weyl_adjoint(reduced, var_at(s, ctx));
      }
      SchubertVector value = entry->second - chern_to_schubert(reduced.coefficient(DerivMonomial(nv)));
      value *= 1 / deriv.factorial();
      if (value.is_zero()) continue;
      layer.coefficients.push_back({deriv, value});
    }
    for (const auto& rc : layer.coefficients) out.op.add_term(rc.deriv, lift(rc.value));
    out.layers.push_back(std::move(layer));
  }
  return out;
}

}  // namespace grass

namespace grass {

DiffOperator random_ideal_preserving_operator(const RingContext& ctx, Rng& rng) {
  auto small = [&]() { return random_polynomial(ctx, rng, 2, 2); };
  DiffOperator dh = build_D_h(ctx);
  DiffOperator de = build_D_e(ctx);
  DiffOperator out = DiffOperator::multiplication(small());
  out += small() * dh;
  out += small() * de;
  out += Rational(rng.uniform(-2, 2)) * (dh * dh);
  VarId x = var_at(rng.uniform(0, ctx.num_vars() - 1), ctx);
  out += small() * diff_commutator(de, DiffOperator::multiplication(Polynomial::variable(ctx, x)));
  Polynomial in_ideal = small() * relation(rng.uniform(1, ctx.n()), ctx);
  VarId u = var_at(rng.uniform(0, ctx.num_vars() - 1), ctx);
  VarId v = var_at(rng.uniform(0, ctx.num_vars() - 1), ctx);
  out += DiffOperator::term(in_ideal, DerivMonomial::of(ctx, {u, v}));
  return out;
}

namespace {

nlohmann::json round_trip(const std::string& name, const OperatorMatrix& target, std::optional<int> expected_order) {
  Reconstruction r = reconstruct(BlackBoxOperator::from_matrix(target));
  bool same = induced_matrix(r.op).same_entries(target);
  bool order_ok = !expected_order || r.detected_order == *expected_order;
  nlohmann::json out = {{"operator", name},
                        {"detected_order", r.detected_order},
                        {"induced_matrix_matches", same},
                        {"pass", same && order_ok}};
  if (expected_order) out["expected_order"] = *expected_order;
  return out;
}

}  // namespace

Report reconstruction_check(const RingContext& ctx, std::uint64_t seed, int samples) {
  Report report("reconstruction", ctx);
  report.record(round_trip("E", build_E_schubert(ctx), 2));
  report.record(round_trip("F", build_F_schubert(ctx), 0));
  report.record(round_trip("H", build_H_schubert(ctx), 1));
  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    DiffOperator op = random_ideal_preserving_operator(ctx, rng);
    nlohmann::json detail = round_trip("random #" + std::to_string(t), induced_matrix(op), std::nullopt);
    if (detail["detected_order"].get<int>() > 2) detail["pass"] = false;
    report.record(detail);
  }
  return report;
}

}  // namespace grass
