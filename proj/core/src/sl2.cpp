#include "grass/sl2.hpp"

#include <map>

#include "grass/diffop.hpp"
#include "grass/exterior.hpp"

namespace grass {

OperatorMatrix build_H_schubert(const RingContext& ctx) {
  return OperatorMatrix::from_map(
      ctx,
      [&](const Partition& lambda) {
        return SchubertVector::basis(ctx, lambda, ctx.top_half_degree() - 2 * lambda.size());
      },
      0);
}

OperatorMatrix build_E_schubert(const RingContext& ctx) {
  const int k = ctx.k(), m = ctx.m();
  return OperatorMatrix::from_map(
      ctx,
      [&](const Partition& lambda) {
        SchubertVector out(ctx);
        for (const auto& [row, mu] : remove_box_moves(lambda, box_of(ctx))) {
          int part = lambda.part(row - 1);
          out.add(mu, Rational((k + part - row) * (m - part + row)));
        }
        return out;
      },
      -2);
}

OperatorMatrix build_F_schubert(const RingContext& ctx) {
  return OperatorMatrix::from_map(
      ctx,
      [&](const Partition& lambda) {
        SchubertVector out(ctx);
        for (const auto& mu : add_box_moves(lambda, box_of(ctx))) out.add(mu, 1);
        return out;
      },
      2);
}

OperatorMatrix build_F_mult(const RingContext& ctx) {
  OperatorMatrix out = multiplication_matrix(normal_form(-Polynomial::variable(ctx, VarId::p(1))));
  return OperatorMatrix(ctx, out.entries(), 2);
}

OperatorMatrix build_H_exterior(const RingContext& ctx) { return transport_to_cohomology(sl2_h, ctx, 0); }
OperatorMatrix build_E_exterior(const RingContext& ctx) { return transport_to_cohomology(sl2_e, ctx, -2); }
OperatorMatrix build_F_exterior(const RingContext& ctx) { return transport_to_cohomology(sl2_f, ctx, 2); }

OperatorMatrix build_H_differential(const RingContext& ctx) { return induced_matrix(build_D_h(ctx), 0); }
OperatorMatrix build_E_differential(const RingContext& ctx) { return induced_matrix(build_D_e(ctx), -2); }
OperatorMatrix build_F_differential(const RingContext& ctx) { return induced_matrix(build_D_f(ctx), 2); }

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  require_same(a.context(), b.context());
  std::optional<int> shift;
  if (a.shift() && b.shift()) shift = *a.shift() + *b.shift();
  return OperatorMatrix(a.context(), a.entries() * b.entries() - b.entries() * a.entries(), shift);
}

const char* realization_name(Realization r) {
  switch (r) {
    case Realization::Schubert:
      return "schubert";
    case Realization::Exterior:
      return "exterior";
    case Realization::Differential:
      return "differential";
  }
  return "unknown";
}

namespace {

struct Triple {
  OperatorMatrix E, F, H;
};

Triple build_triple(const RingContext& ctx, Realization r) {
  switch (r) {
    case Realization::Exterior:
      return {build_E_exterior(ctx), build_F_exterior(ctx), build_H_exterior(ctx)};
    case Realization::Differential:
      return {build_E_differential(ctx), build_F_differential(ctx), build_H_differential(ctx)};
    case Realization::Schubert:
      break;
  }
  return {build_E_schubert(ctx), build_F_schubert(ctx), build_H_schubert(ctx)};
}

nlohmann::json entry_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  auto diff = first_difference(a.entries(), b.entries());
  if (!diff) return nullptr;
  const SchubertBasis& basis = schubert_basis(a.context());
  return {{"row", to_text(basis.at(diff->row))},
          {"col", to_text(basis.at(diff->col))},
          {"left", to_string(diff->left)},
          {"right", to_string(diff->right)}};
}

nlohmann::json compare(const std::string& name, const OperatorMatrix& a, const OperatorMatrix& b) {
  nlohmann::json diff = entry_diff(a, b);
  nlohmann::json out = {{"comparison", name}, {"pass", diff.is_null()}};
  if (!diff.is_null()) out["first_difference"] = diff;
  return out;
}

}  // namespace

Report sl2_relations_check(const RingContext& ctx, Realization r) {
  Report report("sl2_relations", ctx);
  Triple t = build_triple(ctx, r);
  report.record({{"realization", realization_name(r)}, {"dim", t.H.dim()}, {"pass", true}});
  report.record(compare("[H,E] = 2E", commutator(t.H, t.E), Rational(2) * t.E));
  report.record(compare("[H,F] = -2F", commutator(t.H, t.F), Rational(-2) * t.F));
  report.record(compare("[E,F] = H", commutator(t.E, t.F), t.H));
  report.record({{"comparison", "supports match shifts"},
                 {"pass", t.E.respects_shift() && t.F.respects_shift() && t.H.respects_shift()}});
  report.record({{"comparison", "E(s[]) = 0"}, {"pass", t.E.column(Partition()).is_zero()}});
  report.record({{"comparison", "F(full box) = 0"}, {"pass", t.F.column(full_box(ctx)).is_zero()}});
  return report;
}

Report dynkin_grading_check(const RingContext& ctx) {
  Report report("dynkin_grading", ctx);
  OperatorMatrix H = build_H_schubert(ctx);
  const SchubertBasis& basis = schubert_basis(ctx);
  report.record({{"property", "H diagonal"}, {"pass", H.entries().is_diagonal()}});
  std::map<int, std::int64_t> multiplicity;
  bool eigen_ok = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int expected = ctx.top_half_degree() - 2 * basis.at(i).size();
    if (H.entries()(i, i) != expected) eigen_ok = false;
    ++multiplicity[expected];
  }
  report.record({{"property", "eigenvalue k(n-k) - 2j on degree 2j"}, {"pass", eigen_ok}});
  std::vector<std::int64_t> b = betti(ctx);
  nlohmann::json spectrum = nlohmann::json::array();
  bool mult_ok = true;
  for (int j = 0; j <= ctx.top_half_degree(); ++j) {
    int eigenvalue = ctx.top_half_degree() - 2 * j;
    std::int64_t mult = multiplicity.count(eigenvalue) ? multiplicity[eigenvalue] : 0;
    if (mult != b[j]) mult_ok = false;
    spectrum.push_back({{"degree", 2 * j}, {"eigenvalue", eigenvalue}, {"multiplicity", mult}, {"betti", b[j]}});
  }
  report.record({{"property", "multiplicities equal Betti numbers"}, {"spectrum", spectrum}, {"pass", mult_ok}});
  Rational trace = H.entries().trace();
  report.record({{"property", "trace zero"}, {"trace", to_string(trace)}, {"pass", trace == 0}});
  return report;
}

Report hard_lefschetz_check(const RingContext& ctx) {
  Report report("hard_lefschetz", ctx);
  const int d = ctx.top_half_degree();
  const SchubertBasis& basis = schubert_basis(ctx);
  OperatorMatrix F = build_F_schubert(ctx);
  std::vector<RationalMatrix> powers{RationalMatrix::identity(basis.size())};
  for (int e = 1; e <= d; ++e) powers.push_back(powers.back() * F.entries());
  for (int j = 0; 2 * j <= d; ++j) {
    const int exponent = d - 2 * j;
    const auto& rows = basis.block(d - j);
    const auto& cols = basis.block(j);
    RationalMatrix block = powers[exponent].submatrix(rows, cols);
    std::size_t rank = block.rank();
    bool ok = rows.size() == cols.size() && rank == cols.size();
    report.record({{"degree", 2 * j},
                   {"target_degree", 2 * (d - j)},
                   {"exponent", exponent},
                   {"exponent_reading", "k(n-k)-2j, degree 2j to 2(k(n-k)-j)"},
                   {"alternative_reading", "2(k(n-k)-2j) = " + std::to_string(2 * exponent) + ", not used"},
                   {"block_size", cols.size()},
                   {"rank", rank},
                   {"pass", ok}});
  }
  SchubertVector witness = OperatorMatrix(ctx, powers[d]).column(Partition());
  report.record({{"witness", "F^" + std::to_string(d) + "(s[])"}, {"value", to_text(witness)}, {"pass", true}});
  return report;
}

Report triple_agreement(const RingContext& ctx) {
  Report report("triple_agreement", ctx);
  Triple s = build_triple(ctx, Realization::Schubert);
  Triple x = build_triple(ctx, Realization::Exterior);
  Triple d = build_triple(ctx, Realization::Differential);
  auto add = [&](const char* op, const OperatorMatrix& a, const OperatorMatrix& b, const OperatorMatrix& c) {
    nlohmann::json se = compare(std::string(op) + " schubert vs exterior", a, b);
    nlohmann::json sd = compare(std::string(op) + " schubert vs differential", a, c);
    report.record(se);
    report.record(sd);
  };
  add("E", s.E, x.E, d.E);
  add("F", s.F, x.F, d.F);
  add("H", s.H, x.H, d.H);
  report.record(compare("F schubert vs multiplication by -p1", s.F, build_F_mult(ctx)));
  return report;
}

}  // namespace grass
