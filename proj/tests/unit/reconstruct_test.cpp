#include "grass/reconstruct.hpp"

#include <gtest/gtest.h>

#include "grass/sl2.hpp"
#include "test_util.hpp"

namespace grass {
namespace {

using testing::contexts_up_to;
using testing::s;

BlackBoxOperator box(const OperatorMatrix& m) { return BlackBoxOperator::from_matrix(m); }

TEST(Reconstruct, BlackBoxFromAction) {
  RingContext ctx(2, 4);
  OperatorMatrix E = build_E_schubert(ctx);
  BlackBoxOperator L(ctx, [&](const SchubertVector& v) { return E.apply(v); });
  EXPECT_TRUE(L.materialize().same_entries(E));
  EXPECT_EQ(L(s(ctx, {1})), s(ctx, {}, 4));
  // Not additive: squares every coefficient.
  auto bad = [&](const SchubertVector& v) {
    SchubertVector out(ctx);
    for (const auto& [lambda, c] : v.coords()) out.add(lambda, c * c);
    return out + (v.coords().size() > 1 ? s(ctx, {}) : SchubertVector(ctx));
  };
  EXPECT_THROW(BlackBoxOperator(ctx, bad), std::invalid_argument);
}

TEST(Reconstruct, AdjointDescend) {
  RingContext ctx(2, 4);
  BlackBoxOperator mult = box(multiplication_matrix(CohomologyClass::schubert(ctx, Partition({2, 1}))));
  for (const auto& v : variables(ctx)) EXPECT_TRUE(adjoint_descend(mult, v).is_zero());

  BlackBoxOperator H = box(build_H_schubert(ctx));
  OperatorMatrix minus_two_p1 = multiplication_matrix(normal_form(parse_polynomial(ctx, "-2*p1")));
  EXPECT_TRUE(adjoint_descend(H, VarId::p(1)).materialize().same_entries(minus_two_p1));

  BlackBoxOperator E = box(build_E_schubert(ctx));
  auto vars = variables(ctx);
  bool some_double_nonzero = false;
  for (const auto& a : vars) {
    for (const auto& b : vars) {
      BlackBoxOperator twice = adjoint_descend(adjoint_descend(E, a), b);
      some_double_nonzero = some_double_nonzero || !twice.is_zero();
      for (const auto& c : vars) EXPECT_TRUE(adjoint_descend(twice, c).is_zero());
    }
  }
  EXPECT_TRUE(some_double_nonzero);
}

TEST(Reconstruct, AdjointsCommute) {
  RingContext ctx(2, 5);
  BlackBoxOperator E = box(build_E_schubert(ctx));
  for (const auto& a : variables(ctx)) {
    for (const auto& b : variables(ctx)) {
      EXPECT_TRUE(adjoint_descend(adjoint_descend(E, a), b)
                      .materialize()
                      .same_entries(adjoint_descend(adjoint_descend(E, b), a).materialize()));
    }
  }
}

TEST(Reconstruct, RecoversF) {
  RingContext ctx(2, 4);
  Reconstruction r = reconstruct(box(build_F_schubert(ctx)));
  EXPECT_EQ(r.detected_order, 0);
  EXPECT_EQ(r.op.order(), 0);
  // The class of -p1, shown through its q-lift q1.
  Polynomial coeff = r.op.coefficient(DerivMonomial(ctx.num_vars()));
  EXPECT_EQ(normal_form(coeff), normal_form(parse_polynomial(ctx, "-p1")));
  EXPECT_EQ(coeff, parse_polynomial(ctx, "q1"));
}

TEST(Reconstruct, RecoversH) {
  RingContext ctx(2, 4);
  Reconstruction r = reconstruct(box(build_H_schubert(ctx)));
  EXPECT_EQ(r.detected_order, 1);
  EXPECT_TRUE(induced_matrix(r.op).same_entries(build_H_schubert(ctx)));
  Polynomial coeff = r.op.coefficient(DerivMonomial::of(ctx, {VarId::p(1)}));
  EXPECT_EQ(coeff, lift(chern_to_schubert(parse_polynomial(ctx, "-2*p1"))));
  EXPECT_EQ(coeff, parse_polynomial(ctx, "2*q1"));
  ASSERT_EQ(r.layers.size(), 2u);
  EXPECT_EQ(r.layers[0].order, 1);
  EXPECT_EQ(r.layers[0].coefficients.size(), 4u);
}

TEST(Reconstruct, RecoversE) {
  for (const auto& ctx : contexts_up_to(6)) {
    Reconstruction r = reconstruct(box(build_E_schubert(ctx)));
    EXPECT_EQ(r.detected_order, 2) << ctx.name();
    EXPECT_TRUE(induced_matrix(r.op).same_entries(build_E_schubert(ctx))) << ctx.name();
  }
}

TEST(Reconstruct, OrderBoundIsEnforced) {
  RingContext ctx(2, 4);
  EXPECT_THROW(reconstruct(box(build_E_schubert(ctx)), 1), NotDifferentialOperator);
  EXPECT_NO_THROW(reconstruct(box(build_E_schubert(ctx)), 2));
  EXPECT_THROW(reconstruct(box(build_H_schubert(ctx)), 0), NotDifferentialOperator);
  EXPECT_THROW(reconstruct(box(build_H_schubert(ctx)), -1), std::invalid_argument);
}

TEST(Reconstruct, ArbitraryOperatorsHaveBoundedOrder) {
  // A rank-one map s[] -> full box on Gr(2,4) needs the full bound 2k(n-k).
  RingContext ctx(2, 4);
  OperatorMatrix m = OperatorMatrix::from_map(ctx, [&](const Partition& lambda) {
    return lambda.empty() ? SchubertVector::basis(ctx, full_box(ctx)) : SchubertVector(ctx);
  });
  Reconstruction r = reconstruct(box(m));
  EXPECT_LE(r.detected_order, 2 * ctx.top_half_degree());
  EXPECT_TRUE(induced_matrix(r.op).same_entries(m));
}

TEST(Reconstruct, WeylAdjoint) {
  RingContext ctx(2, 4);
  DiffOperator de = build_D_e(ctx);
  for (const auto& v : variables(ctx)) {
    DiffOperator x = DiffOperator::multiplication(Polynomial::variable(ctx, v));
    EXPECT_EQ(weyl_adjoint(de, v), diff_commutator(de, x));
  }
}

TEST(Reconstruct, RandomRoundTrips) {
  for (const auto& ctx : {RingContext(1, 3), RingContext(2, 4), RingContext(2, 5)}) {
    Rng rng(41);
    for (int t = 0; t < 5; ++t) {
      DiffOperator op = random_ideal_preserving_operator(ctx, rng);
      ASSERT_TRUE(preserves_ideal(op));
      EXPECT_LE(op.order(), 2);
      OperatorMatrix target = induced_matrix(op);
      Reconstruction r = reconstruct(box(target));
      EXPECT_LE(r.detected_order, 2);
      EXPECT_TRUE(induced_matrix(r.op).same_entries(target)) << ctx.name() << " #" << t;
    }
  }
  EXPECT_TRUE(reconstruction_check(RingContext(2, 4)).pass);
}

}  // namespace
}  // namespace grass
