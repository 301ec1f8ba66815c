#include "grass/gorenstein.hpp"

#include <gtest/gtest.h>

#include "grass/cohomology.hpp"
#include "grass/random.hpp"
#include "test_util.hpp"

namespace grass {
namespace {

using testing::contexts_up_to;

Monomial mono(const RingContext& ctx, std::initializer_list<std::pair<VarId, int>> exps) {
  Monomial m(ctx.num_vars());
  for (const auto& [v, e] : exps) m[slot(v, ctx)] = e;
  return m;
}

TEST(Gorenstein, CogeneratorExamples) {
  RingContext p1(1, 2);
  EXPECT_EQ(to_text(cogenerator(p1)), "-x1 + y1");
  RingContext ctx(2, 4);
  DualPolynomial P = cogenerator(ctx);
  EXPECT_EQ(P.coefficient(mono(ctx, {{VarId::p(1), 4}})), Rational(1, 12));
  EXPECT_EQ(P.coefficient(mono(ctx, {{VarId::p(2), 1}, {VarId::q(2), 1}})), 0);
  for (const auto& [m, c] : P.terms()) EXPECT_EQ(coh_degree(m, ctx), 2 * ctx.top_half_degree());
}

TEST(Gorenstein, ApplyDual) {
  RingContext ctx(1, 2);
  DualPolynomial P = cogenerator(ctx);
  EXPECT_TRUE(apply_dual(relation(1, ctx), P).is_zero());
  EXPECT_TRUE(apply_dual(relation(2, ctx), P).is_zero());
  EXPECT_EQ(apply_dual(Polynomial::constant(ctx, 1), P), P);
  EXPECT_THROW(apply_dual(Polynomial::constant(RingContext(1, 3), 1), P), ContextMismatch);
}

TEST(Gorenstein, AnnihilatorExamples) {
  const std::vector<std::pair<RingContext, int>> cases = {{RingContext(1, 2), 2}, {RingContext(2, 4), 6}, {RingContext(1, 3), 3}};
  for (const auto& [ctx, rank] : cases) {
    Report r = annihilator_check(ctx);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_EQ(apolarity_matrix(ctx).rank(), static_cast<std::size_t>(rank));
  }
}

TEST(GorensteinProperties, IdealAnnihilatesP) {
  Rng rng(19);
  for (const auto& ctx : contexts_up_to(7)) {
    DualPolynomial P = cogenerator(ctx);
    for (int m = 1; m <= ctx.n(); ++m) {
      Polynomial rm = relation(m, ctx);
      for (int t = 0; t < 30; ++t) {
        Polynomial g = random_polynomial(ctx, rng, 3, ctx.top_half_degree());
        ASSERT_TRUE(apply_dual(g * rm, P).is_zero()) << ctx.name() << " m=" << m;
      }
    }
  }
}

TEST(GorensteinProperties, PairingStructure) {
  for (const auto& ctx : contexts_up_to(7)) {
    const SchubertBasis& basis = schubert_basis(ctx);
    RationalMatrix pairing = apolarity_matrix(ctx);
    EXPECT_EQ(pairing.rank(), basis.size()) << ctx.name();
    Rational scale = pairing(basis.index_of(Partition()), basis.index_of(full_box(ctx)));
    EXPECT_EQ(scale, 1) << ctx.name();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis.at(i).size() + basis.at(j).size() != ctx.top_half_degree()) {
          EXPECT_EQ(pairing(i, j), 0);
        } else {
          Rational poincare = poincare_pairing(CohomologyClass::schubert(ctx, basis.at(i)),
                                               CohomologyClass::schubert(ctx, basis.at(j)));
          EXPECT_EQ(pairing(i, j), scale * poincare);
        }
      }
    }
    EXPECT_TRUE(annihilator_check(ctx).pass) << ctx.name();
  }
}

TEST(GorensteinProperties, DualityUnderSwap) {
  for (const auto& ctx : contexts_up_to(8)) {
    RingContext dual(ctx.m(), ctx.n());
    DualPolynomial P = cogenerator(ctx);
    DualPolynomial Q = cogenerator(dual);
    ASSERT_EQ(P.terms().size(), Q.terms().size()) << ctx.name();
    const Rational sign = ctx.top_half_degree() % 2 == 0 ? 1 : -1;
    for (const auto& [m, c] : P.terms()) {
      // x_j of Gr(k,n) becomes y_j of Gr(n-k,n) and y_l becomes x_l.
      Monomial swapped(dual.num_vars());
      for (int s = 0; s < ctx.num_vars(); ++s) {
        VarId v = var_at(s, ctx);
        VarId w = v.family == VarFamily::P ? VarId::q(v.index) : VarId::p(v.index);
        swapped[slot(w, dual)] = m[s];
      }
      EXPECT_EQ(Q.coefficient(swapped), sign * c) << ctx.name();
    }
  }
}

}  // namespace
}  // namespace grass
