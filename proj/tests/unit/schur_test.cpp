#include "grass/schur.hpp"

#include <gtest/gtest.h>

#include "grass/random.hpp"
#include "test_util.hpp"

namespace grass {
namespace {

using testing::contexts_up_to;
using testing::s;

class SchurTest : public ::testing::Test {
 protected:
  RingContext ctx{2, 4};
  Polynomial poly(const std::string& text) const { return parse_polynomial(ctx, text); }
};

TEST_F(SchurTest, PieriH) {
  EXPECT_EQ(pieri_h(s(ctx, {1}), 1), s(ctx, {2}) + s(ctx, {1, 1}));
  EXPECT_EQ(pieri_h(s(ctx, {2, 1}), 1), s(ctx, {2, 2}));
  EXPECT_TRUE(pieri_h(s(ctx, {}), 3).is_zero());
  RingContext big(3, 7);
  // h_2 * s_(2,1) = s_(4,1) + s_(3,2) + s_(3,1,1) + s_(2,2,1)
  EXPECT_EQ(pieri_h(s(big, {2, 1}), 2), s(big, {4, 1}) + s(big, {3, 2}) + s(big, {3, 1, 1}) + s(big, {2, 2, 1}));
}

TEST_F(SchurTest, PieriE) {
  EXPECT_EQ(pieri_e(s(ctx, {}), 2), s(ctx, {1, 1}));
  EXPECT_EQ(pieri_e(s(ctx, {1}), 1), s(ctx, {2}) + s(ctx, {1, 1}));
  // e_2 s_(1,1) = s_(2,2) + s_(2,1,1) + s_(1,1,1,1); only s_(2,2) fits.
  EXPECT_EQ(pieri_e(s(ctx, {1, 1}), 2), s(ctx, {2, 2}));
  EXPECT_TRUE(pieri_e(s(ctx, {2, 1}), 2).is_zero());
}

TEST_F(SchurTest, Multiply) {
  EXPECT_EQ(schubert_multiply(s(ctx, {1}), s(ctx, {1})), s(ctx, {2}) + s(ctx, {1, 1}));
  EXPECT_TRUE(schubert_multiply(s(ctx, {2}), s(ctx, {1, 1})).is_zero());
  SchubertVector v = s(ctx, {2}, 3) + s(ctx, {1}, Rational(-1, 2));
  EXPECT_EQ(schubert_multiply(s(ctx, {}), v), v);
  EXPECT_THROW(schubert_multiply(s(ctx, {1}), s(RingContext(1, 4), {1})), ContextMismatch);
}

TEST_F(SchurTest, JacobiTrudiAndGiambelli) {
  EXPECT_EQ(jacobi_trudi_h(Partition({2, 1}), ctx), poly("q1*q2"));
  EXPECT_EQ(jacobi_trudi_h(Partition({2, 1}), RingContext(2, 5)), parse_polynomial(RingContext(2, 5), "q1*q2 - q3"));
  EXPECT_EQ(jacobi_trudi_h(Partition({2}), ctx), poly("q2"));
  EXPECT_EQ(jacobi_trudi_h(Partition(), ctx), poly("1"));
  EXPECT_EQ(giambelli_e(Partition({1}), ctx), poly("-p1"));
  EXPECT_EQ(giambelli_e(Partition({1, 1}), ctx), poly("p2"));
  EXPECT_EQ(giambelli_e(Partition(), ctx), poly("1"));
}

TEST_F(SchurTest, ChernToSchubert) {
  EXPECT_EQ(chern_to_schubert(poly("p1")), s(ctx, {1}, -1));
  EXPECT_EQ(chern_to_schubert(poly("p1*q1")), s(ctx, {2}, -1) + s(ctx, {1, 1}, -1));
  EXPECT_TRUE(chern_to_schubert(poly("p2 + p1*q1 + q2")).is_zero());
  EXPECT_EQ(act(poly("q1"), s(ctx, {1})), s(ctx, {2}) + s(ctx, {1, 1}));
}

TEST_F(SchurTest, LittlewoodRichardson) {
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1, 1}), Partition({2, 1}), ctx), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({2, 2}), ctx), 0);
  for (const auto& lambda : schubert_basis(ctx).elements()) {
    EXPECT_EQ(lr_coefficient(Partition(), lambda, lambda, ctx), 1);
  }
  RingContext big(3, 6);
  // c^{(3,2,1)}_{(2,1),(2,1)} = 2
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1}), big), 2);
}

TEST_F(SchurTest, TextForm) {
  EXPECT_EQ(to_text(s(ctx, {2}) + s(ctx, {1, 1})), "s[2] + s[1,1]");
  EXPECT_EQ(to_text(s(ctx, {}, 4)), "4*s[]");
  EXPECT_EQ(to_text(s(ctx, {1}, -1)), "-s[1]");
  EXPECT_EQ(to_text(SchubertVector(ctx)), "0");
  EXPECT_THROW(s(ctx, {3}), std::invalid_argument);
}

TEST_F(SchurTest, BasisOrder) {
  const SchubertBasis& basis = schubert_basis(ctx);
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_EQ(basis.at(3), Partition({1, 1}));
  EXPECT_EQ(basis.index_of(Partition({2, 1})), 4u);
  EXPECT_EQ(basis.block(2).size(), 2u);
  EXPECT_THROW(basis.index_of(Partition({3})), std::out_of_range);
}

TEST(SchurProperties, CommutativeAndAssociativeExhaustive) {
  for (const auto& ctx : {RingContext(2, 4), RingContext(2, 5)}) {
    const auto& basis = schubert_basis(ctx).elements();
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        SchubertVector ab = schubert_multiply(s(ctx, a), s(ctx, b));
        EXPECT_EQ(ab, schubert_multiply(s(ctx, b), s(ctx, a)));
        EXPECT_TRUE(ab.is_homogeneous());
        for (const auto& c : basis) {
          EXPECT_EQ(schubert_multiply(ab, s(ctx, c)),
                    schubert_multiply(s(ctx, a), schubert_multiply(s(ctx, b), s(ctx, c))));
        }
      }
    }
  }
}

TEST(SchurProperties, RandomizedAssociativity) {
  RingContext ctx(3, 7);
  Rng rng(5);
  const auto& basis = schubert_basis(ctx);
  for (int t = 0; t < 15; ++t) {
    SchubertVector a = s(ctx, basis.at(rng.uniform(0, static_cast<int>(basis.size()) - 1)));
    SchubertVector b = s(ctx, basis.at(rng.uniform(0, static_cast<int>(basis.size()) - 1)));
    SchubertVector c = s(ctx, basis.at(rng.uniform(0, static_cast<int>(basis.size()) - 1)));
    EXPECT_EQ(schubert_multiply(schubert_multiply(a, b), c), schubert_multiply(a, schubert_multiply(b, c)));
    EXPECT_EQ(schubert_multiply(a, b), schubert_multiply(b, a));
  }
}

TEST(SchurProperties, NormalFormIsRingHomomorphism) {
  Rng rng(13);
  for (const auto& ctx : {RingContext(2, 4), RingContext(2, 5), RingContext(3, 6), RingContext(1, 5)}) {
    for (int t = 0; t < 15; ++t) {
      Polynomial f = random_polynomial(ctx, rng, 4, 4);
      Polynomial g = random_polynomial(ctx, rng, 4, 4);
      EXPECT_EQ(chern_to_schubert(f * g), schubert_multiply(chern_to_schubert(f), chern_to_schubert(g)));
      EXPECT_EQ(chern_to_schubert(f + g), chern_to_schubert(f) + chern_to_schubert(g));
    }
  }
}

TEST(SchurProperties, LiftsRoundTrip) {
  for (const auto& ctx : contexts_up_to(8)) {
    for (const auto& lambda : schubert_basis(ctx).elements()) {
      SchubertVector expected = SchubertVector::basis(ctx, lambda);
      EXPECT_EQ(chern_to_schubert(jacobi_trudi_h(lambda, ctx)), expected) << ctx.name() << " " << to_text(lambda);
      EXPECT_EQ(chern_to_schubert(giambelli_e(lambda, ctx)), expected) << ctx.name() << " " << to_text(lambda);
    }
  }
}

TEST(SchurProperties, LrCoefficientsAreNonnegative) {
  for (const auto& ctx : {RingContext(2, 5), RingContext(3, 6)}) {
    const auto& basis = schubert_basis(ctx).elements();
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        SchubertVector product = schubert_multiply(s(ctx, a), s(ctx, b));
        for (const auto& [nu, c] : product.coords()) {
          EXPECT_TRUE(c > 0 && c.get_den() == 1);
          EXPECT_EQ(nu.size(), a.size() + b.size());
        }
      }
    }
  }
}

TEST(SchurProperties, PieriEIsConjugateOfPieriH) {
  for (const auto& ctx : contexts_up_to(7)) {
    RingContext transposed(ctx.m(), ctx.n());
    for (const auto& lambda : schubert_basis(ctx).elements()) {
      for (int r = 1; r <= ctx.k(); ++r) {
        SchubertVector direct = pieri_e(SchubertVector::basis(ctx, lambda), r);
        SchubertVector via_h = pieri_h(SchubertVector::basis(transposed, conjugate(lambda)), r);
        SchubertVector back(ctx);
        for (const auto& [mu, c] : via_h.coords()) back.add(conjugate(mu), c);
        EXPECT_EQ(direct, back) << ctx.name() << " " << to_text(lambda) << " r=" << r;
      }
    }
  }
}

TEST(SchurProperties, MemoizedJacobiTrudiMatchesFreshDeterminant) {
  RingContext ctx(3, 7);
  for (const auto& lambda : schubert_basis(ctx).elements()) {
    int l = lambda.length();
    std::vector<std::vector<Polynomial>> m(l, std::vector<Polynomial>(l, Polynomial(ctx)));
    for (int i = 0; i < l; ++i) {
      for (int j = 0; j < l; ++j) m[i][j] = q_var(lambda.part(i) - i + j, ctx);
    }
    Polynomial fresh = l == 0 ? Polynomial::constant(ctx, 1) : determinant(m, ctx);
    EXPECT_EQ(jacobi_trudi_h(lambda, ctx), fresh);
    EXPECT_EQ(jacobi_trudi_h(lambda, ctx), fresh);
  }
}

TEST(SchurProperties, DeterminantByHand) {
  RingContext ctx(2, 4);
  auto c = [&](int v) { return Polynomial::constant(ctx, v); };
  // det [[2,1,0],[1,3,4],[0,5,6]] = 2(18-20) - 1(6-0) = -10
  std::vector<std::vector<Polynomial>> m = {{c(2), c(1), c(0)}, {c(1), c(3), c(4)}, {c(0), c(5), c(6)}};
  EXPECT_EQ(determinant(m, ctx), c(-10));
}

}  // namespace
}  // namespace grass
