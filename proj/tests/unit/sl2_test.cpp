#include "grass/sl2.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace grass {
namespace {

using testing::contexts_up_to;
using testing::s;

TEST(Sl2, SchubertRules) {
  RingContext ctx(2, 4);
  EXPECT_EQ(build_H_schubert(ctx).column(Partition({1})), s(ctx, {1}, 2));
  EXPECT_EQ(build_E_schubert(ctx).column(Partition({1})), s(ctx, {}, 4));
  EXPECT_TRUE(build_F_schubert(ctx).column(Partition({2, 2})).is_zero());
  // E(s_(2,1)) = (2+2-1)(2-2+1) s_(1,1) + (2+1-2)(2-1+2) s_(2)
  EXPECT_EQ(build_E_schubert(ctx).column(Partition({2, 1})), s(ctx, {1, 1}, 3) + s(ctx, {2}, 3));
  EXPECT_EQ(build_E_schubert(ctx).shift(), -2);
  EXPECT_EQ(build_F_schubert(ctx).shift(), 2);
  EXPECT_EQ(build_H_schubert(ctx).shift(), 0);
}

TEST(Sl2, FMultiplication) {
  RingContext ctx(2, 4);
  OperatorMatrix f = build_F_mult(ctx);
  EXPECT_EQ(f.column(Partition()), s(ctx, {1}));
  EXPECT_EQ(f.column(Partition({1})), s(ctx, {2}) + s(ctx, {1, 1}));
  EXPECT_EQ(f.column(Partition({2, 1})), s(ctx, {2, 2}));
}

TEST(Sl2, Commutator) {
  RingContext ctx(2, 4);
  OperatorMatrix E = build_E_schubert(ctx), F = build_F_schubert(ctx), H = build_H_schubert(ctx);
  EXPECT_TRUE(commutator(E, F).same_entries(H));
  EXPECT_TRUE(commutator(H, H).entries().is_zero());
  EXPECT_TRUE(commutator(H, F).same_entries(Rational(-2) * F));
  EXPECT_EQ(commutator(E, F).shift(), 0);
  EXPECT_THROW(commutator(E, build_E_schubert(RingContext(1, 4))), ContextMismatch);
}

TEST(Sl2, DynkinGrading) {
  Report r = dynkin_grading_check(RingContext(2, 4));
  EXPECT_TRUE(r.pass);
  nlohmann::json spectrum = r.details[2]["spectrum"];
  std::vector<std::pair<int, int>> got;
  for (const auto& e : spectrum) got.emplace_back(e["eigenvalue"].get<int>(), e["multiplicity"].get<int>());
  EXPECT_EQ(got, (std::vector<std::pair<int, int>>{{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
  Report p1 = dynkin_grading_check(RingContext(1, 2));
  EXPECT_TRUE(p1.pass);
  EXPECT_EQ(p1.details[2]["spectrum"][0]["eigenvalue"], 1);
  EXPECT_EQ(p1.details[2]["spectrum"][1]["eigenvalue"], -1);
  for (const auto& ctx : contexts_up_to(10)) {
    EXPECT_EQ(build_H_schubert(ctx).entries().trace(), 0);
  }
}

TEST(Sl2, HardLefschetzWitnesses) {
  RingContext ctx(2, 4);
  Report r = hard_lefschetz_check(ctx);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details.back()["value"], "2*s[2,2]");
  EXPECT_EQ(r.details[2]["exponent"], 0);
  EXPECT_EQ(r.details[2]["block_size"], 2);
  Report p2 = hard_lefschetz_check(RingContext(1, 3));
  EXPECT_TRUE(p2.pass);
  EXPECT_EQ(p2.details.back()["value"], "s[2]");
}

TEST(Sl2, TripleAgreementSmall) {
  for (const auto& ctx : {RingContext(2, 4), RingContext(1, 2), RingContext(3, 6)}) {
    Report r = triple_agreement(ctx);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_EQ(r.details.size(), 7u);
  }
  OperatorMatrix h = build_H_differential(RingContext(1, 2));
  EXPECT_EQ(h.entries()(0, 0), 1);
  EXPECT_EQ(h.entries()(1, 1), -1);
}

TEST(Sl2, MismatchReportsFirstDifference) {
  RingContext ctx(2, 4);
  OperatorMatrix E = build_E_schubert(ctx);
  RationalMatrix broken = E.entries();
  broken(0, 1) += 1;
  auto diff = first_difference(E.entries(), broken);
  ASSERT_TRUE(diff.has_value());
  EXPECT_EQ(diff->row, 0u);
  EXPECT_EQ(diff->col, 1u);
  EXPECT_EQ(diff->left, 4);
  EXPECT_EQ(diff->right, 5);
}

TEST(Sl2Properties, RelationsAllRealizations) {
  for (const auto& ctx : contexts_up_to(8)) {
    EXPECT_TRUE(sl2_relations_check(ctx, Realization::Schubert).pass) << ctx.name();
  }
  for (const auto& ctx : contexts_up_to(7)) {
    EXPECT_TRUE(sl2_relations_check(ctx, Realization::Exterior).pass) << ctx.name();
    EXPECT_TRUE(sl2_relations_check(ctx, Realization::Differential).pass) << ctx.name();
  }
}

TEST(Sl2Properties, ShiftsAndExtremes) {
  for (const auto& ctx : contexts_up_to(8)) {
    OperatorMatrix E = build_E_schubert(ctx), F = build_F_schubert(ctx), H = build_H_schubert(ctx);
    EXPECT_TRUE(E.respects_shift() && F.respects_shift() && H.respects_shift());
    EXPECT_TRUE(E.column(Partition()).is_zero());
    EXPECT_TRUE(F.column(full_box(ctx)).is_zero());
    EXPECT_TRUE(F.same_entries(build_F_mult(ctx))) << ctx.name();
  }
}

TEST(Sl2Properties, LefschetzAndDynkinSweep) {
  for (const auto& ctx : contexts_up_to(8)) {
    EXPECT_TRUE(hard_lefschetz_check(ctx).pass) << ctx.name();
    EXPECT_TRUE(dynkin_grading_check(ctx).pass) << ctx.name();
  }
}

}  // namespace
}  // namespace grass
