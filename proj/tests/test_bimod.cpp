#include <gtest/gtest.h>

#include "criteria.hpp"
#include "fixtures.hpp"

using namespace ainf;

namespace {

CheckOptions bound(int b) {
  CheckOptions o;
  o.bound = b;
  return o;
}

}  // namespace

TEST(Bimodule, FixturesPass) {
  EXPECT_TRUE(check_bimodule(*fx::trivial_bimodule(fx::exterior()), bound(5)).passed);
  EXPECT_TRUE(check_bimodule(*fx::shifted_bimodule(fx::dga3()), bound(5)).passed);
  EXPECT_TRUE(check_bimodule(*fx::self(fx::dga3()), bound(5)).passed);
  EXPECT_TRUE(check_bimodule(*fx::self(fx::m3_only(1)), bound(5)).passed);
}

TEST(Bimodule, SelfDefectsMirrorAlgebra) {
  const auto r = check_bimodule(*fx::self(fx::non_associative()), bound(3));
  ASSERT_FALSE(r.passed);
  EXPECT_EQ(r.defects.front().location(), "(k,l)=(0,2)");
}

TEST(Bimodule, RejectsWrongDegree) {
  auto alg = fx::exterior();
  GradedBasis m({{"m", 0}});
  MultiMap left(alg->ring(), Arity::marked(1, 0), Codomain::Module, 1);
  EXPECT_THROW(AInfBimodule(alg, m, {{{1, 0}, left}}), DegreeError);
}

TEST(Dual, PrintedSignWithoutDifferential) {
  for (const auto& bm : {fx::trivial_bimodule(fx::exterior()), fx::shifted_bimodule(fx::exterior()),
                         fx::self(fx::m3_only(1)), fx::self(fx::truncated_poly(Ring::integers(), 3))})
    EXPECT_TRUE(check_bimodule(dual(*bm), bound(5)).passed);
}

TEST(Dual, PrintedSignBreaksWithDifferential) {
  // Characterises the normative sign; the shifted variant below is the opt-in repair.
  EXPECT_FALSE(check_bimodule(dual(*fx::self(fx::dga3())), bound(4)).passed);
}

TEST(Dual, ShiftedSignOnAllFixtures) {
  for (const auto& bm : {fx::trivial_bimodule(fx::exterior()), fx::shifted_bimodule(fx::exterior()),
                         fx::shifted_bimodule(fx::dga3()), fx::self(fx::dga3()), fx::self(fx::m3_only(1)),
                         fx::self(fx::m3_only(0))})
    EXPECT_TRUE(check_bimodule(dual(*bm, DualSign::Shifted), bound(5)).passed);
}

TEST(Dual, KindAndBasis) {
  auto alg = fx::dga3();
  const auto d = dual_self_bimodule(alg);
  EXPECT_EQ(d.kind(), BimoduleKind::DualSelf);
  EXPECT_EQ(d.basis().name(1), "x*");
  EXPECT_EQ(d.basis().degree(1), -1);
  EXPECT_EQ(dual(d).kind(), BimoduleKind::Self);
}

TEST(Dual, DoubleDualIsSignTwist) {
  // dual(dual(M)) agrees with M after m -> (-1)^{|m|} m.
  for (auto sign : {DualSign::Printed, DualSign::Shifted}) {
    const auto bm = fx::shifted_bimodule(fx::dga3());
    const auto dd = dual(dual(*bm, sign), sign);
    ASSERT_EQ(dd.basis(), bm->basis());
    const auto& M = bm->basis();
    for (const auto& [kl, b] : bm->ops()) {
      const MultiMap* c = dd.op(kl.first, kl.second);
      ASSERT_NE(c, nullptr);
      ASSERT_EQ(c->entries().size(), b.entries().size());
      for (const auto& [in, comb] : b.entries()) {
        const Letter q = in[static_cast<std::size_t>(kl.first)];
        const Combination* got = c->find(in);
        ASSERT_NE(got, nullptr);
        for (const auto& [p, x] : comb) {
          const Scalar want = x * Sign::from_parity(std::abs(M.degree(p) + M.degree(q)));
          EXPECT_EQ(got->at(p), want);
        }
      }
    }
  }
}

TEST(Bimodule, Criterion) {
  const auto o = fx::bimodule_suite();
  // Fails with the printed dual sign on dga3; see Dual.PrintedSignBreaksWithDifferential.
  EXPECT_FALSE(o.ok);
  for (const auto& p : o.problems) EXPECT_NE(p.find("over dga3"), std::string::npos) << p;
}
