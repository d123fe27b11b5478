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

TEST(InnerProduct, InvariantPairingPasses) {
  const auto ip = fx::invariant_pairing(fx::truncated_poly(Ring::integers(), 2));
  EXPECT_TRUE(check_inner_product(ip, bound(4)).passed);
}

TEST(InnerProduct, NonInvariantPairingFails) {
  const auto ip = fx::noninvariant_pairing(fx::truncated_poly(Ring::integers(), 2));
  const auto r = check_inner_product(ip, bound(3));
  ASSERT_FALSE(r.passed);
  EXPECT_FALSE(r.defects.empty());
}

TEST(InnerProduct, MorphismRoundTrip) {
  const auto ip = fx::invariant_pairing(fx::truncated_poly(Ring::integers(), 2));
  const auto f = to_morphism(ip);
  EXPECT_EQ(f.target().kind(), BimoduleKind::DualSelf);
  EXPECT_EQ(from_morphism(f), ip);
}

TEST(RelationTerms, Counts) {
  EXPECT_TRUE(relation_terms(0, 0).empty());
  EXPECT_EQ(relation_terms(1, 0).size(), 2u);
  EXPECT_EQ(relation_terms(0, 1).size(), 2u);
  EXPECT_EQ(relation_terms(2, 0).size(), 5u);
  EXPECT_EQ(relation_terms(1, 1).size(), 6u);
  EXPECT_EQ(relation_terms(0, 2).size(), 5u);
  EXPECT_EQ(relation_terms(1, 0).front().to_string({"a", "b", "c"}), "<m2(a,b),c>_{0,0}");
  EXPECT_THROW(relation_terms(-1, 0), ArityError);
}

TEST(RelationTerms, AllSatisfyConditions) {
  for (int k = 0; k <= 2; ++k)
    for (int l = 0; l + k <= 3; ++l)
      for (const auto& x : relation_terms(k, l)) EXPECT_TRUE(satisfies_relation_conditions(x, k, l)) << k << "," << l;
}

TEST(InnerProduct, Criterion) {
  const auto o = fx::inner_product_suite();
  EXPECT_TRUE(o.ok) << o.summary();
}
