#include <gtest/gtest.h>

#include "ainf/graded.hpp"

using namespace ainf;

TEST(Scalar, IntegersRejectFractions) {
  EXPECT_EQ(Scalar::parse(Ring::integers(), "-7").to_string(), "-7");
  EXPECT_THROW(Scalar::parse(Ring::integers(), "1/2"), InputError);
  EXPECT_EQ(Scalar::parse(Ring::integers(), "4/2").to_string(), "2");
}

TEST(Scalar, RationalsAreExact) {
  const Ring q = Ring::rationals();
  const Scalar a = Scalar::parse(q, "1/3"), b = Scalar::parse(q, "1/6");
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a * b).to_string(), "1/18");
  EXPECT_EQ(a.inverse().to_string(), "3");
  EXPECT_THROW(Scalar::zero(q).inverse(), Error);
}

TEST(Scalar, ModularReduces) {
  const Ring z5 = Ring::modular(5);
  EXPECT_EQ(Scalar::parse(z5, "-1").to_string(), "4");
  EXPECT_EQ(Scalar::parse(z5, "1/2").to_string(), "3");
  EXPECT_EQ((Scalar(z5, 3) * Scalar(z5, 4)).to_string(), "2");
  EXPECT_THROW(Scalar::parse(z5, "1/5"), InputError);
  EXPECT_THROW(Ring::modular(6), InputError);
  EXPECT_TRUE(Ring::modular(2).is_char2());
}

TEST(Scalar, MalformedText) {
  for (const char* bad : {"", "x", "1/", "/2", "1.5", "1/-2", "--1"})
    EXPECT_THROW(Scalar::parse(Ring::rationals(), bad), InputError) << bad;
}

TEST(Sign, KoszulRule) {
  EXPECT_EQ(koszul_sign(1, 1), Sign::minus());
  EXPECT_EQ(koszul_sign(2, 1), Sign());
  EXPECT_EQ(koszul_sign(-1, 3), Sign::minus());
  EXPECT_EQ(Sign::minus() * Sign::minus(), Sign());
}

TEST(Sign, SuspensionSign) {
  // n = 2: (-1)^{(|a1|+1)}
  const int even[] = {0, 5};
  const int odd[] = {1, 5};
  EXPECT_EQ(suspension_sign(even), Sign::minus());
  EXPECT_EQ(suspension_sign(odd), Sign());
  // n = 3: (-1)^{2(|a1|+1) + (|a2|+1)}
  const int three[] = {1, 0, 7};
  EXPECT_EQ(suspension_sign(three), Sign::minus());
}

TEST(Basis, DualNamesAndDegrees) {
  GradedBasis b({{"1", 0}, {"x", 2}}, "1");
  const GradedBasis d = b.dual();
  EXPECT_EQ(d.name(1), "x*");
  EXPECT_EQ(d.degree(1), -2);
  EXPECT_FALSE(d.unit().has_value());
  EXPECT_EQ(d.dual().generators(), b.generators());
  EXPECT_EQ(dual_name("x*"), "x");
}

TEST(Basis, RejectsBadInput) {
  EXPECT_THROW(GradedBasis({{"a", 0}, {"a", 1}}), InputError);
  EXPECT_THROW(GradedBasis({{"", 0}}), InputError);
  EXPECT_THROW(GradedBasis({{"a", 1}}, "a"), InputError);
  EXPECT_THROW(GradedBasis({{"a", 0}}, "b"), InputError);
}

TEST(Vector, CancellationRemovesTerms) {
  const Ring z = Ring::integers();
  Vector v(z);
  v.add(plain_word({0, 1}), Scalar(z, 2));
  v.add(plain_word({0, 1}), Scalar(z, -2));
  EXPECT_TRUE(v.is_zero());
}

TEST(Grading, SuspendedDegrees) {
  GradedBasis a({{"x", 1}, {"y", 0}});
  GradedBasis m({{"m", 3}});
  const Grading g(a, &m, true);
  const Word w = marked_word({0, 0, 1}, 1);
  EXPECT_EQ(g.degree(w), 2 + 4 + 1);
  EXPECT_EQ(g.prefix(w, 1), 2);
  EXPECT_EQ(word_degree(w, a, &m), 7);
  EXPECT_EQ(format_word(w, a, &m), "(sx, s[m], sy)");
}
