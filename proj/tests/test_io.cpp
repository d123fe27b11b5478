#include <gtest/gtest.h>

#include "ainf/io.hpp"
#include "fixtures.hpp"

using namespace ainf;

namespace {

std::string file(const std::string& name) { return io::read_file(fx::fixture_path(name)); }

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  for (const char* name : {"exterior.json", "exterior_mod2.json", "dga3.json", "nonassoc.json", "m3.json", "poly2.json"}) {
    const auto a = io::parse_algebra(file(name));
    EXPECT_EQ(*io::parse_algebra(io::emit_algebra(*a)), *a) << name;
  }
  EXPECT_EQ(*io::parse_algebra(file("dga3.json")), *fx::dga3());
}

TEST(Io, DependentRoundTrips) {
  const auto ext = io::parse_algebra(file("exterior.json"));
  const auto self = io::parse_bimodule(file("self_exterior.json"), ext);
  const auto triv = io::parse_bimodule(file("trivial.json"), ext);
  EXPECT_EQ(*io::parse_bimodule(io::emit_bimodule(*triv), ext), *triv);
  const auto f = io::parse_morphism(file("augmentation.json"), self, triv);
  EXPECT_TRUE(families_equal(io::parse_morphism(io::emit_morphism(*f), self, triv)->ops(), f->ops()));

  const auto poly = io::parse_algebra(file("poly2.json"));
  const auto ip = io::parse_inner_product(file("iprod_invariant.json"), poly);
  EXPECT_EQ(*io::parse_inner_product(io::emit_inner_product(*ip), poly), *ip);

  const auto ext2 = io::parse_algebra(file("exterior_mod2.json"));
  auto dm = std::make_shared<const AInfBimodule>(dual_self_bimodule(ext2));
  const auto c = io::parse_cochain(file("cochain_dual.json"), dm);
  EXPECT_EQ(io::parse_cochain(io::emit_cochain(c), dm), c);
}

TEST(Io, ErrorsCarryLocations) {
  const std::string bad_gen =
      R"({"ring":"Z","basis":[{"name":"x","degree":0}],"ops":[{"arity":2,"entries":[{"in":["x","q"],"out":[]}]}]})";
  EXPECT_EQ(error_of([&] { io::parse_algebra(bad_gen); }).find("ops[0].entries[0].in[1]"), 0u);
  EXPECT_NE(error_of([&] { io::parse_algebra(bad_gen); }).find("unknown generator 'q'"), std::string::npos);

  const std::string bad_degree =
      R"({"ring":"Z","basis":[{"name":"x","degree":0},{"name":"y","degree":1}],)"
      R"("ops":[{"arity":2,"entries":[{"in":["x","x"],"out":[{"c":"1","b":"y"}]}]}]})";
  EXPECT_NE(error_of([&] { io::parse_algebra(bad_degree); }).find("ops[0].entries[0].out[0]"), std::string::npos);

  const std::string unknown_key = R"({"ring":"Z","basis":[],"extra":1})";
  EXPECT_NE(error_of([&] { io::parse_algebra(unknown_key); }).find("extra"), std::string::npos);

  const std::string dup =
      R"({"ring":"Z","basis":[{"name":"x","degree":0}],"ops":[{"arity":2},{"arity":2}]})";
  EXPECT_NE(error_of([&] { io::parse_algebra(dup); }).find("duplicate"), std::string::npos);

  const std::string too_long =
      R"({"ring":"Z","basis":[{"name":"x","degree":0}],"max_arity":1,)"
      R"("ops":[{"arity":2,"entries":[{"in":["x","x"],"out":[{"c":"1","b":"x"}]}]}]})";
  EXPECT_NE(error_of([&] { io::parse_algebra(too_long); }).find("max_arity"), std::string::npos);

  EXPECT_FALSE(error_of([] { io::parse_algebra("{not json"); }).empty());
  EXPECT_FALSE(error_of([] { io::read_file("/nonexistent/file.json"); }).empty());
}

TEST(Io, RingMismatchRejected) {
  const auto ext = io::parse_algebra(file("exterior_mod2.json"));
  EXPECT_FALSE(error_of([&] { io::parse_bimodule(file("trivial.json"), ext); }).empty());
}

TEST(Io, ScalarsParse) {
  const Ring q = Ring::rationals();
  EXPECT_EQ(Scalar::parse(q, "-3/6"), Scalar(q, Rational(-1, 2)));
  EXPECT_EQ(Scalar::parse(Ring::modular(5), "7"), Scalar(Ring::modular(5), 2));
  EXPECT_THROW(Scalar::parse(Ring::integers(), "1/2"), InputError);
}

TEST(Io, Reports) {
  CheckOptions o;
  o.bound = 3;
  const auto r = check_relations(*fx::non_associative(), o);
  const auto text = io::report_text(r);
  EXPECT_EQ(text.rfind("FAIL (bound 3, ", 0), 0u);
  const auto j = io::report_json(r);
  EXPECT_NE(j.find("\"status\": \"fail\""), std::string::npos);
  EXPECT_NE(j.find("\"location\": \"k=3\""), std::string::npos);
  CheckReport ok;
  ok.bound = 4;
  EXPECT_EQ(io::report_text(ok), "PASS (bound 4, 0 defects)\n");
}

TEST(Io, DiagramErrors) {
  EXPECT_FALSE(error_of([] { io::parse_diagram(R"({"r":0,"s":0,"slots":["leaf",{"m":["leaf"]}]})"); }).empty());
  EXPECT_FALSE(error_of([] { io::parse_diagram(R"({"r":1,"s":0,"slots":["leaf","leaf"]})"); }).empty());
  EXPECT_FALSE(error_of([] { io::parse_diagram(R"({"r":0,"s":0,"slots":["leaf","tree"]})"); }).empty());
}
