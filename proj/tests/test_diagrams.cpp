#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ainf/io.hpp"
#include "criteria.hpp"
#include "fixtures.hpp"

using namespace ainf::diagrams;

namespace {

using T = PlanarTree;

Diagram golden_diagram() {
  return Diagram{1, 2, {T::leaf(), T::leaf(), T::vertex({T::leaf(), T::leaf(), T::vertex({T::leaf(), T::leaf()})}),
                        T::leaf(), T::vertex({T::leaf(), T::leaf()})}};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(PlanarTree, Counts) {
  const T t = T::vertex({T::leaf(), T::leaf(), T::vertex({T::leaf(), T::leaf()})});
  EXPECT_EQ(t.leaves(), 4);
  EXPECT_EQ(t.excess(), 1);
  EXPECT_EQ(t.internal_vertices(), 2);
  EXPECT_THROW(T::vertex({T::leaf()}), ainf::InputError);
}

TEST(Diagram, DegreeAndLeaves) {
  const auto d = golden_diagram();
  EXPECT_EQ(degree(d), 4);
  EXPECT_EQ(leaf_count(d), 9);
  EXPECT_EQ(to_text(d), "<a,b,m3(c,d,m2(e,f)),g,m2(h,i)>_{1,2}");
  EXPECT_EQ(degree(bare_circle(2, 1)), 3);
}

TEST(Diagram, ValidateRejects) {
  EXPECT_THROW(validate(Diagram{1, 1, {T::leaf(), T::leaf()}}), ainf::InputError);
  EXPECT_THROW(validate(Diagram{-1, 0, {}}), ainf::InputError);
}

TEST(Diagram, EncodeDecodeRoundTrip) {
  for (int n = 2; n <= 5; ++n)
    for (const auto& [deg, basis] : enumerate_all(n))
      for (const auto& d : basis) {
        EXPECT_EQ(decode(encode(d)), d);
        EXPECT_EQ(degree(d), deg);
        EXPECT_EQ(leaf_count(d), n);
      }
}

TEST(Diagram, EnumerationCounts) {
  // Degree 0 in N leaves: binary trees on two arcs of the circle.
  EXPECT_EQ(enumerate(2, 0).size(), 1u);
  EXPECT_EQ(enumerate(3, 0).size(), 2u);
  EXPECT_EQ(enumerate(3, 1).size(), 2u);
  EXPECT_TRUE(enumerate(3, 2).empty());
  // Top degree: the bare circles, N - 1 of them.
  EXPECT_EQ(enumerate(6, 4).size(), 5u);
}

TEST(Differential, BoundaryExamples) {
  const auto o = fx::boundary_examples();
  EXPECT_TRUE(o.ok) << o.summary();
}

TEST(Differential, DropsDegreeByOne) {
  const auto d = golden_diagram();
  for (const auto& t : differential(Chain(d)).diagrams()) EXPECT_EQ(degree(t), 3);
  for (const auto& t : insertions(d)) EXPECT_EQ(leaf_count(t), 9);
}

TEST(Differential, SquaresToZero) {
  const auto o = fx::d_squared_small(6);
  EXPECT_TRUE(o.ok) << o.summary();
}

TEST(Homology, SmallCases) {
  const auto o = fx::small_homology();
  EXPECT_TRUE(o.ok) << o.summary();
  const auto h = homology_ranks(2);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], std::make_pair(0, 1));
}

TEST(RankMod2, MatchesDense) {
  SparseMatrix m{3, 3, {{0, 1}, {1, 2}, {0, 2}}};
  EXPECT_EQ(rank_mod2(m), 2);
  EXPECT_EQ(fx::dense_rank_mod2({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}), 2);
}

TEST(Render, GoldenDot) {
  EXPECT_EQ(render(golden_diagram(), RenderFormat::Dot), slurp(AINF_GOLDEN_DIR "/diagram_deg4.dot"));
}

TEST(Render, TikzHasEveryLeaf) {
  const auto s = render(golden_diagram(), RenderFormat::Tikz);
  EXPECT_NE(s.find("\\begin{tikzpicture}"), std::string::npos);
  for (char c = 'a'; c <= 'i'; ++c) EXPECT_NE(s.find(std::string("{$") + c + "$}"), std::string::npos) << c;
  EXPECT_THROW(parse_render_format("svg"), ainf::InputError);
}

TEST(Render, FixtureFileMatchesGolden) {
  const auto d = ainf::io::parse_diagram(ainf::io::read_file(fx::fixture_path("diagram_deg4.json")));
  EXPECT_EQ(d, golden_diagram());
  EXPECT_EQ(ainf::io::parse_diagram(ainf::io::emit_diagram(d)), d);
}

TEST(Diagram, CanonicalizeIsIdempotent) {
  for (const auto& [deg, basis] : enumerate_all(5))
    for (const auto& d : basis) {
      const auto c = canonicalize(d);
      EXPECT_EQ(canonicalize(c), c);
      for (const auto& t : insertions(d)) EXPECT_EQ(canonicalize(canonicalize(t)), canonicalize(t));
    }
}

TEST(Diagram, TopCellsAreBareCircles) {
  for (int n = 2; n <= 6; ++n) {
    const auto top = enumerate(n, n - 2);
    ASSERT_EQ(static_cast<int>(top.size()), n - 1);
    for (const auto& d : top) EXPECT_EQ(d, bare_circle(d.r, d.s));
  }
}

TEST(Render, BareCircleIsDeterministic) {
  const auto a = render(bare_circle(0, 0), RenderFormat::Dot);
  EXPECT_EQ(a, render(bare_circle(0, 0), RenderFormat::Dot));
  EXPECT_NE(a.find("shape=circle,style=empty"), std::string::npos);
  EXPECT_EQ(to_text(bare_circle(0, 0)), "<a,b>_{0,0}");
}
