#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "irrtree/families.hpp"
#include "irrtree/indices.hpp"

namespace irrtree {
namespace {

std::vector<Degree> sorted_degrees(const SimpleGraph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IoError;
}

TEST(Star, ShapeAndErrors) {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto s = build_star(n);
    EXPECT_TRUE(is_tree(s));
    EXPECT_EQ(s.degrees()[0], static_cast<Degree>(n - 1));
  }
  EXPECT_EQ(code_of([] { build_star(1); }), ErrorCode::OrderTooSmall);
}

TEST(Path, Shape) {
  EXPECT_EQ(build_path(1).size(), 0u);
  auto p = build_path(6);
  EXPECT_TRUE(is_tree(p));
  EXPECT_EQ(sorted_degrees(p), (std::vector<Degree>{1, 1, 2, 2, 2, 2}));
}

TEST(DoubleStar, DegreesAndLeafAssignment) {
  auto g = build_double_star(4, 2);
  EXPECT_TRUE(is_tree(g));
  EXPECT_EQ(g.order(), 6u);
  auto d = g.degrees();
  EXPECT_EQ(d[0], 4);
  EXPECT_EQ(d[1], 2);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(0, 2) && g.has_edge(0, 4) && g.has_edge(1, 5));
  EXPECT_EQ(build_double_star(1, 1), build_path(2));
  EXPECT_EQ(code_of([] { build_double_star(0, 2); }), ErrorCode::DomainError);
}

TEST(CompleteBipartite, EdgesAndDegrees) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 1; n <= 5; ++n) {
      auto g = build_complete_bipartite(m, n);
      EXPECT_EQ(g.size(), m * n);
      auto d = g.degrees();
      for (std::size_t v = 0; v < m; ++v) EXPECT_EQ(d[v], static_cast<Degree>(n));
      for (std::size_t v = m; v < m + n; ++v) EXPECT_EQ(d[v], static_cast<Degree>(m));
    }
  }
}

TEST(Caterpillar, Validity) {
  EXPECT_TRUE((CaterpillarSpec{{1, 1}}.valid()));
  EXPECT_TRUE((CaterpillarSpec{{3, 2, 3}}.valid()));
  EXPECT_FALSE((CaterpillarSpec{{2, 1, 2}}.valid()));
  EXPECT_FALSE((CaterpillarSpec{{0}}.valid()));
  EXPECT_FALSE((CaterpillarSpec{{}}.valid()));
  EXPECT_FALSE((CaterpillarSpec{{0, 3}}.valid()));
  EXPECT_EQ(code_of([] { build_caterpillar({{2, 1, 2}}); }), ErrorCode::SpecInvalid);
}

TEST(Caterpillar, Examples) {
  auto c = build_caterpillar({{3, 2, 3}});
  EXPECT_EQ(c.order(), 7u);
  EXPECT_TRUE(is_tree(c));
  EXPECT_EQ(build_caterpillar({{1, 1}}), build_path(2));
  auto p5 = build_caterpillar({{2, 2, 2}});
  EXPECT_TRUE(is_tree(p5));
  EXPECT_EQ(sorted_degrees(p5), sorted_degrees(build_path(5)));
  // one-vertex spine (d): star with d - 1 leaves
  EXPECT_EQ(build_caterpillar({{4}}), build_star(4));
  EXPECT_EQ(build_caterpillar({{1}}), build_path(1));
}

// Every valid spine of length 2..5 over degrees 1..5: spine vertices carry
// exactly d_i, the spine is a path, the rest are leaves hanging off it, and
// irr matches a pendant/spine-edge count done independently here.
TEST(Caterpillar, StructureOverAllSmallSpines) {
  for (std::size_t k = 2; k <= 5; ++k) {
    std::vector<Degree> spine(k, 1);
    while (true) {
      CaterpillarSpec spec{spine};
      if (spec.valid()) {
        auto t = build_caterpillar(spec);
        ASSERT_TRUE(is_tree(t));
        const auto deg = t.degrees();
        const auto total = std::accumulate(spine.begin(), spine.end(), Degree{0});
        ASSERT_EQ(t.order(), static_cast<std::size_t>(total - 2 * static_cast<Degree>(k - 1) + k));
        for (std::size_t i = 0; i < k; ++i) ASSERT_EQ(deg[i], spine[i]);
        for (std::size_t i = 0; i + 1 < k; ++i) ASSERT_TRUE(t.has_edge(i, i + 1));
        for (std::size_t v = k; v < t.order(); ++v) ASSERT_EQ(deg[v], 1);
        Degree irr = 0;
        for (std::size_t i = 0; i < k; ++i) {
          const bool interior = i > 0 && i + 1 < k;
          irr += (spine[i] - (interior ? 2 : 1)) * (spine[i] - 1);
          if (i + 1 < k) irr += std::abs(spine[i] - spine[i + 1]);
        }
        ASSERT_EQ(compute_index(t, IndexKind::Irr), IndexValue(irr));
      }
      std::size_t i = 0;
      while (i < k && spine[i] == 5) spine[i++] = 1;
      if (i == k) break;
      ++spine[i];
    }
  }
}

TEST(UniformCaterpillar, Shape) {
  auto u = build_uniform_caterpillar(3, 2);
  EXPECT_EQ(u.order(), 9u);
  EXPECT_EQ(u, build_caterpillar({{3, 4, 3}}));
  EXPECT_EQ(build_uniform_caterpillar(4, 0), build_path(4));
  EXPECT_EQ(code_of([] { build_uniform_caterpillar(0, 1); }), ErrorCode::DomainError);
}

TEST(ParseFamily, Grammar) {
  EXPECT_EQ(parse_family("star:5"), build_star(5));
  EXPECT_EQ(parse_family("path:4"), build_path(4));
  EXPECT_EQ(parse_family("dstar:3,2"), build_double_star(3, 2));
  EXPECT_EQ(parse_family("kmn:2,3"), build_complete_bipartite(2, 3));
  EXPECT_EQ(parse_family("cat:3-2-3"), build_caterpillar({{3, 2, 3}}));
  EXPECT_EQ(parse_family("ucat:3,2"), build_uniform_caterpillar(3, 2));
  EXPECT_EQ(code_of([] { parse_family("wheel:5"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_family("star:x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_family("dstar:3"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_family("star:1"); }), ErrorCode::OrderTooSmall);
}

}  // namespace
}  // namespace irrtree
