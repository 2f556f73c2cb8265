#include <gtest/gtest.h>

#include "gforge/corpus.hpp"
#include "gforge/freeness.hpp"

using namespace gforge;

namespace {

// Fixing words by brute force: apply every admissible word up to the bound.
std::vector<ReducedWord> fixing_words(const Graph& g, const BoundaryPoint& x, std::size_t bound) {
  std::vector<ReducedWord> out;
  for (const auto& w : all_admissible_words(g, bound)) {
    if (w.is_identity() || !member(x, domain(g, w))) continue;
    if (act_point(g, w, x) == x) out.push_back(w);
  }
  return out;
}

std::vector<std::string> names(const Graph& g, const std::vector<ReducedWord>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(g, w));
  return out;
}

}  // namespace

TEST(Isotropy, Corpus) {
  auto g1 = corpus::g1();
  // both a.a and its inverse have |alpha| + |beta| = 2
  EXPECT_EQ(names(g1, isotropy_search(g1, parse_point(g1, "(a)^inf"), 2)),
            (std::vector<std::string>{"a", "a^-1", "a.a", "a^-1.a^-1"}));
  auto g2 = corpus::g2();
  auto ab = parse_point(g2, "(a.b)^inf");
  EXPECT_EQ(names(g2, isotropy_search(g2, ab, 1)), std::vector<std::string>{});
  EXPECT_EQ(names(g2, isotropy_search(g2, ab, 2)), (std::vector<std::string>{"a.b", "b^-1.a^-1"}));
  EXPECT_EQ(names(g2, isotropy_search(g2, ab, 4)),
            (std::vector<std::string>{"a.b", "b^-1.a^-1", "a.b.a.b", "b^-1.a^-1.b^-1.a^-1"}));
  auto g3 = corpus::g3();
  EXPECT_TRUE(isotropy_search(g3, parse_point(g3, "e"), 2).empty());
}

TEST(IsotropyProperty, MatchesBruteForce) {
  for (auto g : {corpus::g1(), corpus::g2(), corpus::g4(), corpus::h()}) {
    for (const auto& x : enumerate_points(g, 4))
      for (std::size_t bound : {2u, 4u}) EXPECT_EQ(isotropy_search(g, x, bound), fixing_words(g, x, bound));
  }
}

TEST(Freeness, ReportsOnCorpus) {
  auto g1 = corpus::g1();
  auto r1 = topological_freeness_report(g1, 3, 6);
  EXPECT_FALSE(r1.condition_L);
  ASSERT_EQ(r1.fixed_points.size(), 1u);
  EXPECT_EQ(to_string(g1, r1.fixed_points[0].point), "(a)^inf");
  EXPECT_EQ(to_string(g1, r1.fixed_points[0].word), "a");
  EXPECT_TRUE(r1.fixed_points[0].verified);
  EXPECT_TRUE(r1.agrees());

  auto g2 = corpus::g2();
  auto r2 = topological_freeness_report(g2, 3, 6);
  EXPECT_TRUE(r2.condition_L);
  EXPECT_TRUE(r2.all_cylinders_free());
  EXPECT_TRUE(r2.agrees());
  for (const auto& c : r2.cylinders) {
    ASSERT_TRUE(c.point);
    EXPECT_TRUE(member(*c.point, c.cylinder));
    EXPECT_TRUE(fixing_words(g2, *c.point, 6).empty());
  }

  auto g4 = corpus::g4();
  auto r4 = topological_freeness_report(g4, 3, 6);
  EXPECT_TRUE(r4.condition_L);
  EXPECT_TRUE(r4.agrees());
  for (const auto& c : r4.cylinders) {
    ASSERT_TRUE(c.point);
    EXPECT_TRUE(c.point->is_finite());
    EXPECT_EQ(c.point->stem().source(), g4.vertex("w"));
  }
}

TEST(FreenessProperty, ConditionLAgreesWithIsotropyOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = corpus::random_graph(seed, 6, 0.25);
    auto rep = topological_freeness_report(g, 2, 6);
    EXPECT_TRUE(rep.agrees()) << seed;
  }
}
