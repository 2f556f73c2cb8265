#include <gtest/gtest.h>

#include "gforge/conditions.hpp"
#include "gforge/corpus.hpp"

using namespace gforge;

namespace {

// Loop enumeration by brute force over paths of bounded length.
std::vector<Path> loops_at(const Graph& g, VertexId v, std::size_t len) {
  std::vector<Path> out;
  for (const auto& p : enumerate_paths(g, len))
    if (p.length() > 0 && p.range() == v && p.source() == v) out.push_back(p);
  return out;
}

// Condition K straight from the definition: every loop at v has a second
// loop at v with neither a prefix of the other.
bool k_oracle(const Graph& g, std::size_t len) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto ls = loops_at(g, v, len);
    for (const auto& mu : ls) {
      bool found = false;
      for (const auto& nu : ls) found = found || (!is_prefix(mu, nu) && !is_prefix(nu, mu));
      if (!found) return false;
    }
  }
  return true;
}

// Condition L from the definition on loops up to a bound.
bool l_oracle(const Graph& g, std::size_t len) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    for (const auto& mu : loops_at(g, v, len)) {
      bool entry = false;
      for (std::size_t i = 0; i < mu.length(); ++i) {
        Count c = g.receiver_count(g.range(mu[i]));
        entry = entry || c.infinite || c.finite >= 2;
      }
      if (!entry) return false;
    }
  }
  return true;
}

}  // namespace

TEST(ConditionL, Corpus) {
  auto l1 = condition_L(corpus::g1());
  EXPECT_FALSE(l1.holds);
  EXPECT_EQ(to_string(corpus::g1(), *l1.loop), "a");
  EXPECT_TRUE(condition_L(corpus::g2()).holds);
  EXPECT_TRUE(condition_L(corpus::g4()).holds);
  EXPECT_TRUE(condition_L(corpus::g3()).holds);
  EXPECT_TRUE(condition_L(corpus::h()).holds);
}

TEST(ConditionK, Corpus) {
  auto g1 = corpus::g1();
  auto k1 = condition_K(g1);
  EXPECT_FALSE(k1.holds);
  EXPECT_EQ(*k1.vertex, g1.vertex("v"));
  EXPECT_EQ(to_string(g1, *k1.loop), "a");
  EXPECT_TRUE(condition_K(corpus::g2()).holds);
  EXPECT_FALSE(condition_K(corpus::g4()).holds);
  EXPECT_TRUE(condition_K(corpus::g5()).holds);
  EXPECT_TRUE(condition_K(corpus::h()).holds);
}

TEST(BreakingVertices, Corpus) {
  EXPECT_TRUE(breaking_vertices(corpus::g2()).empty());
  EXPECT_TRUE(breaking_vertices(corpus::g5()).empty());
  auto g6 = corpus::g6();
  EXPECT_EQ(breaking_vertices(g6), (std::set<VertexId>{g6.vertex("v")}));
  EXPECT_TRUE(breaking_vertices(corpus::g7()).empty());
}

TEST(MaximalTails, Corpus) {
  EXPECT_EQ(maximal_tails(corpus::g2()), (std::vector<VertexSet>{{0}}));
  EXPECT_EQ(maximal_tails(corpus::g1()), (std::vector<VertexSet>{{0}}));
  auto g3 = corpus::g3();
  // {u} alone fails the second condition: u is regular and its only edge starts at w
  EXPECT_EQ(maximal_tails(g3), (std::vector<VertexSet>{{g3.vertex("u"), g3.vertex("w")}}));
}

TEST(MaximalTails, CapRaisesSizeError) {
  std::vector<std::string> vs;
  for (int i = 0; i < 22; ++i) vs.push_back("v" + std::to_string(i));
  Graph big(vs, {});
  EXPECT_THROW(maximal_tails(big, 20), SizeError);
}

TEST(ConditionPI, Corpus) {
  EXPECT_TRUE(condition_PI(corpus::g2()).holds);
  auto p1 = condition_PI(corpus::g1());
  EXPECT_FALSE(p1.holds);
  EXPECT_EQ(p1.failed, PIClause::condition_K);
  auto p3 = condition_PI(corpus::g3());
  EXPECT_FALSE(p3.holds);
  EXPECT_EQ(p3.failed, PIClause::tail_loop);
  EXPECT_EQ(condition_PI(corpus::g6()).failed, PIClause::breaking_vertex);
  EXPECT_TRUE(condition_PI(corpus::g5()).holds);
  EXPECT_TRUE(condition_PI(corpus::g5pp()).holds);
  EXPECT_TRUE(condition_PI(corpus::g7()).holds);
  EXPECT_TRUE(condition_PI(corpus::h()).holds);
  EXPECT_FALSE(condition_PI(corpus::g4()).holds);
}

TEST(ConditionsProperty, FiniteGraphsHaveNoBreakingVertices) {
  for (std::uint64_t seed = 0; seed < 300; ++seed)
    EXPECT_TRUE(breaking_vertices(corpus::random_graph(seed, 8)).empty()) << seed;
}

TEST(ConditionsProperty, KImpliesL) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = corpus::random_graph(seed, 6, 0.35, true);
    if (condition_K(g).holds) EXPECT_TRUE(condition_L(g).holds) << seed;
  }
}

TEST(ConditionsProperty, AgreeWithDefinitionalOracles) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto g = corpus::random_graph(seed, 4, 0.4);
    std::size_t len = 2 * g.vertex_count() + 1;
    EXPECT_EQ(condition_L(g).holds, l_oracle(g, len)) << seed;
    EXPECT_EQ(condition_K(g).holds, k_oracle(g, len)) << seed;
  }
}

TEST(ConditionsProperty, TailsSatisfyDefinition) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = corpus::random_graph(seed, 6);
    std::size_t n = g.vertex_count();
    auto tails = maximal_tails(g);
    std::set<VertexSet> found(tails.begin(), tails.end());
    for (std::uint64_t mask = 1; mask < (1u << n); ++mask) {
      VertexSet m;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) m.insert(i);
      // literal clause checks
      bool c1 = true, c2 = true, c3 = true;
      for (const auto& e : g.edges()) {
        // an edge e gives r(e) <- s(e); heredity follows along edges
        if (m.contains(e.source) && !m.contains(e.range)) c1 = false;
      }
      for (VertexId v : m) {
        if (!g.is_regular(v)) continue;
        bool ok = false;
        for (const auto& e : g.edges()) ok = ok || (e.range == v && m.contains(e.source));
        c2 = c2 && ok;
      }
      for (VertexId a : m)
        for (VertexId b : m) {
          bool ok = false;
          for (VertexId y : m) ok = ok || (g.reaches(a, y) && g.reaches(b, y));
          c3 = c3 && ok;
        }
      EXPECT_EQ(found.contains(m), c1 && c2 && c3) << seed;
    }
  }
}
