#include <gtest/gtest.h>

#include "gforge/corpus.hpp"
#include "gforge/graph.hpp"

using namespace gforge;

namespace {

// Floyd-Warshall closure over the edge relation r(e) <- s(e).
std::vector<std::vector<bool>> closure(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& e : g.edges()) r[e.range][e.source] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

}  // namespace

TEST(Graph, LoadFromJson) {
  auto g = load_graph(nlohmann::json::parse(R"({"vertices":["v"],"edges":[
      {"id":"a","range":"v","source":"v"},{"id":"b","range":"v","source":"v","multiplicity":1}]})"));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_TRUE(g.is_regular(g.vertex("v")));
  EXPECT_EQ(g.receiver_count(0), (Count{2, false}));
}

TEST(Graph, SinkAndInfiniteReceiverAreSingular) {
  auto g3 = corpus::g3();
  EXPECT_TRUE(g3.is_singular(g3.vertex("w")));
  EXPECT_TRUE(g3.is_regular(g3.vertex("u")));
  auto g5 = load_graph(nlohmann::json::parse(
      R"({"vertices":["v"],"edges":[{"id":"f","range":"v","source":"v","multiplicity":"inf"}]})"));
  EXPECT_TRUE(g5.is_singular(0));
  EXPECT_TRUE(g5.is_infinite_receiver(0));
}

TEST(Graph, SchemaErrorsNameTheField) {
  auto expect_field = [](const char* text, const std::string& field) {
    try {
      load_graph(nlohmann::json::parse(text));
      FAIL() << "no error for " << text;
    } catch (const SchemaError& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  expect_field(R"({"vertices":["v","v"],"edges":[]})", "vertices");
  expect_field(R"({"vertices":["v"],"edges":[{"id":"a","range":"v","source":"v"},
                  {"id":"a","range":"v","source":"v"}]})", "edges.id");
  expect_field(R"({"vertices":["v"],"edges":[{"id":"a","range":"x","source":"v"}]})", "edges.range");
  expect_field(R"({"vertices":["v"],"edges":[{"id":"a","range":"v","source":"y"}]})", "edges.source");
  expect_field(R"({"vertices":["v"],"edges":[{"id":"a","range":"v","source":"v","multiplicity":0}]})",
               "edges.multiplicity");
  expect_field(R"({"vertices":["v"],"edges":[{"id":"v","range":"v","source":"v"}]})", "edges.id");
  expect_field(R"({"edges":[]})", "vertices");
}

TEST(Graph, JsonRoundTrip) {
  for (const auto& [name, g] : corpus::named()) {
    auto again = Graph::from_json(g.to_json());
    EXPECT_EQ(again.to_json(), g.to_json()) << name;
  }
}

TEST(Path, Concat) {
  auto g = corpus::g2();
  auto a = parse_path(g, "a");
  auto b = parse_path(g, "b");
  auto ab = concat(g, a, b);
  EXPECT_EQ(ab.length(), 2u);
  EXPECT_EQ(to_string(g, ab), "a.b");
  EXPECT_EQ(concat(g, Path::vertex(0), a), a);
  auto g3 = corpus::g3();
  auto e = parse_path(g3, "e");
  EXPECT_THROW(concat(g3, e, e), CompositionError);
}

TEST(Path, PrefixDropAndParse) {
  auto g = corpus::g2();
  auto p = parse_path(g, "a.b.a");
  EXPECT_EQ(to_string(g, prefix(g, p, 2)), "a.b");
  EXPECT_EQ(to_string(g, drop(g, p, 1)), "b.a");
  EXPECT_TRUE(is_prefix(parse_path(g, "a.b"), p));
  EXPECT_TRUE(is_prefix(Path::vertex(0), p));
  EXPECT_FALSE(is_prefix(parse_path(g, "b"), p));
  EXPECT_EQ(to_string(g, parse_path(g, "v")), "v");
  auto g5 = corpus::g5();
  EXPECT_EQ(to_string(g5, parse_path(g5, "f[3].f[0]")), "f[3].f[0]");
  EXPECT_THROW(parse_path(g, "a.q"), SchemaError);
  EXPECT_THROW(parse_path(corpus::g3(), "e.e"), CompositionError);
}

TEST(Graph, Reaches) {
  auto g3 = corpus::g3();
  auto u = g3.vertex("u"), w = g3.vertex("w");
  EXPECT_TRUE(g3.reaches(u, w));
  EXPECT_FALSE(g3.reaches(w, u));
  EXPECT_TRUE(corpus::g2().reaches(0, 0));
}

TEST(Graph, OmegaSet) {
  EXPECT_TRUE(omega_set(corpus::g2(), 0).empty());
  auto g3 = corpus::g3();
  auto u = g3.vertex("u"), w = g3.vertex("w");
  // paths run from source to range, so from u nothing reaches w
  EXPECT_EQ(omega_set(g3, u), (std::set<VertexId>{w}));
  EXPECT_TRUE(omega_set(g3, w).empty());
  auto un = corpus::g1_plus_g2();
  EXPECT_EQ(omega_set(un, un.vertex("v1")), (std::set<VertexId>{un.vertex("v2")}));
}

TEST(GraphProperty, ReachabilityMatchesClosureOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = corpus::random_graph(seed, 8);
    auto c = closure(g);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      auto om = omega_set(g, w);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ASSERT_EQ(g.reaches(w, v), c[w][v]) << seed;
        EXPECT_FALSE(om.contains(v) && g.reaches(v, w));
        if (om.contains(v)) EXPECT_NE(v, w);
      }
    }
  }
}

TEST(GraphProperty, ReachesIsReflexiveAndTransitive) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = corpus::random_graph(seed, 7);
    std::size_t n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
      EXPECT_TRUE(g.reaches(a, a));
      for (VertexId b = 0; b < n; ++b)
        for (VertexId c = 0; c < n; ++c)
          if (g.reaches(a, b) && g.reaches(b, c)) EXPECT_TRUE(g.reaches(a, c));
    }
  }
}

TEST(Path, EnumerationIsComposableAndSorted) {
  auto g = corpus::g4();
  auto paths = enumerate_paths(g, 3);
  // v, w, a, c, aa, ac, aaa, aac
  EXPECT_EQ(paths.size(), 8u);
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.length(); ++i) EXPECT_EQ(g.range(p[i]), g.source(p[i - 1]));
}
