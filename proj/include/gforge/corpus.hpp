#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "gforge/graph.hpp"

namespace gforge::corpus {

inline Multiplicity inf() { return Multiplicity::unbounded(); }
inline Multiplicity one() { return Multiplicity::finite(1); }

// One vertex, one loop.
inline Graph g1() { return Graph({"v"}, {{"a", "v", "v", one()}}); }

// One vertex, two loops.
inline Graph g2() { return Graph({"v"}, {{"a", "v", "v", one()}, {"b", "v", "v", one()}}); }

// A single edge into a sink.
inline Graph g3() { return Graph({"u", "w"}, {{"e", "u", "w", one()}}); }

// Loop with an entry from a sink.
inline Graph g4() { return Graph({"v", "w"}, {{"a", "v", "v", one()}, {"c", "v", "w", one()}}); }

// Infinitely many parallel loops.
inline Graph g5() { return Graph({"v"}, {{"f", "v", "v", inf()}}); }

// Infinite loop family plus one ordinary loop.
inline Graph g5pp() { return Graph({"v"}, {{"f", "v", "v", inf()}, {"g", "v", "v", one()}}); }

// Breaking vertex v: infinitely many edges from x, one loop.
inline Graph g6() { return Graph({"v", "x"}, {{"f", "v", "x", inf()}, {"g", "v", "v", one()}}); }

// Infinite receiver inside a strongly connected component.
inline Graph g7() { return Graph({"v", "x"}, {{"f", "v", "x", inf()}, {"h", "x", "v", one()}}); }

// Two vertices, each with a loop, joined both ways.
inline Graph h() {
  return Graph({"v", "w"},
               {{"a", "v", "v", one()}, {"b", "v", "w", one()}, {"c", "w", "v", one()}, {"d", "w", "w", one()}});
}

// Disjoint union of g1 and g2.
inline Graph g1_plus_g2() {
  return Graph({"v1", "v2"}, {{"a1", "v1", "v1", one()}, {"a2", "v2", "v2", one()}, {"b2", "v2", "v2", one()}});
}

inline std::map<std::string, Graph> named() {
  return {{"G1", g1()}, {"G2", g2()}, {"G3", g3()}, {"G4", g4()}, {"G5", g5()},
          {"G5pp", g5pp()}, {"G6", g6()}, {"G7", g7()}, {"H", h()}};
}

// Random graph with 1..max_vertices vertices and finite multiplicities.
// Each ordered pair gets an edge with probability `density`.
inline Graph random_graph(std::uint64_t seed, std::size_t max_vertices, double density = 0.3,
                          bool allow_infinite = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> nv(1, max_vertices);
  std::bernoulli_distribution coin(density);
  std::bernoulli_distribution parallel(0.15);
  std::bernoulli_distribution infinite(0.1);
  std::size_t n = nv(rng);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (!coin(rng)) continue;
      Multiplicity m = parallel(rng) ? Multiplicity::finite(2) : one();
      if (allow_infinite && infinite(rng)) m = inf();
      edges.push_back({"e" + std::to_string(edges.size()), vertices[r], vertices[s], m});
    }
  }
  return Graph(vertices, edges);
}

}  // namespace gforge::corpus
