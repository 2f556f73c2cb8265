#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gforge/boundary.hpp"
#include "gforge/conditions.hpp"

namespace gforge {

inline constexpr std::size_t default_word_bound = 6;

// Nontrivial admissible words alpha beta^{-1} with |alpha| + |beta| <= bound
// fixing x. A fixing word has alpha = x[0:i], beta = x[0:j] and
// shift^i x = shift^j x.
inline std::vector<ReducedWord> isotropy_search(const Graph& g, const BoundaryPoint& x,
                                                std::size_t bound = default_word_bound) {
  std::set<ReducedWord> out;
  std::vector<BoundaryPoint> tails;
  for (std::size_t i = 0; i <= bound && (i == 0 || x.has_edge(i - 1)); ++i) tails.push_back(x.drop(g, i));
  for (std::size_t i = 0; i < tails.size(); ++i)
    for (std::size_t j = 0; j < tails.size() && i + j <= bound; ++j) {
      if (i == j || tails[i] != tails[j]) continue;
      auto w = word_of(x.head(g, i), x.head(g, j));
      if (!w.is_identity()) out.insert(w);
    }
  return {out.begin(), out.end()};
}

inline bool trivial_isotropy(const Graph& g, const BoundaryPoint& x, std::size_t bound) {
  return isotropy_search(g, x, bound).empty();
}

// A point of c whose isotropy is trivial up to `bound`: a path from s(stem)
// to a singular vertex, or to a vertex with two first-return loops c1, c2
// followed by (c1^j c2)^inf with period longer than `bound`. Empty when no
// such target is reachable, which happens exactly near loops without entry.
inline std::optional<BoundaryPoint> trivial_isotropy_point(const Graph& g, const Cylinder& c, std::size_t bound) {
  const VertexId start = c.stem.source();
  if (g.is_singular(start)) return BoundaryPoint::finite(g, c.stem);
  const std::size_t loop_bound = 2 * g.vertex_count();
  std::map<VertexId, Path> route;
  std::deque<VertexId> queue;
  for (auto e : g.receiver_instances(start, 1)) {
    if (c.exclusions.contains(e)) continue;
    VertexId s = g.source(e);
    if (route.contains(s)) continue;
    route.emplace(s, Path::edge(g, e));
    queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId at = queue.front();
    queue.pop_front();
    Path tau = route.at(at);
    Path head = concat(g, c.stem, tau);
    if (g.is_singular(at)) return BoundaryPoint::finite(g, head);
    auto loops = first_return_loops(g, at, loop_bound, 2);
    if (loops.size() == 2) {
      Path period = loops[1];
      while (period.length() <= bound) period = concat(g, loops[0], period);
      return BoundaryPoint::periodic(g, head, period);
    }
    for (auto e : g.receiver_instances(at, 1)) {
      VertexId s = g.source(e);
      if (route.contains(s)) continue;
      route.emplace(s, extend(g, tau, e));
      queue.push_back(s);
    }
  }
  return std::nullopt;
}

struct FixedPointWitness {
  Path loop;
  BoundaryPoint point;
  ReducedWord word;
  bool verified = false;
};

struct CylinderFreeness {
  Cylinder cylinder;
  std::optional<BoundaryPoint> point;  // joint witness
  bool joint = false;                  // some point has trivial isotropy
  bool per_word = false;               // every word moves some point
  std::optional<ReducedWord> stuck;    // a word fixing every sampled point
};

struct FreenessReport {
  bool condition_L = true;
  std::optional<Path> loop_without_entry;
  std::vector<FixedPointWitness> fixed_points;
  std::vector<CylinderFreeness> cylinders;
  std::size_t depth = 0;
  std::size_t word_bound = 0;

  bool all_cylinders_free() const {
    return std::all_of(cylinders.begin(), cylinders.end(), [](const auto& c) { return c.joint; });
  }
  // every word moves a point of every cylinder iff every cylinder has a
  // point moved by all words at once
  bool consistent() const {
    bool per_word = std::all_of(cylinders.begin(), cylinders.end(), [](const auto& c) { return c.per_word; });
    return per_word == all_cylinders_free();
  }
  // condition L holds exactly when every cylinder has a trivial-isotropy point
  bool agrees() const {
    bool fixed_ok = std::all_of(fixed_points.begin(), fixed_points.end(), [](const auto& f) { return f.verified; });
    return consistent() && fixed_ok && condition_L == all_cylinders_free() &&
           condition_L == fixed_points.empty();
  }
};

// Simple loops none of whose vertices receives a second edge.
inline std::vector<Path> loops_without_entry(const Graph& g) {
  std::vector<Path> out;
  for (const auto& loop : simple_loops(g)) {
    bool entry = false;
    for (std::size_t i = 0; i < loop.length(); ++i) {
      Count c = g.receiver_count(g.range(loop[i]));
      entry = entry || c.infinite || c.finite >= 2;
    }
    if (!entry) out.push_back(loop);
  }
  return out;
}

inline FreenessReport topological_freeness_report(const Graph& g, std::size_t depth = 3,
                                                  std::size_t word_bound = default_word_bound) {
  FreenessReport rep;
  rep.depth = depth;
  rep.word_bound = word_bound;
  auto l = condition_L(g);
  rep.condition_L = l.holds;
  if (!l.holds) rep.loop_without_entry = l.loop;
  for (const auto& loop : loops_without_entry(g)) {
    auto x = BoundaryPoint::periodic(g, Path::vertex(loop.range()), loop);
    auto w = ReducedWord::from_path(loop);
    auto fixing = isotropy_search(g, x, std::max(word_bound, loop.length()));
    bool ok = act_point(g, w, x) == x && std::find(fixing.begin(), fixing.end(), w) != fixing.end();
    rep.fixed_points.push_back({loop, x, w, ok});
  }
  auto words = all_admissible_words(g, word_bound, 1);
  for (const auto& stem : enumerate_paths(g, depth, 1)) {
    Cylinder c{stem, {}};
    CylinderFreeness cf{c, trivial_isotropy_point(g, c, word_bound), false, false, {}};
    auto sample = points_in(g, c, 3);
    if (cf.point) sample.insert(sample.begin(), *cf.point);
    for (const auto& x : sample) {
      if (!trivial_isotropy(g, x, word_bound)) continue;
      cf.joint = true;
      cf.point = x;
      break;
    }
    cf.per_word = true;
    for (const auto& w : words) {
      if (w.is_identity()) continue;
      auto dom = domain(g, w);
      bool moved = std::any_of(sample.begin(), sample.end(),
                               [&](const BoundaryPoint& x) { return !member(x, dom) || act_point(g, w, x) != x; });
      if (!moved) {
        cf.per_word = false;
        cf.stuck = w;
        break;
      }
    }
    rep.cylinders.push_back(std::move(cf));
  }
  return rep;
}

}  // namespace gforge
