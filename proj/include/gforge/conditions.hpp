#pragma once

#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gforge/graph.hpp"

namespace gforge {

// Reads GFORGE_BOUND_OVERRIDE, falling back to `fallback`.
inline std::size_t bound_override(std::size_t fallback) {
  if (const char* raw = std::getenv("GFORGE_BOUND_OVERRIDE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return fallback;
}

// x lies on a loop: some e with r(e) = x and x reachable back from s(e).
inline bool on_loop(const Graph& g, VertexId x) {
  for (EdgeId e : g.receivers(x)) {
    if (g.reaches(g.edge(e).source, x)) return true;
  }
  return false;
}

// Loops at v (r = s = v) that do not pass through v in between, up to
// `max_length` edges, stopping after `limit` results. Infinite families
// contribute `copies` instances. Results ordered by length, then lexicographic.
inline std::vector<Path> first_return_loops(const Graph& g, VertexId v, std::size_t max_length, std::size_t limit,
                                            std::uint64_t copies = 2) {
  std::vector<Path> out;
  std::vector<EdgeInstance> stack;
  for (std::size_t len = 1; len <= max_length && out.size() < limit; ++len) {
    std::function<void(VertexId)> dfs = [&](VertexId at) {
      if (out.size() >= limit) return;
      for (auto inst : g.receiver_instances(at, copies)) {
        VertexId next = g.source(inst);
        stack.push_back(inst);
        if (stack.size() == len) {
          if (next == v) out.push_back(Path::of(g, stack));
        } else if (next != v && g.reaches(next, v)) {
          dfs(next);
        }
        stack.pop_back();
        if (out.size() >= limit) return;
      }
    };
    dfs(v);
  }
  return out;
}

// Simple loops based at each vertex (base vertex is the smallest vertex on
// the loop), copy 0 of each family.
inline std::vector<Path> simple_loops(const Graph& g) {
  std::vector<Path> out;
  for (VertexId base = 0; base < g.vertex_count(); ++base) {
    std::vector<EdgeInstance> stack;
    std::vector<bool> used(g.vertex_count(), false);
    std::function<void(VertexId)> dfs = [&](VertexId at) {
      for (EdgeId e : g.receivers(at)) {
        VertexId next = g.edge(e).source;
        if (next < base) continue;
        stack.push_back({e, 0});
        if (next == base) {
          out.push_back(Path::of(g, stack));
        } else if (!used[next]) {
          used[next] = true;
          dfs(next);
          used[next] = false;
        }
        stack.pop_back();
      }
    };
    used[base] = true;
    dfs(base);
  }
  return out;
}

struct ConditionVerdict {
  bool holds = true;
  std::optional<VertexId> vertex;  // base vertex of the witness
  std::optional<Path> loop;        // offending loop
};

// Every loop has an entry. A loop without entry is found by following
// unique receivers from a vertex with exactly one receiver.
inline ConditionVerdict condition_L(const Graph& g) {
  auto single = [&](VertexId x) {
    Count c = g.receiver_count(x);
    return !c.infinite && c.finite == 1;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!single(v)) continue;
    std::vector<EdgeInstance> edges;
    VertexId at = v;
    std::set<VertexId> seen;
    while (single(at) && seen.insert(at).second) {
      EdgeId e = g.receivers(at).front();
      edges.push_back({e, 0});
      at = g.edge(e).source;
      if (at == v) return {false, v, Path::of(g, edges)};
    }
  }
  return {};
}

// Every vertex on a loop carries two loops neither of which extends the
// other; equivalently two distinct first-return loops.
inline ConditionVerdict condition_K(const Graph& g) {
  const std::size_t bound = 2 * g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!on_loop(g, v)) continue;
    auto loops = first_return_loops(g, v, bound, 2);
    if (loops.size() < 2) return {false, v, loops.front()};
  }
  return {};
}

// Infinite receivers v with 0 < |r^{-1}(v) \ s^{-1}(Omega(v))| < inf.
inline std::set<VertexId> breaking_vertices(const Graph& g) {
  std::set<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_infinite_receiver(v)) continue;
    auto omega = omega_set(g, v);
    Count escaping;
    for (EdgeId e : g.receivers(v)) {
      if (!omega.contains(g.edge(e).source)) escaping += g.edge(e).multiplicity;
    }
    if (!escaping.infinite && escaping.finite > 0) out.insert(v);
  }
  return out;
}

using VertexSet = std::set<VertexId>;

// The three tail conditions, checked literally.
inline bool is_maximal_tail(const Graph& g, const VertexSet& m) {
  if (m.empty()) return false;
  for (VertexId w : m) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.reaches(v, w) && !m.contains(v)) return false;
    }
  }
  for (VertexId v : m) {
    if (!g.is_regular(v)) continue;
    bool receives = false;
    for (EdgeId e : g.receivers(v)) receives = receives || m.contains(g.edge(e).source);
    if (!receives) return false;
  }
  for (VertexId v : m) {
    for (VertexId w : m) {
      if (w < v) continue;
      bool common = false;
      for (VertexId y : m) common = common || (g.reaches(v, y) && g.reaches(w, y));
      if (!common) return false;
    }
  }
  return true;
}

inline constexpr std::size_t default_tail_cap = 20;

inline std::vector<VertexSet> maximal_tails(const Graph& g, std::size_t cap = bound_override(default_tail_cap)) {
  const std::size_t n = g.vertex_count();
  if (n > cap)
    throw SizeError("maximal_tails: " + std::to_string(n) + " vertices exceed the cap of " + std::to_string(cap) +
                    "; raise it with GFORGE_BOUND_OVERRIDE");
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet m;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) m.insert(i);
    if (is_maximal_tail(g, m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

enum class PIClause { none, breaking_vertex, condition_K, tail_loop };

struct PIVerdict {
  bool holds = true;
  PIClause failed = PIClause::none;
  std::optional<VertexId> vertex;
  std::optional<Path> loop;
  std::optional<VertexSet> tail;
};

inline std::string clause_name(PIClause c) {
  switch (c) {
    case PIClause::none: return "none";
    case PIClause::breaking_vertex: return "breaking_vertex";
    case PIClause::condition_K: return "condition_K";
    case PIClause::tail_loop: return "tail_loop";
  }
  return "none";
}

inline PIVerdict condition_PI(const Graph& g, std::size_t cap = bound_override(default_tail_cap)) {
  if (auto b = breaking_vertices(g); !b.empty()) return {false, PIClause::breaking_vertex, *b.begin(), {}, {}};
  if (auto k = condition_K(g); !k.holds) return {false, PIClause::condition_K, k.vertex, k.loop, {}};
  for (const auto& tail : maximal_tails(g, cap)) {
    for (VertexId v : tail) {
      bool connects = false;
      for (VertexId w : tail) connects = connects || (on_loop(g, w) && g.reaches(v, w));
      if (!connects) return {false, PIClause::tail_loop, v, {}, tail};
    }
  }
  return {};
}

}  // namespace gforge
