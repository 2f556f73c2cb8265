#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/boundary.hpp"
#include "gforge/conditions.hpp"

namespace gforge {

// g.U, h.U inside U and disjoint.
struct ParadoxWitness {
  CompactOpen U;
  ReducedWord g;
  ReducedWord h;
};

namespace detail {

inline void require_pi(const Graph& g) {
  auto pi = condition_PI(g);
  if (!pi.holds) {
    std::string where = pi.vertex ? " at " + g.vertex_name(*pi.vertex) : "";
    throw PreconditionError("condition (PI) fails: " + clause_name(pi.failed) + where);
  }
}

// shortest path eta with r(eta) = from and s(eta) = to, least in path order
inline std::optional<Path> return_path(const Graph& g, VertexId from, VertexId to) {
  std::map<VertexId, Path> seen{{from, Path::vertex(from)}};
  std::deque<VertexId> queue{from};
  while (!queue.empty()) {
    VertexId at = queue.front();
    queue.pop_front();
    if (at == to) return seen.at(at);
    for (auto e : g.receiver_instances(at, 1)) {
      VertexId s = g.source(e);
      if (seen.contains(s)) continue;
      seen.emplace(s, extend(g, seen.at(at), e));
      queue.push_back(s);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// `count` loops zeta_i eta_i at an infinite receiver v with pairwise distinct
// first edges: receivers of v that can come back, closed by a shortest return path.
inline std::vector<Path> infinite_loops(const Graph& g, VertexId v, std::size_t count) {
  if (!g.is_infinite_receiver(v))
    throw PreconditionError("infinite_loops: " + g.vertex_name(v) + " does not receive infinitely many edges");
  detail::require_pi(g);
  std::vector<Path> out;
  for (auto e : g.receiver_instances(v, count)) {
    if (out.size() == count) break;
    auto eta = detail::return_path(g, g.source(e), v);
    if (!eta) continue;
    out.push_back(concat(g, Path::edge(g, e), *eta));
  }
  if (out.size() < count)
    throw PreconditionError("infinite_loops: only " + std::to_string(out.size()) + " receivers of " +
                            g.vertex_name(v) + " return to it");
  return out;
}

namespace detail {

inline ReducedWord conjugate(const Path& mu, const Path& zeta) {
  return fg_mul(fg_mul(ReducedWord::from_path(mu), ReducedWord::from_path(zeta)), fg_inv(ReducedWord::from_path(mu)));
}

inline void witness_part(const Graph& g, const Cylinder& part, std::size_t level, std::size_t cap,
                         std::vector<ParadoxWitness>& out) {
  if (is_empty(g, part)) return;
  const VertexId v = part.stem.source();
  auto allowed = [&](const Path& loop) { return !part.exclusions.contains(loop[0]); };
  std::vector<Path> pick;
  if (g.is_infinite_receiver(v)) {
    for (const auto& loop : infinite_loops(g, v, part.exclusions.size() + 2))
      if (allowed(loop) && pick.size() < 2) pick.push_back(loop);
  } else {
    for (const auto& loop : first_return_loops(g, v, 2 * g.vertex_count(), 2 + 4 * part.exclusions.size(), 1))
      if (allowed(loop) && pick.size() < 2) pick.push_back(loop);
  }
  if (pick.size() == 2) {
    out.push_back({{part}, conjugate(part.stem, pick[0]), conjugate(part.stem, pick[1])});
    return;
  }
  if (g.receivers(v).empty()) throw PreconditionError("Z(" + to_string(g, part.stem) + ") is a single point");
  if (level >= cap) throw SizeError("find_witness: splitting deeper than " + std::to_string(cap));
  for (auto e : g.receiver_instances(v, 1)) {
    if (part.exclusions.contains(e)) continue;
    witness_part(g, {extend(g, part.stem, e), {}}, level + 1, cap, out);
  }
}

}  // namespace detail

// One witness per part of the normal form of U; parts that need splitting
// contribute one witness per piece.
inline std::vector<ParadoxWitness> find_witness(const Graph& g, const CompactOpen& u) {
  detail::require_pi(g);
  std::vector<ParadoxWitness> out;
  for (const auto& part : normalize(g, u)) detail::witness_part(g, part, 0, g.vertex_count() + 1, out);
  return out;
}

struct WitnessReport {
  bool pass = true;
  std::string failure;
  std::string witness;
  std::size_t points = 0;
  std::size_t depth = 0;
};

inline WitnessReport verify_witness(const Graph& gr, const ParadoxWitness& w, std::size_t depth = 4) {
  WitnessReport rep;
  rep.depth = depth;
  auto fail = [&](std::string what, std::string witness) {
    rep.pass = false;
    rep.failure = std::move(what);
    rep.witness = std::move(witness);
    return rep;
  };
  for (const auto* word : {&w.g, &w.h})
    if (!is_subset(gr, w.U, domain(gr, *word))) return fail("domain", to_string(gr, *word));
  auto gu = act_set(gr, w.g, w.U);
  auto hu = act_set(gr, w.h, w.U);
  if (!is_subset(gr, gu, w.U)) return fail("containment_g", to_string(gr, gu));
  if (!is_subset(gr, hu, w.U)) return fail("containment_h", to_string(gr, hu));
  if (!is_empty(gr, intersect(gu, hu))) return fail("disjointness", to_string(gr, intersect(gu, hu)));
  for (const auto& x : points_in(gr, w.U, depth)) {
    ++rep.points;
    auto gx = act_point(gr, w.g, x);
    auto hx = act_point(gr, w.h, x);
    if (!member(gx, w.U) || !member(hx, w.U) || member(gx, hu) || member(hx, gu)) return fail("point", to_string(gr, x));
  }
  return rep;
}

// h, g h, g g h, ...: n words with pairwise disjoint images inside U.
inline std::vector<ReducedWord> expand_witness(const ParadoxWitness& w, std::size_t n) {
  std::vector<ReducedWord> out;
  ReducedWord prefix;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(fg_mul(prefix, w.h));
    prefix = fg_mul(prefix, w.g);
  }
  return out;
}

inline nlohmann::json to_json(const Graph& gr, const ParadoxWitness& w, std::size_t verified_depth) {
  return {{"U", to_json(gr, w.U)}, {"g", to_string(gr, w.g)}, {"h", to_string(gr, w.h)},
          {"verified_depth", verified_depth}};
}

}  // namespace gforge
