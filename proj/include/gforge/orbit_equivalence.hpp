#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/boundary.hpp"
#include "gforge/conditions.hpp"

namespace gforge {

// Homeomorphism of boundary spaces given by finite data:
// phi(mu_i y) = nu_i tau(y), where tau is a graph isomorphism E -> F.
struct PrefixHomeo {
  std::vector<std::pair<Path, Path>> rules;
  std::vector<EdgeId> tau_edges;       // indexed by edges of E
  std::vector<VertexId> tau_vertices;  // indexed by vertices of E
};

namespace detail {

inline void require_finite(const Graph& g, const char* side) {
  for (const auto& e : g.edges())
    if (e.multiplicity.infinite)
      throw PreconditionError(std::string("orbit equivalence data needs finite multiplicities on ") + side);
}

inline Path map_path(const Graph& f, const PrefixHomeo& phi, const Path& p) {
  if (p.is_vertex()) return Path::vertex(phi.tau_vertices.at(p.range()));
  std::vector<EdgeInstance> es;
  for (auto e : p.edges()) es.push_back({phi.tau_edges.at(e.edge), e.copy});
  return Path::of(f, es);
}

}  // namespace detail

// tau matched by names: every edge and vertex of E must exist in F.
inline std::pair<std::vector<EdgeId>, std::vector<VertexId>> relabel_by_name(
    const Graph& e, const Graph& f, const std::map<std::string, std::string>& edge_map = {}) {
  std::vector<EdgeId> te;
  std::vector<VertexId> tv(e.vertex_count(), static_cast<VertexId>(-1));
  for (EdgeId i = 0; i < e.edge_count(); ++i) {
    std::string target = e.edge(i).id;
    if (auto it = edge_map.find(target); it != edge_map.end()) target = it->second;
    auto j = f.find_edge(target);
    if (!j) throw SchemaError("tau: edge '" + target + "' does not exist in the target graph");
    te.push_back(*j);
    tv[e.edge(i).range] = f.edge(*j).range;
    tv[e.edge(i).source] = f.edge(*j).source;
  }
  for (VertexId v = 0; v < e.vertex_count(); ++v) {
    if (tv[v] != static_cast<VertexId>(-1)) continue;
    auto w = f.find_vertex(e.vertex_name(v));
    if (!w) throw SchemaError("tau: vertex '" + e.vertex_name(v) + "' has no image");
    tv[v] = *w;
  }
  return {te, tv};
}

inline PrefixHomeo make_homeo(const Graph& e, const Graph& f, const std::vector<std::pair<std::string, std::string>>& rules,
                              const std::map<std::string, std::string>& tau = {}) {
  PrefixHomeo phi;
  for (const auto& [mu, nu] : rules) phi.rules.push_back({parse_path(e, mu), parse_path(f, nu)});
  std::tie(phi.tau_edges, phi.tau_vertices) = relabel_by_name(e, f, tau);
  return phi;
}

inline PrefixHomeo identity_homeo(const Graph& e) {
  std::vector<std::pair<std::string, std::string>> rules;
  for (VertexId v = 0; v < e.vertex_count(); ++v) rules.push_back({e.vertex_name(v), e.vertex_name(v)});
  return make_homeo(e, e, rules);
}

inline PrefixHomeo inverse(const Graph& e, const Graph& f, const PrefixHomeo& phi) {
  PrefixHomeo inv;
  for (const auto& [mu, nu] : phi.rules) inv.rules.push_back({nu, mu});
  inv.tau_edges.assign(f.edge_count(), 0);
  inv.tau_vertices.assign(f.vertex_count(), 0);
  for (EdgeId i = 0; i < phi.tau_edges.size(); ++i) inv.tau_edges.at(phi.tau_edges[i]) = i;
  for (VertexId v = 0; v < phi.tau_vertices.size(); ++v) inv.tau_vertices.at(phi.tau_vertices[v]) = v;
  (void)e;
  return inv;
}

inline std::optional<std::size_t> rule_for(const PrefixHomeo& phi, const Path& stem) {
  for (std::size_t i = 0; i < phi.rules.size(); ++i)
    if (is_prefix(phi.rules[i].first, stem)) return i;
  return std::nullopt;
}

inline std::optional<std::size_t> rule_for(const PrefixHomeo& phi, const BoundaryPoint& x) {
  for (std::size_t i = 0; i < phi.rules.size(); ++i)
    if (x.starts_with(phi.rules[i].first)) return i;
  return std::nullopt;
}

inline BoundaryPoint apply(const Graph& e, const Graph& f, const PrefixHomeo& phi, const BoundaryPoint& x) {
  auto i = rule_for(phi, x);
  if (!i) throw DomainError("no rule of the homeomorphism covers " + to_string(e, x));
  const auto& [mu, nu] = phi.rules[*i];
  BoundaryPoint y = x.drop(e, mu.length());
  BoundaryPoint ty = y.is_finite()
                         ? BoundaryPoint::finite(f, detail::map_path(f, phi, y.stem()))
                         : BoundaryPoint::periodic(f, detail::map_path(f, phi, y.stem()),
                                                   detail::map_path(f, phi, *y.cycle()));
  return ty.prepend(f, nu);
}

// Image of the cylinder Z(stem) when a single rule covers it.
inline std::optional<Path> apply_stem(const Graph& f, const PrefixHomeo& phi, const Path& stem) {
  auto i = rule_for(phi, stem);
  if (!i) return std::nullopt;
  const auto& [mu, nu] = phi.rules[*i];
  std::vector<EdgeInstance> tail;
  for (std::size_t k = mu.length(); k < stem.length(); ++k) tail.push_back({phi.tau_edges.at(stem[k].edge), stem[k].copy});
  if (tail.empty()) return nu;
  return concat(f, nu, Path::of(f, tail));
}

struct CheckReport {
  bool pass = true;
  std::string failure;
  std::string witness;
  std::size_t checked = 0;
};

inline CheckReport validate_homeo(const Graph& e, const Graph& f, const PrefixHomeo& phi, std::size_t depth = 6) {
  detail::require_finite(e, "the source graph");
  detail::require_finite(f, "the target graph");
  CheckReport rep;
  auto fail = [&](std::string what, std::string witness) {
    rep.pass = false;
    rep.failure = std::move(what);
    rep.witness = std::move(witness);
    return rep;
  };
  if (phi.tau_edges.size() != e.edge_count() || e.edge_count() != f.edge_count() ||
      phi.tau_vertices.size() != e.vertex_count() || e.vertex_count() != f.vertex_count())
    return fail("tau_not_bijective", "size mismatch");
  std::set<EdgeId> seen_e(phi.tau_edges.begin(), phi.tau_edges.end());
  std::set<VertexId> seen_v(phi.tau_vertices.begin(), phi.tau_vertices.end());
  if (seen_e.size() != f.edge_count() || seen_v.size() != f.vertex_count()) return fail("tau_not_bijective", "");
  for (EdgeId i = 0; i < e.edge_count(); ++i) {
    const auto& src = e.edge(i);
    const auto& dst = f.edge(phi.tau_edges[i]);
    if (phi.tau_vertices[src.range] != dst.range || phi.tau_vertices[src.source] != dst.source ||
        src.multiplicity != dst.multiplicity)
      return fail("tau_not_a_graph_map", src.id);
  }
  for (const auto& [mu, nu] : phi.rules)
    if (phi.tau_vertices[mu.source()] != nu.source())
      return fail("rule_sources_mismatch", to_string(e, mu) + " -> " + to_string(f, nu));
  auto check_partition = [&](const Graph& g, bool left) -> std::optional<std::string> {
    CompactOpen parts;
    for (const auto& r : phi.rules) parts.push_back({left ? r.first : r.second, {}});
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        if (comparable(parts[i].stem, parts[j].stem))
          return "overlap " + to_string(g, parts[i].stem) + " / " + to_string(g, parts[j].stem);
    auto missing = difference(g, whole_space(g), parts);
    for (const auto& c : missing)
      if (!is_empty(g, c)) return "uncovered " + to_string(g, c);
    return std::nullopt;
  };
  if (auto bad = check_partition(e, true)) return fail("not_a_partition_of_source", *bad);
  if (auto bad = check_partition(f, false)) return fail("not_a_partition_of_target", *bad);
  auto inv = inverse(e, f, phi);
  for (const auto& x : enumerate_points(e, depth)) {
    ++rep.checked;
    if (apply(f, e, inv, apply(e, f, phi, x)) != x) return fail("not_injective", to_string(e, x));
  }
  for (const auto& y : enumerate_points(f, depth)) {
    ++rep.checked;
    if (apply(e, f, phi, apply(f, e, inv, y)) != y) return fail("not_surjective", to_string(f, y));
  }
  return rep;
}

// Locally constant group-valued map on {g} x dom(g) for the generators g.
struct CocycleEntry {
  ReducedWord g;
  Cylinder on;
  ReducedWord value;
};

struct Cocycle {
  std::vector<CocycleEntry> entries;

  std::optional<ReducedWord> at(const ReducedWord& g, const BoundaryPoint& x) const {
    for (const auto& en : entries)
      if (en.g == g && member(x, en.on)) return en.value;
    return std::nullopt;
  }
};

// a(w, x) for an arbitrary admissible word via a(g1 g2, x) = a(g1, g2.x) a(g2, x).
inline std::optional<ReducedWord> evaluate(const Graph& e, const Cocycle& a, const ReducedWord& w,
                                           const BoundaryPoint& x) {
  ReducedWord acc;
  BoundaryPoint cur = x;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    ReducedWord letter({*it});
    auto v = a.at(letter, cur);
    if (!v) return std::nullopt;
    acc = fg_mul(*v, acc);
    cur = act_point(e, letter, cur);
  }
  return acc;
}

// The cocycle forced by phi: refine dom(g) until single rules cover both the
// cylinder and its image, then a = phi-image of image stem times inverse of
// phi-image of the stem.
inline Cocycle derive_cocycle(const Graph& e, const Graph& f, const PrefixHomeo& phi, std::size_t max_depth = 8) {
  detail::require_finite(e, "the source graph");
  Cocycle out;
  for (const auto& w : generators(e)) {
    auto form = admissible_form(e, w);
    std::deque<Path> queue{form->beta};
    while (!queue.empty()) {
      Path kappa = queue.front();
      queue.pop_front();
      Path image = concat(e, form->alpha, drop(e, kappa, form->beta.length()));
      auto src = apply_stem(f, phi, kappa);
      auto dst = apply_stem(f, phi, image);
      if (src && dst) {
        out.entries.push_back({w, {kappa, {}}, word_of(*dst, *src)});
        continue;
      }
      if (kappa.length() - form->beta.length() >= max_depth)
        throw SizeError("derive_cocycle: refinement deeper than " + std::to_string(max_depth));
      for (auto inst : e.receiver_instances(kappa.source(), 1)) queue.push_back(extend(e, kappa, inst));
    }
  }
  return out;
}

inline CheckReport coe_check(const Graph& e, const Graph& f, const PrefixHomeo& phi, const Cocycle& a,
                             const Cocycle& b, std::size_t depth = 6) {
  CheckReport rep;
  auto inv = inverse(e, f, phi);
  auto run = [&](const Graph& x_graph, const Graph& y_graph, const PrefixHomeo& map, const Cocycle& c,
                 const char* name) -> bool {
    for (const auto& x : enumerate_points(x_graph, depth)) {
      for (const auto& g : generators(x_graph)) {
        if (!member(x, domain(x_graph, g))) continue;
        ++rep.checked;
        auto v = c.at(g, x);
        std::string where = std::string(name) + "(" + to_string(x_graph, g) + ", " + to_string(x_graph, x) + ")";
        if (!v) {
          rep.pass = false;
          rep.failure = std::string(name) + "_undefined";
          rep.witness = where;
          return false;
        }
        auto y = apply(x_graph, y_graph, map, x);
        if (!member(y, domain(y_graph, *v)) ||
            act_point(y_graph, *v, y) != apply(x_graph, y_graph, map, act_point(x_graph, g, x))) {
          rep.pass = false;
          rep.failure = std::string(name) + "_identity";
          rep.witness = where;
          return false;
        }
      }
    }
    return true;
  };
  if (run(e, f, phi, a, "a")) run(f, e, inv, b, "b");
  return rep;
}

// k, l on the source side and k', l' on the target side, each carried on a
// partition by cylinders.
struct OEData {
  std::vector<std::pair<Cylinder, long>> k, l, k_prime, l_prime;
};

inline std::optional<long> lookup(const std::vector<std::pair<Cylinder, long>>& m, const BoundaryPoint& x) {
  for (const auto& [c, v] : m)
    if (member(x, c)) return v;
  return std::nullopt;
}

inline std::optional<long> lookup(const Graph& g, const std::vector<std::pair<Cylinder, long>>& m,
                                  const Cylinder& c) {
  for (const auto& [part, v] : m)
    if (is_subset(g, {c}, {part})) return v;
  return std::nullopt;
}

namespace detail {

inline void read_off(const Graph& e, const Graph& f, const Cocycle& a, std::vector<std::pair<Cylinder, long>>& k,
                     std::vector<std::pair<Cylinder, long>>& l) {
  for (const auto& en : a.entries) {
    if (en.g.length() != 1 || en.g.letters().front().exponent > 0) continue;
    long kv = 0, lv = 0;
    if (!en.value.is_identity()) {
      auto form = admissible_form(f, en.value);
      if (!form) throw FormError("cocycle value " + to_string(f, en.value) + " is not of the form lambda kappa^-1");
      kv = static_cast<long>(form->alpha.length());
      lv = static_cast<long>(form->beta.length());
    }
    k.push_back({en.on, kv});
    l.push_back({en.on, lv});
  }
  for (VertexId v = 0; v < e.vertex_count(); ++v) {
    Cylinder rest{Path::vertex(v), {}};
    for (auto inst : e.receiver_instances(v, 1)) rest.exclusions.insert(inst);
    if (is_empty(e, rest)) continue;
    k.push_back({rest, 0});
    l.push_back({rest, 0});
  }
}

}  // namespace detail

inline OEData coe_to_oe(const Graph& e, const Graph& f, const PrefixHomeo& /*phi*/, const Cocycle& a,
                        const Cocycle& b) {
  OEData out;
  detail::read_off(e, f, a, out.k, out.l);
  detail::read_off(f, e, b, out.k_prime, out.l_prime);
  return out;
}

inline CheckReport oe_check(const Graph& e, const Graph& f, const PrefixHomeo& phi, const OEData& oe,
                            std::size_t depth = 6) {
  CheckReport rep;
  auto inv = inverse(e, f, phi);
  auto run = [&](const Graph& x_graph, const Graph& y_graph, const PrefixHomeo& map,
                 const std::vector<std::pair<Cylinder, long>>& km, const std::vector<std::pair<Cylinder, long>>& lm,
                 const char* side) -> bool {
    for (const auto& x : enumerate_points(x_graph, depth)) {
      if (!x.has_edge(0)) continue;
      auto k = lookup(km, x);
      auto l = lookup(lm, x);
      if (!k || !l) {
        rep.pass = false;
        rep.failure = std::string(side) + "_undefined";
        rep.witness = to_string(x_graph, x);
        return false;
      }
      auto lhs = apply(x_graph, y_graph, map, shift(x_graph, x));
      auto rhs = apply(x_graph, y_graph, map, x);
      auto defined = [](const BoundaryPoint& p, long n) { return !p.is_finite() || static_cast<long>(p.length()) >= n; };
      if (!defined(lhs, *k) || !defined(rhs, *l)) continue;
      ++rep.checked;
      if (lhs.drop(y_graph, static_cast<std::size_t>(*k)) != rhs.drop(y_graph, static_cast<std::size_t>(*l))) {
        rep.pass = false;
        rep.failure = std::string(side) + "_shift_identity";
        rep.witness = to_string(x_graph, x);
        return false;
      }
    }
    return true;
  };
  if (run(e, f, phi, oe.k, oe.l, "source")) run(f, e, inv, oe.k_prime, oe.l_prime, "target");
  return rep;
}

struct OETranslation {
  bool complete = true;
  std::string reason;
  Cocycle a;
  Cocycle b;
};

namespace detail {

// One direction of the inverse translation: for every edge zeta, refine
// Z(zeta) until k, l and the needed prefixes of phi are constant, then
// a(zeta^-1, .) = phi(sigma x)[0:k] phi(x)[0:l]^-1 and a(zeta, .) its inverse.
inline std::optional<std::string> translate(const Graph& e, const Graph& f, const PrefixHomeo& phi,
                                            const std::vector<std::pair<Cylinder, long>>& km,
                                            const std::vector<std::pair<Cylinder, long>>& lm, std::size_t depth,
                                            Cocycle& out) {
  for (EdgeId id = 0; id < e.edge_count(); ++id) {
    for (std::uint64_t c = 0; c < e.edge(id).multiplicity.count; ++c) {
      EdgeInstance zeta{id, c};
      ReducedWord pos({Letter{zeta, 1}});
      ReducedWord neg({Letter{zeta, -1}});
      std::deque<Path> queue{Path::edge(e, zeta)};
      while (!queue.empty()) {
        Path kappa = queue.front();
        queue.pop_front();
        Cylinder cyl{kappa, {}};
        auto k = lookup(e, km, cyl);
        auto l = lookup(e, lm, cyl);
        auto img_x = apply_stem(f, phi, kappa);
        Path shifted = drop(e, kappa, 1);
        auto img_sx = apply_stem(f, phi, shifted);
        if (k && l && img_x && img_sx && static_cast<long>(img_x->length()) >= *l &&
            static_cast<long>(img_sx->length()) >= *k) {
          auto value = word_of(prefix(f, *img_sx, static_cast<std::size_t>(*k)),
                               prefix(f, *img_x, static_cast<std::size_t>(*l)));
          out.entries.push_back({neg, cyl, value});
          out.entries.push_back({pos, {shifted, {}}, fg_inv(value)});
          continue;
        }
        if (kappa.length() > depth)
          return "no constant cylinder below " + to_string(e, Path::edge(e, zeta)) + " up to depth " +
                 std::to_string(depth);
        if (e.receivers(kappa.source()).empty())
          return "cylinder " + to_string(e, kappa) + " cannot be refined";
        for (auto inst : e.receiver_instances(kappa.source(), 1)) queue.push_back(extend(e, kappa, inst));
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline OETranslation oe_to_coe(const Graph& e, const Graph& f, const PrefixHomeo& phi, const OEData& oe,
                               std::size_t depth = 6) {
  detail::require_finite(e, "the source graph");
  detail::require_finite(f, "the target graph");
  if (!condition_L(e).holds) throw PreconditionError("condition (L) fails on the source graph");
  if (!condition_L(f).holds) throw PreconditionError("condition (L) fails on the target graph");
  OETranslation out;
  if (auto why = detail::translate(e, f, phi, oe.k, oe.l, depth, out.a)) {
    out.complete = false;
    out.reason = *why;
    return out;
  }
  auto inv = inverse(e, f, phi);
  if (auto why = detail::translate(f, e, inv, oe.k_prime, oe.l_prime, depth, out.b)) {
    out.complete = false;
    out.reason = *why;
  }
  return out;
}

inline nlohmann::json to_json(const Graph& e, const Graph& f, const PrefixHomeo& phi) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& [mu, nu] : phi.rules) rules.push_back({to_string(e, mu), to_string(f, nu)});
  nlohmann::json tau = nlohmann::json::object();
  for (EdgeId i = 0; i < phi.tau_edges.size(); ++i)
    if (e.edge(i).id != f.edge(phi.tau_edges[i]).id) tau[e.edge(i).id] = f.edge(phi.tau_edges[i]).id;
  return {{"phi", rules}, {"tau", tau}};
}

inline nlohmann::json to_json(const Graph& e, const Graph& f, const Cocycle& a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& en : a.entries)
    out.push_back({{"g", to_string(e, en.g)}, {"on", to_string(e, en.on)}, {"value", to_string(f, en.value)}});
  return out;
}

inline nlohmann::json to_json(const Graph& g, const std::vector<std::pair<Cylinder, long>>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [c, v] : m) out.push_back({{"on", to_string(g, c)}, {"value", v}});
  return out;
}

inline nlohmann::json to_json(const Graph& e, const Graph& f, const OEData& oe) {
  return {{"k", to_json(e, oe.k)}, {"l", to_json(e, oe.l)}, {"k_prime", to_json(f, oe.k_prime)},
          {"l_prime", to_json(f, oe.l_prime)}};
}

inline PrefixHomeo homeo_from_json(const Graph& e, const Graph& f, const nlohmann::json& j) {
  if (!j.contains("phi") || !j["phi"].is_array()) throw SchemaError("phi: expected an array of [stem_E, stem_F]");
  std::vector<std::pair<std::string, std::string>> rules;
  for (const auto& r : j["phi"]) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_string())
      throw SchemaError("phi: each rule is a pair of path strings");
    rules.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
  }
  std::map<std::string, std::string> tau;
  if (j.contains("tau")) {
    if (!j["tau"].is_object()) throw SchemaError("tau: expected an object of edge renamings");
    for (const auto& [k, v] : j["tau"].items()) tau[k] = v.get<std::string>();
  }
  return make_homeo(e, f, rules, tau);
}

inline Cocycle cocycle_from_json(const Graph& e, const Graph& f, const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw SchemaError(std::string(field) + ": expected an array");
  Cocycle out;
  for (const auto& en : j) {
    if (!en.contains("g") || !en.contains("on") || !en.contains("value"))
      throw SchemaError(std::string(field) + ": entries need g, on, value");
    out.entries.push_back({parse_word(e, en["g"].get<std::string>()), cylinder_from_json(e, en["on"]),
                           parse_word(f, en["value"].get<std::string>())});
  }
  return out;
}

inline std::vector<std::pair<Cylinder, long>> cylinder_map_from_json(const Graph& g, const nlohmann::json& j,
                                                                     const char* field) {
  if (!j.is_array()) throw SchemaError(std::string(field) + ": expected an array");
  std::vector<std::pair<Cylinder, long>> out;
  for (const auto& en : j) {
    if (!en.contains("on") || !en.contains("value") || !en["value"].is_number_integer() || en["value"].get<long>() < 0)
      throw SchemaError(std::string(field) + ": entries need on and a nonnegative integer value");
    out.push_back({cylinder_from_json(g, en["on"]), en["value"].get<long>()});
  }
  return out;
}

inline OEData oe_from_json(const Graph& e, const Graph& f, const nlohmann::json& j) {
  OEData out;
  for (const char* key : {"k", "l", "k_prime", "l_prime"})
    if (!j.contains(key)) throw SchemaError(std::string(key) + ": missing");
  out.k = cylinder_map_from_json(e, j["k"], "k");
  out.l = cylinder_map_from_json(e, j["l"], "l");
  out.k_prime = cylinder_map_from_json(f, j["k_prime"], "k_prime");
  out.l_prime = cylinder_map_from_json(f, j["l_prime"], "l_prime");
  return out;
}

}  // namespace gforge
