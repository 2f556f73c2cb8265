#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/graph.hpp"
#include "gforge/words.hpp"

namespace gforge {

// A boundary path: either finite with singular source, or prefix.cycle^inf
// with r(cycle) = s(cycle) = s(prefix). Kept in canonical form.
class BoundaryPoint {
 public:
  BoundaryPoint() = default;

  static BoundaryPoint finite(const Graph& g, const Path& p) {
    if (!g.is_singular(p.source()))
      throw DomainError("finite boundary paths must end at a singular vertex, " + g.vertex_name(p.source()) +
                        " is regular");
    BoundaryPoint x;
    x.prefix_ = p;
    return x;
  }

  static BoundaryPoint periodic(const Graph& g, const Path& prefix, const Path& cycle) {
    if (cycle.is_vertex()) throw DomainError("cycle must have positive length");
    if (cycle.range() != cycle.source() || cycle.range() != prefix.source())
      throw CompositionError("cycle must be a loop based at the source of the prefix");
    BoundaryPoint x;
    x.prefix_ = prefix;
    x.cycle_ = cycle;
    x.canonicalize(g);
    return x;
  }

  bool is_finite() const { return !cycle_.has_value(); }
  const Path& stem() const { return prefix_; }
  const std::optional<Path>& cycle() const { return cycle_; }
  VertexId range() const { return prefix_.range(); }
  // Number of edges; only meaningful for finite points.
  std::size_t length() const { return prefix_.length(); }
  bool has_edge(std::size_t i) const { return cycle_ || i < prefix_.length(); }

  EdgeInstance edge_at(std::size_t i) const {
    if (i < prefix_.length()) return prefix_[i];
    if (!cycle_) throw DomainError("index past the end of a finite boundary path");
    return (*cycle_)[(i - prefix_.length()) % cycle_->length()];
  }

  // The first n edges as a path.
  Path head(const Graph& g, std::size_t n) const {
    if (n == 0) return Path::vertex(range());
    std::vector<EdgeInstance> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back(edge_at(i));
    return Path::of(g, es);
  }

  // shift^k
  BoundaryPoint drop(const Graph& g, std::size_t k) const {
    if (!cycle_) {
      if (k > prefix_.length()) throw DomainError("shift is undefined past the end of a finite path");
      BoundaryPoint x;
      x.prefix_ = gforge::drop(g, prefix_, k);
      return x;
    }
    if (k <= prefix_.length()) return periodic(g, gforge::drop(g, prefix_, k), *cycle_);
    std::size_t r = (k - prefix_.length()) % cycle_->length();
    Path rotated = rotate_left(g, *cycle_, r);
    return periodic(g, Path::vertex(rotated.range()), rotated);
  }

  // mu . x, for s(mu) = r(x).
  BoundaryPoint prepend(const Graph& g, const Path& mu) const {
    if (mu.source() != range()) throw CompositionError("cannot prepend: s(mu) differs from r(x)");
    if (!cycle_) {
      BoundaryPoint x;
      x.prefix_ = concat(g, mu, prefix_);
      return x;
    }
    return periodic(g, concat(g, mu, prefix_), *cycle_);
  }

  bool starts_with(const Path& mu) const {
    if (mu.range() != range()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
      if (!has_edge(i) || edge_at(i) != mu[i]) return false;
    return true;
  }

  // Complexity used by the enumerators: |prefix| + |cycle|.
  std::size_t complexity() const { return prefix_.length() + (cycle_ ? cycle_->length() : 0); }

  friend auto operator<=>(const BoundaryPoint&, const BoundaryPoint&) = default;
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  static Path rotate_left(const Graph& g, const Path& c, std::size_t r) {
    if (r == 0) return c;
    std::vector<EdgeInstance> es(c.edges().begin() + static_cast<std::ptrdiff_t>(r), c.edges().end());
    es.insert(es.end(), c.edges().begin(), c.edges().begin() + static_cast<std::ptrdiff_t>(r));
    return Path::of(g, es);
  }

  void canonicalize(const Graph& g) {
    auto es = cycle_->edges();
    const std::size_t n = es.size();
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      bool periodic = true;
      for (std::size_t i = d; i < n && periodic; ++i) periodic = es[i] == es[i - d];
      if (periodic) {
        es.resize(d);
        break;
      }
    }
    auto pre = prefix_.edges();
    while (!pre.empty() && pre.back() == es.back()) {
      pre.pop_back();
      std::rotate(es.rbegin(), es.rbegin() + 1, es.rend());
    }
    VertexId base = g.range(es.front());
    prefix_ = pre.empty() ? Path::vertex(base) : Path::of(g, pre);
    cycle_ = Path::of(g, es);
  }

  Path prefix_;
  std::optional<Path> cycle_;
};

inline std::string to_string(const Graph& g, const BoundaryPoint& x) {
  if (x.is_finite()) return to_string(g, x.stem());
  std::string c = "(" + to_string(g, *x.cycle()) + ")^inf";
  if (x.stem().is_vertex()) return c;
  return to_string(g, x.stem()) + "." + c;
}

// Accepts "a.b", "v", "(a)^inf", "b.(a.b)^inf".
inline BoundaryPoint parse_point(const Graph& g, std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto open = text.find('(');
  if (open == std::string_view::npos) return BoundaryPoint::finite(g, parse_path(g, text));
  if (!text.ends_with(")^inf")) throw SchemaError("periodic point must end in ')^inf'");
  auto cycle = parse_path(g, text.substr(open + 1, text.size() - open - 6));
  if (open == 0) return BoundaryPoint::periodic(g, Path::vertex(cycle.range()), cycle);
  auto pre = text.substr(0, open);
  if (!pre.ends_with('.')) throw SchemaError("expected '.' before the periodic part");
  return BoundaryPoint::periodic(g, parse_path(g, pre.substr(0, pre.size() - 1)), cycle);
}

// shift; undefined on vertices.
inline BoundaryPoint shift(const Graph& g, const BoundaryPoint& x) {
  if (!x.has_edge(0)) throw DomainError("shift is not defined on a vertex");
  return x.drop(g, 1);
}

// Z(stem \ exclusions), intersected with the boundary.
struct Cylinder {
  Path stem;
  std::set<EdgeInstance> exclusions;

  friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

using CompactOpen = std::vector<Cylinder>;

inline Cylinder cylinder(const Graph& g, const Path& stem, std::set<EdgeInstance> exclusions = {}) {
  for (auto e : exclusions)
    if (!g.valid_instance(e) || g.range(e) != stem.source())
      throw CompositionError("exclusion " + g.instance_name(e) + " does not start at s(stem)");
  return {stem, std::move(exclusions)};
}

inline bool member(const BoundaryPoint& x, const Cylinder& c) {
  if (!x.starts_with(c.stem)) return false;
  std::size_t n = c.stem.length();
  return !x.has_edge(n) || !c.exclusions.contains(x.edge_at(n));
}

inline bool member(const BoundaryPoint& x, const CompactOpen& u) {
  return std::any_of(u.begin(), u.end(), [&](const Cylinder& c) { return member(x, c); });
}

// Every vertex of a finite graph starts a boundary path, so a cylinder is
// empty exactly when s(stem) is regular and all receivers are excluded.
inline bool is_empty(const Graph& g, const Cylinder& c) {
  VertexId v = c.stem.source();
  if (!g.is_regular(v)) return false;
  return c.exclusions.size() >= g.receiver_count(v).finite;
}

inline bool is_empty(const Graph& g, const CompactOpen& u) {
  return std::all_of(u.begin(), u.end(), [&](const Cylinder& c) { return is_empty(g, c); });
}

// A canonical boundary path starting at v: follow the first receiver until
// a singular vertex or a repeated vertex.
inline BoundaryPoint default_tail(const Graph& g, VertexId v) {
  std::vector<EdgeInstance> es;
  std::map<VertexId, std::size_t> seen{{v, 0}};
  VertexId at = v;
  while (g.is_regular(at)) {
    EdgeInstance e{g.receivers(at).front(), 0};
    es.push_back(e);
    at = g.source(e);
    if (auto it = seen.find(at); it != seen.end()) {
      std::vector<EdgeInstance> pre(es.begin(), es.begin() + static_cast<std::ptrdiff_t>(it->second));
      std::vector<EdgeInstance> cyc(es.begin() + static_cast<std::ptrdiff_t>(it->second), es.end());
      return BoundaryPoint::periodic(g, pre.empty() ? Path::vertex(v) : Path::of(g, pre), Path::of(g, cyc));
    }
    seen.emplace(at, es.size());
  }
  return BoundaryPoint::finite(g, es.empty() ? Path::vertex(v) : Path::of(g, es));
}

inline std::optional<BoundaryPoint> witness_point(const Graph& g, const Cylinder& c) {
  if (is_empty(g, c)) return std::nullopt;
  VertexId v = c.stem.source();
  if (g.is_singular(v)) return BoundaryPoint::finite(g, c.stem);
  for (auto e : g.receiver_instances(v, 1)) {
    if (c.exclusions.contains(e)) continue;
    return default_tail(g, g.source(e)).prepend(g, extend(g, c.stem, e));
  }
  return std::nullopt;
}

// Intersection of two cylinders; at most one cylinder.
inline std::optional<Cylinder> intersect(const Cylinder& a, const Cylinder& b) {
  if (is_prefix(a.stem, b.stem)) {
    if (a.stem.length() == b.stem.length()) {
      Cylinder c = a;
      c.exclusions.insert(b.exclusions.begin(), b.exclusions.end());
      return c;
    }
    if (a.exclusions.contains(b.stem[a.stem.length()])) return std::nullopt;
    return b;
  }
  if (is_prefix(b.stem, a.stem)) return intersect(b, a);
  return std::nullopt;
}

// a \ b as a disjoint list of cylinders.
inline CompactOpen difference(const Graph& g, const Cylinder& a, const Cylinder& b) {
  const Path& mu = a.stem;
  const Path& nu = b.stem;
  if (!comparable(mu, nu)) return {a};
  if (mu.length() > nu.length()) {
    if (b.exclusions.contains(mu[nu.length()])) return {a};
    return {};
  }
  CompactOpen out;
  if (mu.length() == nu.length()) {
    for (auto h : b.exclusions)
      if (!a.exclusions.contains(h)) out.push_back({extend(g, mu, h), {}});
    return out;
  }
  if (a.exclusions.contains(nu[mu.length()])) return {a};
  Cylinder first = a;
  first.exclusions.insert(nu[mu.length()]);
  out.push_back(first);
  for (std::size_t i = mu.length() + 1; i < nu.length(); ++i) out.push_back({prefix(g, nu, i), {nu[i]}});
  for (auto h : b.exclusions) out.push_back({extend(g, nu, h), {}});
  return out;
}

inline CompactOpen difference(const Graph& g, const CompactOpen& a, const CompactOpen& b) {
  CompactOpen cur = a;
  for (const auto& cb : b) {
    CompactOpen next;
    for (const auto& ca : cur) {
      auto d = difference(g, ca, cb);
      next.insert(next.end(), d.begin(), d.end());
    }
    cur = std::move(next);
  }
  return cur;
}

inline CompactOpen intersect(const CompactOpen& a, const CompactOpen& b) {
  CompactOpen out;
  for (const auto& ca : a)
    for (const auto& cb : b)
      if (auto c = intersect(ca, cb)) out.push_back(*c);
  return out;
}

// Canonical order: longer stems first, then lexicographic.
inline bool canonical_less(const Cylinder& a, const Cylinder& b) {
  if (a.stem.length() != b.stem.length()) return a.stem.length() > b.stem.length();
  return a < b;
}

// Disjoint refinement with the same union: longer stems are kept whole and
// shorter ones receive exclusions or get split.
inline CompactOpen normalize(const Graph& g, CompactOpen sets) {
  std::sort(sets.begin(), sets.end(), canonical_less);
  CompactOpen out;
  for (const auto& c : sets) {
    auto rest = difference(g, CompactOpen{c}, out);
    for (auto& r : rest)
      if (!is_empty(g, r)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

inline CompactOpen unite(const Graph& g, const CompactOpen& a, const CompactOpen& b) {
  CompactOpen all = a;
  all.insert(all.end(), b.begin(), b.end());
  return normalize(g, all);
}

inline bool is_subset(const Graph& g, const CompactOpen& a, const CompactOpen& b) {
  return is_empty(g, difference(g, a, b));
}

inline bool same_set(const Graph& g, const CompactOpen& a, const CompactOpen& b) {
  return is_subset(g, a, b) && is_subset(g, b, a);
}

inline CompactOpen whole_space(const Graph& g) {
  CompactOpen out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back({Path::vertex(v), {}});
  return out;
}

// Z(beta) for g = alpha beta^{-1}; everything for the identity; empty for
// words outside the image of sigma.
inline CompactOpen domain(const Graph& g, const ReducedWord& w) {
  if (w.is_identity()) return whole_space(g);
  auto form = admissible_form(g, w);
  if (!form) return {};
  return {{form->beta, {}}};
}

inline BoundaryPoint act_point(const Graph& g, const ReducedWord& w, const BoundaryPoint& x) {
  if (w.is_identity()) return x;
  auto form = admissible_form(g, w);
  if (!form || !x.starts_with(form->beta)) throw DomainError("point is not in the domain of the word");
  return x.drop(g, form->beta.length()).prepend(g, form->alpha);
}

inline std::optional<Cylinder> act_cylinder(const Graph& g, const Admissible& form, const Cylinder& c) {
  const Path& beta = form.beta;
  if (is_prefix(beta, c.stem)) return Cylinder{concat(g, form.alpha, drop(g, c.stem, beta.length())), c.exclusions};
  if (is_prefix(c.stem, beta)) {
    if (c.exclusions.contains(beta[c.stem.length()])) return std::nullopt;
    return Cylinder{form.alpha, {}};
  }
  return std::nullopt;
}

inline CompactOpen act_set(const Graph& g, const ReducedWord& w, const CompactOpen& u) {
  if (w.is_identity()) return normalize(g, u);
  auto form = admissible_form(g, w);
  if (!form) return {};
  CompactOpen out;
  for (const auto& c : u)
    if (auto img = act_cylinder(g, *form, c)) out.push_back(*img);
  return normalize(g, out);
}

// Boundary points with range v and complexity <= depth; infinite families
// sampled at `copies` copies.
inline std::vector<BoundaryPoint> enumerate_points_from(const Graph& g, VertexId v, std::size_t depth,
                                                        std::uint64_t copies = 2) {
  std::set<BoundaryPoint> out;
  std::vector<Path> frontier{Path::vertex(v)};
  std::vector<Path> all = frontier;
  for (std::size_t len = 1; len <= depth; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (auto e : g.receiver_instances(p.source(), copies)) next.push_back(extend(g, p, e));
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& p : all) {
    if (g.is_singular(p.source())) out.insert(BoundaryPoint::finite(g, p));
    for (std::size_t i = 0; i < p.length(); ++i) {
      Path pre = prefix(g, p, i);
      Path cyc = gforge::drop(g, p, i);
      if (cyc.range() == cyc.source()) out.insert(BoundaryPoint::periodic(g, pre, cyc));
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<BoundaryPoint> enumerate_points(const Graph& g, std::size_t depth, std::uint64_t copies = 2) {
  std::vector<BoundaryPoint> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto pts = enumerate_points_from(g, v, depth, copies);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

// Members of c of the form stem.y with y of complexity <= depth.
inline std::vector<BoundaryPoint> points_in(const Graph& g, const Cylinder& c, std::size_t depth) {
  std::vector<BoundaryPoint> out;
  for (const auto& y : enumerate_points_from(g, c.stem.source(), depth)) {
    auto x = y.prepend(g, c.stem);
    if (member(x, c)) out.push_back(x);
  }
  return out;
}

inline std::vector<BoundaryPoint> points_in(const Graph& g, const CompactOpen& u, std::size_t depth) {
  std::set<BoundaryPoint> out;
  for (const auto& c : u)
    for (auto& x : points_in(g, c, depth)) out.insert(std::move(x));
  return {out.begin(), out.end()};
}

// Admissible alpha beta^{-1} with |alpha| + |beta| <= n and x in Z(beta).
inline std::vector<ReducedWord> admissible_words(const Graph& g, const BoundaryPoint& x, std::size_t n) {
  std::set<ReducedWord> out;
  for (std::size_t j = 0; j <= n && (j == 0 || x.has_edge(j - 1)); ++j) {
    Path beta = x.head(g, j);
    for (const auto& alpha : enumerate_paths(g, n - j)) {
      if (alpha.source() != beta.source()) continue;
      out.insert(word_of(alpha, beta));
    }
  }
  return {out.begin(), out.end()};
}

// All admissible words with |alpha| + |beta| <= n, identity first.
inline std::vector<ReducedWord> all_admissible_words(const Graph& g, std::size_t n, std::uint64_t copies = 2) {
  std::set<ReducedWord> out{ReducedWord{}};
  auto paths = enumerate_paths(g, n, copies);
  for (const auto& alpha : paths)
    for (const auto& beta : paths)
      if (alpha.source() == beta.source() && alpha.length() + beta.length() <= n) out.insert(word_of(alpha, beta));
  return {out.begin(), out.end()};
}

inline std::string to_string(const Graph& g, const Cylinder& c) {
  std::string out = "Z(" + to_string(g, c.stem);
  if (!c.exclusions.empty()) {
    out += " \xE2\x88\x96 {";
    bool first = true;
    for (auto e : c.exclusions) {
      if (!first) out += ", ";
      first = false;
      out += g.instance_name(e);
    }
    out += "}";
  }
  return out + ")";
}

inline std::string to_string(const Graph& g, const CompactOpen& u) {
  if (u.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += " + ";
    out += to_string(g, u[i]);
  }
  return out;
}

inline nlohmann::json to_json(const Graph& g, const Cylinder& c) {
  nlohmann::json ex = nlohmann::json::array();
  for (auto e : c.exclusions) ex.push_back(g.instance_name(e));
  return {{"stem", to_string(g, c.stem)}, {"exclusions", ex}};
}

inline nlohmann::json to_json(const Graph& g, const CompactOpen& u) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : u) out.push_back(to_json(g, c));
  return out;
}

// set      := cylinder { "+" cylinder }
// cylinder := "Z(" stem [ minus "{" edge { "," edge } "}" ] ")"
// minus    := "-" | "\" | U+2216
inline CompactOpen parse_set(const Graph& g, std::string_view text) {
  CompactOpen out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& what) -> SchemaError {
    return SchemaError("set expression: " + what + " at offset " + std::to_string(i));
  };
  while (true) {
    skip();
    if (text.substr(i, 2) != "Z(") throw fail("expected 'Z('");
    i += 2;
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw fail("missing ')'");
    std::string_view body = text.substr(i, close - i);
    std::string_view stem = body;
    std::set<EdgeInstance> ex;
    std::size_t brace = body.find('{');
    if (brace != std::string_view::npos) {
      std::string_view head = body.substr(0, brace);
      while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
      if (head.ends_with("-") || head.ends_with("\\")) {
        head.remove_suffix(1);
      } else if (head.ends_with("\xE2\x88\x96")) {
        head.remove_suffix(3);
      } else {
        throw fail("expected '-' before exclusions");
      }
      stem = head;
      auto end = body.find('}', brace);
      if (end == std::string_view::npos || body.substr(end + 1).find_first_not_of(' ') != std::string_view::npos)
        throw fail("malformed exclusion list");
      std::string_view list = body.substr(brace + 1, end - brace - 1);
      std::size_t start = 0;
      while (start < list.size()) {
        auto comma = list.find(',', start);
        auto tok = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty()) ex.insert(g.parse_instance(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    Path p = parse_path(g, stem);
    out.push_back(cylinder(g, p, ex));
    i = close + 1;
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') throw fail("expected '+'");
    ++i;
  }
  return out;
}

// Accepts {"stem", "exclusions"} objects or a single "Z(...)" string.
inline Cylinder cylinder_from_json(const Graph& g, const nlohmann::json& j) {
  if (j.is_string()) {
    auto parts = parse_set(g, j.get<std::string>());
    if (parts.size() != 1) throw SchemaError("cylinder: expected a single Z(...) term");
    return parts.front();
  }
  if (!j.is_object() || !j.contains("stem") || !j["stem"].is_string())
    throw SchemaError("cylinder: expected {stem, exclusions}");
  std::set<EdgeInstance> ex;
  if (j.contains("exclusions"))
    for (const auto& e : j["exclusions"]) ex.insert(g.parse_instance(e.get<std::string>()));
  return cylinder(g, parse_path(g, j["stem"].get<std::string>()), ex);
}

inline CompactOpen compact_open_from_json(const Graph& g, const nlohmann::json& j) {
  if (j.is_string()) return parse_set(g, j.get<std::string>());
  if (!j.is_array()) throw SchemaError("compact open: expected an array of cylinders");
  CompactOpen out;
  for (const auto& c : j) out.push_back(cylinder_from_json(g, c));
  return out;
}

}  // namespace gforge
