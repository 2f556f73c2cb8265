#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/errors.hpp"

namespace gforge {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// Number of parallel copies carried by an edge record; either a positive
// integer or the symbolic value infinity.
struct Multiplicity {
  std::uint64_t count = 1;
  bool infinite = false;

  static constexpr Multiplicity finite(std::uint64_t n) { return {n, false}; }
  static constexpr Multiplicity unbounded() { return {0, true}; }

  constexpr bool admits(std::uint64_t copy) const { return infinite || copy < count; }
  friend constexpr bool operator==(const Multiplicity&, const Multiplicity&) = default;
};

// Cardinality of an edge set in N u {inf}.
struct Count {
  std::uint64_t finite = 0;
  bool infinite = false;

  constexpr bool is_zero() const { return !infinite && finite == 0; }
  constexpr Count& operator+=(Multiplicity m) {
    if (m.infinite) {
      infinite = true;
    } else {
      finite += m.count;
    }
    return *this;
  }
  friend constexpr bool operator==(const Count&, const Count&) = default;
};

struct EdgeRecord {
  std::string id;
  VertexId range = 0;
  VertexId source = 0;
  Multiplicity multiplicity;
};

// One concrete copy of a (possibly parallel) edge family.
struct EdgeInstance {
  EdgeId edge = 0;
  std::uint64_t copy = 0;

  friend constexpr auto operator<=>(const EdgeInstance&, const EdgeInstance&) = default;
};

enum class VertexClass { regular, singular };

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
  Multiplicity multiplicity;
};

namespace detail {

inline bool valid_name(std::string_view name) {
  if (name.empty() || name == "1") return false;
  constexpr std::string_view reserved = " \t\n.[]^{}(),+\\-!";
  return name.find_first_of(reserved) == std::string_view::npos &&
         name.find("\xE2\x88\x96") == std::string_view::npos;  // U+2216
}

}  // namespace detail

// Directed graph with range/source maps r, s : E1 -> E0. Paths grow at the
// source end: mu e is a path when r(e) = s(mu). Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(const std::vector<std::string>& vertices, const std::vector<EdgeSpec>& edges) {
    for (const auto& name : vertices) {
      if (!detail::valid_name(name)) throw SchemaError("vertices: invalid vertex id '" + name + "'");
      if (!vertex_index_.emplace(name, vertex_names_.size()).second)
        throw SchemaError("vertices: duplicate vertex id '" + name + "'");
      vertex_names_.push_back(name);
    }
    receivers_.resize(vertex_names_.size());
    emitters_.resize(vertex_names_.size());
    for (const auto& spec : edges) {
      if (!detail::valid_name(spec.id)) throw SchemaError("edges.id: invalid edge id '" + spec.id + "'");
      if (vertex_index_.contains(spec.id))
        throw SchemaError("edges.id: edge id '" + spec.id + "' collides with a vertex id");
      if (edge_index_.contains(spec.id)) throw SchemaError("edges.id: duplicate edge id '" + spec.id + "'");
      auto r = vertex_index_.find(spec.range);
      if (r == vertex_index_.end())
        throw SchemaError("edges.range: edge '" + spec.id + "' references unknown vertex '" + spec.range + "'");
      auto s = vertex_index_.find(spec.source);
      if (s == vertex_index_.end())
        throw SchemaError("edges.source: edge '" + spec.id + "' references unknown vertex '" + spec.source + "'");
      if (!spec.multiplicity.infinite && spec.multiplicity.count == 0)
        throw SchemaError("edges.multiplicity: edge '" + spec.id + "' has multiplicity 0");
      EdgeId id = edges_.size();
      edge_index_.emplace(spec.id, id);
      edges_.push_back({spec.id, r->second, s->second, spec.multiplicity});
      receivers_[r->second].push_back(id);
      emitters_[s->second].push_back(id);
    }
    compute_reachability();
  }

  static Graph from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("graph: expected a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array()) throw SchemaError("vertices: expected an array");
    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
      if (!v.is_string()) throw SchemaError("vertices: expected string ids");
      vertices.push_back(v.get<std::string>());
    }
    std::vector<EdgeSpec> edges;
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) throw SchemaError("edges: expected an array");
      for (const auto& e : j["edges"]) {
        if (!e.is_object()) throw SchemaError("edges: expected objects");
        for (const char* field : {"id", "range", "source"}) {
          if (!e.contains(field) || !e[field].is_string())
            throw SchemaError(std::string("edges.") + field + ": expected a string");
        }
        EdgeSpec spec{e["id"].get<std::string>(), e["range"].get<std::string>(), e["source"].get<std::string>(), {}};
        if (e.contains("multiplicity")) {
          const auto& m = e["multiplicity"];
          if (m.is_string() && m.get<std::string>() == "inf") {
            spec.multiplicity = Multiplicity::unbounded();
          } else if (m.is_number_integer() && m.get<std::int64_t>() >= 0) {
            spec.multiplicity = Multiplicity::finite(m.get<std::uint64_t>());
          } else {
            throw SchemaError("edges.multiplicity: edge '" + spec.id + "' expects a positive integer or \"inf\"");
          }
        }
        edges.push_back(std::move(spec));
      }
    }
    return Graph(vertices, edges);
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["vertices"] = vertex_names_;
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges_) {
      nlohmann::json je{{"id", e.id}, {"range", vertex_names_[e.range]}, {"source", vertex_names_[e.source]}};
      if (e.multiplicity.infinite) {
        je["multiplicity"] = "inf";
      } else {
        je["multiplicity"] = e.multiplicity.count;
      }
      j["edges"].push_back(je);
    }
    return j;
  }

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const EdgeRecord& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<EdgeRecord>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<EdgeId> find_edge(std::string_view name) const {
    auto it = edge_index_.find(std::string(name));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw DomainError("unknown vertex '" + std::string(name) + "'");
  }

  // Edge families e with r(e) = v, i.e. the possible continuations of a
  // path whose source is v.
  const std::vector<EdgeId>& receivers(VertexId v) const { return receivers_.at(v); }
  // Edge families e with s(e) = v.
  const std::vector<EdgeId>& emitters(VertexId v) const { return emitters_.at(v); }

  // |r^{-1}(v)| counted with multiplicity.
  Count receiver_count(VertexId v) const {
    Count c;
    for (EdgeId e : receivers(v)) c += edges_[e].multiplicity;
    return c;
  }

  bool is_infinite_receiver(VertexId v) const { return receiver_count(v).infinite; }
  bool is_regular(VertexId v) const {
    Count c = receiver_count(v);
    return !c.infinite && c.finite > 0;
  }
  bool is_singular(VertexId v) const { return !is_regular(v); }
  VertexClass vertex_class(VertexId v) const { return is_regular(v) ? VertexClass::regular : VertexClass::singular; }

  VertexId range(EdgeInstance i) const { return edges_.at(i.edge).range; }
  VertexId source(EdgeInstance i) const { return edges_.at(i.edge).source; }

  bool valid_instance(EdgeInstance i) const {
    return i.edge < edges_.size() && edges_[i.edge].multiplicity.admits(i.copy);
  }

  // Receiver instances at v; an infinite family contributes `sample` copies.
  std::vector<EdgeInstance> receiver_instances(VertexId v, std::uint64_t sample) const {
    std::vector<EdgeInstance> out;
    for (EdgeId e : receivers(v)) {
      const auto& m = edges_[e].multiplicity;
      std::uint64_t n = m.infinite ? sample : m.count;
      for (std::uint64_t c = 0; c < n; ++c) out.push_back({e, c});
    }
    return out;
  }

  // w <- v : some path mu has r(mu) = w and s(mu) = v (length 0 allowed).
  bool reaches(VertexId w, VertexId v) const { return reach_.at(w).at(v); }

  std::string instance_name(EdgeInstance i) const {
    const auto& rec = edges_.at(i.edge);
    if (!rec.multiplicity.infinite && rec.multiplicity.count == 1) return rec.id;
    return rec.id + "[" + std::to_string(i.copy) + "]";
  }

  EdgeInstance parse_instance(std::string_view token) const {
    std::string_view name = token;
    std::uint64_t copy = 0;
    if (auto open = token.find('['); open != std::string_view::npos) {
      if (token.back() != ']') throw SchemaError("malformed edge instance '" + std::string(token) + "'");
      name = token.substr(0, open);
      auto digits = token.substr(open + 1, token.size() - open - 2);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw SchemaError("malformed copy index in '" + std::string(token) + "'");
      copy = std::stoull(std::string(digits));
    }
    auto e = find_edge(name);
    if (!e) throw SchemaError("unknown edge '" + std::string(name) + "'");
    EdgeInstance inst{*e, copy};
    if (!valid_instance(inst)) throw SchemaError("copy index out of range in '" + std::string(token) + "'");
    return inst;
  }

 private:
  void compute_reachability() {
    const std::size_t n = vertex_names_.size();
    reach_.assign(n, std::vector<bool>(n, false));
    for (VertexId w = 0; w < n; ++w) {
      std::deque<VertexId> queue{w};
      reach_[w][w] = true;
      while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (EdgeId e : receivers_[x]) {
          VertexId y = edges_[e].source;
          if (!reach_[w][y]) {
            reach_[w][y] = true;
            queue.push_back(y);
          }
        }
      }
    }
  }

  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeId>> receivers_;
  std::vector<std::vector<EdgeId>> emitters_;
  std::vector<std::vector<bool>> reach_;
};

inline Graph load_graph(const nlohmann::json& raw) { return Graph::from_json(raw); }

// Omega(v) = { w != v : no path from v to w }.
inline std::set<VertexId> omega_set(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw DomainError("unknown vertex");
  std::set<VertexId> out;
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w != v && !g.reaches(w, v)) out.insert(w);
  }
  return out;
}

// Finite path mu = e_1 ... e_n with s(e_i) = r(e_{i+1}); a vertex for n = 0.
class Path {
 public:
  Path() = default;

  static Path vertex(VertexId v) {
    Path p;
    p.range_ = p.source_ = v;
    return p;
  }

  static Path of(const Graph& g, std::vector<EdgeInstance> edges) {
    if (edges.empty()) throw CompositionError("use Path::vertex for length-0 paths");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!g.valid_instance(edges[i])) throw CompositionError("invalid edge instance in path");
      if (i > 0 && g.range(edges[i]) != g.source(edges[i - 1]))
        throw CompositionError("path is not composable at position " + std::to_string(i));
    }
    Path p;
    p.range_ = g.range(edges.front());
    p.source_ = g.source(edges.back());
    p.edges_ = std::move(edges);
    return p;
  }

  static Path edge(const Graph& g, EdgeInstance e) { return of(g, {e}); }

  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  std::size_t length() const { return edges_.size(); }
  bool is_vertex() const { return edges_.empty(); }
  const std::vector<EdgeInstance>& edges() const { return edges_; }
  const EdgeInstance& operator[](std::size_t i) const { return edges_[i]; }

  friend auto operator<=>(const Path& a, const Path& b) {
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.range_ <=> b.range_;
  }
  friend bool operator==(const Path& a, const Path& b) = default;

 private:
  VertexId range_ = 0;
  VertexId source_ = 0;
  std::vector<EdgeInstance> edges_;
};

// mu nu, defined when r(nu) = s(mu).
inline Path concat(const Graph& g, const Path& mu, const Path& nu) {
  if (nu.range() != mu.source())
    throw CompositionError("cannot concatenate: r(nu) = " + g.vertex_name(nu.range()) +
                           " but s(mu) = " + g.vertex_name(mu.source()));
  if (mu.is_vertex()) return nu;
  if (nu.is_vertex()) return mu;
  std::vector<EdgeInstance> edges = mu.edges();
  edges.insert(edges.end(), nu.edges().begin(), nu.edges().end());
  return Path::of(g, std::move(edges));
}

inline Path extend(const Graph& g, const Path& mu, EdgeInstance e) { return concat(g, mu, Path::edge(g, e)); }

// First n edges of mu.
inline Path prefix(const Graph& g, const Path& mu, std::size_t n) {
  if (n > mu.length()) throw DomainError("prefix longer than path");
  if (n == 0) return Path::vertex(mu.range());
  return Path::of(g, {mu.edges().begin(), mu.edges().begin() + static_cast<std::ptrdiff_t>(n)});
}

// mu with its first n edges removed.
inline Path drop(const Graph& g, const Path& mu, std::size_t n) {
  if (n > mu.length()) throw DomainError("drop longer than path");
  if (n == mu.length()) return Path::vertex(mu.source());
  return Path::of(g, {mu.edges().begin() + static_cast<std::ptrdiff_t>(n), mu.edges().end()});
}

// nu = mu nu' for some nu'.
inline bool is_prefix(const Path& mu, const Path& nu) {
  if (mu.range() != nu.range() || mu.length() > nu.length()) return false;
  return std::equal(mu.edges().begin(), mu.edges().end(), nu.edges().begin());
}

inline bool comparable(const Path& mu, const Path& nu) { return is_prefix(mu, nu) || is_prefix(nu, mu); }

inline std::string to_string(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.range());
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += '.';
    out += g.instance_name(p[i]);
  }
  return out;
}

inline Path parse_path(const Graph& g, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw SchemaError("empty path");
  if (auto v = g.find_vertex(text)) return Path::vertex(*v);
  std::vector<EdgeInstance> edges;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto token = trim(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    edges.push_back(g.parse_instance(token));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return Path::of(g, std::move(edges));
}

// All paths with at most `max_length` edges, infinite families sampled at
// `copies` copies, in order of length then lexicographic.
inline std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_length, std::uint64_t copies = 2) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::vertex(v));
  out = frontier;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (auto inst : g.receiver_instances(p.source(), copies)) next.push_back(extend(g, p, inst));
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace gforge
