#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gforge/graph.hpp"

namespace gforge {

struct Letter {
  EdgeInstance edge;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {edge, -exponent}; }
  // positive letters sort before their inverses
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.edge <=> b.edge; c != 0) return c;
    return b.exponent <=> a.exponent;
  }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Element of the free group on the edge instances, kept reduced.
class ReducedWord {
 public:
  ReducedWord() = default;
  explicit ReducedWord(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
  }

  static ReducedWord identity() { return {}; }
  static ReducedWord from_path(const Path& p) {
    ReducedWord w;
    for (auto e : p.edges()) w.push({e, 1});
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  void push(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  friend auto operator<=>(const ReducedWord& a, const ReducedWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

inline ReducedWord fg_mul(const ReducedWord& u, const ReducedWord& v) {
  ReducedWord out = u;
  for (const auto& l : v.letters()) out.push(l);
  return out;
}

inline ReducedWord fg_inv(const ReducedWord& u) {
  ReducedWord out;
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push(it->inverse());
  return out;
}

inline ReducedWord operator*(const ReducedWord& u, const ReducedWord& v) { return fg_mul(u, v); }

// g = alpha beta^{-1} with alpha, beta paths and s(alpha) = s(beta). When one
// side is empty the other's source serves as the vertex.
struct Admissible {
  Path alpha;
  Path beta;
};

inline std::optional<Admissible> admissible_form(const Graph& g, const ReducedWord& w) {
  std::vector<EdgeInstance> pos;
  std::vector<EdgeInstance> neg;
  for (const auto& l : w.letters()) {
    if (l.exponent > 0) {
      if (!neg.empty()) return std::nullopt;
      pos.push_back(l.edge);
    } else {
      neg.push_back(l.edge);
    }
  }
  std::reverse(neg.begin(), neg.end());
  auto build = [&](const std::vector<EdgeInstance>& edges) -> std::optional<Path> {
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (g.range(edges[i]) != g.source(edges[i - 1])) return std::nullopt;
    return Path::of(g, edges);
  };
  if (pos.empty() && neg.empty()) return std::nullopt;  // identity has no vertex
  if (pos.empty()) {
    auto beta = build(neg);
    if (!beta) return std::nullopt;
    return Admissible{Path::vertex(beta->source()), *beta};
  }
  auto alpha = build(pos);
  if (!alpha) return std::nullopt;
  if (neg.empty()) return Admissible{*alpha, Path::vertex(alpha->source())};
  auto beta = build(neg);
  if (!beta || beta->source() != alpha->source()) return std::nullopt;
  return Admissible{*alpha, *beta};
}

inline bool is_admissible(const Graph& g, const ReducedWord& w) {
  return w.is_identity() || admissible_form(g, w).has_value();
}

// alpha beta^{-1}, reduced.
inline ReducedWord word_of(const Path& alpha, const Path& beta) {
  return fg_mul(ReducedWord::from_path(alpha), fg_inv(ReducedWord::from_path(beta)));
}

inline std::string to_string(const Graph& g, const ReducedWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (i) out += '.';
    out += g.instance_name(w.letters()[i].edge);
    if (w.letters()[i].exponent < 0) out += "^-1";
  }
  return out;
}

inline ReducedWord parse_word(const Graph& g, std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw SchemaError("empty word");
  if (text == "1") return {};
  std::vector<Letter> letters;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    auto token = trim(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    int exponent = 1;
    for (std::string_view suffix : {"^-1", "^{-1}"}) {
      if (token.size() > suffix.size() && token.ends_with(suffix)) {
        token.remove_suffix(suffix.size());
        exponent = -1;
        break;
      }
    }
    letters.push_back({g.parse_instance(token), exponent});
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return ReducedWord(letters);
}

// Generators E^1 u (E^1)^{-1}, infinite families sampled at `copies` copies.
inline std::vector<ReducedWord> generators(const Graph& g, std::uint64_t copies = 2) {
  std::vector<ReducedWord> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& m = g.edge(e).multiplicity;
    std::uint64_t n = m.infinite ? copies : m.count;
    for (std::uint64_t c = 0; c < n; ++c) {
      out.push_back(ReducedWord({{{e, c}, 1}}));
      out.push_back(ReducedWord({{{e, c}, -1}}));
    }
  }
  return out;
}

}  // namespace gforge
