#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/boundary.hpp"
#include "gforge/freeness.hpp"

namespace gforge {

// (g, x) with x in the domain of g.
struct PTGElement {
  ReducedWord g;
  BoundaryPoint x;
  friend auto operator<=>(const PTGElement&, const PTGElement&) = default;
};

inline PTGElement make_ptg(const Graph& gr, const ReducedWord& g, const BoundaryPoint& x) {
  if (!member(x, domain(gr, g))) throw DomainError("point is not in the domain of the word");
  return {g, x};
}

inline BoundaryPoint ptg_source(const PTGElement& p) { return p.x; }
inline BoundaryPoint ptg_range(const Graph& gr, const PTGElement& p) { return act_point(gr, p.g, p.x); }

// (g1, g2.x)(g2, x) = (g1 g2, x)
inline PTGElement ptg_compose(const Graph& gr, const PTGElement& p, const PTGElement& q) {
  if (p.x != ptg_range(gr, q)) throw CompositionError("elements are not composable");
  return {fg_mul(p.g, q.g), q.x};
}

inline PTGElement ptg_inv(const Graph& gr, const PTGElement& p) { return {fg_inv(p.g), ptg_range(gr, p)}; }

// (alpha, n, beta) with shift^k alpha = shift^l beta, n = k - l; the
// witness with the least k is stored.
struct DRElement {
  BoundaryPoint alpha;
  long n = 0;
  BoundaryPoint beta;
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const DRElement& a, const DRElement& b) {
    return a.alpha == b.alpha && a.n == b.n && a.beta == b.beta;
  }
};

namespace detail {

inline std::size_t shift_limit(const BoundaryPoint& x) {
  return x.is_finite() ? x.length() : x.stem().length() + x.cycle()->length();
}

}  // namespace detail

inline std::optional<DRElement> find_dr(const Graph& gr, const BoundaryPoint& alpha, long n,
                                        const BoundaryPoint& beta) {
  const std::size_t ca = alpha.is_finite() ? 0 : alpha.cycle()->length();
  const std::size_t cb = beta.is_finite() ? 0 : beta.cycle()->length();
  const std::size_t limit = detail::shift_limit(alpha) + detail::shift_limit(beta) +
                            static_cast<std::size_t>(n < 0 ? -n : n) + ca * cb + 2;
  for (std::size_t k = n > 0 ? static_cast<std::size_t>(n) : 0; k <= limit; ++k) {
    long lsigned = static_cast<long>(k) - n;
    if (lsigned < 0) continue;
    std::size_t l = static_cast<std::size_t>(lsigned);
    if (alpha.is_finite() && k > alpha.length()) break;
    if (beta.is_finite() && l > beta.length()) break;
    if (alpha.drop(gr, k) == beta.drop(gr, l)) return DRElement{alpha, n, beta, k, l};
  }
  return std::nullopt;
}

inline DRElement make_dr(const Graph& gr, const BoundaryPoint& alpha, long n, const BoundaryPoint& beta) {
  if (auto d = find_dr(gr, alpha, n, beta)) return *d;
  throw DomainError("no k, l with n = k - l and shift^k(alpha) = shift^l(beta)");
}

inline DRElement dr_compose(const Graph& gr, const DRElement& p, const DRElement& q) {
  if (p.beta != q.alpha) throw CompositionError("middle points differ");
  return make_dr(gr, p.alpha, p.n + q.n, q.beta);
}

inline DRElement dr_inv(const Graph& gr, const DRElement& p) { return make_dr(gr, p.beta, -p.n, p.alpha); }

// (lambda mu^{-1}, mu y) |-> (lambda y, |lambda| - |mu|, mu y)
inline DRElement to_dr(const Graph& gr, const PTGElement& p) {
  if (p.g.is_identity()) return make_dr(gr, p.x, 0, p.x);
  auto form = admissible_form(gr, p.g);
  if (!form) throw DomainError("word is not admissible");
  long n = static_cast<long>(form->alpha.length()) - static_cast<long>(form->beta.length());
  return make_dr(gr, ptg_range(gr, p), n, p.x);
}

// (lambda y, n, mu y) |-> (lambda mu^{-1}, mu y) read off the least-k witness
inline PTGElement to_ptg(const Graph& gr, const DRElement& d) {
  return {word_of(d.alpha.head(gr, d.k), d.beta.head(gr, d.l)), d.beta};
}

inline nlohmann::json to_json(const Graph& gr, const PTGElement& p) {
  return {{"g", to_string(gr, p.g)}, {"x", to_string(gr, p.x)}};
}

inline nlohmann::json to_json(const Graph& gr, const DRElement& d) {
  return {{"alpha", to_string(gr, d.alpha)}, {"n", d.n}, {"beta", to_string(gr, d.beta)}};
}

// All (g, x) with g admissible of size <= word_bound and x of complexity <= depth.
inline std::vector<PTGElement> ptg_elements(const Graph& gr, std::size_t depth, std::size_t word_bound,
                                            std::uint64_t copies = 2) {
  auto pts = enumerate_points(gr, depth, copies);
  std::vector<PTGElement> out;
  for (const auto& w : all_admissible_words(gr, word_bound, copies)) {
    auto dom = domain(gr, w);
    for (const auto& x : pts)
      if (member(x, dom)) out.push_back({w, x});
  }
  return out;
}

struct RoundtripReport {
  bool pass = true;
  std::size_t elements = 0;
  std::size_t pairs = 0;
  std::size_t depth = 0;
  std::size_t word_bound = 0;
  std::optional<PTGElement> failed_element;
  std::optional<std::pair<PTGElement, PTGElement>> failed_pair;
};

// to_ptg o to_dr = id, both maps respect inverses, and to_dr is
// multiplicative on composable pairs (sampled deterministically up to max_pairs).
inline RoundtripReport roundtrip_report(const Graph& gr, std::size_t depth, std::size_t word_bound,
                                        std::size_t max_pairs = 20000) {
  RoundtripReport rep;
  rep.depth = depth;
  rep.word_bound = word_bound;
  auto elems = ptg_elements(gr, depth, word_bound);
  rep.elements = elems.size();
  std::map<BoundaryPoint, std::vector<std::size_t>> by_source;
  std::vector<DRElement> images;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const auto& p = elems[i];
    auto d = to_dr(gr, p);
    images.push_back(d);
    if (to_ptg(gr, d) != p || to_dr(gr, ptg_inv(gr, p)) != dr_inv(gr, d) || d.alpha != ptg_range(gr, p) ||
        d.beta != p.x) {
      rep.pass = false;
      rep.failed_element = p;
      return rep;
    }
    by_source[p.x].push_back(i);
  }
  std::size_t total = 0;
  for (const auto& q : elems) total += by_source.count(ptg_range(gr, q)) ? by_source[ptg_range(gr, q)].size() : 0;
  std::size_t stride = total > max_pairs ? (total + max_pairs - 1) / max_pairs : 1;
  std::size_t counter = 0;
  for (std::size_t j = 0; j < elems.size(); ++j) {
    auto it = by_source.find(ptg_range(gr, elems[j]));
    if (it == by_source.end()) continue;
    for (std::size_t i : it->second) {
      if (counter++ % stride) continue;
      ++rep.pairs;
      auto composed = ptg_compose(gr, elems[i], elems[j]);
      if (to_dr(gr, composed) != dr_compose(gr, images[i], images[j])) {
        rep.pass = false;
        rep.failed_pair = {elems[i], elems[j]};
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace gforge
