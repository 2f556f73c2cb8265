#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gforge/graph.hpp"
#include "gforge/words.hpp"

namespace gforge {

// Nonzero element (mu, nu) of the graph inverse semigroup, s(mu) = s(nu).
struct SgpPair {
  Path mu;
  Path nu;
  friend auto operator<=>(const SgpPair&, const SgpPair&) = default;
};

// std::nullopt is the zero element.
using SgpElement = std::optional<SgpPair>;

inline SgpElement make_sgp(const Graph& g, const Path& mu, const Path& nu) {
  if (mu.source() != nu.source())
    throw CompositionError("semigroup element needs s(mu) = s(nu), got " + g.vertex_name(mu.source()) + " and " +
                           g.vertex_name(nu.source()));
  return SgpPair{mu, nu};
}

inline SgpElement sgp_mul(const Graph& g, const SgpElement& x, const SgpElement& y) {
  if (!x || !y) return std::nullopt;
  const auto& [mu, nu] = *x;
  const auto& [zeta, eta] = *y;
  if (is_prefix(nu, zeta)) return SgpPair{concat(g, mu, drop(g, zeta, nu.length())), eta};
  if (is_prefix(zeta, nu)) return SgpPair{mu, concat(g, eta, drop(g, nu, zeta.length()))};
  return std::nullopt;
}

inline SgpElement sgp_star(const SgpElement& x) {
  if (!x) return std::nullopt;
  return SgpPair{x->nu, x->mu};
}

inline bool is_idempotent(const SgpElement& x) { return !x || x->mu == x->nu; }

// Semilattice of idempotents, identified with paths plus zero.
inline std::optional<Path> slat_meet(const Path& mu, const Path& nu) {
  if (is_prefix(mu, nu)) return nu;
  if (is_prefix(nu, mu)) return mu;
  return std::nullopt;
}

inline ReducedWord sigma(const SgpElement& x) {
  if (!x) throw DomainError("sigma is undefined at zero");
  return word_of(x->mu, x->nu);
}

// All nonzero (mu, nu) with |mu|, |nu| <= depth.
inline std::vector<SgpPair> sgp_elements(const Graph& g, std::size_t depth, std::uint64_t copies = 2) {
  auto paths = enumerate_paths(g, depth, copies);
  std::vector<SgpPair> out;
  for (const auto& mu : paths)
    for (const auto& nu : paths)
      if (mu.source() == nu.source()) out.push_back({mu, nu});
  std::sort(out.begin(), out.end());
  return out;
}

struct PartialHomReport {
  bool pass = true;
  std::size_t elements = 0;
  std::size_t products = 0;
  std::string violation;  // "idempotent_pure" or "multiplicative"
  std::optional<SgpPair> witness_s;
  std::optional<SgpPair> witness_t;
};

// Exhaustive check that sigma is an idempotent pure partial homomorphism on
// elements of path length <= depth. `sig` defaults to the canonical map.
template <class Sigma>
PartialHomReport verify_partial_hom(const Graph& g, std::size_t depth, Sigma sig) {
  PartialHomReport rep;
  auto elems = sgp_elements(g, depth);
  rep.elements = elems.size();
  for (const auto& s : elems) {
    bool idem = s.mu == s.nu;
    if (sig(SgpElement(s)).is_identity() != idem) {
      rep.pass = false;
      rep.violation = "idempotent_pure";
      rep.witness_s = s;
      return rep;
    }
  }
  for (const auto& s : elems) {
    for (const auto& t : elems) {
      auto st = sgp_mul(g, s, t);
      if (!st) continue;
      ++rep.products;
      if (sig(st) != fg_mul(sig(SgpElement(s)), sig(SgpElement(t)))) {
        rep.pass = false;
        rep.violation = "multiplicative";
        rep.witness_s = s;
        rep.witness_t = t;
        return rep;
      }
    }
  }
  return rep;
}

inline PartialHomReport verify_partial_hom(const Graph& g, std::size_t depth) {
  return verify_partial_hom(g, depth, [](const SgpElement& x) { return sigma(x); });
}

// Elements s with sigma(s) = w and |mu|, |nu| <= bound.
inline std::vector<SgpPair> sigma_witnesses(const Graph& g, const ReducedWord& w, std::size_t bound) {
  std::vector<SgpPair> out;
  std::vector<std::pair<Path, Path>> bases;
  if (w.is_identity()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) bases.push_back({Path::vertex(v), Path::vertex(v)});
  } else if (auto form = admissible_form(g, w)) {
    bases.push_back({form->alpha, form->beta});
  }
  for (const auto& [alpha, beta] : bases) {
    std::size_t longest = std::max(alpha.length(), beta.length());
    if (longest > bound) continue;
    for (const auto& gamma : enumerate_paths(g, bound - longest)) {
      if (gamma.range() != alpha.source()) continue;
      out.push_back({concat(g, alpha, gamma), concat(g, beta, gamma)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Idempotents of path length <= depth, infinite families sampled at
// `copies` copies.
struct TruncatedSemilattice {
  std::size_t depth = 0;
  std::vector<Path> elements;
};

inline TruncatedSemilattice truncate(const Graph& g, std::size_t depth, std::uint64_t copies = 2) {
  return {depth, enumerate_paths(g, depth, copies)};
}

// A filter in a truncated semilattice is the set of prefixes of its top
// path, so characters are stored by their top.
struct Character {
  Path top;
  friend auto operator<=>(const Character&, const Character&) = default;

  bool operator()(const Path& e) const { return is_prefix(e, top); }
};

inline std::vector<Path> filter_members(const Graph& g, const Character& chi) {
  std::vector<Path> out;
  for (std::size_t i = 0; i <= chi.top.length(); ++i) out.push_back(prefix(g, chi.top, i));
  return out;
}

inline std::vector<Character> characters(const TruncatedSemilattice& ts) {
  std::vector<Character> out;
  for (const auto& p : ts.elements) out.push_back({p});
  return out;
}

inline bool is_maximal(const Graph& g, const TruncatedSemilattice& ts, const Character& chi) {
  return chi.top.length() == ts.depth || g.receivers(chi.top.source()).empty();
}

inline std::vector<Character> max_characters(const Graph& g, const TruncatedSemilattice& ts) {
  std::vector<Character> out;
  for (const auto& p : ts.elements)
    if (is_maximal(g, ts, {p})) out.push_back({p});
  return out;
}

// Finite stages are discrete: the boundary is the set of maximal characters.
inline std::vector<Character> boundary(const Graph& g, const TruncatedSemilattice& ts) { return max_characters(g, ts); }

enum class CharacterMode {
  exact,    // chi is the principal filter of its top; images beyond the stage are errors
  restrict  // chi is only known on the stage; images are truncated to it
};

// e |-> chi(s* e s) for s = (mu, nu) with sigma(s) = w.
inline Character act_on_character(const Graph& g, const TruncatedSemilattice& ts, const ReducedWord& w,
                                  const Character& chi, const SgpPair& s,
                                  CharacterMode mode = CharacterMode::exact) {
  if (sigma(SgpElement(s)) != w) throw DomainError("witness does not satisfy sigma(s) = g");
  if (!chi(s.nu)) throw DomainError("character is outside the domain: chi(s*s) = 0");
  Path rho = drop(g, chi.top, s.nu.length());
  Path image = concat(g, s.mu, rho);
  if (mode == CharacterMode::exact) {
    if (image.length() > ts.depth) throw DomainError("image character leaves the truncation");
    return {image};
  }
  bool determined = s.nu.length() <= s.mu.length() || chi.top.length() < ts.depth ||
                    g.receivers(chi.top.source()).empty();
  if (!determined) throw DomainError("image character is not determined at this depth");
  return {prefix(g, image, std::min(image.length(), ts.depth))};
}

struct InvarianceReport {
  bool pass = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::pair<ReducedWord, Character>> violations;
};

// Boundary characters are mapped to boundary characters by every generator
// wherever the image is determined at the stage.
inline InvarianceReport check_boundary_invariance(const Graph& g, std::size_t depth) {
  auto ts = truncate(g, depth);
  auto bd = boundary(g, ts);
  InvarianceReport rep;
  for (const auto& w : generators(g)) {
    const auto& l = w.letters().front();
    Path e = Path::edge(g, l.edge);
    Path v = Path::vertex(e.source());
    SgpPair s = l.exponent > 0 ? SgpPair{e, v} : SgpPair{v, e};
    for (const auto& chi : bd) {
      if (!chi(s.nu)) continue;
      Character image;
      try {
        image = act_on_character(g, ts, w, chi, s, CharacterMode::restrict);
      } catch (const DomainError&) {
        ++rep.skipped;
        continue;
      }
      ++rep.checked;
      if (!is_maximal(g, ts, image)) {
        rep.pass = false;
        rep.violations.push_back({w, chi});
      }
    }
  }
  return rep;
}

}  // namespace gforge
