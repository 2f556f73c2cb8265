#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "gforge/errors.hpp"

namespace gforge::sgp {

using Int = long long;
using Rat = boost::rational<Int>;

// N^k in Z^k, the free monoid F_n^+ in F_n, and Z x| Z^x in Q x| Q^x.
enum class Tag { natural, free_monoid, axb };

struct Family {
  Tag tag = Tag::natural;
  int rank = 1;
  friend bool operator==(const Family&, const Family&) = default;
};

inline constexpr std::string_view free_letters = "xyzuvwst";

inline Family parse_family(std::string_view s) {
  auto number = [&](std::string_view digits) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw SchemaError("family: expected N^k, F+n or Z_axb, got '" + std::string(s) + "'");
    return std::stoi(std::string(digits));
  };
  if (s == "Z_axb") return {Tag::axb, 1};
  if (s == "N") return {Tag::natural, 1};
  if (s.starts_with("N^")) {
    int k = number(s.substr(2));
    if (k < 1 || k > 6) throw SchemaError("family: N^k needs 1 <= k <= 6");
    return {Tag::natural, k};
  }
  if (s.starts_with("F+")) {
    int n = number(s.substr(2));
    if (n < 1 || n > static_cast<int>(free_letters.size())) throw SchemaError("family: F+n needs 1 <= n <= 8");
    return {Tag::free_monoid, n};
  }
  throw SchemaError("family: expected N^k, F+n or Z_axb, got '" + std::string(s) + "'");
}

inline std::string family_name(const Family& f) {
  switch (f.tag) {
    case Tag::natural: return "N^" + std::to_string(f.rank);
    case Tag::free_monoid: return "F+" + std::to_string(f.rank);
    case Tag::axb: return "Z_axb";
  }
  return "";
}

// Group element: coordinates in Z^k, a reduced word in F_n (letter i+1 or
// -(i+1)), or the affine map t -> b + a t.
struct Element {
  std::vector<Int> coords;
  std::vector<int> word;
  Rat b{0};
  Rat a{1};
  friend bool operator==(const Element&, const Element&) = default;
};

inline Element identity(const Family& f) {
  Element e;
  if (f.tag == Tag::natural) e.coords.assign(static_cast<std::size_t>(f.rank), 0);
  return e;
}

inline Element natural(std::vector<Int> c) { return {std::move(c), {}, Rat(0), Rat(1)}; }
inline Element affine(Rat b, Rat a) { return {{}, {}, b, a}; }
inline Element free_word(std::vector<int> w) {
  Element e;
  for (int l : w) {
    if (!e.word.empty() && e.word.back() == -l) e.word.pop_back();
    else e.word.push_back(l);
  }
  return e;
}

inline Element mul(const Family& f, const Element& x, const Element& y) {
  switch (f.tag) {
    case Tag::natural: {
      Element out = x;
      for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += y.coords.at(i);
      return out;
    }
    case Tag::free_monoid: {
      std::vector<int> w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      return free_word(w);
    }
    case Tag::axb: return affine(x.b + x.a * y.b, x.a * y.a);
  }
  return x;
}

inline Element inv(const Family& f, const Element& x) {
  switch (f.tag) {
    case Tag::natural: {
      Element out = x;
      for (auto& c : out.coords) c = -c;
      return out;
    }
    case Tag::free_monoid: {
      std::vector<int> w(x.word.rbegin(), x.word.rend());
      for (auto& l : w) l = -l;
      return free_word(w);
    }
    case Tag::axb: return affine(-x.b / x.a, Rat(1) / x.a);
  }
  return x;
}

inline bool in_P(const Family& f, const Element& x) {
  switch (f.tag) {
    case Tag::natural: return std::all_of(x.coords.begin(), x.coords.end(), [](Int c) { return c >= 0; });
    case Tag::free_monoid: return std::all_of(x.word.begin(), x.word.end(), [](int l) { return l > 0; });
    case Tag::axb: return x.b.denominator() == 1 && x.a.denominator() == 1 && x.a.numerator() != 0;
  }
  return false;
}

inline std::string to_string(const Family& f, const Element& x) {
  std::ostringstream os;
  auto rat = [](const Rat& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
  };
  switch (f.tag) {
    case Tag::natural:
      if (x.coords.size() == 1) return std::to_string(x.coords[0]);
      os << "(";
      for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i];
      os << ")";
      return os.str();
    case Tag::free_monoid:
      if (x.word.empty()) return "e";
      for (int l : x.word) {
        os << free_letters[static_cast<std::size_t>(std::abs(l) - 1)];
        if (l < 0) os << "^-1";
      }
      return os.str();
    case Tag::axb: return "(" + rat(x.b) + "," + rat(x.a) + ")";
  }
  return "";
}

namespace detail {

inline std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

inline Int parse_int(std::string_view s) {
  std::string t = trim(s);
  std::size_t used = 0;
  Int v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw SchemaError("expected an integer, got '" + t + "'");
  }
  if (used != t.size()) throw SchemaError("expected an integer, got '" + t + "'");
  return v;
}

inline Rat parse_rat(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int d = parse_int(s.substr(slash + 1));
  if (d == 0) throw SchemaError("zero denominator");
  return Rat(parse_int(s.substr(0, slash)), d);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

inline std::vector<std::string> tuple_parts(std::string_view s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw SchemaError("expected (..,..), got '" + t + "'");
  return split(std::string_view(t).substr(1, t.size() - 2), ',');
}

inline int letter_index(const Family& f, char c) {
  auto i = free_letters.find(c);
  if (i == std::string_view::npos || static_cast<int>(i) >= f.rank)
    throw SchemaError(std::string("letter '") + c + "' is not a generator of " + family_name(f));
  return static_cast<int>(i) + 1;
}

}  // namespace detail

inline Element parse_element(const Family& f, std::string_view text) {
  std::string s = detail::trim(text);
  switch (f.tag) {
    case Tag::natural: {
      std::vector<Int> c;
      if (!s.empty() && s.front() == '(') {
        for (const auto& p : detail::tuple_parts(s)) c.push_back(detail::parse_int(p));
      } else {
        c.push_back(detail::parse_int(s));
      }
      if (static_cast<int>(c.size()) != f.rank)
        throw SchemaError("element '" + s + "' needs " + std::to_string(f.rank) + " coordinates");
      return natural(c);
    }
    case Tag::free_monoid: {
      if (s == "e") return identity(f);
      std::vector<int> w;
      for (std::size_t i = 0; i < s.size(); ++i) {
        int l = detail::letter_index(f, s[i]);
        if (s.compare(i + 1, 3, "^-1") == 0) {
          l = -l;
          i += 3;
        }
        w.push_back(l);
      }
      if (w.empty()) throw SchemaError("empty word; write e for the identity");
      return free_word(w);
    }
    case Tag::axb: {
      auto parts = detail::tuple_parts(s);
      if (parts.size() != 2) throw SchemaError("affine element is written (b,a)");
      Rat a = detail::parse_rat(parts[1]);
      if (a.numerator() == 0) throw SchemaError("affine element needs a != 0");
      return affine(detail::parse_rat(parts[0]), a);
    }
  }
  return identity(f);
}

// Constructible ideal: p + N^k, wP, or (x + mZ) x (mZ minus 0); all three
// are principal, generated by `generator`.
struct Ideal {
  bool empty = false;
  std::vector<Int> offset;
  std::vector<int> word;
  Int x = 0;
  Int m = 1;
  friend auto operator<=>(const Ideal&, const Ideal&) = default;
};

inline Ideal whole(const Family& f) {
  Ideal i;
  if (f.tag == Tag::natural) i.offset.assign(static_cast<std::size_t>(f.rank), 0);
  return i;
}

inline Ideal empty_ideal() {
  Ideal i;
  i.empty = true;
  return i;
}

inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Ideal residue_ideal(Int x, Int m) {
  if (m <= 0) throw SchemaError("modulus must be positive");
  Ideal i;
  i.x = mod(x, m);
  i.m = m;
  return i;
}

// size used by bounds: largest offset, word length, or modulus
inline Int ideal_size(const Family& f, const Ideal& i) {
  if (i.empty) return 0;
  switch (f.tag) {
    case Tag::natural: return i.offset.empty() ? 0 : *std::max_element(i.offset.begin(), i.offset.end());
    case Tag::free_monoid: return static_cast<Int>(i.word.size());
    case Tag::axb: return i.m;
  }
  return 0;
}

inline Element generator(const Family& f, const Ideal& i) {
  switch (f.tag) {
    case Tag::natural: return natural(i.offset);
    case Tag::free_monoid: return free_word(i.word);
    case Tag::axb: return affine(Rat(i.x), Rat(i.m));
  }
  return identity(f);
}

inline bool contains(const Family& f, const Ideal& i, const Element& p) {
  if (i.empty || !in_P(f, p)) return false;
  switch (f.tag) {
    case Tag::natural:
      for (std::size_t k = 0; k < i.offset.size(); ++k)
        if (p.coords.at(k) < i.offset[k]) return false;
      return true;
    case Tag::free_monoid:
      return p.word.size() >= i.word.size() && std::equal(i.word.begin(), i.word.end(), p.word.begin());
    case Tag::axb:
      return mod(p.b.numerator(), i.m) == i.x && p.a.numerator() % i.m == 0;
  }
  return false;
}

// chi_p(X) = 1 iff p in X
inline bool chi(const Family& f, const Element& p, const Ideal& x) { return contains(f, x, p); }

// pX for p in P
inline Ideal left_mul(const Family& f, const Element& p, const Ideal& x) {
  if (!in_P(f, p)) throw DomainError(to_string(f, p) + " is not in P");
  if (x.empty) return x;
  switch (f.tag) {
    case Tag::natural: {
      Ideal out = x;
      for (std::size_t k = 0; k < out.offset.size(); ++k) out.offset[k] += p.coords.at(k);
      return out;
    }
    case Tag::free_monoid: {
      Ideal out = x;
      out.word = mul(f, p, free_word(x.word)).word;
      return out;
    }
    case Tag::axb: {
      Int a = p.a.numerator(), b = p.b.numerator();
      return residue_ideal(b + a * x.x, std::abs(a) * x.m);
    }
  }
  return x;
}

// p^{-1}X = {y in P : py in X} for p in P
inline Ideal left_div(const Family& f, const Element& p, const Ideal& x) {
  if (!in_P(f, p)) throw DomainError(to_string(f, p) + " is not in P");
  if (x.empty) return x;
  switch (f.tag) {
    case Tag::natural: {
      Ideal out = x;
      for (std::size_t k = 0; k < out.offset.size(); ++k) out.offset[k] = std::max<Int>(0, x.offset[k] - p.coords.at(k));
      return out;
    }
    case Tag::free_monoid: {
      const auto& w = x.word;
      const auto& q = p.word;
      std::size_t n = std::min(w.size(), q.size());
      if (!std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n), q.begin())) return empty_ideal();
      Ideal out;
      out.word.assign(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
      return out;
    }
    case Tag::axb: {
      Int a = p.a.numerator(), b = p.b.numerator();
      Int g = std::gcd(a, x.m);
      Int rhs = mod(x.x - b, x.m);
      if (rhs % g != 0) return empty_ideal();
      Int m2 = x.m / g;
      if (m2 == 1) return residue_ideal(0, 1);
      // y = (rhs/g) * (a/g)^{-1} mod m2
      Int ag = mod(a / g, m2), inv_a = 1;
      for (Int t = 1; t < m2; ++t)
        if (mod(ag * t, m2) == 1) {
          inv_a = t;
          break;
        }
      return residue_ideal(mod((rhs / g) % m2 * inv_a, m2), m2);
    }
  }
  return x;
}

inline Ideal intersect(const Family& f, const Ideal& u, const Ideal& v) {
  if (u.empty || v.empty) return empty_ideal();
  switch (f.tag) {
    case Tag::natural: {
      Ideal out = u;
      for (std::size_t k = 0; k < out.offset.size(); ++k) out.offset[k] = std::max(u.offset[k], v.offset[k]);
      return out;
    }
    case Tag::free_monoid: {
      const auto& a = u.word.size() >= v.word.size() ? u : v;
      const auto& b = u.word.size() >= v.word.size() ? v : u;
      return std::equal(b.word.begin(), b.word.end(), a.word.begin()) ? a : empty_ideal();
    }
    case Tag::axb: {
      Int g = std::gcd(u.m, v.m);
      if (mod(u.x - v.x, g) != 0) return empty_ideal();
      Int l = std::lcm(u.m, v.m);
      for (Int t = u.x; t < u.x + l; t += u.m)
        if (mod(t, v.m) == v.x) return residue_ideal(t, l);
      return empty_ideal();
    }
  }
  return u;
}

inline bool subset(const Family& f, const Ideal& u, const Ideal& v) { return u.empty || contains(f, v, generator(f, u)); }

inline std::string to_string(const Family& f, const Ideal& i) {
  if (i.empty) return "empty";
  switch (f.tag) {
    case Tag::natural: {
      std::string base = f.rank == 1 ? "N" : "N^" + std::to_string(f.rank);
      if (std::all_of(i.offset.begin(), i.offset.end(), [](Int c) { return c == 0; })) return base;
      return to_string(f, natural(i.offset)) + "+" + base;
    }
    case Tag::free_monoid: return i.word.empty() ? "P" : to_string(f, free_word(i.word)) + "P";
    case Tag::axb: return std::to_string(i.x) + "+" + std::to_string(i.m) + "Z";
  }
  return "";
}

inline Ideal parse_ideal(const Family& f, std::string_view text) {
  std::string s = detail::trim(text);
  if (s == "empty") return empty_ideal();
  switch (f.tag) {
    case Tag::natural: {
      std::string base = f.rank == 1 ? "N" : "N^" + std::to_string(f.rank);
      if (s == base || s == "P") return whole(f);
      if (!s.ends_with("+" + base)) throw SchemaError("ideal '" + s + "': expected p+" + base);
      Ideal out;
      out.offset = parse_element(f, std::string_view(s).substr(0, s.size() - base.size() - 1)).coords;
      if (!in_P(f, natural(out.offset))) throw SchemaError("ideal '" + s + "': offset must lie in P");
      return out;
    }
    case Tag::free_monoid: {
      if (s == "P") return whole(f);
      if (!s.ends_with("P")) throw SchemaError("ideal '" + s + "': expected wP");
      auto w = parse_element(f, std::string_view(s).substr(0, s.size() - 1));
      if (!in_P(f, w)) throw SchemaError("ideal '" + s + "': w must be a positive word");
      Ideal out;
      out.word = w.word;
      return out;
    }
    case Tag::axb: {
      auto plus = s.rfind('+');
      if (plus == std::string::npos || !s.ends_with("Z")) throw SchemaError("ideal '" + s + "': expected x+mZ");
      std::string m = detail::trim(std::string_view(s).substr(plus + 1, s.size() - plus - 2));
      return residue_ideal(detail::parse_int(std::string_view(s).substr(0, plus)), m.empty() ? 1 : detail::parse_int(m));
    }
  }
  return whole(f);
}

// Generating elements used by default: unit vectors, letters, (1,1), (0,2), (0,3).
inline std::vector<Element> default_generators(const Family& f) {
  std::vector<Element> out;
  switch (f.tag) {
    case Tag::natural:
      for (int k = 0; k < f.rank; ++k) {
        std::vector<Int> c(static_cast<std::size_t>(f.rank), 0);
        c[static_cast<std::size_t>(k)] = 1;
        out.push_back(natural(c));
      }
      break;
    case Tag::free_monoid:
      for (int k = 1; k <= f.rank; ++k) out.push_back(free_word({k}));
      break;
    case Tag::axb:
      out.push_back(affine(Rat(1), Rat(1)));
      out.push_back(affine(Rat(0), Rat(2)));
      out.push_back(affine(Rat(0), Rat(3)));
      break;
  }
  return out;
}

struct Closure {
  std::vector<Ideal> ideals;
  bool partial = false;  // something was generated beyond the bound
};

// closure of {P} under X -> pX and X -> p^{-1}X, cut at the bound
inline Closure ideal_closure(const Family& f, const std::vector<Element>& gens, Int bound) {
  Closure out;
  std::set<Ideal> seen{whole(f)};
  std::vector<Ideal> frontier{whole(f)};
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const auto& x : frontier)
      for (const auto& p : gens)
        for (const auto& y : {left_mul(f, p, x), left_div(f, p, x)}) {
          if (ideal_size(f, y) > bound) {
            out.partial = true;
            continue;
          }
          if (seen.insert(y).second) next.push_back(y);
        }
    frontier = std::move(next);
  }
  out.ideals.assign(seen.begin(), seen.end());
  std::sort(out.ideals.begin(), out.ideals.end(), [&](const Ideal& a, const Ideal& b) {
    if (a.empty != b.empty) return b.empty;
    if (ideal_size(f, a) != ideal_size(f, b)) return ideal_size(f, a) < ideal_size(f, b);
    return a < b;
  });
  return out;
}

// Elements of X used to decide covers: generator times small elements of P.
inline std::vector<Element> sample(const Family& f, const Ideal& x) {
  std::vector<Element> out;
  if (x.empty) return out;
  Element g = generator(f, x);
  switch (f.tag) {
    case Tag::natural: {
      std::vector<Int> c(static_cast<std::size_t>(f.rank), 0);
      for (;;) {
        out.push_back(mul(f, g, natural(c)));
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > 2) c[k++] = 0;
        if (k == c.size()) break;
      }
      break;
    }
    case Tag::free_monoid: {
      std::vector<std::vector<int>> words{{}};
      for (std::size_t len = 0; len < 2; ++len) {
        std::vector<std::vector<int>> more;
        for (const auto& w : words)
          if (w.size() == len)
            for (int l = 1; l <= f.rank; ++l) {
              auto v = w;
              v.push_back(l);
              more.push_back(v);
            }
        words.insert(words.end(), more.begin(), more.end());
      }
      for (const auto& w : words) out.push_back(mul(f, g, free_word(w)));
      break;
    }
    case Tag::axb:
      for (Int t = -2; t <= 2; ++t)
        for (Int s : {1, -1, 2, -2, 3}) out.push_back(mul(f, g, affine(Rat(t), Rat(s))));
      break;
  }
  return out;
}

struct IndependenceVerdict {
  bool independent = true;
  std::optional<Ideal> covered;
  std::vector<Ideal> cover;
  std::size_t ideals = 0;
  std::size_t cap = 0;
};

// Looks for X = X_1 u ... u X_r with every X_i a proper subideal of X, r <= cap.
inline IndependenceVerdict independence_check(const Family& f, const std::vector<Ideal>& ideals, std::size_t cap = 3) {
  IndependenceVerdict v;
  v.ideals = ideals.size();
  v.cap = cap;
  for (const auto& x : ideals) {
    if (x.empty) continue;
    std::vector<Ideal> parts;
    for (const auto& y : ideals)
      if (!y.empty && y != x && subset(f, y, x)) parts.push_back(y);
    auto pts = sample(f, x);
    auto covers = [&](const std::vector<Ideal>& c) {
      return std::all_of(pts.begin(), pts.end(), [&](const Element& p) {
        return std::any_of(c.begin(), c.end(), [&](const Ideal& y) { return contains(f, y, p); });
      });
    };
    if (!covers(parts)) continue;
    // smallest sub-cover up to the cap
    std::vector<Ideal> chosen;
    std::function<bool(std::size_t)> search = [&](std::size_t from) {
      if (covers(chosen)) return true;
      if (chosen.size() == cap) return false;
      for (std::size_t i = from; i < parts.size(); ++i) {
        chosen.push_back(parts[i]);
        if (search(i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    if (search(0)) {
      v.independent = false;
      v.covered = x;
      v.cover = chosen;
      return v;
    }
  }
  return v;
}

enum class G0Result { yes, no, inconclusive };

inline std::string result_name(G0Result r) {
  switch (r) {
    case G0Result::yes: return "yes";
    case G0Result::no: return "no";
    case G0Result::inconclusive: return "inconclusive";
  }
  return "";
}

struct G0Verdict {
  G0Result result = G0Result::yes;
  bool exact = true;
  std::optional<Element> witness;  // p with pP missing gP or g^-1 P
  std::string side;                // "g" or "g^-1"
  Int bound = 0;
};

namespace detail {

// gP n P for the free group: uP when g = u v^-1 with u, v positive, else empty
inline std::optional<std::vector<int>> free_trace(const Element& g) {
  std::size_t i = 0;
  while (i < g.word.size() && g.word[i] > 0) ++i;
  for (std::size_t j = i; j < g.word.size(); ++j)
    if (g.word[j] > 0) return std::nullopt;
  return std::vector<int>(g.word.begin(), g.word.begin() + static_cast<std::ptrdiff_t>(i));
}

// exists q in P with hq in X (X nonempty residue ideal)
inline bool axb_meets(const Ideal& x, const Element& h) {
  Int period = x.m * h.a.denominator();
  for (Int y = 0; y < period; ++y) {
    Rat v = h.b + h.a * Rat(y);
    if (v.denominator() == 1 && mod(v.numerator(), x.m) == x.x) return true;
  }
  return false;
}

}  // namespace detail

// g in G_0 iff pP meets gP and g^-1 P for every p in P
inline G0Verdict g0_member(const Family& f, const Element& g, Int bound = 12) {
  G0Verdict v;
  v.bound = bound;
  switch (f.tag) {
    case Tag::natural: return v;
    case Tag::free_monoid: {
      if (g.word.empty()) return v;
      for (const auto& [side, h] : {std::pair{"g", g}, std::pair{"g^-1", inv(f, g)}}) {
        auto u = detail::free_trace(h);
        if (!u) {
          v.result = G0Result::no;
          v.witness = identity(f);
          v.side = side;
          return v;
        }
        if (!u->empty() && f.rank >= 2) {
          int other = (*u)[0] == 1 ? 2 : 1;
          v.result = G0Result::no;
          v.witness = free_word({other});
          v.side = side;
          return v;
        }
      }
      return v;
    }
    case Tag::axb: {
      v.exact = false;
      for (Int a = 1; a <= bound; ++a)
        for (Int b = 0; b < a; ++b) {
          Element p = affine(Rat(b), Rat(a));
          Ideal pp = left_mul(f, p, whole(f));
          for (const auto& [side, h] : {std::pair{"g", g}, std::pair{"g^-1", inv(f, g)}})
            if (!detail::axb_meets(pp, h)) {
              v.result = G0Result::no;
              v.exact = true;
              v.witness = p;
              v.side = side;
              return v;
            }
        }
      v.result = G0Result::inconclusive;
      return v;
    }
  }
  return v;
}

// Small group elements (all of G within the box) and small elements of P.
inline std::vector<Element> small_elements(const Family& f, bool positive_only) {
  std::vector<Element> out;
  switch (f.tag) {
    case Tag::natural: {
      Int lo = positive_only ? 0 : (f.rank > 3 ? -1 : -2), hi = f.rank > 3 ? 1 : 2;
      std::vector<Int> c(static_cast<std::size_t>(f.rank), lo);
      for (;;) {
        out.push_back(natural(c));
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > hi) c[k++] = lo;
        if (k == c.size()) break;
      }
      break;
    }
    case Tag::free_monoid: {
      std::vector<std::vector<int>> layer{{}};
      out.push_back(identity(f));
      for (std::size_t len = 1; len <= (positive_only ? 2u : 3u); ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : layer)
          for (int l = -f.rank; l <= f.rank; ++l) {
            if (l == 0 || (positive_only && l < 0) || (!w.empty() && w.back() == -l)) continue;
            auto u = w;
            u.push_back(l);
            next.push_back(u);
            out.push_back(free_word(u));
          }
        layer = std::move(next);
      }
      break;
    }
    case Tag::axb:
      for (Int b = -2; b <= 2; ++b) {
        for (Int a : {1, -1, 2, 3}) out.push_back(affine(Rat(b), Rat(a)));
        if (!positive_only)
          for (Rat a : {Rat(-2), Rat(1, 2), Rat(-1, 3)}) out.push_back(affine(Rat(b), a));
      }
      if (!positive_only) out.push_back(affine(Rat(1, 2), Rat(1)));
      break;
  }
  return out;
}

// G0 over the small group elements; "group" names it when every verdict is exact.
struct G0Summary {
  std::string group;
  bool exact = true;
  std::size_t checked = 0;
  std::size_t members = 0;
  std::size_t undecided = 0;
  std::optional<Element> example;  // first undecided element
  Int bound = 0;
};

inline G0Summary g0_summary(const Family& f, Int bound = 12) {
  G0Summary s;
  s.bound = bound;
  for (const auto& g : small_elements(f, false)) {
    ++s.checked;
    auto v = g0_member(f, g, bound);
    if (v.result == G0Result::yes && !v.exact) v.result = G0Result::inconclusive;
    if (v.result == G0Result::yes) ++s.members;
    if (v.result == G0Result::inconclusive) {
      ++s.undecided;
      if (!s.example) s.example = g;
    }
  }
  if (s.undecided) {
    s.exact = false;
    s.group = "unknown";
  } else if (s.members == s.checked) {
    s.group = f.tag == Tag::free_monoid || f.rank == 1 ? "Z" : "Z^" + std::to_string(f.rank);
  } else if (s.members == 1) {
    s.group = "{e}";
  } else {
    s.group = "proper subgroup";
  }
  return s;
}

struct UnitsReport {
  std::string units;
  bool trivial_units = true;
  bool certificate = false;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<std::pair<Element, Element>> witness;  // (g, p) with g.chi_p = chi_p, g != e
};

// P* and the point-level check g.chi_p = chi_p => g = e on the stage ideals.
inline UnitsReport top_freeness_certificate(const Family& f, Int bound = 4) {
  UnitsReport r;
  switch (f.tag) {
    case Tag::natural: r.units = "{0}"; break;
    case Tag::free_monoid: r.units = "{e}"; break;
    case Tag::axb:
      r.units = "Z x {1,-1}";
      r.trivial_units = false;
      break;
  }
  auto stage = ideal_closure(f, default_generators(f), bound).ideals;
  auto ps = small_elements(f, true);
  auto gs = small_elements(f, false);
  for (const auto& p : ps)
    for (const auto& g : gs) {
      Element gp = mul(f, g, p);
      if (!in_P(f, gp)) continue;
      ++r.checked;
      bool same = std::all_of(stage.begin(), stage.end(),
                              [&](const Ideal& x) { return chi(f, gp, x) == chi(f, p, x); });
      if (same && g != identity(f)) {
        if (!r.witness) r.witness = std::pair{g, p};
        ++r.violations;
      }
    }
  r.certificate = r.trivial_units && r.violations == 0;
  return r;
}

// Basic open of the boundary: characters with chi(X) = 1 and chi(X_i) = 0.
struct BasicOpen {
  Ideal X;
  std::vector<Ideal> exclusions;
};

inline BasicOpen parse_open(const Family& f, std::string_view text) {
  std::string s(text);
  for (std::size_t i = 0; (i = s.find(" - ", i)) != std::string::npos;) s.replace(i, 3, "!");
  auto parts = detail::split(s, '!');
  if (parts.empty() || parts[0].empty()) throw SchemaError("open set: expected X or X - Y - ...");
  BasicOpen u{parse_ideal(f, parts[0]), {}};
  for (std::size_t i = 1; i < parts.size(); ++i) u.exclusions.push_back(parse_ideal(f, parts[i]));
  return u;
}

inline std::string to_string(const Family& f, const BasicOpen& u) {
  std::string out = to_string(f, u.X);
  for (const auto& y : u.exclusions) out += " - " + to_string(f, y);
  return out;
}

inline BasicOpen whole_open(const Family& f) { return {whole(f), {}}; }

struct BoundaryWitness {
  BasicOpen U;
  Element p, q, x, g, h;
  bool empty_U = false;
  bool verified = false;
  std::size_t depth = 0;
  std::size_t points = 0;
  std::string failure;
};

namespace detail {

inline bool inside(const Family& f, const Ideal& y, const BasicOpen& u) {
  if (!subset(f, y, u.X)) return false;
  return std::all_of(u.exclusions.begin(), u.exclusions.end(),
                     [&](const Ideal& z) { return intersect(f, y, z).empty; });
}

inline Int lcm_moduli(const BasicOpen& u) {
  Int l = u.X.m;
  for (const auto& y : u.exclusions) l = std::lcm(l, y.m);
  return l;
}

// x in P with xP inside U, shortest and least; exact since membership in U
// is decided at word length / modulus L
inline std::optional<Element> find_inner(const Family& f, const BasicOpen& u) {
  if (f.tag == Tag::free_monoid) {
    std::size_t len = u.X.word.size();
    for (const auto& y : u.exclusions) len = std::max(len, y.word.size());
    std::vector<std::vector<int>> layer{{}};
    for (std::size_t n = 0;; ++n) {
      for (const auto& w : layer)
        if (inside(f, left_mul(f, free_word(w), whole(f)), u)) return free_word(w);
      if (n == len) return std::nullopt;
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int l = 1; l <= f.rank; ++l) {
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
      layer = std::move(next);
    }
  }
  const Int l = lcm_moduli(u);
  for (Int a = 1; a <= l; ++a)
    if (l % a == 0)
      for (Int b = 0; b < a; ++b) {
        Element x = affine(Rat(b), Rat(a));
        if (inside(f, left_mul(f, x, whole(f)), u)) return x;
      }
  return std::nullopt;
}

inline bool member(const Family& f, const Element& s, const BasicOpen& u) {
  return contains(f, u.X, s) &&
         std::none_of(u.exclusions.begin(), u.exclusions.end(), [&](const Ideal& y) { return contains(f, y, s); });
}

}  // namespace detail

// pick x with xP inside U and return g = xp, h = xq
inline BoundaryWitness boundary_paradox_witness(const Family& f, const BasicOpen& u,
                                                std::optional<Element> p = std::nullopt,
                                                std::optional<Element> q = std::nullopt, std::size_t depth = 8) {
  if (f.tag == Tag::natural)
    throw PreconditionError(family_name(f) + " is left reversible: pP and qP always meet");
  if (f.tag == Tag::free_monoid && f.rank < 2)
    throw PreconditionError("F+1 is left reversible: pP and qP always meet");
  BoundaryWitness w;
  w.U = u;
  w.depth = depth;
  auto gens = default_generators(f);
  w.p = p.value_or(f.tag == Tag::axb ? affine(Rat(0), Rat(2)) : gens[0]);
  w.q = q.value_or(f.tag == Tag::axb ? affine(Rat(1), Rat(2)) : gens[1]);
  if (!in_P(f, w.p) || !in_P(f, w.q)) throw PreconditionError("p and q must lie in P");
  Ideal pp = left_mul(f, w.p, whole(f)), qp = left_mul(f, w.q, whole(f));
  if (!intersect(f, pp, qp).empty)
    throw PreconditionError(to_string(f, w.p) + "P and " + to_string(f, w.q) + "P intersect");
  auto x = detail::find_inner(f, u);
  if (!x) {
    w.empty_U = true;
    w.verified = true;
    return w;
  }
  w.x = *x;
  w.g = mul(f, *x, w.p);
  w.h = mul(f, *x, w.q);
  Ideal gp = left_mul(f, w.g, whole(f)), hp = left_mul(f, w.h, whole(f));
  if (!detail::inside(f, gp, u) || !detail::inside(f, hp, u)) {
    w.failure = "containment";
    return w;
  }
  if (!intersect(f, gp, hp).empty) {
    w.failure = "disjointness";
    return w;
  }
  // boundary points to depth: words of length depth, or residues mod N
  std::vector<Element> pts;
  if (f.tag == Tag::free_monoid) {
    std::vector<std::vector<int>> layer{{}};
    for (std::size_t n = 0; n < depth; ++n) {
      std::vector<std::vector<int>> next;
      for (const auto& s : layer)
        for (int l = 1; l <= f.rank; ++l) {
          auto v = s;
          v.push_back(l);
          next.push_back(v);
        }
      layer = std::move(next);
    }
    for (const auto& s : layer) pts.push_back(free_word(s));
  } else {
    Int n = std::lcm(detail::lcm_moduli(u), std::lcm(gp.m, hp.m));
    for (Int r = 0; r < n; ++r) pts.push_back(affine(Rat(r), Rat(n)));
  }
  for (const auto& s : pts) {
    if (!detail::member(f, s, u)) continue;
    ++w.points;
    Element gs = mul(f, w.g, s), hs = mul(f, w.h, s);
    if (!detail::member(f, gs, u) || !detail::member(f, hs, u) || contains(f, hp, gs) || contains(f, gp, hs)) {
      w.failure = "point " + to_string(f, s);
      return w;
    }
  }
  w.verified = true;
  return w;
}

// U(x + I; x_i + I_i) inside the profinite integers, I = mZ, I_i = m_i Z.
struct AxbWitness {
  BasicOpen U;
  Int a = 0;
  Int delta = 0;
  Int b1 = 0;
  Int b2 = 0;
  Int modulus = 0;  // residues used by the verification
  bool empty_U = false;
  bool containment = false;
  bool disjoint = false;
  bool verified() const { return containment && disjoint; }
};

// Points of U as residues mod n.
inline std::vector<Int> residues_in(const BasicOpen& u, Int n) {
  std::vector<Int> out;
  for (Int r = 0; r < n; ++r) {
    bool in = mod(r, u.X.m) == u.X.x;
    for (const auto& y : u.exclusions) in = in && mod(r, y.m) != y.x;
    if (in) out.push_back(r);
  }
  return out;
}

// a = 1 + M with M the generator of J = I n I_1 n ..., b1 = 0, b2 = delta the
// least positive element of J outside aZ; checked on residues mod 2Ma.
inline AxbWitness axb_paradox_witness(const BasicOpen& u) {
  if (u.X.empty) throw SchemaError("U: the ideal X is empty");
  if (u.X.m == 1) throw PreconditionError("U: I must be a proper ideal of Z");
  for (const auto& y : u.exclusions)
    if (y.empty || y.m % u.X.m != 0)
      throw SchemaError("U: exclusion modulus " + std::to_string(y.m) + " does not lie in " + std::to_string(u.X.m) + "Z");
  AxbWitness w;
  w.U = u;
  Int big_m = detail::lcm_moduli(u);
  w.a = 1 + big_m;
  for (Int d = big_m;; d += big_m)
    if (d % w.a != 0) {
      w.delta = d;
      break;
    }
  w.b2 = w.delta;
  w.modulus = 2 * big_m * w.a;
  auto pts = residues_in(u, w.modulus);
  w.empty_U = pts.empty();
  std::set<Int> in(pts.begin(), pts.end()), img1, img2;
  w.containment = true;
  for (Int r : pts) {
    Int s1 = mod(w.b1 + w.a * r, w.modulus), s2 = mod(w.b2 + w.a * r, w.modulus);
    w.containment = w.containment && in.contains(s1) && in.contains(s2);
    img1.insert(s1);
    img2.insert(s2);
  }
  w.disjoint = std::none_of(img1.begin(), img1.end(), [&](Int s) { return img2.contains(s); });
  return w;
}

// Monoid presentation with relations between positive words.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> relations;
};

// relations "x1.x0=x0.x2, ..." over comma-separated generator names
inline Presentation parse_presentation(std::string_view gens, std::string_view rels) {
  Presentation p;
  for (const auto& g : detail::split(gens, ','))
    if (!g.empty()) p.generators.push_back(g);
  if (p.generators.empty()) throw FormError("presentation: no generators");
  auto word = [&](const std::string& side) {
    std::vector<std::string> w;
    for (const auto& t : detail::split(side, '.')) {
      if (std::find(p.generators.begin(), p.generators.end(), t) == p.generators.end())
        throw FormError("relation: '" + t + "' is not a generator");
      w.push_back(t);
    }
    return w;
  };
  if (detail::trim(rels).empty()) return p;
  for (const auto& r : detail::split(rels, ',')) {
    auto eq = r.find('=');
    if (eq == std::string::npos || r.find('=', eq + 1) != std::string::npos)
      throw FormError("relation '" + r + "': expected u...=v...");
    auto lhs = detail::trim(std::string_view(r).substr(0, eq)), rhs = detail::trim(std::string_view(r).substr(eq + 1));
    if (lhs.empty() || rhs.empty()) throw FormError("relation '" + r + "': both sides must be nonempty words");
    p.relations.push_back({word(lhs), word(rhs)});
  }
  return p;
}

inline Presentation free_presentation(int n) {
  Presentation p;
  for (int i = 0; i < n; ++i) p.generators.push_back(std::string(1, free_letters[static_cast<std::size_t>(i)]));
  return p;
}

// x_n x_k = x_k x_{n+1} for k < n, generators x_0..x_top
inline Presentation thompson_presentation(int top) {
  Presentation p;
  for (int i = 0; i <= top; ++i) p.generators.push_back("x" + std::to_string(i));
  for (int n = 1; n + 1 <= top; ++n)
    for (int k = 0; k < n; ++k)
      p.relations.push_back({{p.generators[static_cast<std::size_t>(n)], p.generators[static_cast<std::size_t>(k)]},
                             {p.generators[static_cast<std::size_t>(k)], p.generators[static_cast<std::size_t>(n + 1)]}});
  return p;
}

struct HypothesisVerdict {
  bool pass = true;
  std::vector<std::pair<std::string, std::optional<std::string>>> table;  // u -> v
};

// every u needs some v != u such that no relation reads u... = v... (either way round)
inline HypothesisVerdict rcomplete_hypothesis_check(const Presentation& p) {
  HypothesisVerdict v;
  std::set<std::pair<std::string, std::string>> led;
  for (const auto& [l, r] : p.relations) {
    led.insert({l.front(), r.front()});
    led.insert({r.front(), l.front()});
  }
  for (const auto& u : p.generators) {
    std::optional<std::string> partner;
    for (const auto& w : p.generators)
      if (w != u && !led.contains({u, w})) {
        partner = w;
        break;
      }
    v.pass = v.pass && partner.has_value();
    v.table.push_back({u, partner});
  }
  return v;
}

// Maximal characters at a finite stage: the character at infinity for N^k,
// infinite words s x^inf for F_n, residue towers of integers for Z_axb.
struct MaxCharacter {
  std::string name;
  std::vector<int> word;  // F_n: prefix s, continued by the first letter
  Int tower = 0;          // Z_axb: residues of this integer
};

inline bool chi(const Family& f, const MaxCharacter& c, const Ideal& x) {
  if (x.empty) return false;
  switch (f.tag) {
    case Tag::natural: return true;
    case Tag::free_monoid:
      for (std::size_t i = 0; i < x.word.size(); ++i)
        if (x.word[i] != (i < c.word.size() ? c.word[i] : 1)) return false;
      return true;
    case Tag::axb: return mod(c.tower, x.m) == x.x;
  }
  return false;
}

inline std::vector<MaxCharacter> max_characters(const Family& f, Int stage) {
  std::vector<MaxCharacter> out;
  switch (f.tag) {
    case Tag::natural: out.push_back({"inf", {}, 0}); break;
    case Tag::free_monoid: {
      std::vector<std::vector<int>> layer{{}};
      for (Int n = 0; n < stage; ++n) {
        std::vector<std::vector<int>> next;
        for (const auto& s : layer)
          for (int l = 1; l <= f.rank; ++l) {
            auto v = s;
            v.push_back(l);
            next.push_back(v);
          }
        layer = std::move(next);
      }
      for (const auto& s : layer)
        out.push_back({to_string(f, free_word(s)) + "(" + std::string(1, free_letters[0]) + ")^inf", s, 0});
      break;
    }
    case Tag::axb:
      for (Int z = 0; z < std::min<Int>(stage, 6); ++z) out.push_back({"tower " + std::to_string(z), {}, z});
      out.push_back({"tower -1", {}, -1});
      break;
  }
  return out;
}

struct ProbeEntry {
  std::string character;
  std::string from;
  bool reached = false;
};

struct MinimalityReport {
  bool pass = true;
  std::vector<ProbeEntry> entries;
};

// Every max character chi is approximated by translates p.chi_q of point
// characters: p.chi_q agrees with chi on all stage ideals.
inline MinimalityReport boundary_minimality_probe(const Family& f, Int stage) {
  MinimalityReport r;
  auto ideals = ideal_closure(f, default_generators(f), stage).ideals;
  auto qs = small_elements(f, true);
  if (qs.size() > 6) qs.resize(6);
  Int big = 1;
  for (Int m = 1; m <= stage; ++m) big = std::lcm(big, m);
  for (const auto& c : max_characters(f, stage)) {
    Element p;
    switch (f.tag) {
      case Tag::natural: p = natural(std::vector<Int>(static_cast<std::size_t>(f.rank), stage)); break;
      case Tag::free_monoid: {
        auto s = c.word;
        s.resize(static_cast<std::size_t>(stage), 1);
        p = free_word(s);
        break;
      }
      case Tag::axb: p = affine(Rat(mod(c.tower, big)), Rat(big)); break;
    }
    for (const auto& q : qs) {
      Element pq = mul(f, p, q);
      bool ok = std::all_of(ideals.begin(), ideals.end(), [&](const Ideal& x) { return chi(f, pq, x) == chi(f, c, x); });
      r.pass = r.pass && ok;
      r.entries.push_back({c.name, to_string(f, p) + "." + to_string(f, q), ok});
    }
  }
  return r;
}

struct CoverReport {
  bool pass = true;
  std::size_t characters = 0;
  std::size_t covers = 0;
  std::optional<std::string> violation;
};

// Max characters are characters of the stage: nonzero, monotone, and
// chi(X) = 1 forces chi(X_i) = 1 for some member of any cover X = X_1 u X_2 u ...
inline CoverReport omega_cover_check(const Family& f, Int stage, std::size_t cover_size = 2) {
  CoverReport r;
  auto ideals = ideal_closure(f, default_generators(f), stage).ideals;
  auto chars = max_characters(f, stage);
  r.characters = chars.size();
  std::vector<std::pair<Ideal, std::vector<Ideal>>> covers;
  for (const auto& x : ideals) {
    if (x.empty) continue;
    std::vector<Ideal> subs;
    for (const auto& y : ideals)
      if (!y.empty && subset(f, y, x)) subs.push_back(y);
    auto pts = sample(f, x);
    std::vector<Ideal> chosen;
    std::function<void(std::size_t)> walk = [&](std::size_t from) {
      if (!chosen.empty() && std::all_of(pts.begin(), pts.end(), [&](const Element& p) {
            return std::any_of(chosen.begin(), chosen.end(), [&](const Ideal& y) { return contains(f, y, p); });
          }))
        covers.push_back({x, chosen});
      if (chosen.size() == cover_size) return;
      for (std::size_t i = from; i < subs.size(); ++i) {
        chosen.push_back(subs[i]);
        walk(i + 1);
        chosen.pop_back();
      }
    };
    walk(0);
  }
  r.covers = covers.size();
  for (const auto& c : chars) {
    if (!chi(f, c, whole(f))) r.violation = c.name + " vanishes on P";
    for (const auto& x : ideals)
      for (const auto& y : ideals)
        if (chi(f, c, x) && subset(f, x, y) && !chi(f, c, y)) r.violation = c.name + " is not monotone";
    for (const auto& [x, parts] : covers)
      if (chi(f, c, x) && std::none_of(parts.begin(), parts.end(), [&](const Ideal& y) { return chi(f, c, y); }))
        r.violation = c.name + " fails the cover condition at " + to_string(f, x);
    if (r.violation) break;
  }
  r.pass = !r.violation;
  return r;
}

}  // namespace gforge::sgp
