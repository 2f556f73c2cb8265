#pragma once

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gforge/conditions.hpp"
#include "gforge/freeness.hpp"
#include "gforge/orbit_equivalence.hpp"
#include "gforge/paradox.hpp"
#include "gforge/semigroup.hpp"

namespace gforge::cli {

inline constexpr const char* version = "0.1.0";

// Bad invocation or unreadable input: exit 64.
struct UsageError : Error {
  using Error::Error;
};

enum class Status { pass, fail, inconclusive };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "";
}

struct Verdict {
  std::string id;
  Status status = Status::pass;
  nlohmann::json witness;
  nlohmann::json bounds = nlohmann::json::object();
};

struct Options {
  std::optional<std::size_t> depth;
  std::optional<std::size_t> word_bound;
  std::optional<long long> modulus;
  std::uint64_t seed = 0;
  std::string format = "json";

  std::size_t depth_or(std::size_t d) const { return depth.value_or(d); }
  std::size_t words() const { return word_bound.value_or(6); }
  long long modulus_bound() const { return modulus.value_or(12); }
};

inline std::string sha256_hex(const std::vector<std::string>& chunks) {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  for (const auto& c : chunks) {
    std::string len = std::to_string(c.size()) + ":";
    EVP_DigestUpdate(ctx, len.data(), len.size());
    EVP_DigestUpdate(ctx, c.data(), c.size());
  }
  unsigned char out[EVP_MAX_MD_SIZE];
  unsigned int n = 0;
  EVP_DigestFinal_ex(ctx, out, &n);
  EVP_MD_CTX_free(ctx);
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < n; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", out[i]);
    hex += buf;
  }
  return hex;
}

struct Report {
  Report() = default;
  Report(std::string cmd, std::string dig) : command(std::move(cmd)), digest(std::move(dig)) {}

  std::string command;
  std::string digest;
  nlohmann::json bounds = nlohmann::json::object();
  std::vector<Verdict> verdicts;
  nlohmann::json result = nlohmann::json::object();

  void add(std::string id, Status s, nlohmann::json witness = nullptr, nlohmann::json b = nlohmann::json::object()) {
    if (s == Status::fail && witness.is_null()) throw std::logic_error(id + ": a failing verdict needs a witness");
    if (s == Status::inconclusive && b.empty()) throw std::logic_error(id + ": an inconclusive verdict needs its bound");
    verdicts.push_back({std::move(id), s, std::move(witness), std::move(b)});
  }
  void pass(std::string id, nlohmann::json b = nlohmann::json::object()) {
    add(std::move(id), Status::pass, nullptr, std::move(b));
  }

  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.status == Status::fail; });
  }

  int exit_code() const {
    if (failed()) return 1;
    for (const auto& v : verdicts)
      if (v.status == Status::inconclusive) return 2;
    return 0;
  }

  nlohmann::json to_json() const {
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : verdicts) {
      nlohmann::json j{{"id", v.id}, {"status", status_name(v.status)}, {"bounds", v.bounds}};
      if (!v.witness.is_null()) j["witness"] = v.witness;
      vs.push_back(j);
    }
    return {{"tool", "gforge"}, {"version", version}, {"command", command}, {"input_digest", digest},
            {"bounds", bounds}, {"verdicts", vs}, {"result", result}, {"exit_code", exit_code()}};
  }

  std::string render(const std::string& format) const {
    if (format == "json") return to_json().dump(2) + "\n";
    std::ostringstream out;
    out << "gforge " << version << " " << command << "\n";
    out << "input " << digest << "\n";
    out << "bounds " << bounds.dump() << "\n";
    for (const auto& v : verdicts) {
      out << "[" << status_name(v.status) << "] " << v.id;
      if (!v.witness.is_null()) out << "  " << v.witness.dump();
      if (v.status == Status::inconclusive) out << "  bounds " << v.bounds.dump();
      out << "\n";
    }
    if (!result.empty()) out << "result " << result.dump() << "\n";
    out << "exit " << exit_code() << "\n";
    return out.str();
  }
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

inline Graph graph_from_text(const std::string& text, const std::string& what) {
  try {
    return Graph::from_json(parse_json(text, what));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(what + ": " + e.what());
  }
}

namespace detail {

inline nlohmann::json vertex_names(const Graph& g, const VertexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (s.contains(v)) out.push_back(g.vertex_name(v));
  return out;
}

inline nlohmann::json condition_witness(const Graph& g, const ConditionVerdict& c) {
  nlohmann::json w = nlohmann::json::object();
  if (c.vertex) w["vertex"] = g.vertex_name(*c.vertex);
  if (c.loop) w["loop"] = to_string(g, *c.loop);
  return w;
}

}  // namespace detail

inline Report cmd_check(const std::string& path, const Options& opt) {
  const std::string text = read_file(path);
  Graph g = graph_from_text(text, path);
  const std::size_t depth = opt.depth_or(6), words = opt.words();
  Report r{"check", sha256_hex({text})};
  r.bounds = {{"depth", depth}, {"word_bound", words}};

  auto l = condition_L(g);
  if (l.holds) r.pass("condition_L");
  else r.add("condition_L", Status::fail, detail::condition_witness(g, l));

  auto k = condition_K(g);
  if (k.holds) r.pass("condition_K");
  else r.add("condition_K", Status::fail, detail::condition_witness(g, k));

  const std::size_t cap = bound_override(default_tail_cap);
  try {
    auto pi = condition_PI(g, cap);
    if (pi.holds) {
      r.pass("condition_PI");
    } else {
      nlohmann::json w{{"clause", clause_name(pi.failed)}};
      if (pi.vertex) w["vertex"] = g.vertex_name(*pi.vertex);
      if (pi.loop) w["loop"] = to_string(g, *pi.loop);
      if (pi.tail) w["tail"] = detail::vertex_names(g, *pi.tail);
      r.add("condition_PI", Status::fail, w);
    }
  } catch (const SizeError& e) {
    r.add("condition_PI", Status::inconclusive, e.what(), {{"tail_cap", cap}});
  }

  auto tf = topological_freeness_report(g, depth, words);
  nlohmann::json b{{"depth", depth}, {"word_bound", words}};
  if (tf.all_cylinders_free()) {
    r.pass("topological_freeness", b);
  } else {
    nlohmann::json w = nlohmann::json::object();
    if (!tf.fixed_points.empty()) {
      const auto& fp = tf.fixed_points.front();
      w = {{"loop", to_string(g, fp.loop)}, {"point", to_string(g, fp.point)}, {"word", to_string(g, fp.word)}};
    } else {
      for (const auto& c : tf.cylinders)
        if (!c.joint) {
          w = {{"cylinder", to_string(g, c.cylinder)}};
          break;
        }
    }
    r.add("topological_freeness", Status::fail, w, b);
  }
  if (tf.agrees()) {
    r.pass("freeness_consistency", b);
  } else {
    r.add("freeness_consistency", Status::fail,
          {{"condition_L", tf.condition_L}, {"all_cylinders_free", tf.all_cylinders_free()},
           {"fixed_points", tf.fixed_points.size()}},
          b);
  }

  nlohmann::json table = nlohmann::json::array();
  for (const auto& c : tf.cylinders) {
    nlohmann::json row{{"cylinder", to_string(g, c.cylinder)}};
    row["point"] = c.joint && c.point ? nlohmann::json(to_string(g, *c.point)) : nlohmann::json(nullptr);
    table.push_back(row);
  }
  nlohmann::json fixed = nlohmann::json::array();
  for (const auto& fp : tf.fixed_points)
    fixed.push_back({{"loop", to_string(g, fp.loop)}, {"point", to_string(g, fp.point)},
                     {"word", to_string(g, fp.word)}, {"verified", fp.verified}});
  r.result = {{"graph", {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}}},
              {"trivial_isotropy_table", table}, {"fixed_points", fixed}};
  return r;
}

inline Report cmd_witness(const std::string& path, const std::string& set, const Options& opt) {
  const std::string text = read_file(path);
  Graph g = graph_from_text(text, path);
  const std::size_t depth = opt.depth_or(4);
  Report r{"witness", sha256_hex({text, set})};
  r.bounds = {{"depth", depth}};
  CompactOpen u = parse_set(g, set);
  r.result["U"] = to_string(g, u);
  std::vector<ParadoxWitness> ws;
  try {
    ws = find_witness(g, u);
  } catch (const PreconditionError& e) {
    r.add("condition_PI", Status::fail, e.what());
    return r;
  } catch (const SizeError& e) {
    r.add("find_witness", Status::inconclusive, e.what(), {{"split_cap", g.vertex_count() + 1}});
    return r;
  }
  r.pass("condition_PI");
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < ws.size(); ++i) {
    auto rep = verify_witness(g, ws[i], depth);
    nlohmann::json b{{"depth", depth}, {"points", rep.points}};
    std::string id = "witness[" + std::to_string(i) + "]";
    if (rep.pass) r.pass(id, b);
    else r.add(id, Status::fail, {{"check", rep.failure}, {"at", rep.witness}}, b);
    out.push_back(to_json(g, ws[i], rep.pass ? depth : 0));
  }
  r.result["witnesses"] = out;
  return r;
}

namespace detail {

inline nlohmann::json check_witness(const CheckReport& c) {
  return {{"check", c.failure}, {"at", c.witness}};
}

inline void add_check(Report& r, const std::string& id, const CheckReport& c, std::size_t depth) {
  nlohmann::json b{{"depth", depth}};
  if (c.pass) r.pass(id, b);
  else r.add(id, Status::fail, check_witness(c), b);
}

}  // namespace detail

// direction: check, coe2oe or oe2coe
inline Report cmd_oe(const std::string& e_path, const std::string& f_path, const std::string& data_path,
                     const std::string& direction, const Options& opt) {
  if (direction != "check" && direction != "coe2oe" && direction != "oe2coe")
    throw UsageError("--direction: expected check, coe2oe or oe2coe");
  const std::string et = read_file(e_path), ft = read_file(f_path), dt = read_file(data_path);
  Graph e = graph_from_text(et, e_path);
  Graph f = graph_from_text(ft, f_path);
  auto data = parse_json(dt, data_path);
  if (!data.is_object()) throw SchemaError(data_path + ": expected a JSON object");
  const std::size_t depth = opt.depth_or(6);
  Report r{"oe " + direction, sha256_hex({et, ft, dt})};
  r.bounds = {{"depth", depth}};

  PrefixHomeo phi;
  try {
    phi = homeo_from_json(e, f, data);
  } catch (const nlohmann::json::exception& x) {
    throw SchemaError(data_path + ": " + x.what());
  }
  try {
    auto v = validate_homeo(e, f, phi, depth);
    detail::add_check(r, "homeomorphism", v, depth);
    if (!v.pass) return r;
  } catch (const PreconditionError& x) {
    r.add("homeomorphism", Status::fail, x.what());
    return r;
  }

  Cocycle a, b;
  const bool given = data.contains("a") && data.contains("b");
  if (given) {
    a = cocycle_from_json(e, f, data["a"], "a");
    b = cocycle_from_json(f, e, data["b"], "b");
  } else {
    a = derive_cocycle(e, f, phi);
    b = derive_cocycle(f, e, inverse(e, f, phi));
  }
  const bool has_oe = data.contains("k");
  r.result["cocycles"] = given ? "given" : "derived";

  if (direction == "check") {
    detail::add_check(r, "coe", coe_check(e, f, phi, a, b, depth), depth);
    if (has_oe) detail::add_check(r, "oe", oe_check(e, f, phi, oe_from_json(e, f, data), depth), depth);
    return r;
  }

  auto roundtrip = [&](const OEData& oe, const char* id) {
    try {
      auto back = oe_to_coe(e, f, phi, oe, depth);
      if (!back.complete) {
        r.add(id, Status::inconclusive, back.reason, {{"depth", depth}});
        return std::optional<OETranslation>{};
      }
      return std::optional<OETranslation>{back};
    } catch (const PreconditionError& x) {
      r.add("condition_L", Status::fail, x.what());
      return std::optional<OETranslation>{};
    }
  };

  if (direction == "coe2oe") {
    auto c = coe_check(e, f, phi, a, b, depth);
    detail::add_check(r, "coe", c, depth);
    if (!c.pass) return r;
    OEData oe;
    try {
      oe = coe_to_oe(e, f, phi, a, b);
    } catch (const FormError& x) {
      r.add("coe_to_oe", Status::fail, x.what());
      return r;
    }
    detail::add_check(r, "oe", oe_check(e, f, phi, oe, depth), depth);
    r.result["oe"] = to_json(e, f, oe);
    if (!condition_L(e).holds || !condition_L(f).holds) {
      r.result["roundtrip"] = "skipped: condition (L) fails";
      return r;
    }
    if (auto back = roundtrip(oe, "roundtrip")) detail::add_check(r, "roundtrip", coe_check(e, f, phi, back->a, back->b, depth), depth);
    return r;
  }

  OEData oe;
  if (has_oe) {
    oe = oe_from_json(e, f, data);
  } else {
    try {
      oe = coe_to_oe(e, f, phi, a, b);
    } catch (const FormError& x) {
      r.add("coe_to_oe", Status::fail, x.what());
      return r;
    }
  }
  r.result["oe_data"] = has_oe ? "given" : "derived";
  auto c = oe_check(e, f, phi, oe, depth);
  detail::add_check(r, "oe", c, depth);
  if (!c.pass) return r;
  auto back = roundtrip(oe, "oe_to_coe");
  if (!back) return r;
  detail::add_check(r, "coe", coe_check(e, f, phi, back->a, back->b, depth), depth);
  r.result["a"] = to_json(e, f, back->a);
  r.result["b"] = to_json(f, e, back->b);
  OEData again;
  try {
    again = coe_to_oe(e, f, phi, back->a, back->b);
  } catch (const FormError& x) {
    r.add("roundtrip", Status::fail, x.what());
    return r;
  }
  detail::add_check(r, "roundtrip", oe_check(e, f, phi, again, depth), depth);
  return r;
}

struct SgpArgs {
  std::optional<std::string> U, p, q, g, gens, relations, builtin;
};

namespace detail {

inline nlohmann::json ideal_json(const sgp::Family& f, const sgp::Ideal& i) {
  return {{"family", sgp::family_name(f)}, {"repr", sgp::to_string(f, i)}};
}

inline sgp::Presentation default_presentation(const sgp::Family& f, const SgpArgs& a) {
  if (a.builtin) {
    if (*a.builtin == "thompson") return sgp::thompson_presentation(3);
    if (*a.builtin != "free") throw UsageError("--builtin: expected free or thompson");
  }
  switch (f.tag) {
    case sgp::Tag::free_monoid: return sgp::free_presentation(f.rank);
    case sgp::Tag::natural: {
      std::string gens, rels;
      for (int i = 1; i <= f.rank; ++i) {
        gens += (i > 1 ? "," : "") + std::string("e") + std::to_string(i);
        for (int j = i + 1; j <= f.rank; ++j) {
          std::string ei = "e" + std::to_string(i), ej = "e" + std::to_string(j);
          rels += (rels.empty() ? "" : ",") + ei + "." + ej + "=" + ej + "." + ei;
        }
      }
      return sgp::parse_presentation(gens, rels);
    }
    case sgp::Tag::axb: break;
  }
  throw UsageError("hypothesis: no built-in presentation for Z_axb; pass --gens and --relations");
}

inline std::string sgp_args_text(const std::string& family, const std::string& sub, const SgpArgs& a) {
  std::string s = family + "\n" + sub;
  for (const auto& [k, v] : {std::pair{"U", a.U}, {"p", a.p}, {"q", a.q}, {"g", a.g}, {"gens", a.gens},
                             {"relations", a.relations}, {"builtin", a.builtin}})
    if (v) s += std::string("\n") + k + "=" + *v;
  return s;
}

}  // namespace detail

inline Report cmd_sgp(const std::string& family, const std::string& sub, const SgpArgs& args, const Options& opt) {
  using namespace sgp;
  Family f = parse_family(family);
  Report r{"sgp " + sub, sha256_hex({detail::sgp_args_text(family, sub, args)})};
  r.result["family"] = family_name(f);
  const Int modulus = opt.modulus_bound();
  // stage of the finite truncation: word length for free monoids, the bound otherwise
  const Int stage = f.tag == Tag::free_monoid ? static_cast<Int>(std::min<std::size_t>(opt.words(), 4)) : modulus;

  if (sub == "ideals" || sub == "independence") {
    auto c = ideal_closure(f, default_generators(f), stage);
    nlohmann::json b{{"stage", stage}};
    r.bounds = b;
    nlohmann::json ideals = nlohmann::json::array();
    for (const auto& i : c.ideals) ideals.push_back(detail::ideal_json(f, i));
    r.result["ideals"] = ideals;
    r.result["partial"] = c.partial;
    if (sub == "ideals") {
      if (c.partial) r.add("closure", Status::inconclusive, "ideals generated beyond the stage", b);
      else r.pass("closure", b);
      return r;
    }
    auto v = independence_check(f, c.ideals);
    b["cover_size"] = v.cap;
    r.bounds = b;
    if (v.independent) {
      r.pass("independence", b);
    } else {
      nlohmann::json cover = nlohmann::json::array();
      for (const auto& i : v.cover) cover.push_back(detail::ideal_json(f, i));
      r.add("independence", Status::fail, {{"covered", detail::ideal_json(f, *v.covered)}, {"cover", cover}}, b);
    }
    return r;
  }

  if (sub == "g0") {
    nlohmann::json b{{"modulus_bound", modulus}};
    r.bounds = b;
    if (args.g) {
      Element g = parse_element(f, *args.g);
      auto v = g0_member(f, g, modulus);
      r.result["g"] = to_string(f, g);
      r.result["member"] = result_name(v.result);
      r.result["exact"] = v.exact;
      if (v.result == G0Result::no)
        r.add("g0_member", Status::fail, {{"p", to_string(f, *v.witness)}, {"side", v.side}}, b);
      else if (v.result == G0Result::inconclusive || !v.exact)
        r.add("g0_member", Status::inconclusive, to_string(f, g), b);
      else
        r.pass("g0_member", b);
      return r;
    }
    auto s = g0_summary(f, modulus);
    r.result["G0"] = s.group;
    r.result["exact"] = s.exact;
    r.result["checked"] = s.checked;
    r.result["members"] = s.members;
    if (s.exact) r.pass("g0", b);
    else r.add("g0", Status::inconclusive, {{"undecided", s.undecided}, {"example", to_string(f, *s.example)}}, b);
    return r;
  }

  if (sub == "freeness") {
    auto u = top_freeness_certificate(f, stage);
    nlohmann::json b{{"stage", stage}, {"checked", u.checked}};
    r.bounds = b;
    r.result["units"] = u.units;
    r.result["trivial_units"] = u.trivial_units;
    if (u.certificate) {
      r.pass("topological_freeness", b);
    } else if (!u.trivial_units) {
      r.add("topological_freeness", Status::inconclusive, {{"units", u.units}}, b);
    } else {
      nlohmann::json w{{"units", u.units}, {"violations", u.violations}};
      if (u.witness) w["g"] = to_string(f, u.witness->first), w["p"] = to_string(f, u.witness->second);
      r.add("topological_freeness", Status::fail, w, b);
    }
    return r;
  }

  if (sub == "paradox") {
    const std::size_t depth = opt.depth_or(8);
    r.bounds = {{"depth", depth}};
    BasicOpen u = args.U ? parse_open(f, *args.U) : whole_open(f);
    std::optional<Element> p, q;
    if (args.p) p = parse_element(f, *args.p);
    if (args.q) q = parse_element(f, *args.q);
    r.result["U"] = to_string(f, u);
    BoundaryWitness w;
    try {
      w = boundary_paradox_witness(f, u, p, q, depth);
    } catch (const PreconditionError& x) {
      r.add("boundary_paradox", Status::fail, x.what());
      return r;
    }
    nlohmann::json b{{"depth", w.depth}, {"points", w.points}};
    r.result["empty_U"] = w.empty_U;
    if (!w.empty_U)
      r.result["witness"] = {{"p", to_string(f, w.p)}, {"q", to_string(f, w.q)}, {"x", to_string(f, w.x)},
                             {"g", to_string(f, w.g)}, {"h", to_string(f, w.h)}};
    if (w.verified) r.pass("boundary_paradox", b);
    else r.add("boundary_paradox", Status::fail, w.failure, b);
    return r;
  }

  if (sub == "axb") {
    if (f.tag != Tag::axb) throw UsageError("axb: family must be Z_axb");
    if (!args.U) throw UsageError("axb: --U is required");
    BasicOpen u = parse_open(f, *args.U);
    r.result["U"] = to_string(f, u);
    AxbWitness w;
    try {
      w = axb_paradox_witness(u);
    } catch (const PreconditionError& x) {
      r.add("axb_paradox", Status::fail, x.what());
      return r;
    }
    nlohmann::json b{{"residues_mod", w.modulus}};
    r.bounds = b;
    r.result["empty_U"] = w.empty_U;
    if (!w.empty_U)
      r.result["witness"] = {{"a", w.a}, {"delta", w.delta},
                             {"g", to_string(f, affine(Rat(w.b1), Rat(w.a)))},
                             {"h", to_string(f, affine(Rat(w.b2), Rat(w.a)))}};
    if (w.containment) r.pass("containment", b);
    else r.add("containment", Status::fail, "an image leaves U", b);
    if (w.disjoint) r.pass("disjointness", b);
    else r.add("disjointness", Status::fail, "the two images meet", b);
    return r;
  }

  if (sub == "hypothesis") {
    Presentation p;
    if (args.gens) p = parse_presentation(*args.gens, args.relations.value_or(""));
    else p = detail::default_presentation(f, args);
    auto v = rcomplete_hypothesis_check(p);
    nlohmann::json table = nlohmann::json::object();
    std::optional<std::string> bad;
    for (const auto& [u, partner] : v.table) {
      table[u] = partner ? nlohmann::json(*partner) : nlohmann::json(nullptr);
      if (!partner && !bad) bad = u;
    }
    r.result["generators"] = p.generators;
    r.result["partners"] = table;
    r.result["assumed"] = "quasi-lattice order and right completeness are taken from the user";
    if (v.pass) r.pass("rcomplete_hypothesis");
    else r.add("rcomplete_hypothesis", Status::fail, {{"generator", bad.value_or("")}});
    return r;
  }

  if (sub == "probe") {
    nlohmann::json b{{"stage", stage}};
    r.bounds = b;
    auto m = boundary_minimality_probe(f, stage);
    nlohmann::json entries = nlohmann::json::array();
    std::optional<nlohmann::json> miss;
    for (const auto& en : m.entries) {
      entries.push_back({{"character", en.character}, {"from", en.from}, {"reached", en.reached}});
      if (!en.reached && !miss) miss = entries.back();
    }
    r.result["minimality"] = entries;
    if (m.pass) r.pass("boundary_minimality", b);
    else r.add("boundary_minimality", Status::fail, *miss, b);
    auto c = omega_cover_check(f, stage);
    r.result["characters"] = c.characters;
    r.result["covers"] = c.covers;
    r.result["assumed"] = "the listed characters exhaust the maximal characters of the stage";
    if (c.pass) r.pass("omega_cover", b);
    else r.add("omega_cover", Status::fail, c.violation.value_or(""), b);
    return r;
  }

  throw UsageError("sgp: unknown subcommand " + sub);
}

}  // namespace gforge::cli
