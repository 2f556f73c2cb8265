#include <gtest/gtest.h>

#include "gforge/corpus.hpp"
#include "gforge/orbit_equivalence.hpp"

using namespace gforge;

namespace {

PrefixHomeo swap_homeo(const Graph& g) { return make_homeo(g, g, {{"a", "b"}, {"b", "a"}}, {{"a", "b"}, {"b", "a"}}); }

PrefixHomeo h_homeo(const Graph& h) {
  return make_homeo(h, h, {{"v", "v"}, {"c", "d.c"}, {"d.c", "c"}, {"d.d", "d.d"}});
}

// cocycle given by a letter map applied to every generator on its whole domain
Cocycle letterwise(const Graph& e, const Graph& f, const std::map<std::string, std::string>& m) {
  Cocycle out;
  for (const auto& g : generators(e)) {
    auto l = g.letters().front();
    std::string name = e.edge(l.edge.edge).id;
    auto target = parse_word(f, m.count(name) ? m.at(name) : name);
    auto dom = domain(e, g);
    for (const auto& c : dom) out.entries.push_back({g, c, l.exponent > 0 ? target : fg_inv(target)});
  }
  return out;
}

// phi(g.x) = a(g, x).phi(x) checked pointwise, independent of coe_check
bool pointwise(const Graph& e, const Graph& f, const PrefixHomeo& phi, const Cocycle& a) {
  for (const auto& x : enumerate_points(e, 5))
    for (const auto& g : generators(e)) {
      if (!member(x, domain(e, g))) continue;
      auto v = a.at(g, x);
      if (!v) return false;
      auto y = apply(e, f, phi, x);
      if (!member(y, domain(f, *v))) return false;
      if (act_point(f, *v, y) != apply(e, f, phi, act_point(e, g, x))) return false;
    }
  return true;
}

}  // namespace

TEST(Homeo, Validate) {
  auto g2 = corpus::g2();
  EXPECT_TRUE(validate_homeo(g2, g2, identity_homeo(g2)).pass);
  EXPECT_TRUE(validate_homeo(g2, g2, make_homeo(g2, g2, {{"a", "b"}, {"b", "a"}})).pass);
  EXPECT_TRUE(validate_homeo(g2, g2, swap_homeo(g2)).pass);
  auto bad = validate_homeo(g2, g2, make_homeo(g2, g2, {{"a", "a"}}));
  EXPECT_FALSE(bad.pass);
  EXPECT_EQ(bad.failure, "not_a_partition_of_source");
  auto overlap = validate_homeo(g2, g2, make_homeo(g2, g2, {{"v", "a"}, {"a", "b"}}));
  EXPECT_FALSE(overlap.pass);
  auto h = corpus::h();
  EXPECT_TRUE(validate_homeo(h, h, h_homeo(h)).pass);
  auto g5 = corpus::g5();
  EXPECT_THROW(validate_homeo(g5, g5, identity_homeo(g5)), PreconditionError);
}

TEST(Homeo, ApplyOnH) {
  auto h = corpus::h();
  auto phi = h_homeo(h);
  EXPECT_EQ(apply(h, h, phi, parse_point(h, "c.(a)^inf")), parse_point(h, "d.c.(a)^inf"));
  EXPECT_EQ(apply(h, h, phi, parse_point(h, "d.c.(a)^inf")), parse_point(h, "c.(a)^inf"));
  EXPECT_EQ(apply(h, h, phi, parse_point(h, "(d)^inf")), parse_point(h, "(d)^inf"));
  auto g2 = corpus::g2();
  EXPECT_EQ(apply(g2, g2, swap_homeo(g2), parse_point(g2, "a.(a.b)^inf")), parse_point(g2, "b.(b.a)^inf"));
}

TEST(Cocycle, DerivedExamples) {
  auto g2 = corpus::g2();
  auto id = identity_homeo(g2);
  auto a = derive_cocycle(g2, g2, id);
  for (const auto& en : a.entries) EXPECT_EQ(en.value, en.g);
  auto swap = swap_homeo(g2);
  auto s = derive_cocycle(g2, g2, swap);
  auto letter_swap = letterwise(g2, g2, {{"a", "b"}, {"b", "a"}});
  EXPECT_TRUE(coe_check(g2, g2, swap, letter_swap, letter_swap).pass);
  EXPECT_TRUE(pointwise(g2, g2, swap, s));
  for (const auto& en : s.entries) {
    auto x = witness_point(g2, en.on);
    ASSERT_TRUE(x);
    EXPECT_EQ(letter_swap.at(en.g, *x), en.value);
  }
  // identity cocycle does not fit the swap
  auto ident = letterwise(g2, g2, {});
  auto r = coe_check(g2, g2, swap, ident, ident);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failure, "a_identity");
}

TEST(Cocycle, HExample) {
  auto h = corpus::h();
  auto phi = h_homeo(h);
  auto a = derive_cocycle(h, h, phi);
  auto b = derive_cocycle(h, h, inverse(h, h, phi));
  EXPECT_TRUE(pointwise(h, h, phi, a));
  EXPECT_TRUE(coe_check(h, h, phi, a, b).pass);
  // c sends Z(v) into Z(c), which phi carries to Z(dc)
  auto x = parse_point(h, "(a)^inf");
  EXPECT_EQ(to_string(h, *a.at(parse_word(h, "c"), x)), "d.c");
  EXPECT_EQ(to_string(h, *evaluate(h, a, parse_word(h, "d.c"), x)), "c");
}

TEST(CoeToOe, Examples) {
  auto g2 = corpus::g2();
  auto id = identity_homeo(g2);
  auto ident = letterwise(g2, g2, {});
  auto oe = coe_to_oe(g2, g2, id, ident, ident);
  ASSERT_EQ(oe.k.size(), 2u);
  for (const auto& [c, v] : oe.k) EXPECT_EQ(v, 0);
  for (const auto& [c, v] : oe.l) EXPECT_EQ(v, 1);
  EXPECT_TRUE(oe_check(g2, g2, id, oe).pass);

  auto swap = swap_homeo(g2);
  auto ls = letterwise(g2, g2, {{"a", "b"}, {"b", "a"}});
  auto soe = coe_to_oe(g2, g2, swap, ls, ls);
  for (const auto& [c, v] : soe.k) EXPECT_EQ(v, 0);
  for (const auto& [c, v] : soe.l) EXPECT_EQ(v, 1);
  EXPECT_TRUE(oe_check(g2, g2, swap, soe).pass);

  OEData zero = soe;
  for (auto* m : {&zero.k, &zero.l, &zero.k_prime, &zero.l_prime})
    for (auto& [c, v] : *m) v = 0;
  EXPECT_FALSE(oe_check(g2, g2, swap, zero).pass);

  Cocycle broken = ident;
  for (auto& en : broken.entries)
    if (en.g.letters().front().exponent < 0) en.value = parse_word(g2, "a^-1.b");
  EXPECT_THROW(coe_to_oe(g2, g2, id, broken, ident), FormError);
}

TEST(CoeToOe, SingularRemainder) {
  auto g4 = corpus::g4();
  auto id = identity_homeo(g4);
  auto a = derive_cocycle(g4, g4, id);
  auto oe = coe_to_oe(g4, g4, id, a, a);
  // the sink w contributes Z(w) with value 0
  bool found = false;
  for (const auto& [c, v] : oe.k)
    if (c.stem.is_vertex() && c.stem.range() == g4.vertex("w")) found = v == 0;
  EXPECT_TRUE(found);
  EXPECT_TRUE(oe_check(g4, g4, id, oe).pass);
}

TEST(OeCheck, AnyDataOnG1) {
  auto g1 = corpus::g1();
  auto id = identity_homeo(g1);
  auto x = parse_set(g1, "Z(v)");
  for (long k : {0, 1, 3})
    for (long l : {0, 2}) {
      OEData oe{{{x[0], k}}, {{x[0], l}}, {{x[0], l}}, {{x[0], k}}};
      EXPECT_TRUE(oe_check(g1, g1, id, oe).pass);
    }
  OEData oe{{{x[0], 0}}, {{x[0], 1}}, {{x[0], 0}}, {{x[0], 1}}};
  EXPECT_THROW(oe_to_coe(g1, g1, id, oe), PreconditionError);
}

TEST(OeToCoe, Reconstructs) {
  for (auto [name, g, phi] : std::vector<std::tuple<std::string, Graph, PrefixHomeo>>{
           {"g2-id", corpus::g2(), identity_homeo(corpus::g2())},
           {"g2-swap", corpus::g2(), swap_homeo(corpus::g2())},
           {"h", corpus::h(), h_homeo(corpus::h())},
           {"g4", corpus::g4(), identity_homeo(corpus::g4())}}) {
    auto a = derive_cocycle(g, g, phi);
    auto b = derive_cocycle(g, g, inverse(g, g, phi));
    auto oe = coe_to_oe(g, g, phi, a, b);
    EXPECT_TRUE(oe_check(g, g, phi, oe).pass) << name;
    auto back = oe_to_coe(g, g, phi, oe);
    ASSERT_TRUE(back.complete) << name << ": " << back.reason;
    EXPECT_TRUE(coe_check(g, g, phi, back.a, back.b).pass) << name;
    // agrees with the original cocycle pointwise
    for (const auto& x : enumerate_points(g, 4))
      for (const auto& gen : generators(g))
        if (member(x, domain(g, gen))) EXPECT_EQ(back.a.at(gen, x), a.at(gen, x)) << name;
  }
}

TEST(OeJson, Roundtrip) {
  auto h = corpus::h();
  auto phi = h_homeo(h);
  auto j = to_json(h, h, phi);
  auto back = homeo_from_json(h, h, j);
  EXPECT_EQ(back.rules, phi.rules);
  auto a = derive_cocycle(h, h, phi);
  auto a2 = cocycle_from_json(h, h, to_json(h, h, a), "a");
  ASSERT_EQ(a2.entries.size(), a.entries.size());
  auto oe = coe_to_oe(h, h, phi, a, a2);
  auto oe2 = oe_from_json(h, h, to_json(h, h, oe));
  EXPECT_EQ(oe2.k.size(), oe.k.size());
  EXPECT_THROW(homeo_from_json(h, h, nlohmann::json::object()), SchemaError);
}
