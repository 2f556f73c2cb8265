#include <gtest/gtest.h>

#include "gforge/corpus.hpp"
#include "gforge/groupoid.hpp"

using namespace gforge;

TEST(Transformation, Operations) {
  auto g = corpus::g2();
  auto p = make_ptg(g, parse_word(g, "a.b^-1"), parse_point(g, "b.(a)^inf"));
  auto inv = ptg_inv(g, p);
  EXPECT_EQ(to_string(g, inv.g), "b.a^-1");
  EXPECT_EQ(inv.x, parse_point(g, "(a)^inf"));
  auto x = parse_point(g, "(a.b)^inf");
  auto unit = make_ptg(g, ReducedWord{}, x);
  EXPECT_EQ(ptg_compose(g, unit, unit), unit);
  auto ainv = make_ptg(g, parse_word(g, "a^-1"), parse_point(g, "a.(a.b)^inf"));
  auto a = make_ptg(g, parse_word(g, "a"), ptg_range(g, ainv));
  auto c = ptg_compose(g, a, ainv);
  EXPECT_TRUE(c.g.is_identity());
  EXPECT_THROW(ptg_compose(g, ainv, ainv), CompositionError);
  EXPECT_THROW(make_ptg(g, parse_word(g, "a.b^-1"), x), DomainError);
}

TEST(DeaconuRenault, Operations) {
  auto g1 = corpus::g1();
  auto ainf = parse_point(g1, "(a)^inf");
  auto p = make_dr(g1, ainf, 1, ainf);
  auto q = make_dr(g1, ainf, -1, ainf);
  auto pq = dr_compose(g1, p, q);
  EXPECT_EQ(pq.n, 0);
  EXPECT_EQ(pq.alpha, ainf);
  auto g2 = corpus::g2();
  auto b_a = parse_point(g2, "b.(a)^inf");
  auto a = parse_point(g2, "(a)^inf");
  auto d = make_dr(g2, b_a, 1, a);
  auto di = dr_inv(g2, d);
  EXPECT_EQ(di.alpha, a);
  EXPECT_EQ(di.n, -1);
  EXPECT_EQ(di.beta, b_a);
  EXPECT_THROW(dr_compose(g2, d, d), CompositionError);
  EXPECT_THROW(make_dr(g2, b_a, 0, parse_point(g2, "(b)^inf")), DomainError);
}

TEST(Isomorphism, Examples) {
  auto g = corpus::g2();
  auto p = make_ptg(g, parse_word(g, "a.b^-1"), parse_point(g, "b.(a)^inf"));
  auto d = to_dr(g, p);
  EXPECT_EQ(d.alpha, parse_point(g, "(a)^inf"));
  EXPECT_EQ(d.n, 0);
  EXPECT_EQ(d.beta, parse_point(g, "b.(a)^inf"));
  // a.a^inf is the same point as a^inf; the least witness is k = l = 1
  auto back = to_ptg(g, d);
  EXPECT_EQ(back, p);
  auto x = parse_point(g, "(a.b)^inf");
  auto u = to_dr(g, make_ptg(g, ReducedWord{}, x));
  EXPECT_EQ(u.alpha, x);
  EXPECT_EQ(u.n, 0);
  EXPECT_EQ(u.beta, x);
}

TEST(Isomorphism, Roundtrip) {
  auto r2 = roundtrip_report(corpus::g2(), 3, 3);
  EXPECT_TRUE(r2.pass);
  EXPECT_GE(r2.elements, 200u);
  EXPECT_TRUE(roundtrip_report(corpus::g1(), 3, 6).pass);
  auto r3 = roundtrip_report(corpus::g3(), 3, 3);
  EXPECT_TRUE(r3.pass);
  EXPECT_EQ(r3.elements, 4u);
  EXPECT_TRUE(roundtrip_report(corpus::g4(), 3, 3).pass);
  EXPECT_TRUE(roundtrip_report(corpus::h(), 3, 3).pass);
  EXPECT_TRUE(roundtrip_report(corpus::g5pp(), 2, 2).pass);
}

TEST(GroupoidProperty, Axioms) {
  for (auto g : {corpus::g2(), corpus::g4()}) {
    auto el = ptg_elements(g, 2, 2);
    for (const auto& p : el) {
      auto unit_r = PTGElement{ReducedWord{}, ptg_range(g, p)};
      auto unit_s = PTGElement{ReducedWord{}, p.x};
      EXPECT_EQ(ptg_compose(g, unit_r, p), p);
      EXPECT_EQ(ptg_compose(g, p, unit_s), p);
      EXPECT_EQ(ptg_compose(g, ptg_inv(g, p), p), unit_s);
      auto d = to_dr(g, p);
      EXPECT_EQ(dr_compose(g, dr_inv(g, d), d), to_dr(g, unit_s));
      for (const auto& q : el) {
        if (q.x != p.x && ptg_range(g, q) != p.x) continue;
        if (ptg_range(g, q) != p.x) continue;
        for (const auto& r : el) {
          if (ptg_range(g, r) != q.x) continue;
          EXPECT_EQ(ptg_compose(g, ptg_compose(g, p, q), r), ptg_compose(g, p, ptg_compose(g, q, r)));
          auto dp = to_dr(g, p), dq = to_dr(g, q), dr = to_dr(g, r);
          EXPECT_EQ(dr_compose(g, dr_compose(g, dp, dq), dr), dr_compose(g, dp, dr_compose(g, dq, dr)));
        }
      }
    }
  }
}
