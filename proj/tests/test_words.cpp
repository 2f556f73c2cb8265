#include <gtest/gtest.h>

#include "gforge/corpus.hpp"
#include "gforge/words.hpp"

using namespace gforge;

namespace {

std::vector<ReducedWord> all_words(const Graph& g, std::size_t max_len) {
  auto gens = generators(g);
  std::vector<ReducedWord> out{ReducedWord{}};
  std::vector<ReducedWord> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<ReducedWord> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        auto x = fg_mul(w, s);
        if (x.length() == len) next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = next;
  }
  return out;
}

}  // namespace

TEST(Words, Arithmetic) {
  auto g = corpus::g2();
  auto w = [&](const char* s) { return parse_word(g, s); };
  EXPECT_TRUE(fg_mul(w("a.b^-1"), w("b.a^-1")).is_identity());
  EXPECT_EQ(to_string(g, fg_mul(w("a"), w("b"))), "a.b");
  EXPECT_EQ(fg_inv(w("a.b^-1")), w("b.a^-1"));
  EXPECT_EQ(to_string(g, ReducedWord{}), "1");
  EXPECT_TRUE(w("1").is_identity());
  EXPECT_EQ(w("a.a^-1.b").length(), 1u);
}

TEST(Words, Admissibility) {
  auto g = corpus::g2();
  EXPECT_TRUE(is_admissible(g, parse_word(g, "a.b^-1")));
  EXPECT_FALSE(is_admissible(g, parse_word(g, "a^-1.b")));
  auto g3 = corpus::g3();
  EXPECT_TRUE(is_admissible(g3, parse_word(g3, "e")));
  EXPECT_FALSE(is_admissible(g3, parse_word(g3, "e.e")));
  auto form = admissible_form(g3, parse_word(g3, "e^-1"));
  ASSERT_TRUE(form);
  EXPECT_TRUE(form->alpha.is_vertex());
  EXPECT_EQ(form->alpha.range(), g3.vertex("w"));
}

TEST(WordsProperty, GroupAxioms) {
  auto g = corpus::g2();
  auto ws = all_words(g, 4);
  ASSERT_EQ(ws.size(), 1u + 4 + 12 + 36 + 108);
  for (const auto& u : ws) {
    EXPECT_EQ(fg_inv(fg_inv(u)), u);
    EXPECT_EQ(fg_mul(u, ReducedWord{}), u);
    EXPECT_EQ(fg_mul(ReducedWord{}, u), u);
    EXPECT_TRUE(fg_mul(u, fg_inv(u)).is_identity());
  }
  std::vector<ReducedWord> small(ws.begin(), ws.begin() + 17);
  for (const auto& u : ws)
    for (const auto& v : small)
      for (const auto& x : small) EXPECT_EQ(fg_mul(fg_mul(u, v), x), fg_mul(u, fg_mul(v, x)));
}

TEST(Words, ParseRoundTrip) {
  auto g = corpus::g5pp();
  for (const char* s : {"f[2].g^-1", "g", "f[0]^-1.f[1]^-1", "1"}) EXPECT_EQ(to_string(g, parse_word(g, s)), s);
  EXPECT_THROW(parse_word(g, "h"), SchemaError);
}
