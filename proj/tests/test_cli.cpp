#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>

#include "gforge/cli.hpp"

using namespace gforge;
using namespace gforge::cli;

namespace {

std::string data(const std::string& name) { return std::string(GFORGE_DATA) + "/" + name; }

const Verdict& verdict(const Report& r, const std::string& id) {
  for (const auto& v : r.verdicts)
    if (v.id == id) return v;
  throw std::out_of_range(id);
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

int run(const std::vector<std::string>& args) {
  std::string cmd = "cd " + quote(GFORGE_DATA) + " && " + quote(GFORGE_BIN);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Digest, Framing) {
  // length-prefixed chunks, checked against an independent sha256
  EXPECT_EQ(sha256_hex({"abc"}), "aab5f9ae99b2e38fb462025c8f72f570c9c811705d2a4277dc855d7fa293fe97");
  EXPECT_EQ(sha256_hex({"abc", ""}), "bdf1004d3099a7a3712d12c456e15ebb2b81d43740868f77760be8f639855aad");
}

TEST(ReportShape, Invariants) {
  Report r{"x", "d"};
  EXPECT_THROW(r.add("f", Status::fail), std::logic_error);
  EXPECT_THROW(r.add("i", Status::inconclusive, "why"), std::logic_error);
  r.pass("a");
  EXPECT_EQ(r.exit_code(), 0);
  r.add("i", Status::inconclusive, "why", {{"depth", 3}});
  EXPECT_EQ(r.exit_code(), 2);
  r.add("f", Status::fail, "w");
  EXPECT_EQ(r.exit_code(), 1);
  auto text = r.render("json");
  EXPECT_EQ(nlohmann::json::parse(text).dump(2) + "\n", text);
  EXPECT_EQ(text.find("timing"), std::string::npos);
  EXPECT_NE(r.render("text").find("[inconclusive] i"), std::string::npos);
}

TEST(Check, Examples) {
  Options opt;
  auto g2 = cmd_check(data("g2.json"), opt);
  EXPECT_EQ(g2.exit_code(), 0);
  EXPECT_EQ(verdict(g2, "condition_PI").status, Status::pass);
  EXPECT_EQ(verdict(g2, "condition_L").status, Status::pass);
  const auto& table = g2.result["trivial_isotropy_table"];
  ASSERT_FALSE(table.empty());
  for (const auto& row : table) EXPECT_TRUE(row["point"].is_string()) << row.dump();

  auto g1 = cmd_check(data("g1.json"), opt);
  EXPECT_EQ(g1.exit_code(), 1);
  EXPECT_EQ(verdict(g1, "condition_L").status, Status::fail);
  EXPECT_EQ(verdict(g1, "condition_L").witness["loop"], "a");
  EXPECT_EQ(verdict(g1, "freeness_consistency").status, Status::pass);

  EXPECT_THROW(cmd_check(data("missing.json"), opt), UsageError);
}

TEST(Check, SchemaErrors) {
  auto path = std::string(::testing::TempDir()) + "gforge_bad.json";
  for (const char* body : {"{", "{\"vertices\": 3}", "{\"vertices\": [\"v\"], \"edges\": [{\"id\": 1}]}"}) {
    std::ofstream(path) << body;
    EXPECT_THROW(cmd_check(path, {}), SchemaError) << body;
  }
}

TEST(Witness, Examples) {
  Options opt;
  auto r = cmd_witness(data("g2.json"), "Z(v)", opt);
  EXPECT_EQ(r.exit_code(), 0);
  ASSERT_EQ(r.result["witnesses"].size(), 1u);
  EXPECT_EQ(r.result["witnesses"][0]["g"], "a");
  EXPECT_EQ(r.result["witnesses"][0]["h"], "b");
  EXPECT_EQ(verdict(r, "witness[0]").status, Status::pass);

  auto g1 = cmd_witness(data("g1.json"), "Z(v)", opt);
  EXPECT_EQ(g1.exit_code(), 1);
  EXPECT_NE(verdict(g1, "condition_PI").witness.get<std::string>().find("condition_K"), std::string::npos);
  EXPECT_THROW(cmd_witness(data("g2.json"), "Z(v", opt), SchemaError);
}

TEST(Oe, Examples) {
  Options opt;
  auto id = cmd_oe(data("g2.json"), data("g2.json"), data("oe_identity_g2.json"), "oe2coe", opt);
  EXPECT_EQ(id.exit_code(), 0);
  EXPECT_EQ(verdict(id, "roundtrip").status, Status::pass);
  auto swap = cmd_oe(data("g2.json"), data("g2.json"), data("oe_swap_g2.json"), "coe2oe", opt);
  EXPECT_EQ(swap.exit_code(), 0);
  for (const auto& en : swap.result["oe"]["k"]) EXPECT_EQ(en["value"], 0);
  for (const auto& en : swap.result["oe"]["l"]) EXPECT_EQ(en["value"], 1);
  auto g1 = cmd_oe(data("g1.json"), data("g1.json"), data("oe_identity_g1.json"), "oe2coe", opt);
  EXPECT_EQ(g1.exit_code(), 1);
  EXPECT_EQ(verdict(g1, "condition_L").status, Status::fail);
  EXPECT_THROW(cmd_oe(data("g2.json"), data("g2.json"), data("g2.json"), "check", opt), SchemaError);
  EXPECT_THROW(cmd_oe(data("g2.json"), data("g2.json"), data("oe_identity_g2.json"), "sideways", opt), UsageError);
}

TEST(Sgp, Examples) {
  Options opt;
  SgpArgs u;
  u.U = "xP - xxP";
  auto f2 = cmd_sgp("F+2", "paradox", u, opt);
  EXPECT_EQ(f2.exit_code(), 0);
  EXPECT_EQ(f2.result["witness"]["g"], "xyx");
  EXPECT_EQ(f2.result["witness"]["h"], "xyy");
  EXPECT_EQ(f2.bounds["depth"], 8);

  auto n1 = cmd_sgp("N^1", "paradox", {}, opt);
  EXPECT_EQ(n1.exit_code(), 1);

  SgpArgs a;
  a.U = "0+2Z ! 0+6Z";
  auto axb = cmd_sgp("Z_axb", "axb", a, opt);
  EXPECT_EQ(axb.exit_code(), 0);
  EXPECT_EQ(axb.result["witness"]["g"], "(0,7)");
  EXPECT_EQ(axb.result["witness"]["h"], "(6,7)");
  EXPECT_EQ(axb.bounds["residues_mod"], 84);

  auto g0 = cmd_sgp("N^2", "g0", {}, opt);
  EXPECT_EQ(g0.result["G0"], "Z^2");
  EXPECT_EQ(cmd_sgp("F+2", "g0", {}, opt).result["G0"], "{e}");
  EXPECT_EQ(cmd_sgp("Z_axb", "g0", {}, opt).exit_code(), 2);
  EXPECT_EQ(cmd_sgp("F+2", "independence", {}, opt).exit_code(), 0);

  EXPECT_THROW(cmd_sgp("Q", "paradox", {}, opt), SchemaError);
  EXPECT_THROW(cmd_sgp("F+2", "nothing", {}, opt), UsageError);
  EXPECT_THROW(cmd_sgp("F+2", "axb", a, opt), UsageError);
}

TEST(Determinism, SameReportTwice) {
  Options opt;
  EXPECT_EQ(cmd_check(data("h.json"), opt).render("json"), cmd_check(data("h.json"), opt).render("json"));
  SgpArgs a;
  a.U = "0+2Z ! 0+6Z";
  EXPECT_EQ(cmd_sgp("Z_axb", "axb", a, opt).render("text"), cmd_sgp("Z_axb", "axb", a, opt).render("text"));
}

TEST(ExitCodes, WholeCorpus) {
  std::ifstream in(data("corpus.json"));
  auto corpus = nlohmann::json::parse(in);
  ASSERT_GT(corpus.size(), 40u);
  for (const auto& c : corpus) {
    auto args = c["args"].get<std::vector<std::string>>();
    EXPECT_EQ(run(args), c["exit"].get<int>()) << c["args"].dump();
  }
  EXPECT_EQ(run({"--format", "yaml", "check", "g2.json"}), 64);
  EXPECT_EQ(run({}), 64);
  EXPECT_EQ(run({"grammar"}), 0);
}
