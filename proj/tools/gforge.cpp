#include <iostream>

#include <CLI11.hpp>

#include "gforge/cli.hpp"

namespace {

constexpr const char* grammar = R"G(set      := cylinder { "+" cylinder }
cylinder := "Z(" stem [ minus "{" edge { "," edge } "}" ] ")"
minus    := "-" | "\"
stem     := vertex | edge { "." edge }
edge     := id [ "[" index "]" ]
word     := "1" | letter { "." letter }
letter   := edge [ "^-1" ]
point    := stem | stem "." "(" stem ")^inf" | "(" stem ")^inf"

sgp ideals:   "N", "2+N", "(1,0)+N^2", "P", "xyP", "empty", "0+2Z"
sgp opens:    ideal { ("!" | " - ") ideal }
sgp elements: "(1,2)" or "3" in N^k, "xy^-1" or "e" in F+n, "(b,a)" in Z_axb
)G";

}  // namespace

int main(int argc, char** argv) {
  using namespace gforge;
  CLI::App app{"gforge: partial actions, boundary groupoids and paradoxical decompositions"};
  app.require_subcommand(1);
  cli::Options opt;
  app.add_option("--depth", opt.depth, "cylinder / sample depth");
  app.add_option("--word-bound", opt.word_bound, "maximal word length");
  app.add_option("--modulus-bound", opt.modulus, "modulus / stage bound for semigroup ideals");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", opt.seed, "seed for randomized corpora");

  std::string graph, graph_f, data, set, direction = "check", family, sub;
  cli::SgpArgs sargs;

  auto* check = app.add_subcommand("check", "conditions L, K, PI and topological freeness of a graph");
  check->add_option("graph", graph, "graph JSON")->required();

  auto* witness = app.add_subcommand("witness", "paradoxical (g,h)-witnesses for a compact open");
  witness->add_option("graph", graph, "graph JSON")->required();
  witness->add_option("set", set, "set expression, e.g. \"Z(v - {a})\"")->required();

  auto* oe = app.add_subcommand("oe", "continuous orbit equivalence data");
  oe->add_option("graph_e", graph, "graph E")->required();
  oe->add_option("graph_f", graph_f, "graph F")->required();
  oe->add_option("data", data, "homeomorphism and cocycle / OE data")->required();
  oe->add_option("--direction", direction, "check, coe2oe or oe2coe")
      ->check(CLI::IsMember({"check", "coe2oe", "oe2coe"}));

  auto* sgp = app.add_subcommand("sgp", "semigroup families N^k, F+n, Z_axb");
  sgp->add_option("family", family, "N^k, F+n or Z_axb")->required();
  sgp->add_option("subcommand", sub, "ideals, independence, g0, freeness, paradox, axb, hypothesis, probe")
      ->required();
  sgp->add_option("--U", sargs.U, "basic open X - Y1 - ...");
  sgp->add_option("--p", sargs.p);
  sgp->add_option("--q", sargs.q);
  sgp->add_option("--g", sargs.g, "group element for g0");
  sgp->add_option("--gens", sargs.gens, "comma separated generators");
  sgp->add_option("--relations", sargs.relations, "a.b=c.d, ...");
  sgp->add_option("--builtin", sargs.builtin, "free or thompson");

  app.add_subcommand("grammar", "print the input grammar");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  if (app.got_subcommand("grammar")) {
    std::cout << grammar;
    return 0;
  }

  try {
    cli::Report r;
    if (check->parsed()) r = cli::cmd_check(graph, opt);
    else if (witness->parsed()) r = cli::cmd_witness(graph, set, opt);
    else if (oe->parsed()) r = cli::cmd_oe(graph, graph_f, data, direction, opt);
    else r = cli::cmd_sgp(family, sub, sargs, opt);
    std::cout << r.render(opt.format);
    return r.exit_code();
  } catch (const cli::UsageError& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 64;
  } catch (const SchemaError& e) {
    std::cerr << "gforge: schema error: " << e.what() << "\n";
    return 64;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "gforge: schema error: " << e.what() << "\n";
    return 64;
  } catch (const PreconditionError& e) {
    std::cerr << "gforge: precondition: " << e.what() << "\n";
    return 1;
  } catch (const FormError& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 1;
  } catch (const SizeError& e) {
    std::cerr << "gforge: bound reached: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "gforge: " << e.what() << "\n";
    return 64;
  }
}
