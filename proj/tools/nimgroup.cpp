#include <iostream>

#include <CLI11.hpp>

#include "nimgroup/commands.hpp"

int main(int argc, char** argv) {
  using namespace nimgroup;
  CLI::App app{"Nim-values of the generation games DNG and GEN on finite groups"};
  app.require_subcommand(1);

  const std::string spec_help =
      "group spec: cyclic:n, dihedral:n, q8, heisenberg:p, frobenius:p[:r], semidirect:m:k:a, "
      "product:<spec>,<spec>, file:<path>";
  const auto games = CLI::IsMember({"dng", "gen", "both"});

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "structure-digraph analysis of one group");
  a->add_option("spec", analyze.spec, spec_help)->required();
  a->add_option("--game", analyze.game, "dng, gen or both")->check(games)->capture_default_str();
  a->add_option("--dot", analyze.dot, "write the structure digraph as DOT");
  a->add_option("--json", analyze.json, "write the analysis report as JSON");
  a->add_flag("--simplified", analyze.simplified, "print and export the simplified digraph");
  a->add_flag("--oracle", analyze.oracle, "also solve the game by brute force");

  CompareOptions compare;
  auto* c = app.add_subcommand("compare", "check the structure method against brute-force play");
  c->add_option("spec", compare.spec, spec_help)->required();
  c->add_option("--game", compare.game, "dng, gen or both")->check(games)->capture_default_str();
  c->add_option("--max-states", compare.max_states, "oracle state cap (default from NIMGROUP_MAX_STATES or 2^24)")
      ->check(CLI::PositiveNumber);

  BatchOptions batch;
  auto* b = app.add_subcommand("batch", "nim-value table over a family of groups");
  b->add_option("--family", batch.family, "frobenius, corpus:small or specs")
      ->check(CLI::IsMember({"frobenius", "corpus:small", "specs"}))
      ->capture_default_str();
  b->add_option("--p-list", batch.p_list, "primes for the frobenius family")->delimiter(',');
  b->add_option("--spec", batch.specs, "group specs for the specs family");
  b->add_option("--game", batch.game, "dng, gen or both")->check(games)->capture_default_str();
  b->add_option("--json", batch.json, "write the table as JSON");

  PlayCommandOptions play;
  auto* p = app.add_subcommand("play", "play a game in the terminal");
  p->add_option("spec", play.spec, spec_help)->required();
  p->add_option("--game", play.game, "dng or gen")->check(CLI::IsMember({"dng", "gen"}))->capture_default_str();
  p->add_option("--vs", play.vs, "engine or human")->check(CLI::IsMember({"engine", "human"}))->capture_default_str();
  p->add_flag("--engine-first", play.engine_first, "the engine makes the first move");
  p->add_option("--max-states", play.max_states, "oracle state cap")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*a) return cmd_analyze(analyze, std::cout, std::cerr);
  if (*c) return cmd_compare(compare, std::cout, std::cerr);
  if (*b) return cmd_batch(batch, std::cout, std::cerr);
  return cmd_play(play, std::cin, std::cout, std::cerr);
}
