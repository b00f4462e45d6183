#include <CLI11.hpp>
#include <iostream>

#include "aritygap/cli.hpp"

using aritygap::cli::Command;

namespace {

void add_format(CLI::App* sub, Command& cmd) {
  sub->add_flag_callback(
      "--structured", [&cmd] { cmd.format = Command::Format::structured; },
      "line-oriented key-value output");
  sub->add_option_function<std::string>(
      "--format",
      [&cmd](const std::string& v) {
        if (v == "human")
          cmd.format = Command::Format::human;
        else if (v == "structured")
          cmd.format = Command::Format::structured;
        else
          throw CLI::ValidationError("--format must be human or structured");
      },
      "human | structured");
}

void add_common(CLI::App* sub, Command& cmd, std::string& field_text) {
  sub->add_option("--field", field_text, "coefficient field: Q or p,k");
  sub->add_option("--table", cmd.table_path, "read a function table from this file");
  sub->add_option("expression", cmd.expression, "polynomial expression (stdin when omitted)");
  add_format(sub, cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arity gap analysis of polynomial functions over exact fields"};
  app.require_subcommand(1);

  Command cmd;
  std::string field_text = "Q";

  auto* gap = app.add_subcommand("gap", "essential arity, gap, quasi-arity and minors");
  auto* minors = app.add_subcommand("minors", "all identification minors");
  auto* decompose = app.add_subcommand("decompose", "g + h decomposition when one applies");
  auto* oddsupp = app.add_subcommand("oddsupp", "oddsupp determination tests");
  auto* interpolate = app.add_subcommand("interpolate", "canonical polynomial of a table");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* counterexample =
      app.add_subcommand("counterexample", "the odd-order gap-2 product construction");

  for (CLI::App* sub : {gap, minors, decompose, oddsupp, interpolate})
    add_common(sub, cmd, field_text);

  verify->add_option("--suite", cmd.suite,
                     "general-classification | char2 | char0 | delta-lemma | oddsupp-dim | "
                     "counterexample")
      ->required();
  verify->add_option("--seed", cmd.seed, "random seed");
  verify->add_option("--count", cmd.count, "sample / instance count");
  verify->add_option("--n", cmd.n, "arity bound");
  verify->add_option("--q", cmd.q, "field order");
  verify->add_option("--k", cmd.k, "domain size");
  verify->add_option("--m", cmd.m, "codomain size");
  add_format(verify, cmd);

  counterexample->add_option("--q", cmd.q, "odd prime power")->required();
  counterexample->add_option("--n", cmd.n, "arity")->required();
  add_format(counterexample, cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    cmd.field = aritygap::cli::parse_field_spec(field_text);
  } catch (const aritygap::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (gap->parsed()) cmd.verb = Command::Verb::gap;
  if (minors->parsed()) cmd.verb = Command::Verb::minors;
  if (decompose->parsed()) cmd.verb = Command::Verb::decompose;
  if (oddsupp->parsed()) cmd.verb = Command::Verb::oddsupp;
  if (interpolate->parsed()) cmd.verb = Command::Verb::interpolate;
  if (verify->parsed()) cmd.verb = Command::Verb::verify;
  if (counterexample->parsed()) cmd.verb = Command::Verb::counterexample;

  return aritygap::cli::run(cmd, std::cin, std::cout, std::cerr);
}
