#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "aritygap/analyzer.hpp"
#include "aritygap/cli.hpp"

using namespace aritygap;
using cli::Command;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run_cmd(const Command& cmd, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(cmd, in, out, err);
  return {code, out.str(), err.str()};
}

Command base(Command::Verb verb) {
  Command cmd;
  cmd.verb = verb;
  cmd.format = Command::Format::structured;
  return cmd;
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  for (std::string l; std::getline(is, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("gap verb reproduces the worked example and is deterministic") {
  Command cmd = base(Command::Verb::gap);
  cmd.field = cli::parse_field_spec("Q");
  cmd.expression = "x1*x3 - x2*x3";
  Outcome a = run_cmd(cmd);
  Outcome b = run_cmd(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);  // byte-identical structured reports
  CHECK(has_line(a.out, "aritygap-report 1"));
  CHECK(has_line(a.out, "essential_arity 3"));
  CHECK(has_line(a.out, "gap 1"));
  CHECK(has_line(a.out, "minor_1_2 0"));
  CHECK(has_line(a.out, "minor_2_3 2"));
}

TEST_CASE("gap verb reads stdin when no expression is given") {
  Command cmd = base(Command::Verb::gap);
  cmd.field = cli::parse_field_spec("2,1");
  Outcome r = run_cmd(cmd, "x1 + x2 + x3 + x4\n");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "gap 2"));
  CHECK(has_line(r.out, "case gap2_general"));
}

TEST_CASE("exit codes") {
  Command cmd = base(Command::Verb::gap);
  cmd.field = cli::parse_field_spec("Q");
  cmd.expression = "5";  // constant: gap undefined
  CHECK(run_cmd(cmd).code == 2);

  cmd.expression = "x1 + + x2";
  Outcome r = run_cmd(cmd);
  CHECK(r.code == 2);
  CHECK(r.err.find("offset 5") != std::string::npos);

  Command v = base(Command::Verb::verify);
  v.suite = "no-such-suite";
  CHECK(run_cmd(v).code == 2);
}

TEST_CASE("decompose verb") {
  Command cmd = base(Command::Verb::decompose);
  cmd.field = cli::parse_field_spec("5,1");
  cmd.expression = "x4 + DELTA4";
  Outcome r = run_cmd(cmd);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "gap 3"));
  CHECK(has_line(r.out, "kind low-arity"));
  CHECK(has_line(r.out, "p 3"));
  CHECK(has_line(r.out, "g x4"));

  Command c0 = base(Command::Verb::decompose);
  c0.field = cli::parse_field_spec("Q");
  c0.expression = "2 + (x1+x2+x3+x4)*DELTA4";
  Outcome r0 = run_cmd(c0);
  CHECK(r0.code == 0);
  CHECK(has_line(r0.out, "gap 4"));
  CHECK(has_line(r0.out, "g 2"));
  CHECK(has_line(r0.out, "delta_quotient x1 + x2 + x3 + x4"));
}

TEST_CASE("oddsupp verb") {
  Command cmd = base(Command::Verb::oddsupp);
  cmd.field = cli::parse_field_spec("2,1");
  cmd.expression = "x1 + x2 + x3";
  Outcome r = run_cmd(cmd);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "determined yes"));
  CHECK(has_line(r.out, "symmetric yes"));

  cmd.expression = "x1*x2";
  Outcome r2 = run_cmd(cmd);
  CHECK(r2.code == 0);
  CHECK(has_line(r2.out, "determined no"));
  CHECK(has_line(r2.out, "distinct_exponents no"));

  // odd characteristic: the table oracle alone decides
  Command odd = base(Command::Verb::oddsupp);
  odd.field = cli::parse_field_spec("3,1");
  odd.expression = "x1 + x2";
  Outcome r3 = run_cmd(odd);
  CHECK(r3.code == 0);
  CHECK(has_line(r3.out, "determined no"));
  CHECK_FALSE(has_line(r3.out, "symmetric yes"));
}

TEST_CASE("table input and interpolation") {
  const std::string path = "cli_test_table.txt";
  {
    std::ofstream f(path);
    f << "2 2 2\n0 0 0 1\n";  // AND
  }
  Command gap = base(Command::Verb::gap);
  gap.table_path = path;
  Outcome r = run_cmd(gap);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "gap 1"));

  Command interp = base(Command::Verb::interpolate);
  interp.field = cli::parse_field_spec("2,1");
  interp.table_path = path;
  Outcome r2 = run_cmd(interp);
  CHECK(r2.code == 0);
  CHECK(has_line(r2.out, "polynomial x1*x2"));

  Command minors = base(Command::Verb::minors);
  minors.table_path = path;
  Outcome r3 = run_cmd(minors);
  CHECK(r3.code == 0);
  CHECK(has_line(r3.out, "minor_1_2_essential 1"));

  Command missing = base(Command::Verb::gap);
  missing.table_path = "does_not_exist.txt";
  CHECK(run_cmd(missing).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("table decomposition through the command layer") {
  auto gf5 = Field::finite(5, 1);
  Polynomial f = add(Polynomial::variable(gf5, 4, 4), difference_product(4, gf5));
  const std::string path = "cli_test_decompose_table.txt";
  {
    std::ofstream out(path);
    table_of(f).write(out);
  }
  Command cmd = base(Command::Verb::decompose);
  cmd.field = cli::parse_field_spec("5,1");
  cmd.table_path = path;
  Outcome r = run_cmd(cmd);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "p 3"));
  std::remove(path.c_str());
}

TEST_CASE("verify and counterexample verbs") {
  Command v = base(Command::Verb::verify);
  v.suite = "oddsupp-dim";
  Outcome r = run_cmd(v);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "mismatches 0"));
  CHECK(has_line(r.out, "checked 48"));

  Command g = base(Command::Verb::verify);
  g.suite = "general-classification";
  g.k = 2;
  g.m = 2;
  g.n = 2;
  Outcome rg = run_cmd(g);
  CHECK(rg.code == 0);
  CHECK(has_line(rg.out, "checked 16"));

  Command c = base(Command::Verb::counterexample);
  c.q = 3;
  c.n = 3;
  Outcome rc = run_cmd(c);
  CHECK(rc.code == 0);
  CHECK(has_line(rc.out, "gap 2"));
}

TEST_CASE("minors verb lists all identification minors") {
  Command cmd = base(Command::Verb::minors);
  cmd.field = cli::parse_field_spec("Q");
  cmd.expression = "x1*x3 - x2*x3";
  Outcome r = run_cmd(cmd);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "minor_1_2 0"));
  CHECK(has_line(r.out, "minor_1_3 -x2*x3 + x3^2"));  // graded-lex order
  CHECK(has_line(r.out, "minor_1_3_essential 2"));
}
