#ifndef ARITYGAP_CLI_HPP
#define ARITYGAP_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "aritygap/field.hpp"

namespace aritygap::cli {

/// --field Q | --field p,k
struct FieldSpec {
  bool rational = true;
  unsigned p = 0, k = 0;
};

FieldSpec parse_field_spec(const std::string& text);
FieldPtr resolve_field(const FieldSpec& spec);

struct Command {
  enum class Verb { gap, minors, decompose, oddsupp, interpolate, verify, counterexample };
  enum class Format { human, structured };

  Verb verb = Verb::gap;
  FieldSpec field;
  bool field_given = false;
  std::optional<std::string> expression;  // positional; stdin when absent
  std::optional<std::string> table_path;
  Format format = Format::human;
  std::uint64_t seed = 1;
  std::string suite;  // verify
  std::optional<unsigned> n, q, k, m;
  std::optional<unsigned long long> count;
};

/// Dispatches a command.  Exit codes: 0 success, 1 internal verification
/// failure or suite mismatch, 2 precondition/parse errors.  Structured
/// reports are line-oriented "key value" records with a fixed key order and
/// no timing data, so identical commands produce byte-identical output.
int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace aritygap::cli

#endif
