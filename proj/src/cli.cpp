#include "aritygap/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "aritygap/analyzer.hpp"
#include "aritygap/parser.hpp"
#include "aritygap/verify.hpp"

namespace aritygap::cli {

namespace {

constexpr const char* kReportVersion = "aritygap-report 1";

std::string field_label(const FieldPtr& f) {
  if (f->is_rational()) return "Q";
  return "GF(" + std::to_string(f->order()) + ")";
}

std::string table_line(const FunctionTable& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? " " : "") << t.value(i);
  return os.str();
}

class Report {
public:
  Report(std::ostream& os, Command::Format format, const std::string& verb) : os_(os),
        structured_(format == Command::Format::structured) {
    if (structured_) os_ << kReportVersion << "\nverb " << verb << '\n';
  }
  bool structured() const { return structured_; }
  void kv(const std::string& key, const std::string& value) {
    if (structured_)
      os_ << key << ' ' << value << '\n';
    else
      os_ << key << ": " << value << '\n';
  }
  void kv(const std::string& key, unsigned long long value) { kv(key, std::to_string(value)); }
  void text(const std::string& line) {
    if (!structured_) os_ << line << '\n';
  }

private:
  std::ostream& os_;
  bool structured_;
};

std::string join_indices(const std::vector<unsigned>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

void write_gap_report(Report& rep, const GapReport& r) {
  rep.kv("arity", r.arity);
  rep.kv("essential", join_indices(r.essential));
  rep.kv("essential_arity", r.essential_arity);
  if (r.quasi_arity) rep.kv("quasi_arity", *r.quasi_arity);
  rep.kv("gap", r.gap);
  rep.kv("case", to_string(r.theorem_case));
  rep.kv("witness", std::to_string(r.witness.first) + " " + std::to_string(r.witness.second));
  rep.kv("restriction_oddsupp", r.restriction_oddsupp ? "yes" : "no");
  for (const auto& me : r.minor_arities)
    rep.kv("minor_" + std::to_string(me.i) + "_" + std::to_string(me.j), me.essential_arity);
}

Polynomial input_polynomial(const Command& cmd, std::istream& in, const FieldPtr& field) {
  std::string text;
  if (cmd.expression) {
    text = *cmd.expression;
  } else {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  if (text.empty()) throw PreconditionError("no input expression");
  return parse_polynomial(text, field);
}

FunctionTable input_table(const Command& cmd) {
  std::ifstream file(*cmd.table_path);
  if (!file) throw PreconditionError("cannot open table file '" + *cmd.table_path + "'");
  return FunctionTable::read(file);
}

// classification cross-check: a disagreement is an implementation bug
void check_classification(const FunctionTable& t, unsigned expected_gap) {
  FunctionTable core = drop_inessential(t);
  if (core.arity() < 2) return;
  if (classify_gap(core).gap != expected_gap)
    throw VerificationError("classification disagrees with the computed gap");
}

int run_gap(const Command& cmd, std::istream& in, std::ostream& out) {
  Report rep(out, cmd.format, "gap");
  if (cmd.table_path) {
    FunctionTable t = input_table(cmd);
    GapReport r = arity_gap(t);
    check_classification(t, r.gap);
    rep.kv("input", "table");
    rep.kv("domain", t.domain_size());
    rep.kv("codomain", t.codomain_size());
    write_gap_report(rep, r);
  } else {
    FieldPtr field = resolve_field(cmd.field);
    Polynomial f = input_polynomial(cmd, in, field);
    GapReport r = poly_gap(f);
    if (field->is_finite()) check_classification(table_of(canonicalize(f)), r.gap);
    rep.kv("field", field_label(field));
    rep.kv("polynomial", canonicalize(f).to_text());
    write_gap_report(rep, r);
  }
  return 0;
}

int run_minors(const Command& cmd, std::istream& in, std::ostream& out) {
  Report rep(out, cmd.format, "minors");
  if (cmd.table_path) {
    FunctionTable t = input_table(cmd);
    rep.kv("input", "table");
    rep.kv("arity", t.arity());
    for (unsigned i = 1; i <= t.arity(); ++i)
      for (unsigned j = 1; j <= t.arity(); ++j) {
        if (i == j) continue;
        FunctionTable m = identification_minor(t, i, j);
        rep.kv("minor_" + std::to_string(i) + "_" + std::to_string(j) + "_essential",
               essential_variables(m).size());
      }
  } else {
    FieldPtr field = resolve_field(cmd.field);
    Polynomial f = canonicalize(input_polynomial(cmd, in, field));
    rep.kv("field", field_label(field));
    rep.kv("polynomial", f.to_text());
    for (unsigned i = 1; i <= f.arity(); ++i)
      for (unsigned j = 1; j <= f.arity(); ++j) {
        if (i == j) continue;
        Polynomial m = identification_minor(f, i, j);
        const std::string tag = std::to_string(i) + "_" + std::to_string(j);
        rep.kv("minor_" + tag, m.to_text());
        rep.kv("minor_" + tag + "_essential", occurring_variables(m).size());
      }
  }
  return 0;
}

void write_decomposition(Report& rep, const Decomposition& d) {
  rep.kv("kind", d.kind == DecompositionKind::low_arity ? "low-arity" : "oddsupp");
  rep.kv("p", d.p);
  rep.kv("g", d.g.to_text());
  rep.kv("h", d.h.to_text());
  if (d.kind == DecompositionKind::low_arity)
    rep.kv("witness", std::to_string(d.witness.first) + " " + std::to_string(d.witness.second));
  if (d.delta_quotient) rep.kv("delta_quotient", d.delta_quotient->to_text());
  if (d.g_conditions) {
    rep.kv("g_symmetric", d.g_conditions->symmetric ? "yes" : "no");
    rep.kv("g_distinct_exponents", d.g_conditions->no_equal_exponents ? "yes" : "no");
  }
  rep.kv("oddsupp_case_applies", d.oddsupp_case_applies ? "yes" : "no");
}

int run_decompose(const Command& cmd, std::istream& in, std::ostream& out) {
  Report rep(out, cmd.format, "decompose");
  if (cmd.table_path) {
    FunctionTable t = input_table(cmd);
    FieldPtr field = resolve_field(cmd.field);
    if (!field->is_finite())
      throw PreconditionError("table decomposition needs a finite --field for the codomain group");
    const unsigned n = t.arity();
    const unsigned qa = quasi_arity(t);
    if (qa >= n) throw PreconditionError("quasi-arity equals the arity; no decomposition exists");
    SumDecomposition d = decompose_sum(t, n - qa, *field);
    rep.kv("input", "table");
    rep.kv("p", d.p);
    rep.kv("witness", std::to_string(d.witness.first) + " " + std::to_string(d.witness.second));
    rep.kv("g_table", table_line(d.g));
    rep.kv("h_table", table_line(d.h));
    return 0;
  }

  FieldPtr field = resolve_field(cmd.field);
  Polynomial f = canonicalize(input_polynomial(cmd, in, field));
  rep.kv("field", field_label(field));
  rep.kv("arity", f.arity());
  rep.kv("polynomial", f.to_text());
  if (field->is_rational()) {
    DecomposeOutcome o = decompose_char0(f);
    rep.kv("gap", o.gap);
    if (o.decomposition)
      write_decomposition(rep, *o.decomposition);
    else
      rep.kv("kind", "none");
    return 0;
  }
  if (field->characteristic() == 2 && f.arity() >= 4) {
    DecomposeOutcome o = decompose_char2(f);
    rep.kv("gap", o.gap);
    if (o.decomposition)
      write_decomposition(rep, *o.decomposition);
    else
      rep.kv("kind", "none");
    return 0;
  }
  GapReport r = poly_gap(f);
  rep.kv("gap", r.gap);
  if (r.gap >= 3 && f.arity() >= 4) {
    write_decomposition(rep, decompose_gap_ge3(f));
  } else {
    rep.kv("kind", "none");
    rep.text("no decomposition scheme applies at this gap/field combination");
  }
  return 0;
}

int run_oddsupp(const Command& cmd, std::istream& in, std::ostream& out) {
  Report rep(out, cmd.format, "oddsupp");
  if (cmd.table_path) {
    FunctionTable t = input_table(cmd);
    const bool total = is_determined_by_oddsupp(t).determined;
    const bool fact = oddsupp_two_condition_test(t);
    if (total != fact)
      throw VerificationError("class constancy and the two-condition test disagree");
    rep.kv("input", "table");
    rep.kv("determined", total ? "yes" : "no");
    rep.kv("restriction_determined",
           is_determined_by_oddsupp(PartialTable::repeats_restriction(t)).determined ? "yes"
                                                                                     : "no");
    return 0;
  }

  FieldPtr field = resolve_field(cmd.field);
  Polynomial f = canonicalize(input_polynomial(cmd, in, field));
  rep.kv("field", field_label(field));
  rep.kv("polynomial", f.to_text());
  if (field->is_rational()) {
    rep.kv("restriction_determined", oddsupp_constant_char0(f) ? "yes" : "no");
    return 0;
  }
  FunctionTable t = table_of(f);
  const bool oracle = is_determined_by_oddsupp(t).determined;
  if (field->characteristic() == 2) {
    ConditionReport conds = check_conditions_AB(f);
    if (conds.both() != oracle)
      throw VerificationError("syntactic conditions disagree with the table oracle");
    rep.kv("symmetric", conds.symmetric ? "yes" : "no");
    rep.kv("distinct_exponents", conds.no_equal_exponents ? "yes" : "no");
  }
  rep.kv("determined", oracle ? "yes" : "no");
  rep.kv("restriction_determined",
         is_determined_by_oddsupp(PartialTable::repeats_restriction(t)).determined ? "yes" : "no");
  return 0;
}

int run_interpolate(const Command& cmd, std::ostream& out) {
  if (!cmd.table_path) throw PreconditionError("interpolation needs --table");
  Report rep(out, cmd.format, "interpolate");
  FieldPtr field = resolve_field(cmd.field);
  FunctionTable t = input_table(cmd);
  Polynomial f = interpolate(t, field);
  // round-trip safety net
  if (!(table_of(f) == t)) throw VerificationError("interpolation round-trip failed");
  rep.kv("field", field_label(field));
  rep.kv("arity", f.arity());
  rep.kv("terms", f.term_count());
  rep.kv("polynomial", f.to_text());
  return 0;
}

int run_counterexample(const Command& cmd, std::ostream& out) {
  const unsigned q = cmd.q.value_or(3);
  const unsigned n = cmd.n.value_or(3);
  Report rep(out, cmd.format, "counterexample");
  Polynomial f = odd_char_counterexample(q, n);
  SuiteResult suite = run_counterexample_suite(q, n);
  rep.kv("q", q);
  rep.kv("n", n);
  rep.kv("polynomial", f.to_text());
  rep.kv("gap", 2);
  rep.kv("checked", suite.checked);
  rep.kv("mismatches", suite.mismatches);
  if (!suite.ok())
    throw VerificationError("counterexample checks failed: " + suite.failures.front());
  return 0;
}

int run_verify(const Command& cmd, std::ostream& out, std::ostream& err) {
  SuiteResult r;
  if (cmd.suite == "general-classification") {
    r = run_general_classification(cmd.k.value_or(2), cmd.m.value_or(2), cmd.n.value_or(3),
                                   cmd.seed, cmd.count.value_or(2000));
  } else if (cmd.suite == "char2") {
    r = run_char2_suite(cmd.q.value_or(2), cmd.n.value_or(4), cmd.seed,
                        cmd.count.value_or(10000));
  } else if (cmd.suite == "char0") {
    const auto c = cmd.count.value_or(0);
    r = c ? run_char0_suite(cmd.seed, c, std::max<unsigned long long>(1, c / 10), 50)
          : run_char0_suite(cmd.seed);
  } else if (cmd.suite == "delta-lemma") {
    r = run_delta_lemma_suite(cmd.seed, cmd.count.value_or(1000), cmd.n.value_or(5));
  } else if (cmd.suite == "oddsupp-dim") {
    r = run_oddsupp_dim_suite();
  } else if (cmd.suite == "counterexample") {
    r = run_counterexample_suite(cmd.q.value_or(3), cmd.n.value_or(3));
  } else {
    throw PreconditionError(
        "unknown suite '" + cmd.suite +
        "' (expected general-classification, char2, char0, delta-lemma, oddsupp-dim, "
        "counterexample)");
  }

  Report rep(out, cmd.format, "verify");
  rep.kv("suite", r.name);
  rep.kv("checked", r.checked);
  rep.kv("mismatches", r.mismatches);
  for (const auto& [key, value] : r.counters) rep.kv("counter_" + key, value);
  rep.text("wall time: " + std::to_string(r.seconds) + " s");
  if (!r.ok()) {
    for (const auto& fail : r.failures) err << "mismatch: " << fail << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  FieldSpec spec;
  if (text == "Q" || text == "q") {
    spec.rational = true;
    return spec;
  }
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) {
      spec.rational = false;
      spec.p = static_cast<unsigned>(std::stoul(text));
      spec.k = 1;
    } else {
      spec.rational = false;
      spec.p = static_cast<unsigned>(std::stoul(text.substr(0, comma)));
      spec.k = static_cast<unsigned>(std::stoul(text.substr(comma + 1)));
    }
  } catch (const std::exception&) {
    throw PreconditionError("invalid field spec '" + text + "' (expected Q or p,k)");
  }
  return spec;
}

FieldPtr resolve_field(const FieldSpec& spec) {
  if (spec.rational) return Field::rationals();
  return Field::finite(spec.p, spec.k);
}

int run(const Command& cmd, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.table_path && cmd.expression)
      throw PreconditionError("give either an expression or --table, not both");
    switch (cmd.verb) {
      case Command::Verb::gap: return run_gap(cmd, in, out);
      case Command::Verb::minors: return run_minors(cmd, in, out);
      case Command::Verb::decompose: return run_decompose(cmd, in, out);
      case Command::Verb::oddsupp: return run_oddsupp(cmd, in, out);
      case Command::Verb::interpolate: return run_interpolate(cmd, out);
      case Command::Verb::verify: return run_verify(cmd, out, err);
      case Command::Verb::counterexample: return run_counterexample(cmd, out);
    }
    throw PreconditionError("unknown verb");
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.position << ": " << e.what() << '\n';
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace aritygap::cli
