// Acceptance suite: one check per criterion, each exact.  Prints one
// PASS/FAIL line per criterion and exits nonzero when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "aritygap/analyzer.hpp"
#include "aritygap/parser.hpp"
#include "aritygap/random.hpp"
#include "aritygap/verify.hpp"

using namespace aritygap;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

void expect_example_report(const GapReport& r, const std::string& label) {
  require(r.essential_arity == 3, label + ": essential arity != 3");
  require(r.gap == 1, label + ": gap != 1");
  std::map<std::pair<unsigned, unsigned>, unsigned> got;
  for (const auto& me : r.minor_arities) got[{me.i, me.j}] = me.essential_arity;
  const std::map<std::pair<unsigned, unsigned>, unsigned> want{
      {{1, 2}, 0}, {{2, 1}, 0}, {{1, 3}, 2}, {{3, 1}, 2}, {{2, 3}, 2}, {{3, 2}, 2}};
  require(got == want, label + ": minor essential arities differ from (0,0,2,2,2,2)");
}

// 1. The ternary product-difference example over Q and GF(3).
void criterion1() {
  expect_example_report(poly_gap(parse_polynomial("x1*x3 - x2*x3", Field::rationals())), "Q");
  expect_example_report(poly_gap(parse_polynomial("x1*x3 - x2*x3", Field::finite(3, 1))), "GF(3)");
}

// 2. Linear functions over GF(2) have gap 2 for every arity 2..10.
void criterion2() {
  auto gf2 = Field::finite(2, 1);
  for (unsigned n = 2; n <= 10; ++n) {
    for (unsigned c = 0; c <= 1; ++c) {
      Polynomial f = Polynomial::constant(gf2, n, gf2->from_index(c));
      for (unsigned i = 1; i <= n; ++i) f = add(f, Polynomial::variable(gf2, n, i));
      GapReport r = poly_gap(f);
      require(r.gap == 2, "n=" + std::to_string(n) + " c=" + std::to_string(c) + ": gap != 2");
    }
  }
}

unsigned long long census_count = 0;
std::vector<FunctionTable> census_tables;

// 3. Exhaustive classification against the definitional gap.
void criterion3() {
  census_count = 0;
  census_tables.clear();
  struct Shape {
    unsigned k, m, n;
    unsigned long long expect;
  };
  for (const Shape s : {Shape{2, 2, 2, 16}, Shape{2, 2, 3, 256}, Shape{2, 2, 4, 65536},
                        Shape{3, 3, 2, 19683}}) {
    TableObserver observer = nullptr;
    if (s.k == 2 && s.n == 4) {
      observer = [](const FunctionTable& t, const GapReport& r) {
        if (r.essential_arity == 4 && r.gap == 2) {
          ++census_count;
          census_tables.push_back(t);
        }
      };
    }
    SuiteResult r = run_general_classification(s.k, s.m, s.n, 1, 0, 200000, observer);
    require(r.counters.count("exhaustive") == 1, "enumeration was not exhaustive");
    require(r.checked == s.expect,
            "checked " + std::to_string(r.checked) + " != " + std::to_string(s.expect));
    require(r.mismatches == 0, "mismatches in (" + std::to_string(s.k) + "," +
                                   std::to_string(s.m) + "," + std::to_string(s.n) + "): " +
                                   (r.failures.empty() ? "" : r.failures.front()));
  }
}

// 4. Among all 65536 functions {0,1}^4 -> {0,1}, exactly the two linear
//    functions x1+x2+x3+x4 (+1) have essential arity 4 and gap 2.
void criterion4() {
  require(census_count == 2,
          "gap-2 census count " + std::to_string(census_count) + " != 2");
  auto gf2 = Field::finite(2, 1);
  std::vector<FunctionTable> expected;
  for (unsigned c = 0; c <= 1; ++c) {
    Polynomial f = Polynomial::constant(gf2, 4, gf2->from_index(c));
    for (unsigned i = 1; i <= 4; ++i) f = add(f, Polynomial::variable(gf2, 4, i));
    expected.push_back(table_of(f));
  }
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& got : census_tables)
      if (got == want) found = true;
    require(found, "a linear function is missing from the census");
  }
}

// 5. 500 seeded decomposition round-trips over GF(5) and Q.
void criterion5() {
  Rng rng(501);
  for (int instance = 0; instance < 500; ++instance) {
    const bool finite = instance % 2 == 0;
    FieldPtr fld = finite ? Field::finite(5, 1) : Field::rationals();
    const unsigned n = 4 + static_cast<unsigned>(rng.below(2));
    const unsigned p = 3 + static_cast<unsigned>(rng.below(n - 2));

    Polynomial g(fld, n), h(fld, n), f(fld, n);
    while (true) {
      if (p == n) {
        g = Polynomial::constant(fld, n, random_element(rng, fld));
      } else {
        std::vector<unsigned> support;
        for (unsigned v = 1; v <= n - p; ++v) support.push_back(v);
        g = random_polynomial_on(rng, fld, n, support, 4, 2);
      }
      Polynomial w = random_nonzero_polynomial(rng, fld, n, 2, 1);
      h = mul(w, difference_product(n, fld));
      if (h.is_zero()) continue;  // the product may fold away over GF(5)
      f = add(g, h);
      if (occurring_variables(f).size() == n) break;
    }

    if (finite) {
      require(poly_gap_via_table(f).gap == p, "table oracle gap != p");
      Decomposition d = decompose_gap_ge3(f);
      require(d.p == p && d.g == g && d.h == h, "finite round-trip failed");
    } else {
      DecomposeOutcome o = decompose_char0(f);
      require(o.gap == p && o.decomposition && o.decomposition->g == g &&
                  o.decomposition->h == h,
              "rational round-trip failed");
      require(o.decomposition->delta_quotient &&
                  mul(*o.decomposition->delta_quotient, difference_product(n, fld)) == h,
              "quotient certificate failed");
    }
  }
}

// 6. Syntactic conditions equal the oddsupp oracle: GF(2) exhaustively for
//    arity 1..4, GF(4) arity 3 for all 65536 basis combinations plus 10^4
//    violators.
void criterion6() {
  for (unsigned n = 1; n <= 4; ++n) {
    SuiteResult r = run_char2_suite(2, n, 1, 0);
    const unsigned long long expect = 1ull << (1u << n);
    require(r.checked == expect, "GF(2) n=" + std::to_string(n) + ": wrong count");
    require(r.mismatches == 0, "GF(2) n=" + std::to_string(n) + ": " +
                                   (r.failures.empty() ? "mismatch" : r.failures.front()));
  }
  SuiteResult r4 = run_char2_suite(4, 3, 1, 10000);
  require(r4.checked >= 65536 + 9000, "GF(4) n=3: violator sample too small");
  require(r4.mismatches == 0,
          "GF(4) n=3: " + (r4.failures.empty() ? "mismatch" : r4.failures.front()));
}

// 7. Class-count identity with its 2^(q-1) plateau.
void criterion7() {
  SuiteResult r = run_oddsupp_dim_suite();
  require(r.checked == 48 && r.mismatches == 0, "dimension counts disagree");
}

// 8. The odd-order construction at (3,2), (3,3), (5,2), (5,3).
void criterion8() {
  for (auto [q, n] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {5, 3}}) {
    SuiteResult r = run_counterexample_suite(q, n);
    require(r.mismatches == 0, "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " +
                                   (r.failures.empty() ? "mismatch" : r.failures.front()));
  }
}

// 9. Every full-support combination over GF(4), arity 5, has gap 2 and
//    splits into monomial summands on at most 3 variables.
void criterion9() {
  SuiteResult r = run_char2_suite(4, 5, 1, 0);
  require(r.mismatches == 0,
          "GF(4) n=5: " + (r.failures.empty() ? "mismatch" : r.failures.front()));
  require(r.counters["full_support"] == r.counters["gap2"],
          "some full-support combination does not have gap 2");
  require(r.counters["gap2"] > 0, "sweep found no gap-2 functions");
  require(r.counters.count("split_api_checked") == 1, "public splitting path untested");
}

// 10. Ternary gap-2 battery and constant-restriction battery.
void criterion10() {
  SuiteResult r = run_char0_suite(1, 10000, 1000, 50);
  require(r.mismatches == 0,
          "char0 suite: " + (r.failures.empty() ? "mismatch" : r.failures.front()));
  require(r.counters["ternary_gap2"] == 10000, "not all ternary instances verified");
  require(r.counters["constant_restrictions"] == 1000, "not all restrictions verified");
}

// 11. Divisibility-vs-vanishing equivalence with re-multiplied certificates.
void criterion11() {
  SuiteResult r = run_delta_lemma_suite(1, 1000, 5);
  require(r.checked == 1000 && r.mismatches == 0,
          "delta-lemma suite: " + (r.failures.empty() ? "mismatch" : r.failures.front()));
  require(r.counters["multiples"] > 0 && r.counters["non_multiples"] > 0,
          "suite did not exercise both classes");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void()> body;
  };
  const std::vector<Criterion> criteria{
      {1, "ternary example: ess 3, gap 1, minor arities (0,0,2,2,2,2) over Q and GF(3)",
       criterion1},
      {2, "linear functions over GF(2), arity 2..10: gap 2", criterion2},
      {3, "exhaustive classification vs definitional gap on four shapes", criterion3},
      {4, "Boolean gap-2 census: exactly the two linear functions", criterion4},
      {5, "500 seeded g + w*Delta round-trips over GF(5) and Q", criterion5},
      {6, "coefficient conditions == oddsupp oracle (GF(2) n<=4, GF(4) n=3)", criterion6},
      {7, "class-count identity for q in {2,4,8,16}, n = 1..12", criterion7},
      {8, "odd-order construction: gap 2, minor identity, full monomial", criterion8},
      {9, "GF(4) arity-5 sweep: gap 2 and monomial splitting bound", criterion9},
      {10, "ternary gap-2 and constant-restriction batteries", criterion10},
      {11, "divisibility == vanishing on repeats, with certificates", criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (error.empty()) {
      line << "PASS  " << c.id << "  " << c.title << "  (" << secs << " s)";
    } else {
      line << "FAIL  " << c.id << "  " << c.title << "  (" << secs << " s): " << error;
      ++failures;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures == 0)
    std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
  else
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
  return failures == 0 ? 0 : 1;
}
