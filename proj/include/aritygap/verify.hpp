#ifndef ARITYGAP_VERIFY_HPP
#define ARITYGAP_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "aritygap/analyzer.hpp"

namespace aritygap {

struct SuiteResult {
  std::string name;
  unsigned long long checked = 0;
  unsigned long long mismatches = 0;
  double seconds = 0;
  std::vector<std::string> failures;  // minimal reproducing inputs (first few)
  std::map<std::string, unsigned long long> counters;
  bool ok() const { return mismatches == 0; }
};

using TableObserver = std::function<void(const FunctionTable&, const GapReport&)>;

/// Compares the classification prediction against the definitional gap over
/// every table {0..k-1}^n -> {0..m-1} (exhaustive when the space has at most
/// `exhaustive_limit` functions, otherwise `sample_count` seeded samples).
/// Also checks quasi-arity consistency for gap >= 3 and the agreement of the
/// two oddsupp-determination tests.
SuiteResult run_general_classification(unsigned k, unsigned m, unsigned n, std::uint64_t seed = 1,
                                       unsigned long long sample_count = 2000,
                                       unsigned long long exhaustive_limit = 200000,
                                       const TableObserver& observer = nullptr);

/// Characteristic-2 battery.  q = 2: exhaustive over all canonical
/// polynomials of the given arity (syntactic conditions vs table oracle,
/// symbolic vs table gap, decomposition coherence for arity >= 4).
/// q = 4, n = 3: all 65536 coefficient combinations on the orbit basis plus
/// seeded violators.  q = 4, n = 5: the full sweep checking gap 2 and the
/// monomial splitting bound.
SuiteResult run_char2_suite(unsigned q, unsigned n, std::uint64_t seed = 1,
                            unsigned long long violators = 10000);

/// Characteristic-0 battery: seeded ternary instances u(x1) + w * Delta,
/// constant-plus-multiple restrictions, and decomposition round-trips.
SuiteResult run_char0_suite(std::uint64_t seed = 1, unsigned long long ternary_count = 10000,
                            unsigned long long constancy_count = 1000,
                            unsigned long long decompose_count = 50);

/// Divisibility-vs-vanishing equivalence over Q on seeded multiples and
/// non-multiples, with quotient certificates re-multiplied exactly.
SuiteResult run_delta_lemma_suite(std::uint64_t seed = 1, unsigned long long count = 1000,
                                  unsigned max_arity = 5);

/// Class-count identity for q in {2,4,8,16}, n = 1..12, including the
/// 2^(q-1) plateau for n >= q.
SuiteResult run_oddsupp_dim_suite();

/// The odd-order construction: gap 2 by the table oracle, the (2<-1) minor
/// identity, and the surviving full monomial.
SuiteResult run_counterexample_suite(unsigned q, unsigned n);

}  // namespace aritygap

#endif
