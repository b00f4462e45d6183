#include "aritygap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "aritygap/random.hpp"

namespace aritygap {

namespace {

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void record_failure(SuiteResult& r, const std::string& repro) {
  ++r.mismatches;
  if (r.failures.size() < 5) r.failures.push_back(repro);
}

std::string table_repro(const FunctionTable& t) {
  std::ostringstream os;
  os << t.domain_size() << ' ' << t.codomain_size() << ' ' << t.arity() << " :";
  for (std::size_t i = 0; i < t.size(); ++i) os << ' ' << t.value(i);
  return os.str();
}

// Definitional gap machinery for large sweeps over one table shape: minor
// index remaps are precomputed once, no tables are materialized per
// function.
class LeanGap {
public:
  LeanGap(unsigned k, unsigned n) : k_(k), n_(n) {
    stride_.assign(n, 1);
    for (unsigned i = n; i-- > 1;) stride_[i - 1] = stride_[i] * k;
    size_ = stride_[0] * k;
    remap_.resize(n * n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        if (i == j) continue;
        auto& map = remap_[i * n + j];
        map.resize(size_);
        for (std::size_t idx = 0; idx < size_; ++idx) {
          const unsigned di = static_cast<unsigned>(idx / stride_[i] % k);
          const unsigned dj = static_cast<unsigned>(idx / stride_[j] % k);
          map[idx] = static_cast<std::uint32_t>(idx - di * stride_[i] + dj * stride_[i]);
        }
      }
  }

  // whether coordinate c (0-based) is essential in v composed with the remap
  bool depends(const std::vector<std::uint8_t>& v, const std::vector<std::uint32_t>* remap,
               unsigned c) const {
    const std::size_t s = stride_[c];
    for (std::size_t base = 0; base < size_; base += s * k_) {
      for (std::size_t off = 0; off < s; ++off) {
        const std::size_t start = base + off;
        const std::uint8_t v0 = remap ? v[(*remap)[start]] : v[start];
        for (unsigned d = 1; d < k_; ++d) {
          const std::size_t at = start + d * s;
          if ((remap ? v[(*remap)[at]] : v[at]) != v0) return true;
        }
      }
    }
    return false;
  }

  bool fully_essential(const std::vector<std::uint8_t>& v) const {
    for (unsigned c = 0; c < n_; ++c)
      if (!depends(v, nullptr, c)) return false;
    return true;
  }

  // definitional gap for a table depending on all of its variables
  unsigned gap(const std::vector<std::uint8_t>& v) const {
    unsigned best = 0;
    for (unsigned i = 0; i < n_; ++i) {
      for (unsigned j = 0; j < n_; ++j) {
        if (i == j) continue;
        const auto& map = remap_[i * n_ + j];
        unsigned ess = 0;
        for (unsigned c = 0; c < n_; ++c) {
          if (c == i) continue;  // the identified slot is never read
          if (depends(v, &map, c)) ++ess;
        }
        best = std::max(best, ess);
      }
    }
    return n_ - best;
  }

private:
  unsigned k_, n_;
  std::size_t size_ = 0;
  std::vector<std::size_t> stride_;
  std::vector<std::vector<std::uint32_t>> remap_;
};

}  // namespace

SuiteResult run_general_classification(unsigned k, unsigned m, unsigned n, std::uint64_t seed,
                                       unsigned long long sample_count,
                                       unsigned long long exhaustive_limit,
                                       const TableObserver& observer) {
  Stopwatch timer;
  SuiteResult r;
  r.name = "general-classification";

  const std::size_t points = [&] {
    std::size_t s = 1;
    for (unsigned t = 0; t < n; ++t) s *= k;
    return s;
  }();
  long double space = 1;
  for (std::size_t t = 0; t < points; ++t) space *= m;
  const bool exhaustive = space <= static_cast<long double>(exhaustive_limit);

  Rng rng(seed);
  std::vector<std::uint8_t> values(points, 0);

  auto check_one = [&](const FunctionTable& t) {
    ++r.checked;
    const auto ess = essential_variables(t);
    if (ess.size() < 2) {
      ++r.counters["skipped_ess_lt2"];
      return;
    }
    GapReport direct = arity_gap(t);
    FunctionTable core = drop_inessential(t);
    GapReport predicted = classify_gap(core);
    if (predicted.gap != direct.gap) {
      record_failure(r, "classify!=direct " + table_repro(t));
      return;
    }
    if (direct.gap >= 3 && ess.size() == n &&
        (!direct.quasi_arity || *direct.quasi_arity != n - direct.gap)) {
      record_failure(r, "qa!=n-p " + table_repro(t));
      return;
    }
    if (is_determined_by_oddsupp(core).determined != oddsupp_two_condition_test(core)) {
      record_failure(r, "oddsupp tests disagree " + table_repro(t));
      return;
    }
    // empirical form of the classical bound: above max(k, 3) a gap of 2 or
    // more forces oddsupp determination of the restriction
    if (ess.size() == n && n > std::max(k, 3u) && direct.gap >= 2 &&
        !direct.restriction_oddsupp) {
      record_failure(r, "gap >= 2 without oddsupp determination " + table_repro(t));
      return;
    }
    ++r.counters["gap" + std::to_string(direct.gap)];
    if (observer) observer(t, direct);
  };

  if (exhaustive) {
    r.counters["exhaustive"] = 1;
    bool done = false;
    while (!done) {
      check_one(FunctionTable::from_values(k, m, n, values));
      std::size_t pos = points;
      while (true) {
        if (pos == 0) {
          done = true;
          break;
        }
        --pos;
        if (++values[pos] < m) break;
        values[pos] = 0;
      }
    }
  } else {
    for (unsigned long long s = 0; s < sample_count; ++s) {
      for (auto& v : values) v = static_cast<std::uint8_t>(rng.below(m));
      check_one(FunctionTable::from_values(k, m, n, values));
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_char2_suite(unsigned q, unsigned n, std::uint64_t seed,
                            unsigned long long violators) {
  Stopwatch timer;
  SuiteResult r;
  r.name = "char2";
  if (q != 2 && q != 4)
    throw PreconditionError("char2 suite supports q = 2 and q = 4");
  Rng rng(seed);

  if (q == 2) {
    if (n < 1 || n > 4) throw PreconditionError("char2 q=2 suite supports n in 1..4");
    FieldPtr field = Field::finite(2, 1);
    const unsigned monomials = 1u << n;
    std::vector<Monomial> basis;
    for (unsigned mask = 0; mask < monomials; ++mask) {
      std::vector<unsigned> exps(n, 0);
      for (unsigned b = 0; b < n; ++b) exps[b] = (mask >> b) & 1;
      basis.emplace_back(std::move(exps));
    }
    const unsigned long long total = 1ull << monomials;
    for (unsigned long long cmask = 0; cmask < total; ++cmask) {
      std::vector<std::pair<Monomial, FieldElement>> terms;
      for (unsigned b = 0; b < monomials; ++b)
        if ((cmask >> b) & 1) terms.emplace_back(basis[b], field->one());
      Polynomial f = Polynomial::from_terms(field, n, std::move(terms));
      ++r.checked;

      FunctionTable tbl = table_of(f);
      if (!(interpolate(tbl, field) == f)) {
        record_failure(r, "interpolation round-trip: " + f.to_text());
        continue;
      }
      const bool syntactic = check_conditions_AB(f).both();
      const bool oracle = is_determined_by_oddsupp(tbl).determined;
      if (syntactic != oracle) {
        record_failure(r, "conditions vs oracle: " + f.to_text());
        continue;
      }
      if (syntactic) ++r.counters["determined"];

      const auto occ = occurring_variables(f);
      if (occ.size() >= 2) {
        GapReport via_table = poly_gap_via_table(f);
        GapReport symbolic = poly_gap_symbolic(f);
        if (via_table.gap != symbolic.gap) {
          record_failure(r, "table vs symbolic gap: " + f.to_text());
          continue;
        }
        if (occ.size() == n && n >= 4) {
          DecomposeOutcome out = decompose_char2(f);
          if (out.gap != via_table.gap) {
            record_failure(r, "decompose gap mismatch: " + f.to_text());
            continue;
          }
          if (out.decomposition) {
            const Decomposition& d = *out.decomposition;
            if (!(add(d.g, d.h) == canonicalize(f))) {
              record_failure(r, "g + h != f: " + f.to_text());
              continue;
            }
            ++r.counters[d.kind == DecompositionKind::low_arity ? "kind_low_arity"
                                                                : "kind_oddsupp"];
          }
        }
      }
    }
  } else {
    if (n != 3 && n != 5) throw PreconditionError("char2 q=4 suite supports n = 3 and n = 5");
    FieldPtr field = Field::finite(2, 2);
    std::vector<Polynomial> basis = oddsupp_orbit_basis(field, n);
    r.counters["orbit_classes"] = basis.size();
    std::vector<FunctionTable> class_tables;
    class_tables.reserve(basis.size());
    for (const Polynomial& b : basis) class_tables.push_back(table_of(b));
    const std::size_t points = class_tables.front().size();
    LeanGap lean(4, n);
    // the splitting bound is a property of the class shapes
    for (const Polynomial& b : basis)
      for (const auto& [mono, c] : b.terms())
        if (mono.distinct_variables() > 3)
          throw VerificationError("orbit class exceeds the q - 1 variable bound");

    unsigned long long combos = 1;
    for (std::size_t c = 0; c < basis.size(); ++c) combos *= 4;

    std::vector<unsigned> coeff(basis.size());
    std::vector<std::uint8_t> values(points);
    auto make_poly = [&]() {
      std::vector<std::pair<Monomial, FieldElement>> terms;
      for (std::size_t c = 0; c < basis.size(); ++c) {
        if (coeff[c] == 0) continue;
        const FieldElement fc = field->from_index(coeff[c]);
        for (const auto& [mono, one] : basis[c].terms()) terms.emplace_back(mono, fc);
      }
      return Polynomial::from_terms(field, n, std::move(terms));
    };

    for (unsigned long long id = 0; id < combos; ++id) {
      unsigned long long rest = id;
      bool nonconstant_class = false;
      for (std::size_t c = 0; c < basis.size(); ++c) {
        coeff[c] = static_cast<unsigned>(rest % 4);
        rest /= 4;
        if (coeff[c] != 0 && !basis[c].is_constant()) nonconstant_class = true;
      }
      std::fill(values.begin(), values.end(), 0);
      for (std::size_t c = 0; c < basis.size(); ++c) {
        if (coeff[c] == 0) continue;
        const auto& ct = class_tables[c];
        for (std::size_t idx = 0; idx < points; ++idx)
          values[idx] = static_cast<std::uint8_t>(
              field->add_index(values[idx], field->mul_index(coeff[c], ct.value(idx))));
      }
      ++r.checked;

      if (n == 3) {
        Polynomial f = make_poly();
        // every combination satisfies the conditions and must be determined
        if (!check_conditions_AB(f).both()) {
          record_failure(r, "basis combination violates conditions: " + f.to_text());
          continue;
        }
        if (!is_determined_by_oddsupp(FunctionTable::from_values(4, 4, n, values)).determined) {
          record_failure(r, "conditions hold but oracle disagrees: " + f.to_text());
          continue;
        }
      } else {
        // orbit classes touch every variable, so the combination has full
        // support exactly when a nonconstant class is active
        if (!nonconstant_class) {
          ++r.counters["skipped_partial_support"];
          continue;
        }
        if (!lean.fully_essential(values)) {
          record_failure(r, "essential set differs from occurring set: " + make_poly().to_text());
          continue;
        }
        ++r.counters["full_support"];
        if (lean.gap(values) != 2) {
          record_failure(r, "full-support combination with gap != 2: " + make_poly().to_text());
          continue;
        }
        ++r.counters["gap2"];
        if (id % 509 == 0) {  // exercise the public splitting path on a sample
          Polynomial f = make_poly();
          auto parts = split_low_arity_summands(f);
          Polynomial s(field, n);
          for (const auto& part : parts) {
            if (occurring_variables(part).size() > 3) {
              record_failure(r, "summand exceeds the variable bound: " + part.to_text());
              break;
            }
            s = add(s, part);
          }
          if (!(s == f)) {
            record_failure(r, "split summands do not re-add: " + f.to_text());
            continue;
          }
          ++r.counters["split_api_checked"];
        }
      }
    }

    if (n == 3) {
      unsigned long long collected = 0;
      while (collected < violators) {
        Polynomial f = random_polynomial(rng, field, 3, 10, 3);
        if (check_conditions_AB(f).both()) continue;  // want violators only
        ++collected;
        ++r.checked;
        if (is_determined_by_oddsupp(table_of(f)).determined)
          record_failure(r, "violator is determined: " + f.to_text());
        else
          ++r.counters["violators"];
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_char0_suite(std::uint64_t seed, unsigned long long ternary_count,
                            unsigned long long constancy_count,
                            unsigned long long decompose_count) {
  Stopwatch timer;
  SuiteResult r;
  r.name = "char0";
  FieldPtr Q = Field::rationals();
  Rng rng(seed);

  for (unsigned long long i = 0; i < ternary_count; ++i) {
    Polynomial f(Q, 3);
    while (true) {
      Polynomial u = random_polynomial_on(rng, Q, 3, {1}, 3, 3);  // nonconstant by support
      Polynomial w = random_nonzero_polynomial(rng, Q, 3, 3, 2);
      f = add(u, mul(w, difference_product(3, Q)));
      if (occurring_variables(f).size() == 3) break;
    }
    ++r.checked;
    try {
      TernaryGapReport t = ternary_gap_char0(f);
      if (t.report.gap != 2 || !t.report.quasi_arity || *t.report.quasi_arity != 1 ||
          !t.pattern || (*t.pattern != std::array<unsigned, 3>{1, 0, 0})) {
        record_failure(r, "ternary expectations failed: " + f.to_text());
        continue;
      }
      ++r.counters["ternary_gap2"];
    } catch (const VerificationError& e) {
      record_failure(r, std::string("ternary verification: ") + e.what() + ": " + f.to_text());
    }
  }

  for (unsigned long long i = 0; i < constancy_count; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(rng.below(4));
    Polynomial w = random_polynomial(rng, Q, n, 3, 2);
    Polynomial f = add(Polynomial::constant(Q, n, random_element(rng, Q)),
                       mul(w, difference_product(n, Q)));
    ++r.checked;
    try {
      if (!oddsupp_constant_char0(f)) {
        record_failure(r, "restriction not determined: " + f.to_text());
        continue;
      }
      ++r.counters["constant_restrictions"];
    } catch (const VerificationError& e) {
      record_failure(r, std::string("constancy verification: ") + e.what() + ": " + f.to_text());
    }
  }

  for (unsigned long long i = 0; i < decompose_count; ++i) {
    const unsigned n = 4 + static_cast<unsigned>(rng.below(2));
    const unsigned p = 2 + static_cast<unsigned>(rng.below(n - 1));
    Polynomial g(Q, n);
    Polynomial f(Q, n);
    Polynomial h(Q, n);
    while (true) {
      if (p == n) {
        g = Polynomial::constant(Q, n, random_element(rng, Q));
      } else {
        std::vector<unsigned> support;
        for (unsigned v = 1; v <= n - p; ++v) support.push_back(v);
        g = random_polynomial_on(rng, Q, n, support, 4, 2);
      }
      Polynomial w = random_nonzero_polynomial(rng, Q, n, 2, 1);
      h = mul(w, difference_product(n, Q));
      f = add(g, h);
      if (occurring_variables(f).size() == n) break;
    }
    ++r.checked;
    DecomposeOutcome out = decompose_char0(f);
    if (out.gap != p || !out.decomposition || !(out.decomposition->g == g) ||
        !(out.decomposition->h == h)) {
      record_failure(r, "round-trip failed: " + f.to_text());
      continue;
    }
    const auto& quotient = out.decomposition->delta_quotient;
    if (!quotient || !(mul(*quotient, difference_product(n, Q)) == h)) {
      record_failure(r, "quotient certificate failed: " + f.to_text());
      continue;
    }
    ++r.counters["decompose_roundtrips"];
  }

  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_delta_lemma_suite(std::uint64_t seed, unsigned long long count,
                                  unsigned max_arity) {
  Stopwatch timer;
  SuiteResult r;
  r.name = "delta-lemma";
  FieldPtr Q = Field::rationals();
  Rng rng(seed);
  for (unsigned long long i = 0; i < count; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(rng.below(max_arity - 1));
    Polynomial dp = difference_product(n, Q);
    Polynomial h(Q, n);
    if (rng.chance(1, 2)) {
      h = mul(random_polynomial(rng, Q, n, 3, 2), dp);
    } else {
      h = random_nonzero_polynomial(rng, Q, n, 5, 3);
    }
    ++r.checked;
    const bool vanishes = vanishes_on_repeats(h);
    DeltaMultiple dm = is_delta_multiple(h);
    if (dm.is_multiple != vanishes) {
      record_failure(r, "divisibility vs vanishing: " + h.to_text());
      continue;
    }
    if (dm.is_multiple) {
      if (!dm.quotient || !(mul(*dm.quotient, dp) == h)) {
        record_failure(r, "quotient does not re-multiply: " + h.to_text());
        continue;
      }
      ++r.counters["multiples"];
    } else {
      ++r.counters["non_multiples"];
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_oddsupp_dim_suite() {
  Stopwatch timer;
  SuiteResult r;
  r.name = "oddsupp-dim";
  for (unsigned q : {2u, 4u, 8u, 16u}) {
    for (unsigned n = 1; n <= 12; ++n) {
      ++r.checked;
      auto [u, v] = oddsupp_dimension_counts(q, n);
      if (u != v) {
        record_failure(r, "count mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n));
        continue;
      }
      if (n >= q && u != (1ull << (q - 1))) {
        record_failure(r, "plateau mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n));
        continue;
      }
    }
  }
  r.seconds = timer.seconds();
  return r;
}

SuiteResult run_counterexample_suite(unsigned q, unsigned n) {
  Stopwatch timer;
  SuiteResult r;
  r.name = "counterexample";
  Polynomial f = odd_char_counterexample(q, n);

  ++r.checked;
  GapReport rep = poly_gap_via_table(f);
  if (rep.gap != 2)
    record_failure(r, "gap != 2 at q=" + std::to_string(q) + " n=" + std::to_string(n));

  ++r.checked;
  Polynomial minor = identification_minor(f, 2, 1);
  if (!(minor == odd_char_counterexample_minor(q, n)))
    record_failure(r, "minor identity failed at q=" + std::to_string(q) +
                          " n=" + std::to_string(n));

  ++r.checked;
  Monomial full(std::vector<unsigned>(n, q - 1));
  if (f.coefficient(full).is_zero())
    record_failure(r, "full monomial missing at q=" + std::to_string(q) +
                          " n=" + std::to_string(n));
  else
    r.counters["full_monomial_coeff"] = f.coefficient(full).index();

  ++r.checked;
  if (!totally_symmetric(table_of(f)))
    record_failure(r, "table not symmetric at q=" + std::to_string(q) +
                          " n=" + std::to_string(n));

  r.seconds = timer.seconds();
  return r;
}

}  // namespace aritygap
