#include "aritygap/analyzer.hpp"

#include <algorithm>
#include <map>

namespace aritygap {

namespace {

std::vector<unsigned> occ_vector(const Polynomial& f) {
  auto s = occurring_variables(f);
  return std::vector<unsigned>(s.begin(), s.end());
}

std::vector<bool> repeat_mask(const FunctionTable& t) {
  std::vector<bool> mask(t.size());
  std::vector<unsigned> tuple(t.arity());
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    t.unpack(idx, tuple);
    mask[idx] = t.arity() == 1 ? true : has_repeat(tuple);
  }
  return mask;
}

// Relabels the occurring variables of fc onto 1..e.
Polynomial compress_to_core(const Polynomial& fc, const std::vector<unsigned>& occ) {
  const unsigned n = fc.arity();
  std::vector<unsigned> sigma(n, 1);
  for (std::size_t r = 0; r < occ.size(); ++r) sigma[occ[r] - 1] = static_cast<unsigned>(r + 1);
  return substitute(fc, sigma, static_cast<unsigned>(occ.size()));
}

void translate_indices(GapReport& r, const Polynomial& original,
                       const std::vector<unsigned>& occ) {
  r.arity = original.arity();
  r.essential = occ;
  r.witness = {occ[r.witness.first - 1], occ[r.witness.second - 1]};
  for (auto& me : r.minor_arities) {
    me.i = occ[me.i - 1];
    me.j = occ[me.j - 1];
  }
}

}  // namespace

bool vanishes_on_repeats(const Polynomial& h) {
  const unsigned n = h.arity();
  if (n == 0) return true;
  if (h.field()->is_finite()) {
    FunctionTable t = table_of(h);
    std::vector<unsigned> tuple(n);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      if (t.value(idx) == 0) continue;
      t.unpack(idx, tuple);
      if (n == 1 || has_repeat(tuple)) return false;
    }
    return true;
  }
  if (n == 1) return h.is_zero();
  std::vector<unsigned> sigma(n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      for (unsigned v = 1; v <= n; ++v) sigma[v - 1] = (v == i) ? j : v;
      if (!substitute(h, sigma, n).is_zero()) return false;
    }
  }
  return true;
}

DeltaMultiple is_delta_multiple(const Polynomial& h) {
  const unsigned n = h.arity();
  if (n < 2) throw PreconditionError("difference-product divisibility requires arity >= 2");
  if (h.field()->is_finite()) return {vanishes_on_repeats(h), std::nullopt};
  Polynomial w = h;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      Polynomial factor = sub(Polynomial::variable(h.field(), n, i),
                              Polynomial::variable(h.field(), n, j));
      auto q = exact_divide(w, factor);
      if (!q) return {false, std::nullopt};
      w = std::move(*q);
    }
  }
  return {true, std::move(w)};
}

GapReport poly_gap_via_table(const Polynomial& f) {
  Polynomial fc = canonicalize(f);
  FunctionTable t = table_of(fc);
  std::vector<unsigned> occ = occ_vector(fc);
  if (essential_variables(t) != occ)
    throw VerificationError("essential variables of the table differ from occurring variables");
  if (occ.size() < 2)
    throw PreconditionError("gap undefined: fewer than two essential variables");
  GapReport r = arity_gap(drop_inessential(t));
  translate_indices(r, fc, occ);
  return r;
}

GapReport poly_gap_symbolic(const Polynomial& f) {
  Polynomial fc = canonicalize(f);
  std::vector<unsigned> occ = occ_vector(fc);
  if (occ.size() < 2)
    throw PreconditionError("gap undefined: fewer than two essential variables");
  const unsigned e = static_cast<unsigned>(occ.size());
  Polynomial core = compress_to_core(fc, occ);

  GapReport r;
  r.arity = e;
  for (unsigned v = 1; v <= e; ++v) r.essential.push_back(v);
  r.essential_arity = e;
  unsigned best = 0;
  bool have_best = false;
  std::vector<Polynomial> minors;
  for (unsigned i = 1; i <= e; ++i) {
    for (unsigned j = 1; j <= e; ++j) {
      if (i == j) continue;
      Polynomial m = identification_minor(core, i, j);
      const unsigned ess = static_cast<unsigned>(occurring_variables(m).size());
      r.minor_arities.push_back({i, j, ess});
      minors.push_back(std::move(m));
      if (!have_best || ess > best) {
        best = ess;
        r.witness = {i, j};
        have_best = true;
      }
    }
  }
  r.gap = e - best;
  r.theorem_case = theorem_case_label(r.gap, e);

  if (core.field()->is_rational()) {
    // restriction to repeat tuples is constant iff every identification
    // minor is one and the same constant polynomial
    bool constant_restriction = true;
    const Polynomial& first = minors.front();
    for (const Polynomial& m : minors) {
      if (!m.is_constant() || !(m == first)) {
        constant_restriction = false;
        break;
      }
    }
    r.restriction_oddsupp = constant_restriction;
    if (r.gap >= 2) {
      r.quasi_arity = e - r.gap;
    } else {
      // p = 1 decomposition: some minor is a support of essential arity e-1
      unsigned qa = e;
      std::size_t idx = 0;
      for (unsigned i = 1; i <= e && qa == e; ++i) {
        for (unsigned j = 1; j <= e; ++j) {
          if (i == j) continue;
          const Polynomial& m = minors[idx++];
          if (occurring_variables(m).size() != e - 1u) continue;
          Polynomial h = sub(core, m);
          if (!h.is_zero() && vanishes_on_repeats(h)) {
            qa = e - 1;
            break;
          }
        }
      }
      r.quasi_arity = qa;
    }
  }
  translate_indices(r, fc, occ);
  return r;
}

GapReport poly_gap(const Polynomial& f) {
  return f.field()->is_finite() ? poly_gap_via_table(f) : poly_gap_symbolic(f);
}

namespace {

// Shared g + h recovery: g is an identification minor with exactly n - p
// occurring variables such that h = f - g is a nonzero multiple of the
// difference product.  All qualifying pairs must agree on g.
Decomposition decompose_low_arity(const Polynomial& fc, unsigned p) {
  const unsigned n = fc.arity();
  const bool finite = fc.field()->is_finite();
  std::optional<FunctionTable> table;
  std::vector<bool> repeats;
  if (finite) {
    table = table_of(fc);
    repeats = repeat_mask(*table);
  }

  std::optional<Decomposition> found;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      Polynomial g = identification_minor(fc, i, j);
      if (occurring_variables(g).size() != n - p) continue;
      if (found && found->g == g) continue;  // same witness, already verified
      if (finite) {
        FunctionTable tm = identification_minor(*table, i, j);
        if (tm == *table) continue;  // h would be the zero function
        bool vanishes = true;
        for (std::size_t idx = 0; idx < tm.size(); ++idx) {
          if (repeats[idx] && tm.value(idx) != table->value(idx)) {
            vanishes = false;
            break;
          }
        }
        if (!vanishes) continue;
        if (found) throw VerificationError("low-arity decomposition is not unique");
        Polynomial h = sub(fc, g);
        if (h.is_zero()) throw VerificationError("nonzero table difference with zero polynomial");
        found = Decomposition{std::move(g), std::move(h),        p, DecompositionKind::low_arity,
                              {i, j},       std::nullopt,        std::nullopt, false};
      } else {
        Polynomial h = sub(fc, g);
        if (h.is_zero()) continue;
        DeltaMultiple dm = is_delta_multiple(h);
        if (!dm.is_multiple) continue;
        if (found) throw VerificationError("low-arity decomposition is not unique");
        found = Decomposition{std::move(g), std::move(h),          p, DecompositionKind::low_arity,
                              {i, j},       std::move(dm.quotient), std::nullopt, false};
      }
    }
  }
  if (!found)
    throw VerificationError("no low-arity decomposition found although the gap demands one");
  return *found;
}

void require_full_support(const Polynomial& fc) {
  if (occurring_variables(fc).size() != fc.arity())
    throw PreconditionError("all variables must occur in the polynomial");
}

}  // namespace

Decomposition decompose_gap_ge3(const Polynomial& f) {
  Polynomial fc = canonicalize(f);
  if (fc.arity() < 4) throw PreconditionError("decomposition requires arity >= 4");
  require_full_support(fc);
  GapReport r = poly_gap(fc);
  if (r.gap < 3) throw PreconditionError("gap is below 3");
  return decompose_low_arity(fc, r.gap);
}

DecomposeOutcome decompose_char0(const Polynomial& f) {
  if (!f.field()->is_rational())
    throw PreconditionError("characteristic-0 decomposition requires rational coefficients");
  if (f.arity() < 2) throw PreconditionError("decomposition requires arity >= 2");
  require_full_support(f);
  const unsigned n = f.arity();
  GapReport r = poly_gap(f);
  if (r.gap == 1) {
    // no pair may certify a gap of 2 or more
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = 1; j <= n; ++j) {
        if (i == j) continue;
        Polynomial g = identification_minor(f, i, j);
        if (occurring_variables(g).size() + 2 > n) continue;
        Polynomial h = sub(f, g);
        if (!h.is_zero() && is_delta_multiple(h).is_multiple)
          throw VerificationError("gap-1 polynomial admits a low-arity decomposition");
      }
    }
    return {1, std::nullopt};
  }
  return {r.gap, decompose_low_arity(f, r.gap)};
}

namespace {

bool restriction_nonconstant(const FunctionTable& t, const std::vector<bool>& repeats) {
  bool have = false;
  unsigned v0 = 0;
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (!repeats[idx]) continue;
    if (!have) {
      v0 = t.value(idx);
      have = true;
    } else if (t.value(idx) != v0) {
      return true;
    }
  }
  return false;
}

}  // namespace

DecomposeOutcome decompose_char2(const Polynomial& f) {
  if (!f.field()->is_finite() || f.field()->characteristic() != 2)
    throw PreconditionError("this decomposition requires a finite field of characteristic 2");
  Polynomial fc = canonicalize(f);
  if (fc.arity() < 4) throw PreconditionError("decomposition requires arity >= 4");
  require_full_support(fc);
  const unsigned n = fc.arity();
  GapReport r = poly_gap(fc);

  FunctionTable tbl = table_of(fc);
  std::vector<bool> repeats = repeat_mask(tbl);
  const bool determined =
      is_determined_by_oddsupp(PartialTable::repeats_restriction(tbl)).determined;
  const bool case_b_applicable = determined && restriction_nonconstant(tbl, repeats);

  if (r.gap == 1) {
    for (unsigned i = 1; i <= n && r.gap == 1; ++i) {
      for (unsigned j = 1; j <= n; ++j) {
        if (i == j) continue;
        Polynomial g = identification_minor(fc, i, j);
        if (occurring_variables(g).size() + 2 > n) continue;
        FunctionTable tm = identification_minor(tbl, i, j);
        if (tm == tbl) continue;
        bool vanishes = true;
        for (std::size_t idx = 0; idx < tm.size(); ++idx)
          if (repeats[idx] && tm.value(idx) != tbl.value(idx)) {
            vanishes = false;
            break;
          }
        if (vanishes)
          throw VerificationError("gap-1 polynomial admits a low-arity decomposition");
      }
    }
    if (case_b_applicable)
      throw VerificationError("gap-1 polynomial admits the symmetric decomposition");
    return {1, std::nullopt};
  }

  // low-arity scheme first; it is the unique one when it applies
  bool low_arity_exists = false;
  for (unsigned i = 1; i <= n && !low_arity_exists; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      Polynomial g = identification_minor(fc, i, j);
      if (occurring_variables(g).size() != n - r.gap) continue;
      FunctionTable tm = identification_minor(tbl, i, j);
      if (tm == tbl) continue;
      bool vanishes = true;
      for (std::size_t idx = 0; idx < tm.size(); ++idx)
        if (repeats[idx] && tm.value(idx) != tbl.value(idx)) {
          vanishes = false;
          break;
        }
      if (vanishes) {
        low_arity_exists = true;
        break;
      }
    }
  }
  if (low_arity_exists) {
    Decomposition d = decompose_low_arity(fc, r.gap);
    d.oddsupp_case_applies = case_b_applicable;
    return {r.gap, std::move(d)};
  }

  if (r.gap != 2)
    throw VerificationError("gap >= 3 must admit the low-arity decomposition");
  if (!determined)
    throw VerificationError("gap-2 polynomial with neither decomposition scheme");

  // symmetric scheme: g follows the oddsupp profile of f on repeat tuples
  // and is 0 elsewhere, which is the canonical normalization
  FunctionTable gt(tbl.domain_size(), tbl.codomain_size(), n);
  for (std::size_t idx = 0; idx < tbl.size(); ++idx)
    gt.set_value(idx, repeats[idx] ? tbl.value(idx) : 0u);
  Polynomial g = interpolate(gt, fc.field());
  ConditionReport conds = check_conditions_AB(g);
  if (!conds.both())
    throw VerificationError("reconstructed symmetric summand violates the coefficient conditions");
  bool g_nonconstant = false;
  for (std::size_t idx = 1; idx < gt.size(); ++idx)
    if (gt.value(idx) != gt.value(0)) {
      g_nonconstant = true;
      break;
    }
  if (!g_nonconstant) throw VerificationError("reconstructed symmetric summand is constant");
  Polynomial h = sub(fc, g);
  if (!vanishes_on_repeats(h))
    throw VerificationError("difference does not vanish on repeat tuples");
  Decomposition d{std::move(g), std::move(h), 2, DecompositionKind::oddsupp,
                  {0, 0},       std::nullopt, std::move(conds), true};
  return {2, std::move(d)};
}

ConditionReport check_conditions_AB(const Polynomial& f) {
  if (!f.field()->is_finite() || f.field()->characteristic() != 2)
    throw PreconditionError("coefficient conditions require characteristic 2");
  if (!f.is_canonical()) throw PreconditionError("coefficient conditions require a canonical polynomial");

  ConditionReport rep;
  rep.symmetric = true;
  rep.no_equal_exponents = true;

  for (const auto& [m, c] : f.terms()) {
    const auto& e = m.exponents();
    for (std::size_t i = 0; i < e.size() && rep.no_equal_exponents; ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (e[i] != 0 && e[i] == e[j]) {
          rep.no_equal_exponents = false;
          rep.equal_exponent_witness = m;
          break;
        }
    if (!rep.no_equal_exponents) break;
  }

  std::map<std::vector<unsigned>, std::pair<Monomial, FieldElement>> orbit_seen;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> key = m.exponents();
    std::sort(key.begin(), key.end());
    orbit_seen.emplace(std::move(key), std::make_pair(m, c));
  }
  for (const auto& [key, rep_term] : orbit_seen) {
    std::vector<unsigned> arrangement = key;
    do {
      Monomial other(arrangement);
      if (!(f.coefficient(other) == rep_term.second)) {
        rep.symmetric = false;
        rep.symmetry_witness = std::make_pair(rep_term.first, other);
        break;
      }
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    if (!rep.symmetric) break;
  }
  return rep;
}

bool is_determined_by_oddsupp_poly(const Polynomial& f) {
  return check_conditions_AB(f).both();
}

std::vector<Polynomial> split_low_arity_summands(const Polynomial& f) {
  if (!f.field()->is_finite() || f.field()->characteristic() != 2)
    throw PreconditionError("splitting requires a finite field of characteristic 2");
  Polynomial fc = canonicalize(f);
  const unsigned n = fc.arity();
  const unsigned q = fc.field()->order();
  if (occurring_variables(fc).size() != n || n <= std::max(q, 3u))
    throw PreconditionError("splitting requires essential arity n > max(q, 3)");
  GapReport r = poly_gap(fc);
  if (r.gap != 2) throw PreconditionError("splitting requires gap 2");

  ConditionReport conds = check_conditions_AB(fc);
  if (!conds.both())
    throw VerificationError("gap-2 polynomial above the order bound violates the coefficient conditions");
  std::vector<Polynomial> out;
  for (const auto& [m, c] : fc.terms()) {
    if (m.distinct_variables() > q - 1)
      throw VerificationError("monomial summand involves more than q - 1 variables");
    out.push_back(Polynomial::monomial(fc.field(), n, m, c));
  }
  return out;
}

namespace {

FieldPtr field_of_order(unsigned q) {
  unsigned p = 0;
  for (unsigned d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) throw PreconditionError("invalid field order");
  unsigned k = 0, rest = q;
  while (rest > 1) {
    if (rest % p != 0) throw PreconditionError(std::to_string(q) + " is not a prime power");
    rest /= p;
    ++k;
  }
  return Field::finite(p, k);
}

Polynomial counterexample_product(const FieldPtr& field, unsigned n, unsigned first_var) {
  const unsigned q = field->order();
  const FieldElement half = inv(field->from_integer(2));
  Polynomial acc = Polynomial::constant(field, n, field->one());
  for (unsigned i = first_var; i <= n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i - 1] = q - 1;
    Polynomial factor = sub(Polynomial::monomial(field, n, Monomial(std::move(e)), field->one()),
                            Polynomial::constant(field, n, half));
    acc = mul(acc, factor);
  }
  return acc;
}

}  // namespace

Polynomial odd_char_counterexample(unsigned q, unsigned n) {
  if (q % 2 == 0) throw PreconditionError("the construction needs an odd prime power");
  if (n < 2) throw PreconditionError("the construction needs arity >= 2");
  return counterexample_product(field_of_order(q), n, 1);
}

Polynomial odd_char_counterexample_minor(unsigned q, unsigned n) {
  if (q % 2 == 0) throw PreconditionError("the construction needs an odd prime power");
  if (n < 2) throw PreconditionError("the construction needs arity >= 2");
  FieldPtr field = field_of_order(q);
  const FieldElement quarter = inv(field->from_integer(4));
  return scalar_mul(quarter, counterexample_product(field, n, 3));
}

bool oddsupp_constant_char0(const Polynomial& f) {
  if (!f.field()->is_rational())
    throw PreconditionError("this test requires rational coefficients");
  const unsigned n = f.arity();
  if (n < 2) throw PreconditionError("this test requires arity >= 2");

  std::vector<unsigned> sigma(n);
  auto ident = [&](unsigned i, unsigned j) {
    for (unsigned v = 1; v <= n; ++v) sigma[v - 1] = (v == i) ? j : v;
    return substitute(f, sigma, n);
  };

  std::vector<Polynomial> minors;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      Polynomial m = ident(i, j);
      auto occ = occurring_variables(m);
      if (occ.count(j)) return false;  // the doubled variable must drop out
      // symmetry in the remaining variables
      std::vector<unsigned> rest;
      for (unsigned v = 1; v <= n; ++v)
        if (v != i && v != j) rest.push_back(v);
      for (std::size_t t = 0; t + 1 < rest.size(); ++t) {
        for (unsigned v = 1; v <= n; ++v) sigma[v - 1] = v;
        sigma[rest[t] - 1] = rest[t + 1];
        sigma[rest[t + 1] - 1] = rest[t];
        if (!(substitute(m, sigma, n) == m)) return false;
      }
      minors.push_back(std::move(m));
    }
  }

  // determination in characteristic 0 forces a constant restriction
  for (const Polynomial& m : minors) {
    if (!m.is_constant() || !(m == minors.front()))
      throw VerificationError("oddsupp-determined restriction is not constant");
  }
  std::vector<unsigned> all_one(n, 1);
  Polynomial diag = substitute(f, all_one, 1);
  if (!diag.is_constant() ||
      !(diag.constant_value() == minors.front().constant_value()))
    throw VerificationError("diagonal disagrees with the constant restriction");
  return true;
}

TernaryGapReport ternary_gap_char0(const Polynomial& f) {
  if (!f.field()->is_rational())
    throw PreconditionError("ternary analysis requires rational coefficients");
  if (f.arity() != 3) throw PreconditionError("ternary analysis requires arity 3");
  if (occurring_variables(f).size() != 3)
    throw PreconditionError("all three variables must occur");

  TernaryGapReport out;
  out.report = poly_gap_symbolic(f);
  if (out.report.gap != 2) return out;

  // diagonal minors as binary polynomials in (x0, x1) = (var 1, var 2)
  const std::array<std::array<unsigned, 3>, 3> sigmas{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
  std::array<unsigned, 3> pattern{};
  std::optional<Polynomial> h;
  for (unsigned slot = 0; slot < 3; ++slot) {
    Polynomial d = substitute(f, sigmas[slot], 2);
    auto occ = occurring_variables(d);
    if (occ.size() != 1)
      throw VerificationError("ternary gap-2 diagonal minor is not unary");
    pattern[slot] = (*occ.begin() == 2) ? 1u : 0u;
    std::vector<unsigned> collapse{1, 1};
    Polynomial unary = substitute(d, collapse, 1);
    if (!h) {
      h = std::move(unary);
    } else if (!(*h == unary)) {
      throw VerificationError("ternary diagonal minors disagree on the unary witness");
    }
  }
  const unsigned ones = pattern[0] + pattern[1] + pattern[2];
  if (ones != 1)
    throw VerificationError("excluded ternary slot pattern encountered");
  if (!out.report.quasi_arity || *out.report.quasi_arity != 1)
    throw VerificationError("ternary gap 2 must have quasi-arity 1");
  out.pattern = pattern;
  out.unary_witness = std::move(h);
  return out;
}

std::pair<unsigned long long, unsigned long long> oddsupp_dimension_counts(unsigned q, unsigned n) {
  if (q < 2 || (q & (q - 1)) != 0) throw PreconditionError("q must be a power of 2");
  if (n < 1) throw PreconditionError("n must be at least 1");
  const unsigned top = std::max(q, n) + 1;
  std::vector<std::vector<unsigned long long>> binom(top, std::vector<unsigned long long>(top, 0));
  for (unsigned a = 0; a < top; ++a) {
    binom[a][0] = 1;
    for (unsigned b = 1; b <= a; ++b)
      binom[a][b] = binom[a - 1][b - 1] + (b <= a - 1 ? binom[a - 1][b] : 0);
  }
  auto choose = [&](unsigned a, unsigned b) -> unsigned long long {
    return b > a ? 0ull : binom[a][b];
  };
  unsigned long long u = 0;
  for (unsigned j = n;; j -= 2) {
    u += choose(q, j);
    if (j < 2) break;
  }
  unsigned long long v = 0;
  for (unsigned s = 0; s <= n; ++s) v += choose(q - 1, s);
  return {u, v};
}

std::vector<Polynomial> oddsupp_orbit_basis(const FieldPtr& field, unsigned n) {
  if (!field->is_finite() || field->characteristic() != 2)
    throw PreconditionError("the orbit basis is defined over characteristic 2");
  const unsigned q = field->order();
  const unsigned max_size = std::min(n, q - 1);

  std::vector<Polynomial> basis;
  std::vector<unsigned> subset;
  auto emit = [&]() {
    std::vector<unsigned> exps(n, 0);
    for (std::size_t t = 0; t < subset.size(); ++t) exps[n - subset.size() + t] = subset[t];
    std::sort(exps.begin(), exps.end());
    std::vector<std::pair<Monomial, FieldElement>> terms;
    do {
      terms.emplace_back(Monomial(exps), field->one());
    } while (std::next_permutation(exps.begin(), exps.end()));
    basis.push_back(Polynomial::from_terms(field, n, std::move(terms)));
  };
  // subsets of {1..q-1} by size, lexicographic within a size
  auto rec = [&](auto&& self, unsigned size, unsigned next) -> void {
    if (subset.size() == size) {
      emit();
      return;
    }
    for (unsigned v = next; v <= q - 1; ++v) {
      subset.push_back(v);
      self(self, size, v + 1);
      subset.pop_back();
    }
  };
  for (unsigned size = 0; size <= max_size; ++size) rec(rec, size, 1);
  return basis;
}

}  // namespace aritygap
