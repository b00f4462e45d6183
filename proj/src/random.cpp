#include "aritygap/random.hpp"

#include <algorithm>

namespace aritygap {

FieldElement random_element(Rng& rng, const FieldPtr& field, unsigned bound) {
  if (field->is_finite()) return field->from_index(static_cast<unsigned>(rng.below(field->order())));
  const long long num = rng.range(-static_cast<long long>(bound), bound);
  const long long den = rng.range(1, bound);
  return field->from_rational(Rational(num, den));
}

FieldElement random_nonzero_element(Rng& rng, const FieldPtr& field, unsigned bound) {
  while (true) {
    FieldElement e = random_element(rng, field, bound);
    if (!e.is_zero()) return e;
  }
}

Polynomial random_polynomial(Rng& rng, const FieldPtr& field, unsigned arity, unsigned max_terms,
                             unsigned max_exponent) {
  const auto terms = rng.below(max_terms + 1);
  std::vector<std::pair<Monomial, FieldElement>> list;
  for (std::uint64_t t = 0; t < terms; ++t) {
    std::vector<unsigned> exps(arity);
    for (unsigned i = 0; i < arity; ++i)
      exps[i] = static_cast<unsigned>(rng.below(max_exponent + 1));
    list.emplace_back(Monomial(std::move(exps)), random_element(rng, field));
  }
  return canonicalize(Polynomial::from_terms(field, arity, std::move(list)));
}

Polynomial random_nonzero_polynomial(Rng& rng, const FieldPtr& field, unsigned arity,
                                     unsigned max_terms, unsigned max_exponent) {
  while (true) {
    Polynomial f = random_polynomial(rng, field, arity, max_terms, max_exponent);
    if (!f.is_zero()) return f;
  }
}

Polynomial random_polynomial_on(Rng& rng, const FieldPtr& field, unsigned arity,
                                const std::vector<unsigned>& support, unsigned max_terms,
                                unsigned max_exponent) {
  while (true) {
    std::vector<std::pair<Monomial, FieldElement>> list;
    const auto terms = 1 + rng.below(std::max(1u, max_terms));
    for (std::uint64_t t = 0; t < terms; ++t) {
      std::vector<unsigned> exps(arity, 0);
      for (unsigned v : support) exps[v - 1] = static_cast<unsigned>(rng.below(max_exponent + 1));
      list.emplace_back(Monomial(std::move(exps)), random_element(rng, field));
    }
    Polynomial f = canonicalize(Polynomial::from_terms(field, arity, std::move(list)));
    auto occ = occurring_variables(f);
    if (std::vector<unsigned>(occ.begin(), occ.end()) == support) return f;
  }
}

}  // namespace aritygap
