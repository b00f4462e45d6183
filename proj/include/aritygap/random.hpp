#ifndef ARITYGAP_RANDOM_HPP
#define ARITYGAP_RANDOM_HPP

#include <cstdint>
#include <random>

#include "aritygap/polynomial.hpp"

namespace aritygap {

/// Seeded generator with rejection-sampled bounded draws, so identical seeds
/// reproduce identical sequences on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("empty draw range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
  std::mt19937_64 engine_;
};

/// Uniform field element; rationals draw numerator in [-bound, bound] and
/// denominator in [1, bound].
FieldElement random_element(Rng& rng, const FieldPtr& field, unsigned bound = 9);
FieldElement random_nonzero_element(Rng& rng, const FieldPtr& field, unsigned bound = 9);

/// Random canonical polynomial with at most max_terms monomials, exponents
/// at most max_exponent (folded over finite fields).
Polynomial random_polynomial(Rng& rng, const FieldPtr& field, unsigned arity, unsigned max_terms,
                             unsigned max_exponent);
Polynomial random_nonzero_polynomial(Rng& rng, const FieldPtr& field, unsigned arity,
                                     unsigned max_terms, unsigned max_exponent);

/// Random canonical polynomial occurring exactly in the given variables.
Polynomial random_polynomial_on(Rng& rng, const FieldPtr& field, unsigned arity,
                                const std::vector<unsigned>& support, unsigned max_terms,
                                unsigned max_exponent);

}  // namespace aritygap

#endif
