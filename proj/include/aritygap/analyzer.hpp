#ifndef ARITYGAP_ANALYZER_HPP
#define ARITYGAP_ANALYZER_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "aritygap/function_table.hpp"
#include "aritygap/polynomial.hpp"

namespace aritygap {

/// Whether the induced function is zero on every tuple with a repeated
/// coordinate.  Finite fields: exhaustive evaluation.  Characteristic 0:
/// for every pair i < j the substitution x_i := x_j must give the zero
/// polynomial, which over an infinite field is the same condition.
bool vanishes_on_repeats(const Polynomial& h);

struct DeltaMultiple {
  bool is_multiple = false;
  /// Characteristic 0 only: w with h = w * difference_product.
  std::optional<Polynomial> quotient;
};

/// Whether h is a multiple of the difference product.  Over Q this runs
/// exact division by the n(n-1)/2 linear factors and returns the quotient
/// certificate; over a finite field the functional criterion (vanishing on
/// repeat tuples) decides, since exponent folding need not preserve formal
/// divisibility.
DeltaMultiple is_delta_multiple(const Polynomial& h);

/// Gap analysis of the function induced by f, reported on the essential
/// core (inessential variables are dropped first; indices in the report
/// refer to the original variables).  Finite fields delegate to the value
/// table; characteristic 0 computes identification minors symbolically.
GapReport poly_gap(const Polynomial& f);
/// The table route, available for any finite-field polynomial.
GapReport poly_gap_via_table(const Polynomial& f);
/// The syntactic route: essential arities are occurring-variable counts of
/// canonical identification minors.  Over finite fields only the gap and
/// minor data are filled (no quasi-arity); over Q the full report is
/// produced.
GapReport poly_gap_symbolic(const Polynomial& f);

enum class DecompositionKind { low_arity, oddsupp };

/// Syntactic conditions on a canonical polynomial over GF(2^k):
/// coefficients constant on exponent-permutation orbits, and no monomial
/// with two equal nonzero exponents.  Witnesses replay the violation.
struct ConditionReport {
  bool symmetric = false;
  bool no_equal_exponents = false;
  std::optional<std::pair<Monomial, Monomial>> symmetry_witness;
  std::optional<Monomial> equal_exponent_witness;
  bool both() const { return symmetric && no_equal_exponents; }
};

struct Decomposition {
  Polynomial g, h;
  unsigned p = 0;
  DecompositionKind kind = DecompositionKind::low_arity;
  std::pair<unsigned, unsigned> witness{0, 0};  // minor pair used for g (low_arity)
  std::optional<Polynomial> delta_quotient;     // char 0: h = quotient * difference product
  std::optional<ConditionReport> g_conditions;  // oddsupp kind
  bool oddsupp_case_applies = false;  // the symmetric scheme also applies to this f
};

struct DecomposeOutcome {
  unsigned gap = 0;
  std::optional<Decomposition> decomposition;  // empty exactly when gap == 1
};

/// gap >= 3 decomposition over any field: f = g + h with exactly n - p
/// variables in g and h a nonzero multiple of the difference product.
/// g is recovered as an identification minor; every qualifying pair must
/// produce the same g (uniqueness is asserted at runtime).
/// Requires arity >= 4, all variables occurring, gap >= 3.
Decomposition decompose_gap_ge3(const Polynomial& f);

/// Characteristic-0 decomposition, admitting p >= 2; gap-1 inputs yield an
/// outcome without decomposition.  Requires arity >= 2, all variables
/// occurring.
DecomposeOutcome decompose_char0(const Polynomial& f);

/// GF(2^k) decomposition for arity >= 4: the low-arity scheme when some
/// minor qualifies, otherwise the symmetric scheme with g reconstructed
/// from the oddsupp profile of f on repeat tuples (g is 0 on repeat-free
/// tuples, which makes it canonical).  gap-1 inputs yield an outcome
/// without decomposition.
DecomposeOutcome decompose_char2(const Polynomial& f);

ConditionReport check_conditions_AB(const Polynomial& f);

/// Syntactic oddsupp-determination test for canonical polynomials over
/// GF(2^k); must agree with the table-level class-constancy oracle.
bool is_determined_by_oddsupp_poly(const Polynomial& f);

/// Splits a gap-2 polynomial over GF(2^k) with all n > max(q, 3) variables
/// occurring into its monomial summands, each involving at most q - 1
/// variables.
std::vector<Polynomial> split_low_arity_summands(const Polynomial& f);

/// The product of (x_i^(q-1) - 1/2) over all n variables, for odd q: a
/// gap-2 polynomial whose canonical form keeps the full monomial
/// x_1^(q-1) ... x_n^(q-1), so it is not a sum of (n-1)-ary functions.
Polynomial odd_char_counterexample(unsigned q, unsigned n);
/// The expected (2<-1) identification minor of the polynomial above,
/// constructed directly: (1/4) * prod_{i >= 3} (x_i^(q-1) - 1/2).
Polynomial odd_char_counterexample_minor(unsigned q, unsigned n);

/// Characteristic 0: decides whether f restricted to repeat tuples is
/// determined by oddsupp (for every pair, the identified polynomial drops
/// the identified variable and is symmetric in the rest), and verifies that
/// determination forces a constant restriction.  A determined nonconstant
/// restriction raises VerificationError.
bool oddsupp_constant_char0(const Polynomial& f);

struct TernaryGapReport {
  GapReport report;
  std::optional<std::array<unsigned, 3>> pattern;  // which of x0/x1 each diagonal minor follows
  std::optional<Polynomial> unary_witness;         // h with f = h(x_1) on repeat tuples
};

/// Ternary characteristic-0 analysis: gap 2 forces quasi-arity 1 with a
/// unary witness following exactly one diagonal slot; the excluded slot
/// patterns raise VerificationError.
TernaryGapReport ternary_gap_char0(const Polynomial& f);

/// (|P'_n(F)|, dimension of the symmetric/distinct-exponent space): the two
/// class counts whose equality underpins the oddsupp criterion; both equal
/// 2^(q-1) once n >= q.  q must be a power of 2.
std::pair<unsigned long long, unsigned long long> oddsupp_dimension_counts(unsigned q, unsigned n);

/// Basis of the coefficient classes allowed by the two syntactic
/// conditions: for each set of distinct nonzero exponents of size <= n, the
/// sum of all monomials realizing it.  Deterministic order: by size, then
/// lexicographic.  Characteristic 2.
std::vector<Polynomial> oddsupp_orbit_basis(const FieldPtr& field, unsigned n);

}  // namespace aritygap

#endif
