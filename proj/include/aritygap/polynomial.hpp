#ifndef ARITYGAP_POLYNOMIAL_HPP
#define ARITYGAP_POLYNOMIAL_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aritygap/errors.hpp"
#include "aritygap/field.hpp"
#include "aritygap/function_table.hpp"

namespace aritygap {

/// Exponent vector of a single monomial.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exponents) : exps_(std::move(exponents)) {}

  unsigned arity() const { return static_cast<unsigned>(exps_.size()); }
  unsigned exponent(unsigned i) const { return exps_[i - 1]; }  // 1-based
  const std::vector<unsigned>& exponents() const { return exps_; }
  unsigned total_degree() const;
  unsigned distinct_variables() const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
  std::vector<unsigned> exps_;
};

/// Graded-lexicographic order with the leading term first: higher total
/// degree precedes, ties broken by lexicographically greater exponent
/// vector.  Fixes storage iteration and printing order.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over a coefficient field.  Stored
/// coefficients are never zero and all monomials share the polynomial's
/// arity.  Over GF(q) a polynomial need not be canonical (exponents may
/// exceed q - 1); `canonicalize` folds it onto the unique canonical
/// representative of the induced function.
class Polynomial {
public:
  using TermMap = std::map<Monomial, FieldElement, GrlexDescending>;

  Polynomial(FieldPtr field, unsigned arity);
  static Polynomial constant(const FieldPtr& field, unsigned arity, const FieldElement& c);
  static Polynomial variable(const FieldPtr& field, unsigned arity, unsigned i);
  static Polynomial monomial(const FieldPtr& field, unsigned arity, Monomial m,
                             const FieldElement& c);
  /// Merges like monomials and drops zero coefficients; performs no exponent
  /// folding.
  static Polynomial from_terms(const FieldPtr& field, unsigned arity,
                               std::vector<std::pair<Monomial, FieldElement>> terms);

  const FieldPtr& field() const { return field_; }
  unsigned arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  /// Coefficient of m (zero element if absent).
  FieldElement coefficient(const Monomial& m) const;
  FieldElement constant_value() const;  // value of a constant polynomial
  /// Over GF(q): every exponent at most q - 1.  Always true over Q.
  bool is_canonical() const;

  std::string to_text() const;

  /// Exchange format: header "field p k n" (p = k = 0 for Q), then one term
  /// per line: "coeff e1 ... en" in storage order.
  void write(std::ostream& os) const;
  static Polynomial read(std::istream& is);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
  FieldPtr field_;
  unsigned arity_ = 0;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Replaces every exponent e >= 1 by ((e - 1) mod (q - 1)) + 1 and merges,
/// implementing x^q = x.  The result induces the same function.  Identity on
/// rational-coefficient polynomials.
Polynomial canonicalize(const Polynomial& f);

// Ring arithmetic.  Results are canonicalized over finite fields; the _raw
// variants are the formal ring operations on representatives (merge only,
// no exponent folding).
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial sub(const Polynomial& a, const Polynomial& b);
Polynomial neg(const Polynomial& a);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scalar_mul(const FieldElement& c, const Polynomial& f);
Polynomial add_raw(const Polynomial& a, const Polynomial& b);
Polynomial sub_raw(const Polynomial& a, const Polynomial& b);
Polynomial mul_raw(const Polynomial& a, const Polynomial& b);

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);

/// Formal partial derivative of the stored representative with respect to
/// the i-th variable (1-based); the exponent is multiplied into the
/// coefficient through the ring map Z -> F, so characteristic matters.
/// No exponent folding is applied.
Polynomial partial_derivative(const Polynomial& f, unsigned i);

/// Formal substitution x_i -> x_{sigma(i)} into arity m (sigma 1-based,
/// total on [n], images in [m]); merges like terms, never folds exponents.
Polynomial substitute(const Polynomial& f, std::span<const unsigned> sigma, unsigned m);

/// Simple minor: the substitution above, canonicalized over finite fields.
Polynomial simple_minor(const Polynomial& f, std::span<const unsigned> sigma, unsigned m);

/// f_{i<-j}: x_i replaced by x_j, same arity, canonicalized over finite
/// fields.  Requires i != j.
Polynomial identification_minor(const Polynomial& f, unsigned i, unsigned j);

/// The chain-rule expansion sum over sigma(i) = j of the formally
/// substituted i-th partial derivative.  Equals the j-th formal partial
/// derivative of substitute(f, sigma, m); kept independent of that path so
/// the identity can be tested.
Polynomial minor_derivative_expansion(const Polynomial& f, std::span<const unsigned> sigma,
                                      unsigned m, unsigned j);

/// Exact evaluation by Horner-style accumulation in the last variable.
FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point);
/// Termwise evaluation; agrees with `evaluate` and serves as its oracle.
FieldElement evaluate_termwise(const Polynomial& f, std::span<const FieldElement> point);

/// The full value table of a polynomial over its finite field; domain
/// digits are canonical element indices.
FunctionTable table_of(const Polynomial& f);

/// The unique canonical polynomial inducing the table, built from the
/// indicator expansion sum_a t(a) * prod_i (1 - (x_i - a_i)^(q-1)).
/// Requires domain and codomain of size q over the given field.
Polynomial interpolate(const FunctionTable& t, const FieldPtr& field);

/// prod_{1 <= i < j <= n} (x_i - x_j), expanded; canonicalized over finite
/// fields (which may fold it to zero when n exceeds q).  Requires n >= 2.
Polynomial difference_product(unsigned n, const FieldPtr& field);
/// The same product without canonicalization (the formal expansion).
Polynomial difference_product_raw(unsigned n, const FieldPtr& field);

/// Exact multivariate division over Q: returns q with f = q * d, or nullopt
/// when f is not a polynomial multiple of d.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d);

/// Indices (1-based) of variables occurring with positive exponent.  For
/// canonical polynomials over GF(q), and over Q, this is exactly the
/// essential-variable set of the induced function.
std::set<unsigned> occurring_variables(const Polynomial& f);

}  // namespace aritygap

#endif
