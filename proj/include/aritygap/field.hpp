#ifndef ARITYGAP_FIELD_HPP
#define ARITYGAP_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "aritygap/errors.hpp"

namespace aritygap {

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { finite, rational };

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// A coefficient field: either GF(p^k) with 2 <= p^k <= 64, or Q.
///
/// Finite-field elements are identified by their canonical index: writing an
/// element as c_0 + c_1*a + ... + c_{k-1}*a^{k-1} in the polynomial basis
/// (a = residue of x modulo the field's irreducible modulus), its index is
/// sum c_i * p^i, an integer in [0, q).  This index is the element's text
/// form and fixes the enumeration order used everywhere downstream.
/// All arithmetic is exact; there is no floating-point mode.
class Field : public std::enable_shared_from_this<Field> {
public:
  static FieldPtr rationals();
  /// GF(p^k) with the default modulus for (p, k): the first monic irreducible
  /// polynomial of degree k over GF(p) in base-p encoding order of its lower
  /// coefficient vector (c_0 + c_1*p + ...).  For k = 1 this is x.
  static FieldPtr finite(unsigned p, unsigned k);
  /// GF(p^k) with an explicit monic modulus, coefficients little-endian
  /// (length k + 1, last entry 1).  The modulus is checked for
  /// irreducibility by exhaustive trial division.
  static FieldPtr finite(unsigned p, unsigned k, std::vector<unsigned> modulus);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ == FieldKind::finite; }
  bool is_rational() const { return kind_ == FieldKind::rational; }
  /// p for finite fields, 0 for the rationals.
  unsigned characteristic() const { return is_finite() ? p_ : 0; }
  unsigned prime() const;
  unsigned extension_degree() const;
  /// q = p^k.
  unsigned order() const;
  const std::vector<unsigned>& modulus() const;

  bool same(const Field& other) const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Finite fields: the element with the given canonical index.
  FieldElement from_index(unsigned index) const;
  /// The image of an integer under the canonical ring map Z -> F.
  FieldElement from_integer(long long value) const;
  FieldElement from_rational(Rational value) const;
  /// Parses a text literal: the canonical index for finite fields, or
  /// "a/b" / "a" for the rationals.
  FieldElement parse(std::string_view text) const;

  // Index-level arithmetic (finite fields), used in table-heavy sweeps.
  unsigned add_index(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub_index(unsigned a, unsigned b) const { return add_[a * q_ + neg_[b]]; }
  unsigned mul_index(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg_index(unsigned a) const { return neg_[a]; }
  unsigned inv_index(unsigned a) const;
  unsigned pow_index(unsigned a, unsigned long long e) const;

  /// Coefficient vector (c_0, ..., c_{k-1}) of the element with this index.
  std::vector<unsigned> coeff_vector(unsigned index) const;

  std::string to_string(const FieldElement& a) const;

private:
  Field() = default;
  static FieldPtr make_finite(unsigned p, unsigned k, std::vector<unsigned> modulus);
  void build_tables();

  FieldKind kind_ = FieldKind::rational;
  unsigned p_ = 0, k_ = 0, q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// An immutable element of some Field.  Binary operations require both
/// operands to come from structurally identical fields.
class FieldElement {
public:
  FieldElement() = default;

  const FieldPtr& field() const { return field_; }
  bool valid() const { return field_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;
  unsigned index() const;
  const Rational& rational() const;

  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
  friend class Field;
  FieldElement(FieldPtr field, unsigned index)
      : field_(std::move(field)), index_(index) {}
  FieldElement(FieldPtr field, Rational value)
      : field_(std::move(field)), rational_(std::move(value)) {}

  FieldPtr field_;
  unsigned index_ = 0;
  Rational rational_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
/// Multiplicative inverse; inv(0) throws PreconditionError.
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, unsigned long long e);

/// Whether a^q = a, q being the order of a's (finite) field.  Holds for
/// every element; exposed so the property can be checked exhaustively.
bool frobenius_fixed(const FieldElement& a);

bool fields_compatible(const FieldPtr& a, const FieldPtr& b);
/// Throws PreconditionError unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

}  // namespace aritygap

#endif
