#include "aritygap/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace aritygap {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense little-endian coefficient vectors over Z_p.
using Coeffs = std::vector<unsigned>;

int degree(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Coeffs mul_poly(const Coeffs& a, const Coeffs& b, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

// Reduces a modulo the monic polynomial m, in place.
void reduce_poly(Coeffs& a, const Coeffs& m, unsigned p) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) {
    const unsigned c = a[static_cast<std::size_t>(d)];
    const std::size_t shift = static_cast<std::size_t>(d - dm);
    for (int t = 0; t <= dm; ++t) {
      std::size_t pos = shift + static_cast<std::size_t>(t);
      a[pos] = (a[pos] + p - (c * m[static_cast<std::size_t>(t)]) % p) % p;
    }
  }
}

bool divides_poly(const Coeffs& d, Coeffs a, unsigned p) {
  reduce_poly(a, d, p);
  return degree(a) < 0;
}

// Exhaustive trial division by every monic polynomial of degree 1..k/2.
bool is_irreducible(const Coeffs& m, unsigned p) {
  const int k = degree(m);
  if (k < 1) return false;
  for (int dd = 1; dd <= k / 2; ++dd) {
    unsigned long long count = 1;
    for (int t = 0; t < dd; ++t) count *= p;
    for (unsigned long long v = 0; v < count; ++v) {
      Coeffs cand(static_cast<std::size_t>(dd) + 1, 0);
      unsigned long long rest = v;
      for (int t = 0; t < dd; ++t) {
        cand[static_cast<std::size_t>(t)] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      cand[static_cast<std::size_t>(dd)] = 1;
      if (divides_poly(cand, m, p)) return false;
    }
  }
  return true;
}

Coeffs default_modulus(unsigned p, unsigned k) {
  unsigned long long count = 1;
  for (unsigned t = 0; t < k; ++t) count *= p;
  for (unsigned long long v = 0; v < count; ++v) {
    Coeffs m(k + 1, 0);
    unsigned long long rest = v;
    for (unsigned t = 0; t < k; ++t) {
      m[t] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw Error("no irreducible modulus found");  // unreachable for prime p
}

}  // namespace

FieldPtr Field::rationals() {
  static FieldPtr instance = [] {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = FieldKind::rational;
    return FieldPtr(f);
  }();
  return instance;
}

FieldPtr Field::finite(unsigned p, unsigned k) {
  if (!is_prime(p)) throw PreconditionError("field base " + std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("extension degree must be at least 1");
  return make_finite(p, k, default_modulus(p, k));
}

FieldPtr Field::finite(unsigned p, unsigned k, std::vector<unsigned> modulus) {
  if (!is_prime(p)) throw PreconditionError("field base " + std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("extension degree must be at least 1");
  if (modulus.size() != k + 1 || modulus[k] != 1)
    throw PreconditionError("modulus must be monic of degree k");
  for (unsigned c : modulus)
    if (c >= p) throw PreconditionError("modulus coefficient out of range");
  if (!is_irreducible(modulus, p))
    throw PreconditionError("modulus is reducible over GF(" + std::to_string(p) + ")");
  return make_finite(p, k, std::move(modulus));
}

FieldPtr Field::make_finite(unsigned p, unsigned k, std::vector<unsigned> modulus) {
  unsigned long long q = 1;
  for (unsigned t = 0; t < k; ++t) q *= p;
  if (q > 64) throw PreconditionError("finite fields of order > 64 are not supported");

  static std::mutex cache_mutex;
  static std::map<std::tuple<unsigned, unsigned, std::vector<unsigned>>, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto key = std::make_tuple(p, k, modulus);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::finite;
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<unsigned>(q);
  f->modulus_ = std::move(modulus);
  f->build_tables();
  FieldPtr ptr(f);
  cache.emplace(std::move(key), ptr);
  return ptr;
}

void Field::build_tables() {
  const unsigned q = q_;
  add_.assign(static_cast<std::size_t>(q) * q, 0);
  mul_.assign(static_cast<std::size_t>(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);

  auto digits = [&](unsigned idx) {
    Coeffs c(k_, 0);
    for (unsigned t = 0; t < k_; ++t) {
      c[t] = idx % p_;
      idx /= p_;
    }
    return c;
  };
  auto encode = [&](const Coeffs& c) {
    unsigned idx = 0;
    for (unsigned t = k_; t-- > 0;) idx = idx * p_ + (t < c.size() ? c[t] : 0);
    return idx;
  };

  for (unsigned a = 0; a < q; ++a) {
    Coeffs ca = digits(a);
    Coeffs na(k_, 0);
    for (unsigned t = 0; t < k_; ++t) na[t] = (p_ - ca[t]) % p_;
    neg_[a] = static_cast<std::uint8_t>(encode(na));
    for (unsigned b = 0; b < q; ++b) {
      Coeffs cb = digits(b);
      Coeffs sum(k_, 0);
      for (unsigned t = 0; t < k_; ++t) sum[t] = (ca[t] + cb[t]) % p_;
      add_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>(encode(sum));
      Coeffs prod = mul_poly(ca, cb, p_);
      reduce_poly(prod, modulus_, p_);
      mul_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint8_t>(encode(prod));
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    bool found = false;
    for (unsigned b = 1; b < q; ++b) {
      if (mul_[static_cast<std::size_t>(a) * q + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        found = true;
        break;
      }
    }
    if (!found) throw Error("field table construction failed: missing inverse");
  }
}

unsigned Field::prime() const {
  if (!is_finite()) throw PreconditionError("prime() requires a finite field");
  return p_;
}

unsigned Field::extension_degree() const {
  if (!is_finite()) throw PreconditionError("extension_degree() requires a finite field");
  return k_;
}

unsigned Field::order() const {
  if (!is_finite()) throw PreconditionError("order() requires a finite field");
  return q_;
}

const std::vector<unsigned>& Field::modulus() const {
  if (!is_finite()) throw PreconditionError("modulus() requires a finite field");
  return modulus_;
}

bool Field::same(const Field& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == FieldKind::rational) return true;
  return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
}

FieldElement Field::zero() const {
  if (is_finite()) return FieldElement(shared_from_this(), 0u);
  return FieldElement(shared_from_this(), Rational(0));
}

FieldElement Field::one() const {
  if (is_finite()) return FieldElement(shared_from_this(), 1u);
  return FieldElement(shared_from_this(), Rational(1));
}

FieldElement Field::from_index(unsigned index) const {
  if (!is_finite()) throw PreconditionError("from_index() requires a finite field");
  if (index >= q_)
    throw PreconditionError("element index " + std::to_string(index) + " not in field of order " +
                            std::to_string(q_));
  return FieldElement(shared_from_this(), index);
}

FieldElement Field::from_integer(long long value) const {
  if (is_rational()) return FieldElement(shared_from_this(), Rational(value));
  long long r = value % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return FieldElement(shared_from_this(), static_cast<unsigned>(r));
}

FieldElement Field::from_rational(Rational value) const {
  if (!is_rational()) throw PreconditionError("from_rational() requires the rational field");
  return FieldElement(shared_from_this(), std::move(value));
}

FieldElement Field::parse(std::string_view text) const {
  std::string s(text);
  // trim
  auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  if (s.empty()) throw PreconditionError("empty field literal");

  if (is_finite()) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw PreconditionError("invalid finite-field literal '" + s + "'");
    unsigned long v = std::stoul(s);
    if (v >= q_)
      throw PreconditionError("literal " + s + " not in field of order " + std::to_string(q_));
    return from_index(static_cast<unsigned>(v));
  }

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = (s[0] == '-');
    pos = 1;
  }
  std::size_t slash = s.find('/');
  auto digits_only = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  using boost::multiprecision::cpp_int;
  if (slash == std::string::npos) {
    if (!digits_only(pos, s.size()))
      throw PreconditionError("invalid rational literal '" + s + "'");
    cpp_int num(s.substr(pos));
    Rational r(num, 1);
    if (negative) r = -r;
    return from_rational(r);
  }
  if (!digits_only(pos, slash) || !digits_only(slash + 1, s.size()))
    throw PreconditionError("invalid rational literal '" + s + "'");
  cpp_int num(s.substr(pos, slash - pos));
  cpp_int den(s.substr(slash + 1));
  if (den == 0) throw PreconditionError("zero denominator in literal '" + s + "'");
  Rational r(num, den);
  if (negative) r = -r;
  return from_rational(r);
}

unsigned Field::inv_index(unsigned a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return inv_[a];
}

unsigned Field::pow_index(unsigned a, unsigned long long e) const {
  unsigned result = 1;
  unsigned base = a;
  while (e > 0) {
    if (e & 1) result = mul_index(result, base);
    base = mul_index(base, base);
    e >>= 1;
  }
  return result;
}

std::vector<unsigned> Field::coeff_vector(unsigned index) const {
  if (!is_finite()) throw PreconditionError("coeff_vector() requires a finite field");
  std::vector<unsigned> c(k_, 0);
  for (unsigned t = 0; t < k_; ++t) {
    c[t] = index % p_;
    index /= p_;
  }
  return c;
}

std::string Field::to_string(const FieldElement& a) const {
  if (is_finite()) return std::to_string(a.index());
  const Rational& r = a.rational();
  std::ostringstream os;
  if (denominator(r) == 1) {
    os << numerator(r);
  } else {
    os << numerator(r) << '/' << denominator(r);
  }
  return os.str();
}

bool FieldElement::is_zero() const {
  if (!valid()) throw PreconditionError("uninitialized field element");
  return field_->is_finite() ? index_ == 0 : rational_ == 0;
}

bool FieldElement::is_one() const {
  if (!valid()) throw PreconditionError("uninitialized field element");
  return field_->is_finite() ? index_ == 1 : rational_ == 1;
}

unsigned FieldElement::index() const {
  if (!valid() || !field_->is_finite())
    throw PreconditionError("index() requires a finite-field element");
  return index_;
}

const Rational& FieldElement::rational() const {
  if (!valid() || !field_->is_rational())
    throw PreconditionError("rational() requires a rational element");
  return rational_;
}

std::string FieldElement::to_string() const {
  if (!valid()) throw PreconditionError("uninitialized field element");
  return field_->to_string(*this);
}

bool fields_compatible(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b) return false;
  return a == b || a->same(*b);
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!fields_compatible(a.field(), b.field()))
    throw PreconditionError("field mismatch between elements");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }
FieldElement operator-(const FieldElement& a) { return neg(a); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.field()->is_finite()) return a.index_ == b.index_;
  return a.rational_ == b.rational_;
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field();
  if (f->is_finite()) return f->from_index(f->add_index(a.index(), b.index()));
  return f->from_rational(a.rational() + b.rational());
}

FieldElement sub(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field();
  if (f->is_finite()) return f->from_index(f->sub_index(a.index(), b.index()));
  return f->from_rational(a.rational() - b.rational());
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const FieldPtr& f = a.field();
  if (f->is_finite()) return f->from_index(f->mul_index(a.index(), b.index()));
  return f->from_rational(a.rational() * b.rational());
}

FieldElement neg(const FieldElement& a) {
  const FieldPtr& f = a.field();
  if (f->is_finite()) return f->from_index(f->neg_index(a.index()));
  return f->from_rational(-a.rational());
}

FieldElement inv(const FieldElement& a) {
  const FieldPtr& f = a.field();
  if (a.is_zero()) throw PreconditionError("inverse of zero");
  if (f->is_finite()) return f->from_index(f->inv_index(a.index()));
  return f->from_rational(Rational(1) / a.rational());
}

FieldElement pow(const FieldElement& a, unsigned long long e) {
  const FieldPtr& f = a.field();
  if (f->is_finite()) return f->from_index(f->pow_index(a.index(), e));
  Rational result(1);
  Rational base = a.rational();
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return f->from_rational(result);
}

bool frobenius_fixed(const FieldElement& a) {
  const FieldPtr& f = a.field();
  if (!f || !f->is_finite())
    throw PreconditionError("frobenius_fixed() requires a finite-field element");
  return f->pow_index(a.index(), f->order()) == a.index();
}

}  // namespace aritygap
