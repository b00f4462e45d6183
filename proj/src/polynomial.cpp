#include "aritygap/polynomial.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace aritygap {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (unsigned e : exps_) d += e;
  return d;
}

unsigned Monomial::distinct_variables() const {
  unsigned c = 0;
  for (unsigned e : exps_)
    if (e > 0) ++c;
  return c;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  return a.exponents() > b.exponents();
}

Polynomial::Polynomial(FieldPtr field, unsigned arity) : field_(std::move(field)), arity_(arity) {
  if (!field_) throw PreconditionError("polynomial needs a coefficient field");
}

Polynomial Polynomial::constant(const FieldPtr& field, unsigned arity, const FieldElement& c) {
  return from_terms(field, arity, {{Monomial(std::vector<unsigned>(arity, 0)), c}});
}

Polynomial Polynomial::variable(const FieldPtr& field, unsigned arity, unsigned i) {
  if (i < 1 || i > arity) throw PreconditionError("variable index out of range");
  std::vector<unsigned> e(arity, 0);
  e[i - 1] = 1;
  return from_terms(field, arity, {{Monomial(std::move(e)), field->one()}});
}

Polynomial Polynomial::monomial(const FieldPtr& field, unsigned arity, Monomial m,
                                const FieldElement& c) {
  return from_terms(field, arity, {{std::move(m), c}});
}

Polynomial Polynomial::from_terms(const FieldPtr& field, unsigned arity,
                                  std::vector<std::pair<Monomial, FieldElement>> terms) {
  Polynomial f(field, arity);
  for (auto& [m, c] : terms) {
    if (m.arity() != arity) throw PreconditionError("monomial arity mismatch");
    if (!fields_compatible(c.field(), field)) throw PreconditionError("coefficient field mismatch");
    if (c.is_zero()) continue;
    auto it = f.terms_.find(m);
    if (it == f.terms_.end()) {
      f.terms_.emplace(std::move(m), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) f.terms_.erase(it);
    }
  }
  return f;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

FieldElement Polynomial::constant_value() const {
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return terms_.empty() ? field_->zero() : terms_.begin()->second;
}

bool Polynomial::is_canonical() const {
  if (field_->is_rational()) return true;
  const unsigned bound = field_->order() - 1;
  for (const auto& [m, c] : terms_)
    for (unsigned e : m.exponents())
      if (e > bound) return false;
  return true;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = false;
    FieldElement mag = c;
    if (field_->is_rational() && c.rational() < 0) {
      negative = true;
      mag = -c;
    }
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    const bool has_vars = m.total_degree() > 0;
    if (!has_vars) {
      os << mag.to_string();
    } else {
      bool star = false;
      if (!mag.is_one()) {
        os << mag.to_string();
        star = true;
      }
      for (unsigned i = 1; i <= arity_; ++i) {
        const unsigned e = m.exponent(i);
        if (e == 0) continue;
        if (star) os << '*';
        os << 'x' << i;
        if (e > 1) os << '^' << e;
        star = true;
      }
    }
  }
  return os.str();
}

void Polynomial::write(std::ostream& os) const {
  if (field_->is_rational())
    os << "field 0 0 " << arity_ << '\n';
  else
    os << "field " << field_->prime() << ' ' << field_->extension_degree() << ' ' << arity_ << '\n';
  for (const auto& [m, c] : terms_) {
    os << c.to_string();
    for (unsigned e : m.exponents()) os << ' ' << e;
    os << '\n';
  }
}

Polynomial Polynomial::read(std::istream& is) {
  std::string tag;
  unsigned p = 0, k = 0, n = 0;
  if (!(is >> tag >> p >> k >> n) || tag != "field")
    throw PreconditionError("malformed polynomial header (expected 'field p k n')");
  FieldPtr field = (p == 0) ? Field::rationals() : Field::finite(p, k);
  std::vector<std::pair<Monomial, FieldElement>> terms;
  std::string coeff;
  while (is >> coeff) {
    std::vector<unsigned> exps(n);
    for (unsigned i = 0; i < n; ++i)
      if (!(is >> exps[i])) throw PreconditionError("polynomial file truncated");
    terms.emplace_back(Monomial(std::move(exps)), field->parse(coeff));
  }
  return from_terms(field, n, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!fields_compatible(a.field_, b.field_) || a.arity_ != b.arity_) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_text(); }

namespace {

void require_ring_compatible(const Polynomial& a, const Polynomial& b) {
  if (!fields_compatible(a.field(), b.field()))
    throw PreconditionError("polynomial field mismatch");
  if (a.arity() != b.arity()) throw PreconditionError("polynomial arity mismatch");
}

unsigned fold_exponent(unsigned e, unsigned q) {
  return e == 0 ? 0 : ((e - 1) % (q - 1)) + 1;
}

Polynomial merge_terms(const FieldPtr& field, unsigned arity,
                       std::vector<std::pair<Monomial, FieldElement>> terms) {
  return Polynomial::from_terms(field, arity, std::move(terms));
}

}  // namespace

Polynomial canonicalize(const Polynomial& f) {
  if (f.field()->is_rational()) return f;
  const unsigned q = f.field()->order();
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e = m.exponents();
    for (unsigned& x : e) x = fold_exponent(x, q);
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return merge_terms(f.field(), f.arity(), std::move(terms));
}

Polynomial add_raw(const Polynomial& a, const Polynomial& b) {
  require_ring_compatible(a, b);
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(a.term_count() + b.term_count());
  for (const auto& t : a.terms()) terms.push_back(t);
  for (const auto& t : b.terms()) terms.push_back(t);
  return merge_terms(a.field(), a.arity(), std::move(terms));
}

Polynomial sub_raw(const Polynomial& a, const Polynomial& b) {
  require_ring_compatible(a, b);
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(a.term_count() + b.term_count());
  for (const auto& t : a.terms()) terms.push_back(t);
  for (const auto& [m, c] : b.terms()) terms.emplace_back(m, -c);
  return merge_terms(a.field(), a.arity(), std::move(terms));
}

Polynomial mul_raw(const Polynomial& a, const Polynomial& b) {
  require_ring_compatible(a, b);
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(a.term_count() * b.term_count());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<unsigned> e(a.arity());
      for (unsigned i = 0; i < a.arity(); ++i) e[i] = ma.exponents()[i] + mb.exponents()[i];
      terms.emplace_back(Monomial(std::move(e)), ca * cb);
    }
  }
  return merge_terms(a.field(), a.arity(), std::move(terms));
}

Polynomial add(const Polynomial& a, const Polynomial& b) {
  Polynomial r = add_raw(a, b);
  return a.field()->is_finite() ? canonicalize(r) : r;
}

Polynomial sub(const Polynomial& a, const Polynomial& b) {
  Polynomial r = sub_raw(a, b);
  return a.field()->is_finite() ? canonicalize(r) : r;
}

Polynomial neg(const Polynomial& a) {
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(a.term_count());
  for (const auto& [m, c] : a.terms()) terms.emplace_back(m, -c);
  return merge_terms(a.field(), a.arity(), std::move(terms));
}

Polynomial mul(const Polynomial& a, const Polynomial& b) {
  Polynomial r = mul_raw(a, b);
  return a.field()->is_finite() ? canonicalize(r) : r;
}

Polynomial scalar_mul(const FieldElement& c, const Polynomial& f) {
  if (!fields_compatible(c.field(), f.field()))
    throw PreconditionError("scalar field mismatch");
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(f.term_count());
  for (const auto& [m, coeff] : f.terms()) terms.emplace_back(m, c * coeff);
  Polynomial r = merge_terms(f.field(), f.arity(), std::move(terms));
  return f.field()->is_finite() ? canonicalize(r) : r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add(a, b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return sub(a, b); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return mul(a, b); }
Polynomial operator-(const Polynomial& a) { return neg(a); }

Polynomial partial_derivative(const Polynomial& f, unsigned i) {
  if (i < 1 || i > f.arity()) throw PreconditionError("variable index out of range");
  std::vector<std::pair<Monomial, FieldElement>> terms;
  for (const auto& [m, c] : f.terms()) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    FieldElement coeff = c * f.field()->from_integer(static_cast<long long>(e));
    if (coeff.is_zero()) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[i - 1] = e - 1;
    terms.emplace_back(Monomial(std::move(exps)), coeff);
  }
  return merge_terms(f.field(), f.arity(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, std::span<const unsigned> sigma, unsigned m) {
  if (sigma.size() != f.arity()) throw PreconditionError("index map arity mismatch");
  for (unsigned img : sigma)
    if (img < 1 || img > m) throw PreconditionError("index map image out of range");
  std::vector<std::pair<Monomial, FieldElement>> terms;
  terms.reserve(f.term_count());
  for (const auto& [mono, c] : f.terms()) {
    std::vector<unsigned> e(m, 0);
    for (unsigned i = 0; i < f.arity(); ++i) e[sigma[i] - 1] += mono.exponents()[i];
    terms.emplace_back(Monomial(std::move(e)), c);
  }
  return merge_terms(f.field(), m, std::move(terms));
}

Polynomial simple_minor(const Polynomial& f, std::span<const unsigned> sigma, unsigned m) {
  Polynomial r = substitute(f, sigma, m);
  return f.field()->is_finite() ? canonicalize(r) : r;
}

Polynomial identification_minor(const Polynomial& f, unsigned i, unsigned j) {
  const unsigned n = f.arity();
  if (i == j) throw PreconditionError("identification minor requires distinct variables");
  if (i < 1 || i > n || j < 1 || j > n) throw PreconditionError("variable index out of range");
  std::vector<unsigned> sigma(n);
  for (unsigned v = 1; v <= n; ++v) sigma[v - 1] = (v == i) ? j : v;
  return simple_minor(f, sigma, n);
}

Polynomial minor_derivative_expansion(const Polynomial& f, std::span<const unsigned> sigma,
                                      unsigned m, unsigned j) {
  if (sigma.size() != f.arity()) throw PreconditionError("index map arity mismatch");
  if (j < 1 || j > m) throw PreconditionError("variable index out of range");
  Polynomial acc(f.field(), m);
  for (unsigned i = 1; i <= f.arity(); ++i) {
    if (sigma[i - 1] != j) continue;
    acc = add_raw(acc, substitute(partial_derivative(f, i), sigma, m));
  }
  return acc;
}

namespace {

FieldElement eval_rec(const Polynomial& f, std::span<const FieldElement> point) {
  const FieldPtr& field = f.field();
  if (f.is_zero()) return field->zero();
  const unsigned n = f.arity();
  if (n == 0) return f.constant_value();

  // split on the exponent of the last variable, descending
  std::map<unsigned, std::vector<std::pair<Monomial, FieldElement>>, std::greater<>> groups;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(m.exponents().begin(), m.exponents().end() - 1);
    groups[m.exponents().back()].emplace_back(Monomial(std::move(e)), c);
  }
  const FieldElement& xn = point[n - 1];
  FieldElement acc;
  unsigned last_e = 0;
  bool first = true;
  for (auto& [e, terms] : groups) {
    Polynomial sub = Polynomial::from_terms(field, n - 1, std::move(terms));
    FieldElement val = eval_rec(sub, point.subspan(0, n - 1));
    if (first) {
      acc = val;
      first = false;
    } else {
      acc = acc * pow(xn, last_e - e) + val;
    }
    last_e = e;
  }
  if (last_e > 0) acc = acc * pow(xn, last_e);
  return acc;
}

void require_point(const Polynomial& f, std::span<const FieldElement> point) {
  if (point.size() != f.arity()) throw PreconditionError("evaluation point arity mismatch");
  for (const auto& x : point)
    if (!fields_compatible(x.field(), f.field()))
      throw PreconditionError("evaluation point field mismatch");
}

}  // namespace

FieldElement evaluate(const Polynomial& f, std::span<const FieldElement> point) {
  require_point(f, point);
  return eval_rec(f, point);
}

FieldElement evaluate_termwise(const Polynomial& f, std::span<const FieldElement> point) {
  require_point(f, point);
  FieldElement acc = f.field()->zero();
  for (const auto& [m, c] : f.terms()) {
    FieldElement prod = c;
    for (unsigned i = 1; i <= f.arity(); ++i) {
      const unsigned e = m.exponent(i);
      if (e == 0) continue;
      prod = prod * pow(point[i - 1], e);
    }
    acc = acc + prod;
  }
  return acc;
}

FunctionTable table_of(const Polynomial& f) {
  const FieldPtr& field = f.field();
  if (!field->is_finite()) throw PreconditionError("value tables require a finite field");
  const unsigned q = field->order(), n = f.arity();
  FunctionTable t(q, q, n);

  unsigned max_e = 1;
  for (const auto& [m, c] : f.terms())
    for (unsigned e : m.exponents()) max_e = std::max(max_e, e);
  // pow_table[a * (max_e + 1) + e] = a^e
  std::vector<std::uint8_t> pow_table(static_cast<std::size_t>(q) * (max_e + 1));
  for (unsigned a = 0; a < q; ++a) {
    pow_table[a * (max_e + 1)] = 1;
    for (unsigned e = 1; e <= max_e; ++e)
      pow_table[a * (max_e + 1) + e] =
          static_cast<std::uint8_t>(field->mul_index(pow_table[a * (max_e + 1) + e - 1], a));
  }

  std::vector<unsigned> tuple(n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    t.unpack(idx, tuple);
    unsigned acc = 0;
    for (const auto& [m, c] : f.terms()) {
      unsigned prod = c.index();
      for (unsigned i = 0; i < n && prod != 0; ++i) {
        const unsigned e = m.exponents()[i];
        if (e == 0) continue;
        prod = field->mul_index(prod, pow_table[tuple[i] * (max_e + 1) + e]);
      }
      acc = field->add_index(acc, prod);
    }
    t.set_value(idx, acc);
  }
  return t;
}

Polynomial interpolate(const FunctionTable& t, const FieldPtr& field) {
  if (!field->is_finite()) throw PreconditionError("interpolation requires a finite field");
  const unsigned q = field->order();
  if (t.domain_size() != q || t.codomain_size() != q)
    throw PreconditionError("table domain/codomain must match the field order");
  const unsigned n = t.arity();

  // unary indicators: ind_c(x) = 1 - (x - c)^(q-1), one per field element
  std::vector<Polynomial> indicator;
  indicator.reserve(q);
  for (unsigned c = 0; c < q; ++c) {
    Polynomial lin = sub(Polynomial::variable(field, 1, 1),
                         Polynomial::constant(field, 1, field->from_index(c)));
    Polynomial power = Polynomial::constant(field, 1, field->one());
    for (unsigned e = 0; e + 1 < q; ++e) power = mul(power, lin);
    indicator.push_back(sub(Polynomial::constant(field, 1, field->one()), power));
  }

  std::vector<std::pair<Monomial, FieldElement>> all_terms;
  std::vector<unsigned> tuple(n);
  std::vector<unsigned> embed(1);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    const unsigned v = t.value(idx);
    if (v == 0) continue;
    t.unpack(idx, tuple);
    Polynomial point_poly = Polynomial::constant(field, n, field->from_index(v));
    for (unsigned i = 0; i < n; ++i) {
      embed[0] = i + 1;
      point_poly = mul(point_poly, substitute(indicator[tuple[i]], embed, n));
    }
    for (const auto& term : point_poly.terms()) all_terms.push_back(term);
  }
  return canonicalize(Polynomial::from_terms(field, n, std::move(all_terms)));
}

namespace {

Polynomial difference_product_impl(unsigned n, const FieldPtr& field, bool canonical) {
  if (n < 2) throw PreconditionError("difference product requires arity >= 2");
  Polynomial acc = Polynomial::constant(field, n, field->one());
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      acc = mul_raw(acc, sub_raw(Polynomial::variable(field, n, i),
                                 Polynomial::variable(field, n, j)));
  return (canonical && field->is_finite()) ? canonicalize(acc) : acc;
}

}  // namespace

Polynomial difference_product(unsigned n, const FieldPtr& field) {
  return difference_product_impl(n, field, true);
}

Polynomial difference_product_raw(unsigned n, const FieldPtr& field) {
  return difference_product_impl(n, field, false);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& d) {
  require_ring_compatible(f, d);
  if (!f.field()->is_rational())
    throw PreconditionError("exact division is defined over the rationals only");
  if (d.is_zero()) throw PreconditionError("division by the zero polynomial");

  const unsigned n = f.arity();
  const auto& dterms = d.terms();
  const auto& lead_d = *dterms.begin();
  Polynomial::TermMap remainder(f.terms().begin(), f.terms().end());
  std::vector<std::pair<Monomial, FieldElement>> quotient;
  while (!remainder.empty()) {
    const auto& [mr, cr] = *remainder.begin();
    std::vector<unsigned> e(n);
    for (unsigned i = 0; i < n; ++i) {
      const unsigned er = mr.exponents()[i];
      const unsigned ed = lead_d.first.exponents()[i];
      if (er < ed) return std::nullopt;
      e[i] = er - ed;
    }
    const Monomial qm{std::move(e)};
    const FieldElement qc = cr * inv(lead_d.second);
    quotient.emplace_back(qm, qc);
    // subtract qc * qm * d in place; the leading term cancels by construction
    for (const auto& [md, cd] : dterms) {
      std::vector<unsigned> te(n);
      for (unsigned i = 0; i < n; ++i) te[i] = qm.exponents()[i] + md.exponents()[i];
      Monomial target{std::move(te)};
      const FieldElement delta = qc * cd;
      auto it = remainder.find(target);
      if (it == remainder.end()) {
        remainder.emplace(std::move(target), -delta);
      } else {
        it->second = it->second - delta;
        if (it->second.is_zero()) remainder.erase(it);
      }
    }
  }
  return Polynomial::from_terms(f.field(), n, std::move(quotient));
}

std::set<unsigned> occurring_variables(const Polynomial& f) {
  std::set<unsigned> out;
  for (const auto& [m, c] : f.terms())
    for (unsigned i = 1; i <= f.arity(); ++i)
      if (m.exponent(i) > 0) out.insert(i);
  return out;
}

}  // namespace aritygap
