#include <doctest.h>

#include <array>
#include <sstream>

#include "aritygap/polynomial.hpp"
#include "aritygap/random.hpp"

using namespace aritygap;

namespace {

Polynomial var(const FieldPtr& f, unsigned n, unsigned i) {
  return Polynomial::variable(f, n, i);
}

Polynomial cst(const FieldPtr& f, unsigned n, long long v) {
  return Polynomial::constant(f, n, f->from_integer(v));
}

Polynomial power(const FieldPtr& f, unsigned n, unsigned i, unsigned e) {
  std::vector<unsigned> exps(n, 0);
  exps[i - 1] = e;
  return Polynomial::monomial(f, n, Monomial(std::move(exps)), f->one());
}

// raw polynomial with arbitrary exponents, not canonicalized
Polynomial random_raw(Rng& rng, const FieldPtr& f, unsigned n, unsigned max_terms,
                      unsigned max_exp) {
  std::vector<std::pair<Monomial, FieldElement>> terms;
  const auto count = rng.below(max_terms + 1);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<unsigned> exps(n);
    for (unsigned i = 0; i < n; ++i) exps[i] = static_cast<unsigned>(rng.below(max_exp + 1));
    terms.emplace_back(Monomial(std::move(exps)), random_element(rng, f));
  }
  return Polynomial::from_terms(f, n, std::move(terms));
}

std::vector<FieldElement> point_from_indices(const FieldPtr& f, std::span<const unsigned> idx) {
  std::vector<FieldElement> p;
  for (unsigned i : idx) p.push_back(f->from_index(i));
  return p;
}

}  // namespace

TEST_CASE("canonicalization folds exponents by x^q = x") {
  auto gf2 = Field::finite(2, 1);
  CHECK(canonicalize(power(gf2, 1, 1, 3)) == power(gf2, 1, 1, 1));

  auto gf4 = Field::finite(2, 2);
  CHECK(canonicalize(power(gf4, 1, 1, 5)) == power(gf4, 1, 1, 2));

  auto gf3 = Field::finite(3, 1);
  Polynomial mix = add_raw(power(gf3, 1, 1, 2),
                           scalar_mul(gf3->from_index(2), power(gf3, 1, 1, 4)));
  CHECK(canonicalize(mix).is_zero());

  // identity over Q
  auto q = Field::rationals();
  Polynomial f = power(q, 1, 1, 7);
  CHECK(canonicalize(f) == f);
}

TEST_CASE("canonicalization preserves the induced function") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto f = Field::finite(p, k);
    Rng rng(900 + p * 10 + k);
    for (int iter = 0; iter < 30; ++iter) {
      const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
      Polynomial raw = random_raw(rng, f, n, 6, 2 * f->order());
      Polynomial canon = canonicalize(raw);
      CHECK(canon.is_canonical());
      CHECK(canonicalize(canon) == canon);  // idempotent
      CHECK(table_of(raw) == table_of(canon));
    }
  }
}

TEST_CASE("ring arithmetic") {
  auto q = Field::rationals();
  Polynomial x1 = var(q, 2, 1), x2 = var(q, 2, 2);
  CHECK(mul(sub(x1, x2), add(x1, x2)) == sub(power(q, 2, 1, 2), power(q, 2, 2, 2)));

  auto gf2 = Field::finite(2, 1);
  Polynomial s = add(var(gf2, 2, 1), var(gf2, 2, 2));
  CHECK(mul(s, s) == s);  // squaring is the identity after folding

  Rng rng(41);
  Polynomial f = random_polynomial(rng, q, 3, 5, 3);
  CHECK(add(f, scalar_mul(q->from_integer(-1), f)).is_zero());
  CHECK_THROWS_AS(add(f, var(q, 2, 1)), PreconditionError);
  CHECK_THROWS_AS(add(f, var(Field::finite(3, 1), 3, 1)), PreconditionError);
}

TEST_CASE("ring laws on random triples") {
  Rng rng(43);
  for (const FieldPtr& f : {Field::rationals(), Field::finite(3, 1), Field::finite(2, 2)}) {
    for (int iter = 0; iter < 15; ++iter) {
      Polynomial a = random_polynomial(rng, f, 2, 4, 2);
      Polynomial b = random_polynomial(rng, f, 2, 4, 2);
      Polynomial c = random_polynomial(rng, f, 2, 4, 2);
      CHECK(mul(a, b) == mul(b, a));
      CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
      CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
  }
}

TEST_CASE("formal partial derivatives") {
  auto q = Field::rationals();
  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));
  CHECK(partial_derivative(f, 1) == var(q, 3, 3));

  auto gf2 = Field::finite(2, 1);
  Polynomial raw = Polynomial::from_terms(
      gf2, 2, {{Monomial({2, 1}), gf2->one()}});  // x1^2 x2, kept unfolded
  CHECK(partial_derivative(raw, 1).is_zero());    // coefficient 2 = 0

  CHECK(partial_derivative(power(q, 1, 1, 3), 1) ==
        scalar_mul(q->from_integer(3), power(q, 1, 1, 2)));
}

TEST_CASE("simple and identification minors") {
  auto q = Field::rationals();
  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));

  const std::array<unsigned, 3> identify12{1, 1, 2};
  CHECK(simple_minor(f, identify12, 2).is_zero());

  const std::array<unsigned, 3> identity{1, 2, 3};
  CHECK(simple_minor(f, identity, 3) == f);

  Polynomial g = mul(var(q, 2, 1), var(q, 2, 2));
  const std::array<unsigned, 2> both_to_one{1, 1};
  CHECK(simple_minor(g, both_to_one, 1) == power(q, 1, 1, 2));

  CHECK(identification_minor(f, 1, 3) ==
        sub(power(q, 3, 3, 2), mul(var(q, 3, 2), var(q, 3, 3))));
  CHECK(identification_minor(f, 3, 2) ==
        sub(mul(var(q, 3, 1), var(q, 3, 2)), power(q, 3, 2, 2)));
  CHECK_THROWS_AS(identification_minor(f, 2, 2), PreconditionError);

  // over GF(3), ((x1^2 - 2))^2 folds to the constant 1
  auto gf3 = Field::finite(3, 1);
  Polynomial prod = cst(gf3, 3, 1);
  for (unsigned i = 1; i <= 3; ++i)
    prod = mul(prod, sub(power(gf3, 3, i, 2), cst(gf3, 3, 2)));
  CHECK(identification_minor(prod, 2, 1) == sub(power(gf3, 3, 3, 2), cst(gf3, 3, 2)));
}

TEST_CASE("chain-rule expansion of minor derivatives") {
  auto q = Field::rationals();
  Polynomial g = mul(var(q, 2, 1), var(q, 2, 2));
  const std::array<unsigned, 2> both_to_one{1, 1};
  CHECK(minor_derivative_expansion(g, both_to_one, 1, 1) ==
        scalar_mul(q->from_integer(2), var(q, 1, 1)));

  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));
  const std::array<unsigned, 3> identify13{3, 2, 3};
  Polynomial lhs = partial_derivative(simple_minor(f, identify13, 3), 3);
  CHECK(lhs == sub(scalar_mul(q->from_integer(2), var(q, 3, 3)), var(q, 3, 2)));
  CHECK(minor_derivative_expansion(f, identify13, 3, 3) == lhs);

  // injective maps have a single summand
  const std::array<unsigned, 3> inject{2, 3, 1};
  for (unsigned j = 1; j <= 3; ++j) {
    unsigned source = 0;
    for (unsigned i = 1; i <= 3; ++i)
      if (inject[i - 1] == j) source = i;
    CHECK(minor_derivative_expansion(f, inject, 3, j) ==
          substitute(partial_derivative(f, source), inject, 3));
  }
}

TEST_CASE("chain-rule identity holds formally over every field") {
  Rng rng(47);
  for (const FieldPtr& fld :
       {Field::rationals(), Field::finite(2, 1), Field::finite(3, 1), Field::finite(2, 2)}) {
    for (int iter = 0; iter < 25; ++iter) {
      const unsigned n = 2 + static_cast<unsigned>(rng.below(2));
      const unsigned m = 1 + static_cast<unsigned>(rng.below(3));
      Polynomial f = random_raw(rng, fld, n, 5, 3);
      std::vector<unsigned> sigma(n);
      for (unsigned i = 0; i < n; ++i) sigma[i] = 1 + static_cast<unsigned>(rng.below(m));
      for (unsigned j = 1; j <= m; ++j) {
        CHECK(partial_derivative(substitute(f, sigma, m), j) ==
              minor_derivative_expansion(f, sigma, m, j));
      }
    }
  }
}

TEST_CASE("evaluation") {
  auto q = Field::rationals();
  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));
  std::vector<FieldElement> p{q->from_integer(1), q->from_integer(1), q->from_integer(5)};
  CHECK(evaluate(f, p).is_zero());

  auto gf3 = Field::finite(3, 1);
  Polynomial dp = difference_product(3, gf3);
  auto pt = point_from_indices(gf3, std::array<unsigned, 3>{0, 1, 2});
  CHECK(evaluate(dp, pt) == gf3->from_index(1));

  Polynomial c = cst(q, 2, 42);
  std::vector<FieldElement> anywhere{q->from_integer(-3), q->from_rational(Rational(1, 7))};
  CHECK(evaluate(c, anywhere) == q->from_integer(42));
}

TEST_CASE("Horner evaluation agrees with the termwise oracle and the table") {
  Rng rng(53);
  for (const FieldPtr& fld : {Field::rationals(), Field::finite(5, 1), Field::finite(2, 2)}) {
    for (int iter = 0; iter < 20; ++iter) {
      const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
      Polynomial f = random_polynomial(rng, fld, n, 6, 3);
      std::vector<FieldElement> pt;
      for (unsigned i = 0; i < n; ++i) pt.push_back(random_element(rng, fld));
      CHECK(evaluate(f, pt) == evaluate_termwise(f, pt));
    }
  }
  // the bulk table matches pointwise evaluation
  auto gf4 = Field::finite(2, 2);
  Polynomial f = random_polynomial(rng, gf4, 3, 6, 3);
  FunctionTable t = table_of(f);
  std::vector<unsigned> tuple(3);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    t.unpack(idx, tuple);
    CHECK(t.value(idx) == evaluate(f, point_from_indices(gf4, tuple)).index());
  }
}

TEST_CASE("interpolation produces the canonical polynomial") {
  auto gf2 = Field::finite(2, 1);
  FunctionTable and_table(2, 2, 2);
  and_table.set_value(and_table.pack(std::array<unsigned, 2>{1, 1}), 1);
  CHECK(interpolate(and_table, gf2) == mul(var(gf2, 2, 1), var(gf2, 2, 2)));

  FunctionTable ones(2, 2, 2);
  for (std::size_t i = 0; i < ones.size(); ++i) ones.set_value(i, 1);
  CHECK(interpolate(ones, gf2) == cst(gf2, 2, 1));

  auto gf3 = Field::finite(3, 1);
  FunctionTable ident(3, 3, 1);
  for (unsigned a = 0; a < 3; ++a) ident.set_value(a, a);
  CHECK(interpolate(ident, gf3) == var(gf3, 1, 1));
}

TEST_CASE("interpolation round-trips exhaustively over GF(2), arity <= 3") {
  auto gf2 = Field::finite(2, 1);
  for (unsigned n = 1; n <= 3; ++n) {
    const std::size_t points = std::size_t(1) << n;
    const std::size_t tables = std::size_t(1) << points;
    for (std::size_t id = 0; id < tables; ++id) {
      FunctionTable t(2, 2, n);
      for (std::size_t i = 0; i < points; ++i) t.set_value(i, (id >> i) & 1);
      Polynomial f = interpolate(t, gf2);
      CHECK(f.is_canonical());
      CHECK(table_of(f) == t);
    }
  }
}

TEST_CASE("interpolation inverts the table map on random canonical polynomials") {
  Rng rng(59);
  for (const FieldPtr& fld : {Field::finite(2, 1), Field::finite(3, 1), Field::finite(2, 2)}) {
    for (int iter = 0; iter < 20; ++iter) {
      const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
      Polynomial f = random_polynomial(rng, fld, n, 8, fld->order() - 1);
      CHECK(interpolate(table_of(f), fld) == f);
    }
  }
}

TEST_CASE("difference product") {
  auto q = Field::rationals();
  CHECK(difference_product(2, q) == sub(var(q, 2, 1), var(q, 2, 2)));

  // expanded form of (x1-x2)(x1-x3)(x2-x3)
  Polynomial expected(q, 3);
  auto term = [&](long long c, unsigned e1, unsigned e2, unsigned e3) {
    return Polynomial::monomial(q, 3, Monomial({e1, e2, e3}), q->from_integer(c));
  };
  expected = add(expected, term(1, 2, 1, 0));
  expected = add(expected, term(-1, 2, 0, 1));
  expected = add(expected, term(-1, 1, 2, 0));
  expected = add(expected, term(1, 1, 0, 2));
  expected = add(expected, term(1, 0, 2, 1));
  expected = add(expected, term(-1, 0, 1, 2));
  CHECK(difference_product(3, q) == expected);
  CHECK(difference_product(3, q).to_text() ==
        "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2");

  // over GF(2) with n = 3 every tuple has a repeat: the canonical form is 0
  // while the raw expansion is a nonzero representative of the zero function
  auto gf2 = Field::finite(2, 1);
  CHECK(difference_product(3, gf2).is_zero());
  Polynomial raw = difference_product_raw(3, gf2);
  CHECK_FALSE(raw.is_zero());
  FunctionTable t = table_of(raw);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(t.value(i) == 0);

  CHECK_THROWS_AS(difference_product(1, q), PreconditionError);
}

TEST_CASE("difference product vanishes exactly on repeat tuples") {
  for (auto [p, k, n] : std::vector<std::array<unsigned, 3>>{
           {3, 1, 3}, {5, 1, 3}, {2, 2, 3}, {5, 1, 4}, {3, 1, 4}}) {
    auto fld = Field::finite(p, k);
    FunctionTable t = table_of(difference_product(n, fld));
    std::vector<unsigned> tuple(n);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      t.unpack(idx, tuple);
      CHECK((t.value(idx) == 0) == has_repeat(tuple));
    }
  }
}

TEST_CASE("exact division") {
  auto q = Field::rationals();
  Polynomial x1 = var(q, 2, 1), x2 = var(q, 2, 2);
  auto quot = exact_divide(sub(power(q, 2, 1, 2), power(q, 2, 2, 2)), sub(x1, x2));
  REQUIRE(quot.has_value());
  CHECK(*quot == add(x1, x2));

  // (x1-x2)(x2-x3) expanded
  Polynomial expected = add(sub(mul(var(q, 3, 1), var(q, 3, 2)), mul(var(q, 3, 1), var(q, 3, 3))),
                            sub(mul(var(q, 3, 2), var(q, 3, 3)), power(q, 3, 2, 2)));
  auto quot2 = exact_divide(difference_product(3, q), sub(var(q, 3, 1), var(q, 3, 3)));
  REQUIRE(quot2.has_value());
  CHECK(*quot2 == expected);

  CHECK_FALSE(exact_divide(mul(x1, x2), sub(x1, x2)).has_value());
  CHECK_THROWS_AS(exact_divide(x1, Polynomial(q, 2)), PreconditionError);
  auto gf3 = Field::finite(3, 1);
  CHECK_THROWS_AS(exact_divide(var(gf3, 2, 1), var(gf3, 2, 2)), PreconditionError);
}

TEST_CASE("exact division inverts multiplication") {
  Rng rng(61);
  auto q = Field::rationals();
  for (int iter = 0; iter < 40; ++iter) {
    const unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    Polynomial f = random_polynomial(rng, q, n, 4, 3);
    Polynomial d = random_nonzero_polynomial(rng, q, n, 4, 3);
    auto quot = exact_divide(mul(f, d), d);
    REQUIRE(quot.has_value());
    CHECK(*quot == f);
  }
}

TEST_CASE("occurring variables") {
  auto q = Field::rationals();
  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));
  CHECK(occurring_variables(f) == std::set<unsigned>{1, 2, 3});
  CHECK(occurring_variables(cst(q, 4, 5)).empty());

  auto gf2 = Field::finite(2, 1);
  Polynomial cancel = add_raw(power(gf2, 1, 1, 2), power(gf2, 1, 1, 1));  // x^2 + x
  CHECK(occurring_variables(canonicalize(cancel)).empty());
}

TEST_CASE("text form") {
  auto q = Field::rationals();
  Polynomial f = sub(mul(var(q, 3, 1), var(q, 3, 3)), mul(var(q, 3, 2), var(q, 3, 3)));
  CHECK(f.to_text() == "x1*x3 - x2*x3");
  CHECK(Polynomial(q, 2).to_text() == "0");
  CHECK(neg(f).to_text() == "-x1*x3 + x2*x3");
  CHECK(scalar_mul(q->from_rational(Rational(1, 2)), var(q, 1, 1)).to_text() == "1/2*x1");

  auto gf3 = Field::finite(3, 1);
  CHECK(sub(var(gf3, 2, 1), var(gf3, 2, 2)).to_text() == "x1 + 2*x2");
}

TEST_CASE("polynomial exchange format round-trips") {
  Rng rng(67);
  for (const FieldPtr& fld : {Field::rationals(), Field::finite(2, 2), Field::finite(7, 1)}) {
    for (int iter = 0; iter < 10; ++iter) {
      Polynomial f = random_polynomial(rng, fld, 3, 6, 3);
      std::stringstream buf;
      f.write(buf);
      CHECK(Polynomial::read(buf) == f);
    }
  }
  std::stringstream bad("field 4 1 2\n1 0 0\n");
  CHECK_THROWS_AS(Polynomial::read(bad), PreconditionError);
}
