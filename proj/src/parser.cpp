#include "aritygap/parser.hpp"

#include <cctype>
#include <set>
#include <string>
#include <vector>

namespace aritygap {

namespace {

enum class Tok { number, variable, delta, plus, minus, star, caret, slash, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string text;     // digits for number
  unsigned index = 0;   // variable / delta index
  std::size_t pos = 0;  // byte offset in the input
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      out.push_back({Tok::number, std::move(digits), 0, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) word += s[i++];
      std::string digits;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
      if ((word != "x" && word != "DELTA") || digits.empty())
        throw ParseError("unknown name '" + word + digits + "'", start);
      unsigned long idx = std::stoul(digits);
      if (idx < 1 || idx > 64)
        throw ParseError("variable index out of range in '" + word + digits + "'", start);
      out.push_back({word == "x" ? Tok::variable : Tok::delta, "", static_cast<unsigned>(idx),
                     start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '^': k = Tok::caret; break;
      case '/': k = Tok::slash; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, "", 0, start});
    ++i;
  }
  out.push_back({Tok::end, "", 0, s.size()});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> tokens, FieldPtr field, unsigned arity)
      : toks_(std::move(tokens)), field_(std::move(field)), arity_(arity) {}

  Polynomial parse() {
    Polynomial f = expr();
    if (peek().kind != Tok::end) throw ParseError("trailing input after expression", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    bool negate = accept(Tok::minus);
    Polynomial acc = term();
    if (negate) acc = neg(acc);
    while (true) {
      if (accept(Tok::plus)) {
        acc = add(acc, term());
      } else if (accept(Tok::minus)) {
        acc = sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept(Tok::star)) acc = mul(acc, factor());
    return acc;
  }

  Polynomial factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        std::string literal = t.text;
        if (field_->is_rational() && peek().kind == Tok::slash) {
          take();
          if (peek().kind != Tok::number)
            throw ParseError("expected a denominator after '/'", peek().pos);
          literal += "/" + take().text;
        }
        FieldElement c;
        try {
          c = field_->parse(literal);
        } catch (const PreconditionError& e) {
          throw ParseError(e.what(), t.pos);
        }
        return Polynomial::constant(field_, arity_, c);
      }
      case Tok::variable: {
        take();
        unsigned e = 1;
        if (accept(Tok::caret)) {
          if (peek().kind != Tok::number)
            throw ParseError("expected an exponent after '^'", peek().pos);
          e = static_cast<unsigned>(std::stoul(take().text));
        }
        std::vector<unsigned> exps(arity_, 0);
        exps[t.index - 1] = e;
        return Polynomial::monomial(field_, arity_, Monomial(std::move(exps)), field_->one());
      }
      case Tok::delta: {
        take();
        if (t.index < 2) throw ParseError("DELTA needs at least 2 variables", t.pos);
        Polynomial dp = difference_product(t.index, field_);
        std::vector<unsigned> ident(t.index);
        for (unsigned v = 1; v <= t.index; ++v) ident[v - 1] = v;
        return simple_minor(dp, ident, arity_);
      }
      case Tok::lparen: {
        take();
        Polynomial inner = expr();
        if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().pos);
        return inner;
      }
      default:
        throw ParseError("expected a coefficient, variable, DELTA<n> or '('", t.pos);
    }
  }

  std::vector<Token> toks_;
  FieldPtr field_;
  unsigned arity_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const FieldPtr& field) {
  std::vector<Token> tokens = lex(text);

  // the mentioned variables must cover 1..n without gaps
  std::set<unsigned> mentioned;
  unsigned arity = 0;
  for (const Token& t : tokens) {
    if (t.kind == Tok::variable) {
      mentioned.insert(t.index);
      arity = std::max(arity, t.index);
    } else if (t.kind == Tok::delta) {
      for (unsigned v = 1; v <= t.index; ++v) mentioned.insert(v);
      arity = std::max(arity, t.index);
    }
  }
  for (unsigned v = 1; v <= arity; ++v) {
    if (!mentioned.count(v))
      throw ParseError("variable x" + std::to_string(v) + " is skipped; variables must be x1..x" +
                           std::to_string(arity) + " without gaps",
                       0);
  }

  Polynomial f = Parser(std::move(tokens), field, arity).parse();
  return canonicalize(f);
}

}  // namespace aritygap
