#include "cgb/parse.hpp"

#include <cctype>
#include <sstream>

namespace cgb {

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {Token::End, ""};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Token::Number, std::string(s_.substr(start, pos_ - start))};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Token::Name, std::string(s_.substr(start, pos_ - start))};
    }
    ++pos_;
    switch (c) {
      case '+': return {Token::Plus, "+"};
      case '-': return {Token::Minus, "-"};
      case '*': return {Token::Star, "*"};
      case '/': return {Token::Slash, "/"};
      case '^': return {Token::Caret, "^"};
      default: fail("parse_error", std::string("unexpected character '") + c + "'");
    }
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text) : ring_(ring), lex_(text) { advance(); }

  Poly parse() {
    std::vector<Term> terms;
    int sign = 1;
    if (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
      sign = cur_.kind == Token::Minus ? -1 : 1;
      advance();
    }
    while (true) {
      Term t = parse_term();
      t.coef *= sign;
      terms.push_back(std::move(t));
      if (cur_.kind == Token::End) break;
      if (cur_.kind == Token::Plus)
        sign = 1;
      else if (cur_.kind == Token::Minus)
        sign = -1;
      else
        fail("parse_error", "expected '+' or '-' between terms, got '" + cur_.text + "'");
      advance();
    }
    return Poly::from_terms(ring_, std::move(terms));
  }

 private:
  void advance() { cur_ = lex_.next(); }

  mpz_class parse_integer() {
    if (cur_.kind != Token::Number) fail("parse_error", "expected a number, got '" + cur_.text + "'");
    mpz_class v(cur_.text, 10);
    advance();
    return v;
  }

  Term parse_term() {
    Term t;
    t.exp.assign(ring_->nvars(), 0);
    t.coef = 1;
    bool have_body = false;
    if (cur_.kind == Token::Number) {
      mpz_class num = parse_integer();
      if (cur_.kind == Token::Slash) {
        advance();
        mpz_class den = parse_integer();
        if (den == 0) fail("parse_error", "zero denominator");
        t.coef = mpq_class(num, den);
        t.coef.canonicalize();
      } else {
        t.coef = mpq_class(num);
      }
      have_body = true;
      if (cur_.kind == Token::Star) {
        advance();
        parse_powers(t);
      }
      return t;
    }
    if (cur_.kind == Token::Name) {
      parse_powers(t);
      return t;
    }
    (void)have_body;
    fail("parse_error", "expected a term, got '" + cur_.text + "'");
  }

  void parse_powers(Term& t) {
    while (true) {
      if (cur_.kind != Token::Name)
        fail("parse_error", "expected a variable name, got '" + cur_.text + "'");
      int idx = ring_->index_of(cur_.text);
      if (idx < 0) fail("parse_error", "unknown variable '" + cur_.text + "'");
      advance();
      long k = 1;
      if (cur_.kind == Token::Caret) {
        advance();
        mpz_class e = parse_integer();
        if (e < 0 || e > 1000000) fail("parse_error", "exponent out of range");
        k = e.get_si();
      }
      t.exp[idx] += static_cast<int>(k);
      if (cur_.kind != Token::Star) break;
      advance();
    }
  }

  RingPtr ring_;
  Lexer lex_;
  Token cur_;
};

std::string coef_to_string(const mpq_class& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

void append_powers(std::ostream& os, const RingSpec& ring, const Exponents& e, bool lead_star) {
  bool first = !lead_star;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.names[i];
    if (e[i] != 1) os << '^' << e[i];
  }
}

}  // namespace

Poly parse_poly(const RingPtr& ring, std::string_view text) {
  if (!ring) fail("invalid_argument", "parse without a ring");
  return Parser(ring, text).parse();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const RingSpec& ring = *p.ring();
  bool first = true;
  for (const Term& t : p.terms()) {
    mpq_class c = t.coef;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool constant = total_degree(t.exp) == 0;
    if (constant) {
      os << coef_to_string(c);
    } else if (c != 1) {
      os << coef_to_string(c);
      append_powers(os, ring, t.exp, true);
    } else {
      append_powers(os, ring, t.exp, false);
    }
  }
  return os.str();
}

std::string monomial_to_string(const RingSpec& ring, const Exponents& e) {
  if (total_degree(e) == 0) return "1";
  std::ostringstream os;
  append_powers(os, ring, e, false);
  return os.str();
}

}  // namespace cgb
