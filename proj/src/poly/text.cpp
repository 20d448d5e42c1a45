#include "pdlab/poly/text.hpp"

#include <cctype>

#include "pdlab/error.hpp"

namespace pdlab {

std::string to_string(const Monomial& m, const VariableTable& vars) {
  std::string s;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += vars.name(v);
    if (m[v] != 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coef.lift();
    const bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += to_string(t.mono, p.ring()->vars());
    }
  }
  return s;
}

namespace {

class Parser {
 public:
  Parser(std::string text, const RingPtr& ring) : s_(std::move(text)), ring_(ring) {}

  Polynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = term();
      if (sign < 0) t.coef = -t.coef;
      terms.push_back(std::move(t));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Term term() {
    Coefficient c = Coefficient::one(ring_->field());
    Monomial m(ring_->num_vars());
    for (;;) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        mpq_class q(integer());
        if (peek() == '/') {
          ++pos_;
          mpz_class den = integer();
          if (den == 0) fail("zero denominator");
          q /= den;
        }
        c = c * Coefficient(ring_->field(), q);
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t idx = variable();
        Exponent e = 1;
        if (peek() == '^') {
          ++pos_;
          mpz_class v = integer();
          if (!v.fits_sint_p()) throw OverflowError("exponent does not fit a machine word");
          e = static_cast<Exponent>(v.get_si());
        }
        m = mono_mul(m, Monomial::variable(ring_->num_vars(), idx, e));
      } else {
        fail("expected coefficient or variable");
      }
      if (peek() != '*') break;
      ++pos_;
    }
    return Term{c, m};
  }

  std::size_t variable() {
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (peek() == '[') {
      int depth = 0;
      do {
        if (peek() == '[') ++depth;
        if (peek() == ']') --depth;
        if (peek() == '\0') fail("unbalanced brackets in variable name");
        ++pos_;
      } while (depth > 0);
    }
    std::string name = s_.substr(start, pos_ - start);
    auto idx = ring_->vars().index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'");
    return *idx;
  }

  std::string s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  return Parser(std::move(compact), ring).parse();
}

}  // namespace pdlab
