#include "plueckerlab/arith/parse.hpp"

#include <cctype>

namespace plab {

namespace {

// Recursive descent over
//   poly   := [sign] term { sign term }
//   term   := factor { '*' factor }
//   factor := atom [ '^' digits ]
//   atom   := digits [ '/' digits ] | ident | '(' poly ')'
class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : s_(text), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = poly();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char ch) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly poly() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    acc = negate ? -term() : term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      std::string d = digits();
      if (d.size() > 3) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly p = poly();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Integer num(digits());
      Integer den(1);
      if (eat('/')) {
        std::size_t at = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto idx = vars_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return MultiPoly::variable(vars_, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  std::string_view s_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarSet& vars) { return Parser(text, vars).run(); }

}  // namespace plab
