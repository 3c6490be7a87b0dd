// Recursive-descent parser for the polynomial grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := ('+' | '-') factor | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
// Implicit multiplication is rejected.

#include <cctype>

#include "hitforge/mpoly.hpp"

namespace hitforge {
namespace {

constexpr unsigned long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : src_(normalize(text)) {}

  MPolyQ run() {
    skip_ws();
    if (at_end()) throw SyntaxError("empty polynomial", pos_);
    MPolyQ p = expr();
    skip_ws();
    if (!at_end()) {
      if (starts_atom()) throw SyntaxError("implicit multiplication is not allowed", pos_);
      throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    }
    return p;
  }

 private:
  // Maps the Unicode minus sign to ASCII so pasted formulas parse.
  static std::string normalize(std::string_view text) {
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
          static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
        out += '-';
        i += 2;
      } else {
        out += text[i];
      }
    }
    return out;
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool starts_atom() const {
    const char c = peek();
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  MPolyQ expr() {
    MPolyQ acc = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      MPolyQ rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
  }

  MPolyQ term() {
    MPolyQ acc = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_atom()) {
        throw SyntaxError("implicit multiplication is not allowed", pos_);
      } else {
        return acc;
      }
    }
  }

  MPolyQ factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  MPolyQ power() {
    MPolyQ base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("exponent must be a nonnegative integer", at);
    const Int e = integer();
    if (e > kMaxExponent) throw SyntaxError("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Int integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw SyntaxError("expected integer", start);
    return Int(std::string(src_.substr(start, pos_ - start)));
  }

  MPolyQ atom() {
    skip_ws();
    const std::size_t at = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPolyQ inner = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Int num = integer();
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected denominator", pos_);
        const Int den = integer();
        if (den == 0) throw SyntaxError("zero denominator", at);
        Rat q(num, den);
        q.canonicalize();
        return MPolyQ::constant(q);
      }
      return MPolyQ::constant(Rat(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      const auto name = std::string_view(src_).substr(start, pos_ - start);
      const auto v = var_from_name(name);
      if (!v) throw SyntaxError("unknown variable '" + std::string(name) + "'", start);
      return MPolyQ::variable(*v);
    }
    if (at_end()) throw SyntaxError("unexpected end of input", at);
    throw SyntaxError(std::string("unexpected '") + c + "'", at);
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

MPolyQ parse_poly(std::string_view text) { return Parser(text).run(); }

}  // namespace hitforge
