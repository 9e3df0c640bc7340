#include <cctype>
#include <string>

#include "upinv/errors.hpp"
#include "upinv/io.hpp"

namespace upinv {

namespace {

constexpr std::uint64_t kMaxExponent = 100'000;

// Recursive descent over
//   expr   := term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := ('+' | '-') factor | power
//   power  := atom [ '^' integer ]
//   atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, PrimeModulus p) : text_(text), p_(p) {}

  Polynomial parse() {
    Polynomial f = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                           std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Next significant character; the Unicode minus sign is folded to '-'.
  char peek() {
    skip_space();
    if (pos_ >= text_.size()) return '\0';
    if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) return '-';
    return text_[pos_];
  }

  void advance() { pos_ += text_.compare(pos_, 3, "\xE2\x88\x92") == 0 ? 3 : 1; }

  Polynomial expr() {
    Polynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      advance();
      if (c == '+') {
        acc += term();
      } else {
        acc -= term();
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    const char c = peek();
    if (c == '-') {
      advance();
      return -factor();
    }
    if (c == '+') {
      advance();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      advance();
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("exponent must be a non-negative integer literal");
      }
      std::uint64_t e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
        if (e > kMaxExponent) fail("exponent too large");
      }
      if (peek() == '^') fail("chained exponents are ambiguous; use parentheses");
      return base.pow(e);
    }
    return base;
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      advance();
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (c == 'x' || c == 'y' || c == 'z') {
      advance();
      const Var v = c == 'x' ? Var::X : (c == 'y' ? Var::Y : Var::Z);
      return Polynomial::variable(p_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint32_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = p_.add(p_.mul(value, 10 % p_.value()), p_.reduce(text_[pos_++] - '0'));
      }
      return Polynomial::constant(p_, value);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  PrimeModulus p_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view expr, PrimeModulus p) { return Parser(expr, p).parse(); }

std::vector<Polynomial> parse_poly_list(std::string_view list, PrimeModulus p) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = list.find(',', start);
    out.push_back(parse_poly(list.substr(start, comma == std::string_view::npos ? comma : comma - start), p));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace upinv
