#include <cctype>
#include <limits>

#include "cyclicpic/errors.hpp"
#include "cyclicpic/exact_poly.hpp"

namespace cyclicpic {

namespace {

// expr   := term (('+' | '-') term)*
// term   := unary ('*' unary)*
// unary  := ('+' | '-') unary | power
// power  := atom ('^' digits)?
// atom   := digits | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExactPoly parse() {
    ExactPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExactPoly expr() {
    ExactPoly acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  ExactPoly term() {
    ExactPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  ExactPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ExactPoly power() {
    ExactPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) throw ParseError("expected a non-negative integer exponent", start);
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  ExactPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExactPoly inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return ExactPoly(Rational(mpz_class(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ExactPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace cyclicpic
