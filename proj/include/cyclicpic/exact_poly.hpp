#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
//
// Variables are identified by name and kept in ascending name order; only
// variables that actually occur are retained, so equal polynomials have
// identical representations. Terms are ordered graded-lexicographically.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cyclicpic {

using Rational = mpq_class;
using Exponents = std::vector<unsigned>;

// Total degree first, then lexicographic with the first variable most significant.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class ExactPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexLess>;

  ExactPoly() = default;
  ExactPoly(long c);  // NOLINT(google-explicit-constructor): integer literals read naturally in formulas
  ExactPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static ExactPoly variable(const std::string& name);
  static ExactPoly monomial(const Rational& coeff, const std::vector<std::pair<std::string, unsigned>>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Constant term value; zero for the zero polynomial.
  Rational constant_value() const;
  unsigned total_degree() const;
  // Exponent of `name` in each term, maximised; 0 if absent.
  unsigned degree_in(const std::string& name) const;

  ExactPoly operator-() const;
  ExactPoly& operator+=(const ExactPoly& o);
  ExactPoly& operator-=(const ExactPoly& o);
  ExactPoly& operator*=(const ExactPoly& o);
  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactPoly& b) { return a *= b; }

  ExactPoly pow(unsigned e) const;

  // Multivariate division by a single divisor in graded-lex order. The
  // remainder is zero iff `divisor` divides *this.
  std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& divisor) const;
  // Throws std::domain_error when the division is not exact.
  ExactPoly exact_div(const ExactPoly& divisor) const;
  bool divisible_by(const ExactPoly& divisor) const;

  // Canonical rendering: terms in descending graded-lex order, e.g. "x1^2 - 2*x1*x2 + x2^2".
  std::string to_string() const;

  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

 private:
  ExactPoly(std::vector<std::string> vars, TermMap terms);

  // Re-express terms over `vars`, a superset of vars_.
  TermMap lifted(const std::vector<std::string>& vars) const;
  void prune();

  std::vector<std::string> vars_;
  TermMap terms_;
};

// Integer-coefficient expressions in named variables with + - * ^ and
// parentheses, e.g. "(x1 - x2)^2 + 3*h". Throws ParseError.
ExactPoly parse_poly(std::string_view text);

}  // namespace cyclicpic
