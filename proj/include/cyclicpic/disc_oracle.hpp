#pragma once

// Trace forms and discriminants of finite free algebras over an exact
// polynomial coefficient ring, in particular the uniform cyclic cover
// algebras R[x]/(x^n - h).

#include <cstddef>
#include <string>
#include <vector>

#include "cyclicpic/exact_poly.hpp"

namespace cyclicpic {

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  ExactPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;
  std::string to_string() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactPoly> data_;
};

// Fraction-free (Bareiss) determinant; every intermediate division is exact
// in the polynomial ring.
ExactPoly bareiss_determinant(const PolyMatrix& m);

// A commutative algebra, free of rank n over the coefficient ring, with basis
// e_0 = 1, e_1, ..., e_{n-1} and structure constants table[i][j][k], the
// coefficient of e_k in e_i * e_j.
class QuotientAlgebra {
 public:
  using Element = std::vector<ExactPoly>;
  using Table = std::vector<std::vector<Element>>;

  QuotientAlgebra(std::vector<std::string> basis, Table table);

  // R[x]/(x^n - (c_0 + c_1 x + ... + c_{n-1} x^{n-1})) with basis 1, x, ..., x^{n-1}.
  static QuotientAlgebra monogenic(const std::vector<ExactPoly>& reduction, const std::string& generator);

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Table& table() const { return table_; }

  Element multiply(const Element& a, const Element& b) const;
  Element basis_element(std::size_t i) const;
  // Exhaustive check of commutativity and associativity on basis triples.
  bool is_commutative_associative() const;

 private:
  std::vector<std::string> basis_;
  Table table_;
};

// Uniform cyclic cover algebra R[x]/(x^n - h), n >= 2.
QuotientAlgebra cyclic_cover_algebra(unsigned n, const ExactPoly& h);

// Rank-2 algebra with basis 1, alpha and alpha^2 = (x1 + x2) alpha - x1 x2.
QuotientAlgebra split_quadratic_algebra(const ExactPoly& x1, const ExactPoly& x2);

struct TraceForm {
  PolyMatrix matrix;  // (i, j) -> tr(e_i e_j)
};

// Traces tr(e_k) of multiplication by each basis element.
std::vector<ExactPoly> basis_traces(const QuotientAlgebra& a);

TraceForm trace_form(const QuotientAlgebra& a);

// Determinant of the trace form in the algebra's basis.
ExactPoly discriminant(const QuotientAlgebra& a);

// discriminant(R[x]/(x^n - h)) == +-n^n h^(n-1) for a formal variable h; n in [2, 8].
bool discriminant_power_formula_check(unsigned n);

// v such that disc = unit * uniformizer^v in the localisation at the
// uniformizer: divides out the uniformizer while the division is exact.
// Throws NotPurePower for disc = 0, std::invalid_argument for a constant uniformizer.
unsigned ramification_length(const ExactPoly& disc, const ExactPoly& uniformizer);

}  // namespace cyclicpic
