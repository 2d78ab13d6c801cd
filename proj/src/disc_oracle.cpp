#include "cyclicpic/disc_oracle.hpp"

#include <sstream>
#include <stdexcept>

#include "cyclicpic/errors.hpp"

namespace cyclicpic {

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out << ", ";
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

ExactPoly bareiss_determinant(const PolyMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("bareiss_determinant: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return ExactPoly(1);
  PolyMatrix m = input;
  bool negate = false;
  ExactPoly previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return ExactPoly(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(previous);
      m(i, k) = ExactPoly(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------

QuotientAlgebra::QuotientAlgebra(std::vector<std::string> basis, Table table)
    : basis_(std::move(basis)), table_(std::move(table)) {
  const std::size_t n = basis_.size();
  if (n == 0) throw std::invalid_argument("QuotientAlgebra: empty basis");
  if (table_.size() != n) throw std::invalid_argument("QuotientAlgebra: table has wrong row count");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("QuotientAlgebra: table has wrong column count");
    for (const auto& entry : row)
      if (entry.size() != n) throw std::invalid_argument("QuotientAlgebra: product has wrong length");
  }
}

QuotientAlgebra QuotientAlgebra::monogenic(const std::vector<ExactPoly>& reduction, const std::string& generator) {
  const std::size_t n = reduction.size();
  if (n < 1) throw std::invalid_argument("QuotientAlgebra::monogenic: empty reduction rule");
  // powers[m] = x^m expressed in the basis, for m <= 2n - 2.
  std::vector<Element> powers;
  for (std::size_t m = 0; m < n; ++m) {
    Element e(n, ExactPoly(0));
    e[m] = ExactPoly(1);
    powers.push_back(std::move(e));
  }
  for (std::size_t m = n; m + 1 < 2 * n; ++m) {
    // x^m = x * x^{m-1}; shift up and fold the x^n coefficient back through the rule.
    const Element& prev = powers.back();
    Element next(n, ExactPoly(0));
    for (std::size_t k = 0; k + 1 < n; ++k) next[k + 1] = prev[k];
    const ExactPoly& top = prev[n - 1];
    if (!top.is_zero())
      for (std::size_t k = 0; k < n; ++k) next[k] += top * reduction[k];
    powers.push_back(std::move(next));
  }
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0)
      basis.push_back("1");
    else if (i == 1)
      basis.push_back(generator);
    else
      basis.push_back(generator + "^" + std::to_string(i));
  }
  Table table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = powers[i + j];
  return QuotientAlgebra(std::move(basis), std::move(table));
}

QuotientAlgebra::Element QuotientAlgebra::basis_element(std::size_t i) const {
  Element e(rank(), ExactPoly(0));
  e.at(i) = ExactPoly(1);
  return e;
}

QuotientAlgebra::Element QuotientAlgebra::multiply(const Element& a, const Element& b) const {
  const std::size_t n = rank();
  if (a.size() != n || b.size() != n) throw std::invalid_argument("QuotientAlgebra::multiply: wrong length");
  Element out(n, ExactPoly(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const ExactPoly c = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!table_[i][j][k].is_zero()) out[k] += c * table_[i][j][k];
    }
  }
  return out;
}

bool QuotientAlgebra::is_commutative_associative() const {
  const std::size_t n = rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (table_[i][j] != table_[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const Element left = multiply(table_[i][j], basis_element(k));
        const Element right = multiply(basis_element(i), table_[j][k]);
        if (left != right) return false;
      }
    }
  return true;
}

QuotientAlgebra cyclic_cover_algebra(unsigned n, const ExactPoly& h) {
  if (n < 2) throw std::invalid_argument("cyclic_cover_algebra: n must be at least 2");
  std::vector<ExactPoly> reduction(n, ExactPoly(0));
  reduction[0] = h;
  return QuotientAlgebra::monogenic(reduction, "x");
}

QuotientAlgebra split_quadratic_algebra(const ExactPoly& x1, const ExactPoly& x2) {
  return QuotientAlgebra::monogenic({-(x1 * x2), x1 + x2}, "alpha");
}

// ---------------------------------------------------------------------------

std::vector<ExactPoly> basis_traces(const QuotientAlgebra& a) {
  const std::size_t n = a.rank();
  std::vector<ExactPoly> traces(n, ExactPoly(0));
  // Column j of multiplication by e_k is e_k * e_j; its diagonal entry is table[k][j][j].
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) traces[k] += a.table()[k][j][j];
  return traces;
}

TraceForm trace_form(const QuotientAlgebra& a) {
  const std::size_t n = a.rank();
  const auto traces = basis_traces(a);
  TraceForm form{PolyMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ExactPoly t(0);
      for (std::size_t k = 0; k < n; ++k)
        if (!a.table()[i][j][k].is_zero()) t += a.table()[i][j][k] * traces[k];
      form.matrix(i, j) = t;
    }
  return form;
}

ExactPoly discriminant(const QuotientAlgebra& a) { return bareiss_determinant(trace_form(a).matrix); }

bool discriminant_power_formula_check(unsigned n) {
  if (n < 2 || n > 8) throw std::invalid_argument("discriminant_power_formula_check: n must lie in [2, 8]");
  const ExactPoly h = ExactPoly::variable("h");
  const ExactPoly disc = discriminant(cyclic_cover_algebra(n, h));
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  const ExactPoly expected = ExactPoly(Rational(nn)) * h.pow(n - 1);
  return disc == expected || disc == -expected;
}

unsigned ramification_length(const ExactPoly& disc, const ExactPoly& uniformizer) {
  if (uniformizer.is_constant()) throw std::invalid_argument("ramification_length: uniformizer must be non-constant");
  if (disc.is_zero()) throw NotPurePower("ramification_length: the zero discriminant has no finite valuation");
  unsigned v = 0;
  ExactPoly rest = disc;
  while (true) {
    auto [q, r] = rest.divmod(uniformizer);
    if (!r.is_zero()) return v;
    rest = std::move(q);
    ++v;
  }
}

}  // namespace cyclicpic
