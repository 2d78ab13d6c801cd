#include "cyclicpic/fgab.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyclicpic {

namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Truncated quotient; |a - q*b| < |b|.
Integer tquot(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fquot(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& v) {
  return mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

// ---------------------------------------------------------------------------
// SmithDecomposition / FgAbGroup / Presentation

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& v : diagonal())
    if (v != 0) ++r;
  return r;
}

Integer FgAbGroup::torsion_order() const {
  Integer order = 1;
  for (const auto& f : invariant_factors) order *= f;
  return order;
}

std::string FgAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& f : invariant_factors) {
    if (!first) out << " x ";
    out << "Z/" << f;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) out << " x ";
    out << 'Z';
    if (free_rank > 1) out << '^' << free_rank;
  }
  return out.str();
}

Presentation::Presentation(std::size_t generators, IntegerMatrix rels)
    : n_generators(generators), relations(std::move(rels)) {
  if (relations.rows() == 0 && relations.cols() != generators) relations = IntegerMatrix(0, generators);
  if (relations.cols() != generators)
    throw std::invalid_argument("Presentation: relation width differs from generator count");
}

// ---------------------------------------------------------------------------
// Hermite normal form

IntegerMatrix hermite_normal_form(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1 until a single nonzero entry remains.
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, c) == 0) continue;
        if (best == m || abs_value(h(i, c)) < abs_value(h(best, c))) best = i;
      }
      if (best == m) break;
      h.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -tquot(h(i, c), h(r, c)));
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -fquot(h(i, c), h(r, c)));
    ++r;
  }
  return h;
}

bool lattice_contains(const IntegerMatrix& relations, std::span<const Integer> v) {
  if (v.size() != relations.cols()) throw std::invalid_argument("lattice_contains: vector length mismatch");
  const IntegerMatrix h = hermite_normal_form(relations);
  std::vector<Integer> rest(v.begin(), v.end());
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    while (c < h.cols() && h(r, c) == 0) {
      if (rest[c] != 0) return false;
      ++c;
    }
    if (c == h.cols()) break;
    if (!divides(h(r, c), rest[c])) return false;
    const Integer q = rest[c] / h(r, c);
    for (std::size_t j = c; j < h.cols(); ++j) rest[j] -= q * h(r, j);
    ++c;
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Smith normal form
//
// Pivot rule: the nonzero entry of least absolute value in the trailing
// submatrix, first in row-major order on ties. Row operations are mirrored
// into U and column operations into V.

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition s{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
  IntegerMatrix& d = s.D;

  auto row_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    d.add_row_multiple(target, source, f);
    s.U.add_row_multiple(target, source, f);
  };
  auto col_add = [&](std::size_t target, std::size_t source, const Integer& f) {
    d.add_col_multiple(target, source, f);
    s.V.add_col_multiple(target, source, f);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    bool finished = false;
    while (true) {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (pr == m || abs_value(d(i, j)) < abs_value(d(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) {
        finished = true;
        break;
      }
      d.swap_rows(t, pr);
      s.U.swap_rows(t, pr);
      d.swap_cols(t, pc);
      s.V.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -tquot(d(i, t), d(t, t)));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -tquot(d(t, j), d(t, t)));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the remaining block; otherwise fold the offending row in.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!divides(d(t, t), d(i, j))) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_add(t, bad, 1);
    }
    if (finished) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
  }
  return s;
}

FgAbGroup presentation_to_group(const Presentation& p) {
  if (p.relations.cols() != p.n_generators)
    throw std::invalid_argument("presentation_to_group: relation width differs from generator count");
  FgAbGroup g;
  if (p.relations.rows() == 0) {
    g.free_rank = p.n_generators;
    return g;
  }
  const SmithDecomposition s = smith_normal_form(p.relations);
  std::size_t rank = 0;
  for (const auto& v : s.diagonal()) {
    if (v == 0) continue;
    ++rank;
    if (v != 1) g.invariant_factors.push_back(v);
  }
  g.free_rank = p.n_generators - rank;
  return g;
}

// ---------------------------------------------------------------------------
// Direct products of cyclic groups

std::vector<PrimePower> factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<PrimePower> out;
  Integer rest = n;
  for (Integer p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

FgAbGroup product_to_invariant_factors(std::span<const Integer> cyclic_orders, std::size_t free_rank) {
  // prime -> exponents of its cyclic prime-power factors
  std::map<Integer, std::vector<unsigned>> by_prime;
  for (const auto& order : cyclic_orders) {
    if (order < 1) throw std::invalid_argument("product_to_invariant_factors: cyclic order must be >= 1");
    for (const auto& pp : factorize(order)) by_prime[pp.prime].push_back(pp.exponent);
  }
  std::size_t length = 0;
  for (auto& [prime, exps] : by_prime) {
    std::sort(exps.begin(), exps.end(), std::greater<>());
    length = std::max(length, exps.size());
  }
  // The i-th largest invariant factor collects the i-th largest power of every prime.
  std::vector<Integer> factors(length, Integer(1));
  for (const auto& [prime, exps] : by_prime)
    for (std::size_t i = 0; i < exps.size(); ++i) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), prime.get_mpz_t(), exps[i]);
      factors[i] *= pw;
    }
  std::reverse(factors.begin(), factors.end());
  return FgAbGroup{factors, free_rank};
}

FgAbGroup product_to_invariant_factors(std::initializer_list<long> cyclic_orders, std::size_t free_rank) {
  std::vector<Integer> orders;
  for (long o : cyclic_orders) orders.emplace_back(o);
  return product_to_invariant_factors(orders, free_rank);
}

std::vector<Integer> elementary_divisors(const FgAbGroup& g) {
  std::vector<Integer> out;
  for (const auto& f : g.invariant_factors)
    for (const auto& pp : factorize(f)) {
      Integer pw;
      mpz_pow_ui(pw.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
      out.push_back(pw);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cyclicpic
