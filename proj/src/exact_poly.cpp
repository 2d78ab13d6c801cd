#include "cyclicpic/exact_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclicpic {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides_monomial(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

void add_term(ExactPoly::TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

ExactPoly::ExactPoly(long c) : ExactPoly(Rational(c)) {}

ExactPoly::ExactPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

ExactPoly::ExactPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  prune();
}

ExactPoly ExactPoly::variable(const std::string& name) { return monomial(1, {{name, 1}}); }

ExactPoly ExactPoly::monomial(const Rational& coeff, const std::vector<std::pair<std::string, unsigned>>& powers) {
  std::vector<std::string> vars;
  for (const auto& [name, e] : powers) vars.push_back(name);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Exponents ex(vars.size(), 0);
  for (const auto& [name, e] : powers) {
    const auto idx = std::lower_bound(vars.begin(), vars.end(), name) - vars.begin();
    ex[idx] += e;
  }
  TermMap t;
  add_term(t, ex, coeff);
  return ExactPoly(std::move(vars), std::move(t));
}

Rational ExactPoly::constant_value() const {
  const Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned ExactPoly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first); }

unsigned ExactPoly::degree_in(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return 0;
  const auto idx = it - vars_.begin();
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[idx]);
  return best;
}

ExactPoly::TermMap ExactPoly::lifted(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    where[i] = std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin();
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ex(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ex[where[i]] = e[i];
    out.emplace(std::move(ex), c);
  }
  return out;
}

void ExactPoly::prune() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ex;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ex.push_back(e[i]);
    out.emplace(std::move(ex), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(out);
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& o) {
  auto vars = merge_vars(vars_, o.vars_);
  TermMap t = lifted(vars);
  for (const auto& [e, c] : o.lifted(vars)) add_term(t, e, c);
  *this = ExactPoly(std::move(vars), std::move(t));
  return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& o) { return *this += -o; }

ExactPoly& ExactPoly::operator*=(const ExactPoly& o) {
  auto vars = merge_vars(vars_, o.vars_);
  const TermMap a = lifted(vars);
  const TermMap b = o.lifted(vars);
  TermMap t;
  Exponents ex(vars.size());
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = ea[i] + eb[i];
      add_term(t, ex, ca * cb);
    }
  *this = ExactPoly(std::move(vars), std::move(t));
  return *this;
}

ExactPoly ExactPoly::pow(unsigned e) const {
  ExactPoly result(1);
  ExactPoly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::pair<ExactPoly, ExactPoly> ExactPoly::divmod(const ExactPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("ExactPoly: division by zero");
  const auto vars = merge_vars(vars_, divisor.vars_);
  TermMap rest = lifted(vars);
  const TermMap g = divisor.lifted(vars);
  const auto& [glead_e, glead_c] = *g.rbegin();
  TermMap quotient, remainder;
  Exponents shift(vars.size());
  while (!rest.empty()) {
    const auto lead = std::prev(rest.end());
    const Exponents e = lead->first;
    const Rational c = lead->second;
    if (!divides_monomial(glead_e, e)) {
      add_term(remainder, e, c);
      rest.erase(lead);
      continue;
    }
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = e[i] - glead_e[i];
    const Rational factor = c / glead_c;
    add_term(quotient, shift, factor);
    Exponents ex(vars.size());
    for (const auto& [ge, gc] : g) {
      for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = ge[i] + shift[i];
      add_term(rest, ex, -factor * gc);
    }
  }
  return {ExactPoly(vars, std::move(quotient)), ExactPoly(vars, std::move(remainder))};
}

ExactPoly ExactPoly::exact_div(const ExactPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::domain_error("ExactPoly: " + divisor.to_string() + " does not divide " + to_string());
  return q;
}

bool ExactPoly::divisible_by(const ExactPoly& divisor) const { return divmod(divisor).second.is_zero(); }

std::string ExactPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const bool is_unit_monomial = degree_of(e) == 0;
    bool wrote = false;
    if (mag != 1 || is_unit_monomial) {
      out << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) out << '*';
      out << vars_[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

}  // namespace cyclicpic
