#include "cyclicpic/picard_calc.hpp"

#include <sstream>
#include <stdexcept>

#include "cyclicpic/errors.hpp"

namespace cyclicpic {

namespace {

// Relation orders of Pic Jac: Pic M_{1,1} = Z/12, the g = 2 relation
// (det pi_*omega)^10, and Pic F = Z/4 for the (1,1,2) case.
constexpr long kGenusOneRelation = 12;
constexpr long kGenusTwoRelation = 10;
constexpr long kB112Relation = 4;

Integer halve_exact(const Integer& v, const char* what) {
  if (!mpz_even_p(v.get_mpz_t())) throw IntegralityViolation(std::string(what) + ": odd numerator");
  return v / 2;
}

std::string regime_label(const GenusRegime& r) {
  std::ostringstream out;
  out << to_string(r.kind()) << "(g=" << r.genus() << ", d=" << r.degree() << ')';
  return out.str();
}

}  // namespace

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::G0: return "G0";
    case RegimeKind::G1: return "G1";
    case RegimeKind::G2: return "G2";
    case RegimeKind::GHigh: return "GHigh";
    case RegimeKind::B112: return "B112";
  }
  return "?";
}

GenusRegime GenusRegime::jacobian(long genus, long degree) {
  if (genus < 0) throw std::invalid_argument("GenusRegime: genus must be non-negative");
  if (degree < 1) throw std::invalid_argument("GenusRegime: degree must be positive");
  RegimeKind kind = RegimeKind::GHigh;
  if (genus == 0)
    kind = RegimeKind::G0;
  else if (genus == 1)
    kind = RegimeKind::G1;
  else if (genus == 2)
    kind = RegimeKind::G2;
  return GenusRegime(kind, genus, degree);
}

GenusRegime GenusRegime::b112() { return GenusRegime(RegimeKind::B112, 1, 0); }

std::vector<std::string> GeneratorBasis::names() const {
  std::vector<std::string> out;
  for (const auto& s : symbols) out.push_back(s.name);
  return out;
}

GeneratorBasis generator_basis(const GenusRegime& regime) {
  switch (regime.kind()) {
    case RegimeKind::G0:
      if (regime.degree() % 2 == 0)
        return {{{"L0", "pi_*(L (x) omega^(d/2))"}}, IntegerMatrix(0, 1)};
      return {{{"L0", "det pi_*(L (x) omega^((d-1)/2))"}}, IntegerMatrix(0, 1)};
    case RegimeKind::G1:
      return {{{"Lambda", "det pi_*L"}, {"Omega", "pi_*omega"}}, IntegerMatrix{{0, kGenusOneRelation}}};
    case RegimeKind::G2:
    case RegimeKind::GHigh: {
      GeneratorBasis b{{{"Omega", "det pi_*omega"}, {"Delta", "d_pi(L)"}, {"Theta", "det pi_*(L (x) omega)"}},
                       IntegerMatrix(0, 3)};
      if (regime.kind() == RegimeKind::G2) b.jac_relations = IntegerMatrix{{kGenusTwoRelation, 0, 0}};
      return b;
    }
    case RegimeKind::B112:
      return {{{"Omega", "pi_*omega"}}, IntegerMatrix{{kB112Relation}}};
  }
  throw std::logic_error("generator_basis: unknown regime");
}

// ---------------------------------------------------------------------------

DivisorClass::DivisorClass(GenusRegime regime, std::vector<Integer> exponents)
    : regime_(regime), exponents_(std::move(exponents)) {
  if (exponents_.size() != generator_basis(regime_).symbols.size())
    throw std::invalid_argument("DivisorClass: exponent vector length differs from the regime's basis");
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  if (!(regime_ == other.regime_)) throw RegimeMismatch("cannot add classes from different regimes");
  std::vector<Integer> e = exponents_;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return {regime_, std::move(e)};
}

DivisorClass DivisorClass::operator-() const {
  std::vector<Integer> e = exponents_;
  for (auto& v : e) v = -v;
  return {regime_, std::move(e)};
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const { return *this + (-other); }

DivisorClass operator*(const Integer& factor, const DivisorClass& c) {
  std::vector<Integer> e = c.exponents_;
  for (auto& v : e) v *= factor;
  return {c.regime_, std::move(e)};
}

std::string DivisorClass::to_string() const {
  const auto basis = generator_basis(regime_);
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) out << ", ";
    out << basis.symbols[i].name << '^' << exponents_[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------------------

DivisorClass det_pushforward_class(const GenusRegime& regime, long n, long k) {
  const Integer N = n;
  const Integer K = k;
  const Integer D = regime.degree();
  auto out_of_range = [&]() {
    std::ostringstream msg;
    msg << "det pi_*(L^" << n << " (x) omega^" << k << ") has no known formula in regime " << regime_label(regime);
    return OutOfFormulaRange(msg.str());
  };

  switch (regime.kind()) {
    case RegimeKind::G0: {
      Integer rank = N * D - 2 * K + 1;
      if (rank < 0) rank = 0;
      Integer e = N * rank;
      if (regime.degree() % 2 != 0) e = halve_exact(e, "genus 0, odd d");
      return {regime, {e}};
    }
    case RegimeKind::G1: {
      if (n == 0 && k == 1) return {regime, {0, 1}};
      if (n <= 0) throw out_of_range();
      const Integer omega = D * N * K + halve_exact((N - 1) * (D * N - 2 * N - 2), "genus 1");
      return {regime, {N * N, omega}};
    }
    case RegimeKind::G2:
    case RegimeKind::GHigh: {
      if (n == 0 && k == 1) return {regime, {1, 0, 0}};
      if (n == 1 && k == 0) return {regime, {0, 1, 0}};
      if (n < 1 || k < 1) throw out_of_range();
      return {regime,
              {6 * K * K - 6 * K - N * N + 1, -N * K + halve_exact(N * (N + 1), "g >= 2"),
               N * K + halve_exact(N * (N - 1), "g >= 2")}};
    }
    case RegimeKind::B112:
      if (n == 0 && k == 1) return {regime, {1}};
      throw out_of_range();
  }
  throw std::logic_error("det_pushforward_class: unknown regime");
}

DivisorClass discriminant_class(const GenusRegime& regime, long n) {
  if (regime.kind() == RegimeKind::B112)
    throw UnsupportedRegime("the (1,1,2) case has no discriminant quotient");
  if (n < 2) throw OutOfFormulaRange("discriminant class needs n >= 2");
  const Integer N = n;
  const Integer D = regime.degree();
  switch (regime.kind()) {
    case RegimeKind::G0:
      if (regime.degree() % 2 == 0) return {regime, {2 * N * (N * D - 1)}};
      return {regime, {N * (N * D - 1)}};
    case RegimeKind::G1:
      return {regime, {2 * N * N, N * (D * N + D - 2 * N)}};
    case RegimeKind::G2:
    case RegimeKind::GHigh:
      return {regime, {-2 * N * N, N * (N - 1), N * (N + 1)}};
    case RegimeKind::B112:
      break;
  }
  throw std::logic_error("discriminant_class: unknown regime");
}

bool class_equal(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.regime() == b.regime())) throw RegimeMismatch("class_equal: classes live in different regimes");
  const DivisorClass diff = a - b;
  return lattice_contains(generator_basis(a.regime()).jac_relations, diff.exponents());
}

bool genus1_character_consistency(long n, long d) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("genus1_character_consistency: n and d must be positive");
  const Integer N = n;
  const Integer D = d;
  // det pi_*(L^n) = T^{n^2} (x) (pi_*omega)^{1 - nd(nd+1)/2}, T = Lambda + (d(d+1)/2 - 1) Omega.
  const Integer via_character = N * N * (D * (D + 1) / 2 - 1) + 1 - N * D * (N * D + 1) / 2;
  const Integer via_formula = (N - 1) * (D * N - 2 * N - 2) / 2;
  return via_character == via_formula;
}

}  // namespace cyclicpic
