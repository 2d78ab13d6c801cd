#pragma once

// Tautological class calculus on the universal Jacobian Jac_{d,g}.
//
// Classes are written additively as integer exponent vectors over a
// regime-dependent generator basis: tensor product is vector addition and
// the dual is negation. Equality is taken modulo the regime's relation
// lattice.

#include <string>
#include <vector>

#include "cyclicpic/fgab.hpp"

namespace cyclicpic {

enum class RegimeKind {
  G0,     // genus 0, d >= 1
  G1,     // genus 1, d >= 1
  G2,     // genus 2, d >= 1
  GHigh,  // genus >= 3, d >= 1
  B112,   // (h, g, n) = (1, 1, 2), d = 0
};

std::string to_string(RegimeKind kind);

class GenusRegime {
 public:
  // Universal Jacobian of degree `degree` >= 1 over curves of genus `genus` >= 0.
  static GenusRegime jacobian(long genus, long degree);
  // The d = 0 case (h, g, n) = (1, 1, 2).
  static GenusRegime b112();

  RegimeKind kind() const { return kind_; }
  long genus() const { return genus_; }
  long degree() const { return degree_; }

  friend bool operator==(const GenusRegime&, const GenusRegime&) = default;

 private:
  GenusRegime(RegimeKind kind, long genus, long degree) : kind_(kind), genus_(genus), degree_(degree) {}

  RegimeKind kind_;
  long genus_;
  long degree_;
};

struct GeneratorSymbol {
  std::string name;     // short ASCII symbol, e.g. "Omega"
  std::string meaning;  // the line bundle it stands for
};

struct GeneratorBasis {
  std::vector<GeneratorSymbol> symbols;
  IntegerMatrix jac_relations;  // relation lattice of Pic Jac over `symbols`

  std::vector<std::string> names() const;
};

GeneratorBasis generator_basis(const GenusRegime& regime);

class DivisorClass {
 public:
  DivisorClass(GenusRegime regime, std::vector<Integer> exponents);

  const GenusRegime& regime() const { return regime_; }
  const std::vector<Integer>& exponents() const { return exponents_; }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(const Integer& factor, const DivisorClass& c);

  // Exact equality of exponent vectors (not modulo relations).
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const;

 private:
  GenusRegime regime_;
  std::vector<Integer> exponents_;
};

// Class of det pi_*(L^n (x) omega^k).
//   G0:     any n, k.
//   G1:     n > 0 and any k, or (n, k) = (0, 1) giving pi_*omega.
//   G2/GHigh: n, k >= 1, plus (0, 1) -> det pi_*omega and (1, 0) -> d_pi(L).
//   B112:   only (0, 1) -> pi_*omega.
// Throws OutOfFormulaRange elsewhere.
DivisorClass det_pushforward_class(const GenusRegime& regime, long n, long k);

// Class T of the discriminant locus, (det pi_*(L^n (x) omega))^2 (x) (det pi_*omega)^-2.
// Throws UnsupportedRegime for B112 and OutOfFormulaRange for n < 2.
DivisorClass discriminant_class(const GenusRegime& regime, long n);

// Equality modulo the regime's relation lattice. Throws RegimeMismatch.
bool class_equal(const DivisorClass& a, const DivisorClass& b);

// Compares the k = 0 exponent of pi_*omega against the one obtained from the
// character image (1 - nd(nd+1)/2, n^2 d) and T = det pi_*L (x) (pi_*omega)^(d(d+1)/2 - 1).
bool genus1_character_consistency(long n, long d);

}  // namespace cyclicpic
