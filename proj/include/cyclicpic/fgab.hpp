#pragma once

// Finitely generated abelian groups over arbitrary-precision integers:
// Hermite and Smith normal forms, lattice membership, and the canonical
// invariant-factor form of a presented group.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclicpic/integer_matrix.hpp"

namespace cyclicpic {

// U * A * V = D with U, V unimodular and D diagonal, d1 | d2 | ... followed by zeros.
struct SmithDecomposition {
  IntegerMatrix D;
  IntegerMatrix U;
  IntegerMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

// Z/d1 x ... x Z/dk x Z^r in canonical form: every di >= 2 and di | d(i+1).
// Two groups are isomorphic iff their canonical forms compare equal.
struct FgAbGroup {
  std::vector<Integer> invariant_factors;
  std::size_t free_rank = 0;

  bool is_finite() const { return free_rank == 0; }
  bool is_trivial() const { return invariant_factors.empty() && free_rank == 0; }
  // Order of the torsion subgroup.
  Integer torsion_order() const;
  // "Z/d1 x Z/d2 x Z^r"; the trivial group renders as "0".
  std::string to_string() const;

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

// Z^n_generators modulo the row lattice of `relations`.
struct Presentation {
  std::size_t n_generators = 0;
  IntegerMatrix relations;

  Presentation() = default;
  Presentation(std::size_t generators, IntegerMatrix rels);
  explicit Presentation(std::size_t generators) : n_generators(generators), relations(0, generators) {}
};

// Row-style Hermite normal form: same shape as A, echelon with positive pivots,
// entries above each pivot reduced into [0, pivot), zero rows last.
IntegerMatrix hermite_normal_form(const IntegerMatrix& a);

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

FgAbGroup presentation_to_group(const Presentation& p);

// Canonical form of Z/o1 x ... x Z/ok x Z^free_rank. Orders must be >= 1.
FgAbGroup product_to_invariant_factors(std::span<const Integer> cyclic_orders, std::size_t free_rank);
FgAbGroup product_to_invariant_factors(std::initializer_list<long> cyclic_orders, std::size_t free_rank);

// Prime-power (elementary divisor) decomposition of the torsion part, ascending.
std::vector<Integer> elementary_divisors(const FgAbGroup& g);

// True iff v lies in the integer row span of `relations`.
bool lattice_contains(const IntegerMatrix& relations, std::span<const Integer> v);

// Prime factorisation by trial division, ascending primes with multiplicity counts.
struct PrimePower {
  Integer prime;
  unsigned exponent;
};
std::vector<PrimePower> factorize(const Integer& n);

}  // namespace cyclicpic
