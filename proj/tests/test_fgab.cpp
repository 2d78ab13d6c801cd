#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclicpic/fgab.hpp"
#include "oracles.hpp"

using namespace cyclicpic;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

FgAbGroup group(std::initializer_list<long> factors, std::size_t free_rank) { return {ints(factors), free_rank}; }

void check_certificate(const IntegerMatrix& a) {
  const SmithDecomposition s = smith_normal_form(a);
  REQUIRE(s.U * a * s.V == s.D);
  CHECK(abs(oracle::det(s.U)) == 1);
  CHECK(abs(oracle::det(s.V)) == 1);
  for (std::size_t i = 0; i < s.D.rows(); ++i)
    for (std::size_t j = 0; j < s.D.cols(); ++j)
      if (i != j) CHECK(s.D(i, j) == 0);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size() && diag[i] != 0) CHECK(mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()));
    if (i + 1 < diag.size() && diag[i] == 0) CHECK(diag[i + 1] == 0);
  }
  Integer prefix = 1;
  for (std::size_t k = 1; k <= s.rank(); ++k) {
    prefix *= diag[k - 1];
    CHECK(prefix == oracle::minor_gcd(a, k));
  }
}

}  // namespace

TEST_CASE("hermite normal form examples") {
  CHECK(hermite_normal_form(IntegerMatrix{{2, 0}, {0, 3}}) == IntegerMatrix{{2, 0}, {0, 3}});
  const IntegerMatrix h = hermite_normal_form(IntegerMatrix{{0, 12}, {8, 4}});
  CHECK(h == IntegerMatrix{{8, 4}, {0, 12}});
  // same row lattice both ways
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(lattice_contains(h, IntegerMatrix{{0, 12}, {8, 4}}.row(r)));
    CHECK(lattice_contains(IntegerMatrix{{0, 12}, {8, 4}}, h.row(r)));
  }
  CHECK(hermite_normal_form(IntegerMatrix(3, 2)) == IntegerMatrix(3, 2));
}

TEST_CASE("hermite normal form shape on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = oracle::random_matrix(rng, 1 + trial % 5, 1 + (trial / 5) % 5, -20, 20);
    const auto h = hermite_normal_form(a);
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      std::size_t c = 0;
      while (c < h.cols() && h(r, c) == 0) ++c;
      if (c == h.cols()) {
        seen_zero_row = true;
        continue;
      }
      CHECK_FALSE(seen_zero_row);
      if (r > 0) CHECK(c > last_pivot);
      last_pivot = c;
      CHECK(h(r, c) > 0);
      for (std::size_t above = 0; above < r; ++above) {
        CHECK(h(above, c) >= 0);
        CHECK(h(above, c) < h(r, c));
      }
      CHECK(lattice_contains(a, h.row(r)));
    }
    for (std::size_t r = 0; r < a.rows(); ++r) CHECK(lattice_contains(h, a.row(r)));
  }
}

TEST_CASE("smith normal form examples") {
  CHECK(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).diagonal() == ints({1, 6}));
  CHECK(smith_normal_form(IntegerMatrix{{0, 12}, {8, 4}}).diagonal() == ints({4, 24}));
  CHECK(smith_normal_form(IntegerMatrix::identity(3)).D == IntegerMatrix::identity(3));
  // frozen values agree with the minor-gcd oracle
  CHECK(oracle::minor_gcd(IntegerMatrix{{0, 12}, {8, 4}}, 1) == 4);
  CHECK(oracle::minor_gcd(IntegerMatrix{{0, 12}, {8, 4}}, 2) == 96);
  check_certificate(IntegerMatrix{{0, 12}, {8, 4}});
  check_certificate(IntegerMatrix{{10, 0, 0}, {-18, 6, 12}});
  check_certificate(IntegerMatrix(2, 3));
  check_certificate(IntegerMatrix(0, 3));
}

TEST_CASE("smith certificates on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 150; ++trial) check_certificate(oracle::random_matrix(rng, dim(rng), dim(rng), -50, 50));
}

TEST_CASE("smith handles entries beyond machine words") {
  IntegerMatrix a{{1, 0}, {0, 1}};
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543210");
  a(0, 1) = Integer("5555555555555555555555555555555");
  check_certificate(a);
}

TEST_CASE("presentation_to_group examples") {
  CHECK(presentation_to_group(Presentation(2, IntegerMatrix{{0, 12}, {8, 4}})) == group({4, 24}, 0));
  CHECK(presentation_to_group(Presentation(1)) == group({}, 1));
  CHECK(presentation_to_group(Presentation(3, IntegerMatrix{{10, 0, 0}, {-18, 6, 12}})) == group({2, 30}, 1));
  CHECK(presentation_to_group(Presentation(0)).is_trivial());
  CHECK(presentation_to_group(Presentation(2, IntegerMatrix{{1, 0}, {0, -1}})).is_trivial());
  CHECK_THROWS_AS(Presentation(2, IntegerMatrix{{1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("presentation_to_group invariance under lattice-preserving moves") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 4), pick(0, 100);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t gens = dim(rng), rels = dim(rng);
    const auto a = oracle::random_matrix(rng, rels, gens, -15, 15);
    const FgAbGroup base = presentation_to_group(Presentation(gens, a));

    IntegerMatrix b = a;
    const std::size_t c1 = pick(rng) % gens, c2 = pick(rng) % gens;
    b.swap_cols(c1, c2);
    CHECK(presentation_to_group(Presentation(gens, b)) == base);

    b = a;
    b.swap_rows(pick(rng) % rels, pick(rng) % rels);
    b.negate_row(pick(rng) % rels);
    CHECK(presentation_to_group(Presentation(gens, b)) == base);

    b = a;
    const std::size_t r1 = pick(rng) % rels, r2 = pick(rng) % rels;
    if (r1 != r2) b.add_row_multiple(r1, r2, 1);
    CHECK(presentation_to_group(Presentation(gens, b)) == base);

    b = a;
    std::vector<Integer> combo(gens, Integer(0));
    for (std::size_t r = 0; r < rels; ++r) {
      const long f = pick(rng) % 7 - 3;
      for (std::size_t c = 0; c < gens; ++c) combo[c] += f * a(r, c);
    }
    b.append_row(combo);
    CHECK(presentation_to_group(Presentation(gens, b)) == base);
  }
}

TEST_CASE("product_to_invariant_factors examples") {
  CHECK(product_to_invariant_factors({3, 4, 8}, 0) == group({4, 24}, 0));
  CHECK(product_to_invariant_factors({2, 6}, 0) == group({2, 6}, 0));
  CHECK(product_to_invariant_factors({6, 10}, 1) == group({2, 30}, 1));
  CHECK(product_to_invariant_factors({1, 1}, 0).is_trivial());
  CHECK(product_to_invariant_factors({3, 2, 2}, 0) == group({2, 6}, 0));
  CHECK_THROWS_AS(product_to_invariant_factors({0}, 0), std::invalid_argument);
}

TEST_CASE("elementary divisors round-trip through product_to_invariant_factors") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> count(0, 5), order(1, 400), rank(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Integer> orders;
    for (int i = count(rng); i > 0; --i) orders.emplace_back(order(rng));
    const FgAbGroup g = product_to_invariant_factors(orders, rank(rng));
    for (std::size_t i = 0; i + 1 < g.invariant_factors.size(); ++i)
      CHECK(mpz_divisible_p(g.invariant_factors[i + 1].get_mpz_t(), g.invariant_factors[i].get_mpz_t()));
    for (const auto& f : g.invariant_factors) CHECK(f >= 2);
    const auto pp = elementary_divisors(g);
    CHECK(product_to_invariant_factors(pp, g.free_rank) == g);
    // the canonical form agrees with the SNF of the diagonal presentation
    IntegerMatrix diag(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) diag(i, i) = orders[i];
    CHECK(presentation_to_group(Presentation(orders.size(), diag)).invariant_factors == g.invariant_factors);
  }
}

TEST_CASE("lattice_contains examples") {
  const IntegerMatrix one{{0, 12}};
  CHECK(lattice_contains(one, ints({0, 24})));
  CHECK_FALSE(lattice_contains(one, ints({0, 6})));
  CHECK(lattice_contains(IntegerMatrix{{0, 12}, {8, 4}}, ints({8, 16})));
  CHECK_FALSE(lattice_contains(IntegerMatrix{{0, 12}, {8, 4}}, ints({4, 2})));
  CHECK(lattice_contains(IntegerMatrix(0, 2), ints({0, 0})));
  CHECK_FALSE(lattice_contains(IntegerMatrix(0, 2), ints({0, 1})));
  CHECK_THROWS_AS(lattice_contains(one, ints({1})), std::invalid_argument);
}

TEST_CASE("finite quotients match the enumeration oracle") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 40) {
    const std::size_t n = 2 + checked % 2;
    const auto a = oracle::random_matrix(rng, n, n, -12, 12);
    const Integer det = abs(oracle::det(a));
    if (det == 0 || det > 3000) continue;
    const auto e = oracle::enumerate_quotient(a);
    const FgAbGroup g = presentation_to_group(Presentation(n, a));
    CHECK(g.free_rank == 0);
    CHECK(Integer(static_cast<unsigned long>(e.order)) == g.torsion_order());
    CHECK(e.elementary_divisors == elementary_divisors(g));
    ++checked;
  }
}

TEST_CASE("group rendering") {
  CHECK(group({2, 6}, 0).to_string() == "Z/2 x Z/6");
  CHECK(group({2, 30}, 1).to_string() == "Z/2 x Z/30 x Z");
  CHECK(group({4}, 2).to_string() == "Z/4 x Z^2");
  CHECK(group({}, 0).to_string() == "0");
  CHECK(group({}, 3).to_string() == "Z^3");
}
