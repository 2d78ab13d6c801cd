// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "cyclicpic/disc_oracle.hpp"
#include "cyclicpic/fgab.hpp"
#include "cyclicpic/picard_calc.hpp"
#include "cyclicpic/sweep.hpp"
#include "cyclicpic/theorem.hpp"
#include "oracles.hpp"

using namespace cyclicpic;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double elapsed = seconds_since(start);
  if (!out.ok) ++failures;
  std::printf("[%s] %2d  %-44s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), elapsed,
              out.detail.str().c_str());
}

void time_limit(Outcome& out, Clock::time_point start, double limit) {
  const double t = seconds_since(start);
  if (t >= limit) {
    std::ostringstream why;
    why << "took " << t << " s, limit " << limit << " s";
    out.fail(why.str());
  }
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

int main() {
  criterion(1, "closed-form sweep g 0..5, n 2..12, d 1..12", [](Outcome& out) {
    const auto start = Clock::now();
    const SweepSummary s = sweep_parallel({{0, 5}, {2, 12}, {1, 12}});
    std::size_t in_range = 0;
    for (const auto& e : s.entries) {
      const auto checks = check_hypotheses(e.params, e.d);
      if (!hypothesis(checks, "theoremA_range") && !hypothesis(checks, "special_case_B212")) continue;
      ++in_range;
      if (e.outcome.verdict != Verdict::Match)
        out.fail("(h,g,n) = (" + std::to_string(e.params.h) + "," + std::to_string(e.params.g) + "," +
                 std::to_string(e.params.n) + "): " + e.outcome.detail);
    }
    if (s.mismatches != 0) out.fail(std::to_string(s.mismatches) + " mismatches");
    time_limit(out, start, 10.0);
    out.detail << s.total() << " tuples, " << in_range << " in range, " << s.mismatches << " mismatches";
  });

  criterion(2, "special cases (2,1,2) and (1,1,2)", [](Outcome& out) {
    const std::pair<CoverParams, std::vector<Integer>> cases[] = {{{2, 1, 2}, ints({2, 6})}, {{1, 1, 2}, ints({4})}};
    for (const auto& [p, expected] : cases) {
      const auto start = Clock::now();
      const PicardReport r = build_presentation(p);
      const FgAbGroup& s = r.body->structure;
      if (s.invariant_factors != expected || s.free_rank != 0) out.fail("got " + s.to_string());
      if (!r.body->closed_form || *r.body->closed_form != s) out.fail("closed form disagrees");
      time_limit(out, start, 0.1);
    }
    out.detail << "[2, 6] and [4]";
  });

  criterion(3, "genus-0 groups are cyclic", [](Outcome& out) {
    std::size_t checked = 0;
    for (long d = 1; d <= 10; ++d)
      for (long n = 2; n <= 10; ++n) {
        const PicardReport r = build_presentation({cover_genus(0, n, d), 0, n});
        const FgAbGroup& s = r.body->structure;
        const long order = (d % 2 == 0 ? 2 : 1) * n * (n * d - 1);
        if (s.free_rank != 0 || s.invariant_factors != ints({order}))
          out.fail("n=" + std::to_string(n) + " d=" + std::to_string(d) + ": " + s.to_string());
        ++checked;
      }
    out.detail << checked << " cases";
  });

  criterion(4, "discriminant composition identity", [](Outcome& out) {
    std::size_t checked = 0;
    auto check = [&](const GenusRegime& regime, long n) {
      const DivisorClass lhs = discriminant_class(regime, n);
      const DivisorClass rhs = Integer(2) * det_pushforward_class(regime, n, 1) -
                               Integer(2) * det_pushforward_class(regime, 0, 1);
      if (!class_equal(lhs, rhs)) out.fail(to_string(regime.kind()) + " n=" + std::to_string(n));
      ++checked;
    };
    for (long d = 1; d <= 50; ++d)
      for (long n = 2; n <= 50; ++n)
        for (long g : {0L, 1L, 2L, 3L, 4L, 5L}) check(GenusRegime::jacobian(g, d), n);
    out.detail << checked << " identities";
  });

  criterion(5, "genus-1 character consistency", [](Outcome& out) {
    std::size_t checked = 0;
    for (long n = 1; n <= 50; ++n)
      for (long d = 1; d <= 50; ++d, ++checked)
        if (!genus1_character_consistency(n, d)) out.fail("n=" + std::to_string(n) + " d=" + std::to_string(d));
    out.detail << checked << " pairs";
  });

  criterion(6, "Smith certificates on 1000 random matrices", [](Outcome& out) {
    const auto start = Clock::now();
    std::mt19937_64 rng(20261019);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 1000 && out.ok; ++trial) {
      const IntegerMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -50, 50);
      const SmithDecomposition s = smith_normal_form(a);
      const std::string tag = "trial " + std::to_string(trial) + ": ";
      if (s.U * a * s.V != s.D) out.fail(tag + "U A V != D");
      if (abs(oracle::det(s.U)) != 1 || abs(oracle::det(s.V)) != 1) out.fail(tag + "not unimodular");
      for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
          if (i != j && s.D(i, j) != 0) out.fail(tag + "off-diagonal entry");
      const auto diag = s.diagonal();
      Integer prefix = 1;
      for (std::size_t k = 0; k < diag.size(); ++k) {
        if (diag[k] < 0) out.fail(tag + "negative diagonal");
        if (k + 1 < diag.size() && diag[k + 1] % (diag[k] == 0 ? Integer(1) : diag[k]) != 0)
          out.fail(tag + "divisibility chain");
        if (diag[k] == 0 && k + 1 < diag.size() && diag[k + 1] != 0) out.fail(tag + "zero before nonzero");
        prefix *= diag[k];
        if (prefix != oracle::minor_gcd(a, k + 1)) out.fail(tag + "minor gcd");
      }
    }
    time_limit(out, start, 5.0);
    out.detail << "1000 matrices";
  });

  criterion(7, "finite quotients vs coset enumeration", [](Outcome& out) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> extra(0, 1);
    int checked = 0, attempts = 0;
    while (checked < 200 && ++attempts < 100000) {
      const std::size_t gens = 2 + checked % 2;
      const IntegerMatrix a = oracle::random_matrix(rng, gens + extra(rng), gens, -9, 9);
      const Integer order = oracle::minor_gcd(a, gens);
      if (order == 0 || order > 10000) continue;
      const auto e = oracle::enumerate_quotient(a);
      const FgAbGroup g = presentation_to_group(Presentation(gens, a));
      Integer product = 1;
      for (const auto& f : g.invariant_factors) product *= f;
      if (g.free_rank != 0 || Integer(static_cast<unsigned long>(e.order)) != product)
        out.fail("order mismatch on " + a.to_string());
      if (e.elementary_divisors != elementary_divisors(g)) out.fail("type mismatch on " + a.to_string());
      ++checked;
    }
    if (checked < 200) out.fail("only " + std::to_string(checked) + " presentations generated");
    out.detail << checked << " presentations";
  });

  criterion(8, "trace-form discriminant oracle", [](Outcome& out) {
    const auto start = Clock::now();
    const ExactPoly h = ExactPoly::variable("h");
    for (unsigned n = 2; n <= 8; ++n) {
      const ExactPoly disc = discriminant(cyclic_cover_algebra(n, h));
      Integer nn;
      mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
      const ExactPoly target = ExactPoly(Rational(nn)) * h.pow(n - 1);
      if (disc != target && disc != -target) out.fail("n=" + std::to_string(n) + ": " + disc.to_string());
    }
    if (discriminant(cyclic_cover_algebra(2, h)).to_string() != "4*h") out.fail("n=2 literal");
    if (discriminant(cyclic_cover_algebra(3, h)).to_string() != "-27*h^2") out.fail("n=3 literal");

    const ExactPoly x1 = ExactPoly::variable("x1"), x2 = ExactPoly::variable("x2");
    const QuotientAlgebra split = split_quadratic_algebra(x1, x2);
    const PolyMatrix& t = trace_form(split).matrix;
    const ExactPoly s = x1 + x2;
    if (!(t(0, 0) == ExactPoly(2) && t(0, 1) == s && t(1, 0) == s && t(1, 1) == s.pow(2) - ExactPoly(2) * x1 * x2))
      out.fail("split trace matrix");
    const ExactPoly disc = discriminant(split);
    if (disc != (x1 - x2).pow(2)) out.fail("split discriminant " + disc.to_string());
    const unsigned len = ramification_length(disc, x1 - x2);
    if (len != 2) out.fail("ramification length " + std::to_string(len));
    time_limit(out, start, 1.0);
    out.detail << "disc(split) = " << disc.to_string() << ", length " << len;
  });

  criterion(9, "resultant agrees with trace-form discriminant", [](Outcome& out) {
    const ExactPoly h = ExactPoly::variable("h");
    for (unsigned n = 2; n <= 6; ++n) {
      const ExactPoly via_trace = discriminant(cyclic_cover_algebra(n, h));
      const ExactPoly via_resultant = oracle::resultant_of_cyclic(n, h);
      if (via_trace != via_resultant && via_trace != -via_resultant) out.fail("n=" + std::to_string(n));
    }
    out.detail << "n = 2..6";
  });

  criterion(10, "structure independent of d for g >= 2", [](Outcome& out) {
    std::size_t families = 0;
    for (long g = 2; g <= 5; ++g)
      for (long n = 2; n <= 12; ++n) {
        std::optional<FgAbGroup> first;
        for (long d = 1; d <= 12; ++d) {
          const CoverParams p{cover_genus(g, n, d), g, n};
          if (!hypothesis(check_hypotheses(p, d), "theoremA_range")) continue;
          const FgAbGroup s = build_presentation(p).body->structure;
          if (!first) first = s;
          else if (s != *first)
            out.fail("g=" + std::to_string(g) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
        }
        if (first) ++families;
      }
    out.detail << families << " (g, n) families";
  });

  std::printf("%s: %d failing criteria\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
