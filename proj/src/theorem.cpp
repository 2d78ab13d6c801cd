#include "cyclicpic/theorem.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "cyclicpic/errors.hpp"

namespace cyclicpic {

void CoverParams::validate() const {
  if (h < 0) throw std::invalid_argument("h must be non-negative");
  if (g < 0) throw std::invalid_argument("g must be non-negative");
  if (n < 2) throw std::invalid_argument("n must be at least 2");
}

std::string DegreeInvariant::to_string() const {
  if (value) return std::to_string(*value);
  std::ostringstream out;
  out << numerator << '/' << denominator;
  return out.str();
}

DegreeInvariant degree_invariant(const CoverParams& p) {
  p.validate();
  const Integer h = p.h, g = p.g, n = p.n;
  DegreeInvariant d{2 * (h + n * (1 - g) - 1), n * (n - 1), std::nullopt};
  if (mpz_divisible_p(d.numerator.get_mpz_t(), d.denominator.get_mpz_t())) {
    const Integer q = d.numerator / d.denominator;
    if (q >= 0) {
      if (!q.fits_slong_p()) throw std::out_of_range("degree invariant does not fit in a machine integer");
      d.value = q.get_si();
    }
  }
  return d;
}

long cover_genus(long g, long n, long d) {
  const Integer h = 1 + Integer(n) * (g - 1) + Integer(n) * (n - 1) * d / 2;
  if (!h.fits_slong_p()) throw std::out_of_range("cover genus does not fit in a machine integer");
  return h.get_si();
}

std::vector<HypothesisCheck> check_hypotheses(const CoverParams& p, long d) {
  const long g = p.g;
  const long nd = p.n * d;
  bool range = false;
  if (g == 0)
    range = d >= 1;
  else if (g == 1)
    range = nd > 2;
  else
    range = (nd > 2 * g - 2 && g >= 4) || (nd > 2 * g - 1 && g >= 3) || (nd > 2 * g && g >= 2);
  return {
      {"nd_gt_2g_minus_2", nd > 2 * g - 2},
      {"theoremA_range", range},
      {"special_case_B112", p.h == 1 && p.g == 1 && p.n == 2},
      {"special_case_B212", p.h == 2 && p.g == 1 && p.n == 2},
      {"characteristic_ok", true},
  };
}

bool hypothesis(const std::vector<HypothesisCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c.holds;
  throw std::invalid_argument("unknown hypothesis: " + name);
}

PicardReport build_presentation(const CoverParams& p) {
  const DegreeInvariant d = degree_invariant(p);
  if (!d.integral()) throw EmptyModuli("empty moduli (d = " + d.to_string() + " not integral)");
  const long dv = *d.value;
  auto checks = check_hypotheses(p, dv);
  PicardReport report{p, d, false, std::nullopt};

  if (hypothesis(checks, "special_case_B112")) {
    const GenusRegime regime = GenusRegime::b112();
    const GeneratorBasis basis = generator_basis(regime);
    // det pi_*L is trivial here since pi_*L = 0; only the Pic F relation survives.
    Presentation pres(basis.symbols.size(), basis.jac_relations);
    FgAbGroup structure = presentation_to_group(pres);
    report.body = PicardReport::Body{regime,          basis.names(), pres, structure, closed_form_structure(p, dv),
                                     std::move(checks), true};
    return report;
  }
  if (dv == 0) throw UnsupportedCase("d = 0 (mu_n-torsors) is only handled for (h,g,n) = (1,1,2)");
  if (!hypothesis(checks, "nd_gt_2g_minus_2"))
    throw UnsupportedCase("nd <= 2g - 2: Pic B is not a quotient of Pic Jac by the discriminant class");

  const GenusRegime regime = GenusRegime::jacobian(p.g, dv);
  const GeneratorBasis basis = generator_basis(regime);
  IntegerMatrix relations = basis.jac_relations;
  relations.append_row(discriminant_class(regime, p.n).exponents());
  const bool b212 = hypothesis(checks, "special_case_B212");
  if (b212) {
    // The discriminant locus splits in two components; the second one adds
    // (pi_*L)^2 (x) (pi_*omega)^-2 to the kernel.
    relations.append_row(std::vector<Integer>{2, -2});
  }
  Presentation pres(basis.symbols.size(), std::move(relations));
  FgAbGroup structure = presentation_to_group(pres);
  const bool exact = hypothesis(checks, "theoremA_range") || b212;
  report.body = PicardReport::Body{regime, basis.names(), std::move(pres), std::move(structure),
                                   closed_form_structure(p, dv), std::move(checks), exact};
  return report;
}

PicardReport analyze(const CoverParams& p) {
  const DegreeInvariant d = degree_invariant(p);
  if (!d.integral()) return PicardReport{p, d, true, std::nullopt};
  return build_presentation(p);
}

std::optional<FgAbGroup> closed_form_structure(const CoverParams& p, long d) {
  p.validate();
  if (d < 0) return std::nullopt;
  const Integer n = p.n;
  const Integer D = d;
  const auto checks = check_hypotheses(p, d);

  if (p.g == 0) {
    if (d < 1) return std::nullopt;
    const Integer order = (d % 2 == 0) ? Integer(2 * n * (n * D - 1)) : Integer(n * (n * D - 1));
    return product_to_invariant_factors(std::vector<Integer>{order}, 0);
  }
  if (p.g == 1) {
    if (hypothesis(checks, "special_case_B112")) return product_to_invariant_factors({4}, 0);
    if (hypothesis(checks, "special_case_B212")) return product_to_invariant_factors({3, 2, 2}, 0);
    if (!hypothesis(checks, "theoremA_range")) return std::nullopt;
    const Integer half_a = n * (D * n + D - 2 * n) / 2;
    if (mpz_even_p(half_a.get_mpz_t()))
      return product_to_invariant_factors(std::vector<Integer>{3, 4, 2 * n * n}, 0);
    return product_to_invariant_factors(std::vector<Integer>{3, 2, 4 * n * n}, 0);
  }
  if (!hypothesis(checks, "theoremA_range")) return std::nullopt;
  const Integer m = (p.n % 2 != 0) ? Integer(2 * n) : n;
  if (p.g == 2) return product_to_invariant_factors(std::vector<Integer>{m, 10}, 1);
  return product_to_invariant_factors(std::vector<Integer>{m}, 2);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "Match";
    case Verdict::Mismatch: return "Mismatch";
    case Verdict::NotCovered: return "NotCovered";
  }
  return "?";
}

VerificationOutcome verify(const CoverParams& p) {
  VerificationOutcome out;
  PicardReport report;
  try {
    report = build_presentation(p);
  } catch (const EmptyModuli& e) {
    out.detail = e.what();
    return out;
  } catch (const UnsupportedCase& e) {
    out.detail = e.what();
    return out;
  }
  out.computed = report.body->structure;
  out.claimed = report.body->closed_form;
  if (!out.claimed) {
    out.detail = "no closed-form row covers this case";
    return out;
  }
  if (*out.computed == *out.claimed) {
    out.verdict = Verdict::Match;
  } else {
    out.verdict = Verdict::Mismatch;
    out.detail = "computed " + out.computed->to_string() + ", closed form " + out.claimed->to_string();
  }
  return out;
}

}  // namespace cyclicpic
