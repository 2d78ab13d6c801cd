#pragma once

// Picard group of the stack B_{h,g,n} of uniform cyclic covers of degree n
// of genus-g curves by genus-h curves, computed as Pic Jac_{d,g} modulo the
// discriminant class, and compared with the closed-form abstract groups.

#include <optional>
#include <string>
#include <vector>

#include "cyclicpic/fgab.hpp"
#include "cyclicpic/picard_calc.hpp"

namespace cyclicpic {

struct CoverParams {
  long h = 0;
  long g = 0;
  long n = 2;

  // Throws std::invalid_argument unless h, g >= 0 and n >= 2.
  void validate() const;

  friend auto operator<=>(const CoverParams&, const CoverParams&) = default;
};

// d = 2(h + n(1-g) - 1) / (n(n-1)). `value` is set only when the quotient is
// an exact non-negative integer; otherwise the stack is empty.
struct DegreeInvariant {
  Integer numerator;
  Integer denominator;
  std::optional<long> value;

  bool integral() const { return value.has_value(); }
  std::string to_string() const;
};

DegreeInvariant degree_invariant(const CoverParams& p);

// h recovered from (g, n, d): h = 1 + n(g-1) + n(n-1)d/2.
long cover_genus(long g, long n, long d);

struct HypothesisCheck {
  std::string name;
  bool holds;
};

// Named checks, in this order:
//   nd_gt_2g_minus_2   quotient construction applies
//   theoremA_range     the generic closed-form row of the genus applies
//                      (g = 0: always; g = 1: nd > 2; g >= 2: the three-way range)
//   special_case_B112  (h, g, n) = (1, 1, 2)
//   special_case_B212  (h, g, n) = (2, 1, 2)
//   characteristic_ok  characteristic is 0, so all "char k does not divide" conditions hold
std::vector<HypothesisCheck> check_hypotheses(const CoverParams& p, long d);
bool hypothesis(const std::vector<HypothesisCheck>& checks, const std::string& name);

struct PicardReport {
  CoverParams params;
  DegreeInvariant d;
  bool empty = false;

  // Absent when `empty`.
  struct Body {
    GenusRegime regime;
    std::vector<std::string> generators;
    Presentation presentation;
    FgAbGroup structure;
    std::optional<FgAbGroup> closed_form;  // nullopt: no closed-form row covers the case
    std::vector<HypothesisCheck> hypotheses;
    bool isomorphism_guaranteed = true;  // false: presentation only bounds Pic B from above
  };
  std::optional<Body> body;
};

// Throws EmptyModuli when d is non-integral or negative, UnsupportedCase for
// d = 0 other than (1,1,2) and for nd <= 2g - 2.
PicardReport build_presentation(const CoverParams& p);

// Like build_presentation, but an empty stack yields a report with empty = true.
PicardReport analyze(const CoverParams& p);

std::optional<FgAbGroup> closed_form_structure(const CoverParams& p, long d);

enum class Verdict { Match, Mismatch, NotCovered };
std::string to_string(Verdict v);

struct VerificationOutcome {
  Verdict verdict = Verdict::NotCovered;
  std::optional<FgAbGroup> computed;
  std::optional<FgAbGroup> claimed;
  std::string detail;
};

VerificationOutcome verify(const CoverParams& p);

}  // namespace cyclicpic
