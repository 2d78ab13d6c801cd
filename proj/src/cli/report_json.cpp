#include "cyclicpic/cli/report_json.hpp"

namespace cyclicpic::cli {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json integers_json(const std::vector<Integer>& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(integer_json(x));
  return arr;
}

Json matrix_json(const IntegerMatrix& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) arr.push_back(integers_json(m.row_vector(r)));
  return arr;
}

Json group_json(const FgAbGroup& g) {
  Json j;
  j["invariant_factors"] = integers_json(g.invariant_factors);
  j["free_rank"] = g.free_rank;
  j["group"] = g.to_string();
  return j;
}

namespace {

Json params_json(const CoverParams& p) {
  Json j;
  j["h"] = p.h;
  j["g"] = p.g;
  j["n"] = p.n;
  return j;
}

Json degree_json(const DegreeInvariant& d) {
  if (d.value) return Json(*d.value);
  Json j;
  j["numerator"] = integer_json(d.numerator);
  j["denominator"] = integer_json(d.denominator);
  j["integral"] = false;
  return j;
}

}  // namespace

Json picard_report_json(const PicardReport& r) {
  Json j;
  j["params"] = params_json(r.params);
  j["d"] = degree_json(r.d);
  j["empty"] = r.empty;
  if (r.empty || !r.body) {
    j["status"] = "empty";
    j["message"] = "empty moduli (d = " + r.d.to_string() + " not integral)";
    return j;
  }
  const auto& b = *r.body;
  j["status"] = "computed";
  j["regime"] = to_string(b.regime.kind());
  j["generators"] = b.generators;
  j["relations"] = matrix_json(b.presentation.relations);
  j["structure"] = group_json(b.structure);
  if (b.closed_form) {
    j["closed_form"] = group_json(*b.closed_form);
    j["verdict"] = to_string(*b.closed_form == b.structure ? Verdict::Match : Verdict::Mismatch);
  } else {
    j["closed_form"] = "not covered";
    j["verdict"] = to_string(Verdict::NotCovered);
  }
  j["isomorphism_guaranteed"] = b.isomorphism_guaranteed;
  if (!b.isomorphism_guaranteed)
    j["note"] = "upper-bound presentation, isomorphism not guaranteed: integrality of the discriminant locus is open here";
  Json hyps;
  for (const auto& h : b.hypotheses) hyps[h.name] = h.holds;
  j["hypotheses"] = hyps;
  return j;
}

Json unsupported_report_json(const CoverParams& p, const DegreeInvariant& d, const std::string& reason) {
  Json j;
  j["params"] = params_json(p);
  j["d"] = degree_json(d);
  j["empty"] = false;
  j["status"] = "unsupported";
  j["message"] = reason;
  return j;
}

Json pic_jac_json(const GenusRegime& regime) {
  const GeneratorBasis basis = generator_basis(regime);
  Json j;
  j["genus"] = regime.genus();
  j["degree"] = regime.degree();
  j["regime"] = to_string(regime.kind());
  Json gens = Json::array();
  for (const auto& s : basis.symbols) {
    Json g;
    g["name"] = s.name;
    g["meaning"] = s.meaning;
    gens.push_back(g);
  }
  j["generators"] = gens;
  j["relations"] = matrix_json(basis.jac_relations);
  j["structure"] = group_json(presentation_to_group(Presentation(basis.symbols.size(), basis.jac_relations)));
  return j;
}

Json divisor_class_json(const DivisorClass& c) {
  Json j;
  j["genus"] = c.regime().genus();
  j["degree"] = c.regime().degree();
  j["regime"] = to_string(c.regime().kind());
  j["generators"] = generator_basis(c.regime()).names();
  j["exponents"] = integers_json(c.exponents());
  j["class"] = c.to_string();
  return j;
}

Json disc_algebra_json(unsigned n, const ExactPoly& h) {
  const QuotientAlgebra algebra = cyclic_cover_algebra(n, h);
  const TraceForm form = trace_form(algebra);
  const ExactPoly disc = bareiss_determinant(form.matrix);
  mpz_class nn;
  mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
  const ExactPoly expected = ExactPoly(Rational(nn)) * h.pow(n - 1);

  Json j;
  j["n"] = n;
  j["h"] = h.to_string();
  j["basis"] = algebra.basis();
  Json rows = Json::array();
  for (std::size_t r = 0; r < form.matrix.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < form.matrix.cols(); ++c) row.push_back(form.matrix(r, c).to_string());
    rows.push_back(row);
  }
  j["trace_form"] = rows;
  j["discriminant"] = disc.to_string();
  j["sign"] = disc == expected ? 1 : (disc == -expected ? -1 : 0);
  j["matches_power_formula"] = disc == expected || disc == -expected;
  return j;
}

Json sweep_json(const SweepGrid& grid, const SweepSummary& s, bool list_all) {
  auto range = [](const IntRange& r) { return Json::array({r.lo, r.hi}); };
  auto entry = [](const SweepEntry& e) {
    Json j;
    j["h"] = e.params.h;
    j["g"] = e.params.g;
    j["n"] = e.params.n;
    j["d"] = e.d;
    j["verdict"] = to_string(e.outcome.verdict);
    if (e.outcome.computed) j["computed"] = e.outcome.computed->to_string();
    if (e.outcome.claimed) j["claimed"] = e.outcome.claimed->to_string();
    if (!e.outcome.detail.empty()) j["detail"] = e.outcome.detail;
    return j;
  };
  Json j;
  j["grid"] = Json{{"g", range(grid.g)}, {"n", range(grid.n)}, {"d", range(grid.d)}};
  j["tuples"] = s.total();
  j["matches"] = s.matches;
  j["mismatches"] = s.mismatches;
  j["not_covered"] = s.not_covered;
  Json bad = Json::array();
  for (const auto& e : s.entries)
    if (e.outcome.verdict == Verdict::Mismatch) bad.push_back(entry(e));
  j["mismatch_list"] = bad;
  if (list_all) {
    Json all = Json::array();
    for (const auto& e : s.entries) all.push_back(entry(e));
    j["entries"] = all;
  }
  return j;
}

Json document(const std::string& command, Json payload) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["payload"] = std::move(payload);
  return j;
}

}  // namespace cyclicpic::cli
