#pragma once

// Structured (key-ordered) documents for every CLI payload. Both the machine
// and the human renderings are produced from these trees.

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclicpic/disc_oracle.hpp"
#include "cyclicpic/picard_calc.hpp"
#include "cyclicpic/sweep.hpp"
#include "cyclicpic/theorem.hpp"

namespace cyclicpic::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& v);
Json integers_json(const std::vector<Integer>& v);
Json matrix_json(const IntegerMatrix& m);
Json group_json(const FgAbGroup& g);

Json picard_report_json(const PicardReport& r);
Json unsupported_report_json(const CoverParams& p, const DegreeInvariant& d, const std::string& reason);
Json pic_jac_json(const GenusRegime& regime);
Json divisor_class_json(const DivisorClass& c);
Json disc_algebra_json(unsigned n, const ExactPoly& h);
Json sweep_json(const SweepGrid& grid, const SweepSummary& s, bool list_all);

Json document(const std::string& command, Json payload);

}  // namespace cyclicpic::cli
