#include "cyclicpic/cli/app.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "cyclicpic/cli/render.hpp"
#include "cyclicpic/errors.hpp"

namespace cyclicpic::cli {

namespace {

// "a..b", or "a" for a single value.
IntRange parse_range(const std::string& text) {
  auto to_long = [&](std::string_view s) {
    long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || s.empty()) throw CLI::ValidationError("range", "malformed range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = to_long(text);
    return {v, v};
  }
  return {to_long(std::string_view(text).substr(0, dots)), to_long(std::string_view(text).substr(dots + 2))};
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

}  // namespace

int sweep_exit_code(const SweepSummary& summary, bool strict) {
  if (summary.mismatches > 0 || (strict && summary.not_covered > 0)) return kExitMismatch;
  return 0;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Picard groups of moduli of uniform cyclic covers", "cyclicpic"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"human", "machine"}));

  long h = 0, g = 0, n = 0, d = 0, k = 0;

  auto* pic_b = app.add_subcommand("pic-b", "Picard group of B_{h,g,n}");
  pic_b->add_option("h", h, "genus of the covering curve")->required();
  pic_b->add_option("g", g, "genus of the base curve")->required();
  pic_b->add_option("n", n, "degree of the cyclic cover")->required();

  auto* pic_jac = app.add_subcommand("pic-jac", "Generators and relations of Pic Jac_{d,g}");
  pic_jac->add_option("g", g, "genus")->required();
  pic_jac->add_option("d", d, "degree (>= 1)")->required();

  auto* cls = app.add_subcommand("class", "Exponent vector of det pi_*(L^n (x) omega^k)");
  cls->add_option("g", g, "genus")->required();
  cls->add_option("d", d, "degree (>= 1)")->required();
  cls->add_option("n", n, "power of L")->required();
  cls->add_option("k", k, "power of omega")->required();

  auto* disc_class = app.add_subcommand("disc-class", "Class of the discriminant locus in Pic Jac_{d,g}");
  disc_class->add_option("g", g, "genus")->required();
  disc_class->add_option("d", d, "degree (>= 1)")->required();
  disc_class->add_option("n", n, "degree of the cyclic cover (>= 2)")->required();

  unsigned rank = 0;
  std::string h_expr;
  auto* disc_alg = app.add_subcommand("disc-algebra", "Trace form and discriminant of R[x]/(x^n - h)");
  disc_alg->add_option("n", rank, "rank (>= 2)")->required()->check(CLI::Range(2u, 64u));
  disc_alg->add_option("h", h_expr, "polynomial expression for h")->required();

  std::string g_range, n_range, d_range;
  int jobs = 0;
  bool strict = false, list_all = false;
  auto* sweep = app.add_subcommand("sweep", "Compare presentation and closed-form groups over a grid");
  sweep->add_option("--g", g_range, "genus range a..b")->required();
  sweep->add_option("--n", n_range, "degree range a..b")->required();
  sweep->add_option("--d", d_range, "d range a..b")->required();
  sweep->add_option("--jobs", jobs, "parallel sweep width (0: OpenMP default)")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--strict", strict, "treat NotCovered as failure");
  sweep->add_flag("--list", list_all, "list every tuple, not only mismatches");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const Format format = format_name == "machine" ? Format::Machine : Format::Human;
  const std::string command = join(args);
  auto emit = [&](Json payload) { out << render(document(command, std::move(payload)), format); };

  try {
    if (*pic_b) {
      const CoverParams p{h, g, n};
      p.validate();
      try {
        emit(picard_report_json(analyze(p)));
      } catch (const UnsupportedCase& e) {
        emit(unsupported_report_json(p, degree_invariant(p), e.what()));
      }
      return 0;
    }
    if (*pic_jac) {
      emit(pic_jac_json(GenusRegime::jacobian(g, d)));
      return 0;
    }
    if (*cls) {
      emit(divisor_class_json(det_pushforward_class(GenusRegime::jacobian(g, d), n, k)));
      return 0;
    }
    if (*disc_class) {
      emit(divisor_class_json(discriminant_class(GenusRegime::jacobian(g, d), n)));
      return 0;
    }
    if (*disc_alg) {
      emit(disc_algebra_json(rank, parse_poly(h_expr)));
      return 0;
    }
    if (*sweep) {
      const SweepGrid grid{parse_range(g_range), parse_range(n_range), parse_range(d_range)};
      const SweepSummary summary = sweep_parallel(grid, jobs);
      emit(sweep_json(grid, summary, list_all));
      return sweep_exit_code(summary, strict);
    }
  } catch (const CLI::ValidationError& e) {
    return app.exit(e, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return 0;
}

}  // namespace cyclicpic::cli
