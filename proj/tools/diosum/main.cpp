// diosum: command-line front end. Exit codes: 0 ok, 2 usage, 3 precision
// exhaustion, 4 block mismatch.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include <diosum/errors.hpp>

#include "commands.hpp"
#include "options.hpp"

using namespace diosum::cli;

namespace {

void add_grid(CLI::App* sub, GridArgs& grid) {
  auto* list = sub->add_option("--N", grid.n_list, "N values, comma separated (1e6 allowed)");
  auto* geom = sub->add_option("--N-geom", grid.n_geom, "geometric grid a:b:xR");
  list->excludes(geom);
}

void add_format(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "csv (default) or json, one object per line")
      ->check(CLI::IsMember({"csv", "json"}));
}

int fail(int code, const std::string& msg) {
  fmt::print(stderr, "diosum: {}\n", msg);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    apply_config(args);
  } catch (const CLI::Error& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::exception& e) {
    return fail(kExitUsage, e.what());
  }

  CLI::App app{"Certified sums of 1/||n alpha|| and relatives, their predicted asymptotics, and Monte Carlo "
               "statistics of continued fractions.",
               "diosum"};
  app.set_version_flag("--version", DIOSUM_VERSION);
  app.require_subcommand(1);
  std::string config_placeholder;
  app.add_option("--config", config_placeholder,
                 "flat key = value file, keys are option names without dashes; flags given on the command line win");

  std::string format = "csv";

  ExpandArgs expand;
  auto* cmd_expand = app.add_subcommand("expand", "partial quotients, convergents and partial sums s_k");
  cmd_expand->add_option("--alpha", expand.alpha, "phi | sqrt2 | e | cbrt2 | cbrt4 | surd:P,D,Q | root:M,k | "
                                                  "digits:A0;A1,...[;P1,...] | uniform:SEED")
      ->required();
  cmd_expand->add_option("--terms", expand.terms, "largest index k")->capture_default_str();
  add_format(cmd_expand, format);

  SumArgs sum;
  auto* cmd_sum = app.add_subcommand("sum", "certified sums over an N grid");
  cmd_sum->add_option("--family", sum.family, "dist | harmonic | frac | cofrac | shifted | multidim")->required();
  cmd_sum->add_option("--alpha", sum.alpha, "spec, repeatable or comma list; multidim uses all of them")->required();
  add_grid(cmd_sum, sum.grid);
  cmd_sum->add_option("--c", sum.c, "rational cutoff c: terms need a denominator >= c/N (default 1/2)");
  cmd_sum->add_option("--weight", sum.weight, "one | inverse-n | linf");
  cmd_sum->add_option("--beta", sum.beta, "rational shift (family shifted)");
  cmd_sum->add_option("--mode", sum.mode, "exclude-min | full (family shifted)")->capture_default_str();
  cmd_sum->add_flag("--fractional", sum.fractional, "shifted sums of 1/{n alpha + beta}");
  add_format(cmd_sum, format);

  CompareArgs cmp;
  auto* cmd_compare = app.add_subcommand("compare", "measured sums against predicted main and second-order terms");
  cmd_compare->add_option("--theorem", cmp.theorem, "thm1.1 | thm2.1 | thm2.2 | thm3.1 | thm3.2 | thm3.3")
      ->required();
  cmd_compare->add_option("--alpha", cmp.alpha, "spec, repeatable or comma list; thm3.3 uses all of them")->required();
  add_grid(cmd_compare, cmp.grid);
  cmd_compare->add_option("--c", cmp.c, "rational cutoff (default 1/2)");
  cmd_compare->add_option("--weight", cmp.weight, "one | inverse-n | linf");
  cmd_compare->add_option("--beta", cmp.beta, "rational shift (thm3.2)");
  cmd_compare->add_option("--t", cmp.t, "rational threshold; thm3.3 then compares counts");
  cmd_compare->add_option("--variant", cmp.variant, "frac | cofrac (thm3.1)")->capture_default_str();
  cmd_compare->add_option("--K", cmp.K, "pin the block index instead of locating it; rows outside it report "
                                        "block-mismatch");
  add_format(cmd_compare, format);

  McArgs mc;
  auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo statistics over uniform samples uniform:SEED");
  cmd_mc->add_option("--samples", mc.samples, "number of samples")->capture_default_str();
  cmd_mc->add_option("--seed0", mc.seed0, "first seed; samples use seed0, seed0 + 1, ...")->capture_default_str();
  cmd_mc->add_option("--N", mc.N, "N for the S1/(2N ln N) and S2/(ln N)^2 ratios");
  cmd_mc->add_option("--c", mc.c, "rational cutoff for S1")->capture_default_str();
  cmd_mc->add_option("--K", mc.K, "K for ln q_K / K and the trimmed sum statistic");
  cmd_mc->add_option("--stat", mc.stat, "auto | erdos | khinchin-levy | diamond-vaaler | metric")
      ->capture_default_str();
  add_format(cmd_mc, format);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt_choice = format == "json" ? Format::json : Format::csv;
  try {
    if (*cmd_expand) return run_expand(expand, fmt_choice);
    if (*cmd_sum) return run_sum(sum, fmt_choice);
    if (*cmd_compare) return run_compare(cmp, fmt_choice);
    return run_mc(mc, fmt_choice);
  } catch (const diosum::PrecisionExhausted& e) {
    return fail(kExitPrecision, fmt::format("precision exhausted: {}", e.what()));
  } catch (const diosum::RationalDependence& e) {
    return fail(kExitPrecision, e.what());
  } catch (const diosum::BlockMismatch& e) {
    return fail(kExitBlockMismatch, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::overflow_error& e) {
    return fail(kExitUsage, e.what());
  } catch (const std::exception& e) {
    return fail(1, e.what());
  }
}
