#include "commands.hpp"

#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include <diosum/continued_fraction.hpp>
#include <diosum/counting.hpp>
#include <diosum/errors.hpp>
#include <diosum/metric.hpp>
#include <diosum/predictions.hpp>
#include <diosum/rational.hpp>
#include <diosum/sums.hpp>

#include "options.hpp"

namespace diosum::cli {

namespace {

std::string joined_names(const std::vector<IrrationalSpec>& specs) {
  std::string out;
  for (std::size_t i = 0; i < specs.size(); ++i) out += (i ? "," : "") + specs[i].name();
  return out;
}

std::optional<Rational> optional_rational(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return parse_rational(*text);
}

void usage(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

std::vector<std::uint64_t> GridArgs::values() const {
  if (!n_list.empty() && !n_geom.empty()) usage("give either --N or --N-geom, not both");
  if (!n_list.empty()) return parse_n_list(n_list);
  if (!n_geom.empty()) return parse_n_geom(n_geom);
  usage("--N or --N-geom is required");
  return {};
}

// expand

int run_expand(const ExpandArgs& args, Format format) {
  const auto specs = parse_specs(args.alpha);
  TableWriter out(format, {"alpha", "k", "a", "p", "q", "s"});
  for (const auto& spec : specs) {
    const auto cf = cf_data(spec, args.terms);
    for (std::size_t k = 0; k <= cf.K(); ++k) {
      out.write(Row()
                    .set("alpha", spec.name())
                    .set("k", std::uint64_t{k})
                    .set("a", cf.digits[k])
                    .set("p", cf.p[k].get_str())
                    .set("q", cf.q[k].get_str())
                    .set("s", cf.s[k].get_str()));
    }
  }
  return kExitOk;
}

// sum

int run_sum(const SumArgs& args, Format format) {
  const auto specs = parse_specs(args.alpha);
  const auto grid = args.grid.values();
  const auto& family = args.family;
  const auto c = optional_rational(args.c);
  const auto beta = optional_rational(args.beta);

  Weight weight = Weight::one;
  if (family == "harmonic") weight = Weight::inverse_n;
  if (args.weight) weight = parse_weight(*args.weight);

  if (family == "dist" || family == "harmonic") {
    if (weight != (family == "dist" ? Weight::one : Weight::inverse_n))
      usage("--weight does not apply to family " + family);
  } else if (family == "frac" || family == "cofrac" || family == "shifted") {
    if (weight == Weight::linf) usage("weight linf is for family multidim");
  } else if (family == "multidim") {
    if (weight == Weight::inverse_n) usage("family multidim takes weight one or linf");
  } else {
    usage("unknown family " + family + " (dist, harmonic, frac, cofrac, shifted, multidim)");
  }
  if (family == "shifted" && !beta) usage("family shifted needs --beta");
  if (args.mode != "exclude-min" && args.mode != "full") usage("--mode is exclude-min or full");

  TableWriter out(format, {"family", "variant", "alpha", "N", "value", "width", "c", "beta", "weight", "mode", "excluded",
                           "terms", "precision"});
  auto emit = [&](const std::string& alpha, const SumResult& r) {
    Row row;
    row.set("family", family)
        .set("variant", r.variant)
        .set("alpha", alpha)
        .set("N", r.N)
        .set("value", r.enclosure.mid_double())
        .set("width", 2 * r.enclosure.rad_double())
        .set("weight", weight_name(weight))
        .set("excluded", maybe(r.excluded))
        .set("terms", r.terms)
        .set("precision", std::uint64_t{r.precision});
    if (r.cutoff) row.set("c", to_string(*r.cutoff));
    if (r.shift) row.set("beta", to_string(*r.shift));
    if (family == "shifted") row.set("mode", args.mode);
    out.write(row);
  };

  if (family == "multidim") {
    for (std::uint64_t N : grid) emit(joined_names(specs), sum_multidim(specs, N, weight));
    return kExitOk;
  }
  for (const auto& spec : specs) {
    for (std::uint64_t N : grid) {
      if (family == "dist") {
        emit(spec.name(), sum_dist(spec, N, c.value_or(Rational(1, 2))));
      } else if (family == "harmonic") {
        emit(spec.name(), sum_harmonic_dist(spec, N));
      } else if (family == "frac" || family == "cofrac") {
        const auto variant = family == "frac" ? FracVariant::frac : FracVariant::complement;
        const auto cutoff = weight == Weight::one ? std::optional(c.value_or(Rational(1, 2))) : c;
        emit(spec.name(), sum_frac(spec, N, cutoff, variant, weight));
      } else {
        const auto mode = args.mode == "full" ? ShiftMode::full : ShiftMode::exclude_min;
        emit(spec.name(), sum_shifted(spec, *beta, N, mode, weight, args.fractional));
      }
    }
  }
  return kExitOk;
}

// compare

int run_compare(const CompareArgs& args, Format format) {
  const auto specs = parse_specs(args.alpha);
  const auto grid = args.grid.values();
  const auto& thm = args.theorem;
  const auto c = optional_rational(args.c).value_or(Rational(1, 2));
  const auto beta = optional_rational(args.beta);
  const auto t = optional_rational(args.t);

  Weight weight = thm == "thm3.1" ? Weight::inverse_n : Weight::one;
  if (args.weight) weight = parse_weight(*args.weight);

  if (thm != "thm1.1" && thm != "thm2.1" && thm != "thm2.2" && thm != "thm3.1" && thm != "thm3.2" && thm != "thm3.3")
    usage("unknown theorem " + thm + " (thm1.1, thm2.1, thm2.2, thm3.1, thm3.2, thm3.3)");
  if (thm == "thm3.2" && !beta) usage("thm3.2 needs --beta");
  if (thm == "thm3.3" ? weight == Weight::inverse_n : weight == Weight::linf)
    usage("weight " + weight_name(weight) + " does not apply to " + thm);
  if ((thm == "thm2.1" || thm == "thm2.2") && args.weight) usage("--weight does not apply to " + thm);
  if (args.variant != "frac" && args.variant != "cofrac") usage("--variant is frac or cofrac");
  const auto variant = args.variant == "frac" ? FracVariant::frac : FracVariant::complement;

  TableWriter out(format, {"theorem", "alpha", "N", "K", "measured", "main", "second_order", "residual", "envelope",
                           "normalized_residual", "lower_branch", "status"});
  bool mismatch = false;

  auto emit = [&](const std::string& alpha, std::uint64_t N, const std::optional<PredictionReport>& report,
                  double measured) {
    Row row;
    row.set("theorem", thm).set("alpha", alpha).set("N", N).set("measured", measured);
    if (report) {
      const auto r = with_measured(*report, measured);
      if (r.K) row.set("K", std::uint64_t{*r.K});
      row.set("main", r.main)
          .set("second_order", r.second_order_total())
          .set("residual", maybe(r.residual))
          .set("envelope", r.envelope)
          .set("normalized_residual", maybe(r.normalized_residual))
          .set("lower_branch", r.lower_branch)
          .set("status", "ok");
    } else {
      if (args.K) row.set("K", std::uint64_t{*args.K});
      row.set("status", "block-mismatch");
      mismatch = true;
    }
    out.write(row);
  };

  if (thm == "thm3.3") {
    const auto d = static_cast<unsigned>(specs.size());
    for (std::uint64_t N : grid) {
      const auto p = predict_multidim(d, N, t);
      if (t) {
        emit(joined_names(specs), N, *p.count, static_cast<double>(count_multidim(specs, N, *t)));
      } else {
        const auto& report = weight == Weight::one ? p.sum : p.harmonic;
        emit(joined_names(specs), N, report, sum_multidim(specs, N, weight).enclosure.mid_double());
      }
    }
    return kExitOk;
  }

  for (const auto& spec : specs) {
    for (std::uint64_t N : grid) {
      auto block = [&] { return args.K ? cf_data(spec, *args.K + 1) : block_data(spec, N); };
      std::optional<PredictionReport> report;
      double measured = 0;
      try {
        if (thm == "thm1.1") {
          const auto [first, second] = predict_badly(N);
          report = weight == Weight::one ? first : second;
          measured = weight == Weight::one ? sum_dist(spec, N, c).enclosure.mid_double()
                                           : sum_harmonic_dist(spec, N).enclosure.mid_double();
        } else if (thm == "thm2.1") {
          report = predict_sum_dist(block(), N, c);
        } else if (thm == "thm2.2") {
          report = predict_sum_harmonic(block(), N);
        } else if (thm == "thm3.1") {
          report = predict_frac(block(), N, variant, weight, c);
        } else {
          report = predict_shifted(N, weight);
        }
      } catch (const BlockMismatch&) {
        report.reset();
      }
      if (thm == "thm2.1") {
        measured = sum_dist(spec, N, c).enclosure.mid_double();
      } else if (thm == "thm2.2") {
        measured = sum_harmonic_dist(spec, N).enclosure.mid_double();
      } else if (thm == "thm3.1") {
        const auto cutoff = weight == Weight::one ? std::optional(c) : std::nullopt;
        measured = sum_frac(spec, N, cutoff, variant, weight).enclosure.mid_double();
      } else if (thm == "thm3.2") {
        measured = sum_shifted(spec, *beta, N, ShiftMode::exclude_min, weight).enclosure.mid_double();
      }
      emit(spec.name(), N, report, measured);
    }
  }
  return mismatch ? kExitBlockMismatch : kExitOk;
}

// mc

int run_mc(const McArgs& args, Format format) {
  const auto& stat = args.stat;
  if (stat != "auto" && stat != "erdos" && stat != "khinchin-levy" && stat != "diamond-vaaler" && stat != "metric")
    usage("unknown --stat " + stat + " (erdos, khinchin-levy, diamond-vaaler, metric)");
  const bool erdos = stat == "erdos" || (stat == "auto" && args.N);
  const bool metric = stat == "khinchin-levy" || stat == "diamond-vaaler" || stat == "metric" || (stat == "auto" && args.K);
  if (!erdos && !metric) usage("mc needs --N (erdos statistics) or --K (metric statistics)");
  if (erdos && !args.N) usage("--stat erdos needs --N");
  if (metric && !args.K) usage("--stat " + stat + " needs --K");
  if (args.samples == 0) usage("--samples must be positive");

  std::vector<std::uint64_t> seeds(args.samples);
  std::iota(seeds.begin(), seeds.end(), args.seed0);

  TableWriter out(format, {"kind", "statistic", "seed", "value", "status", "count", "mean", "median", "q1", "q3",
                           "min", "max", "reference"});
  auto sample = [&](const char* name, std::uint64_t seed, bool ok, double value, const std::string& reason) {
    Row row;
    row.set("kind", "sample").set("statistic", name).set("seed", seed);
    if (ok) {
      row.set("value", value).set("status", "ok");
    } else {
      row.set("status", "skipped: " + reason);
    }
    out.write(row);
  };
  auto aggregate = [&](const char* name, const Summary& s, double reference) {
    Row row;
    row.set("kind", "aggregate").set("statistic", name).set("count", std::uint64_t{s.count}).set("reference", reference);
    if (s.count) {
      row.set("mean", s.mean).set("median", s.median).set("q1", s.q1).set("q3", s.q3).set("min", s.min).set("max", s.max);
    }
    out.write(row);
  };

  if (erdos) {
    const auto r = erdos_samples(seeds, parse_count(*args.N), parse_rational(args.c));
    for (const auto& s : r.samples) {
      if (!s.ok) fmt::print(stderr, "diosum: skipped seed {}: {}\n", s.seed, s.skip_reason);
      sample("s1-ratio", s.seed, s.ok, s.s1_ratio, s.skip_reason);
      sample("s2-ratio", s.seed, s.ok, s.s2_ratio, s.skip_reason);
    }
    aggregate("s1-ratio", r.s1_ratio, 1.0);
    aggregate("s2-ratio", r.s2_ratio, 1.0);
  }
  if (metric) {
    const bool kl = stat != "diamond-vaaler";
    const bool dv = stat != "khinchin-levy";
    const auto r = metric_stats(seeds, *args.K);
    for (const auto& s : r.samples) {
      if (!s.ok) fmt::print(stderr, "diosum: skipped seed {}: {}\n", s.seed, s.skip_reason);
      if (kl) sample("khinchin-levy", s.seed, s.ok, s.khinchin_levy, s.skip_reason);
      if (dv) sample("diamond-vaaler", s.seed, s.ok, s.diamond_vaaler, s.skip_reason);
    }
    if (kl) aggregate("khinchin-levy", r.khinchin_levy, kKhinchinLevy);
    if (dv) aggregate("diamond-vaaler", r.diamond_vaaler, kDiamondVaaler);
  }
  return kExitOk;
}

}  // namespace diosum::cli
