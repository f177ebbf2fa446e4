#include "diosum/sums.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "diosum/errors.hpp"
#include "diosum/fixed_orbit.hpp"
#include "diosum/real_engine.hpp"
#include "term_kernel.hpp"

namespace diosum {
namespace {

using detail::KernelTotals;
using detail::TermRule;
using detail::ValueKind;

BallReal enclosure_of(const BigInt& lo, const BigInt& hi) {
  if (hi == 0) return BallReal(64);
  return BallReal::from_scaled_bounds(lo, hi, -detail::kFracBits);
}

void check_width(const BallReal& b, double tol) {
  // the per-term budget already guarantees this; the check guards the
  // accumulation itself
  if (b.relative_radius() > tol)
    throw Error("sum enclosure wider than the relative tolerance: " + b.to_string(10));
}

SumResult finish(const KernelTotals& t, std::uint64_t N, std::string variant, const SumOptions& opts) {
  SumResult r;
  r.enclosure = enclosure_of(t.lo, t.hi);
  check_width(r.enclosure, opts.rel_tolerance);
  r.N = N;
  r.variant = std::move(variant);
  r.terms = t.terms;
  r.precision = t.precision;
  return r;
}

void require_n(std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
}

Rational cutoff_threshold(const Rational& c, std::uint64_t N) {
  if (sgn(c) <= 0) throw std::invalid_argument("cutoff c must be positive");
  return c / Rational(to_bigint(N));
}

double log_conv(double x) { return std::log(std::max(x, std::exp(1.0))); }

}  // namespace

SumResult sum_dist(const IrrationalSpec& spec, std::uint64_t N, const Rational& c, const SumOptions& opts) {
  require_n(N);
  TermRule rule;
  rule.threshold = cutoff_threshold(c, N);
  auto r = finish(detail::sum_terms(spec, N, rule, opts.rel_tolerance, opts.policy), N, "dist", opts);
  r.cutoff = c;
  return r;
}

SumResult sum_harmonic_dist(const IrrationalSpec& spec, std::uint64_t N, const SumOptions& opts) {
  require_n(N);
  TermRule rule;
  rule.inverse_n = true;
  return finish(detail::sum_terms(spec, N, rule, opts.rel_tolerance, opts.policy), N, "harmonic", opts);
}

SumResult sum_frac(const IrrationalSpec& spec, std::uint64_t N, std::optional<Rational> c, FracVariant variant,
                   Weight weight, const SumOptions& opts) {
  require_n(N);
  if (weight == Weight::linf) throw std::invalid_argument("linf weight applies to lattice sums only");
  if (weight == Weight::one && !c) throw std::invalid_argument("weight one needs a cutoff c");
  TermRule rule;
  rule.value = variant == FracVariant::frac ? ValueKind::frac : ValueKind::complement;
  rule.inverse_n = weight == Weight::inverse_n;
  if (c) rule.threshold = cutoff_threshold(*c, N);
  std::string tag = variant == FracVariant::frac ? "frac" : "cofrac";
  if (rule.inverse_n) tag += "-harmonic";
  auto r = finish(detail::sum_terms(spec, N, rule, opts.rel_tolerance, opts.policy), N, tag, opts);
  r.cutoff = c;
  return r;
}

std::uint64_t find_min_index(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N, bool fractional,
                             const SumOptions& opts) {
  require_n(N);
  return detail::argmin_value(spec, N, fractional ? ValueKind::frac : ValueKind::dist, beta, opts.policy);
}

SumResult sum_shifted(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N, ShiftMode mode,
                      Weight weight, bool fractional, const SumOptions& opts) {
  require_n(N);
  if (weight == Weight::linf) throw std::invalid_argument("linf weight applies to lattice sums only");
  TermRule rule;
  rule.value = fractional ? ValueKind::frac : ValueKind::dist;
  rule.inverse_n = weight == Weight::inverse_n;
  rule.beta = beta;
  if (mode == ShiftMode::exclude_min) rule.exclude = find_min_index(spec, beta, N, fractional, opts);
  std::string tag = fractional ? "shifted-frac" : "shifted";
  if (rule.inverse_n) tag += "-harmonic";
  auto r = finish(detail::sum_terms(spec, N, rule, opts.rel_tolerance, opts.policy), N, tag, opts);
  r.shift = beta;
  r.excluded = rule.exclude;
  return r;
}

double shifted_hypothesis_evidence(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N,
                                   const SumOptions& opts) {
  if (N < 3) throw std::invalid_argument("N must be >= 3");
  const FixedOrbit orbit(fixed_alpha(spec, opts.policy), fixed_from_rational(frac(beta)));
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t n = 3; n <= N; ++n) {
    double v;
    if (auto d = fixed_dist(orbit.at(n))) {
      v = fixed::scaled_down(d->lo);
    } else {
      v = dist_nearest(n, spec, beta, opts.policy).mid_double();
    }
    const double x = static_cast<double>(n);
    best = std::min(best, x * log_conv(log_conv(x)) * v);
  }
  return best;
}

SumResult sum_multidim(std::span<const IrrationalSpec> specs, std::uint64_t N, Weight weight, const SumOptions& opts,
                       bool half_lattice) {
  require_n(N);
  if (weight == Weight::inverse_n) throw std::invalid_argument("lattice sums take weight one or linf");
  detail::LatticeRule rule;
  rule.linf_weight = weight == Weight::linf;
  rule.half_lattice = half_lattice;
  auto t = detail::lattice_terms(specs, N, rule, opts.rel_tolerance, opts.policy);
  SumResult r;
  r.enclosure = enclosure_of(t.lo, t.hi);
  check_width(r.enclosure, opts.rel_tolerance);
  r.N = N;
  r.variant = rule.linf_weight ? "multidim-linf" : "multidim";
  r.terms = t.terms;
  r.precision = t.precision;
  return r;
}

std::vector<std::uint64_t> small_dist_indices(const IrrationalSpec& spec, std::uint64_t N, const SumOptions& opts) {
  require_n(N);
  const FixedOrbit orbit(fixed_alpha(spec, opts.policy), FixedReal{});
  constexpr u128 half = static_cast<u128>(1) << 127;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= N; ++n) {
    // threshold 1/(2n) = 2^127/n scaled by 2^128
    FixedThreshold th;
    th.floor = half / n;
    th.exact = half % n == 0;
    Side side = Side::unknown;
    if (auto v = fixed_dist(orbit.at(n))) side = classify(*v, th);
    if (side == Side::unknown) {
      const Rational t(BigInt(1), to_bigint(2 * n));
      auto d = compare_threshold([&](unsigned p) { return dist_nearest_at(n, spec, 0, p, opts.policy); }, t,
                                 opts.policy);
      side = d.outcome == Outcome::below ? Side::below : Side::above;
    }
    if (side == Side::below) out.push_back(n);
  }
  return out;
}

}  // namespace diosum
