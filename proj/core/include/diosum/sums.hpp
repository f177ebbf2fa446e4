#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "diosum/ball.hpp"
#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"
#include "diosum/rational.hpp"

namespace diosum {

enum class Weight {
  one,        // 1
  inverse_n,  // 1/n
  linf,       // ||n||_inf^-d, lattice sums only
};

enum class FracVariant { frac, complement };
enum class ShiftMode { exclude_min, full };

struct SumOptions {
  PrecisionPolicy policy = PrecisionPolicy::from_env();
  /// Every term, and hence the total, is enclosed to this relative width.
  double rel_tolerance = 1e-9;
};

struct SumResult {
  BallReal enclosure;
  std::uint64_t N = 0;
  std::string variant;
  std::optional<Rational> cutoff;  // c, the terms kept satisfy value >= c/N
  std::optional<Rational> shift;   // beta
  std::optional<std::uint64_t> excluded;
  std::uint64_t terms = 0;
  unsigned precision = 128;  // largest working precision any term needed
};

/// sum over n <= N with ||n alpha|| >= c/N of 1/||n alpha||.
SumResult sum_dist(const IrrationalSpec& spec, std::uint64_t N, const Rational& c, const SumOptions& opts = {});

/// sum over n <= N of 1/(n ||n alpha||).
SumResult sum_harmonic_dist(const IrrationalSpec& spec, std::uint64_t N, const SumOptions& opts = {});

/// sum of weight/{n alpha} (or weight/(1 - {n alpha})) over n <= N, keeping
/// only terms whose denominator is >= c/N when a cutoff is given. A cutoff is
/// required for weight one.
SumResult sum_frac(const IrrationalSpec& spec, std::uint64_t N, std::optional<Rational> c, FracVariant variant,
                   Weight weight, const SumOptions& opts = {});

/// The n in 1..N minimizing ||n alpha + beta|| (or {n alpha + beta} when
/// `fractional` is set). Distinct indices never tie for irrational alpha.
std::uint64_t find_min_index(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N,
                             bool fractional = false, const SumOptions& opts = {});

/// sum over n <= N of weight/||n alpha + beta|| (or weight/{n alpha + beta}),
/// skipping the minimizing index in exclude_min mode.
SumResult sum_shifted(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N, ShiftMode mode,
                      Weight weight, bool fractional = false, const SumOptions& opts = {});

/// min over 3 <= n <= N of n log log n ||n alpha + beta|| with the
/// log x = ln max(e, x) convention; the finite-range evidence for the
/// hypothesis of the shifted-sum asymptotics. Requires N >= 3.
double shifted_hypothesis_evidence(const IrrationalSpec& spec, const Rational& beta, std::uint64_t N,
                                   const SumOptions& opts = {});

/// sum over n in [-N, N]^d \ {0} of weight(n)/||n . alpha||, weight one or
/// linf. Pairs n with -n unless `half_lattice` is false.
SumResult sum_multidim(std::span<const IrrationalSpec> specs, std::uint64_t N, Weight weight,
                       const SumOptions& opts = {}, bool half_lattice = true);

/// Sorted n <= N with ||n alpha|| < 1/(2n).
std::vector<std::uint64_t> small_dist_indices(const IrrationalSpec& spec, std::uint64_t N,
                                              const SumOptions& opts = {});

}  // namespace diosum
