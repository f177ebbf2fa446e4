#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diosum/continued_fraction.hpp"
#include "diosum/rational.hpp"
#include "diosum/sums.hpp"

namespace diosum {

/// ln max(e, x): every logarithm in main terms and envelopes uses this.
double log_e(double x);

/// pi^2 / 6 rounded to double from a 128-bit evaluation.
double zeta2();

/// sum_{j=1}^J 1/j^2.
double inverse_square_sum(std::uint64_t J);

struct ReportTerm {
  std::string name;
  double value = 0;
  /// Set when value = multiple * pi^2/6, so sums of such terms can be
  /// compared exactly.
  std::optional<Rational> zeta2_multiple;
};

struct PredictionReport {
  std::string theorem;
  std::uint64_t N = 0;
  std::optional<std::size_t> K;
  double main = 0;
  std::vector<ReportTerm> second_order;
  /// Size of the error term with its unknown constant set to 1.
  double envelope = 0;

  std::optional<double> measured;
  std::optional<double> residual;             // measured - prediction()
  std::optional<double> normalized_residual;  // residual / envelope

  /// The lower-bound branch of the first-sum theorems: when it applies the
  /// sum is at least main + lower_extra - C * lower_envelope.
  bool lower_branch = false;
  double lower_extra = 0;
  double lower_envelope = 0;

  double second_order_total() const;
  double prediction() const;
};

/// Copy of `report` with the measured value and residuals filled in.
PredictionReport with_measured(PredictionReport report, double measured);

/// Continued-fraction data through index K + 1 for the block containing N.
ContinuedFractionData block_data(const IrrationalSpec& spec, std::uint64_t N,
                                 const PrecisionPolicy& policy = PrecisionPolicy::from_env());

// The cf-based predictions take K = cf.K() - 1 and throw BlockMismatch unless
// q_K <= N < q_{K+1}.

/// sum_dist: main 2N log N, envelope (a_{K+1}^{1/2} + log s_{K+1}) N.
PredictionReport predict_sum_dist(const ContinuedFractionData& cf, std::uint64_t N, const Rational& c);

/// sum_harmonic_dist: main (log N)^2, second order (pi^2/6) s_K and
/// a_{K+1} sum_{j <= N/q_K} 1/j^2.
PredictionReport predict_sum_harmonic(const ContinuedFractionData& cf, std::uint64_t N);

/// Badly approximable alpha: {2N log N with envelope N, (log N)^2 with
/// envelope log N}.
std::pair<PredictionReport, PredictionReport> predict_badly(std::uint64_t N);

/// Fractional-part sums; odd-indexed partial quotients drive the frac
/// variant and even-indexed ones the complement.
PredictionReport predict_frac(const ContinuedFractionData& cf, std::uint64_t N, FracVariant variant, Weight weight,
                              const Rational& c = Rational(1, 2));

/// Shifted sums: 2N log N with envelope N log log N, or (log N)^2 with
/// envelope log N log log N.
PredictionReport predict_shifted(std::uint64_t N, Weight weight = Weight::one);

struct MultidimPrediction {
  PredictionReport sum;       // d 2^{d+1} N^d log N, envelope N^d
  PredictionReport harmonic;  // d^2 2^d (log N)^2, envelope log N
  std::optional<PredictionReport> count;  // 2^{d+1} t N^d
};

MultidimPrediction predict_multidim(unsigned d, std::uint64_t N, std::optional<Rational> t = std::nullopt);

}  // namespace diosum
