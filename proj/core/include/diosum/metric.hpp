#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diosum/precision.hpp"
#include "diosum/rational.hpp"
#include "diosum/sums.hpp"

namespace diosum {

/// pi^2 / (12 ln 2), the almost-sure limit of ln q_k / k.
inline constexpr double kKhinchinLevy = 1.1865691104156254;
/// 1 / ln 2, the almost-sure limit of trimmed partial-quotient sums over K ln K.
inline constexpr double kDiamondVaaler = 1.4426950408889634;

/// A positive nondecreasing function on (0, inf).
class PhiFunction {
 public:
  /// k^p, p > 0.
  static PhiFunction power(double p);
  /// k (log k)^{1+eps} with log x = ln max(e, x).
  static PhiFunction log_power(double eps);
  /// Piecewise-linear through (x, y) samples, constant outside their range.
  /// Throws std::invalid_argument unless x is strictly increasing and y is
  /// positive and nondecreasing.
  static PhiFunction table(std::vector<std::pair<double, double>> points);

  double operator()(double k) const;

  /// Whether sum 1/phi(k) converges; nullopt for tables.
  std::optional<bool> reciprocal_sum_converges() const;

  std::string name() const;

 private:
  enum class Family { power, log_power, table };
  PhiFunction(Family f, double param) : family_(f), param_(param) {}
  Family family_;
  double param_;
  std::vector<std::pair<double, double>> points_;
};

struct AeEnvelope {
  double sum_dist;   // N phi(log N)^{1/2}
  double harmonic;   // phi(log N) + log N log log N
  std::optional<bool> convergent;  // which branch of the a.e. statement applies
};

AeEnvelope ae_envelope(const PhiFunction& phi, std::uint64_t N);

struct Summary {
  std::size_t count = 0;
  double mean = 0, median = 0, q1 = 0, q3 = 0, min = 0, max = 0;
};

/// Order statistics use linear interpolation between closest ranks.
Summary summarize(std::vector<double> values);

struct MetricSample {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string skip_reason;
  double khinchin_levy = 0;   // ln q_K / K
  double diamond_vaaler = 0;  // (s_K - max a_k) / (K ln K)
  std::uint64_t exceedances = 0;  // |{k <= K : a_k >= phi(k)}|
};

struct MetricReport {
  std::size_t K = 0;
  std::vector<MetricSample> samples;  // ordered as the seeds
  Summary khinchin_levy;
  Summary diamond_vaaler;
  Summary exceedances;
};

/// Partial-quotient statistics of uniform samples, one per seed.
MetricReport metric_stats(std::span<const std::uint64_t> seeds, std::size_t K,
                          const PhiFunction& phi = PhiFunction::power(2),
                          const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct ErdosSample {
  std::uint64_t seed = 0;
  bool ok = false;
  std::string skip_reason;
  double s1 = 0;  // sum over ||n alpha|| >= c/N of 1/||n alpha||
  double s2 = 0;  // sum of 1/(n ||n alpha||)
  double s1_ratio = 0;  // s1 / (2 N log N)
  double s2_ratio = 0;  // s2 / (log N)^2
};

struct ErdosReport {
  std::uint64_t N = 0;
  Rational c;
  std::vector<ErdosSample> samples;
  Summary s1_ratio;
  Summary s2_ratio;
};

ErdosReport erdos_samples(std::span<const std::uint64_t> seeds, std::uint64_t N, const Rational& c,
                          const SumOptions& opts = {});

}  // namespace diosum
