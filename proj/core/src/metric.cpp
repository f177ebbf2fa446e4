#include "diosum/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "diosum/continued_fraction.hpp"
#include "diosum/errors.hpp"
#include "diosum/irrational.hpp"
#include "diosum/predictions.hpp"

namespace diosum {

PhiFunction PhiFunction::power(double p) {
  if (!(p > 0)) throw std::invalid_argument("power family needs p > 0");
  return {Family::power, p};
}

PhiFunction PhiFunction::log_power(double eps) {
  if (!(eps > -1)) throw std::invalid_argument("log-power family needs eps > -1");
  return {Family::log_power, eps};
}

PhiFunction PhiFunction::table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw std::invalid_argument("phi table is empty");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].second > 0)) throw std::invalid_argument("phi table values must be positive");
    if (i > 0 && !(points[i].first > points[i - 1].first))
      throw std::invalid_argument("phi table arguments must be strictly increasing");
    if (i > 0 && points[i].second < points[i - 1].second)
      throw std::invalid_argument("phi table is not nondecreasing");
  }
  PhiFunction f(Family::table, 0);
  f.points_ = std::move(points);
  return f;
}

double PhiFunction::operator()(double k) const {
  switch (family_) {
    case Family::power: return std::pow(k, param_);
    case Family::log_power: return k * std::pow(log_e(k), 1 + param_);
    case Family::table: break;
  }
  if (k <= points_.front().first) return points_.front().second;
  if (k >= points_.back().first) return points_.back().second;
  auto it = std::upper_bound(points_.begin(), points_.end(), k,
                             [](double x, const std::pair<double, double>& p) { return x < p.first; });
  const auto& [x1, y1] = *it;
  const auto& [x0, y0] = *(it - 1);
  return y0 + (y1 - y0) * (k - x0) / (x1 - x0);
}

std::optional<bool> PhiFunction::reciprocal_sum_converges() const {
  switch (family_) {
    case Family::power: return param_ > 1;
    case Family::log_power: return param_ > 0;
    case Family::table: return std::nullopt;
  }
  return std::nullopt;
}

std::string PhiFunction::name() const {
  switch (family_) {
    case Family::power: return "k^" + std::to_string(param_);
    case Family::log_power: return "k*log(k)^(1+" + std::to_string(param_) + ")";
    case Family::table: return "table(" + std::to_string(points_.size()) + " points)";
  }
  return {};
}

AeEnvelope ae_envelope(const PhiFunction& phi, std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const double l = log_e(static_cast<double>(N));
  const double p = phi(l);
  return {static_cast<double>(N) * std::sqrt(p), p + l * log_e(l), phi.reciprocal_sum_converges()};
}

Summary summarize(std::vector<double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  auto quantile = [&](double q) {
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto i = static_cast<std::size_t>(pos);
    const double frac = pos - static_cast<double>(i);
    if (i + 1 >= values.size()) return values.back();
    return values[i] + frac * (values[i + 1] - values[i]);
  };
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  s.median = quantile(0.5);
  s.q1 = quantile(0.25);
  s.q3 = quantile(0.75);
  s.min = values.front();
  s.max = values.back();
  return s;
}

namespace {

double log_of(const BigInt& z) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(m) + static_cast<double>(exp) * std::log(2.0);
}

MetricSample metric_sample(std::uint64_t seed, std::size_t K, const PhiFunction& phi, const PrecisionPolicy& policy) {
  MetricSample s;
  s.seed = seed;
  std::vector<std::int64_t> digits;
  try {
    digits = expand(IrrationalSpec::lazy_uniform(seed), K, policy);
  } catch (const PrecisionExhausted& e) {
    s.skip_reason = e.what();
    return s;
  } catch (const std::overflow_error& e) {
    s.skip_reason = e.what();
    return s;
  }
  BigInt q_prev = 1, q = digits[1], sum = digits[1];
  std::int64_t max = digits[1];
  for (std::size_t k = 1; k <= K; ++k) {
    if (k >= 2) {
      BigInt next = q * static_cast<long>(digits[k]) + q_prev;
      q_prev.swap(q);
      q.swap(next);
      sum += static_cast<long>(digits[k]);
      max = std::max(max, digits[k]);
    }
    if (static_cast<double>(digits[k]) >= phi(static_cast<double>(k))) ++s.exceedances;
  }
  const double kd = static_cast<double>(K);
  s.khinchin_levy = log_of(q) / kd;
  s.diamond_vaaler = BigInt(sum - max).get_d() / (kd * std::log(kd));
  s.ok = true;
  return s;
}

}  // namespace

MetricReport metric_stats(std::span<const std::uint64_t> seeds, std::size_t K, const PhiFunction& phi,
                          const PrecisionPolicy& policy) {
  if (K < 10) throw std::invalid_argument("metric statistics need K >= 10");
  std::vector<std::uint64_t> sorted(seeds.begin(), seeds.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("seeds must be distinct");

  MetricReport r;
  r.K = K;
  r.samples.resize(seeds.size());
  const auto count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i)
    r.samples[static_cast<std::size_t>(i)] = metric_sample(seeds[static_cast<std::size_t>(i)], K, phi, policy);

  std::vector<double> kl, dv, ex;
  for (const auto& s : r.samples) {
    if (!s.ok) continue;
    kl.push_back(s.khinchin_levy);
    dv.push_back(s.diamond_vaaler);
    ex.push_back(static_cast<double>(s.exceedances));
  }
  r.khinchin_levy = summarize(kl);
  r.diamond_vaaler = summarize(dv);
  r.exceedances = summarize(ex);
  return r;
}

ErdosReport erdos_samples(std::span<const std::uint64_t> seeds, std::uint64_t N, const Rational& c,
                          const SumOptions& opts) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  ErdosReport r;
  r.N = N;
  r.c = c;
  r.samples.resize(seeds.size());
  const double l = log_e(static_cast<double>(N));
  const double main1 = 2 * static_cast<double>(N) * l;
  const double main2 = l * l;
  const auto count = static_cast<std::int64_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    ErdosSample& s = r.samples[static_cast<std::size_t>(i)];
    s.seed = seeds[static_cast<std::size_t>(i)];
    try {
      const auto spec = IrrationalSpec::lazy_uniform(s.seed);
      s.s1 = sum_dist(spec, N, c, opts).enclosure.mid_double();
      s.s2 = sum_harmonic_dist(spec, N, opts).enclosure.mid_double();
      s.s1_ratio = s.s1 / main1;
      s.s2_ratio = s.s2 / main2;
      s.ok = true;
    } catch (const PrecisionExhausted& e) {
      s.skip_reason = e.what();
    }
  }
  std::vector<double> a, b;
  for (const auto& s : r.samples) {
    if (!s.ok) continue;
    a.push_back(s.s1_ratio);
    b.push_back(s.s2_ratio);
  }
  r.s1_ratio = summarize(a);
  r.s2_ratio = summarize(b);
  return r;
}

}  // namespace diosum
