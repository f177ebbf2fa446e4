#include "diosum/predictions.hpp"

#include <cmath>
#include <stdexcept>

#include "diosum/ball.hpp"
#include "diosum/errors.hpp"

namespace diosum {
namespace {

constexpr mpfr_prec_t kPrec = 128;

double to_d(const BigInt& z) { return z.get_d(); }

double sqrt_d(double x) { return std::sqrt(x); }

// x ln max(e, x) evaluated at 128 bits.
double n_log_n(std::uint64_t N) {
  Mpfr x(kPrec), l(kPrec);
  mpfr_set_uj(x.get(), N, MPFR_RNDN);
  mpfr_set_d(l.get(), log_e(static_cast<double>(N)), MPFR_RNDN);
  if (N > 2) mpfr_log(l.get(), x.get(), MPFR_RNDN);
  mpfr_mul(x.get(), x.get(), l.get(), MPFR_RNDN);
  return x.to_double();
}

std::size_t check_block(const ContinuedFractionData& cf, std::uint64_t N) {
  if (cf.K() < 1) throw std::invalid_argument("continued-fraction data must reach index K + 1 >= 1");
  const std::size_t K = cf.K() - 1;
  const BigInt n = to_bigint(N);
  if (n < cf.q[K] || n >= cf.q[K + 1])
    throw BlockMismatch("N = " + std::to_string(N) + " is outside [q_K, q_{K+1}) = [" + cf.q[K].get_str() + ", " +
                        cf.q[K + 1].get_str() + ") for K = " + std::to_string(K));
  return K;
}

bool lower_branch_applies(const ContinuedFractionData& cf, std::size_t K, std::uint64_t N, const Rational& c) {
  // 4 (c a_{K+1})^{1/2} q_K <= N  <=>  16 c a_{K+1} q_K^2 <= N^2
  const BigInt n = to_bigint(N);
  Rational lhs = 16 * c * Rational(to_bigint(cf.a(K + 1))) * Rational(cf.q[K] * cf.q[K]);
  return lhs <= Rational(n * n);
}

ReportTerm zeta2_term(std::string name, const BigInt& multiple) {
  Mpfr pi(kPrec);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  mpfr_sqr(pi.get(), pi.get(), MPFR_RNDN);
  mpfr_div_ui(pi.get(), pi.get(), 6, MPFR_RNDN);
  mpfr_mul_z(pi.get(), pi.get(), multiple.get_mpz_t(), MPFR_RNDN);
  return {std::move(name), pi.to_double(), Rational(multiple)};
}

ReportTerm block_term(const ContinuedFractionData& cf, std::size_t K, std::uint64_t N, bool active) {
  const std::uint64_t J = to_u64(BigInt(to_bigint(N) / cf.q[K]));
  const double v = active ? static_cast<double>(cf.a(K + 1)) * inverse_square_sum(J) : 0.0;
  return {"a_{K+1} sum_{j<=N/q_K} 1/j^2", v, std::nullopt};
}

double sqrt_log_sum(const ContinuedFractionData& cf, std::size_t last, int parity) {
  double total = 0;
  for (std::size_t k = 1; k <= last; ++k) {
    if (parity >= 0 && static_cast<int>(k % 2) != parity) continue;
    const auto a = static_cast<double>(cf.a(k));
    total += sqrt_d(a) * log_e(a);
  }
  return total;
}

}  // namespace

double log_e(double x) { return x > std::exp(1.0) ? std::log(x) : 1.0; }

double zeta2() { return zeta2_term("", 1).value; }

double inverse_square_sum(std::uint64_t J) {
  Mpfr total(kPrec), term(kPrec);
  if (J <= 1000000) {
    for (std::uint64_t j = J; j >= 1; --j) {  // smallest terms first
      mpfr_set_uj(term.get(), j, MPFR_RNDN);
      mpfr_sqr(term.get(), term.get(), MPFR_RNDN);
      mpfr_ui_div(term.get(), 1, term.get(), MPFR_RNDN);
      mpfr_add(total.get(), total.get(), term.get(), MPFR_RNDN);
    }
    return total.to_double();
  }
  // pi^2/6 minus the Euler-Maclaurin tail 1/J - 1/(2J^2) + 1/(6J^3) - 1/(30J^5)
  const long double x = static_cast<long double>(J);
  const long double tail = 1 / x - 1 / (2 * x * x) + 1 / (6 * x * x * x) - 1 / (30 * x * x * x * x * x);
  return static_cast<double>(static_cast<long double>(zeta2()) - tail);
}

double PredictionReport::second_order_total() const {
  double total = 0;
  for (const auto& t : second_order) total += t.value;
  return total;
}

double PredictionReport::prediction() const { return main + second_order_total(); }

PredictionReport with_measured(PredictionReport report, double measured) {
  report.measured = measured;
  report.residual = measured - report.prediction();
  report.normalized_residual = *report.residual / report.envelope;
  return report;
}

ContinuedFractionData block_data(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy) {
  return cf_data(spec, locate_block(spec, N, policy) + 1, policy);
}

PredictionReport predict_sum_dist(const ContinuedFractionData& cf, std::uint64_t N, const Rational& c) {
  if (sgn(c) <= 0) throw std::invalid_argument("c must be positive");
  const std::size_t K = check_block(cf, N);
  PredictionReport r;
  r.theorem = "thm2.1";
  r.N = N;
  r.K = K;
  r.main = 2 * n_log_n(N);
  const double n = static_cast<double>(N);
  const double log_s = log_e(to_d(cf.s[K + 1]));
  r.envelope = (sqrt_d(static_cast<double>(cf.a(K + 1))) + log_s) * n;
  r.lower_branch = lower_branch_applies(cf, K, N, c);
  r.lower_extra = to_d(cf.q[K + 1]);
  r.lower_envelope = log_s * n;
  return r;
}

PredictionReport predict_sum_harmonic(const ContinuedFractionData& cf, std::uint64_t N) {
  const std::size_t K = check_block(cf, N);
  PredictionReport r;
  r.theorem = "thm2.2";
  r.N = N;
  r.K = K;
  const double l = log_e(static_cast<double>(N));
  r.main = l * l;
  r.second_order.push_back(zeta2_term("(pi^2/6) s_K", cf.s[K]));
  r.second_order.push_back(block_term(cf, K, N, true));
  r.envelope = sqrt_log_sum(cf, K + 1, -1) + log_e(to_d(cf.s[K + 1])) * l;
  return r;
}

std::pair<PredictionReport, PredictionReport> predict_badly(std::uint64_t N) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const double l = log_e(static_cast<double>(N));
  PredictionReport a, b;
  a.theorem = b.theorem = "thm1.1";
  a.N = b.N = N;
  a.main = 2 * n_log_n(N);
  a.envelope = static_cast<double>(N);
  b.main = l * l;
  b.envelope = l;
  return {a, b};
}

PredictionReport predict_frac(const ContinuedFractionData& cf, std::uint64_t N, FracVariant variant, Weight weight,
                              const Rational& c) {
  if (weight == Weight::linf) throw std::invalid_argument("linf weight applies to lattice sums only");
  const std::size_t K = check_block(cf, N);
  const int parity = variant == FracVariant::frac ? 1 : 0;
  const bool block_active = static_cast<int>((K + 1) % 2) == parity;
  PredictionReport r;
  r.theorem = "thm3.1";
  r.N = N;
  r.K = K;
  const double l = log_e(static_cast<double>(N));
  const double log_s = log_e(to_d(cf.s[K + 1]));
  if (weight == Weight::one) {
    const double n = static_cast<double>(N);
    r.main = n_log_n(N);
    r.envelope = ((block_active ? sqrt_d(static_cast<double>(cf.a(K + 1))) : 0.0) + log_s) * n;
    r.lower_branch = block_active && lower_branch_applies(cf, K, N, c);
    r.lower_extra = to_d(cf.q[K + 1]);
    r.lower_envelope = log_s * n;
    return r;
  }
  r.main = l * l / 2;
  BigInt parity_sum = 0;
  for (std::size_t k = 1; k <= K; ++k)
    if (static_cast<int>(k % 2) == parity) parity_sum += to_bigint(cf.a(k));
  r.second_order.push_back(
      zeta2_term(parity == 1 ? "(pi^2/6) sum_{k odd} a_k" : "(pi^2/6) sum_{k even} a_k", parity_sum));
  r.second_order.push_back(block_term(cf, K, N, block_active));
  r.envelope = sqrt_log_sum(cf, K + 1, parity) + log_s * l;
  return r;
}

PredictionReport predict_shifted(std::uint64_t N, Weight weight) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (weight == Weight::linf) throw std::invalid_argument("linf weight applies to lattice sums only");
  const double l = log_e(static_cast<double>(N));
  const double ll = log_e(l);
  PredictionReport r;
  r.theorem = "thm3.2";
  r.N = N;
  if (weight == Weight::one) {
    r.main = 2 * n_log_n(N);
    r.envelope = static_cast<double>(N) * ll;
  } else {
    r.main = l * l;
    r.envelope = l * ll;
  }
  return r;
}

MultidimPrediction predict_multidim(unsigned d, std::uint64_t N, std::optional<Rational> t) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  const double n = static_cast<double>(N);
  const double l = log_e(n);
  const double nd = std::pow(n, static_cast<double>(d));
  const double two_d = std::ldexp(1.0, static_cast<int>(d));
  MultidimPrediction out;
  out.sum.theorem = out.harmonic.theorem = "thm3.3";
  out.sum.N = out.harmonic.N = N;
  out.sum.main = d * 2 * two_d * nd * l;
  out.sum.envelope = nd;
  out.harmonic.main = static_cast<double>(d) * d * two_d * l * l;
  out.harmonic.envelope = l;
  if (t) {
    if (sgn(*t) <= 0) throw std::invalid_argument("t must be positive");
    PredictionReport c;
    c.theorem = "thm3.3";
    c.N = N;
    const double tv = t->get_d();
    c.main = 2 * two_d * tv * nd;
    c.envelope = std::pow(tv, d / (d + 1.0)) * std::pow(n, static_cast<double>(d) * d / (d + 1.0));
    out.count = c;
  }
  return out;
}

}  // namespace diosum
