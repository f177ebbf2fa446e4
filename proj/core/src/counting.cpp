#include "diosum/counting.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include "diosum/errors.hpp"
#include "diosum/fixed_orbit.hpp"
#include "diosum/real_engine.hpp"
#include "expansion.hpp"
#include "discrepancy.hpp"
#include "floor_sum.hpp"
#include "term_kernel.hpp"

namespace diosum {
namespace {

detail::ValueKind kind_of(CountVariant v) {
  switch (v) {
    case CountVariant::dist: return detail::ValueKind::dist;
    case CountVariant::frac: return detail::ValueKind::frac;
    case CountVariant::complement: return detail::ValueKind::complement;
  }
  return detail::ValueKind::dist;
}

bool saturated(CountVariant v, const Rational& t) {
  return v == CountVariant::dist ? t >= Rational(1, 2) : t >= 1;
}

unsigned bit_size(const BigInt& z) { return static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// g_s(R) = sum_{n=1}^N floor(n R - s) for R = r / 2^p and rational s.
BigInt floor_orbit_sum(const BigInt& N, const BigInt& r, unsigned p, const Rational& s) {
  const BigInt& u = s.get_num();
  const BigInt& v = s.get_den();
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), p);
  BigInt m = v * scale;
  BigInt b = -(u * scale);
  BigInt first;  // the i = 0 term, floor(-u/v)
  mpz_fdiv_q(first.get_mpz_t(), BigInt(-u).get_mpz_t(), v.get_mpz_t());
  return detail::floor_sum(N + 1, m, r * v, b) - first;
}

}  // namespace

std::uint64_t count_dist_le(const IrrationalSpec& spec, std::uint64_t N, const Rational& t, CountVariant variant,
                            const Rational& beta, const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (sgn(t) <= 0) throw std::invalid_argument("t must be positive");
  if (saturated(variant, t)) return N;
  return detail::count_below(spec, N, kind_of(variant), beta, t, policy);
}

std::uint64_t count_fast(const IrrationalSpec& spec, std::uint64_t N, const Rational& t, CountVariant variant,
                         const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (sgn(t) <= 0) throw std::invalid_argument("t must be positive");
  if (saturated(variant, t)) return N;

  const BigInt bigN = to_bigint(N);
  const Rational zero(0), tc = 1 - t;
  // count in terms of g_s: {x} < t contributes floor(x) - floor(x - t) and
  // {x} > 1 - t contributes floor(x - (1 - t)) + 1 - floor(x)
  auto count_at = [&](const BigInt& r, unsigned p) -> BigInt {
    switch (variant) {
      case CountVariant::dist:
        return bigN + floor_orbit_sum(bigN, r, p, tc) - floor_orbit_sum(bigN, r, p, t);
      case CountVariant::frac:
        return floor_orbit_sum(bigN, r, p, zero) - floor_orbit_sum(bigN, r, p, t);
      case CountVariant::complement:
        return bigN + floor_orbit_sum(bigN, r, p, tc) - floor_orbit_sum(bigN, r, p, zero);
    }
    return 0;
  };

  // each g_s is nondecreasing in R, so agreement at both ends of the
  // enclosure of alpha pins down every term
  unsigned p = std::max(policy.start_bits, 64 + 2 * bit_size(bigN) + bit_size(t.get_den()));
  while (true) {
    const BallReal alpha = eval_alpha(spec, p + 8, policy);
    const BigInt lo = floor_scaled(alpha.lower(), p);
    const BigInt hi = ceil_scaled(alpha.upper(), p);
    auto stable = [&](const Rational& s) {
      return floor_orbit_sum(bigN, lo, p, s) == floor_orbit_sum(bigN, hi, p, s);
    };
    bool ok = stable(t);
    if (ok && variant != CountVariant::frac) ok = stable(tc);
    if (ok && variant != CountVariant::dist) ok = stable(zero);
    if (ok) return to_u64(count_at(lo, p));
    if (p >= policy.max_bits) throw PrecisionExhausted("count_fast: floor sums not stable at the cap", p);
    p = std::min(p * 2, policy.max_bits);
  }
}

PigeonholeBound pigeonhole_bound(const IrrationalSpec& spec, std::uint64_t N, const Rational& t,
                                 const PrecisionPolicy& policy) {
  if (sgn(t) <= 0) throw std::invalid_argument("t must be positive");
  const std::size_t K = locate_block(spec, N, policy);
  const BigInt q = detail::convergent_at(spec.state(), K + 1, policy).second;
  Rational value = 4 * Rational(q) * t + 1;
  value.canonicalize();
  return {K, value, floor(value)};
}

// --- discrepancy ------------------------------------------------------------

namespace {

template <class Int>
struct Span {
  Int lo, hi;
};

// Interval enclosure of D_N * S from sorted, pairwise separated point
// enclosures [lo, hi] * S^-1. F(x) = #{points <= x} - N x; the largest
// excess is max F(b) - F(a-) over a <= b, the largest deficit max F(a) - F(b-)
// over a < b, with a = 0 and b = 1 allowed.
template <class Int>
Span<Int> discrepancy_scaled(const std::vector<Span<Int>>& pts, const Int& S, const Int& N) {
  Int run_min_lo = 0, run_min_hi = 0;  // min F(a-)
  Int run_max_lo = 0, run_max_hi = 0;  // max F(a)
  Int best_lo = 0, best_hi = 0;
  auto take = [&](const Int& lo, const Int& hi) {
    if (lo > best_lo) best_lo = lo;
    if (hi > best_hi) best_hi = hi;
  };
  Int j_s = 0;
  for (const auto& x : pts) {
    const Int nlo = N * x.lo, nhi = N * x.hi;
    const Int fm_lo = j_s - nhi, fm_hi = j_s - nlo;  // F(x-)
    j_s = j_s + S;
    const Int f_lo = j_s - nhi, f_hi = j_s - nlo;  // F(x)

    // deficit ending just before x
    take(Int(run_max_lo - fm_hi), Int(run_max_hi - fm_lo));
    if (f_lo > run_max_lo) run_max_lo = f_lo;
    if (f_hi > run_max_hi) run_max_hi = f_hi;

    // excess on [a, x]
    if (fm_lo < run_min_lo) run_min_lo = fm_lo;
    if (fm_hi < run_min_hi) run_min_hi = fm_hi;
    take(Int(f_lo - run_min_hi), Int(f_hi - run_min_lo));
  }
  // b = 1: F(1) = F(1-) = 0
  take(Int(-run_min_hi), Int(-run_min_lo));
  take(run_max_lo, run_max_hi);
  return {best_lo, best_hi};
}

template <class Int>
bool sort_separated(std::vector<Span<Int>>& pts) {
  std::sort(pts.begin(), pts.end(), [](const Span<Int>& a, const Span<Int>& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!(pts[i - 1].hi < pts[i].lo)) return false;
  return true;
}

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  std::uint64_t w[2] = {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(m >> 64)};
  BigInt z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, w);
  return neg ? BigInt(-z) : z;
}

std::optional<BallReal> discrepancy_fixed(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy) {
  if (N >= (std::uint64_t{1} << 28)) return std::nullopt;
  constexpr int kBits = 96;
  const FixedOrbit orbit(fixed_alpha(spec, policy), FixedReal{});
  std::vector<Span<i128>> pts;
  pts.reserve(N);
  constexpr u128 mask = (static_cast<u128>(1) << 32) - 1;
  for (std::uint64_t n = 1; n <= N; ++n) {
    const FixedEnclosure e = orbit.at(n);
    if (e.wraps() || e.lo == 0) return std::nullopt;
    const u128 hi = e.hi();
    pts.push_back({static_cast<i128>(e.lo >> 32), static_cast<i128>((hi >> 32) + ((hi & mask) != 0))});
  }
  if (!sort_separated(pts)) return std::nullopt;
  const i128 S = static_cast<i128>(1) << kBits;
  auto d = discrepancy_scaled<i128>(pts, S, static_cast<i128>(N));
  return BallReal::from_scaled_bounds(to_big(d.lo), to_big(d.hi), -kBits);
}

}  // namespace

BallReal detail::discrepancy_mpfr(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy) {
  const unsigned nbits = static_cast<unsigned>(64 - std::countl_zero(N));
  for (unsigned p = std::max(policy.start_bits, 160u);; p = std::min(p * 2, policy.max_bits)) {
    const BallReal alpha = eval_alpha(spec, p + nbits + 8, policy);
    std::vector<Span<BigInt>> pts;
    pts.reserve(N);
    bool ok = true;
    for (std::uint64_t n = 1; n <= N && ok; ++n) {
      auto f = alpha.times(static_cast<std::int64_t>(n)).frac();
      if (!f) {
        ok = false;
        break;
      }
      pts.push_back({floor_scaled(f->lower(), p), ceil_scaled(f->upper(), p)});
    }
    if (ok && sort_separated(pts)) {
      BigInt S = 1;
      mpz_mul_2exp(S.get_mpz_t(), S.get_mpz_t(), p);
      auto d = discrepancy_scaled<BigInt>(pts, S, to_bigint(N));
      return BallReal::from_scaled_bounds(d.lo, d.hi, -static_cast<long>(p));
    }
    if (p >= policy.max_bits) throw PrecisionExhausted("discrepancy: sample points not separated at the cap", p);
  }
}

BallReal discrepancy(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (auto d = discrepancy_fixed(spec, N, policy)) return *d;
  return detail::discrepancy_mpfr(spec, N, policy);
}

// --- local discrepancy ------------------------------------------------------

Extrema local_disc_extrema(const IrrationalSpec& spec, std::size_t K, const Rational& t,
                           const PrecisionPolicy& policy) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (sgn(t) <= 0 || t >= 1) throw std::invalid_argument("t must lie in (0, 1)");
  const BigInt qnext = detail::convergent_at(spec.state(), K + 1, policy).second;
  const std::uint64_t M = to_u64(qnext);
  const FixedOrbit orbit(fixed_alpha(spec, policy), FixedReal{});
  const FixedThreshold th = FixedThreshold::from(t);
  const BigInt& num = t.get_num();
  const BigInt& den = t.get_den();

  // value(N) * den = count * den - num * N, tracked exactly
  BigInt count = 0, best_max, best_min;
  bool first = true;
  for (std::uint64_t n = 1; n < M; ++n) {
    Side side = Side::unknown;
    if (auto v = fixed_frac(orbit.at(n))) side = classify(*v, th);
    if (side == Side::unknown) {
      auto d = compare_threshold(
          [&](unsigned p) {
            auto f = try_frac_part_at(n, spec, 0, p, policy);
            // a straddling ball cannot be separated; report it as containing t
            return f ? f->frac : BallReal::from_rational(t, 64);
          },
          t, policy);
      side = d.outcome == Outcome::below ? Side::below : Side::above;
    }
    if (side == Side::below) count += 1;
    BigInt scaled = count * den - num * to_bigint(n);
    if (first || scaled > best_max) best_max = scaled;
    if (first || scaled < best_min) best_min = scaled;
    first = false;
  }
  if (first) throw std::invalid_argument("empty range: q_{K+1} = 1");
  Rational mx(best_max, den), mn(best_min, den);
  mx.canonicalize();
  mn.canonicalize();
  return {mx, mn};
}

Extrema schoissengeier_prediction(const ContinuedFractionData& cf, std::size_t K, const Rational& t) {
  if (K < 1) throw std::invalid_argument("K must be >= 1");
  if (cf.K() < K + 1) throw std::invalid_argument("continued-fraction data must reach index K + 1");
  Rational even = 0, odd = 0;
  for (std::size_t k = 1; k <= K; ++k) {
    const Rational fk = frac(Rational(cf.q[k]) * t);
    const Rational fnext = frac(Rational(cf.q[k + 1]) * t);
    const Rational fprev = frac(Rational(cf.q[k - 1]) * t);
    Rational term = fk * (Rational(to_bigint(cf.digits[k + 1])) * (1 - fk) + fnext - fprev);
    (k % 2 == 0 ? even : odd) += term;
  }
  even.canonicalize();
  odd.canonicalize();
  return {even, Rational(-odd)};
}

std::uint64_t count_multidim(std::span<const IrrationalSpec> specs, std::uint64_t N, const Rational& t,
                             const PrecisionPolicy& policy, bool half_lattice) {
  if (sgn(t) <= 0 || t > Rational(1, 2)) throw std::invalid_argument("t must lie in (0, 1/2]");
  detail::LatticeRule rule;
  rule.count_at = t;
  rule.half_lattice = half_lattice;
  return detail::lattice_terms(specs, N, rule, 1e-9, policy).count;
}

}  // namespace diosum
