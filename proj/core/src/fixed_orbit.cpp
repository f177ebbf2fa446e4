#include "diosum/fixed_orbit.hpp"

#include <stdexcept>

#include "diosum/errors.hpp"

namespace diosum {
namespace {

u128 low_128_bits(const BigInt& z) {
  BigInt r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), z.get_mpz_t(), 128);
  std::uint64_t words[2] = {0, 0};
  size_t count = 0;
  mpz_export(words, &count, -1, sizeof(std::uint64_t), 0, 0, r.get_mpz_t());
  return (static_cast<u128>(words[1]) << 64) | words[0];
}

}  // namespace

FixedReal fixed_from_ball(const BallReal& x) {
  const BigInt lo = floor_scaled(x.lower(), 128);
  const BigInt hi = ceil_scaled(x.upper(), 128);
  const BigInt err = hi - lo;
  if (mpz_sizeinbase(err.get_mpz_t(), 2) > 62)
    throw PrecisionExhausted("ball too wide for the fixed-point kernel", x.precision());
  return {low_128_bits(lo), err.get_ui()};
}

FixedReal fixed_from_rational(const Rational& q) {
  BigInt scaled = q.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 128);
  BigInt fl, rem;
  mpz_fdiv_qr(fl.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
  return {low_128_bits(fl), rem == 0 ? 0u : 1u};
}

FixedEnclosure fixed_linear_form(std::span<const FixedReal> alphas, std::span<const std::int64_t> n) {
  if (alphas.size() != n.size()) throw std::invalid_argument("fixed_linear_form: dimension mismatch");
  FixedEnclosure out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const std::int64_t k = n[i];
    const auto kk = static_cast<u128>(static_cast<i128>(k));
    if (k >= 0) {
      out.lo += kk * alphas[i].lo;
      out.width += static_cast<u128>(k) * alphas[i].err;
    } else {
      // k * [lo, lo + err] = [k (lo + err), k lo]
      out.lo += kk * (alphas[i].lo + alphas[i].err);
      out.width += static_cast<u128>(-static_cast<i128>(k)) * alphas[i].err;
    }
  }
  return out;
}

std::optional<FixedInterval> fixed_dist(const FixedEnclosure& x) noexcept {
  if (x.wraps()) return std::nullopt;
  constexpr u128 half = static_cast<u128>(1) << 127;
  const u128 lo = x.lo, hi = x.hi();
  FixedInterval r;
  if (hi <= half) {
    r = {lo, hi};
  } else if (lo >= half) {
    r = {~hi + 1, ~lo + 1};
  } else {
    const u128 right = ~hi + 1;
    r = {lo < right ? lo : right, half};
  }
  if (r.lo == 0) return std::nullopt;
  return r;
}

std::optional<FixedInterval> fixed_frac(const FixedEnclosure& x) noexcept {
  if (x.wraps() || x.lo == 0) return std::nullopt;
  return FixedInterval{x.lo, x.hi()};
}

std::optional<FixedInterval> fixed_complement(const FixedEnclosure& x) noexcept {
  if (x.wraps() || x.lo == 0) return std::nullopt;
  return FixedInterval{~x.hi() + 1, ~x.lo + 1};
}

FixedThreshold FixedThreshold::from(const Rational& t) {
  if (sgn(t) < 0) throw std::invalid_argument("threshold must be nonnegative");
  FixedThreshold out;
  if (t >= 1) {
    out.saturated = true;
    out.exact = false;
    return out;
  }
  const FixedReal f = fixed_from_rational(t);
  out.floor = f.lo;
  out.exact = f.err == 0;
  return out;
}

Side classify(const FixedInterval& v, const FixedThreshold& t) noexcept {
  if (t.saturated) return Side::below;
  if (t.exact) {
    if (v.lo >= t.floor) return Side::above;
    if (v.hi < t.floor) return Side::below;
    return Side::unknown;
  }
  // t * 2^128 lies strictly between floor and floor + 1
  if (v.hi <= t.floor) return Side::below;
  if (v.lo > t.floor) return Side::above;
  return Side::unknown;
}

}  // namespace diosum
