#pragma once

// 128-bit fixed-point kernel for orbit points {n alpha + beta}.
//
// A real x mod 1 is enclosed by an integer interval [lo, lo + width] scaled by
// 2^-128, with wrap-around. Multiplying by n and adding a shift are exact in
// modular u128 arithmetic, so the only error is the (tiny) enclosure width of
// alpha itself, scaled by n. Everything the kernel cannot certify is reported
// as nullopt / Side::unknown and left to the MPFR path.

#include <bit>
#include <cstdint>
#include <optional>
#include <span>

#include "diosum/ball.hpp"
#include "diosum/rational.hpp"

namespace diosum {

__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;

/// x * 2^128 (mod 2^128) lies in [lo, lo + err].
struct FixedReal {
  u128 lo = 0;
  std::uint64_t err = 0;
};

/// Fractional part of a ball, as a FixedReal. Throws PrecisionExhausted if the
/// ball is too wide for a 64-bit error bound.
FixedReal fixed_from_ball(const BallReal& x);
FixedReal fixed_from_rational(const Rational& q);

/// Enclosure of a point of R/Z: [lo, lo + width] * 2^-128, possibly wrapping.
struct FixedEnclosure {
  u128 lo = 0;
  u128 width = 0;
  bool wraps() const noexcept { return static_cast<u128>(lo + width) < lo; }
  u128 hi() const noexcept { return lo + width; }
};

/// n alpha + beta (mod 1).
class FixedOrbit {
 public:
  FixedOrbit() = default;
  FixedOrbit(FixedReal alpha, FixedReal shift) : alpha_(alpha), shift_(shift) {}

  FixedEnclosure at(std::uint64_t n) const noexcept {
    return {static_cast<u128>(n) * alpha_.lo + shift_.lo,
            static_cast<u128>(n) * alpha_.err + shift_.err};
  }

  const FixedReal& alpha() const noexcept { return alpha_; }
  const FixedReal& shift() const noexcept { return shift_; }

 private:
  FixedReal alpha_;
  FixedReal shift_;
};

/// n_1 alpha_1 + ... + n_d alpha_d (mod 1), with negative coefficients.
FixedEnclosure fixed_linear_form(std::span<const FixedReal> alphas, std::span<const std::int64_t> n);

/// Certified [lo, hi] * 2^-128 with 0 < lo <= hi < 2^128.
struct FixedInterval {
  u128 lo = 0;
  u128 hi = 0;
};

std::optional<FixedInterval> fixed_dist(const FixedEnclosure& x) noexcept;
std::optional<FixedInterval> fixed_frac(const FixedEnclosure& x) noexcept;
std::optional<FixedInterval> fixed_complement(const FixedEnclosure& x) noexcept;

/// A nonnegative rational threshold t in fixed point.
struct FixedThreshold {
  u128 floor = 0;       // floor(t * 2^128) when t < 1
  bool exact = true;    // t * 2^128 is an integer
  bool saturated = false;  // t >= 1: every value in [0,1) is below

  static FixedThreshold from(const Rational& t);
};

enum class Side { below, above, unknown };

/// below: value < t certainly. above: value >= t certainly.
Side classify(const FixedInterval& v, const FixedThreshold& t) noexcept;

namespace fixed {

inline int bit_length(u128 x) noexcept {
  const auto hi = static_cast<std::uint64_t>(x >> 64);
  if (hi) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(static_cast<std::uint64_t>(x));
}

/// 2^e for -1022 <= e <= 1023.
inline double pow2(int e) noexcept {
  return std::bit_cast<double>(static_cast<std::uint64_t>(1023 + e) << 52);
}

inline double next_up(double x) noexcept {  // x > 0 finite
  return std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) + 1);
}
inline double next_down(double x) noexcept {  // x > 0
  return std::bit_cast<double>(std::bit_cast<std::uint64_t>(x) - 1);
}

/// x * 2^-128 rounded down / up to a double.
inline double scaled_down(u128 x) noexcept {
  const int bits = bit_length(x);
  if (bits <= 53) return static_cast<double>(static_cast<std::uint64_t>(x)) * pow2(-128);
  const int s = bits - 53;
  return static_cast<double>(static_cast<std::uint64_t>(x >> s)) * pow2(s - 128);
}

inline double scaled_up(u128 x) noexcept {
  const int bits = bit_length(x);
  if (bits <= 53) return static_cast<double>(static_cast<std::uint64_t>(x)) * pow2(-128);
  const int s = bits - 53;
  std::uint64_t m = static_cast<std::uint64_t>(x >> s);
  if ((static_cast<u128>(m) << s) != x) ++m;
  return static_cast<double>(m) * pow2(s - 128);
}

}  // namespace fixed

}  // namespace diosum
