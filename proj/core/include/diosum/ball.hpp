#pragma once

// <cstdint> must precede <mpfr.h> for the intmax_t entry points
#include <cstdint>

#include <mpfr.h>

#include <optional>
#include <string>

#include "diosum/rational.hpp"

namespace diosum {

/// Owning RAII handle around an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t precision = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

 private:
  mpfr_t value_;
};

/// Midpoint-radius enclosure of a real number.
///
/// The midpoint carries `precision()` bits; the radius is a short
/// upward-rounded float with an unbounded exponent range, so balls as narrow
/// as 2^-65536 are representable.
class BallReal {
 public:
  /// The exact zero ball.
  explicit BallReal(unsigned precision = 128);

  /// Ball around a rational; the rounding error of the midpoint goes into the
  /// radius.
  static BallReal from_rational(const Rational& q, unsigned precision);

  /// Ball covering [lo * 2^exp2, hi * 2^exp2] exactly (lo <= hi).
  static BallReal from_scaled_bounds(const BigInt& lo, const BigInt& hi, long exp2);

  /// Ball covering [lo, hi] (lo <= hi), midpoint at `precision` bits.
  static BallReal from_bounds(const Mpfr& lo, const Mpfr& hi, unsigned precision);

  const Mpfr& mid() const noexcept { return mid_; }
  const Mpfr& rad() const noexcept { return rad_; }
  unsigned precision() const noexcept { return precision_; }

  /// mid - rad rounded down (a certified lower bound).
  Mpfr lower() const;
  /// mid + rad rounded up (a certified upper bound).
  Mpfr upper() const;

  double mid_double() const { return mid_.to_double(); }
  double rad_double() const { return rad_.to_double(MPFR_RNDU); }

  bool contains(const Rational& q) const;
  /// True when every point of `other` lies in this ball.
  bool contains(const BallReal& other) const;
  bool overlaps(const BallReal& other) const;

  /// -1 if the whole ball is < q, +1 if the whole ball is > q, 0 otherwise.
  int compare(const Rational& q) const;
  bool is_positive() const;

  /// Radius relative to |midpoint| (infinity when the midpoint is zero and
  /// the radius is not).
  double relative_radius() const;

  std::string to_string(int digits = 20) const;

  // Arithmetic. Every rounding of the midpoint is charged to the radius.
  friend BallReal operator+(const BallReal& a, const BallReal& b);
  friend BallReal operator-(const BallReal& a, const BallReal& b);
  friend BallReal operator-(const BallReal& a);
  BallReal times(std::int64_t n) const;
  BallReal plus(const Rational& q) const;
  BallReal times(const BallReal& other) const;

  /// Distance to the nearest integer. Sound because x -> ||x|| is 1-Lipschitz.
  BallReal dist_nearest() const;

  /// Fractional part, or nullopt when the ball straddles an integer.
  std::optional<BallReal> frac() const;

  /// 1 - x.
  BallReal one_minus() const;

  /// Certified bounds on weight / x for a ball with positive lower bound;
  /// nullopt when the ball is not certifiably positive.
  std::optional<std::pair<Mpfr, Mpfr>> reciprocal_bounds(const Rational& weight) const;

 private:
  void charge_rounding(int ternary);

  Mpfr mid_;
  Mpfr rad_;
  unsigned precision_;
};

/// floor(x * 2^scale) for an Mpfr x, exactly.
BigInt floor_scaled(const Mpfr& x, long scale);
/// ceil(x * 2^scale) for an Mpfr x, exactly.
BigInt ceil_scaled(const Mpfr& x, long scale);

}  // namespace diosum
