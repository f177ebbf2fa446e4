#include "diosum/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diosum {
namespace {

constexpr mpfr_prec_t kRadiusPrecision = 64;

mpfr_prec_t bits_of(const BigInt& z) {
  return static_cast<mpfr_prec_t>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace

// --- Mpfr -------------------------------------------------------------------

Mpfr::Mpfr(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(value_); }

// --- BallReal ---------------------------------------------------------------

BallReal::BallReal(unsigned precision)
    : mid_(static_cast<mpfr_prec_t>(precision)), rad_(kRadiusPrecision), precision_(precision) {}

void BallReal::charge_rounding(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_.get())) return;
  // one ulp of the rounded midpoint bounds the rounding error
  Mpfr ulp(kRadiusPrecision);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.precision(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

BallReal BallReal::from_rational(const Rational& q, unsigned precision) {
  BallReal b(precision);
  int t = mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  b.charge_rounding(t);
  return b;
}

BallReal BallReal::from_scaled_bounds(const BigInt& lo, const BigInt& hi, long exp2) {
  if (hi < lo) throw std::invalid_argument("from_scaled_bounds: hi < lo");
  BigInt sum = lo + hi;
  BigInt width = hi - lo;
  const auto prec = std::max<mpfr_prec_t>(64, bits_of(sum) + 1);
  BallReal b(static_cast<unsigned>(prec));
  mpfr_set_z(b.mid_.get(), sum.get_mpz_t(), MPFR_RNDN);  // exact
  mpfr_mul_2si(b.mid_.get(), b.mid_.get(), exp2 - 1, MPFR_RNDN);
  mpfr_set_z(b.rad_.get(), width.get_mpz_t(), MPFR_RNDU);
  mpfr_mul_2si(b.rad_.get(), b.rad_.get(), exp2 - 1, MPFR_RNDU);
  return b;
}

BallReal BallReal::from_bounds(const Mpfr& lo, const Mpfr& hi, unsigned precision) {
  if (mpfr_cmp(lo.get(), hi.get()) > 0) throw std::invalid_argument("from_bounds: hi < lo");
  BallReal b(precision);
  Mpfr sum(std::max(lo.precision(), hi.precision()) + 2);
  mpfr_add(sum.get(), lo.get(), hi.get(), MPFR_RNDN);
  mpfr_div_2ui(b.mid_.get(), sum.get(), 1, MPFR_RNDN);
  Mpfr a(kRadiusPrecision), c(kRadiusPrecision);
  mpfr_sub(a.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
  mpfr_sub(c.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
  mpfr_max(b.rad_.get(), a.get(), c.get(), MPFR_RNDU);
  if (mpfr_sgn(b.rad_.get()) < 0) mpfr_set_zero(b.rad_.get(), 1);
  return b;
}

Mpfr BallReal::lower() const {
  Mpfr r(mid_.precision());
  mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  return r;
}

Mpfr BallReal::upper() const {
  Mpfr r(mid_.precision());
  mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return r;
}

bool BallReal::contains(const Rational& q) const {
  return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
}

bool BallReal::contains(const BallReal& other) const {
  return mpfr_cmp(lower().get(), other.lower().get()) <= 0 &&
         mpfr_cmp(other.upper().get(), upper().get()) <= 0;
}

bool BallReal::overlaps(const BallReal& other) const {
  return mpfr_cmp(lower().get(), other.upper().get()) <= 0 &&
         mpfr_cmp(other.lower().get(), upper().get()) <= 0;
}

int BallReal::compare(const Rational& q) const {
  if (mpfr_cmp_q(upper().get(), q.get_mpq_t()) < 0) return -1;
  if (mpfr_cmp_q(lower().get(), q.get_mpq_t()) > 0) return 1;
  return 0;
}

bool BallReal::is_positive() const { return mpfr_sgn(lower().get()) > 0; }

double BallReal::relative_radius() const {
  if (mpfr_zero_p(rad_.get())) return 0.0;
  if (mpfr_zero_p(mid_.get())) return std::numeric_limits<double>::infinity();
  Mpfr r(kRadiusPrecision), m(kRadiusPrecision);
  mpfr_abs(m.get(), mid_.get(), MPFR_RNDD);
  mpfr_div(r.get(), rad_.get(), m.get(), MPFR_RNDU);
  return r.to_double(MPFR_RNDU);
}

std::string BallReal::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid_.get());
  std::string out(buf.data());
  mpfr_snprintf(buf.data(), buf.size(), " +/- %.3Re", rad_.get());
  return out + buf.data();
}

BallReal operator+(const BallReal& a, const BallReal& b) {
  BallReal r(std::max(a.precision_, b.precision_));
  int t = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

BallReal operator-(const BallReal& a) {
  BallReal r = a;
  mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  return r;
}

BallReal operator-(const BallReal& a, const BallReal& b) { return a + (-b); }

BallReal BallReal::times(std::int64_t n) const {
  BallReal r(precision_);
  int t = mpfr_mul_si(r.mid_.get(), mid_.get(), n, MPFR_RNDN);
  const std::uint64_t mag = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  Mpfr m(kRadiusPrecision);
  mpfr_set_uj(m.get(), mag, MPFR_RNDU);
  mpfr_mul(r.rad_.get(), rad_.get(), m.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

BallReal BallReal::plus(const Rational& q) const {
  BallReal r(precision_);
  int t = mpfr_add_q(r.mid_.get(), mid_.get(), q.get_mpq_t(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

BallReal BallReal::times(const BallReal& other) const {
  BallReal r(std::max(precision_, other.precision_));
  int t = mpfr_mul(r.mid_.get(), mid_.get(), other.mid_.get(), MPFR_RNDN);
  Mpfr am(kRadiusPrecision), bm(kRadiusPrecision), x(kRadiusPrecision), y(kRadiusPrecision);
  mpfr_abs(am.get(), mid_.get(), MPFR_RNDU);
  mpfr_abs(bm.get(), other.mid_.get(), MPFR_RNDU);
  mpfr_mul(x.get(), am.get(), other.rad_.get(), MPFR_RNDU);
  mpfr_mul(y.get(), bm.get(), rad_.get(), MPFR_RNDU);
  mpfr_add(x.get(), x.get(), y.get(), MPFR_RNDU);
  mpfr_mul(y.get(), rad_.get(), other.rad_.get(), MPFR_RNDU);
  mpfr_add(r.rad_.get(), x.get(), y.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

BallReal BallReal::dist_nearest() const {
  BallReal r(precision_);
  Mpfr nearest(mid_.precision());
  mpfr_rint(nearest.get(), mid_.get(), MPFR_RNDN);
  int t = mpfr_sub(r.mid_.get(), mid_.get(), nearest.get(), MPFR_RNDN);
  mpfr_abs(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

std::optional<BallReal> BallReal::frac() const {
  Mpfr lo = lower(), hi = upper();
  Mpfr flo(lo.precision()), fhi(hi.precision());
  mpfr_floor(flo.get(), lo.get());
  mpfr_floor(fhi.get(), hi.get());
  if (mpfr_cmp(flo.get(), fhi.get()) != 0) return std::nullopt;
  BallReal r(precision_);
  int t = mpfr_sub(r.mid_.get(), mid_.get(), flo.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

BallReal BallReal::one_minus() const {
  BallReal r(precision_);
  int t = mpfr_ui_sub(r.mid_.get(), 1, mid_.get(), MPFR_RNDN);
  mpfr_set(r.rad_.get(), rad_.get(), MPFR_RNDU);
  r.charge_rounding(t);
  return r;
}

std::optional<std::pair<Mpfr, Mpfr>> BallReal::reciprocal_bounds(const Rational& weight) const {
  if (sgn(weight) <= 0) throw std::invalid_argument("reciprocal_bounds: weight must be positive");
  Mpfr lo = lower();
  if (mpfr_sgn(lo.get()) <= 0) return std::nullopt;
  Mpfr hi = upper();
  const auto p = static_cast<mpfr_prec_t>(precision_);
  Mpfr down(p), up(p);
  mpfr_ui_div(down.get(), 1, hi.get(), MPFR_RNDD);
  mpfr_mul_q(down.get(), down.get(), weight.get_mpq_t(), MPFR_RNDD);
  mpfr_ui_div(up.get(), 1, lo.get(), MPFR_RNDU);
  mpfr_mul_q(up.get(), up.get(), weight.get_mpq_t(), MPFR_RNDU);
  return std::make_pair(std::move(down), std::move(up));
}

BigInt floor_scaled(const Mpfr& x, long scale) {
  Mpfr y(x.precision());
  mpfr_mul_2si(y.get(), x.get(), scale, MPFR_RNDN);  // exact
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), y.get(), MPFR_RNDD);
  return z;
}

BigInt ceil_scaled(const Mpfr& x, long scale) {
  Mpfr y(x.precision());
  mpfr_mul_2si(y.get(), x.get(), scale, MPFR_RNDN);
  BigInt z;
  mpfr_get_z(z.get_mpz_t(), y.get(), MPFR_RNDU);
  return z;
}

}  // namespace diosum
