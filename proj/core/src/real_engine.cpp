#include "diosum/real_engine.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "diosum/errors.hpp"
#include "expansion.hpp"

namespace diosum {
namespace {

unsigned bit_size(const BigInt& z) { return static_cast<unsigned>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

unsigned bit_size(std::uint64_t n) { return n == 0 ? 1u : static_cast<unsigned>(64 - std::countl_zero(n)); }

BallReal surd_ball(const QuadraticSurd& s, unsigned prec) {
  const unsigned w = prec + bit_size(s.P) + bit_size(s.D) / 2 + 8;
  Mpfr lo(w), hi(w), d(bit_size(s.D) + 1);
  mpfr_set_z(d.get(), s.D.get_mpz_t(), MPFR_RNDN);  // exact
  mpfr_sqrt(lo.get(), d.get(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), d.get(), MPFR_RNDU);
  mpfr_add_z(lo.get(), lo.get(), s.P.get_mpz_t(), MPFR_RNDD);
  mpfr_add_z(hi.get(), hi.get(), s.P.get_mpz_t(), MPFR_RNDU);
  if (s.Q > 0) {
    mpfr_div_z(lo.get(), lo.get(), s.Q.get_mpz_t(), MPFR_RNDD);
    mpfr_div_z(hi.get(), hi.get(), s.Q.get_mpz_t(), MPFR_RNDU);
    return BallReal::from_bounds(lo, hi, w);
  }
  // dividing by a negative number swaps the ends
  Mpfr nlo(w), nhi(w);
  mpfr_div_z(nlo.get(), hi.get(), s.Q.get_mpz_t(), MPFR_RNDD);
  mpfr_div_z(nhi.get(), lo.get(), s.Q.get_mpz_t(), MPFR_RNDU);
  return BallReal::from_bounds(nlo, nhi, w);
}

// alpha lies between consecutive convergents, which are at distance
// 1/(q_k q_{k+1}) apart.
BallReal convergent_ball(detail::SpecState& st, unsigned prec, const PrecisionPolicy& policy) {
  BigInt bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), prec - 1);
  auto c = detail::convergents_beyond(st, bound, policy);
  const unsigned w = prec + std::max(0, static_cast<int>(bit_size(c.p0)) - static_cast<int>(bit_size(c.q0))) + 8;
  Rational x(c.p0, c.q0), y(c.p1, c.q1);
  if (y < x) std::swap(x, y);
  Mpfr lo(w), hi(w);
  mpfr_set_q(lo.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), y.get_mpq_t(), MPFR_RNDU);
  return BallReal::from_bounds(lo, hi, w);
}

BallReal uniform_ball(detail::SpecState& st, unsigned prec) {
  const unsigned bits = (prec + 63) / 64 * 64;
  BigInt m = st.bits->prefix(bits);
  return BallReal::from_scaled_bounds(m, m + 1, -static_cast<long>(bits));
}

BallReal root_ball(const IntegerRoot& r, unsigned prec) {
  const unsigned w = prec + bit_size(r.radicand) / r.degree + 8;
  Mpfr lo(w), hi(w);
  mpfr_set_ui(lo.get(), static_cast<unsigned long>(r.radicand), MPFR_RNDN);
  mpfr_set_ui(hi.get(), static_cast<unsigned long>(r.radicand), MPFR_RNDN);
  mpfr_rootn_ui(lo.get(), lo.get(), r.degree, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi.get(), r.degree, MPFR_RNDU);
  return BallReal::from_bounds(lo, hi, w);
}

std::int64_t checked_multiplier(std::uint64_t n) {
  if (n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw std::invalid_argument("index exceeds 63 bits");
  return static_cast<std::int64_t>(n);
}

BallReal orbit_ball(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, unsigned precision,
                    const PrecisionPolicy& policy) {
  if (n < 1) throw std::invalid_argument("index must be >= 1");
  const unsigned extra = bit_size(n) + bit_size(floor(beta < 0 ? Rational(-beta) : beta) + 1);
  BallReal x = eval_alpha(spec, precision + extra, policy).times(checked_multiplier(n));
  return sgn(beta) == 0 ? x : x.plus(beta);
}

}  // namespace

BallReal eval_alpha(const IrrationalSpec& spec, unsigned precision, const PrecisionPolicy& policy) {
  if (precision < 32) throw std::invalid_argument("eval_alpha: precision must be >= 32 bits");
  auto& st = spec.state();
  {
    std::lock_guard lock(st.mutex);
    if (auto it = st.alpha_balls.find(precision); it != st.alpha_balls.end()) return it->second;
  }
  BallReal ball = std::visit(
      [&](const auto& k) -> BallReal {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, QuadraticSurd>) {
          return surd_ball(k, precision);
        } else if constexpr (std::is_same_v<T, LazyUniform>) {
          return uniform_ball(st, precision);
        } else if constexpr (std::is_same_v<T, IntegerRoot>) {
          return root_ball(k, precision);
        } else {
          return convergent_ball(st, precision, policy);
        }
      },
      spec.kind());
  std::lock_guard lock(st.mutex);
  return st.alpha_balls.emplace(precision, std::move(ball)).first->second;
}

FixedReal fixed_alpha(const IrrationalSpec& spec, const PrecisionPolicy& policy) {
  auto& st = spec.state();
  {
    std::lock_guard lock(st.mutex);
    if (st.fixed_alpha) return *st.fixed_alpha;
  }
  FixedReal f = fixed_from_ball(eval_alpha(spec, 192, policy));
  std::lock_guard lock(st.mutex);
  st.fixed_alpha = f;
  return f;
}

BallReal dist_nearest_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, unsigned precision,
                         const PrecisionPolicy& policy) {
  return orbit_ball(n, spec, beta, precision, policy).dist_nearest();
}

BallReal dist_nearest(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta,
                      const PrecisionPolicy& policy) {
  unsigned prec = policy.start_bits;
  while (true) {
    BallReal r = dist_nearest_at(n, spec, beta, prec, policy);
    if (r.is_positive() && r.relative_radius() < 0x1p-64) return r;
    if (prec >= policy.max_bits)
      throw PrecisionExhausted("dist_nearest: no certified enclosure within the precision cap", prec, n);
    prec = std::min(prec * 2, policy.max_bits);
  }
}

std::optional<FracPair> try_frac_part_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta,
                                         unsigned precision, const PrecisionPolicy& policy) {
  auto f = orbit_ball(n, spec, beta, precision, policy).frac();
  if (!f) return std::nullopt;
  BallReal c = f->one_minus();
  return FracPair{std::move(*f), std::move(c)};
}

FracPair frac_part_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, unsigned precision,
                      const PrecisionPolicy& policy) {
  auto f = try_frac_part_at(n, spec, beta, precision, policy);
  if (!f) throw PrecisionExhausted("frac_part: enclosure straddles an integer", precision, n);
  return std::move(*f);
}

FracPair frac_part(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, const PrecisionPolicy& policy) {
  unsigned prec = policy.start_bits;
  while (true) {
    auto f = orbit_ball(n, spec, beta, prec, policy).frac();
    if (f && f->is_positive() && f->relative_radius() < 0x1p-64) {
      BallReal c = f->one_minus();
      if (c.is_positive() && c.relative_radius() < 0x1p-64) return {std::move(*f), std::move(c)};
    }
    if (prec >= policy.max_bits)
      throw PrecisionExhausted("frac_part: no certified enclosure within the precision cap", prec, n);
    prec = std::min(prec * 2, policy.max_bits);
  }
}

ThresholdDecision compare_threshold(const std::function<BallReal(unsigned)>& value, const Rational& threshold,
                                    const PrecisionPolicy& policy) {
  if (sgn(threshold) <= 0) throw std::invalid_argument("compare_threshold: threshold must be positive");
  unsigned prec = policy.start_bits;
  while (true) {
    const int c = value(prec).compare(threshold);
    if (c < 0) return {Outcome::below, prec};
    if (c > 0) return {Outcome::above, prec};
    if (prec >= policy.max_bits)
      throw PrecisionExhausted("compare_threshold: value not separated from the threshold", prec);
    prec = std::min(prec * 2, policy.max_bits);
  }
}

}  // namespace diosum
