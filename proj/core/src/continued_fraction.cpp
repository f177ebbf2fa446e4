#include "diosum/continued_fraction.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "diosum/errors.hpp"
#include "diosum/real_engine.hpp"
#include "expansion.hpp"

namespace diosum {
namespace {

std::int64_t to_digit(const BigInt& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("partial quotient exceeds 64 bits: " + a.get_str());
  return a.get_si();
}

BigInt mul_add(std::int64_t a, const BigInt& x, const BigInt& y) {
  BigInt r = x;
  r *= static_cast<long>(a);
  r += y;
  return r;
}

// Digits shared by every real strictly between lo = n1/d1 and hi = n2/d2.
// Both enclosure ends run through Euclid in lockstep; a quotient counts only
// when the two agree and neither has terminated.
std::vector<std::int64_t> common_digits(BigInt n1, BigInt d1, BigInt n2, BigInt d2, std::size_t want) {
  std::vector<std::int64_t> out;
  BigInt a1, r1, a2, r2;
  while (out.size() < want) {
    mpz_fdiv_qr(a1.get_mpz_t(), r1.get_mpz_t(), n1.get_mpz_t(), d1.get_mpz_t());
    mpz_fdiv_qr(a2.get_mpz_t(), r2.get_mpz_t(), n2.get_mpz_t(), d2.get_mpz_t());
    if (a1 != a2 || r1 == 0 || r2 == 0) break;
    out.push_back(to_digit(a1));
    n1.swap(d1);
    d1.swap(r1);
    n2.swap(d2);
    d2.swap(r2);
  }
  return out;
}

void mpfr_to_fraction(const Mpfr& x, BigInt& num, BigInt& den) {
  const mpfr_exp_t e = mpfr_get_z_2exp(num.get_mpz_t(), x.get());
  den = 1;
  if (e >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
}

std::vector<std::int64_t> interval_digits(detail::SpecState& st, unsigned bits, std::size_t want) {
  if (st.bits) {
    BigInt m = st.bits->prefix(bits);
    BigInt den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    return common_digits(m, den, m + 1, den, want);
  }
  const auto& root = std::get<IntegerRoot>(st.kind);
  Mpfr lo(bits), hi(bits);
  mpfr_set_ui(lo.get(), static_cast<unsigned long>(root.radicand), MPFR_RNDN);
  mpfr_set_ui(hi.get(), static_cast<unsigned long>(root.radicand), MPFR_RNDN);
  mpfr_rootn_ui(lo.get(), lo.get(), root.degree, MPFR_RNDD);
  mpfr_rootn_ui(hi.get(), hi.get(), root.degree, MPFR_RNDU);
  BigInt n1, d1, n2, d2;
  mpfr_to_fraction(lo, n1, d1);
  mpfr_to_fraction(hi, n2, d2);
  return common_digits(n1, d1, n2, d2, want);
}

unsigned round_up_64(std::size_t bits) { return static_cast<unsigned>((bits + 63) / 64 * 64); }

void grow_interval(detail::SpecState& st, std::size_t count, const PrecisionPolicy& policy) {
  // log2 q_k grows like 1.71 k for typical reals; the enclosure needs about
  // twice that many bits.
  const unsigned cap = std::max(64u, policy.max_bits / 64 * 64);
  unsigned bits = round_up_64(std::max({policy.start_bits, st.interval_bits, round_up_64(count * 7 / 2 + 128)}));
  bits = std::min(bits, cap);
  while (true) {
    auto digits = interval_digits(st, bits, count);
    if (digits.size() > st.digits.size()) {
      st.interval_bits = bits;
      for (std::size_t i = st.digits.size(); i < digits.size(); ++i) st.digits.push_back(digits[i]);
    }
    if (digits.size() >= count) return;
    if (bits >= cap || bits * 2 < bits)
      throw PrecisionExhausted("cannot certify partial quotient " + std::to_string(digits.size()) + " of " +
                                   st.name + " within " + std::to_string(cap) + " bits",
                               bits, digits.size());
    bits = std::min(bits * 2, cap);
  }
}

std::int64_t euler_digit(std::size_t i) {
  if (i == 0) return 2;
  if (i % 3 == 2) return static_cast<std::int64_t>(2 * (i + 1) / 3);
  return 1;
}

std::int64_t explicit_digit(const ExplicitDigits& d, std::size_t i) {
  if (i == 0) return d.a0;
  if (i <= d.prefix.size()) return d.prefix[i - 1];
  return d.period[(i - 1 - d.prefix.size()) % d.period.size()];
}

void grow_digits(detail::SpecState& st, std::size_t count, const PrecisionPolicy& policy) {
  if (st.digits.size() >= count) return;
  if (std::holds_alternative<QuadraticSurd>(st.kind)) {
    BigInt a, num;
    while (st.digits.size() < count) {
      // a = floor((P + sqrt D) / Q); the integer square root suffices because
      // the fraction never equals an integer
      num = st.surd_P + st.surd_isqrt;
      if (st.surd_Q > 0) {
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), st.surd_Q.get_mpz_t());
      } else {
        BigInt absq = -st.surd_Q;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), absq.get_mpz_t());
        a = -(a + 1);
      }
      st.digits.push_back(to_digit(a));
      st.surd_P = a * st.surd_Q - st.surd_P;
      st.surd_Q = (st.surd_D - st.surd_P * st.surd_P) / st.surd_Q;
    }
  } else if (std::holds_alternative<EulerNumber>(st.kind)) {
    while (st.digits.size() < count) st.digits.push_back(euler_digit(st.digits.size()));
  } else if (const auto* d = std::get_if<ExplicitDigits>(&st.kind)) {
    while (st.digits.size() < count) st.digits.push_back(explicit_digit(*d, st.digits.size()));
  } else {
    grow_interval(st, count, policy);
  }
}

void grow_convergents(detail::SpecState& st) {
  while (st.q.size() < st.digits.size()) {
    const std::size_t k = st.q.size();
    const std::int64_t a = st.digits[k];
    if (k == 0) {
      st.p.push_back(to_bigint(a));
      st.q.push_back(1);
    } else if (k == 1) {
      st.p.push_back(mul_add(a, st.p[0], 1));
      st.q.push_back(to_bigint(a));
    } else {
      st.p.push_back(mul_add(a, st.p[k - 1], st.p[k - 2]));
      st.q.push_back(mul_add(a, st.q[k - 1], st.q[k - 2]));
    }
  }
}

}  // namespace

namespace detail {

void ensure_digits(SpecState& state, std::size_t count, const PrecisionPolicy& policy) {
  std::lock_guard lock(state.mutex);
  grow_digits(state, count, policy);
  grow_convergents(state);
}

std::vector<std::int64_t> digit_prefix(SpecState& state, std::size_t count, const PrecisionPolicy& policy) {
  std::lock_guard lock(state.mutex);
  grow_digits(state, count, policy);
  return {state.digits.begin(), state.digits.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::pair<BigInt, BigInt> convergent_at(SpecState& state, std::size_t k, const PrecisionPolicy& policy) {
  std::lock_guard lock(state.mutex);
  grow_digits(state, k + 1, policy);
  grow_convergents(state);
  return {state.p[k], state.q[k]};
}

ConvergentPair convergents_beyond(SpecState& state, const BigInt& bound, const PrecisionPolicy& policy) {
  std::lock_guard lock(state.mutex);
  std::size_t k = 0;
  while (true) {
    grow_digits(state, k + 2, policy);
    grow_convergents(state);
    if (state.q[k] * state.q[k + 1] >= bound) return {state.p[k], state.q[k], state.p[k + 1], state.q[k + 1]};
    ++k;
  }
}

}  // namespace detail

std::int64_t ContinuedFractionData::max_quotient() const {
  if (digits.size() < 2) throw std::invalid_argument("max_quotient needs K >= 1");
  return *std::max_element(digits.begin() + 1, digits.end());
}

BigInt ContinuedFractionData::trimmed_sum() const { return s.back() - to_bigint(max_quotient()); }

std::vector<std::int64_t> expand(const IrrationalSpec& spec, std::size_t K, const PrecisionPolicy& policy) {
  return detail::digit_prefix(spec.state(), K + 1, policy);
}

std::vector<Convergent> convergents(std::span<const std::int64_t> digits) {
  if (digits.empty()) throw std::invalid_argument("convergents: empty digit list");
  std::vector<Convergent> out;
  out.reserve(digits.size());
  BigInt p2 = 0, q2 = 1, p1 = 1, q1 = 0;
  for (std::int64_t a : digits) {
    BigInt p = mul_add(a, p1, p2);
    BigInt q = mul_add(a, q1, q2);
    p2.swap(p1);
    q2.swap(q1);
    p1 = p;
    q1 = q;
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

CfStats stats(std::span<const std::int64_t> digits) {
  if (digits.size() < 2) throw std::invalid_argument("stats: need K >= 1");
  CfStats out{0, digits[1], 0};
  for (std::size_t k = 1; k < digits.size(); ++k) {
    out.sum += to_bigint(digits[k]);
    out.max = std::max(out.max, digits[k]);
  }
  out.trimmed = out.sum - to_bigint(out.max);
  return out;
}

ContinuedFractionData cf_data(std::vector<std::int64_t> digits) {
  if (digits.empty()) throw std::invalid_argument("cf_data: empty digit list");
  for (std::size_t k = 1; k < digits.size(); ++k)
    if (digits[k] < 1) throw std::invalid_argument("cf_data: partial quotients must be >= 1");
  ContinuedFractionData cf;
  auto conv = convergents(digits);
  cf.p.reserve(conv.size());
  cf.q.reserve(conv.size());
  for (auto& c : conv) {
    cf.p.push_back(std::move(c.p));
    cf.q.push_back(std::move(c.q));
  }
  cf.s.resize(digits.size());
  cf.s[0] = 0;
  for (std::size_t k = 1; k < digits.size(); ++k) cf.s[k] = cf.s[k - 1] + to_bigint(digits[k]);
  cf.digits = std::move(digits);
  return cf;
}

ContinuedFractionData cf_data(const IrrationalSpec& spec, std::size_t K, const PrecisionPolicy& policy) {
  return cf_data(expand(spec, K, policy));
}

std::size_t locate_block(const IrrationalSpec& spec, const BigInt& N, const PrecisionPolicy& policy) {
  if (N < 1) throw std::invalid_argument("locate_block: N must be >= 1");
  auto& st = spec.state();
  std::lock_guard lock(st.mutex);
  std::size_t k = 0;
  while (true) {
    grow_digits(st, k + 2, policy);
    grow_convergents(st);
    if (st.q[k] <= N && N < st.q[k + 1]) return k;
    ++k;
  }
}

std::size_t locate_block(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy) {
  return locate_block(spec, to_bigint(N), policy);
}

BallReal best_approx_error(const IrrationalSpec& spec, std::size_t k, const PrecisionPolicy& policy) {
  auto [pk, qk] = detail::convergent_at(spec.state(), k, policy);
  auto next = detail::convergent_at(spec.state(), k + 1, policy);
  const auto qbits = static_cast<unsigned>(mpz_sizeinbase(next.second.get_mpz_t(), 2));
  for (unsigned prec = policy.start_bits + 2 * qbits;; prec *= 2) {
    const unsigned p = std::min(prec, policy.max_bits + 2 * qbits);
    BallReal alpha = eval_alpha(spec, p, policy);
    BallReal qb = BallReal::from_rational(Rational(qk), p + qbits);
    BallReal r = alpha.times(qb).dist_nearest();
    if (r.is_positive() && r.relative_radius() < 0x1p-64) return r;
    if (p >= policy.max_bits + 2 * qbits)
      throw PrecisionExhausted("best_approx_error: cannot resolve ||q_k alpha||", p, k);
  }
}

std::vector<std::int64_t> ostrowski(const IrrationalSpec& spec, const BigInt& n, const PrecisionPolicy& policy) {
  if (n < 1) throw std::invalid_argument("ostrowski: n must be >= 1");
  const std::size_t top = locate_block(spec, n, policy);
  std::vector<BigInt> q(top + 1);
  for (std::size_t k = 0; k <= top; ++k) q[k] = detail::convergent_at(spec.state(), k, policy).second;
  std::vector<std::int64_t> b(top + 1, 0);
  BigInt rest = n, digit;
  for (std::size_t k = top + 1; k-- > 0;) {
    if (rest == 0) break;
    mpz_fdiv_qr(digit.get_mpz_t(), rest.get_mpz_t(), rest.get_mpz_t(), q[k].get_mpz_t());
    b[k] = to_digit(digit);
  }
  return b;
}

BigInt ostrowski_value(std::span<const BigInt> q, std::span<const std::int64_t> b) {
  if (b.size() > q.size()) throw std::invalid_argument("ostrowski_value: not enough convergents");
  BigInt total = 0;
  for (std::size_t k = 0; k < b.size(); ++k) total += q[k] * static_cast<long>(b[k]);
  return total;
}

bool ostrowski_admissible(std::span<const std::int64_t> digits, std::span<const std::int64_t> b) {
  if (b.empty()) return true;
  if (digits.size() < b.size() + 1) return false;
  if (b[0] < 0 || b[0] > digits[1] - 1) return false;
  for (std::size_t k = 1; k < b.size(); ++k) {
    if (b[k] < 0 || b[k] > digits[k + 1]) return false;
    if (b[k] == digits[k + 1] && b[k - 1] != 0) return false;
  }
  return true;
}

}  // namespace diosum
