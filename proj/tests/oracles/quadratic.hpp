#pragma once

// Exact arithmetic in Q(sqrt D), test-only. Shares nothing with the library's
// numeric paths: every decision reduces to integer comparisons.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

#include <diosum/ball.hpp>

namespace oracle {

// (a + b sqrt(D)) / c with c > 0.
struct QuadraticNumber {
  mpz_class a, b, c, D;

  static QuadraticNumber surd(const mpz_class& P, const mpz_class& D, const mpz_class& Q) {
    if (Q == 0) throw std::invalid_argument("Q = 0");
    QuadraticNumber x{P, 1, Q, D};
    if (Q < 0) {
      x.a = -x.a;
      x.b = -x.b;
      x.c = -x.c;
    }
    return x;
  }

  QuadraticNumber times(const mpz_class& n) const { return {a * n, b * n, c, D}; }

  QuadraticNumber plus(const mpq_class& q) const {
    // (a + b sqrt D)/c + p/r = (a r + p c + b r sqrt D) / (c r)
    return {a * q.get_den() + q.get_num() * c, b * q.get_den(), c * q.get_den(), D};
  }

  // sign of a + b sqrt(D)
  static int sign_of(const mpz_class& a, const mpz_class& b, const mpz_class& D) {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const int cmp = sgn(mpz_class(a * a - b * b * D));  // compares |a| against |b| sqrt D
    return sa > 0 ? cmp : -cmp;
  }

  int sign() const { return sign_of(a, b, D); }

  // sign(x - p/q)
  int compare(const mpq_class& r) const {
    return sign_of(a * r.get_den() - r.get_num() * c, b * r.get_den(), D);
  }

  mpz_class floor() const {
    if (b == 0) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
      return f;
    }
    // b sqrt D lies strictly between consecutive integers, so a + b sqrt D is
    // in (m, m + 1) and no multiple of c can fall inside that open interval
    mpz_class r;
    const mpz_class bb = b * b * D;
    mpz_sqrt(r.get_mpz_t(), bb.get_mpz_t());
    const mpz_class m = b > 0 ? mpz_class(a + r) : mpz_class(a - r - 1);
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), m.get_mpz_t(), c.get_mpz_t());
    return f;
  }

  QuadraticNumber frac() const { return {a - floor() * c, b, c, D}; }

  QuadraticNumber one_minus() const { return {c - a, -b, c, D}; }

  // ||x||
  QuadraticNumber dist_nearest() const {
    QuadraticNumber f = frac();
    return f.compare(mpq_class(1, 2)) <= 0 ? f : f.one_minus();
  }

  double to_double() const {
    mpf_class s(0, 256);
    mpf_class d(D, 256);
    s = sqrt(d);
    mpf_class v = (mpf_class(a, 256) + mpf_class(b, 256) * s) / mpf_class(c, 256);
    return v.get_d();
  }
};

inline mpq_class exact(const diosum::Mpfr& x) {
  mpz_class m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.get());
  mpq_class q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q = s;
  } else {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q = mpq_class(m, den);
    q.canonicalize();
  }
  return q;
}

// lower <= x <= upper, decided exactly
inline bool ball_contains(const diosum::BallReal& ball, const QuadraticNumber& x) {
  return x.compare(exact(ball.lower())) >= 0 && x.compare(exact(ball.upper())) <= 0;
}

}  // namespace oracle
