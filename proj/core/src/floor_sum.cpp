#include "floor_sum.hpp"

#include <stdexcept>

namespace diosum::detail {

// Euclid-like reduction: after clearing the integer parts of a/m and b/m the
// roles of a and m swap, so the loop runs O(log m) times.
BigInt floor_sum(BigInt n, BigInt m, BigInt a, BigInt b) {
  if (n < 0 || m <= 0) throw std::invalid_argument("floor_sum: need n >= 0 and m > 0");
  BigInt ans = 0, q, r;
  if (a < 0 || a >= m) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    ans += n * (n - 1) / 2 * q;
    a = r;
  }
  if (b < 0 || b >= m) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    ans += n * q;
    b = r;
  }
  while (true) {
    if (a >= m) {
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
      ans += n * (n - 1) / 2 * q;
      a = r;
    }
    if (b >= m) {
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
      ans += n * q;
      b = r;
    }
    BigInt y = a * n + b;
    if (y < m) break;
    mpz_fdiv_qr(n.get_mpz_t(), b.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
    m.swap(a);
  }
  return ans;
}

}  // namespace diosum::detail
