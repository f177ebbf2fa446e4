#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "diosum/ball.hpp"
#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"
#include "diosum/rational.hpp"

namespace diosum {

struct Convergent {
  BigInt p;
  BigInt q;
};

struct CfStats {
  BigInt sum;        // s_K = a_1 + ... + a_K
  std::int64_t max;  // max a_k, 1 <= k <= K
  BigInt trimmed;    // s_K - max
};

/// Digits a_0..a_K with their convergents and partial-quotient sums.
/// Immutable once built; safe to share between threads.
struct ContinuedFractionData {
  std::vector<std::int64_t> digits;  // a_0..a_K
  std::vector<BigInt> p;             // p_0..p_K
  std::vector<BigInt> q;             // q_0..q_K
  std::vector<BigInt> s;             // s[k] = a_1 + ... + a_k, s[0] = 0

  std::size_t K() const noexcept { return digits.size() - 1; }
  std::int64_t a(std::size_t k) const { return digits.at(k); }
  std::int64_t max_quotient() const;
  BigInt trimmed_sum() const;
};

/// a_0..a_K of alpha. Quadratic surds and explicit digits are exact;
/// lazy-uniform and integer roots are certified from dyadic enclosures and
/// throw PrecisionExhausted when the cap is too small.
std::vector<std::int64_t> expand(const IrrationalSpec& spec, std::size_t K,
                                 const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// (p_k, q_k) from the recurrence with seeds p_{-1} = 1, q_{-1} = 0,
/// p_{-2} = 0, q_{-2} = 1.
std::vector<Convergent> convergents(std::span<const std::int64_t> digits);

/// Requires at least a_0 and a_1.
CfStats stats(std::span<const std::int64_t> digits);

ContinuedFractionData cf_data(std::vector<std::int64_t> digits);
ContinuedFractionData cf_data(const IrrationalSpec& spec, std::size_t K,
                              const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// Largest K with q_K <= N < q_{K+1}.
std::size_t locate_block(const IrrationalSpec& spec, const BigInt& N,
                         const PrecisionPolicy& policy = PrecisionPolicy::from_env());
std::size_t locate_block(const IrrationalSpec& spec, std::uint64_t N,
                         const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// Ball around ||q_k alpha||, refined until its relative radius is below 2^-64.
BallReal best_approx_error(const IrrationalSpec& spec, std::size_t k,
                           const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// Greedy Ostrowski digits b_0..b_m with n = sum b_k q_k, 0 <= b_0 < a_1,
/// 0 <= b_k <= a_{k+1}, and b_k = a_{k+1} forcing b_{k-1} = 0.
std::vector<std::int64_t> ostrowski(const IrrationalSpec& spec, const BigInt& n,
                                    const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// sum b_k q_k.
BigInt ostrowski_value(std::span<const BigInt> q, std::span<const std::int64_t> b);

/// Checks the digit constraints of ostrowski() against a_0, a_1, ...
bool ostrowski_admissible(std::span<const std::int64_t> digits, std::span<const std::int64_t> b);

}  // namespace diosum
