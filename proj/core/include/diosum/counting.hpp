#pragma once

#include <cstdint>
#include <span>
#include <utility>

#include "diosum/ball.hpp"
#include "diosum/continued_fraction.hpp"
#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"
#include "diosum/rational.hpp"
#include "diosum/sums.hpp"

namespace diosum {

enum class CountVariant { dist, frac, complement };

/// |{1 <= n <= N : value(n alpha + beta) <= t}| by checking every n.
std::uint64_t count_dist_le(const IrrationalSpec& spec, std::uint64_t N, const Rational& t,
                            CountVariant variant = CountVariant::dist, const Rational& beta = 0,
                            const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// Same count as count_dist_le with beta = 0, from floor sums of n alpha
/// evaluated at dyadic bounds of alpha; O(log N) big-integer steps.
std::uint64_t count_fast(const IrrationalSpec& spec, std::uint64_t N, const Rational& t,
                         CountVariant variant = CountVariant::dist,
                         const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct PigeonholeBound {
  std::size_t K;
  Rational value;  // 4 q_{K+1} t + 1
  BigInt floor;    // largest integer the count can reach
};

PigeonholeBound pigeonhole_bound(const IrrationalSpec& spec, std::uint64_t N, const Rational& t,
                                 const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// sup over intervals I in [0,1] of | #{n <= N : {n alpha} in I} - N |I| |.
BallReal discrepancy(const IrrationalSpec& spec, std::uint64_t N,
                     const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct Extrema {
  Rational max;
  Rational min;
};

/// max and min over 1 <= N < q_{K+1} of #{n <= N : {n alpha} <= t} - tN.
Extrema local_disc_extrema(const IrrationalSpec& spec, std::size_t K, const Rational& t,
                           const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// Main terms of the local discrepancy extrema: the sum over even k in 1..K of
/// {q_k t}(a_{k+1}(1 - {q_k t}) + {q_{k+1} t} - {q_{k-1} t}), and minus the
/// same sum over odd k. `cf` must reach index K + 1.
Extrema schoissengeier_prediction(const ContinuedFractionData& cf, std::size_t K, const Rational& t);

/// |{n in [-N, N]^d \ {0} : ||n . alpha|| <= t}| for 0 < t <= 1/2.
std::uint64_t count_multidim(std::span<const IrrationalSpec> specs, std::uint64_t N, const Rational& t,
                             const PrecisionPolicy& policy = PrecisionPolicy::from_env(), bool half_lattice = true);

}  // namespace diosum
