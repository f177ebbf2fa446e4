#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "diosum/ball.hpp"
#include "diosum/fixed_orbit.hpp"
#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"
#include "diosum/rational.hpp"

namespace diosum {

/// Enclosure of alpha with radius <= 2^(1 - precision). Larger precision
/// never gives a wider ball.
BallReal eval_alpha(const IrrationalSpec& spec, unsigned precision,
                    const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// {alpha} in 128-bit fixed point, cached per spec.
FixedReal fixed_alpha(const IrrationalSpec& spec, const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// ||n alpha + beta|| from alpha evaluated at exactly `precision` bits.
BallReal dist_nearest_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, unsigned precision,
                         const PrecisionPolicy& policy = PrecisionPolicy::from_env());

/// ||n alpha + beta||, refined until the ball is positive with relative
/// radius below 2^-64.
BallReal dist_nearest(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta = 0,
                      const PrecisionPolicy& policy = PrecisionPolicy::from_env());

struct FracPair {
  BallReal frac;        // {n alpha + beta}
  BallReal complement;  // 1 - {n alpha + beta}
};

/// nullopt when the enclosure of n alpha + beta straddles an integer.
std::optional<FracPair> try_frac_part_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta,
                                         unsigned precision,
                                         const PrecisionPolicy& policy = PrecisionPolicy::from_env());
FracPair frac_part_at(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta, unsigned precision,
                      const PrecisionPolicy& policy = PrecisionPolicy::from_env());
FracPair frac_part(std::uint64_t n, const IrrationalSpec& spec, const Rational& beta = 0,
                   const PrecisionPolicy& policy = PrecisionPolicy::from_env());

enum class Outcome { below, above };

struct ThresholdDecision {
  Outcome outcome;     // above means value >= threshold
  unsigned precision;  // working precision that separated the two
};

/// Evaluates `value` at doubling precision until its ball lies strictly on
/// one side of `threshold`. Throws PrecisionExhausted at the cap.
ThresholdDecision compare_threshold(const std::function<BallReal(unsigned)>& value, const Rational& threshold,
                                    const PrecisionPolicy& policy = PrecisionPolicy::from_env());

}  // namespace diosum
