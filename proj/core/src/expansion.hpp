#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "diosum/precision.hpp"
#include "diosum/rational.hpp"
#include "spec_state.hpp"

namespace diosum::detail {

/// Grows the cached digits and convergents of `state` to at least `count`
/// entries. Takes the state lock.
void ensure_digits(SpecState& state, std::size_t count, const PrecisionPolicy& policy);

std::vector<std::int64_t> digit_prefix(SpecState& state, std::size_t count, const PrecisionPolicy& policy);

/// (p_k, q_k) copied out of the cache.
std::pair<BigInt, BigInt> convergent_at(SpecState& state, std::size_t k, const PrecisionPolicy& policy);

/// Smallest k with q_k * q_{k+1} >= bound, together with both convergents.
struct ConvergentPair {
  BigInt p0, q0, p1, q1;
};
ConvergentPair convergents_beyond(SpecState& state, const BigInt& bound, const PrecisionPolicy& policy);

}  // namespace diosum::detail
