#pragma once

#include <cstdint>

#include "diosum/ball.hpp"
#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"

namespace diosum::detail {

// The MPFR route of discrepancy(), without the 96-bit fast path in front.
BallReal discrepancy_mpfr(const IrrationalSpec& spec, std::uint64_t N, const PrecisionPolicy& policy);

}  // namespace diosum::detail
