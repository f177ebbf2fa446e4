#pragma once

#include "diosum/rational.hpp"

namespace diosum::detail {

/// sum_{i=0}^{n-1} floor((a i + b) / m) for n >= 0, m > 0 and any integers a, b.
BigInt floor_sum(BigInt n, BigInt m, BigInt a, BigInt b);

}  // namespace diosum::detail
