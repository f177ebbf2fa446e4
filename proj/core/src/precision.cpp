#include "diosum/precision.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace diosum {

PrecisionPolicy PrecisionPolicy::from_env() {
  PrecisionPolicy policy;
  if (const char* env = std::getenv("DIOSUM_MAX_PRECISION_BITS")) {
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) policy.max_bits = value;
  }
  if (policy.start_bits > policy.max_bits) policy.start_bits = policy.max_bits;
  return policy;
}

}  // namespace diosum
