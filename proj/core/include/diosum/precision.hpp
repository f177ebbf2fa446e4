#pragma once

namespace diosum {

/// Working-precision schedule for certified evaluations: start at
/// `start_bits`, double on demand, give up past `max_bits`.
struct PrecisionPolicy {
  unsigned start_bits = 128;
  unsigned max_bits = 65536;

  /// Defaults, with the cap overridden by DIOSUM_MAX_PRECISION_BITS when that
  /// variable holds a positive integer.
  static PrecisionPolicy from_env();
};

}  // namespace diosum
