#pragma once

// Shared evaluation loop behind the sums and counts: every index is first
// tried in 128-bit fixed point and, when that cannot certify the term, handed
// to the MPFR path with doubling precision. Term bounds are accumulated as
// exact integers (scaled by 2^64), so totals do not depend on evaluation order
// or thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diosum/irrational.hpp"
#include "diosum/precision.hpp"
#include "diosum/rational.hpp"

namespace diosum::detail {

inline constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
inline constexpr long kFracBits = 64;

/// 256-bit unsigned accumulator.
class Acc256 {
 public:
  /// Adds floor(x * 2^64) (round_up = false) or ceil(x * 2^64), x >= 0 finite.
  void add(double x, bool round_up) noexcept;
  void add(const Acc256& other) noexcept;
  BigInt value() const;

 private:
  void add_shifted(std::uint64_t m, int shift, bool round_up) noexcept;
  std::uint64_t w_[4] = {0, 0, 0, 0};
};

enum class ValueKind { dist, frac, complement };

struct TermRule {
  ValueKind value = ValueKind::dist;
  bool inverse_n = false;              // weight 1/n instead of 1
  std::optional<Rational> threshold;   // keep the term only when value >= threshold
  Rational beta = 0;
  std::optional<std::uint64_t> exclude;
};

struct KernelTotals {
  BigInt lo;  // sum of lower term bounds, scaled by 2^64
  BigInt hi;
  std::uint64_t terms = 0;
  unsigned precision = 128;
};

KernelTotals sum_terms(const IrrationalSpec& spec, std::uint64_t N, const TermRule& rule, double rel_tolerance,
                       const PrecisionPolicy& policy);

/// |{1 <= n <= N : value(n) < t}| for t > 0 (equality cannot occur).
std::uint64_t count_below(const IrrationalSpec& spec, std::uint64_t N, ValueKind value, const Rational& beta,
                          const Rational& t, const PrecisionPolicy& policy);

/// Index minimizing value(n) over 1..N.
std::uint64_t argmin_value(const IrrationalSpec& spec, std::uint64_t N, ValueKind value, const Rational& beta,
                           const PrecisionPolicy& policy);

struct LatticeRule {
  bool linf_weight = false;           // weight ||n||_inf^-d
  std::optional<Rational> count_at;   // count ||n.alpha|| <= t instead of summing
  bool half_lattice = true;
};

struct LatticeTotals {
  BigInt lo, hi;  // sums scaled by 2^64
  std::uint64_t count = 0;
  std::uint64_t terms = 0;
  unsigned precision = 128;
};

LatticeTotals lattice_terms(std::span<const IrrationalSpec> specs, std::uint64_t N, const LatticeRule& rule,
                            double rel_tolerance, const PrecisionPolicy& policy);

}  // namespace diosum::detail
