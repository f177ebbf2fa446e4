#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace diosum {

/// Exact rational number. Cutoffs, thresholds and shifts are always rationals
/// so that comparisons against irrational values can be certified.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "a/b", an integer, or a finite decimal literal ("0.3", "1e-2") into
/// an exact rational. Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Parses a positive integer written either plainly or in scientific
/// notation with an integral value ("1e6", "2.5e3").
std::uint64_t parse_count(std::string_view text);

std::string to_string(const Rational& q);

inline BigInt to_bigint(std::uint64_t v) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

inline BigInt to_bigint(std::int64_t v) {
  if (v >= 0) return to_bigint(static_cast<std::uint64_t>(v));
  // two's-complement safe negation
  BigInt z = to_bigint(static_cast<std::uint64_t>(-(v + 1)));
  return -(z + 1);
}

/// Converts a nonnegative BigInt that fits into 64 bits. Throws
/// std::overflow_error otherwise.
std::uint64_t to_u64(const BigInt& z);

/// Fractional part of a rational, in [0, 1).
Rational frac(const Rational& q);

/// floor(q) as an integer.
BigInt floor(const Rational& q);

}  // namespace diosum
