#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diosum/rational.hpp"

namespace diosum {

/// (P + sqrt(D)) / Q with D > 0 not a perfect square and Q != 0.
struct QuadraticSurd {
  BigInt P;
  BigInt D;
  BigInt Q;
};

/// Euler's number, expanded from its closed digit pattern [2; 1,2,1, 1,4,1, ...].
struct EulerNumber {};

/// [a0; prefix..., period, period, ...]. The period repeats forever, which
/// keeps the number irrational; it defaults to all ones.
struct ExplicitDigits {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> prefix;
  std::vector<std::int64_t> period{1};
};

/// A uniform sample from (0,1) whose binary digits come lazily from a
/// seeded generator. Digits are certified by refining a dyadic interval.
struct LazyUniform {
  std::uint64_t seed = 0;
};

/// radicand^(1/degree) for a radicand that is not a perfect power. Used for
/// the cubic pair (2^{1/3}, 2^{2/3}) in the multidimensional sums.
struct IntegerRoot {
  std::uint64_t radicand = 2;
  unsigned degree = 3;
};

namespace detail {
struct SpecState;
}

/// A constructive description of an irrational number. Cheap to copy; copies
/// share one cache of expanded digits and numeric enclosures, which is
/// internally synchronized.
class IrrationalSpec {
 public:
  using Kind = std::variant<QuadraticSurd, EulerNumber, ExplicitDigits, LazyUniform, IntegerRoot>;

  static IrrationalSpec quadratic_surd(BigInt P, BigInt D, BigInt Q);
  static IrrationalSpec golden_ratio();
  static IrrationalSpec sqrt2();
  static IrrationalSpec euler();
  static IrrationalSpec explicit_digits(std::int64_t a0, std::vector<std::int64_t> prefix,
                                        std::vector<std::int64_t> period = {1});
  static IrrationalSpec lazy_uniform(std::uint64_t seed);
  static IrrationalSpec integer_root(std::uint64_t radicand, unsigned degree);

  const Kind& kind() const;
  /// Spec string accepted by parse_spec().
  const std::string& name() const;

  bool is_quadratic_surd() const { return std::holds_alternative<QuadraticSurd>(kind()); }

  detail::SpecState& state() const { return *state_; }

 private:
  IrrationalSpec(Kind kind, std::string name);
  std::shared_ptr<detail::SpecState> state_;
};

/// Parses phi | sqrt2 | e | cbrt2 | cbrt4 | surd:P,D,Q | root:M,k |
/// uniform:SEED | digits:A0;A1,...,Ak[;P1,...,Pm].
IrrationalSpec parse_spec(std::string_view text);

}  // namespace diosum
