#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "diosum/ball.hpp"
#include "diosum/fixed_orbit.hpp"
#include "diosum/irrational.hpp"

namespace diosum::detail {

/// Append-only stream of uniform random bits (most significant bit of word 0
/// first). A prefix never changes once handed out.
class UniformBits {
 public:
  explicit UniformBits(std::uint64_t seed) : engine_(seed) {}

  /// The first `bits` bits as an integer in [0, 2^bits). `bits` must be a
  /// multiple of 64.
  BigInt prefix(unsigned bits);

 private:
  std::mutex mutex_;
  std::mt19937_64 engine_;
  std::vector<std::uint64_t> words_;
};

/// Shared, lazily filled cache behind an IrrationalSpec.
struct SpecState {
  SpecState(IrrationalSpec::Kind k, std::string n);

  const IrrationalSpec::Kind kind;
  const std::string name;

  std::mutex mutex;

  // Expansion cache: digits a_0.. and convergents p_k, q_k for the same range.
  std::vector<std::int64_t> digits;
  std::vector<BigInt> p;
  std::vector<BigInt> q;

  // Periodic surd iteration, canonical form (P + sqrt D) / Q with Q | D - P^2.
  BigInt surd_P, surd_Q, surd_D, surd_isqrt;

  // Bits of the dyadic enclosure used by interval-certified expansions.
  unsigned interval_bits = 0;

  std::map<unsigned, BallReal> alpha_balls;
  std::optional<FixedReal> fixed_alpha;

  std::unique_ptr<UniformBits> bits;
};

}  // namespace diosum::detail
