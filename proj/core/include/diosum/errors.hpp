#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace diosum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certified decision could not be reached below the configured precision
/// cap. `index()` names the offending summation index when there is one.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, unsigned bits,
                     std::optional<std::uint64_t> index = std::nullopt)
      : Error(what), bits_(bits), index_(index) {}

  unsigned bits() const noexcept { return bits_; }
  std::optional<std::uint64_t> index() const noexcept { return index_; }

 private:
  unsigned bits_;
  std::optional<std::uint64_t> index_;
};

/// N lies outside the block [q_K, q_{K+1}) of the continued-fraction data
/// handed to a prediction.
class BlockMismatch : public Error {
 public:
  using Error::Error;
};

/// Some nonzero integer vector n makes n . alpha an integer, as far as can be
/// told at the precision cap.
class RationalDependence : public Error {
 public:
  using Error::Error;
};

}  // namespace diosum
