#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "table.hpp"

namespace diosum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecision = 3;
inline constexpr int kExitBlockMismatch = 4;

struct GridArgs {
  std::string n_list;
  std::string n_geom;

  std::vector<std::uint64_t> values() const;
};

struct ExpandArgs {
  std::vector<std::string> alpha;
  std::size_t terms = 10;
};

struct SumArgs {
  std::string family;
  std::vector<std::string> alpha;
  GridArgs grid;
  std::optional<std::string> c;
  std::optional<std::string> weight;
  std::optional<std::string> beta;
  std::string mode = "exclude-min";
  bool fractional = false;
};

struct CompareArgs {
  std::string theorem;
  std::vector<std::string> alpha;
  GridArgs grid;
  std::optional<std::string> c;
  std::optional<std::string> weight;
  std::optional<std::string> beta;
  std::optional<std::string> t;
  std::string variant = "frac";
  std::optional<std::size_t> K;
};

struct McArgs {
  std::size_t samples = 100;
  std::uint64_t seed0 = 0;
  std::optional<std::string> N;
  std::string c = "1/2";
  std::optional<std::size_t> K;
  std::string stat = "auto";
};

// Each returns the process exit code. Usage errors surface as
// std::invalid_argument, precision trouble as the library's exceptions.
int run_expand(const ExpandArgs& args, Format format);
int run_sum(const SumArgs& args, Format format);
int run_compare(const CompareArgs& args, Format format);
int run_mc(const McArgs& args, Format format);

}  // namespace diosum::cli
