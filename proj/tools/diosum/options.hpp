#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <diosum/irrational.hpp>
#include <diosum/sums.hpp>

namespace diosum::cli {

/// Spec strings from repeated --alpha values, each of which may itself be a
/// comma list. Commas inside surd:P,D,Q and friends are kept: a piece that
/// does not start with a letter continues the previous spec.
std::vector<std::string> split_spec_list(const std::vector<std::string>& values);
std::vector<IrrationalSpec> parse_specs(const std::vector<std::string>& values);

/// "100,1e3,5000".
std::vector<std::uint64_t> parse_n_list(const std::string& text);

/// "a:b:xR" -> floor(a R^i) for every i with a R^i <= b, duplicates dropped.
/// R is rational and must exceed 1.
std::vector<std::uint64_t> parse_n_geom(const std::string& text);

/// one | 1 | inverse-n | 1/n | linf.
Weight parse_weight(const std::string& text);
std::string weight_name(Weight w);

/// Moves "--config FILE" out of `args` and splices the file's key = value
/// pairs in after the subcommand name as --key value, skipping keys already
/// given on the command line. A value of true becomes a bare flag, false is
/// dropped. `args` excludes the program name.
void apply_config(std::vector<std::string>& args);

}  // namespace diosum::cli
