#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "phylocons/phylocons.hpp"

namespace phylocons::cli {

enum class Method { kMajorityPlus, kFreqDiff, kMajorityOracle, kStrictOracle };

struct Options {
  Method method = Method::kMajorityPlus;
  FilterImpl filter = FilterImpl::kFast;
  WeightsMethod weights = WeightsMethod::kAuto;
};

struct GridPoint {
  std::size_t k = 0;
  std::size_t n = 0;
};

/// "k1,n1;k2,n2"; empty text gives an empty grid. Throws std::invalid_argument.
std::vector<GridPoint> parse_grid(const std::string& text);

Tree compute(const Profile& profile, const Options& options);

/// Median wall time in seconds of `reps` runs of `compute`.
double median_seconds(const Profile& profile, const Options& options, int reps);

/// Exit codes: 0 ok, 1 usage or I/O, 2 parse error, 3 leaf-set mismatch,
/// 4 oracle mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace phylocons::cli
