#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "horo/slice.hpp"

namespace horo {

enum ExitCode : int { kExitOk = 0, kExitPropertyFailure = 1, kExitUsage = 2 };

/// One command-line invocation. Unset fields take per-command defaults; a
/// field the command does not read is a usage error.
struct RunConfig {
  std::string command;
  std::optional<std::string> space;
  std::optional<std::uint64_t> seed;
  std::optional<double> eps;
  std::optional<std::size_t> n;
  std::optional<double> amax;
  std::optional<double> step;
  std::optional<std::string> out;
  std::optional<double> tol;
};

/// Radii of the chart circles filled by `fill`.
inline const std::vector<double> kFillRadii{1.0, 2.0, 4.0, 8.0, 16.0};

/// The 1-slice filled by `fill`: the index of I⁺(θ) with the smallest θ_i
/// (lowest on ties) is full, the others are lines. UsageError when q < 2.
SliceSpec fill_slice_spec(const Horosphere& h);

/// Commands:
///   verify      property suites for --space (--seed, --n trials per property)
///   distortion  distortion_scan of the horosphere through the base point
///   control     horocycle_control table (--amax, --step, --eps)
///   fill        cone fillings of chart circles in the fill slice (--n vertices)
///   chart       chart maps and a slice path between two seeded chart points
/// Data goes to --out when given, otherwise to `out`; diagnostics go to `err`.
/// Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace horo
