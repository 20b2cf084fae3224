#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "horo/slice.hpp"

namespace horo {

/// Tally of one property over many random trials. A trial fails when its
/// error exceeds the tolerance; `worst` is the largest error seen.
struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst = 0.0;

  void record(double error);
  bool passed() const { return trials > 0 && failures == 0; }
};

/// Adds the tallies of `more` into `into`, matching checks by name.
void merge(std::vector<CheckResult>& into, const std::vector<CheckResult>& more);

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t busemann_trials = 1000;
  /// Chart round trips and path checks, spread over all slices checked.
  std::size_t chart_trials = 10000;
  std::size_t path_trials = 200;
  int path_samples = 256;
};

/// Closed form vs ray limit, cocycle, |β| ≤ d and the on-ray equality case
/// for random points and ends of one factor.
std::vector<CheckResult> check_factor_busemann(const ModelSpace& space, const VerifyOptions& options);

/// The same properties for the product Busemann function, with the closed
/// form given by the factor decomposition. Directions are drawn at random
/// (singular ones included) unless `direction` is given.
std::vector<CheckResult> check_product_busemann(const ProductSpace& space,
                                                const std::optional<BoundaryDirection>& direction,
                                                const VerifyOptions& options);

/// Every slice spec of h: each set F ⊂ I⁺(θ) of at most q − 1 full indices,
/// with each remaining index of I⁺(θ) in turn as the dependent line.
std::vector<SliceSpec> slice_family(const Horosphere& h);

/// Chart round trips, d̄ ≤ d, the constructive path bound and horosphere
/// membership of every path sample; `chart_trials` and `path_trials` are
/// used as given for this one slice.
std::vector<CheckResult> check_slice(const Slice& slice, const VerifyOptions& options);

/// check_slice over slice_family(h), trial budgets split evenly.
std::vector<CheckResult> check_slice_family(const Horosphere& h, const VerifyOptions& options);

/// Everything above for one space and direction: each distinct factor, the
/// product with the given and with random directions, and the slice families
/// of the horospheres through the default base point and a random one.
std::vector<CheckResult> verify_suite(const ProductSpace& space, const BoundaryDirection& direction,
                                      const VerifyOptions& options);

}  // namespace horo
