#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "horo/horosphere.hpp"

namespace horo {

/// Per-factor slice choices: the whole factor, a line toward ξ_i, or {o_i}.
struct SliceFull {};
struct SliceLine {
  GeodesicLine line;
};
struct SliceBase {};
using SliceChoice = std::variant<SliceFull, SliceLine, SliceBase>;

struct SliceSpec {
  std::vector<SliceChoice> choices;
  /// Line index solved for by the horosphere equation. Defaults to the Line
  /// with the largest θ_i (lowest index on ties).
  std::optional<std::size_t> dependent;
};

/// Full on `full`, line_through(o_i, ξ_i) on the rest of I⁺(θ), Base elsewhere.
SliceSpec standard_slice_spec(const Horosphere& h, const std::vector<std::size_t>& full);

/// Full on every index of I⁺(θ) except the one with the largest θ_i, which
/// becomes the dependent line: the largest slice, k = q − 1.
SliceSpec widest_slice_spec(const Horosphere& h);

/// Chart coordinates: factor points on the Full indices, then line parameters
/// t_l on the non-dependent Line indices (both ascending by factor index).
struct ChartPoint {
  std::vector<FactorPoint> full;
  Eigen::VectorXd params;
};

/// Validated k-slice of a horosphere with its chart data.
class Slice {
 public:
  const Horosphere& horosphere() const { return horosphere_; }
  const ProductSpace& space() const { return horosphere_.space(); }
  std::size_t k() const { return full_.size(); }

  const std::vector<std::size_t>& full_indices() const { return full_; }
  /// Line indices other than the dependent one.
  const std::vector<std::size_t>& param_indices() const { return params_; }
  const std::vector<std::size_t>& base_indices() const { return base_; }
  std::size_t dependent() const { return dependent_; }
  double dependent_slope() const { return horosphere_.center().slope()[dependent_]; }
  /// Normalized line on a Line index (β_{ξ_i}(o_i, line(0)) = 0).
  const GeodesicLine& line(std::size_t i) const;

 private:
  friend Slice make_slice(const Horosphere& h, SliceSpec spec);
  explicit Slice(Horosphere h) : horosphere_(std::move(h)) {}

  Horosphere horosphere_;
  std::vector<std::optional<GeodesicLine>> lines_;
  std::vector<std::size_t> full_, params_, base_;
  std::size_t dependent_ = 0;
};

/// Throws InvalidSliceError when `spec` does not describe a k-slice with
/// k ≤ q − 1. Lines are reparametrized so that line(0) lies on the horosphere
/// slice through o.
Slice make_slice(const Horosphere& h, SliceSpec spec);

/// Membership in the slice: on the horosphere, Base coordinates at o_i and
/// Line coordinates on their lines, all within tol.
bool in_slice(const Slice& s, const ProductPoint& x, double tol = kMembershipTolerance);

/// pr(x). Throws NotInSliceError when x is not in the slice.
ChartPoint chart_forward(const Slice& s, const ProductPoint& x);

/// pr⁻¹(c): the dependent line parameter is
/// t_dep = −(1/θ_dep)·Σ_{i≠dep} θ_i β_{ξ_i}(o_i, x_i).
ProductPoint chart_inverse(const Slice& s, const ChartPoint& c);

/// d̄: product metric of the full factors and Euclidean line parameters.
double chart_distance(const Slice& s, const ChartPoint& a, const ChartPoint& b);

struct SlicePath {
  std::vector<double> times;
  std::vector<ProductPoint> points;
  /// Dependent line parameter γ(t) at each sample.
  std::vector<double> gammas;
  double chart_distance = 0.0;
  /// Sum of extrinsic chord lengths.
  double length = 0.0;
};

/// Path from x to y inside the slice: every non-dependent coordinate moves
/// along its geodesic at constant speed d_i/d̄ over t ∈ [0, d̄], the dependent
/// coordinate is solved pointwise. Length ≤ √(1 + 1/θ_dep²)·d̄.
SlicePath slice_path(const Slice& s, const ProductPoint& x, const ProductPoint& y, int samples = 1024);

/// √(1 + 1/θ_dep²), the constant of the constructive path bound.
double path_constant(const Slice& s);

struct BilipschitzConstants {
  double lower = 1.0;
  double upper = 1.0;
};

/// d̄ ≤ d_S ≤ upper·d̄ with upper = √(1 + max_{i∈I⁺} 1/θ_i²).
BilipschitzConstants bilipschitz_constants(const Slice& s);

}  // namespace horo
