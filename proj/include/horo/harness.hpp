#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "horo/net.hpp"
#include "horo/slice.hpp"

namespace horo {

// --- horocyclic coordinates and sampled regions -----------------------------

/// Point of a factor from horocyclic coordinates about (o, ξ): o sits at the
/// origin, ξ straight up, and the last coordinate s equals β_ξ(o, p).
/// Hyperbolic: (x, s) ↦ the point x + i·e^s of the frame sending ξ to ∞ and
/// o to i. Euclidean ℝⁿ: (x_1, ..., x_{n−1}, s) in an orthonormal frame whose
/// last axis is ξ. Trees have no such coordinates (UsageError).
FactorPoint from_horocyclic(const ModelSpace& space, const FactorPoint& o, const FactorBoundaryPoint& xi,
                            const Eigen::VectorXd& coords);

/// Box of chart coordinates: horocyclic windows on the full factors of a
/// slice (hyperbolic windows are sampled uniformly in area, i.e. with density
/// ∝ e^{−s} in s) and a box for the line parameters.
struct Region {
  std::vector<Eigen::VectorXd> lo, hi;
  Eigen::VectorXd param_lo, param_hi;
};

/// Zero-size region: every sample is o.
Region origin_region(const Slice& slice);

/// n points of the slice, sample j drawn from sub-stream j of the seed.
std::vector<ProductPoint> sample_region(const Slice& slice, const Region& region, std::size_t n,
                                        std::uint64_t seed);

/// max |b(p)| over the points.
double max_membership_error(const Horosphere& h, const std::vector<ProductPoint>& points);

// --- exponential-distortion control -----------------------------------------

struct ControlRow {
  double a = 0.0;
  double extrinsic = 0.0;
  double intrinsic_exact = 0.0;
  double intrinsic_net = 0.0;
};

/// Points i and a + i on the horocycle {Im = 1} of a single hyperbolic plane
/// for a = step, 2·step, ... ≤ a_max: extrinsic distance 2·asinh(a/2), exact
/// horocyclic length a, and the shortest path in an eps-net of the horocycle
/// with nodes every eps/2.
std::vector<ControlRow> horocycle_control(double a_max, double step, double eps = 0.05);

// --- distortion scans ---------------------------------------------------------

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares fit of log(value) against log(size). Needs at least three
/// samples; nonpositive entries throw DomainError.
LinearFit fit_exponent(const std::vector<std::array<double, 2>>& samples);

struct DistortionOptions {
  double extrinsic_min = 1.0;
  double extrinsic_max = 12.0;
  std::size_t pairs = 12;
  double eps = 0.6;
  std::size_t nodes = 20000;
  std::uint64_t seed = 1;
};

struct DistortionRow {
  std::size_t pair_id = 0;
  double extrinsic = 0.0;
  double intrinsic = 0.0;
  double ratio = 0.0;
};

struct DistortionResult {
  std::vector<DistortionRow> rows;
  LinearFit fit;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double max_membership_error = 0.0;
};

/// Intrinsic vs extrinsic distances on the widest slice of h (all of I⁺(θ)
/// full except the dependent line). Pairs join o to points on the horosphere
/// through o in the first full factor at log-spaced extrinsic distances; the
/// net samples the region those pairs' slice geodesics pass through, moving
/// only the first full factor. Throws UsageError when q < 2.
DistortionResult distortion_scan(const Horosphere& h, const DistortionOptions& options);

// --- cone fillings --------------------------------------------------------------

/// Closed loop of `vertices` points (the closing edge is implicit) whose chart
/// image is a round circle of the given radius: in the plane of the first
/// line parameter and the line toward ξ_f through o_f of the first full factor
/// f when the chart has line parameters, otherwise a metric circle about o_f
/// in factor f.
std::vector<ProductPoint> chart_circle(const Slice& slice, double radius, std::size_t vertices);

struct FilledDisc {
  std::vector<ProductPoint> vertices;
  std::vector<std::array<std::size_t, 3>> triangles;
  /// Indices of the input loop's vertices in `vertices`, in loop order.
  std::vector<std::size_t> boundary;
  double boundary_length = 0.0;
  double area = 0.0;
  double max_membership_error = 0.0;
};

/// Cone from the first loop vertex in chart coordinates: `layers` concentric
/// layers along chart geodesics, mapped back by chart_inverse. Area sums the
/// Euclidean comparison triangles of the extrinsic side lengths. Throws
/// NotInSliceError when a loop vertex is not in the slice.
FilledDisc cone_fill_loop(const Slice& slice, const std::vector<ProductPoint>& loop, int layers = 32);

struct FillRow {
  std::size_t loop_id = 0;
  double radius = 0.0;
  double boundary_length = 0.0;
  double area = 0.0;
  std::size_t n_triangles = 0;
};

struct DehnResult {
  std::vector<FillRow> rows;
  /// Exponent of area against boundary length.
  LinearFit fit;
  /// max over loops of area / radius².
  double max_area_ratio = 0.0;
  /// (1 + 1/θ_dep²)·π.
  double area_constant = 0.0;
  double max_membership_error = 0.0;
};

/// Fills chart circles of the given radii and fits the Dehn exponent.
DehnResult dehn_scan(const Slice& slice, const std::vector<double>& radii, std::size_t vertices = 256,
                     int layers = 32);

}  // namespace horo
