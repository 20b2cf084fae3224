#pragma once

#include <functional>
#include <optional>

#include "horo/model_space.hpp"

namespace horo {

/// Distance in a model factor. Throws DomainError for invalid points.
double distance(const ModelSpace& space, const FactorPoint& x, const FactorPoint& y);

/// Closed-form Busemann function β_ξ(x, y), normalized so that it equals
/// d(x, y) when y lies on the ray σ_{x,ξ} (it grows toward ξ).
///
///   Euclidean, direction v:   ⟨y − x, v⟩
///   hyperbolic, ξ = ∞:        log(Im y / Im x)
///   hyperbolic, ξ = u ∈ R:    log(Im y·|x − u|² / (Im x·|y − u|²))
///   tree, end Ξ:              h(x) − h(y), h(p) = depth(p) − 2·min(depth(p), lcp(p, Ξ))
double busemann_closed(const ModelSpace& space, const FactorBoundaryPoint& xi, const FactorPoint& x,
                       const FactorPoint& y);

/// How far out along a ray a limit is pursued.
struct Horizon {
  double max_horizon = 1048576.0;  // 2^20
  /// Accept the last estimate at the cap instead of failing (double precision
  /// saturates before the cap matters, e.g. e^s in the hyperbolic plane).
  bool accept_at_cap = false;
  double tolerance = 1e-10;
  /// Sampling starts at the first grid point at or beyond this horizon (the
  /// ray must have passed the projections of the evaluated points).
  double min_horizon = 0.0;
  /// Ratio between successive sample points.
  double growth = 2.0;
  /// Columns of the extrapolation table in 1/s.
  int columns = 3;
};

Horizon default_horizon(const ModelSpace& space);

/// lim_{s→∞} f(s) sampled on the geometric grid s = s0·growth^k. Both the raw
/// values and a Richardson table in 1/s are tracked; whichever first has two
/// successive values agreeing to tolerance twice in a row is returned. At the
/// cap, `accept_at_cap` returns the steadier of the two, otherwise
/// ConvergenceError is thrown.
double limit_at_infinity(const std::function<double(double)>& f, const Horizon& horizon);

struct LimitOptions {
  /// Start of the representative ray; defaults to x.
  std::optional<FactorPoint> ray_base;
  std::optional<Horizon> horizon;
};

/// β_ξ(x, y) as lim (d(x, σ(s)) − d(y, σ(s))) along a ray σ in the class of ξ.
double busemann_limit(const ModelSpace& space, const FactorBoundaryPoint& xi, const FactorPoint& x,
                      const FactorPoint& y, const LimitOptions& options = {});

}  // namespace horo
