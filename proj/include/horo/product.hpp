#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "horo/geodesic.hpp"
#include "horo/metric.hpp"
#include "horo/model_space.hpp"

namespace horo {

/// X = X_1 × ... × X_r with d = sqrt(d_1² + ... + d_r²).
class ProductSpace {
 public:
  explicit ProductSpace(std::vector<ModelSpace> factors);

  std::size_t rank() const { return factors_.size(); }
  const ModelSpace& operator[](std::size_t i) const { return factors_[i]; }
  const std::vector<ModelSpace>& factors() const { return factors_; }

 private:
  std::vector<ModelSpace> factors_;
};

using ProductPoint = std::vector<FactorPoint>;

/// Unit vector θ with nonnegative entries (the set E).
class SlopeVector {
 public:
  /// Throws DomainError unless θ_i ≥ 0 and |‖θ‖ − 1| ≤ 1e-12.
  explicit SlopeVector(Eigen::VectorXd theta);
  /// Rescales a nonnegative, nonzero vector to unit norm.
  static SlopeVector normalized(const Eigen::VectorXd& raw);

  std::size_t size() const { return static_cast<std::size_t>(theta_.size()); }
  double operator[](std::size_t i) const { return theta_[static_cast<Eigen::Index>(i)]; }
  const Eigen::VectorXd& values() const { return theta_; }

  /// I⁺(θ) = {i : θ_i > 0}, ascending.
  std::vector<std::size_t> positive_indices() const;
  bool positive(std::size_t i) const { return (*this)[i] > 0.0; }

 private:
  Eigen::VectorXd theta_;
};

struct DirectionClass {
  bool regular = false;
  std::vector<std::size_t> positive;
  std::size_t q = 0;
};

/// Regular iff every θ_i > 0.
DirectionClass classify_direction(const SlopeVector& theta);

/// Point ξ̃ of ∂X_θ: a slope plus one factor end ξ_i per i ∈ I⁺(θ).
class BoundaryDirection {
 public:
  /// Throws DomainError unless ends are present exactly on I⁺(θ).
  BoundaryDirection(SlopeVector slope, std::vector<std::optional<FactorBoundaryPoint>> ends);

  const SlopeVector& slope() const { return slope_; }
  const std::vector<std::optional<FactorBoundaryPoint>>& ends() const { return ends_; }
  /// ξ_i; throws DomainError for i ∉ I⁺(θ).
  const FactorBoundaryPoint& end(std::size_t i) const;
  std::size_t q() const { return slope_.positive_indices().size(); }

 private:
  SlopeVector slope_;
  std::vector<std::optional<FactorBoundaryPoint>> ends_;
};

/// Componentwise equality (the cone topology on ∂X is not modeled).
bool same_direction(const BoundaryDirection& a, const BoundaryDirection& b, double tol = kPointTolerance);

void validate(const ProductSpace& space, const ProductPoint& x);
void validate(const ProductSpace& space, const BoundaryDirection& xi);

ProductPoint default_base_point(const ProductSpace& space);

double prod_distance(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y);

/// θ_i = d_i(x_i, y_i)/d(x, y). Throws DegenerateError when x == y.
SlopeVector slope_of_segment(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y);

/// Point at arclength fraction s ∈ [0, 1] of the product geodesic from x to y.
ProductPoint prod_geodesic_point(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y,
                                 double fraction);

/// Unit-speed ray from x representing ξ̃: factor i ∈ I⁺ runs along σ_{x_i,ξ_i}
/// at speed θ_i, the other factors stay at x_i.
class ProductRay {
 public:
  ProductRay(const ProductSpace& space, const ProductPoint& x, const BoundaryDirection& xi);
  ProductPoint operator()(double t) const;

 private:
  ProductPoint start_;
  Eigen::VectorXd theta_;
  std::vector<std::optional<GeodesicRay>> rays_;
};

ProductPoint prod_ray_point(const ProductSpace& space, const ProductPoint& x, const BoundaryDirection& xi,
                            double t);

/// β_ξ̃(x, y) = Σ_{i∈I⁺} θ_i·β_{ξ_i}(x_i, y_i).
double prod_busemann(const ProductSpace& space, const BoundaryDirection& xi, const ProductPoint& x,
                     const ProductPoint& y);

struct ProductLimitOptions {
  std::optional<ProductPoint> ray_base;
  std::optional<Horizon> horizon;
};

/// Horizon for the product limit: capped at s = 640/max θ_i when a hyperbolic
/// factor moves (e^{θ_i s} must stay representable), 2^20 otherwise.
Horizon default_horizon(const ProductSpace& space, const BoundaryDirection& xi);

/// Direct limit of d(x, σ(s)) − d(y, σ(s)) along the product ray σ.
double prod_busemann_limit(const ProductSpace& space, const BoundaryDirection& xi, const ProductPoint& x,
                           const ProductPoint& y, const ProductLimitOptions& options = {});

/// Geodesic line in the product: factor lines σ_i traversed at speed θ_i for
/// i ∈ I⁺(θ), the remaining factors fixed at origin_i.
class ProductLine {
 public:
  ProductLine(ProductSpace space, SlopeVector slope, std::vector<std::optional<GeodesicLine>> lines,
              ProductPoint origin);

  ProductPoint operator()(double t) const;
  BoundaryDirection forward_end() const;
  const ProductSpace& space() const { return space_; }

 private:
  ProductSpace space_;
  SlopeVector slope_;
  std::vector<std::optional<GeodesicLine>> lines_;
  ProductPoint origin_;
};

}  // namespace horo
