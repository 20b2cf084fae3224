#pragma once

#include "horo/product.hpp"

namespace horo {

/// Default tolerance for |b(y)| in horosphere membership tests.
constexpr double kMembershipTolerance = 1e-8;

/// ℋ_ξ̃(o) = {y : b(y) = 0} with b(y) = β_ξ̃(o, y).
class Horosphere {
 public:
  Horosphere(ProductSpace space, BoundaryDirection center, ProductPoint base);

  /// b(y); positive on the side of ξ̃ (same sign as β).
  double value(const ProductPoint& y) const;
  bool contains(const ProductPoint& y, double tol = kMembershipTolerance) const;

  const ProductSpace& space() const { return space_; }
  const BoundaryDirection& center() const { return center_; }
  const ProductPoint& base() const { return base_; }

 private:
  ProductSpace space_;
  BoundaryDirection center_;
  ProductPoint base_;
};

/// p_σ(x) = σ(β_{σ(∞)}(σ(0), x)): the point where σ meets the horosphere
/// centered at σ(∞) through x.
FactorPoint project_along_horospheres(const GeodesicLine& line, const FactorPoint& x);
ProductPoint project_along_horospheres(const ProductLine& line, const ProductPoint& x);

}  // namespace horo
