#include "horo/horosphere.hpp"

#include <cmath>

namespace horo {

Horosphere::Horosphere(ProductSpace space, BoundaryDirection center, ProductPoint base)
    : space_(std::move(space)), center_(std::move(center)), base_(std::move(base)) {
  validate(space_, center_);
  validate(space_, base_);
}

double Horosphere::value(const ProductPoint& y) const { return prod_busemann(space_, center_, base_, y); }

bool Horosphere::contains(const ProductPoint& y, double tol) const { return std::abs(value(y)) <= tol; }

FactorPoint project_along_horospheres(const GeodesicLine& line, const FactorPoint& x) {
  return line(busemann_closed(line.space(), line.forward_end(), line.origin(), x));
}

ProductPoint project_along_horospheres(const ProductLine& line, const ProductPoint& x) {
  return line(prod_busemann(line.space(), line.forward_end(), line(0.0), x));
}

}  // namespace horo
