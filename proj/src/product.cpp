#include "horo/product.hpp"

#include <cmath>

#include "horo/errors.hpp"

namespace horo {
namespace {

void check_arity(const ProductSpace& space, std::size_t n, const char* what) {
  if (n != space.rank())
    throw UsageError(std::string(what) + " arity " + std::to_string(n) + " does not match product rank " +
                     std::to_string(space.rank()));
}

}  // namespace

ProductSpace::ProductSpace(std::vector<ModelSpace> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw UsageError("a product needs at least one factor");
  for (const auto& f : factors_) {
    std::visit(overloaded{
                   [](const EuclideanSpace& e) {
                     if (e.dim < 1) throw DomainError("Euclidean factor needs dimension >= 1");
                   },
                   [](const HyperbolicPlane&) {},
                   [](const RegularTree& t) {
                     if (t.degree < 2 || t.degree > 10) throw DomainError("tree degree must lie in [2, 10]");
                   },
               },
               f);
  }
}

// --- SlopeVector -----------------------------------------------------------

SlopeVector::SlopeVector(Eigen::VectorXd theta) : theta_(std::move(theta)) {
  if (theta_.size() == 0) throw DomainError("slope vector must be nonempty");
  if (!theta_.allFinite() || (theta_.array() < 0.0).any())
    throw DomainError("slope entries must be finite and nonnegative");
  if (std::abs(theta_.squaredNorm() - 1.0) > 1e-12) throw DomainError("slope vector must have unit norm");
}

SlopeVector SlopeVector::normalized(const Eigen::VectorXd& raw) {
  if (raw.size() == 0 || (raw.array() < 0.0).any() || raw.norm() == 0.0)
    throw DomainError("cannot normalize a slope with negative entries or zero norm");
  return SlopeVector(raw / raw.norm());
}

std::vector<std::size_t> SlopeVector::positive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (positive(i)) out.push_back(i);
  return out;
}

DirectionClass classify_direction(const SlopeVector& theta) {
  DirectionClass c;
  c.positive = theta.positive_indices();
  c.q = c.positive.size();
  c.regular = c.q == theta.size();
  return c;
}

// --- BoundaryDirection -----------------------------------------------------

BoundaryDirection::BoundaryDirection(SlopeVector slope, std::vector<std::optional<FactorBoundaryPoint>> ends)
    : slope_(std::move(slope)), ends_(std::move(ends)) {
  if (ends_.size() != slope_.size()) throw DomainError("one end slot per factor is required");
  for (std::size_t i = 0; i < ends_.size(); ++i) {
    if (slope_.positive(i) && !ends_[i])
      throw DomainError("missing factor end for index " + std::to_string(i + 1) + " with positive slope");
    if (!slope_.positive(i) && ends_[i])
      throw DomainError("factor end given for index " + std::to_string(i + 1) + " with zero slope");
  }
}

const FactorBoundaryPoint& BoundaryDirection::end(std::size_t i) const {
  if (i >= ends_.size() || !ends_[i]) throw DomainError("no factor end outside I+(theta)");
  return *ends_[i];
}

bool same_direction(const BoundaryDirection& a, const BoundaryDirection& b, double tol) {
  if (a.slope().size() != b.slope().size()) return false;
  if ((a.slope().values() - b.slope().values()).cwiseAbs().maxCoeff() > tol) return false;
  for (std::size_t i = 0; i < a.ends().size(); ++i) {
    if (a.ends()[i].has_value() != b.ends()[i].has_value()) return false;
    if (a.ends()[i] && !same_end(*a.ends()[i], *b.ends()[i], tol)) return false;
  }
  return true;
}

void validate(const ProductSpace& space, const ProductPoint& x) {
  check_arity(space, x.size(), "point");
  for (std::size_t i = 0; i < x.size(); ++i) validate(space[i], x[i]);
}

void validate(const ProductSpace& space, const BoundaryDirection& xi) {
  check_arity(space, xi.slope().size(), "direction");
  for (std::size_t i = 0; i < space.rank(); ++i)
    if (xi.ends()[i]) validate(space[i], *xi.ends()[i]);
}

ProductPoint default_base_point(const ProductSpace& space) {
  ProductPoint o;
  for (const auto& f : space.factors()) o.push_back(default_base_point(f));
  return o;
}

// --- metric ----------------------------------------------------------------

double prod_distance(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y) {
  check_arity(space, x.size(), "point");
  check_arity(space, y.size(), "point");
  double sum = 0.0;
  for (std::size_t i = 0; i < space.rank(); ++i) {
    const double d = distance(space[i], x[i], y[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

SlopeVector slope_of_segment(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y) {
  check_arity(space, x.size(), "point");
  check_arity(space, y.size(), "point");
  Eigen::VectorXd d(static_cast<Eigen::Index>(space.rank()));
  for (std::size_t i = 0; i < space.rank(); ++i) d[static_cast<Eigen::Index>(i)] = distance(space[i], x[i], y[i]);
  if (d.norm() <= kPointTolerance) throw DegenerateError("slope of a degenerate segment");
  return SlopeVector::normalized(d);
}

ProductPoint prod_geodesic_point(const ProductSpace& space, const ProductPoint& x, const ProductPoint& y,
                                 double fraction) {
  check_arity(space, x.size(), "point");
  check_arity(space, y.size(), "point");
  ProductPoint out;
  out.reserve(space.rank());
  for (std::size_t i = 0; i < space.rank(); ++i) {
    const double d = distance(space[i], x[i], y[i]);
    if (d <= kPointTolerance) {
      out.push_back(x[i]);
    } else if (fraction >= 1.0) {
      out.push_back(y[i]);
    } else {
      out.push_back(geodesic(space[i], x[i], y[i])(fraction * d));
    }
  }
  return out;
}

// --- rays and Busemann -----------------------------------------------------

ProductRay::ProductRay(const ProductSpace& space, const ProductPoint& x, const BoundaryDirection& xi)
    : start_(x), theta_(xi.slope().values()) {
  validate(space, x);
  validate(space, xi);
  rays_.resize(space.rank());
  for (std::size_t i = 0; i < space.rank(); ++i)
    if (xi.slope().positive(i)) rays_[i].emplace(ray(space[i], x[i], xi.end(i)));
}

ProductPoint ProductRay::operator()(double t) const {
  if (t < 0.0) throw DomainError("ray parameter must be nonnegative");
  ProductPoint out = start_;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i]) out[i] = (*rays_[i])(t * theta_[static_cast<Eigen::Index>(i)]);
  return out;
}

ProductPoint prod_ray_point(const ProductSpace& space, const ProductPoint& x, const BoundaryDirection& xi,
                            double t) {
  if (t < 0.0) throw DomainError("ray parameter must be nonnegative");
  return ProductRay(space, x, xi)(t);
}

double prod_busemann(const ProductSpace& space, const BoundaryDirection& xi, const ProductPoint& x,
                     const ProductPoint& y) {
  check_arity(space, x.size(), "point");
  check_arity(space, y.size(), "point");
  validate(space, xi);
  double sum = 0.0;
  for (std::size_t i = 0; i < space.rank(); ++i)
    if (xi.slope().positive(i)) sum += xi.slope()[i] * busemann_closed(space[i], xi.end(i), x[i], y[i]);
  return sum;
}

Horizon default_horizon(const ProductSpace& space, const BoundaryDirection& xi) {
  double fastest = 0.0;
  for (auto i : xi.slope().positive_indices())
    if (std::holds_alternative<HyperbolicPlane>(space[i])) fastest = std::max(fastest, xi.slope()[i]);
  if (fastest == 0.0) {
    // Stationary factors add offsets to the ℓ² norm; near s = 2^20 rounding in
    // d(x, σ(s)) − d(y, σ(s)) is about 1e-10, so the last table entry can fall
    // just short of the settling rule.
    Horizon h;
    h.accept_at_cap = true;
    return h;
  }
  // A hyperbolic factor at speed θ_i reaches Im ~ e^{θ_i s}; stay below the
  // double range, sample densely and extrapolate further.
  Horizon h;
  h.max_horizon = 640.0 / fastest;
  h.accept_at_cap = true;
  h.growth = std::sqrt(2.0);
  h.columns = 6;
  return h;
}

double prod_busemann_limit(const ProductSpace& space, const BoundaryDirection& xi, const ProductPoint& x,
                           const ProductPoint& y, const ProductLimitOptions& options) {
  const auto& base = options.ray_base.value_or(x);
  const ProductRay sigma(space, base, xi);
  auto horizon = options.horizon.value_or(default_horizon(space, xi));
  // Every moving factor must pass the projections of x_i and y_i, and s should
  // dominate the offsets so the 1/s expansion of the ℓ² norm is in range.
  double start = 2.0 * (prod_distance(space, base, x) + prod_distance(space, base, y));
  for (auto i : xi.slope().positive_indices()) {
    double need = distance(space[i], base[i], x[i]) + distance(space[i], base[i], y[i]);
    // Hyperbolic corrections decay like e^{-2θ_i s}.
    if (std::holds_alternative<HyperbolicPlane>(space[i])) need += 12.0;
    start = std::max(start, need / xi.slope()[i]);
  }
  horizon.min_horizon = std::max(horizon.min_horizon, start);
  // A slow factor can leave little room below the cap of a fast hyperbolic
  // one; refine the grid so the whole table still fits past the start.
  const int needed = horizon.columns + 4;
  if (!options.horizon && horizon.min_horizon * std::pow(horizon.growth, needed) > horizon.max_horizon)
    horizon.growth = std::max(1.05, std::pow(horizon.max_horizon / horizon.min_horizon, 1.0 / needed));
  return limit_at_infinity(
      [&](double s) {
        const auto p = sigma(s);
        return prod_distance(space, x, p) - prod_distance(space, y, p);
      },
      horizon);
}

// --- ProductLine -----------------------------------------------------------

ProductLine::ProductLine(ProductSpace space, SlopeVector slope, std::vector<std::optional<GeodesicLine>> lines,
                         ProductPoint origin)
    : space_(std::move(space)), slope_(std::move(slope)), lines_(std::move(lines)), origin_(std::move(origin)) {
  check_arity(space_, lines_.size(), "line");
  check_arity(space_, slope_.size(), "slope");
  validate(space_, origin_);
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    if (slope_.positive(i) != lines_[i].has_value())
      throw DomainError("product line needs a factor line exactly where the slope is positive");
    if (lines_[i]) origin_[i] = lines_[i]->origin();
  }
}

ProductPoint ProductLine::operator()(double t) const {
  ProductPoint out = origin_;
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i]) out[i] = (*lines_[i])(t * slope_[i]);
  return out;
}

BoundaryDirection ProductLine::forward_end() const {
  std::vector<std::optional<FactorBoundaryPoint>> ends(lines_.size());
  for (std::size_t i = 0; i < lines_.size(); ++i)
    if (lines_[i]) ends[i] = lines_[i]->forward_end();
  return BoundaryDirection(slope_, std::move(ends));
}

}  // namespace horo
