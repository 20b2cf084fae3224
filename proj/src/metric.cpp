#include "horo/metric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "horo/errors.hpp"
#include "horo/geodesic.hpp"

namespace horo {
namespace {

double tree_horofunction(const TreePoint& p, const TreeEnd& end) {
  const auto lcp = common_prefix(p.path, end.prefix(p.path.size()));
  return p.depth - 2.0 * std::min(p.depth, static_cast<double>(lcp));
}

}  // namespace

double distance(const ModelSpace& space, const FactorPoint& x, const FactorPoint& y) {
  validate(space, x);
  validate(space, y);
  return std::visit(
      overloaded{
          [](const EuclideanPoint& p, const EuclideanPoint& q) { return (p - q).norm(); },
          [](const HyperbolicPoint& z, const HyperbolicPoint& w) {
            // arccosh(1 + |z−w|²/(2 Im z Im w)) written as 2 asinh(...) to stay
            // accurate for nearby points.
            return 2.0 * std::asinh(std::abs(z - w) / (2.0 * std::sqrt(z.imag()) * std::sqrt(w.imag())));
          },
          [](const TreePoint& p, const TreePoint& q) {
            const double meet =
                std::min({p.depth, q.depth, static_cast<double>(common_prefix(p.path, q.path))});
            return std::max(0.0, p.depth + q.depth - 2.0 * meet);
          },
          [](const auto&, const auto&) -> double { throw DomainError("points from different models"); },
      },
      x, y);
}

double busemann_closed(const ModelSpace& space, const FactorBoundaryPoint& xi, const FactorPoint& x,
                       const FactorPoint& y) {
  validate(space, x);
  validate(space, y);
  validate(space, xi);
  return std::visit(
      overloaded{
          [&](const EuclideanEnd& v) {
            return (std::get<EuclideanPoint>(y) - std::get<EuclideanPoint>(x)).dot(v.direction);
          },
          [&](const HyperbolicEnd& h) {
            const auto z = std::get<HyperbolicPoint>(x);
            const auto w = std::get<HyperbolicPoint>(y);
            if (h.at_infinity) return std::log(w.imag()) - std::log(z.imag());
            const double dz = std::abs(z - h.u);
            const double dw = std::abs(w - h.u);
            if (dz == 0.0 || dw == 0.0) throw DomainError("point coincides with the boundary point");
            return std::log(w.imag()) - std::log(z.imag()) + 2.0 * (std::log(dz) - std::log(dw));
          },
          [&](const TreeEnd& end) {
            return tree_horofunction(std::get<TreePoint>(x), end) - tree_horofunction(std::get<TreePoint>(y), end);
          },
      },
      xi);
}

Horizon default_horizon(const ModelSpace& space) {
  if (std::holds_alternative<HyperbolicPlane>(space)) return Horizon{40.0, true, 1e-10};
  return Horizon{};
}

double limit_at_infinity(const std::function<double(double)>& f, const Horizon& horizon) {
  // Exponentially convergent sequences (hyperbolic, tree) settle in the raw
  // values; polynomial ones (Euclidean directions, products) in the table.
  const int columns = std::max(0, horizon.columns);
  const double rho = horizon.growth;
  if (!(rho > 1.0)) throw DomainError("horizon growth must exceed 1");

  // First grid point past min_horizon, but leave room for a full table.
  double s = 1.0;
  const double latest_start = horizon.max_horizon / std::pow(rho, columns + 2);
  while (s < horizon.min_horizon && s * rho <= latest_start) s *= rho;

  std::vector<double> previous;
  double raw = std::numeric_limits<double>::quiet_NaN();
  double estimate = raw;
  int raw_settled = 0;
  int settled = 0;
  double raw_step = std::numeric_limits<double>::infinity();
  double step = raw_step;
  for (int k = 0; s <= horizon.max_horizon; ++k, s *= rho) {
    const double value = f(s);
    if (!std::isfinite(value)) break;

    const int depth = std::min(k, columns);
    std::vector<double> row(static_cast<std::size_t>(depth) + 1);
    row[0] = value;
    for (int j = 1; j <= depth; ++j) {
      const double factor = std::pow(rho, j) - 1.0;
      row[j] = row[j - 1] + (row[j - 1] - previous[j - 1]) / factor;
    }
    const double next = row[depth];
    if (k > 0) {
      raw_step = std::abs(value - raw);
      step = std::abs(next - estimate);
    }
    raw_settled = (k > 0 && raw_step < horizon.tolerance) ? raw_settled + 1 : 0;
    settled = (k > columns && step < horizon.tolerance) ? settled + 1 : 0;
    if (raw_settled >= 2) return value;
    if (settled >= 2) return next;
    raw = value;
    estimate = next;
    previous = std::move(row);
  }
  if (horizon.accept_at_cap && std::isfinite(raw)) return raw_step <= step ? raw : estimate;
  throw ConvergenceError("Busemann limit did not converge within the evaluation horizon");
}

double busemann_limit(const ModelSpace& space, const FactorBoundaryPoint& xi, const FactorPoint& x,
                      const FactorPoint& y, const LimitOptions& options) {
  const auto& base = options.ray_base.value_or(x);
  const auto sigma = ray(space, base, xi);
  auto horizon = options.horizon.value_or(default_horizon(space));
  horizon.min_horizon = std::max(horizon.min_horizon, distance(space, base, x) + distance(space, base, y));
  return limit_at_infinity(
      [&](double s) {
        const auto p = sigma(s);
        return distance(space, x, p) - distance(space, y, p);
      },
      horizon);
}

}  // namespace horo
