#include "horo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "horo/errors.hpp"
#include "horo/metric.hpp"

namespace horo {
namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

// --- hyperbolic plane: SL(2,R) acting by Möbius transformations ------------

Complex mobius(const Eigen::Matrix2d& g, Complex z) { return (g(0, 0) * z + g(0, 1)) / (g(1, 0) * z + g(1, 1)); }

HyperbolicEnd apply_to_zero(const Eigen::Matrix2d& g) {
  if (g(1, 1) == 0.0) return HyperbolicEnd::infinity();
  return HyperbolicEnd::real(g(0, 1) / g(1, 1));
}

Eigen::Matrix2d inverse(const Eigen::Matrix2d& g) {
  Eigen::Matrix2d h;
  h << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
  return h;
}

/// z ↦ Re x + Im x·z, sending i to x.
Eigen::Matrix2d lift(Complex x) {
  const double s = std::sqrt(x.imag());
  Eigen::Matrix2d g;
  g << s, x.real() / s, 0.0, 1.0 / s;
  return g;
}

/// Rotation about i; acts on the disk model as multiplication by e^{2iφ}.
Eigen::Matrix2d rotation(double phi) {
  Eigen::Matrix2d g;
  g << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi);
  return g;
}

/// g(i·y) without cancellation in the imaginary part:
/// g(iy) = (ac·y² + bd + i·y) / (c²·y² + d²) for det g = 1.
Complex mobius_on_axis(const Eigen::Matrix2d& g, double y) {
  const double a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  if (y >= 1.0) {
    const double den = c * c * y + d * d / y;
    return {(a * c * y + b * d / y) / den, 1.0 / den};
  }
  const double den = c * c * y * y + d * d;
  return {(a * c * y * y + b * d) / den, y / den};
}

Complex to_disk(Complex z) { return (z - kI) / (z + kI); }

/// Isometry g with g(i) = x whose imaginary-axis ray i·e^t (t ≥ 0) points at `target`.
Eigen::Matrix2d frame_toward(Complex x, Complex target_in_frame) {
  const double alpha = std::arg(to_disk(target_in_frame));
  return lift(x) * rotation(alpha / 2.0);
}

Eigen::Matrix2d hyperbolic_ray_frame(Complex x, const HyperbolicEnd& end) {
  if (end.at_infinity) return lift(x);
  const double u = (end.u - x.real()) / x.imag();
  return frame_toward(x, Complex(u, 0.0));
}

// --- regular tree ----------------------------------------------------------

std::optional<char> smallest_child(const std::string& vertex, char exclude, int degree) {
  for (int k = 0; k < degree; ++k) {
    const char c = static_cast<char>('0' + k);
    if (!vertex.empty() && c == vertex.back()) continue;
    if (c == exclude) continue;
    return c;
  }
  return std::nullopt;
}

/// prefix followed by the smallest admissible letter at every step.
TreeEnd greedy_end(const std::string& prefix) {
  return TreeEnd::make(prefix, prefix.back() == '0' ? "10" : "01");
}

double tree_ray_meet(const TreePoint& x, const TreeEnd& end) {
  return std::min(x.depth, static_cast<double>(common_prefix(x.path, end.prefix(x.path.size()))));
}

TreeEnd backward_tree_end(const TreePoint& x, const TreeEnd& forward, int degree) {
  const auto& w = x.path;
  if (tree_ray_meet(x, forward) < x.depth) {
    // Forward ray climbs toward the root; go down through the vertex w.
    return greedy_end(w + *smallest_child(w, '\0', degree));
  }
  std::string vertex;
  char from;
  if (!x.at_vertex()) {
    vertex = w.substr(0, w.size() - 1);
    from = w.back();
  } else {
    vertex = w;
    from = forward.letter(w.size());
  }
  for (;;) {
    if (auto c = smallest_child(vertex, from, degree)) return greedy_end(vertex + *c);
    from = vertex.back();
    vertex.pop_back();
  }
}

template <class T>
const T& as(const FactorPoint& p) {
  if (const auto* v = std::get_if<T>(&p)) return *v;
  throw DomainError("point does not belong to this model space");
}

}  // namespace

namespace detail {

FactorPoint evaluate(const Track& track, double t) {
  return std::visit(
      overloaded{
          [t](const EuclideanTrack& e) -> FactorPoint { return EuclideanPoint(e.origin + t * e.direction); },
          [t](const HyperbolicTrack& h) -> FactorPoint {
            return mobius_on_axis(h.isometry, std::exp(t));
          },
          [t](const TreeTrack& tr) -> FactorPoint {
            const double up = tr.start.depth - tr.meet;
            if (t <= up) return TreePoint::make(tr.start.path, tr.start.depth - t);
            const double depth = tr.meet + (t - up);
            if (tr.end_target) {
              const auto need = static_cast<std::size_t>(std::ceil(depth)) + 1;
              return TreePoint::make(tr.end_target->prefix(need), depth);
            }
            const double cap = static_cast<double>(tr.finite_target.size());
            return TreePoint::make(tr.finite_target, std::min(depth, cap));
          },
      },
      track);
}

}  // namespace detail

// --- GeodesicSegment / Ray / Line ------------------------------------------

GeodesicSegment::GeodesicSegment(ModelSpace space, FactorPoint start, FactorPoint end, double length,
                                 detail::Track track)
    : space_(std::move(space)),
      start_(std::move(start)),
      end_(std::move(end)),
      length_(length),
      track_(std::move(track)) {}

FactorPoint GeodesicSegment::operator()(double t) const {
  return detail::evaluate(track_, std::clamp(t, 0.0, length_));
}

GeodesicRay::GeodesicRay(ModelSpace space, FactorPoint start, FactorBoundaryPoint end, detail::Track track)
    : space_(std::move(space)), start_(std::move(start)), end_(std::move(end)), track_(std::move(track)) {}

FactorPoint GeodesicRay::operator()(double t) const {
  if (t < 0.0) throw DomainError("ray parameter must be nonnegative");
  return detail::evaluate(track_, t);
}

GeodesicLine::GeodesicLine(GeodesicRay forward, GeodesicRay backward)
    : forward_(std::move(forward)), backward_(std::move(backward)) {}

FactorPoint GeodesicLine::operator()(double t) const { return t >= 0.0 ? forward_(t) : backward_(-t); }

GeodesicLine GeodesicLine::shifted(double c) const {
  const auto p = (*this)(c);
  return GeodesicLine(ray(space(), p, forward_end()), ray(space(), p, backward_end()));
}

// --- constructors ----------------------------------------------------------

GeodesicSegment geodesic(const ModelSpace& space, const FactorPoint& x, const FactorPoint& y) {
  const double len = distance(space, x, y);
  if (len <= kPointTolerance) throw DegenerateError("geodesic needs two distinct points");
  auto track = std::visit(
      overloaded{
          [&](const EuclideanSpace&) -> detail::Track {
            const auto& p = as<EuclideanPoint>(x);
            return detail::EuclideanTrack{p, (as<EuclideanPoint>(y) - p) / len};
          },
          [&](const HyperbolicPlane&) -> detail::Track {
            const auto z = as<HyperbolicPoint>(x);
            const auto w = mobius(inverse(lift(z)), as<HyperbolicPoint>(y));
            return detail::HyperbolicTrack{frame_toward(z, w)};
          },
          [&](const RegularTree&) -> detail::Track {
            const auto& p = as<TreePoint>(x);
            const auto& q = as<TreePoint>(y);
            const double meet = std::min({p.depth, q.depth, static_cast<double>(common_prefix(p.path, q.path))});
            return detail::TreeTrack{p, meet, q.path, std::nullopt};
          },
      },
      space);
  return GeodesicSegment(space, x, y, len, std::move(track));
}

GeodesicRay ray(const ModelSpace& space, const FactorPoint& x, const FactorBoundaryPoint& xi) {
  validate(space, x);
  validate(space, xi);
  auto track = std::visit(
      overloaded{
          [&](const EuclideanEnd& v) -> detail::Track {
            return detail::EuclideanTrack{as<EuclideanPoint>(x), v.direction};
          },
          [&](const HyperbolicEnd& h) -> detail::Track {
            return detail::HyperbolicTrack{hyperbolic_ray_frame(as<HyperbolicPoint>(x), h)};
          },
          [&](const TreeEnd& end) -> detail::Track {
            const auto& p = as<TreePoint>(x);
            return detail::TreeTrack{p, tree_ray_meet(p, end), {}, end};
          },
      },
      xi);
  return GeodesicRay(space, x, xi, std::move(track));
}

GeodesicLine line_through(const ModelSpace& space, const FactorPoint& x, const FactorBoundaryPoint& xi) {
  auto forward = ray(space, x, xi);
  auto backward = std::visit(
      overloaded{
          [&](const EuclideanEnd& v) { return ray(space, x, EuclideanEnd{-v.direction}); },
          [&](const HyperbolicEnd& h) {
            const auto g = hyperbolic_ray_frame(as<HyperbolicPoint>(x), h);
            const Eigen::Matrix2d back = g * rotation(std::numbers::pi / 2.0);
            return GeodesicRay(space, x, apply_to_zero(g), detail::HyperbolicTrack{back});
          },
          [&](const TreeEnd& end) {
            const int degree = std::get<RegularTree>(space).degree;
            return ray(space, x, backward_tree_end(as<TreePoint>(x), end, degree));
          },
      },
      xi);
  return GeodesicLine(std::move(forward), std::move(backward));
}

}  // namespace horo
