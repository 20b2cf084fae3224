#pragma once

#include <optional>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "horo/model_space.hpp"

namespace horo {

namespace detail {

struct EuclideanTrack {
  Eigen::VectorXd origin;
  Eigen::VectorXd direction;
};

/// t ↦ g(i·e^t) for an orientation-preserving isometry g ∈ SL(2, R).
struct HyperbolicTrack {
  Eigen::Matrix2d isometry;
};

/// Climb from `start` to depth `meet`, then descend along `target`.
struct TreeTrack {
  TreePoint start;
  double meet = 0.0;
  std::string finite_target;
  std::optional<TreeEnd> end_target;
};

using Track = std::variant<EuclideanTrack, HyperbolicTrack, TreeTrack>;

FactorPoint evaluate(const Track& track, double t);

}  // namespace detail

/// Unit-speed geodesic [0, length] -> X.
class GeodesicSegment {
 public:
  GeodesicSegment(ModelSpace space, FactorPoint start, FactorPoint end, double length, detail::Track track);

  /// Point at arclength t; t is clamped into [0, length].
  FactorPoint operator()(double t) const;

  double length() const { return length_; }
  const FactorPoint& start() const { return start_; }
  const FactorPoint& end() const { return end_; }
  const ModelSpace& space() const { return space_; }

 private:
  ModelSpace space_;
  FactorPoint start_;
  FactorPoint end_;
  double length_;
  detail::Track track_;
};

/// Unit-speed geodesic ray [0, ∞) -> X in the class of end().
class GeodesicRay {
 public:
  GeodesicRay(ModelSpace space, FactorPoint start, FactorBoundaryPoint end, detail::Track track);

  /// Point at arclength t >= 0; throws DomainError for t < 0.
  FactorPoint operator()(double t) const;

  const FactorPoint& start() const { return start_; }
  const FactorBoundaryPoint& end() const { return end_; }
  const ModelSpace& space() const { return space_; }

 private:
  ModelSpace space_;
  FactorPoint start_;
  FactorBoundaryPoint end_;
  detail::Track track_;
};

/// Unit-speed geodesic line R -> X with line(0) = origin() and line(+∞) = forward_end().
class GeodesicLine {
 public:
  /// Two rays from a common origin leaving in opposite directions.
  GeodesicLine(GeodesicRay forward, GeodesicRay backward);

  FactorPoint operator()(double t) const;

  const FactorPoint& origin() const { return forward_.start(); }
  const FactorBoundaryPoint& forward_end() const { return forward_.end(); }
  const FactorBoundaryPoint& backward_end() const { return backward_.end(); }
  const ModelSpace& space() const { return forward_.space(); }

  /// Same line reparametrized so that shifted(c)(0) == (*this)(c).
  GeodesicLine shifted(double c) const;

 private:
  GeodesicRay forward_;
  GeodesicRay backward_;
};

/// Geodesic from x to y; throws DegenerateError when x == y.
GeodesicSegment geodesic(const ModelSpace& space, const FactorPoint& x, const FactorPoint& y);

/// The ray σ_{x,ξ}.
GeodesicRay ray(const ModelSpace& space, const FactorPoint& x, const FactorBoundaryPoint& xi);

/// Line through x with forward end ξ. In a tree the backward direction leaves
/// x through the smallest child letter not used by the forward ray (climbing
/// toward the root only when no such child exists) and then keeps taking the
/// smallest admissible letter.
GeodesicLine line_through(const ModelSpace& space, const FactorPoint& x, const FactorBoundaryPoint& xi);

}  // namespace horo
