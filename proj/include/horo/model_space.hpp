#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <variant>

#include <Eigen/Core>

namespace horo {

// ---------------------------------------------------------------------------
// Model factors. Every factor is a locally compact Hadamard space with
// closed-form distance, geodesics and Busemann functions.
// ---------------------------------------------------------------------------

/// Euclidean space R^dim.
struct EuclideanSpace {
  int dim = 1;
};

/// Hyperbolic plane, upper half-plane model {z : Im z > 0}.
struct HyperbolicPlane {};

/// Infinite degree-regular tree with unit edges.
///
/// Vertices are reduced words over the letters '0'..('0' + degree - 1): no
/// letter is immediately repeated. The empty word is the root; the
/// neighbours of a word w are w with its last letter removed and w followed
/// by any letter different from its last one. This is the Cayley graph of
/// the free product of `degree` copies of Z/2.
struct RegularTree {
  int degree = 3;
};

using ModelSpace = std::variant<EuclideanSpace, HyperbolicPlane, RegularTree>;

using EuclideanPoint = Eigen::VectorXd;
using HyperbolicPoint = std::complex<double>;

/// Point of a RegularTree.
///
/// The point sits at distance `depth` from the root along the root path
/// spelled by `path`. Canonical form: path.size() == ceil(depth), so a vertex
/// has an integral depth equal to its word length and an edge point carries
/// the word of the far endpoint of its edge.
struct TreePoint {
  std::string path;
  double depth = 0.0;

  /// Canonicalizes (path, depth); `path` must be at least ceil(depth) long.
  static TreePoint make(std::string path, double depth);
  static TreePoint vertex(std::string word);
  /// Point at `offset` in [0, 1) from `vertex` toward its child `toward`.
  static TreePoint on_edge(std::string vertex, double offset, char toward);

  /// Vertex nearer the root on the point's edge (the point itself at a vertex).
  std::string vertex_address() const;
  double offset() const;
  /// Child letter the edge leads to, or '\0' at a vertex.
  char toward() const;
  bool at_vertex() const { return offset() == 0.0; }

  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

using FactorPoint = std::variant<EuclideanPoint, HyperbolicPoint, TreePoint>;

// ---------------------------------------------------------------------------
// Boundary points (classes of asymptotic rays).
// ---------------------------------------------------------------------------

struct EuclideanEnd {
  Eigen::VectorXd direction;  // unit norm
};

/// Point of R ∪ {∞}.
struct HyperbolicEnd {
  bool at_infinity = true;
  double u = 0.0;

  static HyperbolicEnd infinity() { return {true, 0.0}; }
  static HyperbolicEnd real(double u) { return {false, u}; }
};

/// End of a RegularTree: the infinite reduced word preperiod·period·period·...
///
/// Canonical form: primitive period and shortest preperiod, so equality of
/// ends is equality of the two strings.
struct TreeEnd {
  std::string preperiod;
  std::string period;

  /// Validates reducedness and canonicalizes; throws DomainError.
  static TreeEnd make(std::string preperiod, std::string period);

  char letter(std::size_t n) const;
  std::string prefix(std::size_t n) const;

  friend bool operator==(const TreeEnd&, const TreeEnd&) = default;
};

using FactorBoundaryPoint = std::variant<EuclideanEnd, HyperbolicEnd, TreeEnd>;

/// Tolerance for point equality checks.
inline constexpr double kPointTolerance = 1e-12;

void validate(const ModelSpace& space, const FactorPoint& x);
void validate(const ModelSpace& space, const FactorBoundaryPoint& xi);

bool same_end(const FactorBoundaryPoint& a, const FactorBoundaryPoint& b,
              double tol = kPointTolerance);

/// Canonical base point: origin, i, or the tree root.
FactorPoint default_base_point(const ModelSpace& space);

std::string describe(const ModelSpace& space);
std::string describe(const FactorPoint& x);
std::string describe(const FactorBoundaryPoint& xi);

/// Length of the longest common prefix of two words.
std::size_t common_prefix(const std::string& a, const std::string& b);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace horo
