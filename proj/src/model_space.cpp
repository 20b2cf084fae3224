#include "horo/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "horo/errors.hpp"

namespace horo {
namespace {

bool reduced(const std::string& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1]) return false;
  return true;
}

bool digits_only(const std::string& w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string fmt17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

std::size_t common_prefix(const std::string& a, const std::string& b) {
  const auto n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

// --- TreePoint -------------------------------------------------------------

TreePoint TreePoint::make(std::string path, double depth) {
  if (!std::isfinite(depth) || depth < -kPointTolerance)
    throw DomainError("tree point depth must be finite and nonnegative");
  depth = std::max(depth, 0.0);
  const double nearest = std::round(depth);
  if (std::abs(depth - nearest) <= kPointTolerance) depth = nearest;
  const auto len = static_cast<std::size_t>(std::ceil(depth));
  if (path.size() < len)
    throw DomainError("tree point path shorter than its depth");
  path.resize(len);
  return TreePoint{std::move(path), depth};
}

TreePoint TreePoint::vertex(std::string word) {
  const auto depth = static_cast<double>(word.size());
  return make(std::move(word), depth);
}

TreePoint TreePoint::on_edge(std::string vertex, double offset, char toward) {
  if (offset < 0.0 || offset >= 1.0) throw DomainError("tree edge offset must lie in [0, 1)");
  const double depth = static_cast<double>(vertex.size()) + offset;
  vertex.push_back(toward);
  return make(std::move(vertex), depth);
}

std::string TreePoint::vertex_address() const {
  return path.substr(0, static_cast<std::size_t>(std::floor(depth)));
}

double TreePoint::offset() const { return depth - std::floor(depth); }

char TreePoint::toward() const { return at_vertex() ? '\0' : path.back(); }

// --- TreeEnd ---------------------------------------------------------------

TreeEnd TreeEnd::make(std::string preperiod, std::string period) {
  if (period.empty()) throw DomainError("tree end period must be nonempty");
  if (!digits_only(preperiod) || !digits_only(period))
    throw DomainError("tree end letters must be decimal digits");
  if (!reduced(preperiod + period + period))
    throw DomainError("tree end word must be reduced (no immediately repeated letter)");

  // Primitive root of the period.
  const auto p = period.size();
  for (std::size_t len = 1; len < p; ++len) {
    if (p % len != 0) continue;
    bool repeats = true;
    for (std::size_t i = len; i < p && repeats; ++i) repeats = period[i] == period[i - len];
    if (repeats) {
      period.resize(len);
      break;
    }
  }
  // Absorb the preperiod tail into a rotated period.
  while (!preperiod.empty() && preperiod.back() == period.back()) {
    preperiod.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return TreeEnd{std::move(preperiod), std::move(period)};
}

char TreeEnd::letter(std::size_t n) const {
  if (n < preperiod.size()) return preperiod[n];
  return period[(n - preperiod.size()) % period.size()];
}

std::string TreeEnd::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
  return out;
}

// --- validation ------------------------------------------------------------

void validate(const ModelSpace& space, const FactorPoint& x) {
  std::visit(
      overloaded{
          [](const EuclideanSpace& e, const EuclideanPoint& p) {
            if (p.size() != e.dim) throw DomainError("Euclidean point has wrong dimension");
            if (!p.allFinite()) throw DomainError("Euclidean point must be finite");
          },
          [](const HyperbolicPlane&, const HyperbolicPoint& z) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !(z.imag() > 0.0))
              throw DomainError("hyperbolic point must satisfy Im z > 0");
          },
          [](const RegularTree& t, const TreePoint& p) {
            if (!digits_only(p.path) || !reduced(p.path))
              throw DomainError("tree point path must be a reduced word");
            for (char c : p.path)
              if (c - '0' >= t.degree) throw DomainError("tree point letter exceeds degree");
            if (p.path.size() != static_cast<std::size_t>(std::ceil(p.depth)))
              throw DomainError("tree point not in canonical form");
          },
          [](const auto&, const auto&) { throw DomainError("point does not belong to this model space"); },
      },
      space, x);
}

void validate(const ModelSpace& space, const FactorBoundaryPoint& xi) {
  std::visit(
      overloaded{
          [](const EuclideanSpace& e, const EuclideanEnd& v) {
            if (v.direction.size() != e.dim) throw DomainError("Euclidean direction has wrong dimension");
            if (std::abs(v.direction.norm() - 1.0) > kPointTolerance)
              throw DomainError("Euclidean direction must have unit norm");
          },
          [](const HyperbolicPlane&, const HyperbolicEnd& h) {
            if (!h.at_infinity && !std::isfinite(h.u)) throw DomainError("hyperbolic end must be finite or infinity");
          },
          [](const RegularTree& t, const TreeEnd& end) {
            if (end.period.empty()) throw DomainError("tree end period must be nonempty");
            for (char c : end.preperiod + end.period)
              if (c - '0' >= t.degree) throw DomainError("tree end letter exceeds degree");
            if (!reduced(end.preperiod + end.period + end.period))
              throw DomainError("tree end word must be reduced");
          },
          [](const auto&, const auto&) { throw DomainError("boundary point does not belong to this model space"); },
      },
      space, xi);
}

bool same_end(const FactorBoundaryPoint& a, const FactorBoundaryPoint& b, double tol) {
  return std::visit(
      overloaded{
          [tol](const EuclideanEnd& p, const EuclideanEnd& q) {
            return p.direction.size() == q.direction.size() && (p.direction - q.direction).norm() <= tol;
          },
          [tol](const HyperbolicEnd& p, const HyperbolicEnd& q) {
            if (p.at_infinity || q.at_infinity) return p.at_infinity == q.at_infinity;
            return std::abs(p.u - q.u) <= tol * std::max(1.0, std::abs(p.u));
          },
          [](const TreeEnd& p, const TreeEnd& q) { return p == q; },
          [](const auto&, const auto&) { return false; },
      },
      a, b);
}

FactorPoint default_base_point(const ModelSpace& space) {
  return std::visit(overloaded{
                        [](const EuclideanSpace& e) -> FactorPoint { return EuclideanPoint::Zero(e.dim); },
                        [](const HyperbolicPlane&) -> FactorPoint { return HyperbolicPoint(0.0, 1.0); },
                        [](const RegularTree&) -> FactorPoint { return TreePoint{}; },
                    },
                    space);
}

std::string describe(const ModelSpace& space) {
  return std::visit(overloaded{
                        [](const EuclideanSpace& e) {
                          return e.dim == 1 ? std::string("r") : "r:" + std::to_string(e.dim);
                        },
                        [](const HyperbolicPlane&) { return std::string("h2"); },
                        [](const RegularTree& t) { return "tree:" + std::to_string(t.degree); },
                    },
                    space);
}

std::string describe(const FactorPoint& x) {
  return std::visit(overloaded{
                        [](const EuclideanPoint& p) {
                          std::string s = "(";
                          for (Eigen::Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + fmt17(p[i]);
                          return s + ")";
                        },
                        [](const HyperbolicPoint& z) { return fmt17(z.real()) + "+" + fmt17(z.imag()) + "i"; },
                        [](const TreePoint& t) { return "[" + t.path + "@" + fmt17(t.depth) + "]"; },
                    },
                    x);
}

std::string describe(const FactorBoundaryPoint& xi) {
  return std::visit(overloaded{
                        [](const EuclideanEnd& e) {
                          if (e.direction.size() == 1) return std::string(e.direction[0] > 0 ? "+" : "-");
                          std::string s = "dir(";
                          for (Eigen::Index i = 0; i < e.direction.size(); ++i)
                            s += (i ? "," : "") + fmt17(e.direction[i]);
                          return s + ")";
                        },
                        [](const HyperbolicEnd& h) { return h.at_infinity ? std::string("inf") : fmt17(h.u); },
                        [](const TreeEnd& t) { return t.preperiod + "(" + t.period + ")"; },
                    },
                    xi);
}

}  // namespace horo
