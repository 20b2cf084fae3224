#include "horo/slice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "horo/errors.hpp"

namespace horo {
namespace {

std::string index_name(std::size_t i) { return "factor " + std::to_string(i + 1); }

double beta_at(const Slice& s, std::size_t i, const FactorPoint& p) {
  const auto& h = s.horosphere();
  return busemann_closed(s.space()[i], h.center().end(i), h.base()[i], p);
}

/// t_dep = −(1/θ_dep)·Σ_{i∈I⁺, i≠dep} θ_i β_{ξ_i}(o_i, x_i).
double solve_dependent(const Slice& s, const ProductPoint& x) {
  const auto& theta = s.horosphere().center().slope();
  double sum = 0.0;
  for (auto i : theta.positive_indices())
    if (i != s.dependent()) sum += theta[i] * beta_at(s, i, x[i]);
  return -sum / s.dependent_slope();
}

/// Distance from x_i to the point of the line with parameter β_{ξ_i}(o_i, x_i).
double off_line(const Slice& s, std::size_t i, const FactorPoint& p) {
  return distance(s.space()[i], s.line(i)(beta_at(s, i, p)), p);
}

}  // namespace

SliceSpec standard_slice_spec(const Horosphere& h, const std::vector<std::size_t>& full) {
  SliceSpec spec;
  const auto& xi = h.center();
  for (std::size_t i = 0; i < h.space().rank(); ++i) {
    if (!xi.slope().positive(i))
      spec.choices.emplace_back(SliceBase{});
    else if (std::find(full.begin(), full.end(), i) != full.end())
      spec.choices.emplace_back(SliceFull{});
    else
      spec.choices.emplace_back(SliceLine{line_through(h.space()[i], h.base()[i], xi.end(i))});
  }
  return spec;
}

SliceSpec widest_slice_spec(const Horosphere& h) {
  const auto positive = h.center().slope().positive_indices();
  std::size_t dep = positive.front();
  for (auto i : positive)
    if (h.center().slope()[i] > h.center().slope()[dep]) dep = i;
  std::vector<std::size_t> full;
  for (auto i : positive)
    if (i != dep) full.push_back(i);
  return standard_slice_spec(h, full);
}

const GeodesicLine& Slice::line(std::size_t i) const {
  if (i >= lines_.size() || !lines_[i]) throw DomainError(index_name(i) + " is not a line of the slice");
  return *lines_[i];
}

Slice make_slice(const Horosphere& h, SliceSpec spec) {
  const auto& space = h.space();
  const auto& xi = h.center();
  if (spec.choices.size() != space.rank())
    throw InvalidSliceError("slice spec has " + std::to_string(spec.choices.size()) + " entries for " +
                            std::to_string(space.rank()) + " factors");
  Slice s(h);
  s.lines_.resize(space.rank());
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < space.rank(); ++i) {
    const auto& choice = spec.choices[i];
    if (!xi.slope().positive(i)) {
      if (!std::holds_alternative<SliceBase>(choice))
        throw InvalidSliceError(index_name(i) + " has zero slope and must be Base");
      s.base_.push_back(i);
    } else if (std::holds_alternative<SliceFull>(choice)) {
      s.full_.push_back(i);
    } else if (const auto* l = std::get_if<SliceLine>(&choice)) {
      try {
        validate(space[i], l->line.origin());
      } catch (const DomainError&) {
        throw InvalidSliceError("line on " + index_name(i) + " lives in another model space");
      }
      if (!same_end(l->line.forward_end(), xi.end(i), 1e-9))
        throw InvalidSliceError("line on " + index_name(i) + " does not end at xi_" + std::to_string(i + 1));
      const double offset = busemann_closed(space[i], xi.end(i), h.base()[i], l->line.origin());
      s.lines_[i] = offset == 0.0 ? l->line : l->line.shifted(-offset);
      lines.push_back(i);
    } else {
      throw InvalidSliceError(index_name(i) + " has positive slope and cannot be Base");
    }
  }
  if (lines.empty())
    throw InvalidSliceError("a k-slice needs k <= q - 1: got k = " + std::to_string(s.full_.size()) +
                            " with q = " + std::to_string(xi.q()));

  if (spec.dependent) {
    if (std::find(lines.begin(), lines.end(), *spec.dependent) == lines.end())
      throw InvalidSliceError("dependent index " + std::to_string(*spec.dependent + 1) + " is not a Line");
    s.dependent_ = *spec.dependent;
  } else {
    s.dependent_ = lines.front();
    for (auto i : lines)
      if (xi.slope()[i] > xi.slope()[s.dependent_]) s.dependent_ = i;
  }
  for (auto i : lines)
    if (i != s.dependent_) s.params_.push_back(i);
  return s;
}

bool in_slice(const Slice& s, const ProductPoint& x, double tol) {
  validate(s.space(), x);
  if (!s.horosphere().contains(x, tol)) return false;
  for (auto i : s.base_indices())
    if (distance(s.space()[i], x[i], s.horosphere().base()[i]) > tol) return false;
  for (auto i : s.param_indices())
    if (off_line(s, i, x[i]) > tol) return false;
  return off_line(s, s.dependent(), x[s.dependent()]) <= tol;
}

ChartPoint chart_forward(const Slice& s, const ProductPoint& x) {
  if (!in_slice(s, x)) throw NotInSliceError("point is not in the slice");
  ChartPoint c;
  for (auto i : s.full_indices()) c.full.push_back(x[i]);
  c.params.resize(static_cast<Eigen::Index>(s.param_indices().size()));
  for (std::size_t j = 0; j < s.param_indices().size(); ++j) {
    const auto i = s.param_indices()[j];
    c.params[static_cast<Eigen::Index>(j)] = beta_at(s, i, x[i]);
  }
  return c;
}

ProductPoint chart_inverse(const Slice& s, const ChartPoint& c) {
  if (c.full.size() != s.k() || static_cast<std::size_t>(c.params.size()) != s.param_indices().size())
    throw UsageError("chart point has " + std::to_string(c.full.size()) + " factor and " +
                     std::to_string(c.params.size()) + " line coordinates; expected " + std::to_string(s.k()) +
                     " and " + std::to_string(s.param_indices().size()));
  ProductPoint x = s.horosphere().base();
  for (std::size_t j = 0; j < s.k(); ++j) {
    const auto i = s.full_indices()[j];
    validate(s.space()[i], c.full[j]);
    x[i] = c.full[j];
  }
  for (std::size_t j = 0; j < s.param_indices().size(); ++j) {
    const auto i = s.param_indices()[j];
    x[i] = s.line(i)(c.params[static_cast<Eigen::Index>(j)]);
  }
  x[s.dependent()] = s.line(s.dependent())(solve_dependent(s, x));
  return x;
}

double chart_distance(const Slice& s, const ChartPoint& a, const ChartPoint& b) {
  double sum = (a.params - b.params).squaredNorm();
  for (std::size_t j = 0; j < s.k(); ++j) {
    const double d = distance(s.space()[s.full_indices()[j]], a.full[j], b.full[j]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

SlicePath slice_path(const Slice& s, const ProductPoint& x, const ProductPoint& y, int samples) {
  if (samples < 2) throw UsageError("a slice path needs at least 2 samples");
  const auto cx = chart_forward(s, x);
  const auto cy = chart_forward(s, y);
  SlicePath path;
  path.chart_distance = chart_distance(s, cx, cy);
  if (path.chart_distance <= kPointTolerance) {
    path.times = {0.0};
    path.points = {x};
    path.gammas = {solve_dependent(s, x)};
    return path;
  }

  // Coordinates that move: full factors and non-dependent lines.
  std::vector<std::size_t> moving = s.full_indices();
  moving.insert(moving.end(), s.param_indices().begin(), s.param_indices().end());
  std::vector<std::optional<GeodesicSegment>> segments(s.space().rank());
  for (auto i : moving)
    if (distance(s.space()[i], x[i], y[i]) > kPointTolerance) segments[i].emplace(geodesic(s.space()[i], x[i], y[i]));

  const double dbar = path.chart_distance;
  for (int j = 0; j < samples; ++j) {
    const double t = dbar * j / (samples - 1);
    ProductPoint p;
    if (j == 0) {
      p = x;
    } else if (j == samples - 1) {
      p = y;
    } else {
      p = x;
      for (auto i : moving)
        if (segments[i]) p[i] = (*segments[i])(t / dbar * segments[i]->length());
    }
    const double gamma = solve_dependent(s, p);
    if (j > 0 && j < samples - 1) p[s.dependent()] = s.line(s.dependent())(gamma);
    if (!path.points.empty()) path.length += prod_distance(s.space(), path.points.back(), p);
    path.times.push_back(t);
    path.gammas.push_back(gamma);
    path.points.push_back(std::move(p));
  }
  return path;
}

double path_constant(const Slice& s) {
  const double th = s.dependent_slope();
  return std::sqrt(1.0 + 1.0 / (th * th));
}

BilipschitzConstants bilipschitz_constants(const Slice& s) {
  double smallest = 1.0;
  for (auto i : s.horosphere().center().slope().positive_indices())
    smallest = std::min(smallest, s.horosphere().center().slope()[i]);
  return {1.0, std::sqrt(1.0 + 1.0 / (smallest * smallest))};
}

}  // namespace horo
