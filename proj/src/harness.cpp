#include "horo/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "horo/errors.hpp"
#include "horo/random.hpp"

namespace horo {
namespace {

using Complex = std::complex<double>;

/// Orthonormal basis with the direction v as its last column.
Eigen::MatrixXd horocyclic_basis(const Eigen::VectorXd& v) {
  const auto n = v.size();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr{Eigen::MatrixXd(v)};
  const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd basis(n, n);
  basis.leftCols(n - 1) = q.rightCols(n - 1);
  basis.col(n - 1) = v;
  return basis;
}

/// Kahan's form of Heron's formula.
double triangle_area(double a, double b, double c) {
  if (a < b) std::swap(a, b);
  if (b < c) std::swap(b, c);
  if (a < b) std::swap(a, b);
  const double p = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
  return p > 0.0 ? 0.25 * std::sqrt(p) : 0.0;
}

/// Point at fraction λ of the chart geodesic from a to b.
ChartPoint chart_interpolate(const Slice& s, const ChartPoint& a, const ChartPoint& b, double lambda) {
  ChartPoint c;
  for (std::size_t j = 0; j < s.k(); ++j) {
    const auto& space = s.space()[s.full_indices()[j]];
    const double d = distance(space, a.full[j], b.full[j]);
    c.full.push_back(d <= kPointTolerance ? a.full[j] : geodesic(space, a.full[j], b.full[j])(lambda * d));
  }
  c.params = a.params + lambda * (b.params - a.params);
  return c;
}

double loop_length(const ProductSpace& space, const std::vector<ProductPoint>& loop) {
  double sum = 0.0;
  for (std::size_t v = 0; v < loop.size(); ++v) sum += prod_distance(space, loop[v], loop[(v + 1) % loop.size()]);
  return sum;
}

}  // namespace

// --- horocyclic coordinates ---------------------------------------------------

FactorPoint from_horocyclic(const ModelSpace& space, const FactorPoint& o, const FactorBoundaryPoint& xi,
                            const Eigen::VectorXd& coords) {
  validate(space, o);
  validate(space, xi);
  return std::visit(
      overloaded{
          [&](const HyperbolicPlane&) -> FactorPoint {
            if (coords.size() != 2) throw UsageError("hyperbolic horocyclic coordinates are (x, s)");
            const auto& end = std::get<HyperbolicEnd>(xi);
            const auto z0 = std::get<Complex>(o);
            // Frame w = −1/(z − u) (or w = z) followed by the affine map o ↦ i.
            const Complex w0 = end.at_infinity ? z0 : -1.0 / (z0 - end.u);
            const Complex w = Complex(w0.real() + w0.imag() * coords[0], w0.imag() * std::exp(coords[1]));
            return end.at_infinity ? w : end.u - 1.0 / w;
          },
          [&](const EuclideanSpace& e) -> FactorPoint {
            if (coords.size() != e.dim) throw UsageError("Euclidean horocyclic coordinates need one entry per axis");
            const auto basis = horocyclic_basis(std::get<EuclideanEnd>(xi).direction);
            return EuclideanPoint(std::get<EuclideanPoint>(o) + basis * coords);
          },
          [&](const RegularTree&) -> FactorPoint {
            throw UsageError("tree factors have no horocyclic coordinates; use them as Line or Base");
          },
      },
      space);
}

Region origin_region(const Slice& slice) {
  Region r;
  for (auto i : slice.full_indices()) {
    const auto dims = std::visit(overloaded{
                                     [](const EuclideanSpace& e) { return static_cast<Eigen::Index>(e.dim); },
                                     [](const HyperbolicPlane&) { return Eigen::Index{2}; },
                                     [](const RegularTree&) { return Eigen::Index{1}; },
                                 },
                                 slice.space()[i]);
    r.lo.push_back(Eigen::VectorXd::Zero(dims));
    r.hi.push_back(Eigen::VectorXd::Zero(dims));
  }
  r.param_lo = r.param_hi = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(slice.param_indices().size()));
  return r;
}

std::vector<ProductPoint> sample_region(const Slice& slice, const Region& region, std::size_t n,
                                        std::uint64_t seed) {
  if (region.lo.size() != slice.k() || region.hi.size() != slice.k() ||
      static_cast<std::size_t>(region.param_lo.size()) != slice.param_indices().size() ||
      region.param_hi.size() != region.param_lo.size())
    throw UsageError("region does not match the slice's chart coordinates");
  const auto& h = slice.horosphere();
  const CounterRng root(seed);
  std::vector<ProductPoint> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    auto rng = root.split(j);
    ChartPoint c;
    for (std::size_t m = 0; m < slice.k(); ++m) {
      const auto i = slice.full_indices()[m];
      const auto& lo = region.lo[m];
      const auto& hi = region.hi[m];
      Eigen::VectorXd coords(lo.size());
      for (Eigen::Index d = 0; d < lo.size(); ++d) coords[d] = rng.uniform(lo[d], hi[d]);
      if (std::holds_alternative<HyperbolicPlane>(slice.space()[i]) && hi[1] > lo[1]) {
        // Area element e^{−s} dx ds: invert the CDF of e^{−s} on [lo, hi].
        const double top = std::exp(-lo[1]);
        const double bottom = std::exp(-hi[1]);
        coords[1] = -std::log(top - rng.uniform() * (top - bottom));
      }
      c.full.push_back(from_horocyclic(slice.space()[i], h.base()[i], h.center().end(i), coords));
    }
    c.params.resize(region.param_lo.size());
    for (Eigen::Index d = 0; d < c.params.size(); ++d) c.params[d] = rng.uniform(region.param_lo[d], region.param_hi[d]);
    out.push_back(chart_inverse(slice, c));
  }
  return out;
}

double max_membership_error(const Horosphere& h, const std::vector<ProductPoint>& points) {
  double worst = 0.0;
  for (const auto& p : points) worst = std::max(worst, std::abs(h.value(p)));
  return worst;
}

// --- control ------------------------------------------------------------------------

std::vector<ControlRow> horocycle_control(double a_max, double step, double eps) {
  if (!(a_max > 0.0) || !(step > 0.0) || !(eps > 0.0)) throw UsageError("a_max, step and eps must be positive");
  std::vector<double> as;
  for (std::size_t j = 1; j * step <= a_max * (1.0 + 1e-12); ++j) as.push_back(static_cast<double>(j) * step);

  // Grid every eps/2 plus the table entries themselves.
  std::vector<double> xs;
  const double h = eps / 2.0;
  for (std::size_t j = 0; j * h <= a_max * (1.0 + 1e-12); ++j) xs.push_back(static_cast<double>(j) * h);
  xs.insert(xs.end(), as.begin(), as.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  const ProductSpace plane({HyperbolicPlane{}});
  std::vector<ProductPoint> nodes;
  for (double x : xs) nodes.push_back({Complex(x, 1.0)});
  const auto net = build_net(plane, nodes, eps);
  const auto dist = shortest_paths_from(net, 0);

  std::vector<ControlRow> rows;
  for (double a : as) {
    const auto node = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), a) - xs.begin());
    rows.push_back({a, distance(plane[0], Complex(0.0, 1.0), Complex(a, 1.0)), a, dist[node]});
  }
  return rows;
}

// --- distortion -----------------------------------------------------------------------

LinearFit fit_exponent(const std::vector<std::array<double, 2>>& samples) {
  if (samples.size() < 3) throw DomainError("an exponent fit needs at least 3 samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto [size, value] = samples[static_cast<std::size_t>(j)];
    if (!(size > 0.0) || !(value > 0.0)) throw DomainError("exponent fit needs positive sizes and values");
    a(j, 0) = std::log(size);
    a(j, 1) = 1.0;
    b[j] = std::log(value);
  }
  const Eigen::Vector2d x = a.colPivHouseholderQr().solve(b);
  return {x[0], x[1]};
}

DistortionResult distortion_scan(const Horosphere& h, const DistortionOptions& options) {
  if (h.center().q() < 2) throw UsageError("q must be at least 2");
  if (options.pairs < 3) throw UsageError("a distortion scan needs at least 3 pairs");
  if (!(options.extrinsic_min > 0.0) || !(options.extrinsic_max > options.extrinsic_min))
    throw UsageError("extrinsic range must satisfy 0 < min < max");
  if (options.nodes < options.pairs + 1) throw UsageError("n must exceed the number of pairs");

  const auto slice = make_slice(h, widest_slice_spec(h));
  const auto f = slice.full_indices().front();
  const auto& space_f = h.space()[f];
  const bool hyperbolic = std::holds_alternative<HyperbolicPlane>(space_f);
  if (!hyperbolic && !(std::holds_alternative<EuclideanSpace>(space_f) && std::get<EuclideanSpace>(space_f).dim >= 2))
    throw UsageError("distortion pairs need a hyperbolic or Euclidean (dim >= 2) factor as first full factor");
  const auto dims = hyperbolic ? 2 : std::get<EuclideanSpace>(space_f).dim;

  // Horizontal offsets X with extrinsic distance e: X = 2 sinh(e/2) on a
  // horocycle, X = e on a Euclidean horosphere.
  auto offset = [&](double e) { return hyperbolic ? 2.0 * std::sinh(e / 2.0) : e; };
  std::vector<double> targets;
  for (std::size_t j = 0; j < options.pairs; ++j) {
    const double u = static_cast<double>(j) / static_cast<double>(options.pairs - 1);
    targets.push_back(options.extrinsic_min * std::pow(options.extrinsic_max / options.extrinsic_min, u));
  }
  const double reach = offset(options.extrinsic_max);

  // The slice restricted to factor f is a hyperbolic plane of curvature −κ²;
  // the geodesic over a horocyclic chord X peaks at s = ½·log(1 + (κX/2)²).
  auto region = origin_region(slice);
  region.lo[0][0] = -1.0;
  region.hi[0][0] = reach + 1.0;
  if (hyperbolic) {
    const double r = h.center().slope()[f] / slice.dependent_slope();
    const double kappa = 1.0 / std::sqrt(1.0 + r * r);
    region.lo[0][1] = -0.5;
    region.hi[0][1] = 0.5 * std::log1p(std::pow(kappa * reach / 2.0, 2)) + 1.0;
  } else {
    region.lo[0][dims - 1] = -1.0;
    region.hi[0][dims - 1] = 1.0;
  }

  std::vector<ProductPoint> nodes{h.base()};
  for (double e : targets) {
    ChartPoint c = chart_forward(slice, h.base());
    Eigen::VectorXd coords = Eigen::VectorXd::Zero(dims);
    coords[0] = offset(e);
    c.full.front() = from_horocyclic(space_f, h.base()[f], h.center().end(f), coords);
    nodes.push_back(chart_inverse(slice, c));
  }
  auto samples = sample_region(slice, region, options.nodes - nodes.size(), options.seed);
  nodes.insert(nodes.end(), std::make_move_iterator(samples.begin()), std::make_move_iterator(samples.end()));

  DistortionResult result;
  result.max_membership_error = max_membership_error(h, nodes);
  const auto net = build_net(h.space(), nodes, options.eps);
  result.node_count = net.node_count();
  result.edge_count = net.edge_count();
  const auto dist = shortest_paths_from(net, 0);
  std::vector<std::array<double, 2>> fit;
  for (std::size_t j = 0; j < options.pairs; ++j) {
    const double ext = prod_distance(h.space(), net.nodes[0], net.nodes[j + 1]);
    result.rows.push_back({j, ext, dist[j + 1], dist[j + 1] / ext});
    fit.push_back({ext, dist[j + 1]});
  }
  result.fit = fit_exponent(fit);
  return result;
}

// --- fillings ---------------------------------------------------------------------------

std::vector<ProductPoint> chart_circle(const Slice& slice, double radius, std::size_t vertices) {
  if (slice.k() < 1) throw UsageError("a chart circle needs a slice with a full factor");
  if (vertices < 3) throw UsageError("a loop needs at least 3 vertices");
  if (!(radius >= 0.0)) throw UsageError("radius must be nonnegative");
  const auto& h = slice.horosphere();
  const auto f = slice.full_indices().front();
  const auto& space_f = h.space()[f];
  const auto& o_f = h.base()[f];
  const auto base = chart_forward(slice, h.base());
  const auto axis = line_through(space_f, o_f, h.center().end(f));

  std::vector<ProductPoint> loop;
  for (std::size_t v = 0; v < vertices; ++v) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(vertices);
    ChartPoint c = base;
    if (!slice.param_indices().empty()) {
      c.full.front() = axis(radius * std::cos(phi));
      c.params[0] = radius * std::sin(phi);
    } else if (std::holds_alternative<HyperbolicPlane>(space_f)) {
      // Evenly spaced directions at o: the disk-model direction φ at i is the
      // boundary point −cot(φ/2), carried to o = a + ib by w ↦ a + b·w.
      const auto z = std::get<Complex>(o_f);
      const double half = phi / 2.0;
      const auto end = std::sin(half) == 0.0
                           ? HyperbolicEnd::infinity()
                           : HyperbolicEnd::real(z.real() - z.imag() * std::cos(half) / std::sin(half));
      c.full.front() = ray(space_f, o_f, end)(radius);
    } else if (const auto* e = std::get_if<EuclideanSpace>(&space_f); e && e->dim >= 2) {
      Eigen::VectorXd coords = Eigen::VectorXd::Zero(e->dim);
      coords[0] = radius * std::cos(phi);
      coords[e->dim - 1] = radius * std::sin(phi);
      c.full.front() = from_horocyclic(space_f, o_f, h.center().end(f), coords);
    } else {
      throw UsageError("chart circles need line parameters or a 2-dimensional full factor");
    }
    loop.push_back(chart_inverse(slice, c));
  }
  return loop;
}

FilledDisc cone_fill_loop(const Slice& slice, const std::vector<ProductPoint>& loop, int layers) {
  if (loop.empty()) throw UsageError("cannot fill an empty loop");
  if (layers < 1) throw UsageError("mesh density must be at least 1");
  const auto& space = slice.space();
  const std::size_t n = loop.size();
  std::vector<ChartPoint> chart;
  for (const auto& p : loop) chart.push_back(chart_forward(slice, p));

  FilledDisc disc;
  disc.vertices.push_back(loop.front());
  // ring(j, v): vertex index of layer j ∈ [1, layers] along spoke v.
  auto ring = [&](int j, std::size_t v) { return 1 + static_cast<std::size_t>(j - 1) * n + v % n; };
  for (int j = 1; j <= layers; ++j) {
    const double lambda = static_cast<double>(j) / layers;
    for (std::size_t v = 0; v < n; ++v)
      disc.vertices.push_back(j == layers ? loop[v]
                                          : chart_inverse(slice, chart_interpolate(slice, chart[0], chart[v], lambda)));
  }
  for (std::size_t v = 0; v < n; ++v) {
    disc.boundary.push_back(ring(layers, v));
    disc.triangles.push_back({0, ring(1, v), ring(1, v + 1)});
  }
  for (int j = 1; j < layers; ++j)
    for (std::size_t v = 0; v < n; ++v) {
      disc.triangles.push_back({ring(j, v), ring(j, v + 1), ring(j + 1, v + 1)});
      disc.triangles.push_back({ring(j, v), ring(j + 1, v + 1), ring(j + 1, v)});
    }

  for (const auto& t : disc.triangles) {
    const auto& a = disc.vertices[t[0]];
    const auto& b = disc.vertices[t[1]];
    const auto& c = disc.vertices[t[2]];
    disc.area += triangle_area(prod_distance(space, a, b), prod_distance(space, b, c), prod_distance(space, c, a));
  }
  disc.boundary_length = loop_length(space, loop);
  disc.max_membership_error = max_membership_error(slice.horosphere(), disc.vertices);
  return disc;
}

DehnResult dehn_scan(const Slice& slice, const std::vector<double>& radii, std::size_t vertices, int layers) {
  DehnResult result;
  const double th = slice.dependent_slope();
  result.area_constant = (1.0 + 1.0 / (th * th)) * std::numbers::pi;
  std::vector<std::array<double, 2>> fit;
  for (std::size_t id = 0; id < radii.size(); ++id) {
    const double r = radii[id];
    const auto disc = cone_fill_loop(slice, chart_circle(slice, r, vertices), layers);
    result.rows.push_back({id, r, disc.boundary_length, disc.area, disc.triangles.size()});
    result.max_membership_error = std::max(result.max_membership_error, disc.max_membership_error);
    if (r > 0.0) result.max_area_ratio = std::max(result.max_area_ratio, disc.area / (r * r));
    fit.push_back({disc.boundary_length, disc.area});
  }
  result.fit = fit_exponent(fit);
  return result;
}

}  // namespace horo
