#include "horo/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "horo/errors.hpp"
#include "horo/metric.hpp"
#include "horo/sampling.hpp"

namespace horo {

namespace {

constexpr double kLimitTolerance = 1e-6;
constexpr double kIdentityTolerance = 1e-9;
constexpr double kPathTolerance = 1e-6;

constexpr double kFailed = std::numeric_limits<double>::infinity();

// Stream tags keep the checks of one seed independent of each other.
enum Stream : std::uint64_t { kFactorStream = 1, kProductStream, kSliceStream, kSuiteStream };

CheckResult check(std::string name, double tolerance) { return CheckResult{std::move(name), tolerance}; }

// Runs one trial; a library error counts as a failure of every check it touches.
template <class F>
void guarded(std::vector<CheckResult*> checks, F&& trial) {
  try {
    trial();
  } catch (const Error&) {
    for (auto* c : checks) c->record(kFailed);
  }
}

std::string prefixed(const std::string& prefix, const std::string& name) { return prefix + "." + name; }

}  // namespace

void CheckResult::record(double error) {
  ++trials;
  if (!(error <= tolerance)) ++failures;
  if (std::isnan(error) || error > worst) worst = std::isnan(error) ? kFailed : error;
}

void merge(std::vector<CheckResult>& into, const std::vector<CheckResult>& more) {
  for (const auto& m : more) {
    auto it = std::find_if(into.begin(), into.end(), [&](const CheckResult& c) { return c.name == m.name; });
    if (it == into.end()) {
      into.push_back(m);
      continue;
    }
    it->trials += m.trials;
    it->failures += m.failures;
    it->worst = std::max(it->worst, m.worst);
  }
}

std::vector<CheckResult> check_factor_busemann(const ModelSpace& space, const VerifyOptions& options) {
  const auto prefix = describe(space);
  auto limit = check(prefixed(prefix, "closed_vs_limit"), kLimitTolerance);
  auto cocycle = check(prefixed(prefix, "cocycle"), kIdentityTolerance);
  auto bound = check(prefixed(prefix, "bound"), kIdentityTolerance);
  auto on_ray = check(prefixed(prefix, "on_ray"), kLimitTolerance);

  const CounterRng root = CounterRng(options.seed).split(kFactorStream);
  for (std::size_t t = 0; t < options.busemann_trials; ++t) {
    auto rng = root.split(t);
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto z = random_point(space, rng);
    const auto xi = random_end(space, rng);
    const double s = rng.uniform(0.1, 5.0);
    guarded({&limit}, [&] {
      limit.record(std::abs(busemann_closed(space, xi, x, y) - busemann_limit(space, xi, x, y)));
    });
    guarded({&cocycle, &bound}, [&] {
      const double xy = busemann_closed(space, xi, x, y);
      const double yz = busemann_closed(space, xi, y, z);
      const double xz = busemann_closed(space, xi, x, z);
      cocycle.record(std::abs(xz - xy - yz));
      bound.record(std::max(0.0, std::abs(xy) - distance(space, x, y)));
    });
    guarded({&on_ray}, [&] {
      const auto p = ray(space, x, xi)(s);
      const double d = distance(space, x, p);
      on_ray.record(std::max(std::abs(busemann_closed(space, xi, x, p) - d),
                             std::abs(busemann_limit(space, xi, x, p) - d)));
    });
  }
  return {limit, cocycle, bound, on_ray};
}

std::vector<CheckResult> check_product_busemann(const ProductSpace& space,
                                                const std::optional<BoundaryDirection>& direction,
                                                const VerifyOptions& options) {
  std::string prefix = "product";
  for (const auto& f : space.factors()) prefix += (prefix == "product" ? "(" : "*") + describe(f);
  prefix += direction ? ",given)" : ",random)";
  auto limit = check(prefixed(prefix, "decomposition_vs_limit"), kLimitTolerance);
  auto cocycle = check(prefixed(prefix, "cocycle"), kIdentityTolerance);
  auto bound = check(prefixed(prefix, "bound"), kIdentityTolerance);
  auto on_ray = check(prefixed(prefix, "on_ray"), kLimitTolerance);

  const CounterRng root = CounterRng(options.seed).split(kProductStream).split(direction ? 1 : 0);
  for (std::size_t t = 0; t < options.busemann_trials; ++t) {
    auto rng = root.split(t);
    const auto xi = direction ? *direction : random_direction(space, rng);
    const auto x = random_product_point(space, rng);
    const auto y = random_product_point(space, rng);
    const auto z = random_product_point(space, rng);
    const double s = rng.uniform(0.1, 5.0);
    guarded({&limit}, [&] {
      limit.record(std::abs(prod_busemann(space, xi, x, y) - prod_busemann_limit(space, xi, x, y)));
    });
    guarded({&cocycle, &bound}, [&] {
      const double xy = prod_busemann(space, xi, x, y);
      const double yz = prod_busemann(space, xi, y, z);
      const double xz = prod_busemann(space, xi, x, z);
      cocycle.record(std::abs(xz - xy - yz));
      bound.record(std::max(0.0, std::abs(xy) - prod_distance(space, x, y)));
    });
    guarded({&on_ray}, [&] {
      const auto p = prod_ray_point(space, x, xi, s);
      const double d = prod_distance(space, x, p);
      on_ray.record(std::max(std::abs(prod_busemann(space, xi, x, p) - d),
                             std::abs(prod_busemann_limit(space, xi, x, p) - d)));
    });
  }
  return {limit, cocycle, bound, on_ray};
}

std::vector<SliceSpec> slice_family(const Horosphere& h) {
  const auto positive = h.center().slope().positive_indices();
  const std::size_t q = positive.size();
  std::vector<SliceSpec> specs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << q); ++mask) {
    std::vector<std::size_t> full;
    for (std::size_t j = 0; j < q; ++j)
      if (mask & (std::size_t{1} << j)) full.push_back(positive[j]);
    if (full.size() + 1 > q) continue;
    const auto base = standard_slice_spec(h, full);
    for (auto i : positive) {
      if (std::find(full.begin(), full.end(), i) != full.end()) continue;
      auto spec = base;
      spec.dependent = i;
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

std::vector<CheckResult> check_slice(const Slice& slice, const VerifyOptions& options) {
  auto on_horosphere = check("slice.inverse_on_horosphere", kMembershipTolerance);
  auto chart_trip = check("slice.chart_roundtrip", kIdentityTolerance);
  auto point_trip = check("slice.point_roundtrip", kIdentityTolerance);
  auto lower = check("slice.lower_bound", kIdentityTolerance);
  auto length = check("slice.path_length", kPathTolerance);
  auto membership = check("slice.path_membership", kMembershipTolerance);

  const auto& space = slice.space();
  const auto& h = slice.horosphere();
  const double constant = path_constant(slice);
  const CounterRng root = CounterRng(options.seed).split(kSliceStream);
  for (std::size_t t = 0; t < options.chart_trials; ++t) {
    auto rng = root.split(t);
    const auto c = random_chart_point(slice, rng);
    guarded({&on_horosphere, &chart_trip, &point_trip}, [&] {
      const auto x = chart_inverse(slice, c);
      on_horosphere.record(std::abs(h.value(x)));
      const auto back = chart_forward(slice, x);
      chart_trip.record(chart_distance(slice, c, back));
      point_trip.record(prod_distance(space, chart_inverse(slice, back), x));
    });
  }
  const CounterRng paths = root.split(options.chart_trials);
  for (std::size_t t = 0; t < options.path_trials; ++t) {
    auto rng = paths.split(t);
    const auto cx = random_chart_point(slice, rng);
    const auto cy = random_chart_point(slice, rng);
    guarded({&lower, &length, &membership}, [&] {
      const auto x = chart_inverse(slice, cx);
      const auto y = chart_inverse(slice, cy);
      const double dbar = chart_distance(slice, cx, cy);
      lower.record(std::max(0.0, dbar - prod_distance(space, x, y)));
      const auto path = slice_path(slice, x, y, options.path_samples);
      length.record(std::max(0.0, path.length - constant * dbar));
      double worst = 0.0;
      for (const auto& p : path.points) worst = std::max(worst, std::abs(h.value(p)));
      membership.record(worst);
    });
  }
  return {on_horosphere, chart_trip, point_trip, lower, length, membership};
}

std::vector<CheckResult> check_slice_family(const Horosphere& h, const VerifyOptions& options) {
  const auto specs = slice_family(h);
  std::vector<CheckResult> out;
  auto each = options;
  const auto n = std::max<std::size_t>(specs.size(), 1);
  each.chart_trials = std::max<std::size_t>(options.chart_trials / n, 1);
  each.path_trials = std::max<std::size_t>(options.path_trials / n, 1);
  for (std::size_t j = 0; j < specs.size(); ++j) {
    each.seed = CounterRng(options.seed).split(j).next();
    merge(out, check_slice(make_slice(h, specs[j]), each));
  }
  return out;
}

std::vector<CheckResult> verify_suite(const ProductSpace& space, const BoundaryDirection& direction,
                                      const VerifyOptions& options) {
  std::vector<CheckResult> out;
  std::set<std::string> seen;
  for (const auto& f : space.factors())
    if (seen.insert(describe(f)).second) merge(out, check_factor_busemann(f, options));
  merge(out, check_product_busemann(space, direction, options));
  merge(out, check_product_busemann(space, std::nullopt, options));

  auto rng = CounterRng(options.seed).split(kSuiteStream);
  const std::vector<ProductPoint> bases{default_base_point(space), random_product_point(space, rng)};
  auto half = options;
  half.chart_trials = std::max<std::size_t>(options.chart_trials / bases.size(), 1);
  half.path_trials = std::max<std::size_t>(options.path_trials / bases.size(), 1);
  for (const auto& o : bases) merge(out, check_slice_family(Horosphere(space, direction, o), half));
  return out;
}

}  // namespace horo
