#include "horo/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "horo/csv.hpp"
#include "horo/errors.hpp"
#include "horo/harness.hpp"
#include "horo/sampling.hpp"
#include "horo/space_spec.hpp"
#include "horo/verify.hpp"

namespace horo {

namespace {

const std::map<std::string, std::set<std::string>> kFlags{
    {"verify", {"space", "seed", "n"}},
    {"distortion", {"space", "seed", "eps", "n", "out", "tol"}},
    {"control", {"amax", "step", "eps", "out", "tol"}},
    {"fill", {"space", "n", "out", "tol"}},
    {"chart", {"space", "seed"}},
};

void check_flags(const RunConfig& c) {
  const auto it = kFlags.find(c.command);
  if (it == kFlags.end()) throw UsageError("unknown command '" + c.command + "'");
  const std::vector<std::pair<std::string, bool>> given{
      {"space", c.space.has_value()}, {"seed", c.seed.has_value()}, {"eps", c.eps.has_value()},
      {"n", c.n.has_value()},         {"amax", c.amax.has_value()}, {"step", c.step.has_value()},
      {"out", c.out.has_value()},     {"tol", c.tol.has_value()},
  };
  for (const auto& [flag, set] : given)
    if (set && !it->second.count(flag)) throw UsageError(c.command + " does not take --" + flag);
  if (c.eps && !(*c.eps > 0.0)) throw UsageError("--eps must be positive");
  if (c.n && *c.n == 0) throw UsageError("--n must be positive");
  if (c.amax && !(*c.amax > 0.0)) throw UsageError("--amax must be positive");
  if (c.step && !(*c.step > 0.0)) throw UsageError("--step must be positive");
  if (c.tol && !(*c.tol >= 0.0)) throw UsageError("--tol must be nonnegative");
}

SpaceSpec require_space(const RunConfig& c) {
  if (!c.space) throw UsageError(c.command + " needs --space");
  return parse_space_spec(*c.space);
}

std::uint64_t require_seed(const RunConfig& c) {
  if (!c.seed) throw UsageError(c.command + " needs --seed");
  return *c.seed;
}

void emit(const RunConfig& c, std::ostream& out, const std::function<void(std::ostream&)>& write) {
  if (!c.out) {
    write(out);
    return;
  }
  std::ofstream file(*c.out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + *c.out + "' for writing");
  write(file);
  if (!file.flush()) throw UsageError("cannot write '" + *c.out + "'");
}

int run_verify(const RunConfig& c, std::ostream& out) {
  const auto spec = require_space(c);
  VerifyOptions options;
  options.seed = require_seed(c);
  if (c.n) options.busemann_trials = *c.n;
  const auto results = verify_suite(spec.space, spec.direction, options);
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed();
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << " trials=" << r.trials << " failures=" << r.failures
        << " worst=" << format_number(r.worst) << " tol=" << format_number(r.tolerance) << '\n';
  }
  out << "passed " << passed << " of " << results.size() << " checks\n";
  return passed == results.size() ? kExitOk : kExitPropertyFailure;
}

int run_distortion(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto spec = require_space(c);
  DistortionOptions options;
  options.seed = require_seed(c);
  if (c.eps) options.eps = *c.eps;
  if (c.n) options.nodes = *c.n;
  const double tol = c.tol.value_or(kMembershipTolerance);
  const Horosphere h(spec.space, spec.direction, default_base_point(spec.space));
  const auto result = distortion_scan(h, options);
  emit(c, out, [&](std::ostream& os) { write_distortion_csv(os, result.rows); });
  err << "slope " << format_number(result.fit.slope) << " nodes " << result.node_count << " edges "
      << result.edge_count << " membership " << format_number(result.max_membership_error) << '\n';
  int code = kExitOk;
  if (result.max_membership_error > tol) {
    err << "error: net node off the horosphere by " << format_number(result.max_membership_error) << '\n';
    code = kExitPropertyFailure;
  }
  for (const auto& r : result.rows)
    if (r.intrinsic < r.extrinsic - 2.0 * options.eps) {
      err << "error: pair " << r.pair_id << " has intrinsic distance below extrinsic - 2 eps\n";
      code = kExitPropertyFailure;
    }
  return code;
}

int run_control(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const double tol = c.tol.value_or(1e-9);
  const auto rows = horocycle_control(c.amax.value_or(8.0), c.step.value_or(0.25), c.eps.value_or(0.05));
  emit(c, out, [&](std::ostream& os) { write_control_csv(os, rows); });
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.intrinsic_exact - 2.0 * std::sinh(r.extrinsic / 2.0)));
  if (worst > tol) {
    err << "error: closed-form identity off by " << format_number(worst) << '\n';
    return kExitPropertyFailure;
  }
  return kExitOk;
}

int run_fill(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto spec = require_space(c);
  const double tol = c.tol.value_or(kMembershipTolerance);
  const Horosphere h(spec.space, spec.direction, default_base_point(spec.space));
  const auto slice = make_slice(h, fill_slice_spec(h));
  const auto result = dehn_scan(slice, kFillRadii, c.n.value_or(256));
  emit(c, out, [&](std::ostream& os) { write_fill_csv(os, result.rows); });
  err << "exponent " << format_number(result.fit.slope) << " max_area_ratio " << format_number(result.max_area_ratio)
      << " area_constant " << format_number(result.area_constant) << '\n';
  if (result.max_membership_error > tol) {
    err << "error: filling vertex off the horosphere by " << format_number(result.max_membership_error) << '\n';
    return kExitPropertyFailure;
  }
  return kExitOk;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s.empty() ? "-" : s;
}

void print_chart_point(std::ostream& os, const std::string& label, const ChartPoint& c) {
  os << label;
  for (const auto& p : c.full) os << ' ' << describe(p);
  for (Eigen::Index j = 0; j < c.params.size(); ++j) os << ' ' << format_number(c.params[j]);
  os << '\n';
}

void print_point(std::ostream& os, const std::string& label, const ProductPoint& x) {
  os << label;
  for (const auto& p : x) os << ' ' << describe(p);
  os << '\n';
}

int run_chart(const RunConfig& c, std::ostream& out) {
  const auto spec = require_space(c);
  CounterRng rng(require_seed(c));
  const Horosphere h(spec.space, spec.direction, default_base_point(spec.space));
  const auto slice = make_slice(h, widest_slice_spec(h));
  const auto cx = random_chart_point(slice, rng);
  const auto cy = random_chart_point(slice, rng);
  const auto x = chart_inverse(slice, cx);
  const auto y = chart_inverse(slice, cy);
  const double roundtrip = std::max(chart_distance(slice, cx, chart_forward(slice, x)),
                                    chart_distance(slice, cy, chart_forward(slice, y)));
  const double dbar = chart_distance(slice, cx, cy);
  const auto path = slice_path(slice, x, y);
  double membership = 0.0;
  for (const auto& p : path.points) membership = std::max(membership, std::abs(h.value(p)));

  out << "k " << slice.k() << "\nfull " << join(slice.full_indices()) << "\nparams " << join(slice.param_indices())
      << "\ndependent " << slice.dependent() + 1 << '\n';
  print_chart_point(out, "chart_x", cx);
  print_chart_point(out, "chart_y", cy);
  print_point(out, "x", x);
  print_point(out, "y", y);
  out << "roundtrip_error " << format_number(roundtrip) << "\nchart_distance " << format_number(dbar)
      << "\nextrinsic_distance " << format_number(prod_distance(spec.space, x, y)) << "\npath_length "
      << format_number(path.length) << "\npath_bound " << format_number(path_constant(slice) * dbar)
      << "\npath_membership " << format_number(membership) << '\n';
  const bool ok = roundtrip <= 1e-9 && path.length <= path_constant(slice) * dbar + 1e-6 &&
                  membership <= kMembershipTolerance;
  return ok ? kExitOk : kExitPropertyFailure;
}

}  // namespace

SliceSpec fill_slice_spec(const Horosphere& h) {
  const auto& slope = h.center().slope();
  const auto positive = slope.positive_indices();
  if (positive.size() < 2) throw UsageError("q must be at least 2");
  const auto full = *std::min_element(positive.begin(), positive.end(),
                                      [&](std::size_t a, std::size_t b) { return slope[a] < slope[b]; });
  return standard_slice_spec(h, {full});
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    check_flags(config);
    if (config.command == "verify") return run_verify(config, out);
    if (config.command == "distortion") return run_distortion(config, out, err);
    if (config.command == "control") return run_control(config, out, err);
    if (config.command == "fill") return run_fill(config, out, err);
    return run_chart(config, out);
  } catch (const ParseError& e) {
    err << "error: --space " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidSliceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitPropertyFailure;
  }
}

}  // namespace horo
