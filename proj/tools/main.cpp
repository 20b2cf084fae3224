#include <iostream>

#include <CLI11.hpp>

#include "horo/run.hpp"

namespace {

template <class T>
void flag(CLI::App* app, const std::string& name, std::optional<T>& slot, const std::string& help) {
  app->add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Busemann calculus, horosphere charts and undistortion experiments on products of Hadamard spaces"};
  app.require_subcommand(1);
  horo::RunConfig config;

  const auto space = [&](CLI::App* sub) {
    flag(sub, "--space", config.space, "product and direction, e.g. \"h2*h2 theta=0.6,0.8 xi1=inf xi2=inf\"");
  };
  const auto seed = [&](CLI::App* sub) { flag(sub, "--seed", config.seed, "64-bit seed"); };
  const auto eps = [&](CLI::App* sub) { flag(sub, "--eps", config.eps, "net scale"); };
  const auto out = [&](CLI::App* sub) { flag(sub, "--out", config.out, "CSV path (default: standard output)"); };
  const auto tol = [&](CLI::App* sub) { flag(sub, "--tol", config.tol, "tolerance of the property check"); };

  auto* verify = app.add_subcommand("verify", "run the property suites for a space and direction");
  space(verify);
  seed(verify);
  flag(verify, "--n", config.n, "random trials per Busemann property (default 1000)");

  auto* distortion = app.add_subcommand("distortion", "intrinsic vs extrinsic distances on the widest slice");
  space(distortion);
  seed(distortion);
  eps(distortion);
  flag(distortion, "--n", config.n, "net nodes (default 20000)");
  out(distortion);
  tol(distortion);

  auto* control = app.add_subcommand("control", "horocycle distances in a single hyperbolic plane");
  flag(control, "--amax", config.amax, "largest horocyclic length (default 8)");
  flag(control, "--step", config.step, "horocyclic length step (default 0.25)");
  eps(control);
  out(control);
  tol(control);

  auto* fill = app.add_subcommand("fill", "cone fillings of chart circles in a 1-slice");
  space(fill);
  flag(fill, "--n", config.n, "vertices per loop (default 256)");
  out(fill);
  tol(fill);

  auto* chart = app.add_subcommand("chart", "chart maps and a slice path between two seeded chart points");
  space(chart);
  seed(chart);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : horo::kExitUsage;
  }
  config.command = app.get_subcommands().front()->get_name();
  return horo::run(config, std::cout, std::cerr);
}
