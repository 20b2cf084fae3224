#include <gtest/gtest.h>

#include <cmath>

#include "horo/errors.hpp"
#include "horo/geodesic.hpp"
#include "horo/metric.hpp"
#include "horo/sampling.hpp"
#include "oracles.hpp"

namespace horo {
namespace {

using Complex = std::complex<double>;

// Frozen from the oracles in oracles.hpp (see OracleValues below).
constexpr double kLog2 = 0.69314718055994531;

const ModelSpace kPlane = EuclideanSpace{2};
const ModelSpace kLine = EuclideanSpace{1};
const ModelSpace kH2 = HyperbolicPlane{};
const ModelSpace kTree = RegularTree{3};

EuclideanPoint vec(std::initializer_list<double> xs) {
  EuclideanPoint p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p[i++] = x;
  return p;
}

Complex h(double re, double im) { return {re, im}; }

TEST(OracleValues, HyperbolicArclengthAlongImaginaryAxis) {
  const double len = oracle::hyperbolic_arclength([](double t) { return Complex(0.0, t); }, 1.0, 2.0);
  EXPECT_NEAR(len, kLog2, 1e-9);
  EXPECT_NEAR(oracle::hyperbolic_busemann_at_infinity(h(0, 1), h(0, 2)), kLog2, 1e-9);
  EXPECT_EQ(oracle::tree_bfs_distance("0", "01", 3), 1);
}

// --- distance --------------------------------------------------------------

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(distance(kPlane, vec({0, 0}), vec({3, 4})), 5.0);
  EXPECT_NEAR(distance(kH2, h(0, 1), h(0, 2)), kLog2, 1e-15);
  EXPECT_DOUBLE_EQ(distance(kTree, TreePoint::vertex("0"), TreePoint::vertex("01")), 1.0);
}

TEST(Distance, TreeVerticesMatchBreadthFirstSearch) {
  CounterRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_word(rng, 3, rng.below(5));
    const auto b = random_word(rng, 3, rng.below(5));
    EXPECT_DOUBLE_EQ(distance(kTree, TreePoint::vertex(a), TreePoint::vertex(b)),
                     oracle::tree_bfs_distance(a, b, 3))
        << a << " " << b;
  }
}

TEST(Distance, HyperbolicMatchesArccoshForm) {
  CounterRng rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto z = std::get<Complex>(random_point(kH2, rng));
    const auto w = std::get<Complex>(random_point(kH2, rng));
    EXPECT_NEAR(distance(kH2, z, w), oracle::hyperbolic_distance(z, w), 1e-9);
  }
}

TEST(Distance, RejectsInvalidPoints) {
  EXPECT_THROW(distance(kH2, h(0, 0), h(0, 1)), DomainError);
  EXPECT_THROW(distance(kH2, h(0, -1), h(0, 1)), DomainError);
  EXPECT_THROW(distance(kPlane, vec({0}), vec({1, 1})), DomainError);
  EXPECT_THROW(distance(kTree, TreePoint{"00", 2.0}, TreePoint{}), DomainError);
  EXPECT_THROW(distance(RegularTree{2}, TreePoint::vertex("2"), TreePoint{}), DomainError);
  EXPECT_THROW(distance(kH2, vec({0}), h(0, 1)), DomainError);
}

// --- geodesics -------------------------------------------------------------

TEST(Geodesic, Examples) {
  const auto seg = geodesic(kPlane, vec({0, 0}), vec({3, 4}));
  EXPECT_TRUE(std::get<EuclideanPoint>(seg(2.5)).isApprox(vec({1.5, 2.0})));

  const auto hseg = geodesic(kH2, h(0, 1), h(0, 2));
  const auto mid = std::get<Complex>(hseg(kLog2 / 2));
  EXPECT_NEAR(mid.real(), 0.0, 1e-14);
  EXPECT_NEAR(mid.imag(), std::sqrt(2.0), 1e-14);

  const auto tseg = geodesic(kTree, TreePoint::vertex("0"), TreePoint::vertex("01"));
  const auto p = std::get<TreePoint>(tseg(0.5));
  EXPECT_EQ(p.vertex_address(), "0");
  EXPECT_DOUBLE_EQ(p.offset(), 0.5);
  EXPECT_EQ(p.toward(), '1');
}

TEST(Geodesic, EndpointsAndDegenerateError) {
  CounterRng rng(17);
  for (const auto& space : {kPlane, kH2, kTree}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_point(space, rng);
      const auto y = random_point(space, rng);
      if (distance(space, x, y) < 1e-9) continue;
      const auto seg = geodesic(space, x, y);
      EXPECT_NEAR(distance(space, seg(0.0), x), 0.0, 1e-9);
      EXPECT_NEAR(distance(space, seg(seg.length()), y), 0.0, 1e-9);
    }
    const auto x = random_point(space, rng);
    EXPECT_THROW(geodesic(space, x, x), DegenerateError);
  }
}

// --- rays and lines --------------------------------------------------------

TEST(Ray, Examples) {
  const auto r = ray(kH2, h(1, 1), HyperbolicEnd::infinity());
  for (double t : {0.0, 0.5, 3.0}) {
    const auto z = std::get<Complex>(r(t));
    EXPECT_NEAR(z.real(), 1.0, 1e-14);
    EXPECT_NEAR(z.imag(), std::exp(t), 1e-13 * std::exp(t));
  }

  const auto l = ray(kLine, vec({5}), EuclideanEnd{vec({-1})});
  EXPECT_DOUBLE_EQ(std::get<EuclideanPoint>(l(3.0))[0], 2.0);

  const auto tr = ray(kTree, TreePoint{}, TreeEnd::make("", "01"));
  EXPECT_EQ(std::get<TreePoint>(tr(2.0)), TreePoint::vertex("01"));
  EXPECT_THROW(tr(-1.0), DomainError);
}

TEST(Ray, HyperbolicRayToRealEndConverges) {
  const auto r = ray(kH2, h(0.3, 0.7), HyperbolicEnd::real(2.0));
  const auto far = std::get<Complex>(r(30.0));
  EXPECT_NEAR(far.real(), 2.0, 1e-9);
  EXPECT_LT(far.imag(), 1e-9);
}

TEST(Line, PassesThroughOriginAndEnds) {
  const auto line = line_through(kH2, h(1, 1), HyperbolicEnd::infinity());
  EXPECT_TRUE(line.backward_end().index() == 1);
  const auto back = std::get<HyperbolicEnd>(line.backward_end());
  EXPECT_FALSE(back.at_infinity);
  EXPECT_NEAR(back.u, 1.0, 1e-14);
  EXPECT_NEAR(std::get<Complex>(line(-2.0)).imag(), std::exp(-2.0), 1e-14);

  const auto tl = line_through(kTree, TreePoint{}, TreeEnd::make("", "01"));
  // Forward leaves the root through '0'; backward takes the smallest other child '1'.
  EXPECT_EQ(std::get<TreeEnd>(tl.backward_end()), TreeEnd::make("", "10"));
  EXPECT_EQ(std::get<TreePoint>(tl(-2.0)), TreePoint::vertex("10"));
}

TEST(Line, TreeBackwardRuleClimbsWhenNoChildIsFree) {
  // Degree 2: vertex "01" has the single child "010".
  const ModelSpace line_tree = RegularTree{2};
  const auto tl = line_through(line_tree, TreePoint::vertex("01"), TreeEnd::make("", "01"));
  EXPECT_NEAR(distance(line_tree, tl(-3.0), TreePoint::vertex("1")), 0.0, 1e-12);
}

TEST(Line, ShiftedKeepsTheSameLine) {
  CounterRng rng(23);
  for (const auto& space : {kPlane, kH2, kTree}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto line = line_through(space, random_point(space, rng), random_end(space, rng));
      const double c = rng.uniform(-3, 3);
      const auto moved = line.shifted(c);
      for (double t : {-2.0, -0.5, 0.0, 1.0, 2.5})
        EXPECT_NEAR(distance(space, moved(t), line(t + c)), 0.0, 1e-8) << describe(space);
    }
  }
}

TEST(Boundary, TreeEndCanonicalForm) {
  EXPECT_EQ(TreeEnd::make("0", "10"), TreeEnd::make("", "01"));
  EXPECT_EQ(TreeEnd::make("", "0101"), TreeEnd::make("", "01"));
  EXPECT_THROW(TreeEnd::make("0", "1"), DomainError);
  EXPECT_THROW(TreeEnd::make("0", ""), DomainError);
  EXPECT_THROW(TreeEnd::make("00", "12"), DomainError);
  EXPECT_EQ(TreeEnd::make("2", "01").prefix(5), "20101");
}

// --- Busemann --------------------------------------------------------------

TEST(Busemann, Examples) {
  const auto inf = HyperbolicEnd::infinity();
  EXPECT_NEAR(busemann_limit(kH2, inf, h(0, 1), h(0, 2)), kLog2, 1e-9);
  EXPECT_NEAR(busemann_closed(kH2, inf, h(0, 1), h(0, 2)), kLog2, 1e-15);
  EXPECT_NEAR(busemann_closed(kH2, inf, h(0, 1), h(1, 1)), 0.0, 1e-15);
  EXPECT_NEAR(busemann_limit(kH2, inf, h(0, 1), h(1, 1)), 0.0, 1e-9);
  EXPECT_DOUBLE_EQ(busemann_closed(kLine, EuclideanEnd{vec({1})}, vec({0}), vec({7})), 7.0);
}

TEST(Busemann, IdenticalArgumentsAndOnRayCase) {
  CounterRng rng(29);
  for (const auto& space : {kLine, kPlane, kH2, kTree}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_point(space, rng);
      const auto xi = random_end(space, rng);
      EXPECT_NEAR(busemann_limit(space, xi, x, x), 0.0, 1e-12);
      EXPECT_EQ(busemann_closed(space, xi, x, x), 0.0);
      const double t = rng.uniform(0.1, 5.0);
      const auto y = ray(space, x, xi)(t);
      EXPECT_NEAR(busemann_closed(space, xi, x, y), distance(space, x, y), 1e-6);
      EXPECT_NEAR(busemann_limit(space, xi, x, y), t, 1e-6);
    }
  }
}

class BusemannProperties : public ::testing::TestWithParam<ModelSpace> {};

TEST_P(BusemannProperties, ClosedFormMatchesLimit) {
  const auto& space = GetParam();
  CounterRng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto xi = random_end(space, rng);
    EXPECT_NEAR(busemann_closed(space, xi, x, y), busemann_limit(space, xi, x, y), 1e-6)
        << describe(x) << " " << describe(y) << " " << describe(xi);
  }
}

TEST_P(BusemannProperties, CocycleAndBound) {
  const auto& space = GetParam();
  CounterRng rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto z = random_point(space, rng);
    const auto xi = random_end(space, rng);
    const double xz = busemann_closed(space, xi, x, z);
    const double xy = busemann_closed(space, xi, x, y);
    const double yz = busemann_closed(space, xi, y, z);
    EXPECT_LE(std::abs(xz - xy - yz), 1e-9);
    EXPECT_LE(std::abs(xy), distance(space, x, y) + 1e-9);
  }
}

TEST_P(BusemannProperties, RayRepresentativeIndependence) {
  const auto& space = GetParam();
  CounterRng rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto w = random_point(space, rng);
    const auto xi = random_end(space, rng);
    EXPECT_NEAR(busemann_limit(space, xi, x, y), busemann_limit(space, xi, x, y, {.ray_base = w}), 1e-8);
  }
}

TEST_P(BusemannProperties, MidpointComparisonInequality) {
  const auto& space = GetParam();
  CounterRng rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto z = random_point(space, rng);
    const double dxy = distance(space, x, y);
    if (dxy < 1e-9) continue;
    const auto m = geodesic(space, x, y)(dxy / 2);
    const double lhs = std::pow(distance(space, m, z), 2);
    const double rhs = 0.5 * std::pow(distance(space, x, z), 2) + 0.5 * std::pow(distance(space, y, z), 2) -
                       0.25 * dxy * dxy;
    EXPECT_LE(lhs, rhs + 1e-9);
  }
}

TEST_P(BusemannProperties, UnitSpeed) {
  const auto& space = GetParam();
  CounterRng rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_point(space, rng);
    const auto y = random_point(space, rng);
    const auto xi = random_end(space, rng);
    const auto line = line_through(space, x, xi);
    const auto r = ray(space, x, xi);
    const double len = distance(space, x, y);
    for (int k = 0; k < 32; ++k) {
      const double a = rng.uniform(0, 6), b = rng.uniform(0, 6);
      EXPECT_NEAR(distance(space, r(a), r(b)), std::abs(a - b), 1e-9);
      const double c = rng.uniform(-6, 6), d = rng.uniform(-6, 6);
      EXPECT_NEAR(distance(space, line(c), line(d)), std::abs(c - d), 1e-9);
      if (len > 1e-9) {
        const auto seg = geodesic(space, x, y);
        const double s = rng.uniform(0, len), u = rng.uniform(0, len);
        EXPECT_NEAR(distance(space, seg(s), seg(u)), std::abs(s - u), 1e-9);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Models, BusemannProperties,
                         ::testing::Values(ModelSpace{EuclideanSpace{1}}, ModelSpace{EuclideanSpace{3}},
                                           ModelSpace{HyperbolicPlane{}}, ModelSpace{RegularTree{3}},
                                           ModelSpace{RegularTree{4}}),
                         [](const auto& info) {
                           auto name = describe(info.param);
                           for (auto& c : name)
                             if (c == ':') c = '_';
                           return name;
                         });

}  // namespace
}  // namespace horo
