#include <gtest/gtest.h>

#include <cmath>

#include "horo/errors.hpp"
#include "horo/product.hpp"
#include "horo/sampling.hpp"

namespace horo {
namespace {

using Complex = std::complex<double>;

// log 2 and sqrt(2)·log 2, 1.4·log 2 from long-double evaluation.
constexpr double kLog2 = 0.69314718055994531;
constexpr double kSqrt2Log2 = 0.98025814346854723;
constexpr double kLog2Times1p4 = 0.97040605278392343;

EuclideanPoint vec(std::initializer_list<double> xs) {
  EuclideanPoint p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p[i++] = x;
  return p;
}

Eigen::VectorXd theta(std::initializer_list<double> xs) { return vec(xs); }

const ProductSpace kRR({EuclideanSpace{1}, EuclideanSpace{1}});
const ProductSpace kHH({HyperbolicPlane{}, HyperbolicPlane{}});
const ProductSpace kHHR({HyperbolicPlane{}, HyperbolicPlane{}, EuclideanSpace{1}});

BoundaryDirection vertical(const ProductSpace& space, const SlopeVector& s) {
  std::vector<std::optional<FactorBoundaryPoint>> ends(space.rank());
  for (auto i : s.positive_indices()) ends[i] = HyperbolicEnd::infinity();
  return BoundaryDirection(s, ends);
}

TEST(FrozenConstants, MatchLibraryMath) {
  EXPECT_DOUBLE_EQ(kSqrt2Log2, std::sqrt(2.0) * std::log(2.0));
  EXPECT_DOUBLE_EQ(kLog2Times1p4, 1.4 * std::log(2.0));
  EXPECT_DOUBLE_EQ(kLog2, std::log(2.0));
}

// --- distance and slopes ---------------------------------------------------

TEST(ProductDistance, Examples) {
  EXPECT_DOUBLE_EQ(prod_distance(kRR, {vec({0}), vec({0})}, {vec({3}), vec({4})}), 5.0);
  EXPECT_NEAR(prod_distance(kHH, {Complex(0, 1), Complex(0, 1)}, {Complex(0, 2), Complex(0, 2)}), kSqrt2Log2,
              1e-15);
  const ProductPoint x{Complex(0.3, 1.7), Complex(-2, 0.4)};
  EXPECT_EQ(prod_distance(kHH, x, x), 0.0);
}

TEST(ProductDistance, ArityMismatchIsUsageError) {
  EXPECT_THROW(prod_distance(kRR, {vec({0})}, {vec({3}), vec({4})}), UsageError);
}

TEST(SlopeOfSegment, Examples) {
  const auto a = slope_of_segment(kRR, {vec({0}), vec({0})}, {vec({3}), vec({4})});
  EXPECT_NEAR(a[0], 0.6, 1e-15);
  EXPECT_NEAR(a[1], 0.8, 1e-15);

  const auto b = slope_of_segment(kHH, {Complex(0, 1), Complex(0, 1)}, {Complex(0, 2), Complex(0, 1)});
  EXPECT_DOUBLE_EQ(b[0], 1.0);
  EXPECT_DOUBLE_EQ(b[1], 0.0);
  EXPECT_FALSE(classify_direction(b).regular);

  const auto c = slope_of_segment(kHHR, {Complex(0, 1), Complex(0, 1), vec({0})},
                                  {Complex(0, 2), Complex(0, 2), vec({0})});
  EXPECT_NEAR(c[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(c[1], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(c[2], 0.0);
}

TEST(SlopeOfSegment, DegenerateSegmentThrows) {
  const ProductPoint x{Complex(0, 1), Complex(0, 1)};
  EXPECT_THROW(slope_of_segment(kHH, x, x), DegenerateError);
}

TEST(SlopeVector, RejectsNonUnitOrNegative) {
  EXPECT_THROW(SlopeVector(theta({0.6, 0.7})), DomainError);
  EXPECT_THROW(SlopeVector(theta({-0.6, 0.8})), DomainError);
  EXPECT_NO_THROW(SlopeVector(theta({0.6, 0.8})));
}

TEST(ClassifyDirection, Examples) {
  const auto a = classify_direction(SlopeVector(theta({0.6, 0.8})));
  EXPECT_TRUE(a.regular);
  EXPECT_EQ(a.q, 2u);
  EXPECT_EQ(a.positive, (std::vector<std::size_t>{0, 1}));

  const auto b = classify_direction(SlopeVector(theta({1, 0})));
  EXPECT_FALSE(b.regular);
  EXPECT_EQ(b.q, 1u);
  EXPECT_EQ(b.positive, (std::vector<std::size_t>{0}));

  const auto c = classify_direction(SlopeVector(theta({0.6, 0.8, 0})));
  EXPECT_FALSE(c.regular);
  EXPECT_EQ(c.q, 2u);
  EXPECT_EQ(c.positive, (std::vector<std::size_t>{0, 1}));
}

TEST(BoundaryDirection, EndsExactlyOnPositiveIndices) {
  const SlopeVector s(theta({1, 0}));
  EXPECT_THROW(BoundaryDirection(s, {std::nullopt, std::nullopt}), DomainError);
  EXPECT_THROW(BoundaryDirection(s, {HyperbolicEnd::infinity(), HyperbolicEnd::infinity()}), DomainError);
  EXPECT_NO_THROW(BoundaryDirection(s, {HyperbolicEnd::infinity(), std::nullopt}));
}

// --- rays and Busemann functions -------------------------------------------

TEST(ProductRay, Examples) {
  const ProductPoint x{Complex(0, 1), Complex(0, 1)};
  const auto xi = vertical(kHH, SlopeVector(theta({0.6, 0.8})));
  const auto p0 = prod_ray_point(kHH, x, xi, 0.0);
  EXPECT_EQ(prod_distance(kHH, x, p0), 0.0);

  const auto p1 = prod_ray_point(kHH, x, xi, 1.0);
  EXPECT_NEAR(std::abs(std::get<Complex>(p1[0]) - Complex(0, std::exp(0.6))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(std::get<Complex>(p1[1]) - Complex(0, std::exp(0.8))), 0.0, 1e-14);
  EXPECT_NEAR(prod_distance(kHH, x, p1), 1.0, 1e-14);

  const auto singular = vertical(kHH, SlopeVector(theta({1, 0})));
  for (double t : {0.5, 3.0, 17.0})
    EXPECT_EQ(std::get<Complex>(prod_ray_point(kHH, x, singular, t)[1]), Complex(0, 1));
  EXPECT_THROW(prod_ray_point(kHH, x, xi, -1.0), DomainError);
}

TEST(ProductBusemann, Examples) {
  const ProductPoint x{Complex(0, 1), Complex(0, 1)};
  const ProductPoint y{Complex(0, 2), Complex(0, 2)};
  const auto xi = vertical(kHH, SlopeVector(theta({0.6, 0.8})));
  EXPECT_EQ(prod_busemann(kHH, xi, x, x), 0.0);
  EXPECT_NEAR(prod_busemann(kHH, xi, x, y), kLog2Times1p4, 1e-15);
  EXPECT_NEAR(prod_busemann_limit(kHH, xi, x, y), kLog2Times1p4, 1e-9);

  const auto singular = vertical(kHH, SlopeVector(theta({1, 0})));
  const ProductPoint z{Complex(0, 2), Complex(5, 0.01)};
  EXPECT_NEAR(prod_busemann(kHH, singular, x, z), kLog2, 1e-15);
}

struct Instance {
  ProductSpace space;
  BoundaryDirection xi;
};

/// Random product of two or three factors with a random slope (zero entries
/// included with some probability) and random factor ends.
Instance random_instance(CounterRng& rng) {
  const std::vector<ModelSpace> pool{EuclideanSpace{1}, EuclideanSpace{2}, HyperbolicPlane{}, RegularTree{3},
                                     RegularTree{4}};
  const auto r = 2 + rng.below(2);
  std::vector<ModelSpace> factors;
  for (std::size_t i = 0; i < r; ++i) factors.push_back(pool[rng.below(pool.size())]);
  Eigen::VectorXd raw(static_cast<Eigen::Index>(r));
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw[i] = rng.uniform() < 0.25 ? 0.0 : rng.uniform(0.1, 1.0);
  if (raw.maxCoeff() == 0.0) raw[0] = 1.0;
  const auto slope = SlopeVector::normalized(raw);
  std::vector<std::optional<FactorBoundaryPoint>> ends(r);
  for (auto i : slope.positive_indices()) ends[i] = random_end(factors[i], rng);
  return {ProductSpace(factors), BoundaryDirection(slope, ends)};
}

TEST(ProductBusemannProperties, DecompositionMatchesDirectLimit) {
  CounterRng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const auto y = random_product_point(inst.space, rng);
    ASSERT_NEAR(prod_busemann(inst.space, inst.xi, x, y), prod_busemann_limit(inst.space, inst.xi, x, y), 1e-6)
        << "trial " << trial;
  }
}

TEST(ProductBusemannProperties, CocycleAndBound) {
  CounterRng rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const auto y = random_product_point(inst.space, rng);
    const auto z = random_product_point(inst.space, rng);
    const double bxy = prod_busemann(inst.space, inst.xi, x, y);
    const double byz = prod_busemann(inst.space, inst.xi, y, z);
    const double bxz = prod_busemann(inst.space, inst.xi, x, z);
    EXPECT_NEAR(bxz, bxy + byz, 1e-9);
    EXPECT_LE(std::abs(bxy), prod_distance(inst.space, x, y) + 1e-9);
  }
}

TEST(ProductBusemannProperties, EqualityAlongTheRay) {
  CounterRng rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const double t = rng.uniform(0.1, 6.0);
    const auto y = prod_ray_point(inst.space, x, inst.xi, t);
    EXPECT_NEAR(prod_distance(inst.space, x, y), t, 1e-9);
    EXPECT_NEAR(prod_busemann(inst.space, inst.xi, x, y), t, 1e-6);
  }
}

TEST(ProductBusemannProperties, RayRepresentativeIndependence) {
  CounterRng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const auto y = random_product_point(inst.space, rng);
    const auto w = random_product_point(inst.space, rng);
    EXPECT_NEAR(prod_busemann_limit(inst.space, inst.xi, x, y),
                prod_busemann_limit(inst.space, inst.xi, x, y, {.ray_base = w}), 1e-8)
        << "trial " << trial;
  }
}

TEST(ProductMetricProperties, SlopeIsSymmetric) {
  CounterRng rng(80);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const auto y = random_product_point(inst.space, rng);
    const auto a = slope_of_segment(inst.space, x, y);
    const auto b = slope_of_segment(inst.space, y, x);
    EXPECT_LE((a.values() - b.values()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ProductMetricProperties, MidpointComparison) {
  CounterRng rng(81);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_instance(rng);
    const auto x = random_product_point(inst.space, rng);
    const auto y = random_product_point(inst.space, rng);
    const auto z = random_product_point(inst.space, rng);
    const auto m = prod_geodesic_point(inst.space, x, y, 0.5);
    const double dxy = prod_distance(inst.space, x, y);
    const double dxz = prod_distance(inst.space, x, z);
    const double dyz = prod_distance(inst.space, y, z);
    const double dmz = prod_distance(inst.space, m, z);
    EXPECT_LE(dmz * dmz, 0.5 * dxz * dxz + 0.5 * dyz * dyz - 0.25 * dxy * dxy + 1e-9);
    EXPECT_NEAR(prod_distance(inst.space, x, m), 0.5 * dxy, 1e-9);
  }
}

}  // namespace
}  // namespace horo
