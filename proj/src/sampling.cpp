#include "horo/sampling.hpp"

#include <cmath>

namespace horo {

std::string random_word(CounterRng& rng, int degree, std::size_t length, char after) {
  std::string w;
  char prev = after;
  for (std::size_t i = 0; i < length; ++i) {
    // Uniform among the degree - 1 letters different from prev (degree at the root).
    const int choices = prev == '\0' ? degree : degree - 1;
    int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(choices)));
    char c = static_cast<char>('0' + k);
    if (prev != '\0' && c >= prev) ++c;
    w.push_back(c);
    prev = c;
  }
  return w;
}

FactorPoint random_point(const ModelSpace& space, CounterRng& rng, double scale) {
  return std::visit(overloaded{
                        [&](const EuclideanSpace& e) -> FactorPoint {
                          EuclideanPoint p(e.dim);
                          for (int i = 0; i < e.dim; ++i) p[i] = rng.uniform(-scale, scale);
                          return p;
                        },
                        [&](const HyperbolicPlane&) -> FactorPoint {
                          const double re = rng.uniform(-scale, scale);
                          const double s = rng.uniform(-scale / 2.0, scale / 2.0);
                          return HyperbolicPoint(re, std::exp(s));
                        },
                        [&](const RegularTree& t) -> FactorPoint {
                          const auto max_depth = static_cast<std::uint64_t>(2.0 * scale);
                          const auto len = rng.below(max_depth + 1);
                          auto word = random_word(rng, t.degree, len);
                          if (len == 0 || rng.uniform() < 0.3) return TreePoint::vertex(word);
                          return TreePoint::make(word, static_cast<double>(len) - rng.uniform(0.0, 1.0));
                        },
                    },
                    space);
}

FactorBoundaryPoint random_end(const ModelSpace& space, CounterRng& rng, double scale) {
  return std::visit(overloaded{
                        [&](const EuclideanSpace& e) -> FactorBoundaryPoint {
                          Eigen::VectorXd v(e.dim);
                          do {
                            for (int i = 0; i < e.dim; ++i) v[i] = rng.uniform(-1.0, 1.0);
                          } while (v.norm() < 1e-3);
                          return EuclideanEnd{v / v.norm()};
                        },
                        [&](const HyperbolicPlane&) -> FactorBoundaryPoint {
                          if (rng.uniform() < 1.0 / 3.0) return HyperbolicEnd::infinity();
                          return HyperbolicEnd::real(rng.uniform(-scale, scale));
                        },
                        [&](const RegularTree& t) -> FactorBoundaryPoint {
                          const auto pre = random_word(rng, t.degree, rng.below(5));
                          for (;;) {
                            const auto period =
                                random_word(rng, t.degree, 2 + rng.below(3), pre.empty() ? '\0' : pre.back());
                            if (period.front() != period.back()) return TreeEnd::make(pre, period);
                          }
                        },
                    },
                    space);
}

ProductPoint random_product_point(const ProductSpace& space, CounterRng& rng, double scale) {
  ProductPoint p;
  for (const auto& f : space.factors()) p.push_back(random_point(f, rng, scale));
  return p;
}

BoundaryDirection random_direction(const ProductSpace& space, CounterRng& rng, double zero_rate) {
  Eigen::VectorXd raw(static_cast<Eigen::Index>(space.rank()));
  for (Eigen::Index i = 0; i < raw.size(); ++i) raw[i] = rng.uniform() < zero_rate ? 0.0 : rng.uniform(0.1, 1.0);
  if (raw.maxCoeff() == 0.0) raw[static_cast<Eigen::Index>(rng.below(space.rank()))] = 1.0;
  const auto slope = SlopeVector::normalized(raw);
  std::vector<std::optional<FactorBoundaryPoint>> ends(space.rank());
  for (auto i : slope.positive_indices()) ends[i] = random_end(space[i], rng);
  return BoundaryDirection(slope, ends);
}

ChartPoint random_chart_point(const Slice& slice, CounterRng& rng, double scale) {
  ChartPoint c;
  for (auto i : slice.full_indices()) c.full.push_back(random_point(slice.space()[i], rng, scale));
  c.params.resize(static_cast<Eigen::Index>(slice.param_indices().size()));
  for (Eigen::Index j = 0; j < c.params.size(); ++j) c.params[j] = rng.uniform(-scale, scale);
  return c;
}

}  // namespace horo
