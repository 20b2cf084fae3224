#pragma once

#include <string>

#include "horo/model_space.hpp"
#include "horo/random.hpp"
#include "horo/slice.hpp"

namespace horo {

/// Random reduced word of exactly `length` letters over a degree-letter alphabet,
/// avoiding `after` as its first letter.
std::string random_word(CounterRng& rng, int degree, std::size_t length, char after = '\0');

/// Random point in a bounded window: Euclidean coordinates in [-scale, scale],
/// hyperbolic Re z in [-scale, scale] and log Im z in [-scale/2, scale/2],
/// tree points up to depth 2·scale.
FactorPoint random_point(const ModelSpace& space, CounterRng& rng, double scale = 3.0);

/// Random boundary point; hyperbolic ends are ∞ with probability 1/3.
FactorBoundaryPoint random_end(const ModelSpace& space, CounterRng& rng, double scale = 3.0);

/// Random point of every factor.
ProductPoint random_product_point(const ProductSpace& space, CounterRng& rng, double scale = 3.0);

/// Random direction: each θ_i is zero with probability `zero_rate`, otherwise
/// uniform in [0.1, 1] before normalization; ends from random_end.
BoundaryDirection random_direction(const ProductSpace& space, CounterRng& rng, double zero_rate = 0.25);

/// Random chart point: full coordinates from random_point, line parameters
/// uniform in [-scale, scale].
ChartPoint random_chart_point(const Slice& slice, CounterRng& rng, double scale = 3.0);

}  // namespace horo
