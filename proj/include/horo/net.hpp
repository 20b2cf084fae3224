#pragma once

#include <cstddef>
#include <vector>

#include "horo/product.hpp"

namespace horo {

/// ε-net graph: nodes joined when their extrinsic distance is at most eps,
/// edge weights are those distances. Adjacency is stored compressed, each
/// node's neighbours in ascending index order.
struct NetGraph {
  std::vector<ProductPoint> nodes;
  double eps = 0.0;
  std::vector<std::size_t> offsets;  // size nodes.size() + 1
  std::vector<std::size_t> neighbors;
  std::vector<double> weights;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const { return neighbors.size() / 2; }
};

/// Builds the net with pivot filtering (reverse triangle inequality against a
/// few far-apart nodes). Throws DisconnectedNetError when `require_connected`
/// and the graph has more than one component.
NetGraph build_net(const ProductSpace& space, std::vector<ProductPoint> nodes, double eps,
                   bool require_connected = true);

/// Shortest-path lengths from `source`; unreachable nodes get +∞. Ties are
/// settled in node-index order, so results are deterministic.
std::vector<double> shortest_paths_from(const NetGraph& g, std::size_t source);

/// Weighted shortest-path length; throws NoPathError when b is unreachable.
double intrinsic_distance(const NetGraph& g, std::size_t a, std::size_t b);

}  // namespace horo
