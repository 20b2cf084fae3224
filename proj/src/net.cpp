#include "horo/net.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "horo/errors.hpp"

namespace horo {
namespace {

constexpr std::size_t kPivots = 8;

/// Farthest-point traversal from node 0.
std::vector<std::vector<double>> pivot_distances(const ProductSpace& space, const std::vector<ProductPoint>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> table;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  std::size_t pivot = 0;
  for (std::size_t p = 0; p < std::min(kPivots, n); ++p) {
    std::vector<double> row(n);
    for (std::size_t i = 0; i < n; ++i) {
      row[i] = prod_distance(space, nodes[pivot], nodes[i]);
      nearest[i] = std::min(nearest[i], row[i]);
    }
    table.push_back(std::move(row));
    pivot = static_cast<std::size_t>(std::max_element(nearest.begin(), nearest.end()) - nearest.begin());
  }
  return table;
}

std::vector<std::size_t> component_sizes(const NetGraph& g, std::vector<std::size_t>& label) {
  const std::size_t n = g.node_count();
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  label.assign(n, unset);
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    const std::size_t c = sizes.size();
    sizes.push_back(0);
    label[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      ++sizes[c];
      for (auto e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
        const auto v = g.neighbors[e];
        if (label[v] == unset) {
          label[v] = c;
          stack.push_back(v);
        }
      }
    }
  }
  return sizes;
}

}  // namespace

NetGraph build_net(const ProductSpace& space, std::vector<ProductPoint> nodes, double eps, bool require_connected) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  for (const auto& p : nodes) validate(space, p);
  NetGraph g;
  g.nodes = std::move(nodes);
  g.eps = eps;
  const std::size_t n = g.node_count();

  std::vector<std::vector<std::pair<std::size_t, double>>> adjacency(n);
  if (n > 1) {
    const auto pivots = pivot_distances(space, g.nodes);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& key = pivots.front();
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return key[a] < key[b]; });
    for (std::size_t ia = 0; ia < n; ++ia) {
      const auto a = order[ia];
      for (std::size_t ib = ia + 1; ib < n && key[order[ib]] - key[a] <= eps; ++ib) {
        const auto b = order[ib];
        bool close = true;
        for (std::size_t p = 1; p < pivots.size() && close; ++p) close = std::abs(pivots[p][a] - pivots[p][b]) <= eps;
        if (!close) continue;
        const double d = prod_distance(space, g.nodes[a], g.nodes[b]);
        if (d <= eps) {
          adjacency[a].emplace_back(b, d);
          adjacency[b].emplace_back(a, d);
        }
      }
    }
  }

  g.offsets.assign(1, 0);
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    for (const auto& [v, w] : list) {
      g.neighbors.push_back(v);
      g.weights.push_back(w);
    }
    g.offsets.push_back(g.neighbors.size());
  }

  if (require_connected && n > 1) {
    std::vector<std::size_t> label;
    const auto sizes = component_sizes(g, label);
    if (sizes.size() > 1) {
      const auto big = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
      const auto largest = sizes[big];
      std::size_t stray = 0;
      while (label[stray] == big) ++stray;
      throw DisconnectedNetError("net with eps = " + std::to_string(eps) + " has " + std::to_string(sizes.size()) +
                                 " components; the largest holds " + std::to_string(largest) + " of " +
                                 std::to_string(n) + " nodes; node " + std::to_string(stray) +
                                 " lies outside it (increase n or eps)");
    }
  }
  return g;
}

std::vector<double> shortest_paths_from(const NetGraph& g, std::size_t source) {
  if (source >= g.node_count()) throw UsageError("source node out of range");
  std::vector<double> dist(g.node_count(), std::numeric_limits<double>::infinity());
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (auto e = g.offsets[u]; e < g.offsets[u + 1]; ++e) {
      const auto v = g.neighbors[e];
      const double nd = d + g.weights[e];
      if (nd < dist[v]) {
        dist[v] = nd;
        queue.emplace(nd, v);
      }
    }
  }
  return dist;
}

double intrinsic_distance(const NetGraph& g, std::size_t a, std::size_t b) {
  if (b >= g.node_count()) throw UsageError("target node out of range");
  const double d = shortest_paths_from(g, a)[b];
  if (!std::isfinite(d))
    throw NoPathError("node " + std::to_string(b) + " is not reachable from node " + std::to_string(a));
  return d;
}

}  // namespace horo
