#include "ahlab/grid.hpp"

#include <cmath>

namespace ahlab {

void validate(const RadialGrid& g) {
  if (g.nodes.empty()) throw error("RadialGrid: empty");
  if (!(g.nodes.front() > 0.0)) throw error("RadialGrid: nodes must be strictly positive");
  for (std::size_t i = 1; i < g.nodes.size(); ++i)
    if (!(g.nodes[i] > g.nodes[i - 1])) throw error("RadialGrid: nodes must be strictly increasing");
}

RadialGrid make_geometric_grid(double t_min, double t_max, int count, int level) {
  if (!(t_min > 0.0) || !(t_max > t_min)) throw error("make_geometric_grid: need 0 < t_min < t_max");
  if (count < 2) throw error("make_geometric_grid: need at least 2 nodes");
  RadialGrid g;
  g.refinement_level = level;
  g.nodes.resize(count);
  const double lr = std::log(t_max / t_min);
  for (int i = 0; i < count; ++i)
    g.nodes[i] = t_min * std::exp(lr * (static_cast<double>(i) / (count - 1)));
  g.nodes.front() = t_min;  // endpoints exact regardless of exp/log rounding
  g.nodes.back() = t_max;
  validate(g);
  return g;
}

RadialGrid refine(const RadialGrid& g) {
  validate(g);
  RadialGrid r;
  r.refinement_level = g.refinement_level + 1;
  r.nodes.reserve(2 * g.nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i) {
    r.nodes.push_back(g.nodes[i]);
    r.nodes.push_back(std::sqrt(g.nodes[i] * g.nodes[i + 1]));
  }
  r.nodes.push_back(g.nodes.back());
  validate(r);
  return r;
}

std::pair<std::size_t, std::size_t> window_indices(const RadialGrid& g, double a, double b,
                                                   std::size_t min_nodes) {
  if (!(a < b)) throw error("window_indices: need a < b");
  std::size_t lo = 0, hi = g.nodes.size();
  while (lo < g.nodes.size() && g.nodes[lo] < a) ++lo;
  while (hi > 0 && g.nodes[hi - 1] > b) --hi;
  if (hi < lo + min_nodes)
    throw error("window_indices: fewer than " + std::to_string(min_nodes) + " nodes in [" +
                std::to_string(a) + ", " + std::to_string(b) + "]");
  return {lo, hi - 1};
}

}  // namespace ahlab
