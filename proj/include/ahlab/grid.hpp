#pragma once
#include <stdexcept>
#include <string>
#include <vector>

namespace ahlab {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension of the manifold; the constructions are stated for 3 <= n <= 7.
struct Dim {
  int n;
  explicit Dim(int n_) : n(n_) {
    if (n < 3 || n > 7) throw error("Dim: n must be in [3,7], got " + std::to_string(n));
  }
};

// Radial grid on (0, T_max]: strictly increasing, strictly positive nodes.
// Refinement halves spacing by inserting geometric midpoints, so coarse nodes
// survive bitwise in every refined grid (needed for convergence-order runs).
struct RadialGrid {
  std::vector<double> nodes;
  int refinement_level = 0;

  std::size_t size() const { return nodes.size(); }
  double front() const { return nodes.front(); }
  double back() const { return nodes.back(); }
};

// Geometrically graded grid: node spacing proportional to t, which resolves
// the O(t^n) boundary behavior that carries the mass.
RadialGrid make_geometric_grid(double t_min, double t_max, int count, int level = 0);

// One refinement step: inserts sqrt(t_i * t_{i+1}) between adjacent nodes.
RadialGrid refine(const RadialGrid& g);

void validate(const RadialGrid& g);

// Index range [lo, hi] of nodes inside a closed window; throws if fewer than
// min_nodes land inside.
std::pair<std::size_t, std::size_t> window_indices(const RadialGrid& g, double a, double b,
                                                   std::size_t min_nodes = 2);

}  // namespace ahlab
