#pragma once
#include <cstddef>
#include <vector>

#include "ahlab/grid.hpp"

namespace ahlab {

// Finite-difference weights on arbitrary nodes (Fornberg's recursion).
// Returns weights for derivatives 0..max_order at point z over the given
// nodes; w[j * (max_order + 1) + m] multiplies f(nodes[j]) in the m-th
// derivative (node-major, matching the recursion's natural layout).
std::vector<double> fd_weights(double z, const double* nodes, std::size_t nnodes, int max_order);

// Per-node first/second derivative stencils of fixed width (7 by default:
// formally 6th/5th order interior on smooth grids). Interior stencils are
// centered; near the ends they clamp to one-sided over the same width.
struct DerivStencils {
  std::size_t n = 0;
  int width = 0;
  std::vector<std::size_t> offset;  // first node index of each stencil
  std::vector<double> w1, w2;       // width weights per node, node-major

  bool uniform_interior(std::size_t i) const {
    return offset[i] == i - static_cast<std::size_t>(width / 2);
  }
};

DerivStencils build_stencils(const RadialGrid& g, int width = 7);

// y := d^k f / dt^k via the stencil table (k = 1 or 2). Dispatches to the
// fastest kernel available at runtime; bitwise-equal across variants.
void apply_d1(const DerivStencils& st, const std::vector<double>& f, std::vector<double>& out);
void apply_d2(const DerivStencils& st, const std::vector<double>& f, std::vector<double>& out);

// Cumulative integral F(t_i) = int_{t_0}^{t_i} f dt by integrating the local
// degree-5 interpolant over each interval (6-node stencils). F(t_0) = 0.
std::vector<double> cumulative_integral(const RadialGrid& g, const std::vector<double>& f);

// Value of the local degree-(stencil-1) interpolant of f at z; exact when z
// hits a node. Used by resample; 6 nodes gives the contract's >= 4th order.
double interpolate(const RadialGrid& g, const std::vector<double>& f, double z, int stencil = 6);

}  // namespace ahlab
