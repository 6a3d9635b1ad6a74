#include "ahlab/stencil.hpp"

#include <algorithm>
#include <cmath>

#include "ahlab/kernels.hpp"
#include "ahlab/linalg.hpp"

namespace ahlab {

std::vector<double> fd_weights(double z, const double* x, std::size_t nn, int m) {
  // Fornberg's recursion; C[j*(m+1)+k] multiplies f(x[j]) in the k-th derivative.
  std::vector<double> C(nn * (m + 1), 0.0);
  double c1 = 1.0, c4 = x[0] - z;
  C[0] = 1.0;
  for (std::size_t i = 1; i < nn; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), m);
    double c2 = 1.0, c5 = c4;
    c4 = x[i] - z;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          C[i * (m + 1) + k] = c1 * (k * C[(i - 1) * (m + 1) + k - 1] - c5 * C[(i - 1) * (m + 1) + k]) / c2;
        C[i * (m + 1)] = -c1 * c5 * C[(i - 1) * (m + 1)] / c2;
      }
      for (int k = mn; k >= 1; --k)
        C[j * (m + 1) + k] = (c4 * C[j * (m + 1) + k] - k * C[j * (m + 1) + k - 1]) / c3;
      C[j * (m + 1)] = c4 * C[j * (m + 1)] / c3;
    }
    c1 = c2;
  }
  return C;
}

DerivStencils build_stencils(const RadialGrid& g, int width) {
  validate(g);
  const std::size_t N = g.size();
  if (N < static_cast<std::size_t>(width))
    throw error("build_stencils: grid has fewer nodes than stencil width");
  DerivStencils st;
  st.n = N;
  st.width = width;
  st.offset.resize(N);
  st.w1.resize(N * width);
  st.w2.resize(N * width);
  const std::size_t half = width / 2;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t o = (i > half) ? i - half : 0;
    o = std::min(o, N - width);
    st.offset[i] = o;
    auto C = fd_weights(g.nodes[i], g.nodes.data() + o, width, 2);
    for (int j = 0; j < width; ++j) {
      st.w1[i * width + j] = C[j * 3 + 1];
      st.w2[i * width + j] = C[j * 3 + 2];
    }
  }
  return st;
}

void apply_d1(const DerivStencils& st, const std::vector<double>& f, std::vector<double>& out) {
  kernels::apply_stencil(st.n, st.width, st.offset.data(), st.w1.data(), f.data(), out);
}

void apply_d2(const DerivStencils& st, const std::vector<double>& f, std::vector<double>& out) {
  kernels::apply_stencil(st.n, st.width, st.offset.data(), st.w2.data(), f.data(), out);
}

std::vector<double> cumulative_integral(const RadialGrid& g, const std::vector<double>& f) {
  const std::size_t N = g.size();
  if (f.size() != N) throw error("cumulative_integral: size mismatch");
  if (N < 6) throw error("cumulative_integral: need at least 6 nodes");
  std::vector<double> out(N, 0.0);
  double acc = 0.0;
  std::vector<double> A(36), b(6);
  for (std::size_t i = 0; i + 1 < N; ++i) {
    const std::size_t j0 = std::min(std::max<std::size_t>(i, 2) - 2, N - 6);
    const double h = g.nodes[i + 1] - g.nodes[i];
    // weights w with sum_j w_j xi_j^k = 1/(k+1), xi = (x - t_i)/h: integrates
    // the degree-5 interpolant exactly over [t_i, t_{i+1}].
    for (int j = 0; j < 6; ++j) {
      const double xi = (g.nodes[j0 + j] - g.nodes[i]) / h;
      double p = 1.0;
      for (int k = 0; k < 6; ++k) {
        A[k * 6 + j] = p;
        p *= xi;
      }
    }
    for (int k = 0; k < 6; ++k) b[k] = 1.0 / (k + 1);
    linalg::solve_dense(A, b, 6);
    double s = 0.0;
    for (int j = 0; j < 6; ++j) s += b[j] * f[j0 + j];
    acc += h * s;
    out[i + 1] = acc;
  }
  return out;
}

double interpolate(const RadialGrid& g, const std::vector<double>& f, double z, int stencil) {
  const std::size_t N = g.size();
  if (f.size() != N) throw error("interpolate: size mismatch");
  if (z < g.front() || z > g.back()) throw error("interpolate: extrapolation requested");
  auto it = std::lower_bound(g.nodes.begin(), g.nodes.end(), z);
  if (it != g.nodes.end() && *it == z) return f[it - g.nodes.begin()];  // exact at shared nodes
  std::size_t i = (it - g.nodes.begin());
  i = (i > 0) ? i - 1 : 0;
  const std::size_t w = std::min<std::size_t>(stencil, N);
  const std::size_t half = (w - 1) / 2;
  std::size_t o = (i > half) ? i - half : 0;
  o = std::min(o, N - w);
  auto C = fd_weights(z, g.nodes.data() + o, w, 0);
  double s = 0.0;
  for (std::size_t j = 0; j < w; ++j) s += C[j] * f[o + j];
  return s;
}

}  // namespace ahlab
