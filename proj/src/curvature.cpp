#include "ahlab/curvature.hpp"

#include <cmath>

#include "ahlab/kernels.hpp"
#include "ahlab/stencil.hpp"

namespace ahlab {

namespace {
// 7-wide stencils (6th/5th formal order) when the grid allows, 5-wide on the
// smallest admissible grids; the contract floor is 5 nodes.
int pick_width(const RadialGrid& g) {
  if (g.size() < 5) throw error("curvature: grid too coarse (need >= 5 nodes)");
  return g.size() >= 7 ? 7 : 5;
}
}  // namespace

CurvatureField scalar_curvature(const MetricProfile& m) {
  validate(m);
  const std::size_t N = m.grid.size();
  const int n = m.dim.n;
  const auto st = build_stencils(m.grid, pick_width(m.grid));
  const auto tab = sinh_table(m.grid);
  std::vector<double> b(N);
  for (std::size_t i = 0; i < N; ++i) b[i] = m.a[i] - 1.0;
  std::vector<double> bt, btt;
  apply_d1(st, b, bt);
  apply_d2(st, b, btt);
  CurvatureField f;
  f.grid = m.grid;
  f.order = 5.0;
  kernels::curvature_metric(N, n, tab.sh.data(), tab.ch.data(), b.data(), bt.data(), btt.data(),
                            f.Rplus);
  f.R.resize(N);
  const double nn1 = static_cast<double>(n) * (n - 1);
  for (std::size_t i = 0; i < N; ++i) f.R[i] = f.Rplus[i] - nn1;
  return f;
}

CurvatureField scalar_curvature(const GeneralProfile& m) {
  validate(m);
  const std::size_t N = m.grid.size();
  const int n = m.dim.n;
  const auto st = build_stencils(m.grid, pick_width(m.grid));
  const auto tab = sinh_table(m.grid);
  std::vector<double> BP(N), BQ(N);
  for (std::size_t i = 0; i < N; ++i) {
    BP[i] = m.P[i] - 1.0;
    BQ[i] = m.Q[i] - 1.0;
  }
  std::vector<double> BPt, BQt, BQtt;
  apply_d1(st, BP, BPt);
  apply_d1(st, BQ, BQt);
  apply_d2(st, BQ, BQtt);
  CurvatureField f;
  f.grid = m.grid;
  f.order = 5.0;
  kernels::curvature_general(N, n, tab.sh.data(), tab.ch.data(), BP.data(), BQ.data(), BPt.data(),
                             BQt.data(), BQtt.data(), f.Rplus);
  f.R.resize(N);
  const double nn1 = static_cast<double>(n) * (n - 1);
  for (std::size_t i = 0; i < N; ++i) f.R[i] = f.Rplus[i] - nn1;
  return f;
}

std::vector<double> laplace_beltrami(const MetricProfile& m, const std::vector<double>& f) {
  validate(m);
  const std::size_t N = m.grid.size();
  if (f.size() != N) throw error("laplace_beltrami: grid mismatch");
  const int n = m.dim.n;
  const auto st = build_stencils(m.grid, pick_width(m.grid));
  const auto tab = sinh_table(m.grid);
  std::vector<double> b(N);
  for (std::size_t i = 0; i < N; ++i) b[i] = m.a[i] - 1.0;
  std::vector<double> bt, ft, ftt;
  apply_d1(st, b, bt);
  apply_d1(st, f, ft);
  apply_d2(st, f, ftt);
  std::vector<double> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double s = tab.sh[i], c = tab.ch[i];
    const double s2 = s * s;
    // Delta f = s^2 f'' + [ (n-1)/2 s^2 a'/a + (2-n) s c ] f'
    out[i] = s2 * ftt[i] + (0.5 * (n - 1) * s2 * (bt[i] / m.a[i]) + (2.0 - n) * s * c) * ft[i];
  }
  return out;
}

std::vector<double> laplace_beltrami(const GeneralProfile& m, const std::vector<double>& f) {
  validate(m);
  const std::size_t N = m.grid.size();
  if (f.size() != N) throw error("laplace_beltrami: grid mismatch");
  const int n = m.dim.n;
  const auto st = build_stencils(m.grid, pick_width(m.grid));
  const auto tab = sinh_table(m.grid);
  std::vector<double> BP(N), BQ(N);
  for (std::size_t i = 0; i < N; ++i) {
    BP[i] = m.P[i] - 1.0;
    BQ[i] = m.Q[i] - 1.0;
  }
  std::vector<double> BPt, BQt, ft, ftt;
  apply_d1(st, BP, BPt);
  apply_d1(st, BQ, BQt);
  apply_d1(st, f, ft);
  apply_d2(st, f, ftt);
  std::vector<double> out(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double s = tab.sh[i], c = tab.ch[i];
    const double drift =
        0.5 * (n - 1) * (BQt[i] / m.Q[i]) - 0.5 * (BPt[i] / m.P[i]) + (2.0 - n) * (c / s);
    out[i] = (s * s / m.P[i]) * (ftt[i] + drift * ft[i]);
  }
  return out;
}

CurvatureField conformal_scalar_curvature(const MetricProfile& m, const std::vector<double>& u) {
  validate(m);
  const std::size_t N = m.grid.size();
  if (u.size() != N) throw error("conformal_scalar_curvature: grid mismatch");
  for (double v : u)
    if (!(v > 0.0)) throw error("conformal_scalar_curvature: u must be positive");
  const int n = m.dim.n;
  const CurvatureField base = scalar_curvature(m);
  const auto lap = laplace_beltrami(m, u);
  const double e1 = -4.0 / (n - 2);
  const double e2 = -(n + 2.0) / (n - 2);
  const double cn = 4.0 * (n - 1) / (n - 2);
  CurvatureField f;
  f.grid = m.grid;
  f.order = base.order;
  f.R.resize(N);
  f.Rplus.resize(N);
  const double nn1 = static_cast<double>(n) * (n - 1);
  for (std::size_t i = 0; i < N; ++i) {
    f.R[i] = std::pow(u[i], e1) * base.R[i] - cn * std::pow(u[i], e2) * lap[i];
    f.Rplus[i] = f.R[i] + nn1;
  }
  return f;
}

double neg_laplacian_prefix(const MetricProfile& m, const std::vector<double>& u, double tol) {
  const auto lap = laplace_beltrami(m, u);
  for (std::size_t i = 0; i < lap.size(); ++i)
    if (!(-lap[i] >= -tol)) return (i == 0) ? 0.0 : m.grid.nodes[i - 1];
  return m.grid.back();
}

}  // namespace ahlab
