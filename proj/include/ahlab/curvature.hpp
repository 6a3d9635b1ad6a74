#pragma once
#include <vector>

#include "ahlab/geometry.hpp"

namespace ahlab {

// Scalar curvature samples. Rplus = R + n(n-1) is carried alongside R because
// it is the quantity every downstream consumer needs and it is computed
// without forming R first: the reduced curvature formula makes every term
// proportional to (profile - hyperbolic), so exact hyperbolic regions give an
// exact zero instead of cancellation residue at the sinh^{-2} scale.
struct CurvatureField {
  RadialGrid grid;
  std::vector<double> R;      // scalar curvature
  std::vector<double> Rplus;  // R + n(n-1)
  double order;               // formal stencil order of the second derivative
};

CurvatureField scalar_curvature(const MetricProfile& m);
CurvatureField scalar_curvature(const GeneralProfile& m);

// Radial Laplace-Beltrami operator applied to samples of f(t).
std::vector<double> laplace_beltrami(const MetricProfile& m, const std::vector<double>& f);
std::vector<double> laplace_beltrami(const GeneralProfile& m, const std::vector<double>& f);

// Scalar curvature of u^{4/(n-2)} g via the conformal transformation law
// R_new = u^{-4/(n-2)} R - (4(n-1)/(n-2)) u^{-(n+2)/(n-2)} Delta u.
// Deliberately a second, independent path from scalar_curvature applied to
// the multiplied metric; the two are cross-checked in tests.
CurvatureField conformal_scalar_curvature(const MetricProfile& m, const std::vector<double>& u);

// Largest t0 such that -Delta u >= -tol on all nodes in (0, t0]; 0 when the
// first node already violates. Reported per run ("sufficiently small
// neighborhood of infinity" is measured, not assumed).
double neg_laplacian_prefix(const MetricProfile& m, const std::vector<double>& u, double tol);

}  // namespace ahlab
