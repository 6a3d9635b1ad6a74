#include <doctest.h>

#include <cmath>
#include <vector>

#include "ahlab/grid.hpp"
#include "ahlab/stencil.hpp"

using namespace ahlab;

TEST_CASE("geometric grid: endpoints, monotonicity, grading") {
  RadialGrid g = make_geometric_grid(1e-4, 2.0, 101);
  CHECK(g.size() == 101);
  CHECK(g.front() == 1e-4);
  CHECK(g.back() == 2.0);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  // spacing proportional to t: constant ratio
  const double r0 = g.nodes[1] / g.nodes[0];
  const double r1 = g.nodes[60] / g.nodes[59];
  CHECK(r1 == doctest::Approx(r0).epsilon(1e-12));
  CHECK_THROWS_AS(make_geometric_grid(0.0, 2.0, 10), error);
  CHECK_THROWS_AS(make_geometric_grid(1.0, 0.5, 10), error);
}

TEST_CASE("refine keeps coarse nodes bitwise and halves log spacing") {
  RadialGrid g = make_geometric_grid(1e-3, 1.0, 41);
  RadialGrid f = refine(g);
  CHECK(f.size() == 2 * g.size() - 1);
  CHECK(f.refinement_level == g.refinement_level + 1);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(f.nodes[2 * i] == g.nodes[i]);
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    CHECK(f.nodes[2 * i + 1] ==
          doctest::Approx(std::sqrt(g.nodes[i] * g.nodes[i + 1])).epsilon(1e-15));
}

TEST_CASE("window_indices clamps to the window and enforces a minimum count") {
  RadialGrid g = make_geometric_grid(1e-2, 1.0, 21);
  auto [i0, i1] = window_indices(g, 0.1, 0.5, 2);
  CHECK(g.nodes[i0] >= 0.1);
  CHECK(g.nodes[i1] <= 0.5);
  CHECK(i0 > 0);
  CHECK(g.nodes[i0 - 1] < 0.1);
  CHECK_THROWS_AS(window_indices(g, 0.1, 0.100001, 2), error);
}

TEST_CASE("fd_weights reproduces the classic uniform 3-point stencils") {
  const double nodes[3] = {-1.0, 0.0, 1.0};
  // node-major: w[j * 3 + m] multiplies f(nodes[j]) in the m-th derivative
  std::vector<double> w = fd_weights(0.0, nodes, 3, 2);
  // zeroth derivative: delta at the center
  CHECK(w[0 * 3 + 0] == doctest::Approx(0.0));
  CHECK(w[1 * 3 + 0] == doctest::Approx(1.0));
  CHECK(w[2 * 3 + 0] == doctest::Approx(0.0));
  // first derivative: the central difference
  CHECK(w[0 * 3 + 1] == doctest::Approx(-0.5));
  CHECK(w[1 * 3 + 1] == doctest::Approx(0.0));
  CHECK(w[2 * 3 + 1] == doctest::Approx(0.5));
  // second derivative: the classic [1, -2, 1]
  CHECK(w[0 * 3 + 2] == doctest::Approx(1.0));
  CHECK(w[1 * 3 + 2] == doctest::Approx(-2.0));
  CHECK(w[2 * 3 + 2] == doctest::Approx(1.0));
}

TEST_CASE("width-7 stencils are exact on degree-6 polynomials") {
  RadialGrid g = make_geometric_grid(0.1, 2.0, 80);
  DerivStencils st = build_stencils(g);
  std::vector<double> f(g.size()), d1(g.size()), d2(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.nodes[i];
    f[i] = std::pow(t, 6) - 2.0 * std::pow(t, 3) + t;
  }
  apply_d1(st, f, d1);
  apply_d2(st, f, d2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double t = g.nodes[i];
    CHECK(d1[i] == doctest::Approx(6.0 * std::pow(t, 5) - 6.0 * t * t + 1.0).epsilon(1e-9));
    CHECK(d2[i] == doctest::Approx(30.0 * std::pow(t, 4) - 12.0 * t).epsilon(1e-8));
  }
}

TEST_CASE("stencil convergence order on a non-polynomial profile") {
  // polynomials are exact for these stencils, so the order must be measured
  // on something with an infinite Taylor tail
  auto max_d2_err = [](const RadialGrid& g) {
    DerivStencils st = build_stencils(g);
    std::vector<double> f(g.size()), d2(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::sin(3.0 * g.nodes[i]);
    apply_d2(st, f, d2);
    double err = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      err = std::max(err, std::abs(d2[i] + 9.0 * std::sin(3.0 * g.nodes[i])));
    return err;
  };
  RadialGrid g1 = make_geometric_grid(0.05, 2.0, 101);
  RadialGrid g2 = refine(g1);
  RadialGrid g3 = refine(g2);
  const double e1 = max_d2_err(g1), e2 = max_d2_err(g2), e3 = max_d2_err(g3);
  CHECK(std::log2(e1 / e2) >= 3.5);
  CHECK(std::log2(e2 / e3) >= 3.5);
}

TEST_CASE("cumulative integral of cos matches sin to quadrature accuracy") {
  RadialGrid g = make_geometric_grid(1e-4, 2.0, 1401);
  std::vector<double> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::cos(g.nodes[i]);
  std::vector<double> F = cumulative_integral(g, f);
  CHECK(F[0] == 0.0);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(F[i] == doctest::Approx(std::sin(g.nodes[i]) - std::sin(g.front())).epsilon(1e-11));
}

TEST_CASE("interpolate is exact at nodes and accurate between them") {
  RadialGrid g = make_geometric_grid(0.1, 1.0, 25);
  std::vector<double> f(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) f[i] = std::exp(g.nodes[i]);
  CHECK(interpolate(g, f, g.nodes[7]) == f[7]);  // bitwise at nodes
  const double z = 0.5 * (g.nodes[10] + g.nodes[11]);
  CHECK(interpolate(g, f, z) == doctest::Approx(std::exp(z)).epsilon(1e-9));
}
