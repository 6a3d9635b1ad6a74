#include "ahlab/kernels.hpp"

namespace ahlab::kernels {

namespace scalar {

void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double* wi = w + i * width;
    const double* fi = f + offset[i];
    double acc = wi[0] * fi[0];
    for (int j = 1; j < width; ++j) acc += wi[j] * fi[j];
    out[i] = acc;
  }
}

void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out) {
  // Association is fixed (left-to-right, no unary minus on computed values) so
  // the SIMD variants can reproduce it operation for operation.
  const double k1 = static_cast<double>(dim - 1);
  const double k2 = static_cast<double>(dim - 1) * static_cast<double>(dim - 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 1.0 + b[i];
    const double s2 = sh[i] * sh[i];
    const double cs = ch[i] * sh[i];
    const double A = bt[i] / a;
    const double A2 = A * A;
    const double t1 = s2 * btt[i] / a - (0.5 * s2) * A2 - cs * A;
    const double t2 = cs * A - s2 * b[i] / a - (0.25 * s2) * A2;
    out[i] = k2 * t2 - k1 * t1;
  }
}

void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out) {
  const double k1 = static_cast<double>(dim - 1);
  const double k2 = static_cast<double>(dim - 1) * static_cast<double>(dim - 2);
  for (std::size_t i = 0; i < n; ++i) {
    const double P = 1.0 + BP[i];
    const double Q = 1.0 + BQ[i];
    const double s2 = sh[i] * sh[i];
    const double cs = ch[i] * sh[i];
    const double W = BQt[i] / Q;
    const double V = BPt[i] / P;
    const double W2 = W * W;
    const double Wp = BQtt[i] / Q - W2;
    const double t1 =
        2.0 * BP[i] - s2 * Wp - (0.5 * s2) * W2 + cs * W - cs * V + ((0.5 * s2) * V) * W;
    const double t2 =
        BP[i] / P + s2 * (BP[i] - BQ[i]) / (P * Q) - ((0.25 * s2) * W2 - cs * W) / P;
    out[i] = k1 * t1 / P + k2 * t2;
  }
}

}  // namespace scalar

namespace {

struct Dispatch {
  decltype(&scalar::apply_stencil) apply_stencil = &scalar::apply_stencil;
  decltype(&scalar::curvature_metric) curvature_metric = &scalar::curvature_metric;
  decltype(&scalar::curvature_general) curvature_general = &scalar::curvature_general;
  std::string name = "scalar";

  Dispatch() {
#if defined(AHLAB_HAVE_AVX2_TU)
    if (__builtin_cpu_supports("avx2")) {
      apply_stencil = &avx2::apply_stencil;
      curvature_metric = &avx2::curvature_metric;
      curvature_general = &avx2::curvature_general;
      name = "avx2";
    }
#elif defined(AHLAB_HAVE_NEON_TU)
    apply_stencil = &neon::apply_stencil;
    curvature_metric = &neon::curvature_metric;
    curvature_general = &neon::curvature_general;
    name = "neon";
#endif
  }
};

const Dispatch& dispatch() {
  static const Dispatch d;
  return d;
}

}  // namespace

const std::string& active_variant() { return dispatch().name; }

void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, std::vector<double>& out) {
  out.resize(n);
  dispatch().apply_stencil(n, width, offset, w, f, out.data());
}

void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, std::vector<double>& out) {
  out.resize(n);
  dispatch().curvature_metric(n, dim, sh, ch, b, bt, btt, out.data());
}

void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, std::vector<double>& out) {
  out.resize(n);
  dispatch().curvature_general(n, dim, sh, ch, BP, BQ, BPt, BQt, BQtt, out.data());
}

}  // namespace ahlab::kernels
