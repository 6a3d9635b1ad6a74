#include <arm_neon.h>

#include "ahlab/kernels.hpp"

// NEON variants (2 lanes). Same contract as the AVX2 translation unit:
// elementwise IEEE ops in scalar order, no fused multiply-add (this TU builds
// with -ffp-contract=off), scalar fallback at edges and remainders.

namespace ahlab::kernels::neon {

void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    if (offset[i + 1] != offset[i] + 1) {
      scalar::apply_stencil(2, width, offset + i, w + i * width, f, out + i);
      continue;
    }
    const double* fi = f + offset[i];
    const double* wi = w + i * width;
    float64x2_t wv = vsetq_lane_f64(wi[width], vdupq_n_f64(wi[0]), 1);
    float64x2_t acc = vmulq_f64(wv, vld1q_f64(fi));
    for (int j = 1; j < width; ++j) {
      wv = vsetq_lane_f64(wi[width + j], vdupq_n_f64(wi[j]), 1);
      acc = vaddq_f64(acc, vmulq_f64(wv, vld1q_f64(fi + j)));
    }
    vst1q_f64(out + i, acc);
  }
  if (i < n) scalar::apply_stencil(n - i, width, offset + i, w + i * width, f, out + i);
}

void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t half = vdupq_n_f64(0.5);
  const float64x2_t quarter = vdupq_n_f64(0.25);
  const float64x2_t k1 = vdupq_n_f64(static_cast<double>(dim - 1));
  const float64x2_t k2 = vdupq_n_f64(static_cast<double>(dim - 1) * static_cast<double>(dim - 2));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t bv = vld1q_f64(b + i);
    const float64x2_t a = vaddq_f64(one, bv);
    const float64x2_t s = vld1q_f64(sh + i);
    const float64x2_t c = vld1q_f64(ch + i);
    const float64x2_t s2 = vmulq_f64(s, s);
    const float64x2_t cs = vmulq_f64(c, s);
    const float64x2_t A = vdivq_f64(vld1q_f64(bt + i), a);
    const float64x2_t A2 = vmulq_f64(A, A);
    const float64x2_t t1 =
        vsubq_f64(vsubq_f64(vdivq_f64(vmulq_f64(s2, vld1q_f64(btt + i)), a),
                            vmulq_f64(vmulq_f64(half, s2), A2)),
                  vmulq_f64(cs, A));
    const float64x2_t t2 =
        vsubq_f64(vsubq_f64(vmulq_f64(cs, A), vdivq_f64(vmulq_f64(s2, bv), a)),
                  vmulq_f64(vmulq_f64(quarter, s2), A2));
    vst1q_f64(out + i, vsubq_f64(vmulq_f64(k2, t2), vmulq_f64(k1, t1)));
  }
  if (i < n) scalar::curvature_metric(n - i, dim, sh + i, ch + i, b + i, bt + i, btt + i, out + i);
}

void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t two = vdupq_n_f64(2.0);
  const float64x2_t half = vdupq_n_f64(0.5);
  const float64x2_t quarter = vdupq_n_f64(0.25);
  const float64x2_t k1 = vdupq_n_f64(static_cast<double>(dim - 1));
  const float64x2_t k2 = vdupq_n_f64(static_cast<double>(dim - 1) * static_cast<double>(dim - 2));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t bp = vld1q_f64(BP + i);
    const float64x2_t bq = vld1q_f64(BQ + i);
    const float64x2_t P = vaddq_f64(one, bp);
    const float64x2_t Q = vaddq_f64(one, bq);
    const float64x2_t s = vld1q_f64(sh + i);
    const float64x2_t c = vld1q_f64(ch + i);
    const float64x2_t s2 = vmulq_f64(s, s);
    const float64x2_t cs = vmulq_f64(c, s);
    const float64x2_t W = vdivq_f64(vld1q_f64(BQt + i), Q);
    const float64x2_t V = vdivq_f64(vld1q_f64(BPt + i), P);
    const float64x2_t W2 = vmulq_f64(W, W);
    const float64x2_t Wp = vsubq_f64(vdivq_f64(vld1q_f64(BQtt + i), Q), W2);
    float64x2_t t1 = vsubq_f64(vmulq_f64(two, bp), vmulq_f64(s2, Wp));
    t1 = vsubq_f64(t1, vmulq_f64(vmulq_f64(half, s2), W2));
    t1 = vaddq_f64(t1, vmulq_f64(cs, W));
    t1 = vsubq_f64(t1, vmulq_f64(cs, V));
    t1 = vaddq_f64(t1, vmulq_f64(vmulq_f64(vmulq_f64(half, s2), V), W));
    float64x2_t t2 = vaddq_f64(
        vdivq_f64(bp, P), vdivq_f64(vmulq_f64(s2, vsubq_f64(bp, bq)), vmulq_f64(P, Q)));
    t2 = vsubq_f64(t2, vdivq_f64(vsubq_f64(vmulq_f64(vmulq_f64(quarter, s2), W2),
                                           vmulq_f64(cs, W)),
                                 P));
    vst1q_f64(out + i, vaddq_f64(vdivq_f64(vmulq_f64(k1, t1), P), vmulq_f64(k2, t2)));
  }
  if (i < n)
    scalar::curvature_general(n - i, dim, sh + i, ch + i, BP + i, BQ + i, BPt + i, BQt + i,
                              BQtt + i, out + i);
}

}  // namespace ahlab::kernels::neon
