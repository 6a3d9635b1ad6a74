#include <immintrin.h>

#include "ahlab/kernels.hpp"

// AVX2 variants. Bitwise parity with the scalar reference is part of the
// contract: every arithmetic step is elementwise, executed in the same order,
// with mul/add kept separate (this TU builds with -ffp-contract=off and the
// FMA intrinsics are never used). Edges and remainders delegate to scalar.

namespace ahlab::kernels::avx2 {

void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    // vectorizes only where stencils slide uniformly (clamped ends do not)
    if (offset[i + 1] != offset[i] + 1 || offset[i + 2] != offset[i] + 2 ||
        offset[i + 3] != offset[i] + 3) {
      scalar::apply_stencil(4, width, offset + i, w + i * width, f, out + i);
      continue;
    }
    const double* fi = f + offset[i];
    const double* wi = w + i * width;
    __m256d wv = _mm256_set_pd(wi[3 * width], wi[2 * width], wi[width], wi[0]);
    __m256d acc = _mm256_mul_pd(wv, _mm256_loadu_pd(fi));
    for (int j = 1; j < width; ++j) {
      wv = _mm256_set_pd(wi[3 * width + j], wi[2 * width + j], wi[width + j], wi[j]);
      acc = _mm256_add_pd(acc, _mm256_mul_pd(wv, _mm256_loadu_pd(fi + j)));
    }
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) scalar::apply_stencil(n - i, width, offset + i, w + i * width, f, out + i);
}

void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d k1 = _mm256_set1_pd(static_cast<double>(dim - 1));
  const __m256d k2 = _mm256_set1_pd(static_cast<double>(dim - 1) * static_cast<double>(dim - 2));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d bv = _mm256_loadu_pd(b + i);
    const __m256d a = _mm256_add_pd(one, bv);
    const __m256d s = _mm256_loadu_pd(sh + i);
    const __m256d c = _mm256_loadu_pd(ch + i);
    const __m256d s2 = _mm256_mul_pd(s, s);
    const __m256d cs = _mm256_mul_pd(c, s);
    const __m256d A = _mm256_div_pd(_mm256_loadu_pd(bt + i), a);
    const __m256d A2 = _mm256_mul_pd(A, A);
    // t1 = s2*btt/a - (0.5*s2)*A2 - cs*A, associated exactly as in scalar
    const __m256d t1 = _mm256_sub_pd(
        _mm256_sub_pd(_mm256_div_pd(_mm256_mul_pd(s2, _mm256_loadu_pd(btt + i)), a),
                      _mm256_mul_pd(_mm256_mul_pd(half, s2), A2)),
        _mm256_mul_pd(cs, A));
    // t2 = cs*A - s2*b/a - (0.25*s2)*A2
    const __m256d t2 =
        _mm256_sub_pd(_mm256_sub_pd(_mm256_mul_pd(cs, A),
                                    _mm256_div_pd(_mm256_mul_pd(s2, bv), a)),
                      _mm256_mul_pd(_mm256_mul_pd(quarter, s2), A2));
    _mm256_storeu_pd(out + i, _mm256_sub_pd(_mm256_mul_pd(k2, t2), _mm256_mul_pd(k1, t1)));
  }
  if (i < n) scalar::curvature_metric(n - i, dim, sh + i, ch + i, b + i, bt + i, btt + i, out + i);
}

void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d quarter = _mm256_set1_pd(0.25);
  const __m256d k1 = _mm256_set1_pd(static_cast<double>(dim - 1));
  const __m256d k2 = _mm256_set1_pd(static_cast<double>(dim - 1) * static_cast<double>(dim - 2));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d bp = _mm256_loadu_pd(BP + i);
    const __m256d bq = _mm256_loadu_pd(BQ + i);
    const __m256d P = _mm256_add_pd(one, bp);
    const __m256d Q = _mm256_add_pd(one, bq);
    const __m256d s = _mm256_loadu_pd(sh + i);
    const __m256d c = _mm256_loadu_pd(ch + i);
    const __m256d s2 = _mm256_mul_pd(s, s);
    const __m256d cs = _mm256_mul_pd(c, s);
    const __m256d W = _mm256_div_pd(_mm256_loadu_pd(BQt + i), Q);
    const __m256d V = _mm256_div_pd(_mm256_loadu_pd(BPt + i), P);
    const __m256d W2 = _mm256_mul_pd(W, W);
    const __m256d Wp = _mm256_sub_pd(_mm256_div_pd(_mm256_loadu_pd(BQtt + i), Q), W2);
    // t1 = 2*BP - s2*Wp - (0.5*s2)*W2 + cs*W - cs*V + ((0.5*s2)*V)*W
    __m256d t1 = _mm256_sub_pd(_mm256_mul_pd(two, bp), _mm256_mul_pd(s2, Wp));
    t1 = _mm256_sub_pd(t1, _mm256_mul_pd(_mm256_mul_pd(half, s2), W2));
    t1 = _mm256_add_pd(t1, _mm256_mul_pd(cs, W));
    t1 = _mm256_sub_pd(t1, _mm256_mul_pd(cs, V));
    t1 = _mm256_add_pd(t1, _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(half, s2), V), W));
    // t2 = BP/P + s2*(BP-BQ)/(P*Q) - ((0.25*s2)*W2 - cs*W)/P
    __m256d t2 = _mm256_add_pd(
        _mm256_div_pd(bp, P),
        _mm256_div_pd(_mm256_mul_pd(s2, _mm256_sub_pd(bp, bq)), _mm256_mul_pd(P, Q)));
    t2 = _mm256_sub_pd(t2, _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(_mm256_mul_pd(quarter, s2),
                                                                     W2),
                                                       _mm256_mul_pd(cs, W)),
                                         P));
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_div_pd(_mm256_mul_pd(k1, t1), P),
                                            _mm256_mul_pd(k2, t2)));
  }
  if (i < n)
    scalar::curvature_general(n - i, dim, sh + i, ch + i, BP + i, BQ + i, BPt + i, BQt + i,
                              BQtt + i, out + i);
}

}  // namespace ahlab::kernels::avx2
