#pragma once
#include <cstddef>
#include <string>
#include <vector>

namespace ahlab::kernels {

// Hot inner loops (stencil application and the curvature combines) exist as a
// scalar reference plus SIMD variants selected once at runtime. Variants are
// written to be bitwise-identical to the reference: elementwise IEEE ops in
// the same order, no FMA contraction, scalar fallback at array edges.

// out[i] = sum_j w[i*width+j] * f[offset[i]+j]
void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, std::vector<double>& out);

// R + n(n-1) for the normal-form profile, from b = a-1 and its derivatives.
// Every term carries a factor of b/bt/btt, so b == 0 gives exactly 0.
void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, std::vector<double>& out);

// R + n(n-1) for a general radial metric from BP = p*sinh^2 - 1, BQ = q*sinh^2 - 1.
void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, std::vector<double>& out);

// Name of the selected variant: "avx2", "neon" or "scalar".
const std::string& active_variant();

namespace scalar {
void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out);
void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out);
void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out);
void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out);
void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void apply_stencil(std::size_t n, int width, const std::size_t* offset, const double* w,
                   const double* f, double* out);
void curvature_metric(std::size_t n, int dim, const double* sh, const double* ch, const double* b,
                      const double* bt, const double* btt, double* out);
void curvature_general(std::size_t n, int dim, const double* sh, const double* ch,
                       const double* BP, const double* BQ, const double* BPt, const double* BQt,
                       const double* BQtt, double* out);
}  // namespace neon
#endif

}  // namespace ahlab::kernels
