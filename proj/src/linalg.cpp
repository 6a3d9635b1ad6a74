#include "ahlab/linalg.hpp"

#include <lapacke.h>

#include "ahlab/grid.hpp"

namespace ahlab::linalg {

void solve_dense(std::vector<double>& A, std::vector<double>& b, std::size_t n) {
  std::vector<lapack_int> ipiv(n);
  lapack_int info = LAPACKE_dgesv(LAPACK_ROW_MAJOR, static_cast<lapack_int>(n), 1, A.data(),
                                  static_cast<lapack_int>(n), ipiv.data(), b.data(), 1);
  if (info != 0) throw error("solve_dense: dgesv info=" + std::to_string(info));
}

BandedMatrix::BandedMatrix(std::size_t n_, std::size_t kl_, std::size_t ku_)
    : n(n_), kl(kl_), ku(ku_), ab((2 * kl_ + ku_ + 1) * n_, 0.0) {}

double& BandedMatrix::at(std::size_t i, std::size_t j) {
  // dgbsv band storage: AB(kl+ku+i-j, j) column-major with ldab = 2kl+ku+1.
  const std::size_t ldab = 2 * kl + ku + 1;
  if (j > i + ku || i > j + kl) throw error("BandedMatrix: index outside band");
  return ab[j * ldab + (kl + ku + i - j)];
}

void BandedMatrix::solve(std::vector<double>& rhs) {
  if (rhs.size() != n) throw error("BandedMatrix::solve: size mismatch");
  std::vector<lapack_int> ipiv(n);
  const lapack_int ldab = static_cast<lapack_int>(2 * kl + ku + 1);
  lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, static_cast<lapack_int>(n),
                                  static_cast<lapack_int>(kl), static_cast<lapack_int>(ku), 1,
                                  ab.data(), ldab, ipiv.data(), rhs.data(),
                                  static_cast<lapack_int>(n));
  if (info != 0) throw error("BandedMatrix::solve: dgbsv info=" + std::to_string(info));
}

void svd(const std::vector<double>& A, std::size_t m, std::size_t n, std::vector<double>& sigma,
         std::vector<double>& vt) {
  std::vector<double> work = A;  // dgesvd destroys its input
  sigma.assign(n < m ? n : m, 0.0);
  vt.assign(n * n, 0.0);
  std::vector<double> superb(sigma.size());
  lapack_int info = LAPACKE_dgesvd(LAPACK_ROW_MAJOR, 'N', 'A', static_cast<lapack_int>(m),
                                   static_cast<lapack_int>(n), work.data(),
                                   static_cast<lapack_int>(n), sigma.data(), nullptr,
                                   static_cast<lapack_int>(m), vt.data(),
                                   static_cast<lapack_int>(n), superb.data());
  if (info != 0) throw error("svd: dgesvd info=" + std::to_string(info));
}

std::vector<double> lstsq(const std::vector<double>& A, std::size_t m, std::size_t n,
                          const std::vector<double>& b) {
  if (m < n) throw error("lstsq: underdetermined system");
  if (A.size() != m * n || b.size() != m) throw error("lstsq: size mismatch");
  std::vector<double> work = A;  // dgels destroys its input
  std::vector<double> rhs = b;
  lapack_int info = LAPACKE_dgels(LAPACK_ROW_MAJOR, 'N', static_cast<lapack_int>(m),
                                  static_cast<lapack_int>(n), 1, work.data(),
                                  static_cast<lapack_int>(n), rhs.data(), 1);
  if (info != 0) throw error("lstsq: dgels info=" + std::to_string(info));
  rhs.resize(n);
  return rhs;
}

}  // namespace ahlab::linalg
