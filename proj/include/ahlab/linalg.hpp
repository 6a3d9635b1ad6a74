#pragma once
#include <cstddef>
#include <vector>

namespace ahlab::linalg {

// Dense square solve A x = b in place (LAPACK dgesv); A is row-major n x n.
void solve_dense(std::vector<double>& A, std::vector<double>& b, std::size_t n);

// Banded solve for a matrix with kl sub- and ku super-diagonals (dgbsv).
// Caller fills entries via the set() callback pattern: band storage is
// handled internally; rows outside the band must be zero.
struct BandedMatrix {
  std::size_t n;
  std::size_t kl, ku;
  std::vector<double> ab;  // LAPACK band storage, column-major, ldab = 2*kl+ku+1

  BandedMatrix(std::size_t n_, std::size_t kl_, std::size_t ku_);
  double& at(std::size_t i, std::size_t j);  // valid iff |i-j| within band
  void solve(std::vector<double>& rhs);      // overwrites rhs with solution
};

// Singular values (descending) and right singular vectors of a row-major
// m x n matrix (dgesvd). vt is n x n row-major.
void svd(const std::vector<double>& A, std::size_t m, std::size_t n, std::vector<double>& sigma,
         std::vector<double>& vt);

// Least-squares solution of min ||A x - b||_2 for a full-rank row-major
// m x n matrix with m >= n (dgels). Returns the n solution coefficients.
std::vector<double> lstsq(const std::vector<double>& A, std::size_t m, std::size_t n,
                          const std::vector<double>& b);

}  // namespace ahlab::linalg
