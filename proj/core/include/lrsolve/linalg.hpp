#ifndef LRSOLVE_LINALG_HPP_
#define LRSOLVE_LINALG_HPP_

#include <Eigen/Dense>
#include <limits>

#include "lrsolve/errors.hpp"

namespace lrsolve {

using DenseMatrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Numeric policy shared by every operation. The rank cutoff follows the
// backward-stable convention sigma_i > rank_tol_factor * max(m, n) * sigma_max.
struct Tolerances {
  double rank_tol_factor = std::numeric_limits<double>::epsilon();
  double feas_tol = 1e-8;
  double verify_tol = 1e-6;

  double rank_cutoff(Index rows, Index cols, double sigma_max) const {
    return rank_tol_factor * static_cast<double>(std::max(rows, cols)) * sigma_max;
  }
};

// Rank-truncated factorization M = U * diag(sigma) * V^T with semi-orthogonal
// U (m x r) and V (n x r). sigma is descending and every entry is above the
// rank cutoff; a zero matrix yields rank 0 and zero-column factors.
struct SkinnySVD {
  DenseMatrix u;
  Eigen::VectorXd sigma;
  DenseMatrix v;
  Index rank = 0;

  DenseMatrix reconstruct() const { return u * sigma.asDiagonal() * v.transpose(); }
};

SkinnySVD skinny_svd(const DenseMatrix& m, const Tolerances& tol = {});

// Sum of all singular values, including those below the rank cutoff.
double nuclear_norm(const DenseMatrix& m);

Index numerical_rank(const DenseMatrix& m, const Tolerances& tol = {});

// Moore-Penrose inverse V * diag(1/sigma) * U^T from the skinny SVD.
DenseMatrix pseudo_inverse(const DenseMatrix& m, const Tolerances& tol = {});

// True iff ||X - A A+ X||_F <= feas_tol * (1 + ||X||_F), i.e. every column of
// X lies in the column space of A up to the feasibility tolerance.
bool in_span(const DenseMatrix& x, const DenseMatrix& a, const Tolerances& tol = {});

// Householder-QR completion of a semi-orthogonal block: returns B_perp with
// [B, B_perp] orthogonal. A square orthogonal B yields a zero-column result.
DenseMatrix orthogonal_complement(const DenseMatrix& b, const Tolerances& tol = {});

// --- validation helpers shared across modules ---

void require_finite(const DenseMatrix& m, const char* name);

// ||Q^T Q - I||_F; semi-orthogonality checks compare it to tol * max(1, cols).
double semi_orthogonality_residual(const DenseMatrix& q);
bool is_semi_orthogonal(const DenseMatrix& q, double tol = 1e-10);

// ||value - reference||_F / (1 + ||reference||_F)
double relative_distance(const DenseMatrix& value, const DenseMatrix& reference);

}  // namespace lrsolve

#endif  // LRSOLVE_LINALG_HPP_
