#include "lrsolve/linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace lrsolve {

void require_finite(const DenseMatrix& m, const char* name) {
  if (!m.allFinite()) {
    throw NonFiniteInput(std::string(name) + " contains NaN or Inf entries");
  }
}

namespace {

void require_nonempty(const DenseMatrix& m, const char* name) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw DimensionMismatch(std::string(name) + " must have at least one row and one column");
  }
}

// Deterministic sign policy: the largest-magnitude entry of each U column is
// made positive, with the paired V column flipped alongside.
void fix_signs(DenseMatrix& u, DenseMatrix& v) {
  for (Index j = 0; j < u.cols(); ++j) {
    Index imax = 0;
    u.col(j).cwiseAbs().maxCoeff(&imax);
    if (u(imax, j) < 0.0) {
      u.col(j) = -u.col(j);
      v.col(j) = -v.col(j);
    }
  }
}

}  // namespace

SkinnySVD skinny_svd(const DenseMatrix& m, const Tolerances& tol) {
  require_nonempty(m, "matrix");
  require_finite(m, "matrix");

  Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = tol.rank_cutoff(m.rows(), m.cols(), sigma_max);

  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) {
    ++r;
  }

  SkinnySVD out;
  out.u = svd.matrixU().leftCols(r);
  out.sigma = sv.head(r);
  out.v = svd.matrixV().leftCols(r);
  out.rank = r;
  fix_signs(out.u, out.v);
  return out;
}

double nuclear_norm(const DenseMatrix& m) {
  require_nonempty(m, "matrix");
  require_finite(m, "matrix");
  Eigen::BDCSVD<DenseMatrix> svd(m);
  return svd.singularValues().sum();
}

Index numerical_rank(const DenseMatrix& m, const Tolerances& tol) {
  require_nonempty(m, "matrix");
  require_finite(m, "matrix");
  Eigen::BDCSVD<DenseMatrix> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff = tol.rank_cutoff(m.rows(), m.cols(), sigma_max);
  Index r = 0;
  while (r < sv.size() && sv(r) > cutoff && sv(r) > 0.0) {
    ++r;
  }
  return r;
}

DenseMatrix pseudo_inverse(const DenseMatrix& m, const Tolerances& tol) {
  SkinnySVD f = skinny_svd(m, tol);
  if (f.rank == 0) {
    return DenseMatrix::Zero(m.cols(), m.rows());
  }
  return f.v * f.sigma.cwiseInverse().asDiagonal() * f.u.transpose();
}

bool in_span(const DenseMatrix& x, const DenseMatrix& a, const Tolerances& tol) {
  require_finite(x, "X");
  require_finite(a, "A");
  if (x.rows() != a.rows()) {
    throw DimensionMismatch("X and A must have the same number of rows");
  }
  // A A+ equals U U^T exactly for the skinny factors, so project through U.
  SkinnySVD f = skinny_svd(a, tol);
  const double resid = (x - f.u * (f.u.transpose() * x)).norm();
  return resid <= tol.feas_tol * (1.0 + x.norm());
}

DenseMatrix orthogonal_complement(const DenseMatrix& b, const Tolerances& tol) {
  (void)tol;
  require_finite(b, "B");
  const Index m = b.rows();
  const Index k = b.cols();
  if (m == 0) {
    throw DimensionMismatch("B must have at least one row");
  }
  if (k == 0) {
    return DenseMatrix::Identity(m, m);
  }
  if (!is_semi_orthogonal(b)) {
    throw NotSemiOrthogonal("B does not have orthonormal columns");
  }
  if (k == m) {
    return DenseMatrix(m, 0);
  }
  Eigen::HouseholderQR<DenseMatrix> qr(b);
  DenseMatrix q = qr.householderQ();
  // The first k columns of Q span col(B); the rest complete the basis.
  return q.rightCols(m - k);
}

double semi_orthogonality_residual(const DenseMatrix& q) {
  const Index k = q.cols();
  return (q.transpose() * q - DenseMatrix::Identity(k, k)).norm();
}

bool is_semi_orthogonal(const DenseMatrix& q, double tol) {
  if (q.cols() > q.rows()) {
    return false;
  }
  return semi_orthogonality_residual(q) <= tol * std::max<double>(1.0, static_cast<double>(q.cols()));
}

double relative_distance(const DenseMatrix& value, const DenseMatrix& reference) {
  return (value - reference).norm() / (1.0 + reference.norm());
}

}  // namespace lrsolve
