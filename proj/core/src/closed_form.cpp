#include "lrsolve/closed_form.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace lrsolve {

const char* method_name(Method m) {
  switch (m) {
    case Method::theorem1:
      return "theorem1";
    case Method::corollary1:
      return "corollary1";
    case Method::corollary2:
      return "corollary2";
    case Method::lemma3:
      return "lemma3";
    case Method::azb:
      return "azb";
  }
  return "unknown";
}

namespace {

void require_same_rows(const DenseMatrix& x, const DenseMatrix& a) {
  if (x.rows() != a.rows()) {
    throw DimensionMismatch("X and A must have the same number of rows");
  }
}

Solution make_solution(DenseMatrix z, double residual, Method tag) {
  Solution s;
  s.objective = nuclear_norm(z);
  s.minimizer = std::move(z);
  s.feasibility_residual = residual;
  s.method_tag = tag;
  return s;
}

}  // namespace

Partition partition_v(const DenseMatrix& data, const DenseMatrix& dict,
                      const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(dict, "A");
  require_same_rows(data, dict);

  DenseMatrix concat(data.rows(), data.cols() + dict.cols());
  concat << data, dict;

  Partition p;
  p.concat = skinny_svd(concat, tol);
  p.vx = p.concat.v.topRows(data.cols());
  p.va = p.concat.v.bottomRows(dict.cols());
  return p;
}

Solution solve_lrr(const DenseMatrix& data, const DenseMatrix& dict,
                   const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(dict, "A");
  require_same_rows(data, dict);
  if (numerical_rank(dict, tol) == 0) {
    throw ZeroDictionary("dictionary A is numerically zero");
  }
  if (!in_span(data, dict, tol)) {
    throw Infeasible("X is not in the column space of A");
  }
  if (data.isZero(0.0)) {
    return make_solution(DenseMatrix::Zero(dict.cols(), data.cols()), 0.0,
                         Method::theorem1);
  }

  Partition p = partition_v(data, dict, tol);
  // va^T = U1 S1 V1^T; with X in span(A), va^T has full row rank, so
  // va (va^T va)^{-1} vx^T = V1 S1^{-1} U1^T vx^T.
  SkinnySVD f = skinny_svd(p.va.transpose(), tol);
  DenseMatrix z = f.v * (f.sigma.cwiseInverse().asDiagonal() *
                         (f.u.transpose() * p.vx.transpose()));

  const double residual = (dict * z - data).norm() / (1.0 + data.norm());
  return make_solution(std::move(z), residual, Method::theorem1);
}

Solution solve_lrr_full_row_rank(const DenseMatrix& data, const DenseMatrix& dict,
                                 const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(dict, "A");
  require_same_rows(data, dict);
  if (numerical_rank(dict, tol) != dict.rows()) {
    throw NotFullRowRank("A does not have full row rank");
  }

  // A A^T is positive definite here, so a direct symmetric solve is safe.
  Eigen::LDLT<DenseMatrix> gram(dict * dict.transpose());
  DenseMatrix z = dict.transpose() * gram.solve(data);

  const double residual = (dict * z - data).norm() / (1.0 + data.norm());
  return make_solution(std::move(z), residual, Method::corollary1);
}

Solution shape_interaction_matrix(const DenseMatrix& data, const Tolerances& tol) {
  require_finite(data, "X");
  if (numerical_rank(data, tol) == 0) {
    throw ZeroDictionary("X is numerically zero");
  }

  SkinnySVD f = skinny_svd(data, tol);
  DenseMatrix z = f.v * f.v.transpose();

  const double residual = (data * z - data).norm() / (1.0 + data.norm());
  return make_solution(std::move(z), residual, Method::corollary2);
}

Solution solve_semiorthogonal(const DenseMatrix& u, const DenseMatrix& v,
                              const DenseMatrix& m, const Tolerances& tol) {
  (void)tol;
  require_finite(u, "U");
  require_finite(v, "V");
  require_finite(m, "M");
  if (!is_semi_orthogonal(u)) {
    throw NotSemiOrthogonal("U does not have orthonormal columns");
  }
  if (!is_semi_orthogonal(v)) {
    throw NotSemiOrthogonal("V does not have orthonormal columns");
  }
  if (u.cols() != m.rows() || v.cols() != m.cols()) {
    throw DimensionMismatch("M must be cols(U) x cols(V)");
  }

  DenseMatrix z = u * m * v.transpose();
  const double residual = (u.transpose() * z * v - m).norm() / (1.0 + m.norm());
  return make_solution(std::move(z), residual, Method::lemma3);
}

Solution solve_azb(const DenseMatrix& data, const DenseMatrix& a,
                   const DenseMatrix& b, const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(a, "A");
  require_finite(b, "B");
  require_same_rows(data, a);
  if (data.cols() != b.cols()) {
    throw DimensionMismatch("X and B must have the same number of columns");
  }
  if (numerical_rank(a, tol) == 0 || numerical_rank(b, tol) == 0) {
    throw ZeroDictionary("A and B must both be numerically nonzero");
  }

  SkinnySVD fa = skinny_svd(a, tol);
  SkinnySVD fb = skinny_svd(b, tol);

  // Feasibility: X = A A+ X B+ B, i.e. X = ua ua^T X vb vb^T.
  DenseMatrix projected = fa.u * (fa.u.transpose() * data * fb.v) * fb.v.transpose();
  if ((data - projected).norm() > tol.feas_tol * (1.0 + data.norm())) {
    throw Infeasible("X is not in the span of A (.) B");
  }

  // Constraint rewritten as va^T Z ub = Sa^{-1} ua^T X vb Sb^{-1}, which the
  // semi-orthogonal solver minimizes with Z* = va M ub^T (= A+ X B+).
  DenseMatrix m = fa.sigma.cwiseInverse().asDiagonal() *
                  (fa.u.transpose() * data * fb.v) *
                  fb.sigma.cwiseInverse().asDiagonal();
  Solution inner = solve_semiorthogonal(fa.v, fb.u, m, tol);

  const double residual = (a * inner.minimizer * b - data).norm() / (1.0 + data.norm());
  return make_solution(std::move(inner.minimizer), residual, Method::azb);
}

}  // namespace lrsolve
