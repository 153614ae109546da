#include "lrsolve/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <random>
#include <stdexcept>

namespace lrsolve {

namespace {

constexpr double kRhoMax = 1e10;

DenseMatrix shrink_with_norm(const DenseMatrix& m, double tau, double* nn) {
  Eigen::BDCSVD<DenseMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXd s = (svd.singularValues().array() - tau).max(0.0);
  if (nn != nullptr) {
    *nn = s.sum();
  }
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

double values_only_nuclear_norm(const DenseMatrix& m) {
  return Eigen::BDCSVD<DenseMatrix>(m).singularValues().sum();
}

DenseMatrix seeded_gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      g(i, j) = normal(rng);
    }
  }
  return g;
}

}  // namespace

DenseMatrix svt_shrink(const DenseMatrix& m, double tau) {
  require_finite(m, "matrix");
  if (!(tau > 0.0)) {
    throw std::invalid_argument("tau must be positive");
  }
  return shrink_with_norm(m, tau, nullptr);
}

OracleReport admm_solve_lrr(const DenseMatrix& data, const DenseMatrix& dict,
                            const AdmmParams& params, const DenseMatrix* reference,
                            const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(dict, "A");
  if (data.rows() != dict.rows()) {
    throw DimensionMismatch("X and A must have the same number of rows");
  }
  if (numerical_rank(dict, tol) == 0) {
    throw ZeroDictionary("dictionary A is numerically zero");
  }
  if (!in_span(data, dict, tol)) {
    throw Infeasible("X is not in the column space of A");
  }

  const Index k = dict.cols();
  const Index n = data.cols();
  const double x_scale = 1.0 + data.norm();

  DenseMatrix z = DenseMatrix::Zero(k, n);
  DenseMatrix j = z;
  DenseMatrix y1 = DenseMatrix::Zero(k, n);
  DenseMatrix y2 = DenseMatrix::Zero(data.rows(), n);

  // The Z-step normal matrix (I + A^T A) does not depend on rho; factor once.
  Eigen::LDLT<DenseMatrix> normal(DenseMatrix::Identity(k, k) +
                                  dict.transpose() * dict);

  OracleReport report;
  report.objective_trace.reserve(params.max_iter);
  report.residual_trace.reserve(params.max_iter);

  double rho = params.rho;
  for (int it = 1; it <= params.max_iter; ++it) {
    j = shrink_with_norm(z + y1 / rho, 1.0 / rho, nullptr);

    DenseMatrix z_prev = z;
    z = normal.solve((j - y1 / rho) +
                     dict.transpose() * (data + y2 / rho));

    y1 += rho * (z - j);
    y2 += rho * (data - dict * z);

    const double primal = (data - dict * z).norm() / x_scale;
    const double change = (z - z_prev).norm() / (1.0 + z_prev.norm());

    report.objective_trace.push_back(values_only_nuclear_norm(z));
    report.residual_trace.push_back(primal);
    report.iterations = it;
    report.primal_residual = primal;

    if (primal <= params.stop_tol && change <= params.stop_tol) {
      report.converged = true;
      break;
    }
    rho = std::min(rho * params.rho_scale, kRhoMax);
  }

  report.iterate = std::move(z);
  if (reference != nullptr) {
    report.distance_to_reference = relative_distance(report.iterate, *reference);
  }
  return report;
}

OracleReport admm_solve_azb(const DenseMatrix& data, const DenseMatrix& a,
                            const DenseMatrix& b, const AdmmParams& params,
                            const DenseMatrix* reference, const Tolerances& tol) {
  require_finite(data, "X");
  require_finite(a, "A");
  require_finite(b, "B");
  if (data.rows() != a.rows()) {
    throw DimensionMismatch("X and A must have the same number of rows");
  }
  if (data.cols() != b.cols()) {
    throw DimensionMismatch("X and B must have the same number of columns");
  }
  if (numerical_rank(a, tol) == 0 || numerical_rank(b, tol) == 0) {
    throw ZeroDictionary("A and B must both be numerically nonzero");
  }
  {
    SkinnySVD fa = skinny_svd(a, tol);
    SkinnySVD fb = skinny_svd(b, tol);
    DenseMatrix projected =
        fa.u * (fa.u.transpose() * data * fb.v) * fb.v.transpose();
    if ((data - projected).norm() > tol.feas_tol * (1.0 + data.norm())) {
      throw Infeasible("X is not in the span of A (.) B");
    }
  }

  const Index p = a.cols();
  const Index q = b.rows();
  const double x_scale = 1.0 + data.norm();

  // Z-step solves Z + A^T A Z B B^T = RHS. Diagonalize both Gramians once:
  // with A^T A = P Da P^T and B B^T = Q Db Q^T the solution is
  // Z = P ((P^T RHS Q) ./ (1 + Da Db^T)) Q^T.
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig_a(a.transpose() * a);
  Eigen::SelfAdjointEigenSolver<DenseMatrix> eig_b(b * b.transpose());
  const DenseMatrix& pbasis = eig_a.eigenvectors();
  const DenseMatrix& qbasis = eig_b.eigenvectors();
  DenseMatrix denom =
      (eig_a.eigenvalues() * eig_b.eigenvalues().transpose()).array() + 1.0;

  DenseMatrix z = DenseMatrix::Zero(p, q);
  DenseMatrix j = z;
  DenseMatrix y1 = DenseMatrix::Zero(p, q);
  DenseMatrix y2 = DenseMatrix::Zero(data.rows(), data.cols());

  OracleReport report;
  report.objective_trace.reserve(params.max_iter);
  report.residual_trace.reserve(params.max_iter);

  double rho = params.rho;
  for (int it = 1; it <= params.max_iter; ++it) {
    j = shrink_with_norm(z + y1 / rho, 1.0 / rho, nullptr);

    DenseMatrix z_prev = z;
    DenseMatrix rhs = (j - y1 / rho) +
                      a.transpose() * (data + y2 / rho) * b.transpose();
    DenseMatrix w = pbasis.transpose() * rhs * qbasis;
    w.array() /= denom.array();
    z = pbasis * w * qbasis.transpose();

    y1 += rho * (z - j);
    y2 += rho * (data - a * z * b);

    const double primal = (data - a * z * b).norm() / x_scale;
    const double change = (z - z_prev).norm() / (1.0 + z_prev.norm());

    report.objective_trace.push_back(values_only_nuclear_norm(z));
    report.residual_trace.push_back(primal);
    report.iterations = it;
    report.primal_residual = primal;

    if (primal <= params.stop_tol && change <= params.stop_tol) {
      report.converged = true;
      break;
    }
    rho = std::min(rho * params.rho_scale, kRhoMax);
  }

  report.iterate = std::move(z);
  if (reference != nullptr) {
    report.distance_to_reference = relative_distance(report.iterate, *reference);
  }
  return report;
}

std::optional<DenseMatrix> feasible_perturbation_lrr(const DenseMatrix& dict,
                                                     Index z_rows, Index z_cols,
                                                     std::uint64_t seed,
                                                     const Tolerances& tol) {
  require_finite(dict, "A");
  if (z_rows != dict.cols() || z_cols < 1) {
    throw DimensionMismatch("Z shape must be cols(A) x n with n >= 1");
  }

  SkinnySVD f = skinny_svd(dict, tol);
  if (f.rank == dict.cols()) {
    return std::nullopt;  // full column rank: trivial null space
  }
  DenseMatrix basis = orthogonal_complement(f.v, tol);  // null(A) basis

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    DenseMatrix n = basis * seeded_gaussian(rng, basis.cols(), z_cols);
    const double norm = n.norm();
    if (norm > 1e-12) {
      return DenseMatrix(n / norm);
    }
  }
  throw std::runtime_error("failed to draw a nonzero null-space perturbation");
}

std::optional<DenseMatrix> feasible_perturbation_semiorthogonal(
    const DenseMatrix& u, const DenseMatrix& v, Index z_rows, Index z_cols,
    std::uint64_t seed) {
  require_finite(u, "U");
  require_finite(v, "V");
  if (!is_semi_orthogonal(u)) {
    throw NotSemiOrthogonal("U does not have orthonormal columns");
  }
  if (!is_semi_orthogonal(v)) {
    throw NotSemiOrthogonal("V does not have orthonormal columns");
  }
  if (z_rows != u.rows() || z_cols != v.rows()) {
    throw DimensionMismatch("Z shape must be rows(U) x rows(V)");
  }

  DenseMatrix u_perp = orthogonal_complement(u);
  DenseMatrix v_perp = orthogonal_complement(v);
  if (u_perp.cols() == 0 && v_perp.cols() == 0) {
    return std::nullopt;  // U, V square orthogonal: constraint fixes Z
  }

  // H = U G12 V_perp^T + U_perp G21 V^T + U_perp G22 V_perp^T annihilates
  // U^T H V for any blocks G12, G21, G22.
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    DenseMatrix h = DenseMatrix::Zero(z_rows, z_cols);
    if (v_perp.cols() > 0) {
      h += u * seeded_gaussian(rng, u.cols(), v_perp.cols()) * v_perp.transpose();
    }
    if (u_perp.cols() > 0) {
      h += u_perp * seeded_gaussian(rng, u_perp.cols(), v.cols()) * v.transpose();
    }
    if (u_perp.cols() > 0 && v_perp.cols() > 0) {
      h += u_perp * seeded_gaussian(rng, u_perp.cols(), v_perp.cols()) *
           v_perp.transpose();
    }
    const double norm = h.norm();
    if (norm > 1e-12) {
      return DenseMatrix(h / norm);
    }
  }
  throw std::runtime_error("failed to draw a nonzero feasible perturbation");
}

bool check_lemma1(const DenseMatrix& m, const DenseMatrix& u, const DenseMatrix& v) {
  require_finite(m, "M");
  require_finite(u, "U");
  require_finite(v, "V");
  if (!is_semi_orthogonal(u) || !is_semi_orthogonal(v)) {
    throw NotSemiOrthogonal("U and V must have orthonormal columns");
  }
  if (u.cols() != m.rows() || v.cols() != m.cols()) {
    throw DimensionMismatch("M must be cols(U) x cols(V)");
  }
  const double lhs = nuclear_norm(m);
  const double rhs = nuclear_norm(u * m * v.transpose());
  return std::abs(lhs - rhs) <= 1e-8 * (1.0 + lhs);
}

Lemma2Result check_lemma2(const DenseMatrix& b, const DenseMatrix& c,
                          const DenseMatrix& d, const DenseMatrix& f) {
  require_finite(b, "B");
  require_finite(c, "C");
  require_finite(d, "D");
  require_finite(f, "F");
  if (b.rows() != c.rows() || d.rows() != f.rows() || b.cols() != d.cols() ||
      c.cols() != f.cols()) {
    throw DimensionMismatch("blocks do not compose into [[B,C],[D,F]]");
  }

  DenseMatrix block(b.rows() + d.rows(), b.cols() + c.cols());
  block << b, c, d, f;

  Lemma2Result result;
  result.margin = nuclear_norm(block) - nuclear_norm(b);
  result.holds = result.margin >= -1e-10;
  return result;
}

}  // namespace lrsolve
