#ifndef LRSOLVE_ORACLE_HPP_
#define LRSOLVE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "lrsolve/linalg.hpp"

namespace lrsolve {

struct AdmmParams {
  double rho = 1.0;        // initial penalty
  double rho_scale = 1.05; // adaptive growth factor (>= 1)
  int max_iter = 2000;
  double stop_tol = 1e-9;  // on relative primal residual and iterate change
};

struct OracleReport {
  DenseMatrix iterate;
  std::vector<double> objective_trace;  // ||Z_t||_* per iteration
  std::vector<double> residual_trace;   // relative primal residual per iteration
  bool converged = false;
  int iterations = 0;
  double primal_residual = 0.0;
  std::optional<double> distance_to_reference;
};

// Proximal operator of the nuclear norm: soft-thresholds the singular values
// of M by tau. Unique minimizer of tau ||Z||_* + 1/2 ||Z - M||_F^2.
DenseMatrix svt_shrink(const DenseMatrix& m, double tau);

// ADMM on the split  min ||J||_*  s.t.  J = Z, X = A Z,  with an SVT J-update
// and a cached symmetric solve for Z. Independent of the closed-form path;
// used to verify it. Non-convergence is reported, not thrown.
OracleReport admm_solve_lrr(const DenseMatrix& data, const DenseMatrix& dict,
                            const AdmmParams& params = {},
                            const DenseMatrix* reference = nullptr,
                            const Tolerances& tol = {});

// Same scheme for the two-sided constraint X = A Z B; the Z-update solves
// Z + A^T A Z B B^T = RHS through cached eigendecompositions of the Gramians.
OracleReport admm_solve_azb(const DenseMatrix& data, const DenseMatrix& a,
                            const DenseMatrix& b, const AdmmParams& params = {},
                            const DenseMatrix* reference = nullptr,
                            const Tolerances& tol = {});

// Unit-Frobenius N with A N = 0, drawn from a seeded combination of an
// orthonormal null-space basis of A. Empty when A has full column rank
// (the uniqueness probe is vacuous).
std::optional<DenseMatrix> feasible_perturbation_lrr(const DenseMatrix& dict,
                                                     Index z_rows, Index z_cols,
                                                     std::uint64_t seed,
                                                     const Tolerances& tol = {});

// Unit-Frobenius H with U^T H V = 0, built from the complement blocks of
// [U, U_perp] and [V, V_perp]. Empty when both complements are empty.
std::optional<DenseMatrix> feasible_perturbation_semiorthogonal(
    const DenseMatrix& u, const DenseMatrix& v, Index z_rows, Index z_cols,
    std::uint64_t seed);

// ||M||_* == ||U M V^T||_* within 1e-8 relative, for semi-orthogonal U, V.
bool check_lemma1(const DenseMatrix& m, const DenseMatrix& u, const DenseMatrix& v);

struct Lemma2Result {
  bool holds = false;
  double margin = 0.0;  // ||[[B,C],[D,F]]||_* - ||B||_*
};

// Block nuclear-norm inequality: the stacked block norm never drops below
// ||B||_*, with equality only at C = D = F = 0.
Lemma2Result check_lemma2(const DenseMatrix& b, const DenseMatrix& c,
                          const DenseMatrix& d, const DenseMatrix& f);

}  // namespace lrsolve

#endif  // LRSOLVE_ORACLE_HPP_
