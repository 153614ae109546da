#ifndef LRSOLVE_CLOSED_FORM_HPP_
#define LRSOLVE_CLOSED_FORM_HPP_

#include <string>

#include "lrsolve/linalg.hpp"

namespace lrsolve {

enum class Method { theorem1, corollary1, corollary2, lemma3, azb };

const char* method_name(Method m);

// Output of every closed-form solver: the minimizer Z*, its nuclear norm,
// and the constraint violation normalized by 1 + ||X||_F.
struct Solution {
  DenseMatrix minimizer;
  double objective = 0.0;
  double feasibility_residual = 0.0;
  Method method_tag = Method::theorem1;
};

// Row partition of V from the skinny SVD of [X, A]: X = U S vx^T and
// A = U S va^T. va has full column rank whenever X lies in span(A).
struct Partition {
  SkinnySVD concat;  // factorization of the column-concatenation [X, A]
  DenseMatrix vx;    // first cols(X) rows of V
  DenseMatrix va;    // remaining cols(A) rows of V
};

Partition partition_v(const DenseMatrix& data, const DenseMatrix& dict,
                      const Tolerances& tol = {});

// min ||Z||_*  s.t.  X = A Z
//
// Unique minimizer Z* = va (va^T va)^{-1} vx^T, evaluated through the SVD of
// va^T (va^T = U1 S1 V1^T, Z* = V1 S1^{-1} U1^T vx^T) so the condition number
// is not squared. Requires A != 0 and X in span(A); infeasible instances are
// rejected, not projected.
Solution solve_lrr(const DenseMatrix& data, const DenseMatrix& dict,
                   const Tolerances& tol = {});

// Fast path for full-row-rank A: Z* = A^T (A A^T)^{-1} X.
Solution solve_lrr_full_row_rank(const DenseMatrix& data, const DenseMatrix& dict,
                                 const Tolerances& tol = {});

// min ||Z||_*  s.t.  X = X Z
//
// Unique minimizer is the Shape Interaction Matrix vx vx^T from the skinny
// SVD of X: a symmetric idempotent projector with trace equal to rank(X).
Solution shape_interaction_matrix(const DenseMatrix& data, const Tolerances& tol = {});

// min ||Z||_*  s.t.  U^T Z V = M   (U, V with orthonormal columns)
//
// Unique minimizer Z* = U M V^T; its nuclear norm equals ||M||_*.
Solution solve_semiorthogonal(const DenseMatrix& u, const DenseMatrix& v,
                              const DenseMatrix& m, const Tolerances& tol = {});

// min ||Z||_*  s.t.  X = A Z B
//
// Reduces to the semi-orthogonal problem via the skinny SVDs of A and B:
// the constraint becomes va^T Z ub = Sa^{-1} ua^T X vb Sb^{-1}, whose unique
// minimizer works out to A+ X B+. Feasibility (X = A A+ X B+ B) is checked.
Solution solve_azb(const DenseMatrix& data, const DenseMatrix& a,
                   const DenseMatrix& b, const Tolerances& tol = {});

}  // namespace lrsolve

#endif  // LRSOLVE_CLOSED_FORM_HPP_
