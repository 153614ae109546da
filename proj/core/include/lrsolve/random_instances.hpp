#ifndef LRSOLVE_RANDOM_INSTANCES_HPP_
#define LRSOLVE_RANDOM_INSTANCES_HPP_

#include <random>

#include "lrsolve/linalg.hpp"

namespace lrsolve {

// Seeded generators used by the bench command, the verification sweeps, and
// the test suites. All draws come from the caller's engine so runs reproduce.

DenseMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols);

// Gaussian factor product with the requested rank (exact in exact arithmetic).
DenseMatrix random_low_rank(std::mt19937_64& rng, Index rows, Index cols, Index rank);

// Thin Q factor of a Gaussian draw: rows x cols with orthonormal columns.
DenseMatrix random_semi_orthogonal(std::mt19937_64& rng, Index rows, Index cols);

struct LrrInstance {
  DenseMatrix dict;   // A, m x k
  DenseMatrix coeff;  // Z0, k x n, a known feasible point
  DenseMatrix data;   // X = A * Z0
};

// Feasible instance of X = A Z with dictionary rank dict_rank (<= min(m, k)).
LrrInstance random_feasible_lrr(std::mt19937_64& rng, Index m, Index k, Index n,
                                Index dict_rank);

}  // namespace lrsolve

#endif  // LRSOLVE_RANDOM_INSTANCES_HPP_
