#include "lrsolve/random_instances.hpp"

#include <Eigen/QR>

#include <stdexcept>

namespace lrsolve {

DenseMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  DenseMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      m(i, j) = normal(rng);
    }
  }
  return m;
}

DenseMatrix random_low_rank(std::mt19937_64& rng, Index rows, Index cols, Index rank) {
  if (rank < 0 || rank > std::min(rows, cols)) {
    throw std::invalid_argument("rank must lie in [0, min(rows, cols)]");
  }
  if (rank == 0) {
    return DenseMatrix::Zero(rows, cols);
  }
  if (rank == std::min(rows, cols)) {
    return random_matrix(rng, rows, cols);
  }
  return random_matrix(rng, rows, rank) * random_matrix(rng, rank, cols);
}

DenseMatrix random_semi_orthogonal(std::mt19937_64& rng, Index rows, Index cols) {
  if (cols > rows) {
    throw std::invalid_argument("cols must not exceed rows");
  }
  DenseMatrix g = random_matrix(rng, rows, cols);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  return qr.householderQ() * DenseMatrix::Identity(rows, cols);
}

LrrInstance random_feasible_lrr(std::mt19937_64& rng, Index m, Index k, Index n,
                                Index dict_rank) {
  LrrInstance inst;
  inst.dict = random_low_rank(rng, m, k, dict_rank);
  inst.coeff = random_matrix(rng, k, n);
  inst.data = inst.dict * inst.coeff;
  return inst;
}

}  // namespace lrsolve
