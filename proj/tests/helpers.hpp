#pragma once

#include "sysid/state_space.hpp"

#include <Eigen/LU>

#include <random>

namespace testing {

using sysid::Index;
using sysid::Matrix;
using sysid::StateSpace;
using sysid::Vector;

inline Matrix gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix M(rows, cols);
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) M(r, c) = normal(rng);
  }
  return M;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Index uniform_int(std::mt19937_64& rng, Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

/// Random system with spectral radius rho and Gaussian B, C, D.
inline StateSpace random_system(std::mt19937_64& rng, Index n, Index p, Index m, double rho) {
  Matrix A = gaussian(rng, n, n);
  A *= rho / sysid::spectral_radius(A);
  return StateSpace(A, gaussian(rng, n, p), gaussian(rng, m, n), gaussian(rng, m, p));
}

inline double max_abs(const Matrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

}  // namespace testing
