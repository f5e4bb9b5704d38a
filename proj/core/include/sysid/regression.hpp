#pragma once

#include "sysid/simulate.hpp"

namespace sysid::est {

/// Stacked regression problem over times t = N1..N (1-indexed):
///   Ubar row: [u_t | u_{t-1} | ... | u_{t-T+1}]
///   K row:    [y_{t-T} | y_{t-2T} | ... | y_{t-LT}]
///   Y row:    y_t
struct RegressionData {
  Matrix Ubar;
  Matrix K;
  Matrix Y;
  Index N1 = 0;
  Index N = 0;
  Index T = 0;
  Index L = 0;
  Index p = 0;
  Index m = 0;

  /// Number of rows, N - N1 + 1.
  Index rows() const { return Y.rows(); }
};

/// Requires N1 > T L so every feature index is at least 1.
RegressionData build_regression_data(const Trajectory& traj, Index T, Index L, Index N1);

/// Default start index T L + 1.
RegressionData build_regression_data(const Trajectory& traj, Index T, Index L);

}  // namespace sysid::est
