#include "sysid/regression.hpp"

#include "sysid/errors.hpp"

#include <string>

namespace sysid::est {

RegressionData build_regression_data(const Trajectory& traj, Index T, Index L, Index N1) {
  if (T < 1 || L < 1) throw InvalidArgument("build_regression_data: T and L must be >= 1");
  if (N1 <= T * L) {
    throw IndexUnderflow("build_regression_data: N1=" + std::to_string(N1) +
                         " must exceed T*L=" + std::to_string(T * L));
  }
  const Index N = traj.N();
  if (N1 > N) throw InvalidArgument("build_regression_data: N1 exceeds the trajectory length");

  const Index p = traj.u.cols();
  const Index m = traj.y.cols();
  const Index rows = N - N1 + 1;

  RegressionData d;
  d.N1 = N1;
  d.N = N;
  d.T = T;
  d.L = L;
  d.p = p;
  d.m = m;
  d.Ubar.resize(rows, T * p);
  d.K.resize(rows, L * m);
  d.Y.resize(rows, m);
  for (Index r = 0; r < rows; ++r) {
    const Index t = N1 + r;  // 1-indexed time; row t-1 in the trajectory
    for (Index j = 0; j < T; ++j) d.Ubar.block(r, j * p, 1, p) = traj.u.row(t - 1 - j);
    for (Index l = 1; l <= L; ++l) d.K.block(r, (l - 1) * m, 1, m) = traj.y.row(t - 1 - l * T);
    d.Y.row(r) = traj.y.row(t - 1);
  }
  return d;
}

RegressionData build_regression_data(const Trajectory& traj, Index T, Index L) {
  return build_regression_data(traj, T, L, T * L + 1);
}

}  // namespace sysid::est
