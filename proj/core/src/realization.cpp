#include "sysid/realization.hpp"

#include "sysid/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <string>

namespace sysid::realize {

HankelPair hankel(const MarkovMatrix& G, Index T1, Index T2) {
  if (T1 < 1 || T2 < 1) throw InvalidArgument("hankel: T1 and T2 must be >= 1");
  if (T1 + T2 + 1 > G.T) {
    throw InsufficientMarkovLength("hankel: need T1 + T2 + 1 <= T (T=" + std::to_string(G.T) +
                                   ")");
  }
  const Index m = G.m;
  const Index p = G.p;
  HankelPair h;
  h.T1 = T1;
  h.T2 = T2;
  h.H.resize(T1 * m, (T2 + 1) * p);
  for (Index i = 0; i < T1; ++i) {
    for (Index j = 0; j <= T2; ++j) h.H.block(i * m, j * p, m, p) = G.block(i + j + 1);
  }
  h.Hminus = h.H.leftCols(T2 * p);
  h.Hplus = h.H.rightCols(T2 * p);
  return h;
}

StateSpace ho_kalman(const MarkovMatrix& G, Index T1, Index T2, Index n, HoKalmanOptions opts) {
  if (n < 1) throw InvalidArgument("ho_kalman: model order must be >= 1");
  const Index m = G.m;
  const Index p = G.p;
  if (n > std::min(T1 * m, T2 * p)) {
    throw InvalidArgument("ho_kalman: order n exceeds min(T1 m, T2 p)");
  }
  const HankelPair h = hankel(G, T1, T2);

  Eigen::JacobiSVD<Matrix> svd(h.Hminus, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  const double sn = s(n - 1);
  const double scale = s(0);
  const double next = (n < s.size()) ? s(n) : 0.0;
  const bool degenerate = !(sn > 0.0) || sn <= 1e-14 * scale;
  const bool gap_ok = next == 0.0 ? true : (sn / next >= opts.rank_gap_threshold);
  if (degenerate || !gap_ok) {
    throw RankGap("ho_kalman: sigma_n=" + std::to_string(sn) +
                  " sigma_{n+1}=" + std::to_string(next) + " does not show a clear order-" +
                  std::to_string(n) + " gap");
  }

  const Vector sqrt_s = s.head(n).cwiseSqrt();
  const Vector inv_sqrt_s = sqrt_s.cwiseInverse();
  const Matrix U = svd.matrixU().leftCols(n);
  const Matrix V = svd.matrixV().leftCols(n);

  const Matrix O = U * sqrt_s.asDiagonal();                   // T1 m x n
  const Matrix Ctrb = sqrt_s.asDiagonal() * V.transpose();    // n x T2 p
  const Matrix O_pinv = inv_sqrt_s.asDiagonal() * U.transpose();
  const Matrix Ctrb_pinv = V * inv_sqrt_s.asDiagonal();

  Matrix A = O_pinv * h.Hplus * Ctrb_pinv;
  Matrix B = Ctrb.leftCols(p);
  Matrix C = O.topRows(m);
  Matrix D = G.block(0);
  return StateSpace(std::move(A), std::move(B), std::move(C), std::move(D));
}

StateSpace ho_kalman(const MarkovMatrix& G, Index n, HoKalmanOptions opts) {
  const Index half = (G.T - 1) / 2;
  return ho_kalman(G, half, half, n, opts);
}

double realization_error(const StateSpace& sys_hat, const StateSpace& sys_ref, Index k) {
  if (sys_hat.m() != sys_ref.m() || sys_hat.p() != sys_ref.p()) {
    throw DimensionMismatch("realization_error: (m, p) must match");
  }
  return (markov_params(sys_hat, k).G - markov_params(sys_ref, k).G).norm();
}

Matrix controllability_matrix(const Matrix& A, const Matrix& B, Index blocks) {
  const Index p = B.cols();
  Matrix out(A.rows(), blocks * p);
  Matrix AkB = B;
  for (Index j = 0; j < blocks; ++j) {
    out.middleCols(j * p, p) = AkB;
    AkB = A * AkB;
  }
  return out;
}

Matrix observability_matrix(const Matrix& A, const Matrix& C, Index blocks) {
  const Index m = C.rows();
  Matrix out(blocks * m, A.cols());
  Matrix CAk = C;
  for (Index j = 0; j < blocks; ++j) {
    out.middleRows(j * m, m) = CAk;
    CAk = CAk * A;
  }
  return out;
}

Minimality minimality_check(const StateSpace& sys, double tol) {
  const Index n = sys.n();
  Minimality out;
  out.controllability_rank = numerical_rank(controllability_matrix(sys.A(), sys.B(), n), tol);
  out.observability_rank = numerical_rank(observability_matrix(sys.A(), sys.C(), n), tol);
  out.controllable = out.controllability_rank == n;
  out.observable = out.observability_rank == n;
  return out;
}

}  // namespace sysid::realize
