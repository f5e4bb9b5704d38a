#pragma once

#include "sysid/state_space.hpp"

namespace sysid::realize {

/// Block Hankel matrix built from G[1], G[2], ... (the feedthrough block G[0]
/// is excluded). Block (i, j), 0-indexed, equals G[i + j + 1] = C A^{i+j} B.
struct HankelPair {
  Matrix H;       // T1 m x (T2 + 1) p
  Matrix Hminus;  // first T2 block columns
  Matrix Hplus;   // last T2 block columns (shifted by one block)
  Index T1 = 0;
  Index T2 = 0;
};

/// Requires T1 + T2 + 1 <= G.T.
HankelPair hankel(const MarkovMatrix& G, Index T1, Index T2);

struct HoKalmanOptions {
  /// Minimum sigma_n / sigma_{n+1} of Hminus accepted as a clear order-n gap.
  double rank_gap_threshold = 10.0;
};

/// Balanced Ho-Kalman realization of order n from Markov parameters.
/// Returns a system with zero-width noise channels and x1 = 0.
StateSpace ho_kalman(const MarkovMatrix& G, Index T1, Index T2, Index n,
                     HoKalmanOptions opts = {});

/// Uses T1 = T2 = floor((T - 1) / 2).
StateSpace ho_kalman(const MarkovMatrix& G, Index n, HoKalmanOptions opts = {});

/// ||M_k(sys_hat) - M_k(sys_ref)||_F; invariant under state-space similarity.
double realization_error(const StateSpace& sys_hat, const StateSpace& sys_ref, Index k);

struct Minimality {
  bool controllable = false;
  bool observable = false;
  Index controllability_rank = 0;
  Index observability_rank = 0;
};

/// Numerical ranks of [B AB ... A^{n-1}B] and [C; CA; ...; CA^{n-1}].
Minimality minimality_check(const StateSpace& sys, double tol = 1e-10);

Matrix controllability_matrix(const Matrix& A, const Matrix& B, Index blocks);
Matrix observability_matrix(const Matrix& A, const Matrix& C, Index blocks);

}  // namespace sysid::realize
