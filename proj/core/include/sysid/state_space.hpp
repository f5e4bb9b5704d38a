#pragma once

#include "sysid/filter.hpp"
#include "sysid/linalg.hpp"

namespace sysid {

/// Discrete-time LTI system
///
///   x_{t+1} = A x_t + B u_t + Bw w_t
///   y_t     = C x_t + D u_t + Dz z_t
///
/// with initial state x1. Bw and Dz may have zero columns, in which case the
/// corresponding noise channel is absent. No stability requirement is imposed.
class StateSpace {
 public:
  /// Empty Bw/Dz/x1 default to n x 0, m x 0 and the zero vector.
  StateSpace(Matrix A, Matrix B, Matrix C, Matrix D, Matrix Bw = Matrix(),
             Matrix Dz = Matrix(), Vector x1 = Vector());

  const Matrix& A() const { return A_; }
  const Matrix& B() const { return B_; }
  const Matrix& C() const { return C_; }
  const Matrix& D() const { return D_; }
  const Matrix& Bw() const { return Bw_; }
  const Matrix& Dz() const { return Dz_; }
  const Vector& x1() const { return x1_; }

  Index n() const { return A_.rows(); }
  Index p() const { return B_.cols(); }
  Index m() const { return C_.rows(); }
  Index dw() const { return Bw_.cols(); }
  Index dz() const { return Dz_.cols(); }

  StateSpace with_C(Matrix C) const;
  StateSpace with_D(Matrix D) const;
  StateSpace with_x1(Vector x1) const;

 private:
  Matrix A_, B_, C_, D_, Bw_, Dz_;
  Vector x1_;
};

/// Which input drives a response: u through B (with feedthrough D), w through
/// Bw, or the initial state x1 as a single impulse column. Only the input
/// channel has a feedthrough term.
enum class Channel { Input, ProcessNoise, InitialState };

/// Length-T block response function G = [D | CB | CAB | ... | C A^{T-2} B].
struct MarkovMatrix {
  Matrix G;
  Index T = 0;
  Index p = 0;  // columns per block
  Index m = 0;

  Matrix block(Index j) const { return G.middleCols(j * p, p); }
};

MarkovMatrix markov_params(const StateSpace& sys, Index T, Channel channel = Channel::Input);

/// Builds a MarkovMatrix from an m x (T p) matrix.
MarkovMatrix make_markov(Matrix G, Index p);

double spectral_radius(const Matrix& A);

/// Operator norm of the first k Markov blocks.
double mk_opnorm(const StateSpace& sys, Index k, Channel channel = Channel::Input);

struct StabilityOptions {
  double rho_margin = 1e-9;
};

/// Limit of mk_opnorm as k grows (the H2-op norm). Requires rho(A) < 1.
double h2op_norm(const StateSpace& sys, Channel channel = Channel::Input, double tol = 1e-14,
                 StabilityOptions opts = {});

/// Max of ||C (zI - A)^{-1} B + D|| over a uniform grid on the unit circle.
/// This is a lower bound on the H-infinity norm. Requires rho(A) < 1.
double hinf_norm(const StateSpace& sys, Channel channel = Channel::Input,
                 Index grid_points = 4096, StabilityOptions opts = {});

/// Observation matrix left after filtering with phi at spacing T:
/// C A^{LT} - sum_l Psi_l C A^{(L-l)T}.
Matrix c_phi(const StateSpace& sys, const Filter& phi, Index T);

/// (A, B, C_phi, 0), (A, Bw, C_phi, 0) and (A, x1, C_phi, 0).
StateSpace g_phi(const StateSpace& sys, const Filter& phi, Index T);
StateSpace f_phi(const StateSpace& sys, const Filter& phi, Index T);
StateSpace h_phi(const StateSpace& sys, const Filter& phi, Index T);

}  // namespace sysid
