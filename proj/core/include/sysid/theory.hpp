#pragma once

#include "sysid/filter.hpp"
#include "sysid/jordan.hpp"
#include "sysid/polynomial.hpp"
#include "sysid/state_space.hpp"

#include <optional>

namespace sysid::analysis {

/// Which transfer-function norm a complexity term targets.
enum class NormKind { H2, Hinf };

/// sqrt(1 + 2/pi) for H2, 1 for Hinf.
double norm_constant(NormKind q);

/// ||Y - K phi||_op + mu ||phi||_op with phi = ridge(Y on K, mu).
double opt_hat(const Matrix& Y, const Matrix& K, double mu);

struct OptBracket {
  double lower = 0.0;
  double upper = 0.0;
  Filter phi_star;
};

/// Bracket around min_phi ||Delta - K phi^T||_op + mu ||phi||_op obtained
/// from the ridge solution phi*: lower = max of the two terms, upper = their sum.
OptBracket opt_bracket(const Matrix& Delta, const Matrix& K, double mu);

struct HfValue {
  double value = 0.0;
  bool infinite = false;
};

/// Pole-cancellation complexity of g(z) = f(z^T) on the declared spectrum.
HfValue eval_Hf(const MonicPolynomial& f, const JordanSpec& spec, Index T, NormKind q,
                Index grid_points = 512);

double k1(const JordanSpec& spec, Index d, Index T, double alpha, NormKind q);

/// Growth of a length-N Jordan-block trajectory, before and after the stable cap.
double m_tilde(int k, double N);
double m_block(int k, Complex lambda, double N);
double k2(const JordanSpec& spec, double N);

struct AdversarialDims {
  Index T = 1;
  Index d = 1;
};

struct MConstants {
  double M0 = 0.0;
  double MB = 0.0;  // at t = 1, or t = T d d_w in the adversarial case
  double MC = 0.0;
  double MD = 0.0;  // at t = 1, or t = d d_z in the adversarial case
  double Mbar = 0.0;
  bool adversarial = false;
};

/// Conditioning constants of the realization with respect to the similarity
/// S that brings A to Jordan form (A = S J S^{-1}).
MConstants m_constants(const StateSpace& sys, const ComplexMatrix& S, double N,
                       std::optional<AdversarialDims> adversarial = std::nullopt);

struct StrongObservability {
  Filter phi;
  double sigma_min = 0.0;
  Index rank = 0;
};

/// Filter phi with C A^{T d} = sum_l Psi_l C A^{T (d - l)}, built from the
/// rank-truncated pseudoinverse of the T-subsampled d-step observability matrix.
StrongObservability strong_obs_filter(const Matrix& A_plus, const Matrix& C_plus, Index d, Index T,
                                      double tol = 1e-10);

/// Rows C, C A^T, ..., C A^{T (d - 1)}.
Matrix subsampled_observability(const Matrix& A, const Matrix& C, Index d, Index T);

/// sqrt of ||sum_{t=0}^{N} sum_{s=0}^{t} g_s g_s^T||_op with g_s = C A^s B.
double gramian_sum_opnorm(const StateSpace& sys, Index N);

}  // namespace sysid::analysis
