#pragma once

#include "sysid/filter.hpp"
#include "sysid/regression.hpp"
#include "sysid/state_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sysid::est {

/// Ridge regression of the rows of A on the rows of K:
///   argmin_phi ||A - K phi^T||_F^2 + mu^2 ||phi||_F^2,  returned as phi (cols(A) x cols(K)).
/// Solved as the stacked least-squares problem [K; mu I] phi^T = [A; 0] with a
/// Householder QR.
Matrix ridge(const Matrix& K, const Matrix& A, double mu);

/// Same solution through (K^T K + mu^2 I)^{-1} K^T A.
Matrix ridge_closed_form(const Matrix& K, const Matrix& A, double mu);

struct OlsOptions {
  /// Reject when sigma_min(Ubar)^2 <= rel_tol * rows.
  double rel_tol = 1e-10;
};

/// argmin_G sum_t ||G ubar_t - y_t||^2 via QR of Ubar.
MarkovMatrix ols(const RegressionData& data, OlsOptions opts = {});

/// Least squares of an arbitrary target against Ubar.
MarkovMatrix regress_on_inputs(const RegressionData& data, const Matrix& target,
                               OlsOptions opts = {});

/// Prefilter phi_rdg = ridge(Y on K, mu) as an L-block filter.
Filter ridge_filter(const RegressionData& data, double mu);

/// Least squares of (y_t - phi k_t) against ubar_t.
MarkovMatrix fixed_filter_estimate(const RegressionData& data, const Filter& phi,
                                   OlsOptions opts = {});

struct PflsResult {
  MarkovMatrix G;
  Filter phi;
};

/// Two-step prefiltered least squares: fixed_filter_estimate(data, ridge_filter(data, mu)).
PflsResult pfls(const RegressionData& data, double mu, OlsOptions opts = {});

/// Rows y_t - G ubar_t - phi k_t (phi omitted: plain residual).
Matrix residuals(const RegressionData& data, const MarkovMatrix& G,
                 const std::optional<Filter>& phi = std::nullopt);

struct Conditioning {
  bool ok = false;
  double min_eig = 0.0;
  double max_eig = 0.0;
};

/// Whether (N/2) I <= Ubar^T Ubar <= 2 N I.
Conditioning check_conditioning(const Matrix& Ubar, double N);
Conditioning check_conditioning(const RegressionData& data);

struct SelectLOptions {
  double C1 = 1.0;
  double C2 = 1.0;
};

struct SelectLCandidate {
  Index L = 0;
  double opt_hat = 0.0;
  double K_opnorm = 0.0;
  double phi_opnorm = 0.0;
  double admissibility_lhs = 0.0;  // compared against N
  bool admissible = false;
  double conf = 0.0;
};

struct SelectLResult {
  Index L = 1;
  bool admissible_set_empty = false;
  std::vector<SelectLCandidate> candidates;
  std::string warning;
};

/// Structural risk minimization over L = 1..L_max using the empirical proxy
/// ||Y - K phi_rdg|| + mu ||phi_rdg||. All candidates share N1 = T L_max + 1.
SelectLResult select_L(const Trajectory& traj, Index T, Index L_max, double mu, double delta,
                       SelectLOptions opts = {});

/// max(1, log x), with log_plus(x <= 0) = 1.
double log_plus(double x);

/// p * min(T, log^2(e T p) log^2(T p)).
double p_tilde(Index p, Index T);

/// Effective dimension p~ + m + lil(opt/mu) + Lbar log_+(opt + sqrt(N) ||K|| / mu^2).
double effective_dimension(double opt, Index Lbar, double mu, Index p, Index m, Index T,
                           double N, double K_opnorm);

}  // namespace sysid::est
