#include "sysid/errors.hpp"
#include "sysid/estimators.hpp"
#include "sysid/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace sysid::est {

double log_plus(double x) {
  if (!(x > 0.0)) return 1.0;
  return std::max(1.0, std::log(x));
}

double p_tilde(Index p, Index T) {
  const double Tp = static_cast<double>(T * p);
  const double a = std::log(std::numbers::e * Tp);
  const double b = std::log(Tp);
  return static_cast<double>(p) * std::min(static_cast<double>(T), a * a * b * b);
}

double effective_dimension(double opt, Index Lbar, double mu, Index p, Index m, Index T,
                           double N, double K_opnorm) {
  const double lil = log_plus(log_plus(opt / mu));
  return p_tilde(p, T) + static_cast<double>(m) + lil +
         static_cast<double>(Lbar) * log_plus(opt + std::sqrt(N) * K_opnorm / (mu * mu));
}

SelectLResult select_L(const Trajectory& traj, Index T, Index L_max, double mu, double delta,
                       SelectLOptions opts) {
  if (L_max < 1) throw InvalidArgument("select_L: L_max must be >= 1");
  if (!(mu > 0.0)) throw InvalidArgument("select_L: mu must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("select_L: delta must be in (0,1)");

  const Index N1 = T * L_max + 1;
  const double N = static_cast<double>(traj.N());
  const Index p = traj.u.cols();
  const Index m = traj.y.cols();

  SelectLResult result;
  for (Index L = 1; L <= L_max; ++L) {
    const RegressionData data = build_regression_data(traj, T, L, N1);
    const Matrix phi = ridge(data.K, data.Y, mu);
    SelectLCandidate c;
    c.L = L;
    c.phi_opnorm = op_norm(phi);
    c.opt_hat = analysis::opt_hat(data.Y, data.K, mu);
    c.K_opnorm = op_norm(data.K);

    const double ratio_num = opts.C2 * c.K_opnorm;
    const double ratio = ratio_num == 0.0 ? 0.0 : ratio_num / (mu * c.opt_hat);
    const double Lm = static_cast<double>(L * m);
    c.admissibility_lhs =
        opts.C1 * static_cast<double>(T) *
        (p_tilde(p, T) + static_cast<double>(m) +
         Lm * (log_plus(ratio) + log_plus(mu * c.phi_opnorm)) +
         std::log(static_cast<double>(L) / delta));
    c.admissible = c.admissibility_lhs <= N;

    const double deff = effective_dimension(c.opt_hat, L * m, mu, p, m, T, N, c.K_opnorm);
    c.conf = (c.opt_hat + mu) / N *
             std::sqrt(static_cast<double>(T) * (std::log(1.0 / delta) + deff));
    result.candidates.push_back(c);
  }

  auto pick = [&](bool admissible_only) -> std::optional<Index> {
    std::optional<Index> best;
    double best_conf = std::numeric_limits<double>::infinity();
    for (const auto& c : result.candidates) {
      if (admissible_only && !c.admissible) continue;
      if (!best || c.conf < best_conf) {
        best = c.L;
        best_conf = c.conf;
      }
    }
    return best;
  };

  if (auto L = pick(true)) {
    result.L = *L;
  } else {
    result.admissible_set_empty = true;
    result.L = pick(false).value_or(1);
    result.warning = "select_L: no admissible L; falling back to the unrestricted minimizer";
  }
  return result;
}

}  // namespace sysid::est
