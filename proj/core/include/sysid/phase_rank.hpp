#pragma once

#include "sysid/jordan.hpp"
#include "sysid/polynomial.hpp"

#include <optional>
#include <vector>

namespace sysid {

/// Witnesses mu_1..mu_d in the closed unit disc together with, for each block
/// of the spectrum, the indices of the witnesses that cover it. Blocks below
/// the size threshold get an empty list.
struct PhaseRankCertificate {
  double alpha = 1.0;
  Index T = 1;
  std::vector<Complex> witnesses;
  std::vector<std::vector<Index>> assignment;

  Index d() const { return static_cast<Index>(witnesses.size()); }
};

/// A block needs covering when |lambda| >= 1 - 1 / ((1 + alpha) T).
bool is_large_block(Complex lambda, double alpha, Index T);

/// Whether mu covers lambda at spacing T: some T-th root of mu^T lies within
/// alpha (1 - |lambda|) of lambda.
bool covers(Complex mu, Complex lambda, double alpha, Index T);

/// True when every large block (lambda, k) is covered by at least k of the witnesses.
bool check_phase_rank(const JordanSpec& spec, double alpha, Index T,
                      const std::vector<Complex>& witnesses);
bool check_phase_rank(const JordanSpec& spec, const PhaseRankCertificate& cert);

struct PhaseRankOptions {
  /// Search nodes spent looking for a conjugate-closed certificate once some
  /// certificate of the minimal size is known.
  long refine_budget = 200000;
};

/// Smallest d <= d_max for which some multiset of candidate witnesses works.
/// Candidates are the large eigenvalues, their unit-modulus projections and
/// the conjugates of both. std::nullopt means nothing was found within the
/// budget, which does not prove that no certificate exists.
std::optional<PhaseRankCertificate> phase_rank(const JordanSpec& spec, double alpha, Index T,
                                               Index d_max = 12, PhaseRankOptions opts = {});

/// Expansion of prod_i (z - mu_i^T). Throws NonRealCoefficients when the
/// values mu_i^T are not closed under conjugation.
MonicPolynomial poly_from_witnesses(const PhaseRankCertificate& cert);

}  // namespace sysid
