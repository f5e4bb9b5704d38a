#pragma once

#include "sysid/linalg.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sysid {

struct JordanBlock {
  Complex lambda;
  int k = 1;
};

/// Optional similarity-conditioning constants attached to a spectrum.
struct ConditioningConstants {
  double M0 = 0.0;
  double MB = 0.0;
  double MC = 0.0;
  double MD = 0.0;
};

/// Declared Jordan structure of a state matrix, as a multiset of (eigenvalue,
/// block size) pairs. The structure is supplied by the caller, never computed.
struct JordanSpec {
  std::vector<JordanBlock> blocks;
  std::optional<ConditioningConstants> cond;

  /// Sum of block sizes.
  Index dimension() const;
};

/// Accepts either a list of {re, im, k} objects or {"blocks": [...], "cond": {...}}.
JordanSpec jordan_spec_from_json(std::string_view text);
std::string jordan_spec_to_json(const JordanSpec& spec, int indent = 2);
JordanSpec load_jordan_spec(const std::filesystem::path& path);

struct SpectrumCheck {
  bool ok = false;
  std::string message;
};

/// Checks that sum k <= n and that every declared eigenvalue, repeated k times,
/// matches the computed eigenvalues of A. Defective eigenvalues split into a
/// cluster of radius ~eps^{1/k}, so each cluster is compared through its mean.
SpectrumCheck validate_against(const JordanSpec& spec, const Matrix& A, double tol = 1e-8);

/// Real block-diagonal matrix with the declared structure. Real eigenvalues get
/// ordinary Jordan blocks; a complex block (a + ib, k) must be matched by a
/// (a - ib, k) block and the pair becomes one 2k x 2k real Jordan block.
/// Throws NonRealCoefficients when the spectrum is not closed under conjugation.
Matrix real_jordan_matrix(const JordanSpec& spec, double tol = 1e-12);

}  // namespace sysid
