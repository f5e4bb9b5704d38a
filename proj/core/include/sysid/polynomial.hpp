#pragma once

#include "sysid/filter.hpp"
#include "sysid/jordan.hpp"

#include <vector>

namespace sysid {

/// z^d + f_1 z^{d-1} + ... + f_d with real coefficients.
class MonicPolynomial {
 public:
  MonicPolynomial() = default;
  /// coefficients = {f_1, ..., f_d}; an empty list is the constant 1.
  explicit MonicPolynomial(std::vector<double> coefficients);

  Index degree() const { return static_cast<Index>(coeffs_.size()); }
  const std::vector<double>& coefficients() const { return coeffs_; }
  /// f_i for i in 1..d.
  double coefficient(Index i) const;

  /// 1 + sum |f_i|.
  double l1_norm() const;
  /// Membership in the set of degree-d monic polynomials with l1 norm <= bound.
  bool in_mon(double bound) const { return l1_norm() <= bound; }

  Complex operator()(Complex z) const;
  /// j-th derivative at z.
  Complex derivative(Complex z, Index j) const;

  /// Multiplicity of w as a root (0 if f(w) != 0). A Taylor coefficient
  /// f^{(j)}(w)/j! counts as zero below rel_tol * l1_norm * max(1, |w|)^d.
  Index root_order(Complex w, double rel_tol = 1e-8) const;

  /// g(z) = f(z^T).
  MonicPolynomial compose_power(Index T) const;

  /// Full coefficient list highest degree first, i.e. {1, f_1, ..., f_d}.
  std::vector<double> dense() const;

 private:
  std::vector<double> coeffs_;
};

/// Expansion of prod_i (z - r_i). The roots must be closed under conjugation
/// (within tol), otherwise NonRealCoefficients.
MonicPolynomial poly_from_roots(const std::vector<Complex>& roots, double tol = 1e-9);

/// Blocks Psi_l = -f_l I for l <= d followed by zero blocks up to length L.
Filter filter_from_poly(const MonicPolynomial& f, Index m, Index L);

/// prod over distinct values of lambda^T of (z - lambda^T)^{k_max}, where blocks
/// whose T-th powers agree within merge_tol are grouped and k_max is the
/// largest block size in the group.
MonicPolynomial minimal_polynomial(const JordanSpec& spec, Index T, double merge_tol = 1e-9);

}  // namespace sysid
