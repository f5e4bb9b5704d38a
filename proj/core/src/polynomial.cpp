#include "sysid/polynomial.hpp"

#include "sysid/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sysid {

MonicPolynomial::MonicPolynomial(std::vector<double> coefficients)
    : coeffs_(std::move(coefficients)) {}

double MonicPolynomial::coefficient(Index i) const {
  if (i < 1 || i > degree()) throw InvalidArgument("MonicPolynomial: coefficient index out of range");
  return coeffs_[static_cast<size_t>(i - 1)];
}

double MonicPolynomial::l1_norm() const {
  double s = 1.0;
  for (double c : coeffs_) s += std::abs(c);
  return s;
}

std::vector<double> MonicPolynomial::dense() const {
  std::vector<double> out;
  out.reserve(coeffs_.size() + 1);
  out.push_back(1.0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Complex MonicPolynomial::operator()(Complex z) const {
  Complex acc(1.0, 0.0);
  for (double c : coeffs_) acc = acc * z + c;
  return acc;
}

Complex MonicPolynomial::derivative(Complex z, Index j) const {
  if (j < 0) throw InvalidArgument("MonicPolynomial: negative derivative order");
  const std::vector<double> a = dense();
  const Index d = degree();
  if (j > d) return Complex(0.0, 0.0);
  // Differentiate the dense coefficient list j times, then Horner.
  Complex acc(0.0, 0.0);
  for (Index i = 0; i <= d - j; ++i) {
    const Index power = d - i;
    double falling = 1.0;
    for (Index r = 0; r < j; ++r) falling *= static_cast<double>(power - r);
    acc = acc * z + a[static_cast<size_t>(i)] * falling;
  }
  return acc;
}

Index MonicPolynomial::root_order(Complex w, double rel_tol) const {
  const Index d = degree();
  const double scale =
      rel_tol * l1_norm() * std::pow(std::max(1.0, std::abs(w)), static_cast<double>(d));
  double factorial = 1.0;
  for (Index j = 0; j <= d; ++j) {
    if (j > 0) factorial *= static_cast<double>(j);
    if (std::abs(derivative(w, j)) / factorial > scale) return j;
  }
  return d;
}

MonicPolynomial MonicPolynomial::compose_power(Index T) const {
  if (T < 1) throw InvalidArgument("compose_power: T must be >= 1");
  const Index d = degree();
  std::vector<double> out(static_cast<size_t>(d * T), 0.0);
  // Coefficient of z^{(d - i) T} is f_i, which sits at position i T in the new list.
  for (Index i = 1; i <= d; ++i) out[static_cast<size_t>(i * T - 1)] = coeffs_[static_cast<size_t>(i - 1)];
  return MonicPolynomial(std::move(out));
}

MonicPolynomial poly_from_roots(const std::vector<Complex>& roots, double tol) {
  // Conjugate closure: every non-real root needs a distinct conjugate partner.
  std::vector<bool> matched(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (matched[i]) continue;
    if (std::abs(roots[i].imag()) <= tol) {
      matched[i] = true;
      continue;
    }
    bool found = false;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (j == i || matched[j]) continue;
      if (std::abs(roots[j] - std::conj(roots[i])) <= tol) {
        matched[i] = matched[j] = true;
        found = true;
        break;
      }
    }
    if (!found) throw NonRealCoefficients("roots are not closed under complex conjugation");
  }

  std::vector<Complex> c{Complex(1.0, 0.0)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0.0, 0.0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<double> coeffs;
  coeffs.reserve(roots.size());
  for (size_t i = 1; i < c.size(); ++i) coeffs.push_back(c[i].real());
  return MonicPolynomial(std::move(coeffs));
}

Filter filter_from_poly(const MonicPolynomial& f, Index m, Index L) {
  if (m < 1) throw InvalidArgument("filter_from_poly: m must be >= 1");
  if (f.degree() > L) throw InvalidArgument("filter_from_poly: degree exceeds filter length");
  std::vector<Matrix> blocks;
  blocks.reserve(static_cast<size_t>(L));
  for (Index l = 1; l <= L; ++l) {
    const double c = l <= f.degree() ? -f.coefficient(l) : 0.0;
    blocks.push_back(c * Matrix::Identity(m, m));
  }
  return Filter(std::move(blocks));
}

MonicPolynomial minimal_polynomial(const JordanSpec& spec, Index T, double merge_tol) {
  if (T < 1) throw InvalidArgument("minimal_polynomial: T must be >= 1");
  struct Group {
    Complex value;
    int k;
  };
  std::vector<Group> groups;
  for (const auto& b : spec.blocks) {
    const Complex v = std::pow(b.lambda, static_cast<int>(T));
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const Group& g) { return std::abs(g.value - v) <= merge_tol; });
    if (it == groups.end()) {
      groups.push_back({v, b.k});
    } else {
      it->k = std::max(it->k, b.k);
    }
  }
  std::vector<Complex> roots;
  for (const auto& g : groups) {
    for (int j = 0; j < g.k; ++j) roots.push_back(g.value);
  }
  return poly_from_roots(roots, std::max(merge_tol, 1e-9));
}

}  // namespace sysid
