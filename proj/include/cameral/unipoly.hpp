#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cameral/multipoly.hpp"
#include "cameral/rational.hpp"

namespace cameral {

/// Univariate polynomial in z with complex double coefficients,
/// stored low degree to high. Exact-zero leading coefficients are trimmed.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Complex> coeffs);

  static UniPoly constant(Complex c);
  static UniPoly z();  // the identity polynomial

  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;

  Complex evaluate(Complex zv) const;
  UniPoly derivative() const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(Complex c);
  friend UniPoly operator*(UniPoly a, Complex c) { return a *= c; }
  friend UniPoly operator*(Complex c, UniPoly a) { return a *= c; }
  UniPoly pow(unsigned n) const;

  // All complex roots via the companion-matrix eigenvalues, polished by a
  // few Newton steps. Near-zero leading coefficients (relative to the
  // largest coefficient) are stripped before forming the companion matrix.
  std::vector<Complex> roots() const;

  double max_coeff_norm() const;

 private:
  void trim();
  std::vector<Complex> coeffs_;
};

// p(images[0](z), ..., images[n-1](z)) as a univariate polynomial.
UniPoly compose(const MultiPoly& p, const std::vector<UniPoly>& images);

}  // namespace cameral
