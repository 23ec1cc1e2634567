#include "cameral/unipoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cameral {

UniPoly::UniPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(Complex c) { return UniPoly({c}); }

UniPoly UniPoly::z() { return UniPoly({Complex(0.0), Complex(1.0)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Complex(0.0);
  return coeffs_[k];
}

Complex UniPoly::evaluate(Complex zv) const {
  Complex acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * zv + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Complex(static_cast<double>(k));
  return UniPoly(std::move(d));
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Complex(0.0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Complex> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Complex(0.0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(prod));
}

UniPoly& UniPoly::operator*=(Complex c) {
  if (c == Complex(0.0)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly result = UniPoly::constant(Complex(1.0));
  UniPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

double UniPoly::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Complex> UniPoly::roots() const {
  // Strip coefficients that are zero up to rounding noise from compositions.
  std::vector<Complex> c = coeffs_;
  const double scale = max_coeff_norm();
  while (!c.empty() && std::abs(c.back()) <= 1e-13 * scale) c.pop_back();
  const int deg = static_cast<int>(c.size()) - 1;
  if (deg <= 0) return {};

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);

  const UniPoly dp = derivative();
  std::vector<Complex> out;
  out.reserve(deg);
  for (int i = 0; i < deg; ++i) {
    Complex r = solver.eigenvalues()(i);
    for (int it = 0; it < 4; ++it) {
      const Complex d = dp.evaluate(r);
      if (std::abs(d) == 0.0) break;
      const Complex step = evaluate(r) / d;
      r -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

UniPoly compose(const MultiPoly& p, const std::vector<UniPoly>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw std::invalid_argument("compose: image count mismatch");
  UniPoly acc;
  for (const auto& [e, c] : p.terms()) {
    UniPoly term = UniPoly::constant(Complex(to_double(c)));
    for (int i = 0; i < p.nvars(); ++i)
      if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
    acc += term;
  }
  return acc;
}

}  // namespace cameral
