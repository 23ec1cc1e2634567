#pragma once

#include <Eigen/Dense>

#include <map>
#include <string>
#include <vector>

#include "cameral/rational.hpp"

namespace cameral {

// Exponent vector of a monomial; entry i is the power of variable i.
using Exponents = std::vector<int>;

// Graded-lexicographic order, descending: higher total degree first, ties
// broken lexicographically. begin() of a term map is the leading term.
struct GradedLexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are stored in canonical graded-lex order with no zero coefficients,
/// so operator== is structural equality of the reduced forms.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int index);
  // Linear form sum_i coeffs[i] * x_i.
  static MultiPoly linear_form(const std::vector<Rational>& coeffs);
  // Build from explicit (exponents, coefficient) pairs.
  static MultiPoly from_terms(int nvars,
                              const std::vector<std::pair<Exponents, Rational>>& terms);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly pow(unsigned n) const;

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  MultiPoly partial(int var) const;

  // Substitute variable i by images[i]; all images share a common arity,
  // which becomes the arity of the result.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;

  Complex evaluate(const Eigen::VectorXcd& x) const;
  Rational evaluate_exact(const std::vector<Rational>& x) const;

  // Canonical text: graded-lex descending, explicit '*' and '^'; variables
  // named a1..an unless a custom stem is given.
  std::string to_string(const std::string& var_stem = "a") const;

  void add_term(const Exponents& e, const Rational& c);

 private:
  int nvars_ = 0;
  TermMap terms_;
};

/// Flattened double-precision view of a MultiPoly for numeric hot paths.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  Complex eval(const Eigen::VectorXcd& x) const;

  int nvars() const { return nvars_; }

 private:
  int nvars_ = 0;
  std::vector<double> coeffs_;
  std::vector<int> exps_;  // stride nvars_
};

}  // namespace cameral
