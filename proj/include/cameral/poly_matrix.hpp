#pragma once

#include <Eigen/Dense>

#include <vector>

#include "cameral/multipoly.hpp"

namespace cameral {

/// Square matrix of exact polynomials (row-major), all of a common arity.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int size, int nvars);

  int size() const { return size_; }
  int nvars() const { return nvars_; }

  const MultiPoly& at(int row, int col) const;
  MultiPoly& at(int row, int col);

  // Exact cofactor-expansion determinant.
  MultiPoly determinant() const;

  // Exact adjugate: adj(M) * M == det(M) * Id. The 1x1 adjugate is (1).
  PolyMatrix adjugate() const;
  PolyMatrix transpose() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool operator==(const PolyMatrix& other) const;

  Eigen::MatrixXcd evaluate(const Eigen::VectorXcd& x) const;

 private:
  // Determinant of the minor obtained by deleting row `drop_row` and the
  // columns marked in `dropped_cols`.
  MultiPoly minor_det(std::vector<int> rows, std::vector<int> cols) const;

  int size_ = 0;
  int nvars_ = 0;
  std::vector<MultiPoly> entries_;
};

// Jacobi matrix: entry (j, i) = d polys[j] / d x_i (rows are the equations).
PolyMatrix jacobian(const std::vector<MultiPoly>& polys);

/// Compiled numeric view of a PolyMatrix for evaluation hot paths.
class CompiledPolyMatrix {
 public:
  CompiledPolyMatrix() = default;
  explicit CompiledPolyMatrix(const PolyMatrix& m);

  int size() const { return size_; }
  Eigen::MatrixXcd eval(const Eigen::VectorXcd& x) const;

 private:
  int size_ = 0;
  std::vector<CompiledPoly> entries_;
};

}  // namespace cameral
