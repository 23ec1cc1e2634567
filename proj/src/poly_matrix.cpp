#include "cameral/poly_matrix.hpp"

#include <stdexcept>

namespace cameral {

PolyMatrix::PolyMatrix(int size, int nvars)
    : size_(size), nvars_(nvars), entries_(static_cast<std::size_t>(size) * size, MultiPoly(nvars)) {}

const MultiPoly& PolyMatrix::at(int row, int col) const {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

MultiPoly& PolyMatrix::at(int row, int col) {
  return entries_[static_cast<std::size_t>(row) * size_ + col];
}

MultiPoly PolyMatrix::minor_det(std::vector<int> rows, std::vector<int> cols) const {
  if (rows.empty()) return MultiPoly::constant(nvars_, 1);
  if (rows.size() == 1) return at(rows[0], cols[0]);
  MultiPoly acc(nvars_);
  const int r0 = rows.front();
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    MultiPoly term = at(r0, cols[j]) * minor_det(sub_rows, sub_cols);
    if (j % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

MultiPoly PolyMatrix::determinant() const {
  std::vector<int> idx(size_);
  for (int i = 0; i < size_; ++i) idx[i] = i;
  return minor_det(idx, idx);
}

PolyMatrix PolyMatrix::adjugate() const {
  PolyMatrix adj(size_, nvars_);
  if (size_ == 1) {
    adj.at(0, 0) = MultiPoly::constant(nvars_, 1);
    return adj;
  }
  for (int r = 0; r < size_; ++r) {
    for (int c = 0; c < size_; ++c) {
      std::vector<int> rows, cols;
      for (int i = 0; i < size_; ++i)
        if (i != r) rows.push_back(i);
      for (int j = 0; j < size_; ++j)
        if (j != c) cols.push_back(j);
      MultiPoly cof = minor_det(rows, cols);
      if ((r + c) % 2 == 1) cof = -cof;
      adj.at(c, r) = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(size_, nvars_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) t.at(c, r) = at(r, c);
  return t;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.size_ != b.size_ || a.nvars_ != b.nvars_)
    throw std::invalid_argument("PolyMatrix product: shape mismatch");
  PolyMatrix r(a.size_, a.nvars_);
  for (int i = 0; i < a.size_; ++i)
    for (int j = 0; j < a.size_; ++j) {
      MultiPoly acc(a.nvars_);
      for (int k = 0; k < a.size_; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const {
  return size_ == other.size_ && nvars_ == other.nvars_ && entries_ == other.entries_;
}

Eigen::MatrixXcd PolyMatrix::evaluate(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd m(size_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) m(r, c) = at(r, c).evaluate(x);
  return m;
}

PolyMatrix jacobian(const std::vector<MultiPoly>& polys) {
  const int l = static_cast<int>(polys.size());
  if (l == 0) throw std::invalid_argument("jacobian of empty system");
  for (const auto& p : polys)
    if (p.nvars() != l) throw std::invalid_argument("jacobian needs l polynomials in l variables");
  PolyMatrix jac(l, l);
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i) jac.at(j, i) = polys[j].partial(i);
  return jac;
}

CompiledPolyMatrix::CompiledPolyMatrix(const PolyMatrix& m) : size_(m.size()) {
  entries_.reserve(static_cast<std::size_t>(size_) * size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) entries_.emplace_back(m.at(r, c));
}

Eigen::MatrixXcd CompiledPolyMatrix::eval(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd out(size_, size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) out(r, c) = entries_[static_cast<std::size_t>(r) * size_ + c].eval(x);
  return out;
}

}  // namespace cameral
