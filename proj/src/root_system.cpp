#include "cameral/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cameral {

namespace {

// Deterministic total order on integer matrices (row-major entry compare).
bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
  return false;
}

IntVector make_root(std::initializer_list<std::int64_t> v) {
  IntVector r(static_cast<int>(v.size()));
  int i = 0;
  for (auto x : v) r(i++) = x;
  return r;
}

// Reflection s_j in alpha-coordinates: (s_j x)_i = x_i - C_ij x_j.
IntMatrix simple_reflection(const IntMatrix& cartan, int j) {
  const int l = static_cast<int>(cartan.rows());
  IntMatrix s = IntMatrix::Identity(l, l);
  for (int i = 0; i < l; ++i) s(i, j) -= cartan(i, j);
  return s;
}

}  // namespace

GroupName parse_group(const std::string& name) {
  if (name == "A1") return GroupName::A1;
  if (name == "A2") return GroupName::A2;
  if (name == "B2") return GroupName::B2;
  if (name == "G2") return GroupName::G2;
  throw std::invalid_argument("unknown group name: " + name + " (expected A1, A2, B2 or G2)");
}

std::string to_string(GroupName name) {
  switch (name) {
    case GroupName::A1: return "A1";
    case GroupName::A2: return "A2";
    case GroupName::B2: return "B2";
    case GroupName::G2: return "G2";
  }
  throw std::logic_error("invalid GroupName");
}

RootSystem build_root_system(GroupName name) {
  RootSystem rs;
  rs.name = name;
  switch (name) {
    case GroupName::A1: {
      rs.rank = 1;
      rs.cartan = IntMatrix::Constant(1, 1, 2);
      rs.positive_roots = {make_root({1})};
      break;
    }
    case GroupName::A2: {
      rs.rank = 2;
      rs.cartan = IntMatrix(2, 2);
      rs.cartan << 2, -1, -1, 2;
      rs.positive_roots = {make_root({1, 0}), make_root({0, 1}), make_root({1, 1})};
      break;
    }
    case GroupName::B2: {
      // alpha1 long, alpha2 short.
      rs.rank = 2;
      rs.cartan = IntMatrix(2, 2);
      rs.cartan << 2, -2, -1, 2;
      rs.positive_roots = {make_root({1, 0}), make_root({0, 1}), make_root({1, 1}),
                           make_root({1, 2})};
      break;
    }
    case GroupName::G2: {
      // alpha1 short, alpha2 long.
      rs.rank = 2;
      rs.cartan = IntMatrix(2, 2);
      rs.cartan << 2, -1, -3, 2;
      rs.positive_roots = {make_root({1, 0}), make_root({0, 1}), make_root({1, 1}),
                           make_root({2, 1}), make_root({3, 1}), make_root({3, 2})};
      break;
    }
  }
  for (int j = 0; j < rs.rank; ++j) rs.simple_reflections.push_back(simple_reflection(rs.cartan, j));
  return rs;
}

int WeylGroup::identity_index() const {
  const int l = static_cast<int>(elements.front().rows());
  return index_of(IntMatrix::Identity(l, l));
}

int WeylGroup::index_of(const IntMatrix& m) const {
  for (int i = 0; i < order(); ++i)
    if (elements[i] == m) return i;
  return -1;
}

int WeylGroup::inverse_of(int i) const {
  const int e = identity_index();
  for (int j = 0; j < order(); ++j)
    if (cayley[i][j] == e) return j;
  return -1;
}

WeylGroup weyl_closure(const std::vector<IntMatrix>& generators, int bound) {
  if (generators.empty()) throw std::invalid_argument("weyl_closure: no generators");
  const int l = static_cast<int>(generators.front().rows());
  for (const auto& g : generators) {
    if (g.rows() != l || g.cols() != l) throw std::invalid_argument("weyl_closure: shape mismatch");
    Eigen::MatrixXd gd = g.cast<double>();
    if (std::abs(gd.determinant()) < 0.5)
      throw std::invalid_argument("weyl_closure: singular generator");
  }

  std::map<std::vector<std::int64_t>, int> seen;
  auto key_of = [l](const IntMatrix& m) {
    std::vector<std::int64_t> key;
    key.reserve(static_cast<std::size_t>(l) * l);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) key.push_back(m(r, c));
    return key;
  };

  std::vector<IntMatrix> found = {IntMatrix::Identity(l, l)};
  seen.emplace(key_of(found[0]), 0);
  std::size_t head = 0;
  while (head < found.size()) {
    const IntMatrix current = found[head++];
    for (const auto& g : generators) {
      const IntMatrix next = g * current;
      auto key = key_of(next);
      if (seen.count(key)) continue;
      if (static_cast<int>(found.size()) >= bound)
        throw std::runtime_error("weyl_closure: closure exceeds bound " + std::to_string(bound));
      seen.emplace(std::move(key), static_cast<int>(found.size()));
      found.push_back(next);
    }
  }

  std::sort(found.begin(), found.end(), matrix_less);
  WeylGroup group;
  group.elements = std::move(found);
  const int n = group.order();
  group.cayley.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = group.index_of(group.elements[i] * group.elements[j]);
      if (k < 0) throw std::logic_error("weyl_closure: product escaped the closure");
      group.cayley[i][j] = k;
    }
  return group;
}

std::vector<Eigen::VectorXcd> weyl_orbit(const WeylGroup& group, const Eigen::VectorXcd& point,
                                         double tol) {
  std::vector<Eigen::VectorXcd> orbit;
  for (const auto& w : group.elements) {
    Eigen::VectorXcd image = apply(w, point);
    bool fresh = true;
    for (const auto& p : orbit) {
      if ((image - p).cwiseAbs().maxCoeff() <= tol) {
        fresh = false;
        break;
      }
    }
    if (fresh) orbit.push_back(std::move(image));
  }
  return orbit;
}

Complex root_value(const IntVector& root, const Eigen::VectorXcd& point) {
  Complex acc(0.0);
  for (int i = 0; i < root.size(); ++i) acc += static_cast<double>(root(i)) * point(i);
  return acc;
}

Eigen::VectorXcd apply(const IntMatrix& w, const Eigen::VectorXcd& point) {
  return w.cast<Complex>() * point;
}

}  // namespace cameral
