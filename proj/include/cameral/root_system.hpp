#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "cameral/numerics.hpp"

namespace cameral {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

enum class GroupName { A1, A2, B2, G2 };

GroupName parse_group(const std::string& name);
std::string to_string(GroupName name);

/// Root-system tables in simple-root coordinates: a point u of the Cartan
/// algebra is stored as x_i = alpha_i(u), so roots are integer linear forms
/// and reflections are integer matrices acting on x.
struct RootSystem {
  GroupName name = GroupName::A1;
  int rank = 1;
  IntMatrix cartan;
  std::vector<IntVector> positive_roots;     // coefficient vectors of linear forms
  std::vector<IntMatrix> simple_reflections;  // action on alpha-coordinates

  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
  int num_roots() const { return 2 * num_positive_roots(); }
};

RootSystem build_root_system(GroupName name);

/// Finite matrix group generated by the simple reflections, with a fixed
/// deterministic element order (sorted by matrix entries) and Cayley table.
struct WeylGroup {
  std::vector<IntMatrix> elements;
  std::vector<std::vector<int>> cayley;  // cayley[i][j] = index of elements[i]*elements[j]

  int order() const { return static_cast<int>(elements.size()); }
  int identity_index() const;
  int index_of(const IntMatrix& m) const;  // -1 if absent
  int inverse_of(int i) const;
};

// Breadth-first closure of the generators under multiplication. Throws if
// the group exceeds `bound` elements (wrong generators).
WeylGroup weyl_closure(const std::vector<IntMatrix>& generators, int bound = kMaxWeylOrder);

// Orbit of a point of the complexified Cartan algebra, deduplicated with
// absolute per-coordinate tolerance `tol`.
std::vector<Eigen::VectorXcd> weyl_orbit(const WeylGroup& group, const Eigen::VectorXcd& point,
                                         double tol = tol::kOrbit);

// Value of a root (integer linear form) on a point.
Complex root_value(const IntVector& root, const Eigen::VectorXcd& point);

// Apply a group element to a complex point.
Eigen::VectorXcd apply(const IntMatrix& w, const Eigen::VectorXcd& point);

}  // namespace cameral
