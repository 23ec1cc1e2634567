#pragma once

#include <vector>

#include "cameral/multipoly.hpp"
#include "cameral/poly_matrix.hpp"
#include "cameral/root_system.hpp"
#include "cameral/unipoly.hpp"

namespace cameral {

/// A fixed set of invariant generators I_1..I_l for one group, with the
/// Jacobi matrix cached. Construction verifies homogeneity, exact
/// W-invariance of every generator, and prod(deg) == |W|.
struct InvariantSet {
  RootSystem group;
  std::vector<MultiPoly> gens;
  std::vector<int> degrees;
  PolyMatrix jac;      // rows are the generators, columns the variables
  MultiPoly jac_det;   // det of jac
  PolyMatrix jac_adj;  // adjugate of jac
};

InvariantSet invariant_set(GroupName name);

struct SteinbergResult {
  Rational c;            // det DI == c * prod(positive roots)
  bool exact_match;      // the identity holds term by term
  MultiPoly root_product;
};

SteinbergResult steinberg_check(const InvariantSet& inv);

/// The discriminant: product of all (positive and negative) roots as linear
/// forms, together with its exact expression P(I_1,...,I_l).
struct Discriminant {
  MultiPoly as_poly;        // in the alpha variables
  MultiPoly in_invariants;  // in l fresh variables u_1..u_l
};

// Expresses the root product in the invariant generators by solving the
// coefficient-matching linear system over exact rationals; the result is
// certified by exact back-substitution.
Discriminant discriminant_in_invariants(const InvariantSet& inv);

/// A ratio of univariate polynomials in z.
struct RationalFunction {
  UniPoly num;
  UniPoly den;
  Complex evaluate(Complex z) const { return num.evaluate(z) / den.evaluate(z); }
};

// (sum_k dP/du_k(beta(z)) * gamma_k(z)) / P(beta(z)): the logarithmic
// derivative of the discriminant along the deformation, on the chart.
RationalFunction log_derivative_along(const InvariantSet& inv, const Discriminant& disc,
                                      const std::vector<UniPoly>& beta,
                                      const std::vector<UniPoly>& gamma);

/// Immutable per-group bundle shared by charts and engines: root data, the
/// Weyl closure, invariant generators and the discriminant, plus compiled
/// numeric views of the symbolic objects.
struct GroupContext {
  RootSystem root_system;
  WeylGroup weyl;
  InvariantSet invariants;
  Discriminant discriminant;

  std::vector<CompiledPoly> gens_c;
  CompiledPolyMatrix jac_c;
  CompiledPolyMatrix adj_c;
  CompiledPoly det_c;

  int rank() const { return root_system.rank; }

  // I(alpha) as a complex vector.
  Eigen::VectorXcd eval_gens(const Eigen::VectorXcd& alpha) const;
};

// Cached, thread-safe registry of group bundles.
const GroupContext& group_context(GroupName name);

}  // namespace cameral
