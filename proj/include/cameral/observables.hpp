#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "cameral/chart.hpp"
#include "cameral/invariants.hpp"
#include "cameral/root_system.hpp"
#include "cameral/sw_derivative.hpp"

namespace cameral {

/// W-invariant bilinear form on the Cartan algebra in the coweight basis,
/// with integer entries after rescaling. The overall scale multiplies the
/// cubic linearly and is reported alongside results.
struct PairingSpec {
  IntMatrix b;

  Eigen::MatrixXcd as_complex() const { return b.cast<Complex>(); }
};

// Average of w^T w over the group, rescaled to the smallest integer
// entries; exact W-invariance is verified on construction.
PairingSpec default_pairing(const WeylGroup& weyl);

// Exact invariance check: w^T B w == B for every group element.
bool pairing_is_invariant(const PairingSpec& pairing, const WeylGroup& weyl);

// Coefficient of dw^2/w^2 of f(w) dw^2: (1/2 pi i) contour of w f(w) dw on
// |w| = r by the N-point trapezoid rule.
Complex res2_contour(const std::function<Complex(Complex)>& f_dw2, double r, int nodes);

// Same coefficient for an integrand defined on the cameral curve near a
// ramification point, sampled along frame circles; values at radius r and
// r/2 must agree to the residue tolerance.
Complex res2_at(const CameralChart& chart, const RamificationPoint& ram,
                const std::function<Complex(const CurvePoint&)>& f_dw2, double r,
                int nodes = kContourNodes);

struct CubicValue {
  Complex value;  // 1/2 times the sum of the contributions
  struct Term {
    Complex branch_z;
    int cluster_id = 0;
    Complex contribution;
  };
  std::vector<Term> per_ramification_terms;
};

// The symmetric cubic on the base by the residue formula: for each
// ramification point, Res^2 of (pullback of the discriminant log-derivative
// along g1) x B(grad_g2, grad_g3), summed with the 1/2 prefactor in sorted
// branch-point order.
CubicValue cubic(const CameralChart& chart, const Deformation& g1, const Deformation& g2,
                 const Deformation& g3, const PairingSpec& pairing,
                 std::uint64_t seed = 0x5eed5eedULL);

struct Sl2MetricResult {
  double value = 0.0;
  bool converged = false;
  double refinement_delta = 0.0;
  long long leaf_cells = 0;
  bool region_truncated = true;  // chart-local value, never a global claim
};

// 2 int |grad lambda|^2 over both sheets of the disk |z| <= radius: the
// integrand collapses to |gamma|^2 / |beta| dA, integrable across simple
// zeros of beta. Polar patches resolve the singular cores; an adaptive
// quadtree covers the rest. The mesh depends only on the chart geometry,
// so gamma -> c gamma scales the result by |c|^2 exactly.
Sl2MetricResult sk_metric_sl2(const CameralChart& chart, const Deformation& gamma, double radius,
                              int max_depth = 10);

}  // namespace cameral
