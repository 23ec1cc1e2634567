#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "cameral/chart.hpp"
#include "cameral/invariants.hpp"
#include "cameral/numerics.hpp"

namespace cameral {

/// Chart value of a Cartan-valued one-form: the coefficient vector c with
/// value = sum_i c_i e_i (x) dz at a fiber point.
struct CotangentValue {
  Eigen::VectorXcd coeffs;
};

/// The exact rational expression behind the derivative of the tautological
/// form along a base direction: componentwise -adj(DI) . gamma(z) over
/// det(DI). The alpha_i division of the lambda_i decomposition cancels
/// against lambda_i = alpha_i dz (x) e_i, so these are dz-frame coefficients.
struct SwDerivativeExpr {
  const GroupContext* ctx = nullptr;
  Deformation gamma;
  PolyMatrix numerator;   // -adj(DI), exact
  MultiPoly denominator;  // det(DI), exact

  // Unguarded numeric evaluation at a fiber point.
  CotangentValue evaluate(Complex z, const Eigen::VectorXcd& alpha) const;
};

SwDerivativeExpr sw_derivative_expr(const GroupContext& ctx, Deformation gamma);

// Guarded evaluation: refuses |det DI(alpha)| <= the discriminant guard
// (route such points through holomorphy_probe instead).
CotangentValue sw_derivative_at(const CameralChart& chart, const Deformation& gamma, Complex z,
                                const Eigen::VectorXcd& alpha);

// Same value without the proximity guard; for contour machinery that works
// deliberately close to ramification.
CotangentValue sw_value_unguarded(const CameralChart& chart, const Deformation& gamma, Complex z,
                                  const Eigen::VectorXcd& alpha);

// Independent derivative along the deformation: direct linear solve
// DI(alpha) . delta = gamma(z).
CotangentValue gm_oracle_linear(const CameralChart& chart, const Deformation& gamma, Complex z,
                                const Eigen::VectorXcd& alpha);

// Independent derivative by central finite differences of the tracked
// solution: alpha(z; beta +- eps*gamma) via Newton from alpha. `eps` must
// lie in [1e-8, 1e-4]; it is then scaled by the local beta magnitude.
CotangentValue gm_oracle_fd(const CameralChart& chart, const Deformation& gamma, Complex z,
                            const Eigen::VectorXcd& alpha, double eps = kDefaultFdStep);

// Max over group elements and sheets of | value(w.alpha) - w.value(alpha) |.
double equivariance_check(const CameralChart& chart, const Deformation& gamma,
                          const FiberSet& fiber);

enum class ProbeNumerator {
  kAdjugate,           // the engine's numerator
  kAdjugateTranspose,  // negative control
};

/// Boundedness certificate at a ramification point: section values in the
/// d(alpha_k) frame on shrinking circles, with the max modulus per radius.
struct ProbeReport {
  Complex branch_z;
  RamificationPoint ram;
  std::vector<double> radii;       // descending
  std::vector<double> max_moduli;  // one per radius
  bool pass = false;
};

// Evaluates the engine value times dz/d(alpha_k) (kernel frame factor) on
// circles |w| = r, r/2, r/4 and passes iff the max modulus never grows by
// more than 5% when the radius halves. Default radii start from
// suggest_frame_radius.
ProbeReport holomorphy_probe(const CameralChart& chart, const Deformation& gamma, Complex branch_z,
                             std::vector<double> radii = {},
                             ProbeNumerator mode = ProbeNumerator::kAdjugate,
                             std::uint64_t seed = 0x5eed5eedULL);

}  // namespace cameral
