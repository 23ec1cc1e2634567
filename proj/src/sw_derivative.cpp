#include "cameral/sw_derivative.hpp"

#include <algorithm>
#include <cmath>

#include "cameral/errors.hpp"

namespace cameral {

namespace {

Eigen::VectorXcd gamma_at(const Deformation& gamma, Complex z) {
  Eigen::VectorXcd g(static_cast<int>(gamma.gamma.size()));
  for (int k = 0; k < g.size(); ++k) g(k) = gamma.gamma[k].evaluate(z);
  return g;
}

void check_arity(const CameralChart& chart, const Deformation& gamma) {
  if (static_cast<int>(gamma.gamma.size()) != chart.rank())
    throw ValidationError("deformation arity does not match the group rank");
}

}  // namespace

CotangentValue SwDerivativeExpr::evaluate(Complex z, const Eigen::VectorXcd& alpha) const {
  const Eigen::MatrixXcd adj = ctx->adj_c.eval(alpha);
  const Complex det = ctx->det_c.eval(alpha);
  CotangentValue value;
  value.coeffs = -(adj * gamma_at(gamma, z)) / det;
  return value;
}

SwDerivativeExpr sw_derivative_expr(const GroupContext& ctx, Deformation gamma) {
  if (static_cast<int>(gamma.gamma.size()) != ctx.rank())
    throw ValidationError("deformation arity does not match the group rank");
  SwDerivativeExpr expr;
  expr.ctx = &ctx;
  expr.gamma = std::move(gamma);
  PolyMatrix neg_adj = ctx.invariants.jac_adj;
  for (int r = 0; r < neg_adj.size(); ++r)
    for (int c = 0; c < neg_adj.size(); ++c) neg_adj.at(r, c) = -neg_adj.at(r, c);
  expr.numerator = std::move(neg_adj);
  expr.denominator = ctx.invariants.jac_det;
  return expr;
}

CotangentValue sw_value_unguarded(const CameralChart& chart, const Deformation& gamma, Complex z,
                                  const Eigen::VectorXcd& alpha) {
  check_arity(chart, gamma);
  const GroupContext& ctx = chart.ctx();
  CotangentValue value;
  value.coeffs = -(ctx.adj_c.eval(alpha) * gamma_at(gamma, z)) / ctx.det_c.eval(alpha);
  return value;
}

CotangentValue sw_derivative_at(const CameralChart& chart, const Deformation& gamma, Complex z,
                                const Eigen::VectorXcd& alpha) {
  check_arity(chart, gamma);
  if (std::abs(chart.ctx().det_c.eval(alpha)) <= tol::kDiscGuard)
    throw NumericalError(
        "sw_derivative_at: too close to ramification (use holomorphy_probe instead)");
  return sw_value_unguarded(chart, gamma, z, alpha);
}

CotangentValue gm_oracle_linear(const CameralChart& chart, const Deformation& gamma, Complex z,
                                const Eigen::VectorXcd& alpha) {
  check_arity(chart, gamma);
  const GroupContext& ctx = chart.ctx();
  CotangentValue value;
  value.coeffs = ctx.jac_c.eval(alpha).partialPivLu().solve(gamma_at(gamma, z));
  return value;
}

CotangentValue gm_oracle_fd(const CameralChart& chart, const Deformation& gamma, Complex z,
                            const Eigen::VectorXcd& alpha, double eps) {
  check_arity(chart, gamma);
  if (eps < 1e-8 || eps > 1e-4)
    throw ValidationError("gm_oracle_fd: eps must lie in [1e-8, 1e-4]");
  const GroupContext& ctx = chart.ctx();
  const Eigen::VectorXcd beta = chart.beta_at(z);
  const Eigen::VectorXcd dir = gamma_at(gamma, z);
  const double scaled = eps * std::max(1.0, beta.cwiseAbs().maxCoeff());

  // The difference quotient divides by eps, so the endpoints are solved to
  // near machine accuracy.
  Eigen::VectorXcd plus = alpha;
  Eigen::VectorXcd minus = alpha;
  if (!newton_refine(ctx, plus, beta + scaled * dir, 1e-14, 40) ||
      !newton_refine(ctx, minus, beta - scaled * dir, 1e-14, 40))
    throw NumericalError("gm_oracle_fd: Newton failed to re-converge (eps too large near "
                         "ramification)");
  CotangentValue value;
  value.coeffs = (plus - minus) / (2.0 * scaled);
  return value;
}

double equivariance_check(const CameralChart& chart, const Deformation& gamma,
                          const FiberSet& fiber) {
  check_arity(chart, gamma);
  const GroupContext& ctx = chart.ctx();
  double defect = 0.0;
  for (const auto& alpha : fiber.points) {
    const Eigen::VectorXcd value = sw_value_unguarded(chart, gamma, fiber.z, alpha).coeffs;
    for (const auto& w : ctx.weyl.elements) {
      const Eigen::VectorXcd moved = apply(w, alpha);
      const Eigen::VectorXcd value_moved = sw_value_unguarded(chart, gamma, fiber.z, moved).coeffs;
      const Eigen::VectorXcd expect = w.cast<Complex>() * value;
      defect = std::max(defect, (value_moved - expect).cwiseAbs().maxCoeff());
    }
  }
  return defect;
}

ProbeReport holomorphy_probe(const CameralChart& chart, const Deformation& gamma, Complex branch_z,
                             std::vector<double> radii, ProbeNumerator mode, std::uint64_t seed) {
  check_arity(chart, gamma);
  const GroupContext& ctx = chart.ctx();
  ProbeReport report;
  report.branch_z = branch_z;
  report.ram = locate_ramification(chart, branch_z, seed);

  if (radii.empty()) {
    const double r0 = suggest_frame_radius(chart, report.ram);
    radii = {r0, r0 / 2.0, r0 / 4.0};
  }
  std::sort(radii.begin(), radii.end(), std::greater<double>());

  // If the widest circle cannot be traced, shrink the whole ladder.
  for (int shrink = 0; shrink < 6; ++shrink) {
    try {
      trace_frame_circle(chart, report.ram, radii.front(), 8);
      break;
    } catch (const NumericalError&) {
      for (double& r : radii) r *= 0.5;
    }
  }

  report.radii = radii;
  for (const double r : radii) {
    const std::vector<CurvePoint> circle =
        trace_frame_circle(chart, report.ram, r, kContourNodes);
    double max_mod = 0.0;
    for (const CurvePoint& cp : circle) {
      const Eigen::MatrixXcd adj = ctx.adj_c.eval(cp.alpha);
      const Complex det = ctx.det_c.eval(cp.alpha);
      const Eigen::VectorXcd g = Eigen::VectorXcd::NullaryExpr(
          chart.rank(), [&](Eigen::Index i) { return gamma.gamma[i].evaluate(cp.z); });
      Eigen::VectorXcd numer =
          (mode == ProbeNumerator::kAdjugate) ? Eigen::VectorXcd(adj * g)
                                              : Eigen::VectorXcd(adj.transpose() * g);
      const Eigen::VectorXcd frame_value = (-numer / det) * cp.dz_dak;
      max_mod = std::max(max_mod, frame_value.cwiseAbs().maxCoeff());
    }
    report.max_moduli.push_back(max_mod);
  }

  report.pass = true;
  for (std::size_t i = 0; i + 1 < report.max_moduli.size(); ++i)
    if (report.max_moduli[i + 1] > tol::kProbeGrowth * report.max_moduli[i]) report.pass = false;
  return report;
}

}  // namespace cameral
