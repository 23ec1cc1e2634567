#include "cameral/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cameral/errors.hpp"

namespace cameral {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

PairingSpec default_pairing(const WeylGroup& weyl) {
  const int l = static_cast<int>(weyl.elements.front().rows());
  IntMatrix sum = IntMatrix::Zero(l, l);
  for (const auto& w : weyl.elements) sum += w.transpose() * w;
  std::int64_t g = 0;
  for (int r = 0; r < l; ++r)
    for (int c = 0; c < l; ++c) g = gcd64(g, sum(r, c));
  if (g > 1) sum /= g;
  PairingSpec pairing{sum};
  if (!pairing_is_invariant(pairing, weyl))
    throw NumericalError("default_pairing: averaged form is not W-invariant");
  return pairing;
}

bool pairing_is_invariant(const PairingSpec& pairing, const WeylGroup& weyl) {
  for (const auto& w : weyl.elements)
    if (IntMatrix(w.transpose() * pairing.b * w) != pairing.b) return false;
  return true;
}

Complex res2_contour(const std::function<Complex(Complex)>& f_dw2, double r, int nodes) {
  Complex acc(0.0);
  for (int j = 0; j < nodes; ++j) {
    const Complex w = std::polar(r, kTwoPi * j / nodes);
    acc += w * w * f_dw2(w);
  }
  return acc / static_cast<double>(nodes);
}

Complex res2_at(const CameralChart& chart, const RamificationPoint& ram,
                const std::function<Complex(const CurvePoint&)>& f_dw2, double r, int nodes) {
  double sample_scale = 0.0;
  auto eval = [&](double radius) {
    const std::vector<CurvePoint> circle = trace_frame_circle(chart, ram, radius, nodes);
    Complex acc(0.0);
    for (const CurvePoint& cp : circle) {
      const Complex term = cp.w * cp.w * f_dw2(cp);
      sample_scale = std::max(sample_scale, std::abs(term));
      acc += term;
    }
    return acc / static_cast<double>(nodes);
  };
  const Complex coarse = eval(r);
  const Complex fine = eval(r / 2.0);
  const double scale = std::max({std::abs(coarse), std::abs(fine), 1e-12 * (1.0 + sample_scale)});
  if (std::abs(coarse - fine) > tol::kRes * scale)
    throw NumericalError("res2_at: residue failed the r-stability check");
  return fine;
}

CubicValue cubic(const CameralChart& chart, const Deformation& g1, const Deformation& g2,
                 const Deformation& g3, const PairingSpec& pairing, std::uint64_t seed) {
  chart.require_usable();
  const GroupContext& ctx = chart.ctx();
  for (const Deformation* g : {&g1, &g2, &g3})
    if (static_cast<int>(g->gamma.size()) != chart.rank())
      throw ValidationError("cubic: deformation arity mismatch");
  if (pairing.b.rows() != chart.rank() || pairing.b.cols() != chart.rank())
    throw ValidationError("cubic: pairing shape mismatch");

  const RationalFunction log_deriv =
      log_derivative_along(ctx.invariants, ctx.discriminant, chart.beta(), g1.gamma);
  const Eigen::MatrixXcd b = pairing.as_complex();

  CubicValue result;
  result.value = Complex(0.0);
  for (const Complex branch_z : chart.branch_points()) {
    const std::vector<RamificationPoint> cluster = ramification_cluster(chart, branch_z, seed);
    for (const RamificationPoint& m : cluster) {
      const double r = suggest_frame_radius(chart, m);
      auto integrand = [&](const CurvePoint& cp) {
        const Eigen::VectorXcd v2 = sw_value_unguarded(chart, g2, cp.z, cp.alpha).coeffs;
        const Eigen::VectorXcd v3 = sw_value_unguarded(chart, g3, cp.z, cp.alpha).coeffs;
        const Complex paired = v2.transpose() * (b * v3);
        return log_deriv.evaluate(cp.z) * paired * cp.dz_dak * cp.dz_dak;
      };
      CubicValue::Term term;
      term.branch_z = branch_z;
      term.cluster_id = m.cluster_id;
      term.contribution = res2_at(chart, m, integrand, r);
      result.value += term.contribution;
      result.per_ramification_terms.push_back(std::move(term));
    }
  }
  result.value *= 0.5;
  return result;
}

namespace {

// |gamma(z)|^2 / |beta(z)|: both sheets and the metric prefactor included.
struct MetricIntegrand {
  const CameralChart* chart;
  const Deformation* gamma;

  double operator()(Complex z) const {
    const Complex g = gamma->gamma[0].evaluate(z);
    const Complex bv = chart->beta()[0].evaluate(z);
    return std::norm(g) / std::abs(bv);
  }
};

struct DiskRegion {
  double radius;
  std::vector<Complex> holes;       // patch centres
  std::vector<double> hole_radius;  // patch radii
};

double dist_point_cell(Complex p, double cx, double cy, double h) {
  const double dx = std::max({cx - h - p.real(), 0.0, p.real() - (cx + h)});
  const double dy = std::max({cy - h - p.imag(), 0.0, p.imag() - (cy + h)});
  return std::hypot(dx, dy);
}

double max_dist_point_cell(Complex p, double cx, double cy, double h) {
  const double dx = std::max(std::abs(p.real() - (cx - h)), std::abs(p.real() - (cx + h)));
  const double dy = std::max(std::abs(p.imag() - (cy - h)), std::abs(p.imag() - (cy + h)));
  return std::hypot(dx, dy);
}

bool point_in_region(const DiskRegion& region, Complex z) {
  if (std::abs(z) > region.radius) return false;
  for (std::size_t j = 0; j < region.holes.size(); ++j)
    if (std::abs(z - region.holes[j]) < region.hole_radius[j]) return false;
  return true;
}

// 4-node Gauss-Legendre tensor rule on the cell.
double gauss_cell(const MetricIntegrand& f, double cx, double cy, double h) {
  static const double nodes[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                  0.8611363115940526};
  static const double weights[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                    0.3478548451374538};
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc += weights[i] * weights[j] * f(Complex(cx + h * nodes[i], cy + h * nodes[j]));
  return acc * h * h;
}

struct QuadState {
  MetricIntegrand f;
  DiskRegion region;
  std::vector<Complex> branch_points;
  int max_depth = 10;
  long long leaves = 0;
};

double quad_cell(QuadState& state, double cx, double cy, double h, int depth) {
  const Complex centre(cx, cy);
  const double cell_diam = 2.0 * h * 1.4142135623730951;

  // Entirely outside the outer disk, or entirely inside a patch: no mass.
  if (dist_point_cell(Complex(0, 0), cx, cy, h) > state.region.radius) return 0.0;
  for (std::size_t j = 0; j < state.region.holes.size(); ++j)
    if (max_dist_point_cell(state.region.holes[j], cx, cy, h) < state.region.hole_radius[j])
      return 0.0;

  bool interior = max_dist_point_cell(Complex(0, 0), cx, cy, h) <= state.region.radius;
  for (std::size_t j = 0; interior && j < state.region.holes.size(); ++j)
    if (dist_point_cell(state.region.holes[j], cx, cy, h) < state.region.hole_radius[j])
      interior = false;

  // Geometric refinement only (gamma-independent): near region boundaries
  // and near branch points.
  bool needs_split = !interior;
  for (const Complex bp : state.branch_points)
    if (dist_point_cell(bp, cx, cy, h) < 4.0 * cell_diam) needs_split = true;

  if (!needs_split && depth >= 3) {
    ++state.leaves;
    return gauss_cell(state.f, cx, cy, h);
  }
  if (depth < state.max_depth) {
    const double q = h / 2.0;
    double acc = 0.0;
    acc += quad_cell(state, cx - q, cy - q, q, depth + 1);
    acc += quad_cell(state, cx + q, cy - q, q, depth + 1);
    acc += quad_cell(state, cx - q, cy + q, q, depth + 1);
    acc += quad_cell(state, cx + q, cy + q, q, depth + 1);
    return acc;
  }
  // Smallest cells straddling a boundary: subsampled indicator average.
  ++state.leaves;
  constexpr int n = 5;
  double acc = 0.0;
  int inside = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex z(cx + h * (2.0 * (i + 0.5) / n - 1.0), cy + h * (2.0 * (j + 0.5) / n - 1.0));
      if (point_in_region(state.region, z)) {
        acc += state.f(z);
        ++inside;
      }
    }
  if (inside == 0) return 0.0;
  return (acc / (n * n)) * (2.0 * h) * (2.0 * h);
}

// Polar integral of f over the disk of radius rho about centre: the radial
// direction uses composite Simpson, the angle a trapezoid sum; node counts
// double until two successive values agree.
double patch_integral(const MetricIntegrand& f, Complex centre, double rho, double rel_tol) {
  auto value_at = [&](int n_r, int n_t) {
    double acc = 0.0;
    for (int i = 0; i <= n_r; ++i) {
      const double r = rho * i / n_r;
      double ring = 0.0;
      for (int j = 0; j < n_t; ++j)
        ring += f(centre + std::polar(r, kTwoPi * j / n_t));
      ring *= kTwoPi / n_t * r;
      const double simpson = (i == 0 || i == n_r) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      acc += simpson * ring;
    }
    return acc * (rho / n_r) / 3.0;
  };
  int n_r = 16;
  int n_t = 32;
  double prev = value_at(n_r, n_t);
  for (int round = 0; round < 5; ++round) {
    n_r *= 2;
    n_t *= 2;
    const double next = value_at(n_r, n_t);
    if (std::abs(next - prev) <= rel_tol * std::max(std::abs(next), 1e-300)) return next;
    prev = next;
  }
  return prev;
}

double metric_at_depth(const CameralChart& chart, const Deformation& gamma, double radius,
                       int max_depth, long long* leaves) {
  const MetricIntegrand f{&chart, &gamma};

  DiskRegion region;
  region.radius = radius;
  double patches = 0.0;
  const std::vector<Complex>& branch = chart.branch_points();
  for (std::size_t j = 0; j < branch.size(); ++j) {
    if (std::abs(branch[j]) >= radius) continue;
    double rho = 0.45 * (radius - std::abs(branch[j]));
    for (std::size_t k = 0; k < branch.size(); ++k)
      if (k != j) rho = std::min(rho, 0.45 * std::abs(branch[j] - branch[k]));
    rho = std::min(rho, radius / 2.0);
    if (rho <= 0.0) continue;
    region.holes.push_back(branch[j]);
    region.hole_radius.push_back(rho);
    patches += patch_integral(f, branch[j], rho, 0.1 * tol::kQuad);
  }

  QuadState state{f, region, branch, max_depth, 0};
  const double rest = quad_cell(state, 0.0, 0.0, radius, 0);
  if (leaves) *leaves = state.leaves;
  return patches + rest;
}

}  // namespace

Sl2MetricResult sk_metric_sl2(const CameralChart& chart, const Deformation& gamma, double radius,
                              int max_depth) {
  if (chart.group() != GroupName::A1)
    throw ValidationError("sk_metric_sl2: only the rank-one cover carries this metric here");
  if (static_cast<int>(gamma.gamma.size()) != 1)
    throw ValidationError("sk_metric_sl2: deformation arity mismatch");
  if (radius <= 0.0) throw ValidationError("sk_metric_sl2: radius must be positive");
  chart.require_usable();

  Sl2MetricResult result;
  if (gamma.gamma[0].is_zero()) {
    result.value = 0.0;
    result.converged = true;
    return result;
  }
  long long leaves = 0;
  const double coarse = metric_at_depth(chart, gamma, radius, max_depth, nullptr);
  const double fine = metric_at_depth(chart, gamma, radius, max_depth + 1, &leaves);
  result.value = fine;
  result.refinement_delta = std::abs(fine - coarse);
  result.converged = result.refinement_delta <= tol::kQuad * std::max(std::abs(fine), 1e-300);
  result.leaf_cells = leaves;
  if (!result.converged)
    throw NumericalError("sk_metric_sl2: mesh refinement did not converge to tolerance");
  return result;
}

}  // namespace cameral
