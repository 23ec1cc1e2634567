#include "cameral/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "cameral/errors.hpp"

namespace cameral {

namespace {

bool lex_less(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
    if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
  }
  return false;
}

double min_pairwise_distance(const std::vector<Eigen::VectorXcd>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, (pts[i] - pts[j]).cwiseAbs().maxCoeff());
  return best;
}

// Distance from point p to the segment [a, b] in the complex plane.
double point_segment_distance(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

// Predictor-corrector continuation along the straight segment from c0 to c1
// in the invariant base. Returns false on discriminant proximity or step
// underflow.
bool track_linear_target(const GroupContext& ctx, Eigen::VectorXcd& alpha,
                         const Eigen::VectorXcd& c0, const Eigen::VectorXcd& c1) {
  const Eigen::VectorXcd dc = c1 - c0;
  double t = 0.0;
  double h = track::kInitialStep;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    const Eigen::MatrixXcd jac = ctx.jac_c.eval(alpha);
    if (std::abs(jac.determinant()) <= tol::kDiscGuard) return false;
    const Eigen::VectorXcd predicted = alpha + h * jac.partialPivLu().solve(dc);
    Eigen::VectorXcd corrected = predicted;
    if (newton_refine(ctx, corrected, c0 + (t + h) * dc, tol::kNewton, track::kMaxNewtonIters)) {
      alpha = corrected;
      t += h;
      h = std::min(2.0 * h, track::kMaxStep);
    } else {
      h *= 0.5;
      if (h < track::kMinStep) return false;
    }
  }
  return true;
}

// Continuation of one fiber point along a z-segment of the chart.
bool track_z_segment(const CameralChart& chart, Eigen::VectorXcd& alpha, Complex z_from,
                     Complex z_to) {
  const GroupContext& ctx = chart.ctx();
  const Complex dz = z_to - z_from;
  double t = 0.0;
  double h = track::kInitialStep;
  while (t < 1.0) {
    h = std::min(h, 1.0 - t);
    const Eigen::MatrixXcd jac = ctx.jac_c.eval(alpha);
    if (std::abs(jac.determinant()) <= tol::kDiscGuard) return false;
    const Eigen::VectorXcd dc = chart.beta_prime_at(z_from + t * dz) * dz;
    const Eigen::VectorXcd predicted = alpha + h * jac.partialPivLu().solve(dc);
    Eigen::VectorXcd corrected = predicted;
    if (newton_refine(ctx, corrected, chart.beta_at(z_from + (t + h) * dz), tol::kNewton,
                      track::kMaxNewtonIters)) {
      alpha = corrected;
      t += h;
      h = std::min(2.0 * h, track::kMaxStep);
    } else {
      h *= 0.5;
      if (h < track::kMinStep) return false;
    }
  }
  return true;
}

// (-beta'(z) | DI(alpha)): the l x (l+1) matrix whose kernel carries the
// tangent direction (dz, dalpha) of the curve.
Eigen::MatrixXcd tangency_matrix(const CameralChart& chart, Complex z,
                                 const Eigen::VectorXcd& alpha) {
  const int l = chart.rank();
  Eigen::MatrixXcd s(l, l + 1);
  s.col(0) = -chart.beta_prime_at(z);
  s.block(0, 1, l, l) = chart.ctx().jac_c.eval(alpha);
  return s;
}

Eigen::MatrixXcd drop_column(const Eigen::MatrixXcd& m, int col) {
  Eigen::MatrixXcd out(m.rows(), m.cols() - 1);
  int c = 0;
  for (int j = 0; j < m.cols(); ++j) {
    if (j == col) continue;
    out.col(c++) = m.col(j);
  }
  return out;
}

// Index of the positive root with the smallest absolute value at alpha.
int argmin_root(const RootSystem& rs, const Eigen::VectorXcd& alpha, double* min_value = nullptr) {
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    const double v = std::abs(root_value(rs.positive_roots[r], alpha));
    if (v < best_val) {
      best_val = v;
      best = r;
    }
  }
  if (min_value) *min_value = best_val;
  return best;
}

// Newton on the extended system [I(alpha) - beta(z); root(alpha)] = 0 that
// pins the ramification point above a branch point.
bool refine_ramification(const CameralChart& chart, int root_index, Complex& z,
                         Eigen::VectorXcd& alpha) {
  const GroupContext& ctx = chart.ctx();
  const int l = chart.rank();
  const IntVector& root = ctx.root_system.positive_roots[root_index];
  for (int it = 0; it < 60; ++it) {
    Eigen::VectorXcd f(l + 1);
    f.head(l) = ctx.eval_gens(alpha) - chart.beta_at(z);
    f(l) = root_value(root, alpha);
    const double scale = 1.0 + chart.beta_at(z).cwiseAbs().maxCoeff();
    if (f.cwiseAbs().maxCoeff() <= 1e-13 * scale) return true;
    Eigen::MatrixXcd jac = Eigen::MatrixXcd::Zero(l + 1, l + 1);
    jac.block(0, 0, l, 1) = -chart.beta_prime_at(z);
    jac.block(0, 1, l, l) = ctx.jac_c.eval(alpha);
    for (int i = 0; i < l; ++i) jac(l, 1 + i) = static_cast<double>(root(i));
    const Eigen::VectorXcd step = jac.partialPivLu().solve(f);
    z -= step(0);
    alpha -= step.tail(l);
  }
  return false;
}

// Picks the frame variable k with the largest deleted-column minor of the
// tangency matrix; returns false if all minors are numerically degenerate.
bool select_frame(const CameralChart& chart, Complex z, const Eigen::VectorXcd& alpha, int& k_out,
                  double& det_out) {
  const Eigen::MatrixXcd s = tangency_matrix(chart, z, alpha);
  const int l = chart.rank();
  double best = -1.0;
  int best_k = -1;
  for (int k = 0; k < l; ++k) {
    const double d = std::abs(drop_column(s, k + 1).determinant());
    if (d > best) {
      best = d;
      best_k = k;
    }
  }
  double scale = s.cwiseAbs().maxCoeff();
  double floor = tol::kFrameFloor * std::pow(std::max(scale, 1e-30), l);
  k_out = best_k;
  det_out = best;
  return best > floor;
}

// Newton for a curve point with alpha_k held fixed; unknowns are z and the
// remaining alpha components. The Jacobian is the M_k minor pattern.
bool solve_with_frame_fixed(const CameralChart& chart, int k, Complex& z,
                            Eigen::VectorXcd& alpha) {
  const GroupContext& ctx = chart.ctx();
  const int l = chart.rank();
  for (int it = 0; it < 40; ++it) {
    const Eigen::VectorXcd f = ctx.eval_gens(alpha) - chart.beta_at(z);
    const double scale = 1.0 + chart.beta_at(z).cwiseAbs().maxCoeff();
    if (f.cwiseAbs().maxCoeff() <= 1e-12 * scale) return true;
    const Eigen::MatrixXcd s = tangency_matrix(chart, z, alpha);
    const Eigen::MatrixXcd mk = drop_column(s, k + 1);
    const Eigen::VectorXcd step = mk.partialPivLu().solve(f);
    z -= step(0);
    int c = 1;
    for (int i = 0; i < l; ++i) {
      if (i == k) continue;
      alpha(i) -= step(c++);
    }
  }
  return false;
}

}  // namespace

CameralChart::CameralChart(GroupName group, std::vector<UniPoly> beta, double rmin_factor)
    : ctx_(&group_context(group)), beta_(std::move(beta)) {
  const int l = ctx_->rank();
  if (static_cast<int>(beta_.size()) != l)
    throw ValidationError("chart: expected " + std::to_string(l) + " coefficient polynomials, got " +
                          std::to_string(beta_.size()));
  for (const auto& b : beta_) beta_prime_.push_back(b.derivative());

  disc_composed_ = compose(ctx_->discriminant.in_invariants, beta_);
  if (disc_composed_.is_zero() || disc_composed_.max_coeff_norm() < 1e-300) {
    simple_ = false;
    branch_issue_ = "discriminant vanishes identically on the chart";
  } else {
    branch_points_ = disc_composed_.roots();
    std::sort(branch_points_.begin(), branch_points_.end(), [](Complex a, Complex b) {
      if (a.real() != b.real()) return a.real() < b.real();
      return a.imag() < b.imag();
    });
    const UniPoly dp = disc_composed_.derivative();
    const int deg = disc_composed_.degree();
    const double coeff_scale = disc_composed_.max_coeff_norm();
    for (const Complex r : branch_points_) {
      const double local = coeff_scale * std::pow(1.0 + std::abs(r), std::max(deg - 1, 0));
      if (std::abs(dp.evaluate(r)) <= tol::kSimpleRoot * local) {
        simple_ = false;
        std::ostringstream os;
        os << "branch point near (" << r.real() << ", " << r.imag() << ") is not a simple zero";
        branch_issue_ = os.str();
        break;
      }
    }
    for (std::size_t i = 0; simple_ && i + 1 < branch_points_.size(); ++i) {
      for (std::size_t j = i + 1; j < branch_points_.size(); ++j) {
        if (std::abs(branch_points_[i] - branch_points_[j]) <
            1e-9 * (1.0 + std::abs(branch_points_[i]))) {
          simple_ = false;
          branch_issue_ = "coincident branch points";
          break;
        }
      }
    }
  }

  min_separation_ = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < branch_points_.size(); ++i)
    for (std::size_t j = i + 1; j < branch_points_.size(); ++j)
      min_separation_ = std::min(min_separation_, std::abs(branch_points_[i] - branch_points_[j]));
  if (!std::isfinite(min_separation_)) min_separation_ = 1.0;  // fewer than two branch points
  r_min_ = rmin_factor * min_separation_;
}

Eigen::VectorXcd CameralChart::beta_at(Complex z) const {
  Eigen::VectorXcd out(rank());
  for (int k = 0; k < rank(); ++k) out(k) = beta_[k].evaluate(z);
  return out;
}

Eigen::VectorXcd CameralChart::beta_prime_at(Complex z) const {
  Eigen::VectorXcd out(rank());
  for (int k = 0; k < rank(); ++k) out(k) = beta_prime_[k].evaluate(z);
  return out;
}

double CameralChart::distance_to_branch(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const Complex b : branch_points_) best = std::min(best, std::abs(z - b));
  return best;
}

void CameralChart::require_usable() const {
  if (!simple_) throw GenericityError("chart rejected: " + branch_issue_);
}

bool newton_refine(const GroupContext& ctx, Eigen::VectorXcd& alpha,
                   const Eigen::VectorXcd& target, double tol, int max_iters) {
  const double scale = 1.0 + target.cwiseAbs().maxCoeff();
  for (int it = 0; it < max_iters; ++it) {
    const Eigen::VectorXcd f = ctx.eval_gens(alpha) - target;
    if (f.cwiseAbs().maxCoeff() <= tol * scale) return true;
    const Eigen::MatrixXcd jac = ctx.jac_c.eval(alpha);
    alpha -= jac.partialPivLu().solve(f);
  }
  return (ctx.eval_gens(alpha) - target).cwiseAbs().maxCoeff() <= tol * scale;
}

FiberSet solve_fiber(const CameralChart& chart, Complex z, std::uint64_t seed) {
  chart.require_usable();
  if (chart.distance_to_branch(z) < chart.r_min())
    throw ValidationError("solve_fiber: z is within r_min of a branch point");
  const GroupContext& ctx = chart.ctx();
  const int l = chart.rank();
  const int order = ctx.weyl.order();
  const Eigen::VectorXcd target = chart.beta_at(z);

  for (int attempt = 0; attempt <= track::kMaxSeedRetries; ++attempt) {
    std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(attempt));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::VectorXcd start(l);
    for (int i = 0; i < l; ++i) start(i) = Complex(unit(rng) + 2.0, unit(rng));
    if (std::abs(ctx.jac_c.eval(start).determinant()) <= 1e-3) continue;
    const std::vector<Eigen::VectorXcd> orbit = weyl_orbit(ctx.weyl, start);
    if (static_cast<int>(orbit.size()) != order) continue;
    const Eigen::VectorXcd c0 = ctx.eval_gens(start);

    std::vector<Eigen::VectorXcd> points;
    points.reserve(order);
    bool ok = true;
    for (const auto& p : orbit) {
      Eigen::VectorXcd q = p;
      if (!track_linear_target(ctx, q, c0, target) || !newton_refine(ctx, q, target)) {
        ok = false;
        break;
      }
      // Polish to an absolute residual.
      for (int it = 0;
           it < 4 && (ctx.eval_gens(q) - target).cwiseAbs().maxCoeff() > tol::kNewton; ++it)
        q -= ctx.jac_c.eval(q).partialPivLu().solve(ctx.eval_gens(q) - target);
      points.push_back(std::move(q));
    }
    if (!ok) continue;
    if (min_pairwise_distance(points) <= tol::kOrbit) continue;  // sheets collided: new path

    std::sort(points.begin(), points.end(), lex_less);
    FiberSet fiber;
    fiber.z = z;
    fiber.points = std::move(points);
    fiber.min_pair_distance = min_pairwise_distance(fiber.points);
    fiber.max_residual = 0.0;
    fiber.min_root_value = std::numeric_limits<double>::infinity();
    for (const auto& p : fiber.points) {
      fiber.max_residual =
          std::max(fiber.max_residual, (ctx.eval_gens(p) - target).cwiseAbs().maxCoeff());
      double mv = 0.0;
      argmin_root(ctx.root_system, p, &mv);
      fiber.min_root_value = std::min(fiber.min_root_value, mv);
    }
    return fiber;
  }
  throw NumericalError("solve_fiber: continuation failed after seed retries");
}

std::vector<int> track_loop(const CameralChart& chart, const FiberSet& base,
                            const std::vector<Complex>& loop) {
  chart.require_usable();
  if (loop.size() < 2) throw ValidationError("track_loop: loop needs at least two vertices");
  std::vector<Complex> path = loop;
  if (std::abs(path.front() - base.z) > 1e-9 * (1.0 + std::abs(base.z)))
    throw ValidationError("track_loop: loop must start at the base fiber's z");
  if (std::abs(path.back() - path.front()) > 1e-9 * (1.0 + std::abs(base.z)))
    path.push_back(path.front());
  for (std::size_t s = 0; s + 1 < path.size(); ++s)
    for (const Complex b : chart.branch_points())
      if (point_segment_distance(b, path[s], path[s + 1]) < chart.r_min())
        throw ValidationError("track_loop: loop passes within r_min of a branch point");

  std::vector<Eigen::VectorXcd> points = base.points;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    for (auto& p : points) {
      if (!track_z_segment(chart, p, path[s], path[s + 1]))
        throw NumericalError("track_loop: sheet collision (step size underflow)");
    }
  }

  const int n = static_cast<int>(points.size());
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((points[i] - base.points[j]).cwiseAbs().maxCoeff() <= tol::kOrbit) {
        if (used[j]) throw NumericalError("track_loop: two sheets matched the same start point");
        perm[i] = j;
        used[j] = true;
        break;
      }
    }
    if (perm[i] < 0) throw NumericalError("track_loop: tracked sheet matches no start point");
  }
  return perm;
}

GenusReport genus_cameral(long long g_x, const RootSystem& group) {
  if (g_x < 2) throw ValidationError("genus_cameral: base genus must be >= 2");
  const WeylGroup weyl = weyl_closure(group.simple_reflections);
  const long long order = weyl.order();
  const long long roots = group.num_roots();
  GenusReport report;
  report.branch_count = roots * (2 * g_x - 2);
  report.ramification_count = report.branch_count * order / 2;
  report.genus = order * (g_x - 1) + 1 + roots * (g_x - 1) * order / 2;
  return report;
}

RamificationPoint locate_ramification(const CameralChart& chart, Complex branch_z,
                                      std::uint64_t seed) {
  chart.require_usable();
  const GroupContext& ctx = chart.ctx();
  const double offset = 0.05 * chart.min_separation();

  RamificationPoint rp;
  bool refined = false;
  for (int dir = 0; dir < 4 && !refined; ++dir) {
    const Complex z1 = branch_z + offset * std::polar(1.0, 0.25 + 1.5707963267948966 * dir);
    FiberSet fiber;
    try {
      fiber = solve_fiber(chart, z1, seed);
    } catch (const NumericalError&) {
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXcd best_alpha;
    int best_root = 0;
    for (const auto& p : fiber.points) {
      double mv = 0.0;
      const int r = argmin_root(ctx.root_system, p, &mv);
      if (mv < best) {
        best = mv;
        best_alpha = p;
        best_root = r;
      }
    }
    Complex z = z1;
    Eigen::VectorXcd alpha = best_alpha;
    if (!refine_ramification(chart, best_root, z, alpha)) continue;
    if (std::abs(z - branch_z) > 0.5 * chart.min_separation()) continue;
    rp.z = z;
    rp.alpha = alpha;
    rp.vanishing_root = argmin_root(ctx.root_system, alpha);
    refined = true;
  }
  if (!refined)
    throw NumericalError("locate_ramification: could not refine the ramification point");
  if (!select_frame(chart, rp.z, rp.alpha, rp.frame_var, rp.frame_det))
    throw GenericityError("locate_ramification: no frame variable with |det M_k| above floor "
                          "(non-simple ramification)");
  return rp;
}

std::vector<RamificationPoint> ramification_cluster(const CameralChart& chart, Complex branch_z,
                                                    std::uint64_t seed) {
  const GroupContext& ctx = chart.ctx();
  const RamificationPoint base = locate_ramification(chart, branch_z, seed);

  std::vector<Eigen::VectorXcd> reps;
  for (const auto& w : ctx.weyl.elements) {
    Eigen::VectorXcd image = apply(w, base.alpha);
    bool fresh = true;
    for (const auto& r : reps)
      if ((image - r).cwiseAbs().maxCoeff() <= tol::kOrbit) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(std::move(image));
  }
  if (static_cast<int>(reps.size()) != ctx.weyl.order() / 2)
    throw GenericityError("ramification_cluster: orbit size != |W|/2 (non-simple ramification)");
  std::sort(reps.begin(), reps.end(), lex_less);

  std::vector<RamificationPoint> cluster;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    RamificationPoint rp;
    rp.z = base.z;
    rp.alpha = reps[i];
    rp.vanishing_root = argmin_root(ctx.root_system, rp.alpha);
    if (!refine_ramification(chart, rp.vanishing_root, rp.z, rp.alpha))
      throw NumericalError("ramification_cluster: cluster point did not refine");
    if (!select_frame(chart, rp.z, rp.alpha, rp.frame_var, rp.frame_det))
      throw GenericityError("ramification_cluster: degenerate frame at cluster point");
    rp.cluster_id = static_cast<int>(i);
    cluster.push_back(std::move(rp));
  }
  return cluster;
}

std::vector<CurvePoint> trace_frame_circle(const CameralChart& chart, const RamificationPoint& m,
                                           double radius, int samples) {
  const int k = m.frame_var;
  std::vector<CurvePoint> out;
  out.reserve(samples);
  Complex z_prev = m.z;
  Eigen::VectorXcd alpha_prev = m.alpha;
  const double two_pi = 6.283185307179586476925286766559;
  for (int j = 0; j <= samples; ++j) {
    const Complex w = std::polar(radius, two_pi * j / samples);
    Complex z = z_prev;
    Eigen::VectorXcd alpha = alpha_prev;
    alpha(k) = m.alpha(k) + w;
    if (!solve_with_frame_fixed(chart, k, z, alpha))
      throw NumericalError("trace_frame_circle: curve point did not converge");
    if (j == samples) {
      if ((alpha - out.front().alpha).cwiseAbs().maxCoeff() >
          1e-6 * (1.0 + alpha.cwiseAbs().maxCoeff()))
        throw NumericalError("trace_frame_circle: circle did not close");
      break;
    }
    CurvePoint cp;
    cp.w = w;
    cp.z = z;
    cp.alpha = alpha;
    cp.dz_dak = frame_slope(chart, z, alpha, k);
    out.push_back(std::move(cp));
    z_prev = z;
    alpha_prev = alpha;
  }
  return out;
}

Complex frame_slope(const CameralChart& chart, Complex z, const Eigen::VectorXcd& alpha, int k) {
  const Eigen::MatrixXcd s = tangency_matrix(chart, z, alpha);
  const Complex v0 = drop_column(s, 0).determinant();
  Complex vk = drop_column(s, k + 1).determinant();
  if ((k + 1) % 2 == 1) vk = -vk;
  return v0 / vk;
}

double suggest_frame_radius(const CameralChart& chart, const RamificationPoint& m) {
  const double pilot = 1e-4 * (1.0 + m.alpha.cwiseAbs().maxCoeff());
  Complex z_sum(0.0);
  for (const double sign : {1.0, -1.0}) {
    Complex z = m.z;
    Eigen::VectorXcd alpha = m.alpha;
    alpha(m.frame_var) += sign * pilot;
    if (!solve_with_frame_fixed(chart, m.frame_var, z, alpha))
      throw NumericalError("suggest_frame_radius: pilot point did not converge");
    z_sum += z;
  }
  const double curvature = std::abs(z_sum - 2.0 * m.z) / (2.0 * pilot * pilot);

  double dz_min = std::numeric_limits<double>::infinity();
  for (const Complex b : chart.branch_points())
    if (std::abs(b - m.z) > 1e-9 * (1.0 + std::abs(m.z)))
      dz_min = std::min(dz_min, std::abs(b - m.z));
  double r = 1e-2;
  if (std::isfinite(dz_min) && curvature > 0.0)
    r = std::min(r, 0.1 * std::sqrt(dz_min / curvature));
  return r;
}

}  // namespace cameral
