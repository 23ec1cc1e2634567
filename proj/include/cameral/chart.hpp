#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "cameral/invariants.hpp"
#include "cameral/numerics.hpp"
#include "cameral/unipoly.hpp"

namespace cameral {

/// A tangent direction of the base, restricted to the chart: the
/// coefficient polynomials gamma_k(z), one per invariant degree.
struct Deformation {
  std::vector<UniPoly> gamma;
};

/// One solved fiber: all |W| solutions alpha of I(alpha) = beta(z),
/// indexed by sheet label (lexicographic at the solve point).
struct FiberSet {
  Complex z;
  std::vector<Eigen::VectorXcd> points;
  double max_residual = 0.0;
  double min_root_value = 0.0;     // min over points and positive roots
  double min_pair_distance = 0.0;  // min pairwise distance between points
};

/// A base point of the Hitchin base restricted to an affine chart: the
/// coefficient vector beta(z) plus cached branch data. Construction locates
/// the branch points (roots of the discriminant composed with beta) and
/// flags non-simple ones; fiber operations refuse non-generic charts.
class CameralChart {
 public:
  CameralChart(GroupName group, std::vector<UniPoly> beta, double rmin_factor = kRminFactor);

  const GroupContext& ctx() const { return *ctx_; }
  GroupName group() const { return ctx_->root_system.name; }
  int rank() const { return ctx_->rank(); }
  const std::vector<UniPoly>& beta() const { return beta_; }
  const UniPoly& disc_on_chart() const { return disc_composed_; }
  const std::vector<Complex>& branch_points() const { return branch_points_; }
  bool branch_points_simple() const { return simple_; }
  const std::string& branch_issue() const { return branch_issue_; }
  double min_separation() const { return min_separation_; }
  double r_min() const { return r_min_; }

  Eigen::VectorXcd beta_at(Complex z) const;
  Eigen::VectorXcd beta_prime_at(Complex z) const;
  double distance_to_branch(Complex z) const;

  // Throws GenericityError when the chart was flagged at construction.
  void require_usable() const;

 private:
  const GroupContext* ctx_;
  std::vector<UniPoly> beta_;
  std::vector<UniPoly> beta_prime_;
  UniPoly disc_composed_;
  std::vector<Complex> branch_points_;
  bool simple_ = true;
  std::string branch_issue_;
  double min_separation_ = 1.0;
  double r_min_ = kRminFactor;
};

// Newton iteration on I(alpha) = target from the given seed; returns true
// when the residual reaches `tol`.
bool newton_refine(const GroupContext& ctx, Eigen::VectorXcd& alpha,
                   const Eigen::VectorXcd& target, double tol = tol::kNewton,
                   int max_iters = 24);

// All |W| fiber points over z by predictor-corrector continuation from the
// exact Weyl orbit of a random regular start point.
FiberSet solve_fiber(const CameralChart& chart, Complex z, std::uint64_t seed = 0x5eed5eedULL);

// Continues every fiber point along the closed polygonal loop and returns
// the sheet permutation: sheet i of `base` ends on the start position of
// sheet perm[i].
std::vector<int> track_loop(const CameralChart& chart, const FiberSet& base,
                            const std::vector<Complex>& loop);

struct GenusReport {
  long long genus = 0;
  long long branch_count = 0;
  long long ramification_count = 0;
};

// Riemann-Hurwitz count for a simply-ramified cameral cover of a genus-g_x
// compact curve.
GenusReport genus_cameral(long long g_x, const RootSystem& group);

struct GenericityReport {
  bool generic = true;
  std::vector<std::string> issues;
  int branch_count = 0;
  double min_branch_separation = 0.0;
};

GenericityReport certify_generic(const CameralChart& chart, std::uint64_t seed = 0x9e11e7ULL);

/// A ramification point of the cover, with its local frame data: the index
/// of the vanishing positive root and the coordinate variable alpha_k whose
/// deleted-column minor M_k is best conditioned.
struct RamificationPoint {
  Complex z;
  Eigen::VectorXcd alpha;
  int vanishing_root = 0;
  int frame_var = 0;     // 0-based k
  double frame_det = 0;  // |det M_k|
  int cluster_id = 0;
};

// The ramification point above `branch_z` reached from a nearby fiber.
RamificationPoint locate_ramification(const CameralChart& chart, Complex branch_z,
                                      std::uint64_t seed = 0x5eed5eedULL);

// Every ramification point above `branch_z` (the Weyl orbit of one of them;
// |W|/2 points for simple ramification), deterministically ordered.
std::vector<RamificationPoint> ramification_cluster(const CameralChart& chart, Complex branch_z,
                                                    std::uint64_t seed = 0x5eed5eedULL);

/// A point of the cameral curve parameterized by the frame coordinate
/// w = alpha_k - alpha_k(m) near a ramification point, carrying the value
/// of dz/d(alpha_k) obtained from the kernel of (-beta' | DI).
struct CurvePoint {
  Complex w;
  Complex z;
  Eigen::VectorXcd alpha;
  Complex dz_dak;
};

// Samples the curve on the circle |w| = radius around the ramification
// point; `samples` equally spaced angles, tracked sequentially with a
// closure check at the end.
std::vector<CurvePoint> trace_frame_circle(const CameralChart& chart, const RamificationPoint& m,
                                           double radius, int samples);

// Contour radius in the w-coordinate: min(1e-2, 0.1 x w-distance to the
// nearest other branch point), the latter estimated from the local
// quadratic z ~ z_m + a w^2.
double suggest_frame_radius(const CameralChart& chart, const RamificationPoint& m);

// dz/d(alpha_k) at an arbitrary curve point from the kernel of (-beta'|DI).
Complex frame_slope(const CameralChart& chart, Complex z, const Eigen::VectorXcd& alpha, int k);

}  // namespace cameral
