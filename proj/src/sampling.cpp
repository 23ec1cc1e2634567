#include "cameral/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "cameral/errors.hpp"

namespace cameral {

UniPoly random_unipoly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Complex> coeffs(degree + 1);
  for (int k = 0; k <= degree; ++k) coeffs[k] = Complex(unit(rng), unit(rng));
  // Keep the degree honest.
  while (std::abs(coeffs[degree]) < 0.3) coeffs[degree] = Complex(unit(rng), unit(rng));
  return UniPoly(std::move(coeffs));
}

CameralChart random_generic_chart(GroupName group, std::mt19937_64& rng, int extra_degree) {
  const GroupContext& ctx = group_context(group);
  const int l = ctx.rank();
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<UniPoly> beta;
    beta.reserve(l);
    for (int k = 0; k < l; ++k) beta.push_back(random_unipoly(rng, 1 + k + extra_degree));
    CameralChart chart(group, std::move(beta));
    if (!chart.branch_points_simple()) continue;
    if (chart.branch_points().empty()) continue;
    if (chart.min_separation() < 5e-2) continue;
    bool bounded = true;
    for (const Complex b : chart.branch_points())
      if (std::abs(b) > 20.0) bounded = false;
    if (!bounded) continue;
    return chart;
  }
  throw NumericalError("random_generic_chart: rejection sampling failed");
}

Deformation random_deformation(GroupName group, std::mt19937_64& rng, int degree) {
  const GroupContext& ctx = group_context(group);
  Deformation d;
  for (int k = 0; k < ctx.rank(); ++k) d.gamma.push_back(random_unipoly(rng, degree));
  return d;
}

Complex random_regular_z(const CameralChart& chart, std::mt19937_64& rng,
                         double separation_factor) {
  double region = 1.0;
  for (const Complex b : chart.branch_points()) region = std::max(region, std::abs(b) + 1.0);
  const double floor =
      std::max(chart.r_min(), separation_factor * std::min(chart.min_separation(), 1.0));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const Complex z(region * unit(rng), region * unit(rng));
    if (chart.distance_to_branch(z) >= floor) return z;
  }
  throw NumericalError("random_regular_z: could not find a point away from the branch locus");
}

}  // namespace cameral
