#pragma once

#include <cstdint>
#include <random>

#include "cameral/chart.hpp"

namespace cameral {

// Random polynomial of the given degree with coefficients in the unit box
// and a leading coefficient bounded away from zero.
UniPoly random_unipoly(std::mt19937_64& rng, int degree);

// Random chart with generic branch data: coefficients are resampled until
// the branch points are simple, reasonably separated and inside a moderate
// region. Throws NumericalError when rejection sampling keeps failing.
CameralChart random_generic_chart(GroupName group, std::mt19937_64& rng, int extra_degree = 1);

Deformation random_deformation(GroupName group, std::mt19937_64& rng, int degree = 2);

// Sample point of the chart region keeping `separation` away from every
// branch point.
Complex random_regular_z(const CameralChart& chart, std::mt19937_64& rng,
                         double separation_factor = 0.1);

}  // namespace cameral
