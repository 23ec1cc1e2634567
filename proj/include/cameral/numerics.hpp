#pragma once

// Central tolerance and convention constants. Every numerical gate used by
// the library is pinned here; nothing is tuned per call site.

namespace cameral {

namespace tol {

// Fiber solving: max |I(alpha) - beta(z)| accepted for a solved point.
inline constexpr double kNewton = 1e-12;

// Point matching: orbit dedup and sheet/permutation matching, absolute
// per coordinate.
inline constexpr double kOrbit = 1e-9;

// Proximity guard on |det DI(alpha)|: tracking and direct evaluation refuse
// to operate closer to the discriminant locus than this.
inline constexpr double kDiscGuard = 1e-6;

// Branch-point simplicity: |d/dz P(beta(z))| at a root, relative to the
// coefficient scale of the composed polynomial.
inline constexpr double kSimpleRoot = 1e-8;

// Relative agreement required between a contour residue at radius r and r/2.
inline constexpr double kRes = 1e-6;

// Relative mesh-convergence target for the SL2 metric quadrature.
inline constexpr double kQuad = 1e-4;

// Allowed growth factor of the max modulus when a probe radius halves.
inline constexpr double kProbeGrowth = 1.05;

// Floor on |det M_k| when selecting the ramification frame variable.
inline constexpr double kFrameFloor = 1e-8;

}  // namespace tol

namespace track {

inline constexpr double kInitialStep = 1e-2;
inline constexpr double kMaxStep = 5e-2;
inline constexpr double kMinStep = 1e-8;
inline constexpr int kMaxNewtonIters = 8;
inline constexpr int kMaxSeedRetries = 5;

}  // namespace track

// r_min = kRminFactor * (min branch-point separation): loops and sample
// points must keep this distance from every branch point.
inline constexpr double kRminFactor = 1e-3;

// Trapezoid nodes for residue contours.
inline constexpr int kContourNodes = 128;

// Global sign relating the rational-expression engine to the deformation
// oracle: engine == kOracleSign * (DI)^{-1} gamma. The engine carries the
// minus sign of the covariant-derivative formula; the naive implicit
// differentiation of I(alpha) = beta + eps*gamma produces +(DI)^{-1} gamma,
// so the measured sign is -1. Tests assert this one constant everywhere.
inline constexpr double kOracleSign = -1.0;

// A1 invariant convention: false stores I = +alpha^2 (the curve reads
// alpha^2 = beta literally); true switches to the determinant convention
// I = -alpha^2. All shipped tests run the default.
inline constexpr bool kA1DeterminantConvention = false;

// Default finite-difference step for the deformation oracle, before
// scaling by the local magnitude of beta.
inline constexpr double kDefaultFdStep = 1e-5;

// Upper bound on Weyl closure size; exceeding it signals wrong generators.
inline constexpr int kMaxWeylOrder = 1024;

}  // namespace cameral
