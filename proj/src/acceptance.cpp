#include "cameral/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "cameral/chart.hpp"
#include "cameral/errors.hpp"
#include "cameral/invariants.hpp"
#include "cameral/numerics.hpp"
#include "cameral/observables.hpp"
#include "cameral/parallel.hpp"
#include "cameral/sampling.hpp"
#include "cameral/sw_derivative.hpp"

namespace cameral {

bool AcceptanceReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr GroupName kAllGroups[] = {GroupName::A1, GroupName::A2, GroupName::B2, GroupName::G2};
constexpr GroupName kOracleGroups[] = {GroupName::A1, GroupName::A2, GroupName::G2};

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  return x;
}

std::string format(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes.push_back(what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

MultiPoly p2(std::vector<std::pair<Exponents, Rational>> terms) {
  return MultiPoly::from_terms(2, std::move(terms));
}

// ---------------------------------------------------------------- criterion 1

void symbolic_suite(Check& check) {
  // (a) exact W-invariance of every shipped generator
  for (const GroupName g : kAllGroups) {
    const GroupContext& ctx = group_context(g);
    for (std::size_t k = 0; k < ctx.invariants.gens.size(); ++k) {
      for (const auto& w : ctx.weyl.elements) {
        std::vector<MultiPoly> images;
        for (int i = 0; i < ctx.rank(); ++i) {
          std::vector<Rational> row(ctx.rank());
          for (int j = 0; j < ctx.rank(); ++j) row[j] = Rational(w(i, j));
          images.push_back(MultiPoly::linear_form(row));
        }
        if (ctx.invariants.gens[k].substitute(images) != ctx.invariants.gens[k]) {
          check.require(false, "W-invariance fails: " + to_string(g) + " generator " +
                                   std::to_string(k + 1));
        }
      }
    }
  }

  // (b) Steinberg factorization with pinned constants
  {
    const SteinbergResult a1 = steinberg_check(group_context(GroupName::A1).invariants);
    const SteinbergResult a2 = steinberg_check(group_context(GroupName::A2).invariants);
    const SteinbergResult b2 = steinberg_check(group_context(GroupName::B2).invariants);
    const SteinbergResult g2 = steinberg_check(group_context(GroupName::G2).invariants);
    check.require(a1.exact_match && a1.c == 2, "Steinberg A1: expected exact match with c = 2");
    check.require(a2.exact_match && a2.c == 27, "Steinberg A2: expected exact match with c = 27");
    check.require(b2.exact_match, "Steinberg B2: expected exact factorization");
    check.require(g2.exact_match && g2.c == -2, "Steinberg G2: expected exact match with c = -2");
    check.note("steinberg c: A1=" + a1.c.str() + " A2=" + a2.c.str() + " B2=" + b2.c.str() +
               " G2=" + g2.c.str());
    // A2 determinant matches 27 a1 a2 (a1+a2) expanded.
    const MultiPoly a2_det = p2({{Exponents{2, 1}, 27}, {Exponents{1, 2}, 27}});
    check.require(group_context(GroupName::A2).invariants.jac_det == a2_det,
                  "A2 det DI != 27 a1 a2 (a1 + a2)");
    // G2 determinant matches -2 x (product of the six positive roots).
    const GroupContext& g2ctx = group_context(GroupName::G2);
    MultiPoly prod = MultiPoly::constant(2, -2);
    for (const auto& root : g2ctx.root_system.positive_roots)
      prod = prod * MultiPoly::linear_form({Rational(root(0)), Rational(root(1))});
    check.require(g2ctx.invariants.jac_det == prod,
                  "G2 det DI != -2 x product of positive roots");
  }

  // (c) G2 discriminant identity, exact
  {
    const GroupContext& ctx = group_context(GroupName::G2);
    const MultiPoly expected = p2({{Exponents{3, 1}, 4}, {Exponents{0, 2}, -27}});
    check.require(ctx.discriminant.in_invariants == expected,
                  "G2 discriminant != u2 (4 u1^3 - 27 u2)");
    check.require(ctx.discriminant.in_invariants.substitute(ctx.invariants.gens) ==
                      ctx.discriminant.as_poly,
                  "G2 discriminant back-substitution failed");
  }

  // (d) adj(M) . M == det(M) . Id for every Jacobi matrix
  for (const GroupName g : kAllGroups) {
    const GroupContext& ctx = group_context(g);
    const PolyMatrix product = ctx.invariants.jac_adj * ctx.invariants.jac;
    bool ok = true;
    for (int r = 0; r < ctx.rank(); ++r)
      for (int c = 0; c < ctx.rank(); ++c) {
        const MultiPoly expected =
            r == c ? ctx.invariants.jac_det : MultiPoly(ctx.rank());
        if (product.at(r, c) != expected) ok = false;
      }
    check.require(ok, "adjugate identity fails for " + to_string(g));
  }

  // (e) the derivative expression collapses to the displayed 2x2 matrices
  {
    const GroupContext& a2 = group_context(GroupName::A2);
    Deformation dummy;
    dummy.gamma = {UniPoly::constant(1.0), UniPoly::constant(0.0)};
    const SwDerivativeExpr expr = sw_derivative_expr(a2, dummy);
    PolyMatrix expected(2, 2);
    expected.at(0, 0) = p2({{Exponents{2, 0}, 3}, {Exponents{1, 1}, -6}, {Exponents{0, 2}, -6}});
    expected.at(0, 1) = p2({{Exponents{1, 0}, 1}, {Exponents{0, 1}, 2}});
    expected.at(1, 0) = p2({{Exponents{2, 0}, -6}, {Exponents{1, 1}, -6}, {Exponents{0, 2}, 3}});
    expected.at(1, 1) = p2({{Exponents{1, 0}, -2}, {Exponents{0, 1}, -1}});
    check.require(expr.numerator == expected, "A2 expression != displayed matrix");
    check.require(expr.denominator == a2.invariants.jac_det, "A2 denominator != det DI");
  }
  {
    const GroupContext& g2 = group_context(GroupName::G2);
    Deformation dummy;
    dummy.gamma = {UniPoly::constant(1.0), UniPoly::constant(0.0)};
    const SwDerivativeExpr expr = sw_derivative_expr(g2, dummy);
    PolyMatrix expected(2, 2);
    expected.at(0, 0) = p2({{Exponents{5, 0}, -12},
                            {Exponents{4, 1}, -26},
                            {Exponents{3, 2}, -18},
                            {Exponents{2, 3}, -4}});
    expected.at(0, 1) = p2({{Exponents{1, 0}, 3}, {Exponents{0, 1}, 2}});
    expected.at(1, 0) = p2({{Exponents{5, 0}, 24},
                            {Exponents{4, 1}, 60},
                            {Exponents{3, 2}, 52},
                            {Exponents{2, 3}, 18},
                            {Exponents{1, 4}, 2}});
    expected.at(1, 1) = p2({{Exponents{1, 0}, -6}, {Exponents{0, 1}, -3}});
    check.require(expr.numerator == expected, "G2 expression != displayed matrix");
    check.require(expr.denominator == g2.invariants.jac_det, "G2 denominator != det DI");
  }
}

// ---------------------------------------------------------------- criterion 2

constexpr int kChartsPerGroup = 20;

void fiber_monodromy_suite(Check& check, std::uint64_t seed) {
  for (const GroupName g : kAllGroups) {
    const GroupContext& ctx = group_context(g);
    std::vector<std::string> issues(kChartsPerGroup);
    parallel_for(kChartsPerGroup, [&](std::size_t i) {
      std::ostringstream fail;
      try {
        std::mt19937_64 rng(mix(seed, 2000 + 100 * static_cast<int>(g) + i));
        const CameralChart chart = random_generic_chart(g, rng);
        const Complex z = random_regular_z(chart, rng);
        const FiberSet fiber = solve_fiber(chart, z, rng());

        if (static_cast<int>(fiber.points.size()) != ctx.weyl.order())
          fail << "fiber has " << fiber.points.size() << " points; ";
        if (fiber.max_residual > tol::kNewton)
          fail << "residual " << fiber.max_residual << " > 1e-12; ";

        // Weyl closure of the fiber.
        double closure = 0.0;
        for (const auto& w : ctx.weyl.elements) {
          for (const auto& p : fiber.points) {
            const Eigen::VectorXcd image = apply(w, p);
            double best = 1e300;
            for (const auto& q : fiber.points)
              best = std::min(best, (image - q).cwiseAbs().maxCoeff());
            closure = std::max(closure, best);
          }
        }
        if (closure > tol::kOrbit) fail << "closure defect " << closure << " > 1e-9; ";

        // Contractible loop: identity permutation.
        {
          const double r = 0.4 * std::min(chart.distance_to_branch(z), 0.2);
          std::vector<Complex> loop;
          for (int k = 0; k <= 12; ++k)
            loop.push_back(z + r * std::polar(1.0, 6.283185307179586 * k / 12.0) - r);
          const std::vector<int> perm = track_loop(chart, fiber, loop);
          for (int k = 0; k < static_cast<int>(perm.size()); ++k)
            if (perm[k] != k) {
              fail << "contractible loop is not the identity; ";
              break;
            }
        }

        // Loop around one branch point: fixed-point-free involution.
        {
          const Complex b = chart.branch_points()[i % chart.branch_points().size()];
          const double r = 0.3 * std::min(chart.min_separation(), 1.0);
          const Complex base_z = b + r;
          const FiberSet base = solve_fiber(chart, base_z, rng());
          std::vector<Complex> loop;
          for (int k = 0; k <= 24; ++k)
            loop.push_back(b + r * std::polar(1.0, 6.283185307179586 * k / 24.0));
          const std::vector<int> perm = track_loop(chart, base, loop);
          bool involution = true;
          bool fixed_point_free = true;
          for (int k = 0; k < static_cast<int>(perm.size()); ++k) {
            if (perm[perm[k]] != k) involution = false;
            if (perm[k] == k) fixed_point_free = false;
          }
          if (!involution) fail << "branch-point loop is not an involution; ";
          if (!fixed_point_free) fail << "branch-point monodromy has fixed points; ";
        }
      } catch (const std::exception& e) {
        fail << "exception: " << e.what();
      }
      issues[i] = fail.str();
    });
    for (int i = 0; i < kChartsPerGroup; ++i)
      check.require(issues[i].empty(),
                    to_string(g) + " chart " + std::to_string(i) + ": " + issues[i]);
  }
}

// ---------------------------------------------------------------- criterion 3

void oracle_suite(Check& check, std::uint64_t seed) {
  const double sigma = kOracleSign;
  double worst_linear = 0.0;
  double worst_fd = 0.0;
  double worst_sl2 = 0.0;
  int tuples = 0;

  for (const GroupName g : kOracleGroups) {
    const GroupContext& ctx = group_context(g);
    constexpr int kTuples = 70;
    std::vector<std::array<double, 3>> errs(kTuples, {0.0, 0.0, 0.0});
    std::vector<std::string> issues(kTuples);
    parallel_for(kTuples, [&](std::size_t t) {
      try {
        std::mt19937_64 rng(mix(seed, 3000 + 100 * static_cast<int>(g) + t));
        const CameralChart chart = random_generic_chart(g, rng);
        const Deformation gamma = random_deformation(g, rng, 3);
        std::uniform_int_distribution<int> sheet_dist(0, ctx.weyl.order() - 1);
        const int sheet = sheet_dist(rng);

        Complex z;
        Eigen::VectorXcd alpha;
        bool found = false;
        for (int attempt = 0; attempt < 40 && !found; ++attempt) {
          z = random_regular_z(chart, rng);
          const FiberSet fiber = solve_fiber(chart, z, rng());
          alpha = fiber.points[sheet];
          if (std::abs(ctx.det_c.eval(alpha)) > 1e-2) found = true;
        }
        if (!found) {
          issues[t] = "no well-conditioned sample point";
          return;
        }

        const Eigen::VectorXcd engine = sw_derivative_at(chart, gamma, z, alpha).coeffs;
        const double engine_norm = engine.cwiseAbs().maxCoeff();
        if (engine_norm < 1e-12) {
          issues[t] = "degenerate engine value";
          return;
        }
        const Eigen::VectorXcd lin = gm_oracle_linear(chart, gamma, z, alpha).coeffs;
        const Eigen::VectorXcd fd = gm_oracle_fd(chart, gamma, z, alpha).coeffs;
        errs[t][0] = (engine - sigma * lin).cwiseAbs().maxCoeff() / engine_norm;
        errs[t][1] = (engine - sigma * fd).cwiseAbs().maxCoeff() / engine_norm;

        if (g == GroupName::A1) {
          // Closed-form rank-one value: gamma(z) / (2 alpha).
          const Complex closed = gamma.gamma[0].evaluate(z) / (2.0 * alpha(0));
          errs[t][2] = std::abs(engine(0) - sigma * closed) / std::abs(closed);
        }
      } catch (const std::exception& e) {
        issues[t] = e.what();
      }
    });
    for (int t = 0; t < kTuples; ++t) {
      check.require(issues[t].empty(),
                    to_string(g) + " tuple " + std::to_string(t) + ": " + issues[t]);
      worst_linear = std::max(worst_linear, errs[t][0]);
      worst_fd = std::max(worst_fd, errs[t][1]);
      worst_sl2 = std::max(worst_sl2, errs[t][2]);
      ++tuples;
    }
  }

  check.require(worst_linear <= 1e-10, "engine vs sigma x linear-solve oracle exceeds 1e-10");
  check.require(worst_fd <= 1e-6, "engine vs sigma x finite-difference oracle exceeds 1e-6");
  check.require(worst_sl2 <= 1e-12, "rank-one closed form mismatch exceeds 1e-12");
  std::ostringstream note;
  note << tuples << " tuples, sigma = " << sigma << ", max rel err: linear " << worst_linear
       << ", fd " << worst_fd << ", closed form " << worst_sl2;
  check.note(note.str());
}

// ---------------------------------------------------------------- criterion 4

void holomorphy_suite(Check& check, std::uint64_t seed) {
  for (const GroupName g : kAllGroups) {
    constexpr int kCharts = 10;
    std::vector<std::string> issues(kCharts);
    parallel_for(kCharts, [&](std::size_t i) {
      std::ostringstream fail;
      try {
        std::mt19937_64 rng(mix(seed, 4000 + 100 * static_cast<int>(g) + i));
        const CameralChart chart = random_generic_chart(g, rng);
        const Deformation gamma = random_deformation(g, rng, 2);
        for (const Complex b : chart.branch_points()) {
          const ProbeReport probe = holomorphy_probe(chart, gamma, b, {},
                                                     ProbeNumerator::kAdjugate, rng());
          if (!probe.pass) {
            fail << "probe fails at branch (" << b.real() << "," << b.imag() << ") moduli";
            for (const double m : probe.max_moduli) fail << " " << m;
            fail << "; ";
          }
        }
      } catch (const std::exception& e) {
        fail << "exception: " << e.what();
      }
      issues[i] = fail.str();
    });
    for (int i = 0; i < kCharts; ++i)
      check.require(issues[i].empty(),
                    to_string(g) + " chart " + std::to_string(i) + ": " + issues[i]);
  }

  // Negative control: the transposed-adjugate numerator must be caught.
  int control_failures = 0;
  int control_total = 0;
  std::ostringstream control_log;
  for (int i = 0; i < 5; ++i) {
    std::mt19937_64 rng(mix(seed, 4500 + i));
    const CameralChart chart = random_generic_chart(GroupName::A2, rng);
    const Deformation gamma = random_deformation(GroupName::A2, rng, 2);
    const Complex b = chart.branch_points()[i % chart.branch_points().size()];
    const ProbeReport probe =
        holomorphy_probe(chart, gamma, b, {}, ProbeNumerator::kAdjugateTranspose, rng());
    ++control_total;
    if (!probe.pass) ++control_failures;
    control_log << (probe.pass ? " pass" : " fail");
  }
  check.note("transposed-adjugate control outcomes:" + control_log.str());
  check.require(control_failures == control_total,
                "transposed-adjugate negative control did not fail the probe");
}

// ---------------------------------------------------------------- criterion 5

void genus_suite(Check& check) {
  const RootSystem a1 = build_root_system(GroupName::A1);
  const RootSystem g2 = build_root_system(GroupName::G2);
  for (long long g = 2; g <= 10; ++g) {
    const long long got_a1 = genus_cameral(g, a1).genus;
    const long long got_g2 = genus_cameral(g, g2).genus;
    check.require(got_a1 == 4 * g - 3, "A1 genus at g = " + std::to_string(g) + ": got " +
                                           std::to_string(got_a1));
    check.require(got_g2 == 84 * (g - 1) + 1, "G2 genus at g = " + std::to_string(g) + ": got " +
                                                  std::to_string(got_g2));
  }
}

// ---------------------------------------------------------------- criterion 6

Complex a1_cubic_oracle(const CameralChart& chart, const Deformation& g1, const Deformation& g2,
                        const Deformation& g3) {
  // Local expansion at a simple zero z_j of beta: with z = z_j + w^2/beta'
  // the integrand collapses to g1 g2 g3 (z_j) / beta'(z_j)^2 x dw^2/w^2.
  const UniPoly& beta = chart.beta()[0];
  const UniPoly beta_prime = beta.derivative();
  Complex acc(0.0);
  for (const Complex r : beta.roots()) {
    const Complex bp = beta_prime.evaluate(r);
    acc += g1.gamma[0].evaluate(r) * g2.gamma[0].evaluate(r) * g3.gamma[0].evaluate(r) / (bp * bp);
  }
  return 0.5 * acc;
}

void cubic_suite(Check& check, std::uint64_t seed) {
  // Contour engine vs the independently derived rank-one residue oracle.
  {
    constexpr int kCharts = 10;
    std::vector<std::string> issues(kCharts);
    std::vector<double> errs(kCharts, 0.0);
    parallel_for(kCharts, [&](std::size_t i) {
      try {
        std::mt19937_64 rng(mix(seed, 6000 + i));
        const CameralChart chart = random_generic_chart(GroupName::A1, rng);
        const Deformation g1 = random_deformation(GroupName::A1, rng, 2);
        const Deformation g2 = random_deformation(GroupName::A1, rng, 2);
        const Deformation g3 = random_deformation(GroupName::A1, rng, 2);
        const PairingSpec pairing = default_pairing(chart.ctx().weyl);
        const CubicValue value = cubic(chart, g1, g2, g3, pairing, rng());
        const Complex oracle = a1_cubic_oracle(chart, g1, g2, g3);
        errs[i] = std::abs(value.value - oracle) / std::max(std::abs(oracle), 1e-30);
      } catch (const std::exception& e) {
        issues[i] = e.what();
      }
    });
    double worst = 0.0;
    for (int i = 0; i < kCharts; ++i) {
      check.require(issues[i].empty(), "A1 cubic chart " + std::to_string(i) + ": " + issues[i]);
      worst = std::max(worst, errs[i]);
    }
    check.require(worst <= 1e-6, "A1 cubic vs closed-form oracle exceeds 1e-6");
    check.note("A1 cubic max rel err vs oracle: " + format(worst));
  }

  // Full permutation symmetry on rank-two charts.
  {
    std::mt19937_64 rng(mix(seed, 6100));
    const CameralChart chart = random_generic_chart(GroupName::A2, rng);
    const Deformation d1 = random_deformation(GroupName::A2, rng, 1);
    const Deformation d2 = random_deformation(GroupName::A2, rng, 1);
    const Deformation d3 = random_deformation(GroupName::A2, rng, 1);
    const PairingSpec pairing = default_pairing(chart.ctx().weyl);
    const Deformation* defs[3] = {&d1, &d2, &d3};
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    std::array<Complex, 6> values;
    std::vector<std::string> issues(6);
    parallel_for(6, [&](std::size_t p) {
      try {
        values[p] = cubic(chart, *defs[perms[p][0]], *defs[perms[p][1]], *defs[perms[p][2]],
                          pairing, mix(seed, 6150))
                        .value;
      } catch (const std::exception& e) {
        issues[p] = e.what();
      }
    });
    double scale = 0.0;
    for (const Complex v : values) scale = std::max(scale, std::abs(v));
    double spread = 0.0;
    for (int p = 0; p < 6; ++p) {
      check.require(issues[p].empty(), "A2 cubic permutation " + std::to_string(p) + ": " +
                                           issues[p]);
      spread = std::max(spread, std::abs(values[p] - values[0]));
    }
    check.require(scale > 0 && spread / scale <= 1e-5,
                  "cubic permutation symmetry exceeds 1e-5 (spread " + format(spread / scale) +
                      ")");
    check.note("A2 cubic permutation spread: " + format(spread / std::max(scale, 1e-30)));
  }

  // Trilinearity at fixed contours.
  {
    std::mt19937_64 rng(mix(seed, 6200));
    const CameralChart chart = random_generic_chart(GroupName::A2, rng);
    const Deformation u = random_deformation(GroupName::A2, rng, 1);
    const Deformation v = random_deformation(GroupName::A2, rng, 1);
    const Deformation g2d = random_deformation(GroupName::A2, rng, 1);
    const Deformation g3d = random_deformation(GroupName::A2, rng, 1);
    const PairingSpec pairing = default_pairing(chart.ctx().weyl);
    const Complex a(0.7, -0.3);
    const Complex b(-1.1, 0.4);
    Deformation combo;
    for (int k = 0; k < 2; ++k) combo.gamma.push_back(u.gamma[k] * a + v.gamma[k] * b);
    const std::uint64_t cseed = mix(seed, 6201);

    // slot 1
    const Complex lhs1 = cubic(chart, combo, g2d, g3d, pairing, cseed).value;
    const Complex rhs1 = a * cubic(chart, u, g2d, g3d, pairing, cseed).value +
                         b * cubic(chart, v, g2d, g3d, pairing, cseed).value;
    // slot 2
    const Complex lhs2 = cubic(chart, g2d, combo, g3d, pairing, cseed).value;
    const Complex rhs2 = a * cubic(chart, g2d, u, g3d, pairing, cseed).value +
                         b * cubic(chart, g2d, v, g3d, pairing, cseed).value;
    const double err1 = std::abs(lhs1 - rhs1) / std::max(std::abs(lhs1), 1e-30);
    const double err2 = std::abs(lhs2 - rhs2) / std::max(std::abs(lhs2), 1e-30);
    check.require(err1 <= 1e-10, "cubic linearity in slot 1 exceeds 1e-10: " + format(err1));
    check.require(err2 <= 1e-10, "cubic linearity in slot 2 exceeds 1e-10: " + format(err2));

    // gamma1 = 0 gives exactly zero.
    Deformation zero;
    zero.gamma = {UniPoly(), UniPoly()};
    const Complex z0 = cubic(chart, zero, g2d, g3d, pairing, cseed).value;
    check.require(std::abs(z0) == 0.0, "cubic with zero first slot is not exactly zero");
  }
}

// ---------------------------------------------------------------- criterion 7

void metric_suite(Check& check, std::uint64_t seed) {
  // Reference: beta = z, gamma = 1 on the unit disk integrates to 2 pi.
  {
    CameralChart chart(GroupName::A1, {UniPoly::z()});
    Deformation gamma;
    gamma.gamma = {UniPoly::constant(1.0)};
    const Sl2MetricResult result = sk_metric_sl2(chart, gamma, 1.0);
    const double reference = 2.0 * 3.14159265358979323846;
    const double rel = std::abs(result.value - reference) / reference;
    check.require(rel <= 1e-4, "reference disk integral off by " + format(rel));
    check.note("reference integral rel err: " + format(rel) + " (value " + format(result.value) +
               ")");
  }

  // |c|^2 scaling and positivity on a random chart.
  {
    std::mt19937_64 rng(mix(seed, 7000));
    const CameralChart chart = random_generic_chart(GroupName::A1, rng);
    const Deformation gamma = random_deformation(GroupName::A1, rng, 2);
    const Complex c(0.37, -1.2);
    Deformation scaled;
    scaled.gamma = {gamma.gamma[0] * c};
    const double base = sk_metric_sl2(chart, gamma, 1.5).value;
    const double big = sk_metric_sl2(chart, scaled, 1.5).value;
    const double rel = std::abs(big - std::norm(c) * base) / std::max(big, 1e-30);
    check.require(base > 0.0, "metric value is not positive");
    check.require(rel <= 1e-10, "|c|^2 scaling off by " + format(rel));

    Deformation zero;
    zero.gamma = {UniPoly()};
    check.require(sk_metric_sl2(chart, zero, 1.5).value == 0.0,
                  "metric of the zero deformation is not zero");
  }
}

}  // namespace

AcceptanceReport run_acceptance(std::uint64_t seed, std::ostream& log) {
  AcceptanceReport report;
  struct Entry {
    int id;
    std::string title;
    double budget;  // seconds; 0 = no bound
    std::function<void(Check&)> body;
  };
  const std::vector<Entry> entries = {
      {1, "symbolic identity suite (exact)", 5.0, [&](Check& c) { symbolic_suite(c); }},
      {2, "fiber/monodromy suite", 60.0, [&](Check& c) { fiber_monodromy_suite(c, seed); }},
      {3, "derivative engine vs oracles", 0.0, [&](Check& c) { oracle_suite(c, seed); }},
      {4, "holomorphy at ramification", 0.0, [&](Check& c) { holomorphy_suite(c, seed); }},
      {5, "genus arithmetic", 0.0, [&](Check& c) { genus_suite(c); }},
      {6, "residue cubic", 0.0, [&](Check& c) { cubic_suite(c, seed); }},
      {7, "rank-one special Kahler metric", 0.0, [&](Check& c) { metric_suite(c, seed); }},
  };

  for (const Entry& entry : entries) {
    Check check;
    const auto t0 = Clock::now();
    try {
      entry.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("unhandled exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
    if (entry.budget > 0.0 && elapsed > entry.budget)
      check.require(false, "runtime " + format(elapsed) + "s exceeds " + format(entry.budget) +
                               "s budget");
    CriterionResult result;
    result.id = entry.id;
    result.title = entry.title;
    result.pass = check.ok;
    result.seconds = elapsed;
    result.notes = check.notes;
    log << "CRITERION " << entry.id << " " << (result.pass ? "PASS" : "FAIL") << " ("
        << format(elapsed) << "s): " << entry.title << "\n";
    for (const std::string& n : result.notes) log << "    - " << n << "\n";
    report.criteria.push_back(std::move(result));
  }
  log << (report.all_pass() ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
  return report;
}

}  // namespace cameral
