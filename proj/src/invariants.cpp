#include "cameral/invariants.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "cameral/errors.hpp"
#include "cameral/numerics.hpp"

namespace cameral {

namespace {

MultiPoly root_form(const IntVector& root) {
  std::vector<Rational> coeffs(root.size());
  for (int i = 0; i < root.size(); ++i) coeffs[i] = Rational(root(i));
  return MultiPoly::linear_form(coeffs);
}

std::vector<MultiPoly> generator_table(GroupName name) {
  using E = Exponents;
  switch (name) {
    case GroupName::A1: {
      const Rational sign = kA1DeterminantConvention ? Rational(-1) : Rational(1);
      return {MultiPoly::from_terms(1, {{E{2}, sign}})};
    }
    case GroupName::A2:
      return {
          MultiPoly::from_terms(2, {{E{2, 0}, 1}, {E{1, 1}, 1}, {E{0, 2}, 1}}),
          MultiPoly::from_terms(2, {{E{3, 0}, -2}, {E{2, 1}, -3}, {E{1, 2}, 3}, {E{0, 3}, 2}}),
      };
    case GroupName::B2:
      // Elementary symmetric polynomials in the squared orthogonal
      // coordinates (x, y) = (a1 + a2, a2).
      return {
          MultiPoly::from_terms(2, {{E{2, 0}, 1}, {E{1, 1}, 2}, {E{0, 2}, 2}}),
          MultiPoly::from_terms(2, {{E{2, 2}, 1}, {E{1, 3}, 2}, {E{0, 4}, 1}}),
      };
    case GroupName::G2:
      return {
          MultiPoly::from_terms(2, {{E{2, 0}, 3}, {E{1, 1}, 3}, {E{0, 2}, 1}}),
          MultiPoly::from_terms(2, {{E{6, 0}, 4},
                                    {E{5, 1}, 12},
                                    {E{4, 2}, 13},
                                    {E{3, 3}, 6},
                                    {E{2, 4}, 1}}),
      };
  }
  throw std::logic_error("invalid GroupName");
}

// Substitution images for x -> w.x, one linear polynomial per variable.
std::vector<MultiPoly> matrix_images(const IntMatrix& w) {
  const int l = static_cast<int>(w.rows());
  std::vector<MultiPoly> images;
  images.reserve(l);
  for (int i = 0; i < l; ++i) {
    std::vector<Rational> row(l);
    for (int j = 0; j < l; ++j) row[j] = Rational(w(i, j));
    images.push_back(MultiPoly::linear_form(row));
  }
  return images;
}

bool is_homogeneous(const MultiPoly& p, int degree) {
  for (const auto& [e, c] : p.terms()) {
    int d = 0;
    for (int x : e) d += x;
    if (d != degree) return false;
  }
  return true;
}

// Exact solve of an (overdetermined) rational linear system by Gaussian
// elimination. Returns false if inconsistent.
bool solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                 std::vector<Rational>& x) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (b[i] != 0) return false;  // inconsistent
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < row; ++i) x[pivot_col_of_row[i]] = b[i];
  return true;
}

// Exponent vectors e with sum_k e_k * degrees[k] == total.
void weighted_monomials(const std::vector<int>& degrees, int total, Exponents& current, int pos,
                        std::vector<Exponents>& out) {
  if (pos == static_cast<int>(degrees.size())) {
    if (total == 0) out.push_back(current);
    return;
  }
  for (int e = 0; e * degrees[pos] <= total; ++e) {
    current[pos] = e;
    weighted_monomials(degrees, total - e * degrees[pos], current, pos + 1, out);
  }
  current[pos] = 0;
}

}  // namespace

InvariantSet invariant_set(GroupName name) {
  InvariantSet inv;
  inv.group = build_root_system(name);
  inv.gens = generator_table(name);
  for (const auto& g : inv.gens) inv.degrees.push_back(g.total_degree());

  const WeylGroup weyl = weyl_closure(inv.group.simple_reflections);
  long long degree_product = 1;
  for (int d : inv.degrees) degree_product *= d;
  if (degree_product != weyl.order())
    throw std::logic_error("invariant_set: prod(degrees) != |W| for " + to_string(name));
  for (std::size_t k = 0; k < inv.gens.size(); ++k) {
    if (!is_homogeneous(inv.gens[k], inv.degrees[k]))
      throw std::logic_error("invariant_set: generator not homogeneous");
    for (const auto& w : weyl.elements) {
      if (inv.gens[k].substitute(matrix_images(w)) != inv.gens[k])
        throw std::logic_error("invariant_set: generator not W-invariant for " + to_string(name));
    }
  }

  inv.jac = jacobian(inv.gens);
  inv.jac_det = inv.jac.determinant();
  inv.jac_adj = inv.jac.adjugate();
  return inv;
}

SteinbergResult steinberg_check(const InvariantSet& inv) {
  SteinbergResult result;
  result.root_product = MultiPoly::constant(inv.group.rank, 1);
  for (const auto& root : inv.group.positive_roots)
    result.root_product = result.root_product * root_form(root);

  const MultiPoly& det = inv.jac_det;
  if (det.is_zero() || result.root_product.is_zero())
    throw NumericalError("steinberg_check: degenerate determinant");
  const Rational lead_det = det.terms().begin()->second;
  const Rational lead_prod = result.root_product.terms().begin()->second;
  result.c = lead_det / lead_prod;
  result.exact_match = (det == result.root_product * result.c);
  return result;
}

Discriminant discriminant_in_invariants(const InvariantSet& inv) {
  const int l = inv.group.rank;
  Discriminant disc;
  disc.as_poly = MultiPoly::constant(l, 1);
  for (const auto& root : inv.group.positive_roots) {
    const MultiPoly form = root_form(root);
    disc.as_poly = disc.as_poly * form * (-form);
  }

  const int total = disc.as_poly.total_degree();
  std::vector<Exponents> basis;
  Exponents scratch(l, 0);
  weighted_monomials(inv.degrees, total, scratch, 0, basis);
  if (basis.empty()) throw NumericalError("discriminant: no candidate monomials");

  // Expanded products prod_k I_k^{e_k}, one per candidate monomial in u.
  std::vector<MultiPoly> expanded;
  expanded.reserve(basis.size());
  for (const auto& e : basis) {
    MultiPoly p = MultiPoly::constant(l, 1);
    for (int k = 0; k < l; ++k)
      if (e[k] > 0) p = p * inv.gens[k].pow(static_cast<unsigned>(e[k]));
    expanded.push_back(std::move(p));
  }

  // Coefficient-matching system over the union of alpha-monomials.
  std::map<Exponents, std::size_t, GradedLexDesc> row_of;
  auto row_index = [&row_of](const Exponents& e) {
    return row_of.emplace(e, row_of.size()).first->second;
  };
  for (const auto& p : expanded)
    for (const auto& [e, c] : p.terms()) row_index(e);
  for (const auto& [e, c] : disc.as_poly.terms()) row_index(e);

  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(basis.size(), 0));
  std::vector<Rational> b(row_of.size(), 0);
  for (std::size_t j = 0; j < expanded.size(); ++j)
    for (const auto& [e, c] : expanded[j].terms()) a[row_index(e)][j] = c;
  for (const auto& [e, c] : disc.as_poly.terms()) b[row_index(e)] = c;

  std::vector<Rational> x;
  if (!solve_exact(std::move(a), std::move(b), x))
    throw NumericalError("discriminant: coefficient matching has no solution");

  disc.in_invariants = MultiPoly(l);
  for (std::size_t j = 0; j < basis.size(); ++j) disc.in_invariants.add_term(basis[j], x[j]);

  if (disc.in_invariants.substitute(inv.gens) != disc.as_poly)
    throw NumericalError("discriminant: back-substitution check failed");
  return disc;
}

RationalFunction log_derivative_along(const InvariantSet& inv, const Discriminant& disc,
                                      const std::vector<UniPoly>& beta,
                                      const std::vector<UniPoly>& gamma) {
  const int l = inv.group.rank;
  if (static_cast<int>(beta.size()) != l || static_cast<int>(gamma.size()) != l)
    throw ValidationError("log_derivative_along: chart/deformation arity mismatch");
  RationalFunction ratio;
  ratio.den = compose(disc.in_invariants, beta);
  if (ratio.den.is_zero())
    throw GenericityError("log_derivative_along: discriminant vanishes identically on the chart");
  for (int k = 0; k < l; ++k)
    ratio.num += compose(disc.in_invariants.partial(k), beta) * gamma[k];
  return ratio;
}

Eigen::VectorXcd GroupContext::eval_gens(const Eigen::VectorXcd& alpha) const {
  Eigen::VectorXcd out(rank());
  for (int k = 0; k < rank(); ++k) out(k) = gens_c[k].eval(alpha);
  return out;
}

const GroupContext& group_context(GroupName name) {
  static std::mutex mutex;
  static std::map<GroupName, std::unique_ptr<GroupContext>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto ctx = std::make_unique<GroupContext>();
    ctx->root_system = build_root_system(name);
    ctx->weyl = weyl_closure(ctx->root_system.simple_reflections);
    ctx->invariants = invariant_set(name);
    ctx->discriminant = discriminant_in_invariants(ctx->invariants);
    for (const auto& g : ctx->invariants.gens) ctx->gens_c.emplace_back(g);
    ctx->jac_c = CompiledPolyMatrix(ctx->invariants.jac);
    ctx->adj_c = CompiledPolyMatrix(ctx->invariants.jac_adj);
    ctx->det_c = CompiledPoly(ctx->invariants.jac_det);
    it = cache.emplace(name, std::move(ctx)).first;
  }
  return *it->second;
}

}  // namespace cameral
