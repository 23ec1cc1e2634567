#include "cameral/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cameral {

namespace {

int degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

}  // namespace

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::linear_form(const std::vector<Rational>& coeffs) {
  MultiPoly p(static_cast<int>(coeffs.size()));
  for (int i = 0; i < p.nvars_; ++i) {
    Exponents e(p.nvars_, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

MultiPoly MultiPoly::from_terms(int nvars,
                                const std::vector<std::pair<Exponents, Rational>>& terms) {
  MultiPoly p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.begin()->first);  // leading term has max degree
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("arity mismatch in +");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("arity mismatch in -");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("arity mismatch in *");
  MultiPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(nvars_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return nvars_ == other.nvars_ && terms_ == other.terms_;
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("partial: variable out of range");
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: image count mismatch");
  const int out_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& im : images)
    if (im.nvars() != out_vars) throw std::invalid_argument("substitute: image arity mismatch");
  MultiPoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      if (e[i] > 0) term = term * images[i].pow(static_cast<unsigned>(e[i]));
    result += term;
  }
  return result;
}

Complex MultiPoly::evaluate(const Eigen::VectorXcd& x) const {
  if (x.size() != nvars_) throw std::invalid_argument("evaluate: point arity mismatch");
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    Complex t(to_double(c), 0.0);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

Rational MultiPoly::evaluate_exact(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluate_exact: point arity mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

std::string MultiPoly::to_string(const std::string& var_stem) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool has_vars = degree_of(e) > 0;
    if (mag != 1 || !has_vars) out << mag.str();
    bool printed = (mag != 1) || !has_vars;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << var_stem << (i + 1);
      if (e[i] > 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : nvars_(p.nvars()) {
  for (const auto& [e, c] : p.terms()) {
    coeffs_.push_back(to_double(c));
    exps_.insert(exps_.end(), e.begin(), e.end());
  }
}

Complex CompiledPoly::eval(const Eigen::VectorXcd& x) const {
  Complex acc(0.0, 0.0);
  const int n = static_cast<int>(coeffs_.size());
  for (int t = 0; t < n; ++t) {
    Complex v(coeffs_[t], 0.0);
    const int* e = exps_.data() + static_cast<std::size_t>(t) * nvars_;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) v *= x[i];
    acc += v;
  }
  return acc;
}

}  // namespace cameral
