#include "bvcheck/simplex.hpp"

namespace bvcheck {

SimplexAlgebra::SimplexAlgebra(const UniversePtr& u, int kmax,
                               const std::string& prefix)
    : u_(u), kmax_(kmax) {
  t_.resize(kmax + 1);
  dt_.resize(kmax + 1);
  for (int k = 1; k <= kmax; ++k)
    for (int i = 1; i <= k; ++i) {
      std::string suffix = std::to_string(k) + "_" + std::to_string(i);
      t_[k].push_back(u->simplex_coord(prefix + suffix));
      dt_[k].push_back(u->simplex_form("d" + prefix + suffix));
    }
}

GenId SimplexAlgebra::t(int k, int i) const {
  if (k < 1 || k > kmax_ || i < 1 || i > k) fail("simplex coordinate range");
  return t_[k][i - 1];
}

GenId SimplexAlgebra::dt(int k, int i) const {
  if (k < 1 || k > kmax_ || i < 1 || i > k) fail("simplex form range");
  return dt_[k][i - 1];
}

Poly SimplexAlgebra::t0(int k) const {
  Poly p = Poly::constant(u_, 1);
  for (int i = 1; i <= k; ++i) p -= Poly::gen(u_, t(k, i));
  return p;
}

Poly SimplexAlgebra::dt0(int k) const {
  Poly p(u_);
  for (int i = 1; i <= k; ++i) p -= Poly::gen(u_, dt(k, i));
  return p;
}

Poly SimplexAlgebra::coord(int k, int j) const {
  return j == 0 ? t0(k) : Poly::gen(u_, t(k, j));
}

Poly SimplexAlgebra::dcoord(int k, int j) const {
  return j == 0 ? dt0(k) : Poly::gen(u_, dt(k, j));
}

Poly SimplexAlgebra::deRham(int k, const Poly& w) const {
  Poly acc(u_);
  for (int i = 1; i <= k; ++i)
    acc += Poly::gen(u_, dt(k, i)) * w.partial(t(k, i));
  return acc;
}

Poly SimplexAlgebra::pullback(const std::vector<int>& mu, int l,
                              const Poly& w) const {
  int k = static_cast<int>(mu.size()) - 1;
  for (std::size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] > mu[i + 1]) fail("pullback map must preserve vertex order");
  if (mu.empty() || mu.back() > l) fail("pullback map exceeds target simplex");
  std::map<GenId, Poly> sub;
  for (int j = 1; j <= l; ++j) {
    Poly uj(u_), duj(u_);
    for (int i = 0; i <= k; ++i)
      if (mu[i] == j) {
        uj += coord(k, i);
        duj += dcoord(k, i);
      }
    sub.emplace(t(l, j), uj);
    sub.emplace(dt(l, j), duj);
  }
  return w.substitute(sub);
}

std::vector<int> SimplexAlgebra::coface(int k, int i) {
  std::vector<int> mu;
  for (int j = 0; j <= k - 1; ++j) mu.push_back(j < i ? j : j + 1);
  return mu;
}

std::vector<int> SimplexAlgebra::codegeneracy(int k, int i) {
  std::vector<int> mu;
  for (int j = 0; j <= k + 1; ++j) mu.push_back(j <= i ? j : j - 1);
  return mu;
}

Poly SimplexAlgebra::integrate(int k, const Poly& w) const {
  if (k == 0) return w;
  std::vector<GenId> dts;
  for (int i = 1; i <= k; ++i) dts.push_back(dt(k, i));
  Poly top = w.berezin(dts);
  Poly result(u_);
  for (const auto& [m, c] : top.terms()) {
    Rational coef = c;
    Monomial rest;
    int total = 0;
    for (const auto& [g, e] : m) {
      bool is_t = false;
      for (int i = 1; i <= k; ++i)
        if (g == t(k, i)) {
          is_t = true;
          break;
        }
      if (is_t) {
        coef *= factorial(e);
        total += e;
      } else {
        rest.emplace_back(g, e);
      }
    }
    coef /= factorial(total + k);
    result += Poly::monomial_term(u_, rest, coef);
  }
  return result;
}

Poly SimplexAlgebra::stokes_residual(int k, const Poly& w) const {
  Poly lhs = integrate(k, deRham(k, w));
  for (int i = 0; i <= k; ++i) {
    Poly face = integrate(k - 1, pullback(coface(k, i), k, w));
    lhs += (i % 2) ? face : -face;
  }
  return lhs;
}

int SimplexAlgebra::form_degree(int k, const Poly& w) const {
  if (w.is_zero()) return -1;
  int deg = 0;
  for (const auto& [m, c] : w.terms()) {
    (void)c;
    int d = 0;
    for (const auto& [g, e] : m) {
      (void)e;
      for (int i = 1; i <= k; ++i)
        if (g == dt(k, i)) ++d;
    }
    deg = std::max(deg, d);
  }
  return deg;
}

}  // namespace bvcheck
