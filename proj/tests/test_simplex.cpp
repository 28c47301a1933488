#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bvcheck/rng.hpp"
#include "bvcheck/simplex.hpp"

using namespace bvcheck;

namespace {

struct Fix {
  UniversePtr u = Universe::create();
  SimplexAlgebra sx{u, 4};
  Poly g(GenId id) const { return Poly::gen(u, id); }
  Poly c(long n, long d = 1) const { return Poly::constant(u, n, d); }

  Poly random_form(Rng& rng, int k, int max_deg, int terms) const {
    std::vector<GenId> gens;
    for (int i = 1; i <= k; ++i) {
      gens.push_back(sx.t(k, i));
      gens.push_back(sx.dt(k, i));
    }
    return rng.poly(u, gens, max_deg, terms);
  }
};

// Test-side oracle: iterated symbolic integration over the simplex,
// integrating t_k over [0, 1 - t_1 - ... - t_{k-1}] and so on down to t_1.
Poly iterated_integral(const Fix& F, int k, Poly body) {
  for (int v = k; v >= 1; --v) {
    GenId tv = F.sx.t(k, v);
    // antiderivative in t_v
    Poly anti(F.u);
    for (const auto& [m, c] : body.terms()) {
      int e = 0;
      Monomial rest;
      for (const auto& [g, ee] : m)
        if (g == tv)
          e = ee;
        else
          rest.emplace_back(g, ee);
      Poly term = Poly::monomial_term(F.u, rest, c / (e + 1));
      anti += term * Poly::gen(F.u, tv, e + 1);
    }
    Poly upper = Poly::constant(F.u, 1);
    for (int w = 1; w < v; ++w) upper -= Poly::gen(F.u, F.sx.t(k, w));
    body = anti.substitute({{tv, upper}});  // lower bound contributes 0
  }
  return body;
}

}  // namespace

TEST_CASE("de Rham differential") {
  Fix F;
  CHECK(F.sx.deRham(1, F.g(F.sx.t(1, 1))) == F.g(F.sx.dt(1, 1)));
  Poly w = F.g(F.sx.t(2, 1)) * F.g(F.sx.dt(2, 2)) -
           F.g(F.sx.t(2, 2)) * F.g(F.sx.dt(2, 1));
  CHECK(F.sx.deRham(2, w) ==
        F.c(2) * F.g(F.sx.dt(2, 1)) * F.g(F.sx.dt(2, 2)));
  Rng rng(61);
  for (int t = 0; t < 20; ++t) {
    int k = rng.uniform(1, 3);
    Poly f = F.random_form(rng, k, 4, 5);
    CHECK(F.sx.deRham(k, F.sx.deRham(k, f)).is_zero());
  }
}

TEST_CASE("simplicial pullbacks") {
  Fix F;
  SUBCASE("coface kills the inserted coordinate") {
    // d^0: Delta^0 -> Delta^1 hits vertex 1, so t_0 pulls back to 0
    Poly t0_on_1 = F.sx.coord(1, 0);
    CHECK(F.sx.pullback(SimplexAlgebra::coface(1, 0), 1, t0_on_1).is_zero());
    CHECK(F.sx.pullback(SimplexAlgebra::coface(1, 1), 1, t0_on_1) == F.c(1));
  }
  SUBCASE("codegeneracy of a constant is constant") {
    CHECK(F.sx.pullback(SimplexAlgebra::codegeneracy(0, 0), 0, F.c(1)) ==
          F.c(1));
  }
  SUBCASE("barycentric sum is preserved") {
    // sum of all coordinates pulls back to 1 along any monotone map
    std::vector<int> mu{0, 2, 3};  // [2] -> [3]
    Poly sum(F.u);
    for (int j = 0; j <= 3; ++j) sum += F.sx.coord(3, j);
    CHECK(F.sx.pullback(mu, 3, sum) == F.c(1));
  }
  SUBCASE("functoriality") {
    Rng rng(67);
    for (int t = 0; t < 15; ++t) {
      // nu: [1] -> [2], mu: [2] -> [3], both strictly monotone random
      int a = rng.uniform(0, 1), b = rng.uniform(a + 1, 2);
      std::vector<int> nu{a, b};
      int c0 = rng.uniform(0, 1), c1 = rng.uniform(c0 + 1, 2),
          c2 = rng.uniform(c1 + 1, 3);
      std::vector<int> mu{c0, c1, c2};
      Poly w = F.random_form(rng, 3, 3, 4);
      std::vector<int> comp;
      for (int v : nu) comp.push_back(mu[v]);
      Poly lhs = F.sx.pullback(comp, 3, w);
      Poly rhs = F.sx.pullback(nu, 2, F.sx.pullback(mu, 3, w));
      CHECK(lhs == rhs);
    }
  }
  SUBCASE("non-monotone maps rejected") {
    CHECK_THROWS(F.sx.pullback({1, 0}, 1, F.c(1)));
  }
}

TEST_CASE("integration over the simplex") {
  Fix F;
  CHECK(F.sx.integrate(1, F.g(F.sx.dt(1, 1))) == F.c(1));
  Poly w = F.sx.coord(1, 0) * F.g(F.sx.t(1, 1)) * F.g(F.sx.dt(1, 1));
  CHECK(F.sx.integrate(1, w) == F.c(1, 6));
  CHECK(F.sx.integrate(2, F.g(F.sx.dt(2, 1)) * F.g(F.sx.dt(2, 2))) ==
        F.c(1, 2));
  // non-top-degree terms integrate to zero
  CHECK(F.sx.integrate(2, F.g(F.sx.t(2, 1)) * F.g(F.sx.dt(2, 1))).is_zero());

  SUBCASE("Dirichlet formula vs iterated symbolic integration") {
    for (int k = 1; k <= 3; ++k) {
      // all monomials with exponents <= 4
      std::vector<std::vector<int>> exps{{}};
      for (int i = 0; i < k; ++i) {
        std::vector<std::vector<int>> next;
        for (auto& e : exps)
          for (int a = 0; a <= 4; ++a) {
            auto e2 = e;
            e2.push_back(a);
            next.push_back(e2);
          }
        exps = next;
      }
      for (auto& e : exps) {
        Poly body = Poly::constant(F.u, 1);
        for (int i = 1; i <= k; ++i) body *= Poly::gen(F.u, F.sx.t(k, i), e[i - 1]);
        Poly top = body;
        for (int i = 1; i <= k; ++i) top *= F.g(F.sx.dt(k, i));
        CHECK(F.sx.integrate(k, top) == iterated_integral(F, k, body));
      }
    }
  }
}

TEST_CASE("Stokes residuals vanish") {
  Fix F;
  CHECK(F.sx.stokes_residual(1, F.g(F.sx.t(1, 1))).is_zero());
  CHECK(F.sx.stokes_residual(2, Poly::zero(F.u)).is_zero());
  Rng rng(71);
  for (int k = 1; k <= 3; ++k)
    for (int t = 0; t < 34; ++t) {
      Poly w = F.random_form(rng, k, 6, 6);
      CHECK(F.sx.stokes_residual(k, w).is_zero());
    }
}

TEST_CASE("degeneracy pullbacks have zero top integral") {
  Fix F;
  Rng rng(73);
  for (int t = 0; t < 10; ++t) {
    // forms pulled back from Delta^1 to Delta^2 are degenerate
    int i = rng.uniform(0, 1);
    Poly w = F.random_form(rng, 1, 4, 5);
    Poly up = F.sx.pullback(SimplexAlgebra::codegeneracy(1, i), 1, w);
    CHECK(F.sx.integrate(2, up).is_zero());
  }
}
