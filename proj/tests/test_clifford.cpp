#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bvcheck/clifford.hpp"
#include "bvcheck/rng.hpp"

using namespace bvcheck;

namespace {

// Symbolic ring for the light-cone lemma: free momenta p_0..p_9 plus two
// 16-component odd spinors.
struct LightconeRing {
  UniversePtr u = Universe::create();
  std::vector<GenId> p;
  std::vector<GenId> chi1, chi2;
  LightconeRing() {
    for (int mu = 0; mu <= 9; ++mu)
      p.push_back(u->parameter("p" + std::to_string(mu)));
    for (int i = 0; i < 16; ++i)
      chi1.push_back(u->odd_const("u" + std::to_string(i)));
    for (int i = 0; i < 16; ++i)
      chi2.push_back(u->odd_const("v" + std::to_string(i)));
  }
  MVec pvec() const {
    MVec v = MVec::zero(u);
    for (int mu = 0; mu <= 9; ++mu) v.c[mu] = Poly::gen(u, p[mu]);
    return v;
  }
};

// Quotient ring Q[c,s,p_a,p_*^{?1}]/(c^2+s^2-1, p_*^2 - sum p_a^2), with a
// second circle point for the group law and two odd spinors.
struct TauRing {
  UniversePtr u = Universe::create();
  GenId s, c, s2, c2, pstar, p8;
  std::vector<GenId> p;  // p1..p8 transverse
  std::vector<GenId> chi, chip;
  TauRing() {
    s = u->parameter("s");
    c = u->algebraic_param(
        "c", Poly::constant(u, 1) - Poly::gen(u, s, 2));
    s2 = u->parameter("s'");
    c2 = u->algebraic_param(
        "c'", Poly::constant(u, 1) - Poly::gen(u, s2, 2));
    pstar = u->unit_param("ps");
    for (int a = 1; a <= 7; ++a)
      p.push_back(u->parameter("p" + std::to_string(a)));
    Poly sq = Poly::gen(u, pstar, 2);
    for (GenId g : p) sq -= Poly::gen(u, g, 2);
    p8 = u->algebraic_param("p8", sq);
    p.push_back(p8);
    for (int i = 0; i < 16; ++i)
      chi.push_back(u->odd_const("u" + std::to_string(i)));
    for (int i = 0; i < 16; ++i)
      chip.push_back(u->odd_const("v" + std::to_string(i)));
  }
  Poly C() const { return Poly::gen(u, c); }
  Poly S() const { return Poly::gen(u, s); }
};

}  // namespace

TEST_CASE("representation relations") {
  const SpinorRep& rep = build_rep();  // verification happens here
  CHECK(rep_relation_count() == 200 + 20 + 45);
  // eta^{00} = +1 in the mostly-minus signature used throughout
  CHECK(rat_is_zero(rat_sub(rat_mul(rep.sigma[0], rep.sigma_bar[0]),
                            rat_identity(16))));
  CHECK(rat_is_zero(rat_add(rat_mul(rep.sigma[1], rep.sigma_bar[2]),
                            rat_mul(rep.sigma[2], rep.sigma_bar[1]))));
}

TEST_CASE("golden gamma grids are stable") {
  std::ifstream in(BVCHECK_TEST_DATA "/gamma_golden.json");
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(rep_golden_json() == ss.str());
}

TEST_CASE("clifford action of light-like vectors") {
  const SpinorRep& rep = build_rep();
  auto u = Universe::create();
  MVec mp = m_plus(u), mm = m_minus(u);
  CHECK(mink_pair(mp, mp).is_zero());
  CHECK(mink_pair(mm, mm).is_zero());
  CHECK(mink_pair(mp, mm) == Poly::constant(u, 1, 2));

  PMat mp_p = cl_plus(rep, mp), mp_m = cl_minus(rep, mp);
  PMat mm_p = cl_plus(rep, mm), mm_m = cl_minus(rep, mm);
  CHECK((mp_p * mp_m).is_zero());  // cl(m)^2 = 0 on S_+
  CHECK((mp_m * mp_p).is_zero());  // and on S_-
  CHECK((mm_p * mm_m).is_zero());
  PMat one = PMat::identity(u, 16);
  CHECK(mp_p * mm_m + mm_p * mp_m == one);  // cl(m)cl(n)+cl(n)cl(m) = 1
  CHECK(mp_m * mm_p + mm_m * mp_p == one);
}

TEST_CASE("lightcone projectors") {
  const SpinorRep& rep = build_rep();
  auto u = Universe::create();
  LightconeProjectors pr = lightcone_projector(rep, m_plus(u), m_minus(u));
  CHECK(rat_is_zero(rat_sub(rat_mul(pr.on_plus, pr.on_plus), pr.on_plus)));
  CHECK(rat_is_zero(rat_sub(rat_mul(pr.on_minus, pr.on_minus), pr.on_minus)));
  CHECK(rat_rank(pr.on_plus) == 8);
  CHECK(rat_rank(pr.on_minus) == 8);
  // cl(m) kills the image
  PMat p_plus = PMat::lift(u, pr.on_plus);
  CHECK((cl_minus(rep, m_plus(u)) * p_plus).is_zero());
  CHECK_THROWS(lightcone_projector(rep, m_plus(u), m_plus(u)));
}

TEST_CASE("lemma lightcone, fully symbolic") {
  const SpinorRep& rep = build_rep();
  LightconeRing R;
  LightconeProjectors pr =
      lightcone_projector(rep, m_plus(R.u), m_minus(R.u));
  MVec pv = R.pvec();
  Poly two_pm = mink_pair(pv, m_plus(R.u)) * Rational(2);

  // S_+ pair: theta = P chi1, theta' = P chi2, gamma^mu via sigma_bar
  PVec th = mat_vec(PMat::lift(R.u, pr.on_plus), gens_vec(R.u, R.chi1));
  PVec thp = mat_vec(PMat::lift(R.u, pr.on_plus), gens_vec(R.u, R.chi2));
  Poly lhs(R.u), rhs(R.u);
  lhs = t_pair(rep, R.u, mat_vec(cl_minus(rep, pv), th), thp);
  rhs = two_pm *
        t_pair(rep, R.u, mat_vec(cl_minus(rep, m_minus(R.u)), th), thp);
  Poly residual_plus = lhs - rhs;
  CHECK(residual_plus.is_zero());

  // S_- pair via sigma
  PVec th_m = mat_vec(PMat::lift(R.u, pr.on_minus), gens_vec(R.u, R.chi1));
  PVec thp_m = mat_vec(PMat::lift(R.u, pr.on_minus), gens_vec(R.u, R.chi2));
  Poly lhs_m = t_pair(rep, R.u, mat_vec(cl_plus(rep, pv), th_m), thp_m);
  Poly rhs_m =
      two_pm *
      t_pair(rep, R.u, mat_vec(cl_plus(rep, m_minus(R.u)), th_m), thp_m);
  CHECK((lhs_m - rhs_m).is_zero());

  SUBCASE("specialization p = m_+ kills both sides") {
    std::map<GenId, Poly> sub;
    sub.emplace(R.p[0], Poly::constant(R.u, 1, 2));
    sub.emplace(R.p[9], Poly::constant(R.u, 1, 2));
    for (int mu = 1; mu <= 8; ++mu) sub.emplace(R.p[mu], Poly::zero(R.u));
    CHECK(lhs.substitute(sub).is_zero());
    CHECK(rhs.substitute(sub).is_zero());
  }

  SUBCASE("rational spot check") {
    Rng rng(79);
    std::map<GenId, Poly> sub;
    for (int mu = 0; mu <= 9; ++mu)
      sub.emplace(R.p[mu], Poly::constant(R.u, rng.rational(7, 3)));
    CHECK((lhs - rhs).substitute(sub).is_zero());
  }
}

TEST_CASE("one-parameter spin group") {
  const SpinorRep& rep = build_rep();
  TauRing R;
  Poly one = Poly::constant(R.u, 1), zero = Poly::zero(R.u);

  SUBCASE("identity at tau = 0 and half turn") {
    CHECK(g_tau(rep, R.u, one, zero, R.p, R.pstar) ==
          PMat::identity(R.u, 16));
    PMat half = g_tau(rep, R.u, zero, one, R.p, R.pstar);
    CHECK(half * half == -PMat::identity(R.u, 16));
  }

  SUBCASE("(p_a gamma^{a9})^2 = -p_*^2") {
    PMat pg = PMat::zero(R.u, 16, 16);
    for (int a = 1; a <= 8; ++a)
      pg = pg + rot_a9(rep, R.u, a).scaled(Poly::gen(R.u, R.p[a - 1]));
    CHECK(pg * pg ==
          PMat::identity(R.u, 16).scaled(-Poly::gen(R.u, R.pstar, 2)));
  }

  SUBCASE("group law") {
    Poly c1 = R.C(), s1 = R.S();
    Poly c2 = Poly::gen(R.u, R.c2), s2 = Poly::gen(R.u, R.s2);
    PMat lhs = g_tau(rep, R.u, c1, s1, R.p, R.pstar) *
               g_tau(rep, R.u, c2, s2, R.p, R.pstar);
    PMat rhs =
        g_tau(rep, R.u, c1 * c2 - s1 * s2, s1 * c2 + c1 * s2, R.p, R.pstar);
    CHECK(lhs == rhs);
  }

  SUBCASE("inverse is g(c,-s)") {
    PMat g = g_tau(rep, R.u, R.C(), R.S(), R.p, R.pstar);
    PMat gi = g_tau(rep, R.u, R.C(), -R.S(), R.p, R.pstar);
    CHECK(g * gi == PMat::identity(R.u, 16));
  }
}

TEST_CASE("conjugation identity") {
  const SpinorRep& rep = build_rep();
  TauRing R;
  MVec mt = m_tau(R.u, R.C(), R.S(), R.p, R.pstar);
  MVec nt = n_tau(R.u, R.C(), R.S(), R.p, R.pstar);
  CHECK(mink_pair(mt, mt).is_zero());
  CHECK(mink_pair(nt, nt).is_zero());
  CHECK(mink_pair(mt, nt) == Poly::constant(R.u, 1, 2));

  PMat g = g_tau(rep, R.u, R.C(), R.S(), R.p, R.pstar);
  PMat gi = g_tau(rep, R.u, R.C(), -R.S(), R.p, R.pstar);
  // S_+ -> S_- direction and S_- -> S_+ direction, for both m and n
  CHECK(g * cl_minus(rep, m_plus(R.u)) * gi == cl_minus(rep, mt));
  CHECK(g * cl_plus(rep, m_plus(R.u)) * gi == cl_plus(rep, mt));
  CHECK(g * cl_minus(rep, m_minus(R.u)) * gi == cl_minus(rep, nt));
  CHECK(g * cl_plus(rep, m_minus(R.u)) * gi == cl_plus(rep, nt));

  SUBCASE("boundary values of the family") {
    std::map<GenId, Poly> at0{{R.c, Poly::constant(R.u, 1)},
                              {R.s, Poly::zero(R.u)}};
    std::map<GenId, Poly> at1{{R.c, Poly::zero(R.u)},
                              {R.s, Poly::constant(R.u, 1)}};
    for (int mu = 0; mu < 10; ++mu) {
      CHECK(mt.c[mu].substitute(at0) == m_plus(R.u).c[mu]);
      CHECK(mt.c[mu].substitute(at1) == m_minus(R.u).c[mu]);
      CHECK(nt.c[mu].substitute(at0) == m_minus(R.u).c[mu]);
      CHECK(nt.c[mu].substitute(at1) == m_plus(R.u).c[mu]);
    }
  }
}

TEST_CASE("rotations preserving the light-cone kernels") {
  const SpinorRep& rep = build_rep();
  auto u = Universe::create();
  // Transverse rotations gamma^{ab} intertwine cl(m_+) and cl(m_-) exactly.
  for (MVec m : {m_plus(u), m_minus(u)}) {
    PMat clm = cl_minus(rep, m);
    PMat clp = cl_plus(rep, m);
    for (int a = 1; a <= 8; ++a)
      for (int b = a + 1; b <= 8; ++b) {
        PMat gp = PMat::lift(u, rep.gamma2_plus(a, b));
        PMat gm = PMat::lift(u, rep.gamma2_minus(a, b));
        CHECK(clm * gp == gm * clm);
        CHECK(clp * gm == gp * clp);
      }
  }
  // The boost gamma^{09} rescales cl(m_+-) (so it does not commute with
  // them), but it does commute with the kernel projectors, which is what the
  // moment-map restriction uses.
  LightconeProjectors pr = lightcone_projector(rep, m_plus(u), m_minus(u));
  RatMat b_plus = rep.gamma2_plus(0, 9);
  RatMat b_minus = rep.gamma2_minus(0, 9);
  CHECK(rat_is_zero(rat_sub(rat_mul(b_plus, pr.on_plus),
                            rat_mul(pr.on_plus, b_plus))));
  CHECK(rat_is_zero(rat_sub(rat_mul(b_minus, pr.on_minus),
                            rat_mul(pr.on_minus, b_minus))));
  {
    // ... while cl(m_+) itself is rescaled: the boost intertwines it only up
    // to the nonzero eigenvalue, so the naive commutator is nonzero.
    RatMat clm = rat_scale(rat_add(rep.sigma_bar[0], rep.sigma_bar[9]),
                           Rational(1, 2));
    CHECK_FALSE(
        rat_is_zero(rat_sub(rat_mul(b_minus, clm), rat_mul(clm, b_plus))));
  }

  // Matrix form of the vanishing used by the Lorentz moment restriction:
  // T(gamma^{mu nu} theta+, theta) = 0 on the gauge for {ab} and {09},
  // nonzero pattern for {a0} and {a9}.
  auto t_block = [&](const RatMat& g2m) {
    return rat_mul(rat_mul(rat_transpose(rat_mul(g2m, pr.on_minus)),
                           rep.t_pairing),
                   pr.on_plus);
  };
  for (int a = 1; a <= 8; ++a) {
    for (int b = a + 1; b <= 8; ++b)
      CHECK(rat_is_zero(t_block(rep.gamma2_minus(a, b))));
    CHECK_FALSE(rat_is_zero(t_block(rep.gamma2_minus(a, 0))));
    CHECK_FALSE(rat_is_zero(t_block(rep.gamma2_minus(a, 9))));
  }
  CHECK(rat_is_zero(t_block(rep.gamma2_minus(0, 9))));
}

TEST_CASE("lemma p+ flow formula") {
  const SpinorRep& rep = build_rep();
  TauRing R;
  Poly C = R.C(), S = R.S();
  PMat g = g_tau(rep, R.u, C, S, R.p, R.pstar);
  PMat gi = g_tau(rep, R.u, C, -S, R.p, R.pstar);
  MVec mt = m_tau(R.u, C, S, R.p, R.pstar);
  // The L(tau) fields are g times projector-constrained base spinors; the
  // flow formula and its closed form are written in the base parameters
  // theta in ker cl(m_+)|S+, theta+ in ker cl(m_+)|S-.
  LightconeProjectors pr0 =
      lightcone_projector(rep, m_plus(R.u), m_minus(R.u));
  PVec th = mat_vec(PMat::lift(R.u, pr0.on_plus), gens_vec(R.u, R.chi));
  PVec thp = mat_vec(PMat::lift(R.u, pr0.on_minus), gens_vec(R.u, R.chip));
  {
    // the flowed fields satisfy the L(tau) constraint
    PVec flowed = mat_vec(g, th);
    PVec killed = mat_vec(cl_minus(rep, mt), flowed);
    bool zero = true;
    for (const Poly& q : killed)
      if (!q.is_zero()) zero = false;
    CHECK(zero);
  }

  SUBCASE("derivative display for g") {
    for (int a = 1; a <= 8; ++a) {
      PMat got = g_tau_dp(rep, R.u, C, S, R.p, R.pstar, a);
      PMat pg = PMat::zero(R.u, 16, 16);
      for (int b = 1; b <= 8; ++b)
        pg = pg + rot_a9(rep, R.u, b).scaled(Poly::gen(R.u, R.p[b - 1]));
      Poly pa = Poly::gen(R.u, R.p[a - 1]);
      PMat expect = (pg.scaled(pa * Poly::gen(R.u, R.pstar, -2)) -
                     rot_a9(rep, R.u, a))
                        .scaled(S * Poly::gen(R.u, R.pstar, -1));
      CHECK(got == expect);
    }
  }

  SUBCASE("closed form of the flow correction") {
    Poly cs_over = C * S * Poly::gen(R.u, R.pstar, -1);  // sin(pi tau)/2p_*
    Poly t_c9(R.u);
    for (int b = 1; b <= 8; ++b)
      t_c9 += Poly::gen(R.u, R.p[b - 1]) *
              t_pair(rep, R.u, mat_vec(rot_a9_minus(rep, R.u, b), thp), th);
    for (int a = 1; a <= 8; ++a) {
      PMat dg = g_tau_dp(rep, R.u, C, S, R.p, R.pstar, a);
      Poly lhs = t_pair(rep, R.u, mat_vec(gi * dg, thp), th);
      Poly pa = Poly::gen(R.u, R.p[a - 1]);
      Poly rhs =
          cs_over *
          (pa * Poly::gen(R.u, R.pstar, -2) * t_c9 -
           t_pair(rep, R.u, mat_vec(rot_a9_minus(rep, R.u, a), thp), th));
      Poly residual = lhs - rhs;
      CHECK(residual.is_zero());
    }
  }

  SUBCASE("tau = 0 leaves p+ unchanged") {
    std::map<GenId, Poly> at0{{R.c, Poly::constant(R.u, 1)},
                              {R.s, Poly::zero(R.u)}};
    for (int a = 1; a <= 8; ++a) {
      PMat dg = g_tau_dp(rep, R.u, C, S, R.p, R.pstar, a);
      Poly lhs = t_pair(rep, R.u, mat_vec(gi * dg, thp), th);
      CHECK(lhs.substitute(at0).is_zero());
    }
  }

  SUBCASE("rational circle point spot check") {
    std::map<GenId, Poly> num{{R.c, Poly::constant(R.u, 3, 5)},
                              {R.s, Poly::constant(R.u, 4, 5)},
                              {R.p[0], Poly::constant(R.u, 3)},
                              {R.p[7], Poly::constant(R.u, 4)},
                              {R.pstar, Poly::constant(R.u, 5)}};
    for (int a = 1; a <= 7; ++a) num.emplace(R.p[a], Poly::zero(R.u));
    Poly cs_over = C * S * Poly::gen(R.u, R.pstar, -1);
    Poly t_c9(R.u);
    for (int b = 1; b <= 8; ++b)
      t_c9 += Poly::gen(R.u, R.p[b - 1]) *
              t_pair(rep, R.u, mat_vec(rot_a9_minus(rep, R.u, b), thp), th);
    for (int a : {1, 8}) {
      PMat dg = g_tau_dp(rep, R.u, C, S, R.p, R.pstar, a);
      Poly lhs = t_pair(rep, R.u, mat_vec(gi * dg, thp), th);
      Poly rhs =
          cs_over *
          (Poly::gen(R.u, R.p[a - 1]) * Poly::gen(R.u, R.pstar, -2) * t_c9 -
           t_pair(rep, R.u, mat_vec(rot_a9_minus(rep, R.u, a), thp), th));
      CHECK((lhs - rhs).substitute(num).is_zero());
    }
  }

  SUBCASE("L(1) equals the opposite light-cone gauge") {
    std::map<GenId, Poly> at1{{R.c, Poly::zero(R.u)},
                              {R.s, Poly::constant(R.u, 1)}};
    PMat constraint = cl_minus(rep, mt);  // cl(m(tau)) theta = 0, theta in S+
    PMat lminus = cl_minus(rep, m_minus(R.u));
    bool equal = true;
    for (int i = 0; i < 16 && equal; ++i)
      for (int j = 0; j < 16; ++j)
        if (!(constraint.at(i, j).substitute(at1) == lminus.at(i, j))) {
          equal = false;
          break;
        }
    CHECK(equal);
  }
}
