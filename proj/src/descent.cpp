#include "bvcheck/descent.hpp"

namespace bvcheck {

void CechModel::validate() const {
  if (!sx) fail("Cech model needs a simplex algebra");
  if (sx->kmax() < kmax + 2)
    fail("simplex algebra must provide levels up to kmax + 2");
  Poly sum(chart.u);
  for (const Poly& f : pou) sum += f;
  if (!(sum == Poly::constant(chart.u, 1)))
    fail("partition of unity does not sum to 1: " + sum.str());
}

std::vector<Seq> CechModel::sequences(int k) const {
  std::vector<Seq> out;
  Seq cur(k + 1, 0);
  for (;;) {
    out.push_back(cur);
    int i = k;
    while (i >= 0 && ++cur[i] == opens()) cur[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

Poly CechModel::aux_d(const Poly& f) const {
  if (!parametrized()) return Poly::zero(chart.u);
  return Poly::gen(chart.u, aux_dt) * f.partial(aux_t);
}

TWCochain whitney0(const CechModel& m, const std::vector<Poly>& f_alpha,
                   bool gaussian) {
  const SimplexAlgebra* sx = m.sx;
  std::vector<Poly> fs = f_alpha;
  return {[sx, fs](const Seq& seq) {
            int k = static_cast<int>(seq.size()) - 1;
            Poly acc(fs[0].universe());
            for (int i = 0; i <= k; ++i)
              acc += sx->coord(k, i) * fs[seq[i]];
            return acc;
          },
          gaussian};
}

TWCochain whitney1(const CechModel& m,
                   const std::vector<std::vector<Poly>>& c_ab,
                   bool gaussian) {
  const SimplexAlgebra* sx = m.sx;
  auto c = c_ab;
  return {[sx, c](const Seq& seq) {
            int k = static_cast<int>(seq.size()) - 1;
            const ConstUniversePtr& u = c[0][0].universe();
            Poly acc(u);
            for (int i = 0; i <= k; ++i)
              for (int j = i + 1; j <= k; ++j) {
                const Poly& cc = c[seq[i]][seq[j]];
                if (cc.is_zero()) continue;
                Poly w = sx->coord(k, i) * sx->dcoord(k, j) -
                         sx->coord(k, j) * sx->dcoord(k, i);
                acc += w * cc;
              }
            return acc;
          },
          gaussian};
}

TWCochain whitney2(const CechModel& m,
                   const std::vector<std::vector<std::vector<Poly>>>& c_abc,
                   bool gaussian) {
  const SimplexAlgebra* sx = m.sx;
  auto c = c_abc;
  return {[sx, c](const Seq& seq) {
            int k = static_cast<int>(seq.size()) - 1;
            const ConstUniversePtr& u = c[0][0][0].universe();
            Poly acc(u);
            for (int i = 0; i <= k; ++i)
              for (int j = i + 1; j <= k; ++j)
                for (int l = j + 1; l <= k; ++l) {
                  const Poly& cc = c[seq[i]][seq[j]][seq[l]];
                  if (cc.is_zero()) continue;
                  Poly w =
                      sx->coord(k, i) * sx->dcoord(k, j) * sx->dcoord(k, l) -
                      sx->coord(k, j) * sx->dcoord(k, i) * sx->dcoord(k, l) +
                      sx->coord(k, l) * sx->dcoord(k, i) * sx->dcoord(k, j);
                  acc += (w * cc) * Rational(2);
                }
            return acc;
          },
          gaussian};
}

TWCochain cochain_sum(const TWCochain& a, const TWCochain& b) {
  if (a.gaussian != b.gaussian) fail("mixing half-form classes in a cochain");
  auto fa = a.comp, fb = b.comp;
  return {[fa, fb](const Seq& s) { return fa(s) + fb(s); }, a.gaussian};
}

void check_tw(const CechModel& m, const TWCochain& c, int up_to_level) {
  const SimplexAlgebra& sx = *m.sx;
  for (int l = 1; l <= up_to_level; ++l) {
    for (const Seq& seq : m.sequences(l)) {
      Poly here = c.comp(seq);
      // cofaces: restricting the level-l form to face i must reproduce the
      // component of the subsequence
      for (int i = 0; i <= l; ++i) {
        Seq sub = seq;
        sub.erase(sub.begin() + i);
        Poly low = c.comp(sub);
        Poly restricted = sx.pullback(SimplexAlgebra::coface(l, i), l, here);
        if (!(restricted == low))
          fail("TW compatibility failed at a coface of level " +
               std::to_string(l));
      }
    }
    // codegeneracies: doubling entry i of a level-(l-1) sequence
    for (const Seq& seq : m.sequences(l - 1)) {
      for (int i = 0; i <= l - 1; ++i) {
        Seq dup = seq;
        dup.insert(dup.begin() + i, seq[i]);
        Poly high = c.comp(dup);
        Poly expect =
            sx.pullback(SimplexAlgebra::codegeneracy(l - 1, i), l - 1,
                        c.comp(seq));
        if (!(high == expect))
          fail("TW compatibility failed at a codegeneracy of level " +
               std::to_string(l));
      }
    }
  }
}

TWCochain coboundary(const CechModel& m, const TWCochain& c) {
  const CechModel* mp = &m;
  auto f = c.comp;
  bool gaussian = c.gaussian;
  return {[mp, f, gaussian](const Seq& seq) {
            int k = static_cast<int>(seq.size()) - 1;
            Poly v = f(seq);
            Poly h = Poly::gen(mp->chart.u, mp->chart.u->hbar_id());
            return mp->sx->deRham(k, v) +
                   h * delta0(mp->chart, v, gaussian);
          },
          gaussian};
}

LagrangianFamily FamilySet::family(const CechModel& m, const Seq& seq) const {
  int k = static_cast<int>(seq.size()) - 1;
  LagrangianFamily fam;
  fam.k = k;
  for (auto& [x, xi] : m.chart.pairs) {
    (void)xi;
    Poly acc(m.chart.u);
    for (int i = 0; i <= k; ++i)
      acc += m.sx->coord(k, i) * w_alpha[seq[i]].partial(x);
    fam.xi.push_back(acc);
  }
  return fam;
}

namespace {

// integral over [0,1] of the scratch parameter
Poly integrate_scale(const Poly& f, GenId scale) {
  Poly out(f.universe());
  for (const auto& [mono, coef] : f.terms()) {
    int e = 0;
    Monomial rest;
    for (const auto& [g, ee] : mono)
      if (g == scale)
        e = ee;
      else
        rest.emplace_back(g, ee);
    out += Poly::monomial_term(f.universe(), rest, coef / (e + 1));
  }
  return out;
}

// Poincare homotopy on the level-k simplex variables, based at t = 0:
// K(term) = iota_E(term) / (t-degree + dt-degree), with E the Euler field.
Poly simplex_homotopy(const CechModel& m, int k, const Poly& w) {
  const ConstUniversePtr& u = m.chart.u;
  Poly out(u);
  for (const auto& [mono, coef] : w.terms()) {
    int tdeg = 0, fdeg = 0;
    for (const auto& [g, e] : mono) {
      for (int i = 1; i <= k; ++i) {
        if (g == m.sx->t(k, i)) tdeg += e;
        if (g == m.sx->dt(k, i)) fdeg += e;
      }
    }
    if (fdeg == 0) continue;
    Poly term = Poly::monomial_term(u, mono, coef / (tdeg + fdeg));
    for (int i = 1; i <= k; ++i) {
      std::map<GenId, Poly> img{{m.sx->dt(k, i), Poly::constant(u, 1)}};
      Derivation d_dt(u, 1, std::move(img), false);
      out += Poly::gen(u, m.sx->t(k, i)) * term.derive(d_dt);
    }
  }
  return out;
}

}  // namespace

Poly compute_eta(const CechModel& m, const LagrangianFamily& fam,
                 const std::vector<Rational>& x0, GenId scale) {
  const ConstUniversePtr& u = m.chart.u;
  const int n = m.chart.dim();
  const int k = fam.k;
  std::vector<GenId> xs = m.chart.xs();

  // closedness: the mixed x-derivatives of dxi_a/dt_i must be symmetric
  for (int i = 1; i <= k; ++i)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Poly r = fam.xi[a].partial(m.sx->t(k, i)).partial(xs[b]) -
                 fam.xi[b].partial(m.sx->t(k, i)).partial(xs[a]);
        if (!r.is_zero())
          fail("family is not Lagrangian: mixed-derivative residual " +
               r.str());
      }

  // radial homotopy based at x0
  std::map<GenId, Poly> shrink;
  for (int a = 0; a < n; ++a) {
    Rational base = a < static_cast<int>(x0.size()) ? x0[a] : Rational(0);
    shrink.emplace(xs[a], Poly::constant(u, base) +
                              Poly::gen(u, scale) *
                                  (Poly::gen(u, xs[a]) -
                                   Poly::constant(u, base)));
  }
  // eta is stored as sum_i dt_i eta_i (form factor on the left), matching
  // the position the simplex differential produces; with odd-valued eta_i
  // the other order would flip the sign of the transported Delta-term.
  Poly eta(u);
  for (int i = 1; i <= k; ++i) {
    Poly etai(u);
    for (int a = 0; a < n; ++a) {
      Rational base = a < static_cast<int>(x0.size()) ? x0[a] : Rational(0);
      Poly dxa = Poly::gen(u, xs[a]) - Poly::constant(u, base);
      etai += integrate_scale(
          dxa * fam.xi[a].partial(m.sx->t(k, i)).substitute(shrink), scale);
    }
    eta += Poly::gen(u, m.sx->dt(k, i)) * etai;
  }

  // kill the simplex differential: delta eta is x-independent, so one
  // homotopy correction removes it
  Poly deta = m.sx->deRham(k, eta);
  for (GenId x : xs)
    if (deta.depends_on(x))
      fail("delta eta unexpectedly depends on the chart");
  eta -= simplex_homotopy(m, k, deta);

  // postconditions: both defining equations hold exactly
  for (int i = 1; i <= k; ++i) {
    std::map<GenId, Poly> img{{m.sx->dt(k, i), Poly::constant(u, 1)}};
    Poly etai = eta.derive(Derivation(u, 1, std::move(img), false));
    for (int a = 0; a < n; ++a) {
      if (!(etai.partial(xs[a]) == fam.xi[a].partial(m.sx->t(k, i))))
        fail("eta postcondition d eta_i/dx = d xi/dt failed");
    }
  }
  if (!m.sx->deRham(k, eta).is_zero())
    fail("eta postcondition delta eta = 0 failed");
  return eta;
}

Poly exp_nilpotent(const Poly& p) {
  if (!p.is_nilpotent()) fail("exponential of a non-nilpotent element");
  const ConstUniversePtr& u = p.universe();
  Poly acc = Poly::constant(u, 1);
  Poly term = Poly::constant(u, 1);
  int k = 0;
  while (true) {
    term = term * p;
    if (term.is_zero()) break;
    ++k;
    acc += term * (Rational(1) / factorial(k));
    if (k > 200) fail("exponential series did not terminate");
  }
  return acc;
}

Poly integrate_over_family(const CechModel& m, const LagrangianFamily& fam,
                           const Poly& coeff) {
  std::map<GenId, Poly> sub;
  for (int a = 0; a < m.chart.dim(); ++a)
    sub.emplace(m.chart.pairs[a].second, fam.xi[a]);
  return coeff.substitute(sub).gaussian_moment(m.chart.xs());
}

Poly ms_residual(const CechModel& m, const LagrangianFamily& fam,
                 const Poly& eta, const HalfForm& sigma) {
  if (!sigma.gaussian)
    fail("transport identity requires the Gaussian class");
  const ConstUniversePtr& u = m.chart.u;
  const int k = fam.k;
  Poly h = Poly::gen(u, u->hbar_id());
  Poly weight = exp_nilpotent(-(eta * Poly::gen(u, u->hbar_id(), -1)));

  Poly lhs = m.sx->deRham(
      k, integrate_over_family(m, fam, weight * sigma.coeff));
  Poly dsig = m.sx->deRham(k, sigma.coeff) +
              h * delta0(m.chart, sigma.coeff, /*gaussian=*/true);
  Poly rhs = integrate_over_family(m, fam, weight * dsig);
  return lhs - rhs;
}

SuperOp phi_op(const CechModel& m, const Seq& seq) {
  const ConstUniversePtr& u = m.chart.u;
  const int k = static_cast<int>(seq.size()) - 1;
  Poly h = Poly::gen(u, u->hbar_id());
  SuperOp acc{k & 1, [u](const HalfForm& s) {
                return HalfForm{Poly(u), s.chart, s.gaussian};
              }};
  bool first = true;
  auto h_factor = [&](int open) {
    SuperOp hj = ham_op(m.pou[open], m.chart);
    if (!m.parametrized()) return hj;
    // m(d phi) + hbar H, odd either way (d phi carries the aux form)
    Poly dphi = m.aux_d(m.pou[open]);
    return SuperOp{1, [dphi, hj, h](const HalfForm& s) {
                     return s.scaled(dphi) + hj.apply(s).scaled(h);
                   }};
  };
  for (int i = 0; i <= k; ++i) {
    // factor chain: j < i and j > i get H-type factors, position i gets
    // m(phi)
    SuperOp term = mult_op(m.pou[seq[i]]);
    for (int j = i + 1; j <= k; ++j) term = op_compose(term, h_factor(seq[j]));
    for (int j = i - 1; j >= 0; --j) term = op_compose(h_factor(seq[j]), term);
    Poly pref = Poly::constant(u, (i % 2) ? -1 : 1, k + 1);
    if (!m.parametrized()) pref *= h.pow(k);
    term = op_scaled(term, pref);
    acc = first ? term : op_sum(acc, term);
    first = false;
  }
  return acc;
}

HalfForm lemma_eta_residual(const CechModel& m, const Seq& seq,
                            const HalfForm& sigma, int level) {
  const ConstUniversePtr& u = m.chart.u;
  const int k = static_cast<int>(seq.size()) - 1;
  Poly h = Poly::gen(u, u->hbar_id());
  const CechModel* mp = &m;
  // D = (d +) delta_level + hbar Delta, parity odd
  SuperOp dtot{1, [mp, level, h](const HalfForm& s) {
                 Poly v = mp->sx->deRham(level, s.coeff) +
                          h * delta0(mp->chart, s.coeff, s.gaussian);
                 if (mp->parametrized()) v += mp->aux_d(s.coeff);
                 return HalfForm{v, s.chart, s.gaussian};
               }};
  HalfForm out = op_commutator(dtot, phi_op(m, seq)).apply(sigma);
  for (int i = 0; i <= k + 1; ++i)
    for (int a = 0; a < m.opens(); ++a) {
      Seq ins = seq;
      ins.insert(ins.begin() + i, a);
      HalfForm piece = phi_op(m, ins).apply(sigma);
      out = out + ((i % 2) ? piece : -piece);
    }
  return out;
}

Poly trace_z_level(const CechModel& m, const FamilySet& fams,
                   const TWCochain& c, GenId scale, int k) {
  const ConstUniversePtr& u = m.chart.u;
  Poly h_inv = Poly::gen(u, u->hbar_id(), -1);
  Poly acc(u);
  for (const Seq& seq : m.sequences(k)) {
    LagrangianFamily fam = fams.family(m, seq);
    Poly eta = compute_eta(m, fam, {}, scale);
    Poly weight = exp_nilpotent(-(eta * h_inv));
    HalfForm sig{c.comp(seq), m.chart, c.gaussian};
    HalfForm phisig = phi_op(m, seq).apply(sig);
    Poly body = integrate_over_family(m, fam, weight * phisig.coeff);
    acc += m.sx->integrate(k, body);
  }
  return (k % 2) ? -acc : acc;
}

Poly trace_z(const CechModel& m, const FamilySet& fams, const TWCochain& c,
             GenId scale, int level) {
  if (level < 0) level = m.kmax;
  Poly acc(m.chart.u);
  for (int k = 0; k <= level; ++k)
    acc += trace_z_level(m, fams, c, scale, k);
  return acc;
}

bool LieSuperAlgebra::check_structure() const {
  const int n = dim();
  auto br = [&](int a, int b) {
    std::vector<Rational> v(n, Rational(0));
    for (auto& [c0, coef] : bracket[a][b]) v[c0] += coef;
    return v;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // graded antisymmetry: [a,b] = -(-1)^{p_a p_b} [b,a]
      auto ab = br(a, b), ba = br(b, a);
      for (int c0 = 0; c0 < n; ++c0) {
        Rational want = (parity[a] * parity[b]) % 2 ? ba[c0] : -ba[c0];
        if (ab[c0] != want) return false;
      }
    }
  // graded Jacobi: [a,[b,c]] = [[a,b],c] + (-1)^{p_a p_b}[b,[a,c]]
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c0 = 0; c0 < n; ++c0) {
        std::vector<Rational> lhs(n, Rational(0)), rhs(n, Rational(0));
        for (auto& [d, cd] : bracket[b][c0])
          for (auto& [e, ce] : bracket[a][d]) lhs[e] += cd * ce;
        for (auto& [d, cd] : bracket[a][b])
          for (auto& [e, ce] : bracket[d][c0]) rhs[e] += cd * ce;
        int sgn = (parity[a] * parity[b]) % 2 ? -1 : 1;
        for (auto& [d, cd] : bracket[a][c0])
          for (auto& [e, ce] : bracket[b][d]) rhs[e] += cd * ce * sgn;
        for (int e = 0; e < n; ++e)
          if (lhs[e] != rhs[e]) return false;
      }
  return true;
}

Derivation LieSuperAlgebra::differential() const {
  std::map<GenId, Poly> img;
  for (int a = 0; a < dim(); ++a) {
    Poly acc(u);
    for (int b = 0; b < dim(); ++b)
      for (int c0 = 0; c0 < dim(); ++c0)
        for (auto& [aa, coef] : bracket[b][c0]) {
          if (aa != a) continue;
          Rational v = coef / 2;
          if (((parity[b] + 1) * parity[c0]) % 2) v = -v;
          acc += Poly::gen(u, eps[b]) * Poly::gen(u, eps[c0]) * v;
        }
    img.emplace(eps[a], acc);
  }
  return Derivation(u, 1, std::move(img), false);
}

Poly mu_element(const LieSuperAlgebra& g, const MomentMap& mm) {
  Poly acc(g.u);
  for (int a = 0; a < g.dim(); ++a)
    acc += mm.rho[a] * Poly::gen(g.u, g.eps[a]);
  return acc;
}

Poly mc_residual(const LieSuperAlgebra& g, const MomentMap& mm,
                 const DarbouxChart& chart) {
  Poly mu = mu_element(g, mm);
  return mu.derive(g.differential()) +
         antibracket(mu, mu, chart) * Rational(1, 2);
}

HalfForm conjugation_residual(const LieSuperAlgebra& g, const MomentMap& mm,
                              const HalfForm& sigma) {
  const ConstUniversePtr& u = sigma.chart.u;
  Poly mu = mu_element(g, mm);
  if (!(mu * mu).is_zero())
    fail("moment element mu is not square-zero; equivariant machinery "
         "requires mu^2 = 0");
  Poly h = Poly::gen(u, u->hbar_id());
  Poly e_mu = Poly::constant(u, 1) + mu * Poly::gen(u, u->hbar_id(), -1);
  Derivation dg = g.differential();

  auto d_g = [&](const HalfForm& s) {
    return HalfForm{s.coeff.derive(dg), s.chart, s.gaussian};
  };
  auto inner = [&](const HalfForm& s) {
    // (delta_g + H_mu + hbar Delta) s
    HalfForm out = d_g(s);
    out = out + hamlift(mu, s);
    out = out + bv_delta(s).scaled(h);
    return out;
  };
  auto outer = [&](const HalfForm& s) {
    HalfForm out = d_g(s);
    out = out + bv_delta(s).scaled(h);
    return out;
  };
  return inner(sigma).scaled(e_mu) - outer(sigma.scaled(e_mu));
}

Poly equivariant_z(const CechModel& m, const FamilySet& fams,
                   const LieSuperAlgebra& g, const MomentMap& mm,
                   const TWCochain& c, GenId scale, int level) {
  Poly mu = mu_element(g, mm);
  if (!(mu * mu).is_zero())
    fail("moment element mu is not square-zero");
  Poly e_mu = Poly::constant(m.chart.u, 1) +
              mu * Poly::gen(m.chart.u, m.chart.u->hbar_id(), -1);
  auto f = c.comp;
  TWCochain dressed{[f, e_mu](const Seq& s) { return e_mu * f(s); },
                    c.gaussian};
  return trace_z(m, fams, dressed, scale, level);
}

TWCochain equivariant_coboundary(const CechModel& m,
                                 const LieSuperAlgebra& g,
                                 const MomentMap& mm, const TWCochain& c) {
  const CechModel* mp = &m;
  Poly mu = mu_element(g, mm);
  Derivation dgv = g.differential();
  auto f = c.comp;
  bool gaussian = c.gaussian;
  return {[mp, f, gaussian, mu, dgv](const Seq& seq) {
            int k = static_cast<int>(seq.size()) - 1;
            Poly v = f(seq);
            Poly h = Poly::gen(mp->chart.u, mp->chart.u->hbar_id());
            HalfForm s{v, mp->chart, gaussian};
            Poly out = mp->sx->deRham(k, v) +
                       h * delta0(mp->chart, v, gaussian) +
                       v.derive(dgv) + hamlift(mu, s).coeff;
            if (mp->parametrized()) out += mp->aux_d(v);
            return out;
          },
          gaussian};
}

}  // namespace bvcheck
