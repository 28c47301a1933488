#include "bvcheck/bv.hpp"

namespace bvcheck {

DarbouxChart DarbouxChart::make(const UniversePtr& u, int n,
                                const std::vector<int>& ghosts,
                                const std::string& xprefix,
                                const std::string& xiprefix) {
  DarbouxChart c;
  c.u = u;
  for (int a = 1; a <= n; ++a) {
    int g = ghosts.empty() ? 0 : ghosts[a - 1];
    GenId x = u->even_coord(xprefix + std::to_string(a), g);
    GenId xi = u->odd_coord(xiprefix + std::to_string(a), -1 - g);
    c.pairs.emplace_back(x, xi);
  }
  return c;
}

DarbouxChart DarbouxChart::over(ConstUniversePtr u,
                                std::vector<std::pair<GenId, GenId>> pairs) {
  DarbouxChart c;
  c.u = std::move(u);
  c.pairs = std::move(pairs);
  return c;
}

std::vector<GenId> DarbouxChart::xs() const {
  std::vector<GenId> v;
  for (auto& [x, xi] : pairs) {
    (void)xi;
    v.push_back(x);
  }
  return v;
}

std::vector<GenId> DarbouxChart::xis() const {
  std::vector<GenId> v;
  for (auto& [x, xi] : pairs) {
    (void)x;
    v.push_back(xi);
  }
  return v;
}

HalfForm HalfForm::operator+(const HalfForm& o) const {
  if (!(chart == o.chart) || gaussian != o.gaussian)
    fail("adding half-forms from different charts or classes");
  return {coeff + o.coeff, chart, gaussian};
}

HalfForm HalfForm::operator-(const HalfForm& o) const {
  return *this + (-o);
}

HalfForm HalfForm::operator-() const { return {-coeff, chart, gaussian}; }

HalfForm HalfForm::scaled(const Poly& c) const {
  return {c * coeff, chart, gaussian};
}

bool HalfForm::operator==(const HalfForm& o) const {
  return chart == o.chart && gaussian == o.gaussian && coeff == o.coeff;
}

HalfForm unit_halfform(const DarbouxChart& chart, bool gaussian) {
  return {Poly::constant(chart.u, 1), chart, gaussian};
}

SuperOp mult_op(const Poly& f) {
  int p = f.parity();
  return {p, [f](const HalfForm& s) { return s.scaled(f); }};
}

SuperOp op_scaled(const SuperOp& a, const Poly& c) {
  if (!c.is_zero() && c.parity() != 0)
    fail("operator scaling requires an even scalar");
  return {a.parity, [a, c](const HalfForm& s) { return a.apply(s).scaled(c); }};
}

SuperOp op_sum(const SuperOp& a, const SuperOp& b) {
  if (a.parity != b.parity) fail("adding operators of different parity");
  return {a.parity,
          [a, b](const HalfForm& s) { return a.apply(s) + b.apply(s); }};
}

SuperOp op_compose(const SuperOp& a, const SuperOp& b) {
  return {(a.parity + b.parity) & 1,
          [a, b](const HalfForm& s) { return a.apply(b.apply(s)); }};
}

SuperOp op_commutator(const SuperOp& a, const SuperOp& b) {
  int sign = (a.parity * b.parity) & 1;
  return {(a.parity + b.parity) & 1, [a, b, sign](const HalfForm& s) {
            HalfForm ab = a.apply(b.apply(s));
            HalfForm ba = b.apply(a.apply(s));
            return sign ? ab + ba : ab - ba;
          }};
}

namespace {

// d/dx with the Gaussian twist: (d/dx - x) on dressed coefficients.
Poly x_partial(const Poly& f, GenId x, bool gaussian) {
  Poly d = f.partial(x);
  if (gaussian) d -= Poly::gen(f.universe(), x) * f;
  return d;
}

}  // namespace

Poly delta0(const DarbouxChart& chart, const Poly& f, bool gaussian) {
  Poly acc(chart.u);
  for (auto& [x, xi] : chart.pairs) {
    Poly term = x_partial(f.partial(xi), x, gaussian);
    if (chart.u->info(x).parity & 1) term = -term;
    acc += term;
  }
  return acc;
}

HalfForm bv_delta(const HalfForm& sigma) {
  return {delta0(sigma.chart, sigma.coeff, sigma.gaussian), sigma.chart,
          sigma.gaussian};
}

SuperOp delta_op(const DarbouxChart& chart) {
  (void)chart;
  return {1, [](const HalfForm& s) { return bv_delta(s); }};
}

Poly antibracket(const Poly& f, const Poly& g, const DarbouxChart& chart) {
  Poly result(chart.u);
  auto [fe, fo] = f.split_parity();
  auto [ge, go] = g.split_parity();
  SuperOp delta = delta_op(chart);
  for (const Poly* fp : {&fe, &fo}) {
    if (fp->is_zero()) continue;
    int pf = fp->parity();
    SuperOp inner = op_commutator(delta, mult_op(*fp));
    for (const Poly* gp : {&ge, &go}) {
      if (gp->is_zero()) continue;
      SuperOp outer = op_commutator(inner, mult_op(*gp));
      Poly piece = outer.apply(unit_halfform(chart)).coeff;
      result += pf ? -piece : piece;
    }
  }
  return result;
}

HalfForm hamlift(const Poly& f, const HalfForm& sigma) {
  HalfForm out{Poly(sigma.chart.u), sigma.chart, sigma.gaussian};
  auto [fe, fo] = f.split_parity();
  SuperOp delta = delta_op(sigma.chart);
  for (const Poly* fp : {&fe, &fo}) {
    if (fp->is_zero()) continue;
    HalfForm piece = op_commutator(delta, mult_op(*fp)).apply(sigma);
    out = out + (fp->parity() ? -piece : piece);
  }
  return out;
}

SuperOp ham_op(const Poly& f, const DarbouxChart& chart) {
  int pf = f.parity();  // requires homogeneous f for a definite parity
  SuperOp c = op_commutator(delta_op(chart), mult_op(f));
  if (pf == 0) return c;
  return {c.parity, [c](const HalfForm& s) { return -c.apply(s); }};
}

HalfForm flow_first_order(const Poly& f, GenId eps, const HalfForm& sigma) {
  const DarbouxChart& chart = sigma.chart;
  const ConstUniversePtr& u = chart.u;
  if (!f.is_zero() && f.parity() != 1) fail("flow Hamiltonian must be odd");
  if (u->info(eps).square != SquareRule::Zero)
    fail("flow parameter must be nilpotent");
  if (sigma.gaussian) fail("flow transport expects the polynomial class");
  Poly e = Poly::gen(u, eps);

  std::map<GenId, Poly> sub;
  for (auto& [x, xi] : chart.pairs) {
    sub.emplace(x, Poly::gen(u, x) - e * f.partial(xi));
    sub.emplace(xi, Poly::gen(u, xi) + e * f.partial(x));
  }

  // Tangent map in the basis (d/dx^a, d/dxi_a); must preserve omega.
  int n = chart.dim();
  OddSymplecticForm w{n, {}};
  SuperMatrix jac(u, w.vdim(), w.vdim(), 0);
  std::vector<GenId> coords;
  for (auto& [x, xi] : chart.pairs) {
    (void)xi;
    coords.push_back(x);
  }
  for (auto& [x, xi] : chart.pairs) {
    (void)x;
    coords.push_back(xi);
  }
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j)
      jac.at(i, j) = sub.at(coords[i]).partial(coords[j]);
  if (!on_quadric(jac, w))
    fail("flow tangent map is not on the superquadric");

  Poly factor = ber_half(jac, w);
  return {sigma.coeff.substitute(sub) * factor, chart, sigma.gaussian};
}

Poly qme_residual(const Poly& s, const DarbouxChart& chart) {
  Poly h = Poly::gen(chart.u, chart.u->hbar_id());
  return h * delta0(chart, s) +
         antibracket(s, s, chart) * Rational(1, 2);
}

std::vector<Poly> qme_tower(const std::vector<Poly>& s_n,
                            const DarbouxChart& chart) {
  int n_max = static_cast<int>(s_n.size()) - 1;
  std::vector<Poly> res;
  for (int n = 0; n <= n_max; ++n) {
    Poly r(chart.u);
    if (n > 0) r += delta0(chart, s_n[n - 1]);
    for (int i = 0; i <= n; ++i) {
      int j = n - i;
      if (j > n_max) continue;
      r += antibracket(s_n[i], s_n[j], chart) * Rational(1, 2);
    }
    res.push_back(r);
  }
  return res;
}

}  // namespace bvcheck
