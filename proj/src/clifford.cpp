#include "bvcheck/clifford.hpp"

#include <sstream>

namespace bvcheck {

RatMat rat_identity(int n) {
  RatMat m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
  int n = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int m = static_cast<int>(b[0].size());
  RatMat r(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j)
        if (b[l][j] != 0) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RatMat rat_add(const RatMat& a, const RatMat& b) {
  RatMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
  return r;
}

RatMat rat_sub(const RatMat& a, const RatMat& b) {
  RatMat r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
  return r;
}

RatMat rat_scale(const RatMat& a, const Rational& c) {
  RatMat r = a;
  for (auto& row : r)
    for (auto& v : row) v *= c;
  return r;
}

RatMat rat_transpose(const RatMat& a) {
  int n = static_cast<int>(a.size()), m = static_cast<int>(a[0].size());
  RatMat r(m, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r[j][i] = a[i][j];
  return r;
}

bool rat_is_zero(const RatMat& a) {
  for (const auto& row : a)
    for (const auto& v : row)
      if (v != 0) return false;
  return true;
}

int rat_rank(RatMat a) {
  int n = static_cast<int>(a.size());
  int m = n ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    Rational inv = 1 / a[rank][col];
    for (int j = col; j < m; ++j) a[rank][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = col; j < m; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Octonion structure constants by Cayley-Dickson doubling of the
// quaternions: (a,b)(c,d) = (ac - d*b, da + bc*), * = conjugation.
struct Octonions {
  // mul[i][j] = (sign, index) with e_i e_j = sign * e_index
  int sign[8][8];
  int index[8][8];

  Octonions() {
    int qsign[4][4], qidx[4][4];
    // quaternions 1, i, j, k
    const int table[4][4][2] = {
        {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
        {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
        {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
        {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
    };
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        qsign[i][j] = table[i][j][0];
        qidx[i][j] = table[i][j][1];
      }
    auto qconj_sign = [](int i) { return i == 0 ? 1 : -1; };
    // octonion basis: e_i = (q_i, 0) for i < 4, (0, q_{i-4}) for i >= 4
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        int ai = i < 4 ? i : -1, bi = i < 4 ? -1 : i - 4;
        int cj = j < 4 ? j : -1, dj = j < 4 ? -1 : j - 4;
        // first component: ac - d* b ; second: d a + b c*
        int s = 0, idx = -1;
        if (ai >= 0 && cj >= 0) {  // ac
          s = qsign[ai][cj];
          idx = qidx[ai][cj];
        } else if (bi >= 0 && dj >= 0) {  // -d* b
          s = -qconj_sign(dj) * qsign[dj][bi];
          idx = qidx[dj][bi];
        } else if (ai >= 0 && dj >= 0) {  // d a -> second half
          s = qsign[dj][ai];
          idx = 4 + qidx[dj][ai];
        } else {  // b c* -> second half
          s = qconj_sign(cj) * qsign[bi][cj];
          idx = 4 + qidx[bi][cj];
        }
        sign[i][j] = s;
        index[i][j] = idx;
      }
  }

  RatMat left_mult(int i) const {
    RatMat m(8, std::vector<Rational>(8, Rational(0)));
    for (int b = 0; b < 8; ++b) m[index[i][b]][b] = sign[i][b];
    return m;
  }
};

void require(bool ok, const std::string& what) {
  if (!ok) fail("spinor representation construction: " + what);
}

}  // namespace

RatMat SpinorRep::gamma2_plus(int mu, int nu) const {
  RatMat a = rat_mul(sigma[mu], sigma_bar[nu]);
  RatMat b = rat_mul(sigma[nu], sigma_bar[mu]);
  return rat_scale(rat_sub(a, b), Rational(1, 2));
}

RatMat SpinorRep::gamma2_minus(int mu, int nu) const {
  RatMat a = rat_mul(sigma_bar[mu], sigma[nu]);
  RatMat b = rat_mul(sigma_bar[nu], sigma[mu]);
  return rat_scale(rat_sub(a, b), Rational(1, 2));
}

static int g_relation_count = 0;

const SpinorRep& build_rep() {
  static const SpinorRep rep = [] {
    SpinorRep r;
    Octonions oct;
    // transverse Clifford generators c_a: c_8 = Id, c_a = L_{e_a} for a < 8
    std::vector<RatMat> c;
    for (int a = 1; a <= 7; ++a) c.push_back(oct.left_mult(a));
    c.push_back(rat_identity(8));
    // Gamma^a = [[0, c_a], [c_a^T, 0]], 16x16 symmetric, square +1
    std::vector<RatMat> gam(10, RatMat(16, std::vector<Rational>(16, 0)));
    for (int a = 1; a <= 8; ++a) {
      const RatMat& ca = c[a - 1];
      RatMat cat = rat_transpose(ca);
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
          gam[a][i][8 + j] = ca[i][j];
          gam[a][8 + i][j] = cat[i][j];
        }
    }
    // Gamma^9 = Gamma^1 ... Gamma^8
    RatMat g9 = rat_identity(16);
    for (int a = 1; a <= 8; ++a) g9 = rat_mul(g9, gam[a]);
    gam[9] = g9;

    int checks = 0;
    // mostly-minus signature: sigma^0 = sigma_bar^0 = Id, sigma^i = Gamma^i,
    // sigma_bar^i = -Gamma^i
    r.sigma[0] = rat_identity(16);
    r.sigma_bar[0] = rat_identity(16);
    for (int i = 1; i <= 9; ++i) {
      r.sigma[i] = gam[i];
      r.sigma_bar[i] = rat_scale(gam[i], Rational(-1));
    }
    r.t_pairing = rat_identity(16);

    auto eta = [](int mu, int nu) {
      if (mu != nu) return Rational(0);
      return mu == 0 ? Rational(1) : Rational(-1);
    };
    for (int mu = 0; mu < 10; ++mu)
      for (int nu = 0; nu < 10; ++nu) {
        RatMat lhs = rat_add(rat_mul(r.sigma[mu], r.sigma_bar[nu]),
                             rat_mul(r.sigma[nu], r.sigma_bar[mu]));
        RatMat rhs = rat_scale(rat_identity(16), 2 * eta(mu, nu));
        require(rat_is_zero(rat_sub(lhs, rhs)),
                "sigma relation " + std::to_string(mu) + std::to_string(nu));
        ++checks;
        RatMat lhsb = rat_add(rat_mul(r.sigma_bar[mu], r.sigma[nu]),
                              rat_mul(r.sigma_bar[nu], r.sigma[mu]));
        require(rat_is_zero(rat_sub(lhsb, rhs)),
                "sigma-bar relation " + std::to_string(mu) +
                    std::to_string(nu));
        ++checks;
      }
    // T-symmetry T(gamma^mu a, b) = T(a, gamma^mu b), i.e. for the pairing
    // matrix: (sigma_bar^mu)^T T^T = T sigma_bar^mu on the S_+ pair and
    // (sigma^mu)^T T = T^T sigma^mu on the S_- pair.
    RatMat tt = rat_transpose(r.t_pairing);
    for (int mu = 0; mu < 10; ++mu) {
      require(rat_is_zero(
                  rat_sub(rat_mul(rat_transpose(r.sigma_bar[mu]), tt),
                          rat_mul(r.t_pairing, r.sigma_bar[mu]))),
              "T symmetry (S+) " + std::to_string(mu));
      ++checks;
      require(rat_is_zero(rat_sub(rat_mul(rat_transpose(r.sigma[mu]),
                                          r.t_pairing),
                                  rat_mul(tt, r.sigma[mu]))),
              "T symmetry (S-) " + std::to_string(mu));
      ++checks;
    }
    // gamma^{mu nu} antisymmetry: (gamma2_plus)^T T = -T gamma2_minus
    for (int mu = 0; mu < 10; ++mu)
      for (int nu = mu + 1; nu < 10; ++nu) {
        RatMat l = rat_mul(rat_transpose(r.gamma2_plus(mu, nu)), r.t_pairing);
        RatMat rr = rat_scale(rat_mul(r.t_pairing, r.gamma2_minus(mu, nu)),
                              Rational(-1));
        require(rat_is_zero(rat_sub(l, rr)),
                "gamma2 antisymmetry " + std::to_string(mu) + "," +
                    std::to_string(nu));
        ++checks;
      }
    g_relation_count = checks;
    return r;
  }();
  return rep;
}

int rep_relation_count() {
  build_rep();
  return g_relation_count;
}

std::string rep_golden_json() {
  const SpinorRep& r = build_rep();
  std::ostringstream os;
  auto dump = [&](const RatMat& m) {
    os << "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << "[";
      for (std::size_t j = 0; j < m[i].size(); ++j) {
        if (j) os << ",";
        os << m[i][j].get_str();
      }
      os << "]";
    }
    os << "]";
  };
  os << "{\"signature\":[1,-1,-1,-1,-1,-1,-1,-1,-1,-1],\"sigma\":[";
  for (int mu = 0; mu < 10; ++mu) {
    if (mu) os << ",";
    dump(r.sigma[mu]);
  }
  os << "],\"sigma_bar\":[";
  for (int mu = 0; mu < 10; ++mu) {
    if (mu) os << ",";
    dump(r.sigma_bar[mu]);
  }
  os << "],\"t_pairing\":";
  dump(r.t_pairing);
  os << "}";
  return os.str();
}

MVec MVec::zero(const ConstUniversePtr& u) {
  MVec v;
  for (auto& p : v.c) p = Poly::zero(u);
  return v;
}

Poly mink_pair(const MVec& a, const MVec& b) {
  Poly acc = a.c[0] * b.c[0];
  for (int i = 1; i < 10; ++i) acc -= a.c[i] * b.c[i];
  return acc;
}

MVec m_plus(const ConstUniversePtr& u) {
  MVec v = MVec::zero(u);
  v.c[0] = Poly::constant(u, 1, 2);
  v.c[9] = Poly::constant(u, 1, 2);
  return v;
}

MVec m_minus(const ConstUniversePtr& u) {
  MVec v = MVec::zero(u);
  v.c[0] = Poly::constant(u, 1, 2);
  v.c[9] = Poly::constant(u, -1, 2);
  return v;
}

MVec m_tau(const ConstUniversePtr& u, const Poly& c, const Poly& s,
           const std::vector<GenId>& p_transverse, GenId pstar) {
  MVec v = MVec::zero(u);
  Poly half = Poly::constant(u, 1, 2);
  v.c[0] = half;
  v.c[9] = (c * c - s * s) * Rational(1, 2);
  Poly cs_over = c * s * Poly::gen(u, pstar, -1);
  for (int a = 1; a <= 8; ++a)
    v.c[a] = -(cs_over * Poly::gen(u, p_transverse[a - 1]));
  return v;
}

MVec n_tau(const ConstUniversePtr& u, const Poly& c, const Poly& s,
           const std::vector<GenId>& p_transverse, GenId pstar) {
  MVec v = m_tau(u, c, s, p_transverse, pstar);
  for (int i = 1; i < 10; ++i) v.c[i] = -v.c[i];
  return v;
}

PMat PMat::zero(const ConstUniversePtr& u, int n, int m) {
  PMat r;
  r.u = u;
  r.n = n;
  r.m = m;
  r.e.assign(static_cast<std::size_t>(n) * m, Poly(u));
  return r;
}

PMat PMat::identity(const ConstUniversePtr& u, int n) {
  PMat r = zero(u, n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = Poly::constant(u, 1);
  return r;
}

PMat PMat::lift(const ConstUniversePtr& u, const RatMat& a) {
  PMat r = zero(u, static_cast<int>(a.size()),
                static_cast<int>(a[0].size()));
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.m; ++j)
      if (a[i][j] != 0) r.at(i, j) = Poly::constant(u, a[i][j]);
  return r;
}

PMat PMat::operator*(const PMat& o) const {
  if (m != o.n) fail("PMat dimension mismatch");
  PMat r = zero(u, n, o.m);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < m; ++k) {
      const Poly& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.m; ++j) {
        const Poly& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) += a * b;
      }
    }
  return r;
}

PMat PMat::operator+(const PMat& o) const {
  PMat r = *this;
  for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
  return r;
}

PMat PMat::operator-(const PMat& o) const { return *this + (-o); }

PMat PMat::operator-() const {
  PMat r = *this;
  for (Poly& p : r.e) p = -p;
  return r;
}

PMat PMat::scaled(const Poly& c) const {
  PMat r = *this;
  for (Poly& p : r.e) p = c * p;
  return r;
}

PMat PMat::transpose() const {
  PMat r = zero(u, m, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool PMat::is_zero() const {
  for (const Poly& p : e)
    if (!p.is_zero()) return false;
  return true;
}

bool PMat::operator==(const PMat& o) const {
  return n == o.n && m == o.m && [&] {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (!(e[i] == o.e[i])) return false;
    return true;
  }();
}

PMat PMat::derived(const Derivation& d) const {
  PMat r = *this;
  for (Poly& p : r.e) p = p.derive(d);
  return r;
}

PVec mat_vec(const PMat& m, const PVec& v) {
  PVec r(m.n, Poly(m.u));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.m; ++j) {
      if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += m.at(i, j) * v[j];
    }
  return r;
}

PVec gens_vec(const ConstUniversePtr& u, const std::vector<GenId>& comps) {
  PVec v;
  for (GenId g : comps) v.push_back(Poly::gen(u, g));
  return v;
}

Poly t_pair(const SpinorRep& rep, const ConstUniversePtr& u, const PVec& a,
            const PVec& b) {
  Poly acc(u);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      if (rep.t_pairing[i][j] == 0) continue;
      acc += a[i] * b[j] * rep.t_pairing[i][j];
    }
  return acc;
}

PMat cl_plus(const SpinorRep& rep, const MVec& v) {
  PMat r = PMat::zero(v.c[0].universe(), 16, 16);
  for (int mu = 0; mu < 10; ++mu) {
    if (v.c[mu].is_zero()) continue;
    r = r + PMat::lift(r.u, rep.sigma[mu]).scaled(v.c[mu]);
  }
  return r;
}

PMat cl_minus(const SpinorRep& rep, const MVec& v) {
  PMat r = PMat::zero(v.c[0].universe(), 16, 16);
  for (int mu = 0; mu < 10; ++mu) {
    if (v.c[mu].is_zero()) continue;
    r = r + PMat::lift(r.u, rep.sigma_bar[mu]).scaled(v.c[mu]);
  }
  return r;
}

LightconeProjectors lightcone_projector(const SpinorRep& rep, const MVec& m,
                                        const MVec& n) {
  const ConstUniversePtr& u = m.c[0].universe();
  if (!mink_pair(m, m).is_zero() || !mink_pair(n, n).is_zero() ||
      !(mink_pair(m, n) == Poly::constant(u, 1, 2)))
    fail("lightcone projector needs (m,m)=(n,n)=0 and (m,n)=1/2");
  // rational specialization expected here
  auto ratmat = [&](const PMat& p) {
    RatMat r(16, std::vector<Rational>(16, Rational(0)));
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        r[i][j] = p.at(i, j).is_zero() ? Rational(0)
                                       : p.at(i, j).rational_value();
    return r;
  };
  PMat p_plus = cl_plus(rep, m) * cl_minus(rep, n);   // on S_+
  PMat p_minus = cl_minus(rep, m) * cl_plus(rep, n);  // on S_-
  return {ratmat(p_plus), ratmat(p_minus)};
}

// The plane-rotation generator orientation is a basis choice; this one makes
// the conjugated light-like family come out as
// m(tau) = (1/2)(E^0 + cos(pi tau) E^9 - (sin(pi tau)/p_*) p_a E^a).
PMat rot_a9(const SpinorRep& rep, const ConstUniversePtr& u, int a) {
  return PMat::lift(u, rep.gamma2_plus(9, a));
}

PMat rot_a9_minus(const SpinorRep& rep, const ConstUniversePtr& u, int a) {
  return PMat::lift(u, rep.gamma2_minus(9, a));
}

PMat g_tau(const SpinorRep& rep, const ConstUniversePtr& u, const Poly& c,
           const Poly& s, const std::vector<GenId>& p_transverse,
           GenId pstar) {
  PMat r = PMat::identity(u, 16).scaled(c);
  Poly s_over = s * Poly::gen(u, pstar, -1);
  for (int a = 1; a <= 8; ++a)
    r = r - rot_a9(rep, u, a).scaled(s_over *
                                     Poly::gen(u, p_transverse[a - 1]));
  return r;
}

PMat g_tau_dp(const SpinorRep& rep, const ConstUniversePtr& u, const Poly& c,
              const Poly& s, const std::vector<GenId>& p_transverse,
              GenId pstar, int a) {
  std::map<GenId, Poly> img;
  img.emplace(p_transverse[a - 1], Poly::constant(u, 1));
  img.emplace(pstar, Poly::gen(u, p_transverse[a - 1]) *
                         Poly::gen(u, pstar, -1));
  Derivation d(u, 0, std::move(img));
  return g_tau(rep, u, c, s, p_transverse, pstar).derived(d);
}

}  // namespace bvcheck
