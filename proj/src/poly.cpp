#include "bvcheck/poly.hpp"

#include <algorithm>
#include <sstream>

namespace bvcheck {

namespace {

int factor_parity(const GenInfo& gi, int exp) {
  return (gi.parity * exp) & 1;
}

bool is_nilpotent_factor(const GenInfo& gi) {
  return gi.parity == 1 || gi.square == SquareRule::Zero;
}

// Merge two sorted exponent vectors tracking the Koszul sign of interleaving.
// Returns false when the term dies (odd square). Exponents are summed raw;
// relation reduction happens afterwards.
bool monomial_mul(const Universe& u, const Monomial& a, const Monomial& b,
                  Monomial& out, int& sign) {
  out.clear();
  sign = 1;
  // odd_suffix[i] = number of odd factors of a at positions >= i
  std::vector<int> odd_suffix(a.size() + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    odd_suffix[i] =
        odd_suffix[i + 1] + factor_parity(u.info(a[i].first), a[i].second);
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i]);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      int pb = factor_parity(u.info(b[j].first), b[j].second);
      if (pb && (odd_suffix[i] & 1)) sign = -sign;
      out.push_back(b[j]);
      ++j;
    } else {
      // same generator: b[j] crosses the strict suffix of a
      int pb = factor_parity(u.info(b[j].first), b[j].second);
      if (pb && (odd_suffix[i + 1] & 1)) sign = -sign;
      const GenInfo& gi = u.info(a[i].first);
      if (gi.parity == 1) return false;  // odd square
      int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return true;
}

}  // namespace

Poly Poly::constant(const ConstUniversePtr& u, const Rational& c) {
  Poly p(u);
  if (c != 0) p.t_[Monomial{}] = c;
  return p;
}

Poly Poly::constant(const ConstUniversePtr& u, long num, long den) {
  Rational c(num, den);
  c.canonicalize();
  return constant(u, c);
}

Poly Poly::gen(const ConstUniversePtr& u, GenId g, int exp) {
  if (exp == 0) return constant(u, 1);
  Poly p(u);
  p.add_reduced(Monomial{{g, exp}}, Rational(1));
  return p;
}

Poly Poly::monomial_term(const ConstUniversePtr& u, const Monomial& m,
                         const Rational& c) {
  Poly p(u);
  p.add_reduced(m, c);
  return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

// Insert c*m after enforcing exponent domains and declared square relations.
void Poly::add_reduced(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const Universe& U = *u_;
  for (std::size_t k = 0; k < m.size(); ++k) {
    const auto& [g, e] = m[k];
    if (e == 0) fail("zero exponent in monomial");
    const GenInfo& gi = U.info(g);
    if (gi.parity == 1 || gi.square == SquareRule::Zero) {
      if (e >= 2) return;  // square-zero factor
      if (e < 0) fail("negative exponent of '" + gi.name + "'");
    }
    if (gi.domain == ExpDomain::Nat && e < 0)
      fail("negative exponent of non-unit '" + gi.name + "'");
    if (gi.square == SquareRule::Reduce && (e >= 2 || e < 0)) {
      // g^e = g^r * S^q with r in {0,1}; negative q only for unit-backed g.
      int r = ((e % 2) + 2) % 2;
      int q = (e - r) / 2;
      Monomial rest;
      rest.reserve(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (j == k) {
          if (r != 0) rest.emplace_back(g, r);
        } else {
          rest.push_back(m[j]);
        }
      }
      // S is even, so it commutes past everything: no sign.
      Poly mult = U.square_poly(gi.square_poly).pow(q);
      Poly base = Poly::monomial_term(u_, rest, c);
      Poly prod = base * mult;
      for (const auto& [mm, cc] : prod.t_) add_term(mm, cc);
      return;
    }
  }
  add_term(m, c);
}

Poly Poly::operator-() const {
  Poly r(u_);
  for (const auto& [m, c] : t_) r.t_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!u_) u_ = o.u_;
  if (o.u_ && u_ != o.u_) {
    std::string g = o.t_.empty() || o.t_.begin()->first.empty()
                        ? std::string("<constant>")
                        : o.u_->info(o.t_.begin()->first[0].first).name;
    fail("generator '" + g + "' belongs to a different generator universe");
  }
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (u_ && o.u_ && u_ != o.u_) {
    std::string g = o.t_.empty() || o.t_.begin()->first.empty()
                        ? std::string("<constant>")
                        : o.u_->info(o.t_.begin()->first[0].first).name;
    fail("generator '" + g + "' belongs to a different generator universe");
  }
  const ConstUniversePtr& u = u_ ? u_ : o.u_;
  Poly r(u);
  if (!u) fail("multiplication of polynomials without a universe");
  Monomial prod;
  int sign;
  for (const auto& [ma, ca] : t_) {
    for (const auto& [mb, cb] : o.t_) {
      if (!monomial_mul(*u, ma, mb, prod, sign)) continue;
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      r.add_reduced(prod, c);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r(u_);
  if (c == 0) return r;
  for (const auto& [m, cc] : t_) r.t_[m] = cc * c;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (u_ && o.u_ && u_ != o.u_) fail("comparing across generator universes");
  return t_ == o.t_;
}

Poly Poly::pow(int k) const {
  if (!u_) fail("pow on polynomial without universe");
  if (k == 0) return constant(u_, 1);
  if (k < 0) return try_inverse().pow(-k);
  Poly acc = constant(u_, 1);
  Poly base = *this;
  int e = k;
  while (e > 0) {
    if (e & 1) acc *= base;
    base = (e >>= 1) ? base * base : base;
  }
  return acc;
}

bool Poly::is_rational() const {
  return t_.empty() || (t_.size() == 1 && t_.begin()->first.empty());
}

Rational Poly::rational_value() const {
  if (t_.empty()) return Rational(0);
  if (!is_rational()) fail("polynomial '" + str() + "' is not constant");
  return t_.begin()->second;
}

int monomial_parity(const Universe& u, const Monomial& m) {
  int p = 0;
  for (const auto& [g, e] : m) p += u.info(g).parity * e;
  return p & 1;
}

int monomial_ghost(const Universe& u, const Monomial& m) {
  int gh = 0;
  for (const auto& [g, e] : m) gh += u.info(g).ghost * e;
  return gh;
}

int Poly::parity() const {
  if (t_.empty()) return 0;
  int p = monomial_parity(*u_, t_.begin()->first);
  for (const auto& [m, c] : t_) {
    (void)c;
    if (monomial_parity(*u_, m) != p)
      fail("polynomial '" + str() + "' has mixed parity");
  }
  return p;
}

int Poly::ghost() const {
  if (t_.empty()) return 0;
  int gh = monomial_ghost(*u_, t_.begin()->first);
  for (const auto& [m, c] : t_) {
    (void)c;
    if (monomial_ghost(*u_, m) != gh)
      fail("polynomial '" + str() + "' has mixed ghost number");
  }
  return gh;
}

bool Poly::homogeneous_parity() const {
  if (t_.empty()) return true;
  int p = monomial_parity(*u_, t_.begin()->first);
  for (const auto& [m, c] : t_) {
    (void)c;
    if (monomial_parity(*u_, m) != p) return false;
  }
  return true;
}

bool Poly::homogeneous_ghost() const {
  if (t_.empty()) return true;
  int gh = monomial_ghost(*u_, t_.begin()->first);
  for (const auto& [m, c] : t_) {
    (void)c;
    if (monomial_ghost(*u_, m) != gh) return false;
  }
  return true;
}

std::pair<Poly, Poly> Poly::split_parity() const {
  Poly even(u_), odd(u_);
  for (const auto& [m, c] : t_)
    (monomial_parity(*u_, m) ? odd : even).t_[m] = c;
  return {even, odd};
}

bool Poly::is_nilpotent() const {
  for (const auto& [m, c] : t_) {
    (void)c;
    bool nil = false;
    for (const auto& [g, e] : m) {
      (void)e;
      if (is_nilpotent_factor(u_->info(g))) {
        nil = true;
        break;
      }
    }
    if (!nil) return false;
  }
  return true;
}

std::set<GenId> Poly::support() const {
  std::set<GenId> s;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [g, e] : m) {
      (void)e;
      s.insert(g);
    }
  }
  return s;
}

int Poly::degree_in(GenId g) const {
  int d = 0;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [gg, e] : m)
      if (gg == g) d = std::max(d, e);
  }
  return d;
}

int Poly::min_degree_in(GenId g) const {
  bool seen = false;
  int d = 0;
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [gg, e] : m)
      if (gg == g) {
        d = seen ? std::min(d, e) : e;
        seen = true;
      }
  }
  return d;
}

bool Poly::depends_on(GenId g) const {
  for (const auto& [m, c] : t_) {
    (void)c;
    for (const auto& [gg, e] : m) {
      (void)e;
      if (gg == g) return true;
    }
  }
  return false;
}

Derivation::Derivation(ConstUniversePtr universe, int par,
                       std::map<GenId, Poly> images, bool validate)
    : u(std::move(universe)), parity(par), img(std::move(images)) {
  for (auto& [g, p] : img) {
    if (p.is_zero()) continue;
    if (p.universe() != u) fail("derivation image over a foreign universe");
    int want = (u->info(g).parity + parity) & 1;
    if (p.parity() != want)
      fail("derivation image of '" + u->info(g).name + "' has wrong parity");
  }
  if (!validate) return;
  // Compatibility with square relations: D(g*g) must equal D(g^2-reduced).
  for (auto& [g, p] : img) {
    if (p.is_zero()) continue;
    const GenInfo& gi = u->info(g);
    if (gi.square == SquareRule::None) continue;
    Poly G = Poly::gen(u, g);
    Poly lhs = p * G;
    int sign = (parity * gi.parity) & 1;
    lhs += sign ? -(G * p) : G * p;
    Poly rhs(u);
    if (gi.square == SquareRule::Reduce) {
      Poly S = u->square_poly(gi.square_poly);
      rhs = S.derive(*this);
    }
    if (!(lhs == rhs))
      fail("derivation incompatible with the square relation of '" + gi.name +
           "'");
  }
}

Poly Poly::derive(const Derivation& d) const {
  if (u_ && d.u != u_) fail("derivation over a different universe");
  Poly result(u_);
  for (const auto& [m, c] : t_) {
    int prefix_parity = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto& [g, e] = m[j];
      const GenInfo& gi = u_->info(g);
      auto it = d.img.find(g);
      if (it != d.img.end() && !it->second.is_zero()) {
        // prefix * (e * g^{e-1} * img) * suffix, Koszul sign from moving the
        // derivation past the prefix.
        Monomial prefix(m.begin(), m.begin() + j);
        Monomial suffix(m.begin() + j + 1, m.end());
        Rational coef = c * e;
        if ((d.parity & prefix_parity & 1) != 0) coef = -coef;
        Poly piece = Poly::monomial_term(u_, prefix, coef);
        if (e != 1) piece *= Poly::gen(u_, g, e - 1);
        piece *= it->second;
        piece *= Poly::monomial_term(u_, suffix, Rational(1));
        result += piece;
      }
      prefix_parity ^= factor_parity(gi, e);
    }
  }
  return result;
}

Poly Poly::partial(GenId v) const {
  const GenInfo& gi = u_->info(v);
  switch (gi.kind) {
    case GenKind::EvenCoord:
    case GenKind::OddCoord:
    case GenKind::SimplexCoord:
    case GenKind::Parameter:
    case GenKind::Field:
    case GenKind::FieldDeriv:
      break;
    default:
      fail("cannot differentiate by generator '" + gi.name +
           "' (formal constant or form)");
  }
  std::map<GenId, Poly> img;
  img.emplace(v, Poly::constant(u_, 1));
  return derive(Derivation(u_, gi.parity, std::move(img), false));
}

Poly Poly::substitute(const std::map<GenId, Poly>& assignment) const {
  for (const auto& [g, val] : assignment) {
    const GenInfo& gi = u_->info(g);
    if (!val.is_zero() && val.parity() != gi.parity)
      fail("substitution for '" + gi.name + "' has parity " +
           std::to_string(val.is_zero() ? gi.parity : val.parity()) +
           ", expected " + std::to_string(gi.parity));
  }
  Poly result(u_);
  for (const auto& [m, c] : t_) {
    Poly acc = Poly::constant(u_, c);
    for (const auto& [g, e] : m) {
      auto it = assignment.find(g);
      if (it == assignment.end()) {
        acc *= Poly::gen(u_, g, e);
      } else {
        acc *= it->second.pow(e);
      }
    }
    result += acc;
  }
  return result;
}

Poly Poly::coeff_of(GenId g, int k) const {
  if (u_->info(g).parity != 0)
    fail("coeff_of requires an even generator; use berezin for '" +
         u_->info(g).name + "'");
  Poly result(u_);
  for (const auto& [m, c] : t_) {
    int e = 0;
    Monomial rest;
    for (const auto& [gg, ee] : m) {
      if (gg == g)
        e = ee;
      else
        rest.emplace_back(gg, ee);
    }
    if (e == k) result.add_term(rest, c);
  }
  return result;
}

Poly Poly::berezin(const std::vector<GenId>& odd_vars) const {
  std::set<GenId> seen;
  for (GenId v : odd_vars) {
    if (u_->info(v).parity != 1)
      fail("Berezin integration by even generator '" + u_->info(v).name + "'");
    if (!seen.insert(v).second)
      fail("repeated generator '" + u_->info(v).name +
           "' in Berezin integral");
  }
  Poly r = *this;
  for (GenId v : odd_vars) {
    std::map<GenId, Poly> img;
    img.emplace(v, Poly::constant(u_, 1));
    r = r.derive(Derivation(u_, 1, std::move(img), false));
  }
  return r;
}

Poly Poly::gaussian_moment(const std::vector<GenId>& even_vars) const {
  std::set<GenId> vars(even_vars.begin(), even_vars.end());
  for (GenId v : even_vars)
    if (u_->info(v).parity != 0)
      fail("Gaussian moment over odd generator '" + u_->info(v).name + "'");
  Poly result(u_);
  for (const auto& [m, c] : t_) {
    Rational coef = c;
    Monomial rest;
    bool dead = false;
    for (const auto& [g, e] : m) {
      if (vars.count(g)) {
        if (e % 2 == 1) {
          dead = true;
          break;
        }
        coef *= double_factorial(e - 1);
      } else {
        const GenInfo& gi = u_->info(g);
        if (gi.kind == GenKind::OddCoord)
          fail("residual odd coordinate '" + gi.name + "' in Gaussian moment");
        if (gi.kind == GenKind::EvenCoord)
          fail("residual chart coordinate '" + gi.name +
               "' in Gaussian moment");
        rest.emplace_back(g, e);
      }
    }
    if (!dead) result.add_term(rest, coef);
  }
  return result;
}

Poly Poly::try_inverse() const {
  if (!u_) fail("inverse of polynomial without universe");
  Poly body(u_), soul(u_);
  for (const auto& [m, c] : t_) {
    bool nil = false;
    for (const auto& [g, e] : m) {
      (void)e;
      if (is_nilpotent_factor(u_->info(g))) {
        nil = true;
        break;
      }
    }
    (nil ? soul : body).t_[m] = c;
  }
  if (body.t_.size() != 1)
    fail("polynomial '" + str() + "' is not invertible (body not a monomial)");
  const auto& [bm, bc] = *body.t_.begin();
  for (const auto& [g, e] : bm) {
    (void)e;
    if (u_->info(g).domain != ExpDomain::Integer)
      fail("polynomial '" + str() +
           "' is not invertible (non-unit generator '" + u_->info(g).name +
           "' in body)");
  }
  Monomial inv_m;
  for (const auto& [g, e] : bm) inv_m.emplace_back(g, -e);
  Poly inv_body = Poly::monomial_term(u_, inv_m, Rational(1) / bc);
  if (soul.is_zero()) return inv_body;
  // (b + s)^{-1} = b^{-1} sum_k (-b^{-1} s)^k, finite by nilpotency
  Poly x = -(inv_body * soul);
  Poly series = Poly::constant(u_, 1);
  Poly term = x;
  int guard = 0;
  while (!term.is_zero()) {
    series += term;
    term *= x;
    if (++guard > 1000)
      fail("inverse series did not terminate for '" + str() + "'");
  }
  return inv_body * series;
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1 || m.empty()) {
      os << a.get_str();
      printed = true;
    }
    for (const auto& [g, e] : m) {
      if (printed) os << "*";
      os << u_->info(g).name;
      if (e != 1) os << "^" << e;
      printed = true;
    }
  }
  return os.str();
}

std::string Poly::json() const {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << ",";
    first = false;
    os << "{\"c\":\"" << c.get_str() << "\",\"m\":[";
    bool f2 = true;
    for (const auto& [g, e] : m) {
      if (!f2) os << ",";
      f2 = false;
      os << "[\"" << u_->info(g).name << "\"," << e << "]";
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

Rational factorial(int n) {
  if (n < 0) fail("factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational double_factorial(int n) {
  if (n <= 0) return Rational(1);
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace bvcheck
