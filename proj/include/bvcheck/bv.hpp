#ifndef BVCHECK_BV_HPP
#define BVCHECK_BV_HPP

#include <functional>
#include <utility>
#include <vector>

#include "bvcheck/linalg.hpp"
#include "bvcheck/poly.hpp"

namespace bvcheck {

/// Ordered list of Darboux pairs (x^a, xi_a) with ghosts (g_a, -1-g_a), so
/// the pairing of tangent vectors has ghost number +1 and the antibracket
/// raises ghost by one. Reordering the pairs only flips the sign of the
/// volume symbol dx.
struct DarbouxChart {
  ConstUniversePtr u;
  std::vector<std::pair<GenId, GenId>> pairs;

  static DarbouxChart make(const UniversePtr& u, int n,
                           const std::vector<int>& ghosts = {},
                           const std::string& xprefix = "x",
                           const std::string& xiprefix = "xi");
  static DarbouxChart over(ConstUniversePtr u,
                           std::vector<std::pair<GenId, GenId>> pairs);

  int dim() const { return static_cast<int>(pairs.size()); }
  std::vector<GenId> xs() const;
  std::vector<GenId> xis() const;
  bool operator==(const DarbouxChart& o) const { return pairs == o.pairs; }
};

/// sigma = f * dx. When `gaussian` is set the coefficient is implicitly
/// multiplied by the normalized weight exp(-|x|^2/2): x-derivatives act as
/// d/dx - x, and integration over the body is the normalized moment. This
/// models compactly supported half-forms with exact arithmetic (total
/// x-derivatives integrate to zero by the Stein identity).
struct HalfForm {
  Poly coeff;
  DarbouxChart chart;
  bool gaussian = false;

  HalfForm operator+(const HalfForm& o) const;
  HalfForm operator-(const HalfForm& o) const;
  HalfForm operator-() const;
  HalfForm scaled(const Poly& c) const;  // left multiplication
  bool operator==(const HalfForm& o) const;
  bool is_zero() const { return coeff.is_zero(); }
};

HalfForm unit_halfform(const DarbouxChart& chart, bool gaussian = false);

/// Linear operator on half-forms with a definite parity, so commutators can
/// carry their Koszul signs.
struct SuperOp {
  int parity = 0;
  std::function<HalfForm(const HalfForm&)> apply;
};

SuperOp mult_op(const Poly& f);
SuperOp op_scaled(const SuperOp& a, const Poly& c);  // even c
SuperOp op_sum(const SuperOp& a, const SuperOp& b);
SuperOp op_compose(const SuperOp& a, const SuperOp& b);
/// [a, b] = a b - (-1)^{|a||b|} b a
SuperOp op_commutator(const SuperOp& a, const SuperOp& b);

/// Delta_0 f = sum_a (-1)^{p_a} d^2 f / dx^a dxi_a, acting through the
/// Gaussian twist when the half-form is dressed.
Poly delta0(const DarbouxChart& chart, const Poly& f, bool gaussian = false);
HalfForm bv_delta(const HalfForm& sigma);
SuperOp delta_op(const DarbouxChart& chart);

/// The antibracket, extracted from m((f,g)) = (-1)^{|f|} [[Delta,m(f)],m(g)]
/// applied to the unit half-form. The coordinate pairing is therefore a
/// consequence checked by the test suite, not an input.
Poly antibracket(const Poly& f, const Poly& g, const DarbouxChart& chart);

/// H_f = (-1)^{|f|} [Delta, m(f)].
HalfForm hamlift(const Poly& f, const HalfForm& sigma);
SuperOp ham_op(const Poly& f, const DarbouxChart& chart);

/// Transport of sigma through the infinitesimal flow of an odd Hamiltonian:
/// coordinates move by x -> x - eps df/dxi, xi -> xi + eps df/dx, and the
/// coefficient picks up the half-Berezinian of the tangent map, which is
/// checked to lie on the superquadric. Must equal sigma + eps H_f sigma.
HalfForm flow_first_order(const Poly& f, GenId eps, const HalfForm& sigma);

/// hbar Delta_0 S + (1/2)(S, S), an exact Laurent polynomial in hbar.
Poly qme_residual(const Poly& s, const DarbouxChart& chart);

/// Residuals of the hbar-expansion of the master equation for
/// S = sum_n hbar^n S_n truncated at N: entry n is the hbar^n coefficient
/// of the direct residual, i.e. (1/2)(S0,S0) for n = 0 and
/// Delta_0 S_{n-1} + (1/2) sum_{i=0}^{n} (S_i, S_{n-i}) for n > 0.
std::vector<Poly> qme_tower(const std::vector<Poly>& s_n,
                            const DarbouxChart& chart);

}  // namespace bvcheck

#endif
