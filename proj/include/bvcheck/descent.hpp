#ifndef BVCHECK_DESCENT_HPP
#define BVCHECK_DESCENT_HPP

#include <functional>
#include <vector>

#include "bvcheck/bv.hpp"
#include "bvcheck/simplex.hpp"

namespace bvcheck {

using Seq = std::vector<int>;  // index sequence (alpha_0 ... alpha_k)

/// Single-chart Cech model: the "opens" are bookkeeping labels over one
/// polynomial Darboux chart, restriction maps are identities, and the cover
/// data is a polynomial partition of unity (sum phi_alpha = 1, enforced).
/// Compact support lives in the Gaussian-dressed half-form class.
struct CechModel {
  DarbouxChart chart;
  const SimplexAlgebra* sx = nullptr;  // levels up to kmax + 2
  std::vector<Poly> pou;
  int kmax = 3;
  // auxiliary interval for partition-of-unity families (empty when plain)
  GenId aux_t = -1, aux_dt = -1;

  int opens() const { return static_cast<int>(pou.size()); }
  bool parametrized() const { return aux_t >= 0; }
  void validate() const;  // sum phi = 1, kmax + 2 simplex levels present

  std::vector<Seq> sequences(int k) const;  // all (k+1)-sequences
  /// d on the auxiliary interval, as an operator on half-form coefficients.
  Poly aux_d(const Poly& f) const;
};

/// Half-form valued Thom-Whitney cochain, represented by its component
/// function so that levels beyond the truncation remain available for the
/// soundness checks.
struct TWCochain {
  std::function<Poly(const Seq&)> comp;
  bool gaussian = true;
};

/// Whitney extensions of Cech data; all three are simplicially compatible by
/// construction (and machine-checked in check_tw before use).
TWCochain whitney0(const CechModel& m, const std::vector<Poly>& f_alpha,
                   bool gaussian = true);
TWCochain whitney1(const CechModel& m,
                   const std::vector<std::vector<Poly>>& c_ab,
                   bool gaussian = true);  // c antisymmetric, zero diagonal
TWCochain whitney2(const CechModel& m,
                   const std::vector<std::vector<std::vector<Poly>>>& c_abc,
                   bool gaussian = true);  // totally antisymmetric
TWCochain cochain_sum(const TWCochain& a, const TWCochain& b);

/// (mu* x 1) sigma_l = (1 x mu_*) sigma_k for all cofaces and codegeneracies
/// within the given level bound; throws naming the first failure.
void check_tw(const CechModel& m, const TWCochain& c, int up_to_level);

/// delta + hbar Delta on a cochain (delta acts on the level-k simplex
/// variables of each component).
TWCochain coboundary(const CechModel& m, const TWCochain& c);

/// Family of Lagrangian graphs xi_a = xi_a(x, t) over the level-k simplex.
struct LagrangianFamily {
  int k = 0;
  std::vector<Poly> xi;  // per chart pair
};

/// Per-open generating functions W_alpha (odd): base graphs xi^alpha_a =
/// dW_alpha/dx^a, interpolated affinely over each nerve simplex. The
/// gradient form makes the closedness condition hold identically; the
/// simplicial compatibility of the interpolation is machine-checked in the
/// tests.
struct FamilySet {
  std::vector<Poly> w_alpha;
  LagrangianFamily family(const CechModel& m, const Seq& seq) const;
};

/// The generating one-form eta = eta_i dt_i of a family, built from the
/// radial homotopy based at x0 and corrected by the simplex homotopy so that
/// both defining equations hold exactly:
///   d eta_i / d x^a = d xi_a / d t_i   and   (de Rham) delta eta = 0.
/// Both are re-verified before returning. `scale` is a scratch parameter
/// used for the homotopy integrals.
Poly compute_eta(const CechModel& m, const LagrangianFamily& fam,
                 const std::vector<Rational>& x0, GenId scale);

/// Finite exponential of a nilpotent element.
Poly exp_nilpotent(const Poly& p);

/// Restriction along the family graph followed by the Gaussian integral over
/// the chart body; the result is a polynomial in the simplex variables and
/// the scalar tower.
Poly integrate_over_family(const CechModel& m, const LagrangianFamily& fam,
                           const Poly& coeff);

/// Difference of the two sides of the transport identity
///   delta int_L e^{-eta/hbar} i* sigma = int_L e^{-eta/hbar} i*(delta +
///   hbar Delta) sigma
/// for a Gaussian-dressed sigma tensor a level-k form.
Poly ms_residual(const CechModel& m, const LagrangianFamily& fam,
                 const Poly& eta, const HalfForm& sigma);

/// Partition-of-unity operators. Plain:
///   Phi = (hbar^k/(k+1)) sum_i (-1)^i H_{a0} ... m(phi_{ai}) ... H_{ak};
/// parametrized (nonempty aux interval): each H_{aj} is replaced by
/// m(d phi_{aj}) + hbar H_{aj} and the prefactor is 1/(k+1).
SuperOp phi_op(const CechModel& m, const Seq& seq);

/// ([D, Phi_seq] - sum_i (-1)^i sum_a Phi_{insert(i,a)}) sigma with
/// D = (d +) delta_k + hbar Delta; identically zero.
HalfForm lemma_eta_residual(const CechModel& m, const Seq& seq,
                            const HalfForm& sigma, int level);

/// The glued trace: sum over k <= level of
///   (-1)^k sum_seq int_{Delta^k} int_L e^{-eta/hbar} i*(Phi_seq sigma_seq).
Poly trace_z(const CechModel& m, const FamilySet& fams, const TWCochain& c,
             GenId scale, int level = -1);
/// Individual level contribution (for the truncation soundness check).
Poly trace_z_level(const CechModel& m, const FamilySet& fams,
                   const TWCochain& c, GenId scale, int k);

/// Finite-dimensional Lie superalgebra with cochain generators adjoined to
/// the universe.
struct LieSuperAlgebra {
  ConstUniversePtr u;
  std::vector<int> parity;
  std::vector<GenId> eps;
  // [xi_a, xi_b] = sum_c coeff * xi_c
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> bracket;

  int dim() const { return static_cast<int>(parity.size()); }
  bool check_structure() const;  // graded antisymmetry + Jacobi
  Derivation differential() const;  // delta_g on the cochain generators
};

/// Moment map rho: g -> O(M)[-1]; morphism property is a test, not an input.
struct MomentMap {
  std::vector<Poly> rho;
};

Poly mu_element(const LieSuperAlgebra& g, const MomentMap& mm);
/// delta_g mu + (1/2)(mu, mu); zero iff rho is a morphism.
Poly mc_residual(const LieSuperAlgebra& g, const MomentMap& mm,
                 const DarbouxChart& chart);

/// e^{mu/hbar}(delta_g + H_mu + hbar Delta) sigma
///   - (delta_g + hbar Delta)(e^{mu/hbar} sigma), with e^{mu/hbar} = 1 +
/// mu/hbar (mu^2 = 0 is checked). Identically zero by Maurer-Cartan.
HalfForm conjugation_residual(const LieSuperAlgebra& g, const MomentMap& mm,
                              const HalfForm& sigma);

/// Equivariant trace: Phi applied to e^{mu/hbar} sigma.
Poly equivariant_z(const CechModel& m, const FamilySet& fams,
                   const LieSuperAlgebra& g, const MomentMap& mm,
                   const TWCochain& c, GenId scale, int level = -1);

/// (d + delta_g + H_mu + delta + hbar Delta) on a cochain.
TWCochain equivariant_coboundary(const CechModel& m,
                                 const LieSuperAlgebra& g,
                                 const MomentMap& mm, const TWCochain& c);

}  // namespace bvcheck

#endif
