#ifndef BVCHECK_CLIFFORD_HPP
#define BVCHECK_CLIFFORD_HPP

#include <array>
#include <vector>

#include "bvcheck/poly.hpp"

namespace bvcheck {

using RatMat = std::vector<std::vector<Rational>>;  // dense exact matrix

RatMat rat_identity(int n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_add(const RatMat& a, const RatMat& b);
RatMat rat_sub(const RatMat& a, const RatMat& b);
RatMat rat_scale(const RatMat& a, const Rational& c);
RatMat rat_transpose(const RatMat& a);
bool rat_is_zero(const RatMat& a);
int rat_rank(RatMat a);

/// Exact real Majorana-Weyl module for R^{1,9} with the mostly-minus
/// signature eta = diag(+1,-1,...,-1):
///   sigma[mu]:     S_- -> S_+, sigma_bar[mu]: S_+ -> S_-,
///   sigma[mu] sigma_bar[nu] + sigma[nu] sigma_bar[mu] = 2 eta^{mu nu}
/// and the pairing T between S_+ and S_- for which every sigma block is
/// T-symmetric: T(gamma^mu a, b) = T(a, gamma^mu b). The construction (an
/// iterated Cayley-Dickson build of the transverse Clifford algebra) is a
/// convention; the relations are the contract and are all verified before
/// the representation is returned.
struct SpinorRep {
  std::array<RatMat, 10> sigma;
  std::array<RatMat, 10> sigma_bar;
  RatMat t_pairing;  // 16x16 matrix of T between S_+ and S_-

  /// Same-chirality gamma^{mu nu} = (gamma^mu gamma^nu - gamma^nu
  /// gamma^mu)/2 acting on S_+ (plus) or S_- (minus).
  RatMat gamma2_plus(int mu, int nu) const;
  RatMat gamma2_minus(int mu, int nu) const;
};

/// Builds and verifies the representation; hard error on any failed
/// relation. The result is cached.
const SpinorRep& build_rep();

/// Number of verified construction relations (Clifford anticommutators for
/// both chirality orders, T-symmetry per mu, gamma^{mu nu} antisymmetry).
int rep_relation_count();

/// Integer-grid serialization of the ten sigma / sigma-bar blocks and T.
std::string rep_golden_json();

/// Covector with exact polynomial components; pairing uses the mostly-minus
/// dual metric: (u, v) = u_0 v_0 - sum_{i >= 1} u_i v_i.
struct MVec {
  std::array<Poly, 10> c;
  static MVec zero(const ConstUniversePtr& u);
};
Poly mink_pair(const MVec& a, const MVec& b);
MVec m_plus(const ConstUniversePtr& u);   // (1/2)(E^0 + E^9)
MVec m_minus(const ConstUniversePtr& u);  // (1/2)(E^0 - E^9)

/// Light-like pair of the tau-family written through the half-angle circle
/// point (c, s) = (cos(pi tau/2), sin(pi tau/2)):
///   m(tau) = (1/2)(E^0 + (c^2-s^2) E^9 - (2cs/p_*) p_a E^a)
MVec m_tau(const ConstUniversePtr& u, const Poly& c, const Poly& s,
           const std::vector<GenId>& p_transverse, GenId pstar);
MVec n_tau(const ConstUniversePtr& u, const Poly& c, const Poly& s,
           const std::vector<GenId>& p_transverse, GenId pstar);

/// Polynomial 16x16 matrices for the symbolic checks.
struct PMat {
  ConstUniversePtr u;
  int n = 0, m = 0;
  std::vector<Poly> e;

  static PMat zero(const ConstUniversePtr& u, int n, int m);
  static PMat identity(const ConstUniversePtr& u, int n);
  static PMat lift(const ConstUniversePtr& u, const RatMat& a);
  Poly& at(int i, int j) { return e[static_cast<std::size_t>(i) * m + j]; }
  const Poly& at(int i, int j) const {
    return e[static_cast<std::size_t>(i) * m + j];
  }
  PMat operator*(const PMat& o) const;
  PMat operator+(const PMat& o) const;
  PMat operator-(const PMat& o) const;
  PMat operator-() const;
  PMat scaled(const Poly& c) const;
  PMat transpose() const;
  bool is_zero() const;
  bool operator==(const PMat& o) const;
  PMat derived(const Derivation& d) const;  // entrywise derivative
};

using PVec = std::vector<Poly>;  // spinor with polynomial components
PVec mat_vec(const PMat& m, const PVec& v);
PVec gens_vec(const ConstUniversePtr& u, const std::vector<GenId>& comps);

/// T(a, b) for opposite-chirality spinors, through the pairing matrix.
Poly t_pair(const SpinorRep& rep, const ConstUniversePtr& u, const PVec& a,
            const PVec& b);

/// Clifford action of a covector: cl_plus lands in S_+ (acts on S_-),
/// cl_minus lands in S_- (acts on S_+).
PMat cl_plus(const SpinorRep& rep, const MVec& v);
PMat cl_minus(const SpinorRep& rep, const MVec& v);

/// Rational projectors cl(m) cl(n) onto the eight-dimensional kernels of
/// cl(m) inside S_+ and S_-; requires (m,m) = (n,n) = 0 and (m,n) = 1/2.
struct LightconeProjectors {
  RatMat on_plus;
  RatMat on_minus;
};
LightconeProjectors lightcone_projector(const SpinorRep& rep, const MVec& m,
                                        const MVec& n);

/// The rotation generator of the (9,a)-plane in the orientation used by the
/// tau-family (same matrix on both chirality blocks up to the stated
/// variants).
PMat rot_a9(const SpinorRep& rep, const ConstUniversePtr& u, int a);
PMat rot_a9_minus(const SpinorRep& rep, const ConstUniversePtr& u, int a);

/// One-parameter spin group element g = c - (s/p_*) p_a rot_a9, the same
/// matrix on both chirality blocks.
PMat g_tau(const SpinorRep& rep, const ConstUniversePtr& u, const Poly& c,
           const Poly& s, const std::vector<GenId>& p_transverse,
           GenId pstar);

/// d g(tau) / d p_a, via the derivation with dp_*/dp_a = p_a / p_*.
PMat g_tau_dp(const SpinorRep& rep, const ConstUniversePtr& u, const Poly& c,
              const Poly& s, const std::vector<GenId>& p_transverse,
              GenId pstar, int a);

}  // namespace bvcheck

#endif
