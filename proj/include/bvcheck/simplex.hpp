#ifndef BVCHECK_SIMPLEX_HPP
#define BVCHECK_SIMPLEX_HPP

#include <string>
#include <vector>

#include "bvcheck/poly.hpp"

namespace bvcheck {

/// Polynomial de Rham forms on the simplices Delta^k for k <= kmax, all
/// living in one universe: level k uses coordinates t_{k,1}..t_{k,k} (t_0 is
/// eliminated via t_0 = 1 - sum t_i) and odd ghost-+1 generators dt_{k,i}.
class SimplexAlgebra {
 public:
  SimplexAlgebra(const UniversePtr& u, int kmax,
                 const std::string& prefix = "t");

  const ConstUniversePtr& universe() const { return u_; }
  int kmax() const { return kmax_; }
  GenId t(int k, int i) const;   // 1 <= i <= k
  GenId dt(int k, int i) const;
  Poly t0(int k) const;          // 1 - sum_i t_{k,i}
  Poly dt0(int k) const;         // -sum_i dt_{k,i}
  /// Barycentric coordinate j = 0..k as a polynomial.
  Poly coord(int k, int j) const;
  Poly dcoord(int k, int j) const;

  /// delta w = sum_i dt_i dw/dt_i; raises form degree by one and squares to
  /// zero.
  Poly deRham(int k, const Poly& w) const;

  /// Pullback along the affine map of an order-preserving mu: [k] -> [l]
  /// (mu[i] = image of vertex i); takes level-l forms to level-k forms.
  Poly pullback(const std::vector<int>& mu, int l, const Poly& w) const;

  static std::vector<int> coface(int k, int i);        // [k-1] -> [k]
  static std::vector<int> codegeneracy(int k, int i);  // [k+1] -> [k]

  /// Exact integral over Delta^k of the top-degree part, orientation
  /// dt_1...dt_k positive:
  ///   int t_1^{a_1} ... t_k^{a_k} dt_1...dt_k = prod a_i! / (sum a_i + k)!.
  /// Non-simplex generators pass through as constants.
  Poly integrate(int k, const Poly& w) const;

  /// int_{Delta^k} delta w - sum_i (-1)^i int_{Delta^{k-1}} (d^i)* w.
  Poly stokes_residual(int k, const Poly& w) const;

  /// Largest dt-count over terms (0 for dt-free, -1 for the zero form).
  int form_degree(int k, const Poly& w) const;

 private:
  ConstUniversePtr u_;
  int kmax_;
  std::vector<std::vector<GenId>> t_, dt_;  // [k][i-1]
};

}  // namespace bvcheck

#endif
