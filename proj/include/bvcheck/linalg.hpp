#ifndef BVCHECK_LINALG_HPP
#define BVCHECK_LINALG_HPP

#include <array>
#include <vector>

#include "bvcheck/poly.hpp"
#include "bvcheck/rng.hpp"

namespace bvcheck {

/// Parities (and optional integer ghosts) of a homogeneous basis.
struct SuperDim {
  std::vector<int> parity;
  std::vector<int> ghost;  // empty or one per basis vector

  int size() const { return static_cast<int>(parity.size()); }
  int n_even() const;
  int n_odd() const;
  bool operator==(const SuperDim& o) const { return parity == o.parity; }
  bool operator!=(const SuperDim& o) const { return !(*this == o); }
  SuperDim flipped() const;

  /// ne even basis vectors followed by no odd ones.
  static SuperDim even_odd(int ne, int no);
};

/// Matrix of a morphism A: V -> W. Entry (i, j) is the coefficient of the
/// i-th W-basis vector in A(v_j), coefficients written to the right of basis
/// vectors, so composition is the plain entry product (B*A)(i,j) =
/// sum_k B(i,k) A(k,j). Entries are ring elements; a homogeneous morphism of
/// parity s has entries of ring parity s + p_row + p_col.
class SuperMatrix {
 public:
  SuperMatrix(ConstUniversePtr u, SuperDim dst, SuperDim src, int parity);
  static SuperMatrix identity(const ConstUniversePtr& u, const SuperDim& d);

  const ConstUniversePtr& universe() const { return u_; }
  const SuperDim& dst() const { return dst_; }
  const SuperDim& src() const { return src_; }
  int parity() const { return parity_; }
  int rows() const { return dst_.size(); }
  int cols() const { return src_.size(); }

  Poly& at(int i, int j);
  const Poly& at(int i, int j) const;

  bool is_zero() const;
  void check_entry_parities() const;

  SuperMatrix operator*(const SuperMatrix& o) const;
  SuperMatrix operator+(const SuperMatrix& o) const;
  SuperMatrix operator-(const SuperMatrix& o) const;
  SuperMatrix operator-() const;
  bool operator==(const SuperMatrix& o) const;
  bool operator!=(const SuperMatrix& o) const { return !(*this == o); }

  /// A*: W* -> V*, (A*)(a,b) = (-1)^{p_a q_b + q_b} A(b,a).
  SuperMatrix supertranspose() const;
  /// A° = A^{Pi*}: W° -> V°, (A°)(a,b) = (-1)^{p_a q_b + p_a} A(b,a), with
  /// all basis parities flipped.
  SuperMatrix pidual() const;

  /// Determinant of a square matrix with even (hence commuting) entries.
  Poly det() const;
  /// Inverse via the adjugate; the determinant must be invertible in the
  /// scalar tower (rational or unit body plus nilpotent part).
  SuperMatrix inverse() const;

  /// Berezinian of an even endomorphism. Both Schur-complement routes,
  /// det(A00 - A01 A11^{-1} A10)/det(A11) and det(A00)/det(A11 - A10 A00^{-1}
  /// A01), are evaluated and must agree exactly.
  Poly berezinian() const;

  SuperMatrix submatrix(const std::vector<int>& rows,
                        const std::vector<int>& cols) const;
  std::string str() const;

 private:
  ConstUniversePtr u_;
  SuperDim dst_, src_;
  int parity_;
  std::vector<Poly> e_;  // row-major
};

/// Standard odd Darboux pairing on V = L + L° with L purely even of
/// dimension n: omega(f_a, e_b) = delta_ab, omega(e_b, f_a) = -delta_ab.
/// The form has ghost number -1: tangent ghosts are gh(e_a) = -lghost[a],
/// gh(f_a) = 1 + lghost[a], so nonzero pairs sum to +1.
struct OddSymplecticForm {
  int n = 0;
  std::vector<int> lghost;  // coordinate ghosts of the x^a; may be empty

  SuperDim vdim() const { return SuperDim::even_odd(n, n); }
  Rational omega(int k, int l) const;
  bool ghost_pairing_ok() const;
};

/// The four residual matrices of the superquadric equations, computed as the
/// blocks of omega(A v_i, A v_j) - omega(v_i, v_j):
///   [0] S°P - Q°R - Id_L      (odd rows, even cols)
///   [1] P°R - R°P             (even rows, even cols)
///   [2] Q°S - S°Q             (odd rows, odd cols)
///   [3] P°S - R°Q - Id_L°     (even rows, odd cols)
/// A preserves omega iff all four vanish.
std::array<SuperMatrix, 4> quadric_residuals(const SuperMatrix& a,
                                             const OddSymplecticForm& w);
bool on_quadric(const SuperMatrix& a, const OddSymplecticForm& w);

/// Ber^{1/2} on the quadric: the Berezinian of the L -> L block. Requires
/// the quadric residuals to vanish; satisfies Ber(A) = ber_half(A)^2.
Poly ber_half(const SuperMatrix& a, const OddSymplecticForm& w);

/// Deterministic on-quadric sample: a product of `factors` elementary
/// factors (gradient shears and diagonal rescalings, each the tangent map of
/// an exact symplectomorphism), verified by quadric_residuals before return.
SuperMatrix random_quadric(Rng& rng, const ConstUniversePtr& u,
                           const OddSymplecticForm& w,
                           const std::vector<GenId>& odd_pool, int factors);

/// Random even endomorphism of a (ne|no) space with invertible diagonal
/// blocks; off-diagonal entries are drawn from the odd constant pool.
SuperMatrix random_even_invertible(Rng& rng, const ConstUniversePtr& u,
                                   int ne, int no,
                                   const std::vector<GenId>& odd_pool);

/// Random homogeneous morphism with parity-consistent scalar entries
/// (entries live only in slots with p_row + p_col = parity).
SuperMatrix random_scalar_morphism(Rng& rng, const ConstUniversePtr& u,
                                   const SuperDim& dst, const SuperDim& src,
                                   int parity);

}  // namespace bvcheck

#endif
