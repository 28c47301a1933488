#ifndef BVCHECK_POLY_HPP
#define BVCHECK_POLY_HPP

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bvcheck/generators.hpp"

namespace bvcheck {

/// Sorted exponent vector (generator id, exponent), exponent != 0.
using Monomial = std::vector<std::pair<GenId, int>>;

struct Derivation;

/// Element of the Z x Z/2-graded supercommutative algebra over exact
/// rationals. Terms are kept in a canonical normal form: generators sorted by
/// their global creation order with Koszul signs applied, odd squares pruned,
/// declared quadratic relations reduced, zero coefficients dropped.
class Poly {
 public:
  Poly() = default;
  explicit Poly(ConstUniversePtr u) : u_(std::move(u)) {}

  static Poly zero(const ConstUniversePtr& u) { return Poly(u); }
  static Poly constant(const ConstUniversePtr& u, const Rational& c);
  static Poly constant(const ConstUniversePtr& u, long num, long den = 1);
  static Poly gen(const ConstUniversePtr& u, GenId g, int exp = 1);
  static Poly monomial_term(const ConstUniversePtr& u, const Monomial& m,
                            const Rational& c);

  const ConstUniversePtr& universe() const { return u_; }
  const std::map<Monomial, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator*(const Rational& c) const;
  friend Poly operator*(const Rational& c, const Poly& p) { return p * c; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(int k) const;

  bool is_rational() const;
  Rational rational_value() const;  // fails unless constant

  /// Parity / ghost of a homogeneous element; fails on mixed input.
  int parity() const;
  int ghost() const;
  bool homogeneous_parity() const;
  bool homogeneous_ghost() const;
  std::pair<Poly, Poly> split_parity() const;  // (even part, odd part)

  /// Every term contains an odd or square-zero factor.
  bool is_nilpotent() const;

  std::set<GenId> support() const;
  int degree_in(GenId g) const;      // max exponent, 0 if absent
  int min_degree_in(GenId g) const;  // min exponent over terms containing g
  bool depends_on(GenId g) const;

  /// Left partial derivative by a coordinate-like generator.
  Poly partial(GenId v) const;
  Poly derive(const Derivation& d) const;

  /// Simultaneous graded substitution; values must match generator parity.
  Poly substitute(const std::map<GenId, Poly>& assignment) const;

  /// Coefficient of g^k (g stripped from the result).
  Poly coeff_of(GenId g, int k) const;

  /// Iterated odd coefficient extraction: the integral of the product
  /// v1 v2 ... vk in list order is +1.
  Poly berezin(const std::vector<GenId>& odd_vars) const;

  /// Moment under the product standard Gaussian weight, normalized so the
  /// moment of 1 is 1; each listed even variable integrates by
  /// E[x^{2k}] = (2k-1)!!.  Terms that still contain odd coordinates or
  /// unlisted chart coordinates are rejected.
  Poly gaussian_moment(const std::vector<GenId>& even_vars) const;

  /// Inverse of (invertible monomial) + (nilpotent rest), by geometric
  /// series; fails otherwise.
  Poly try_inverse() const;

  std::string str() const;
  std::string json() const;  // machine-readable term list

 private:
  void add_term(const Monomial& m, const Rational& c);
  void add_reduced(const Monomial& m, const Rational& c);
  friend struct Derivation;

  ConstUniversePtr u_;
  std::map<Monomial, Rational> t_;
};

/// Graded derivation given by its images on generators; images absent from
/// the map are zero. Construction verifies compatibility with every declared
/// square relation touching the images.
struct Derivation {
  Derivation(ConstUniversePtr u, int parity, std::map<GenId, Poly> images,
             bool validate = true);

  ConstUniversePtr u;
  int parity = 0;
  std::map<GenId, Poly> img;
};

int monomial_parity(const Universe& u, const Monomial& m);
int monomial_ghost(const Universe& u, const Monomial& m);

Rational factorial(int n);
Rational double_factorial(int n);  // n!! with (-1)!! = 1
Rational binomial(int n, int k);

}  // namespace bvcheck

#endif
