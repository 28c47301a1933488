#ifndef BVCHECK_GENERATORS_HPP
#define BVCHECK_GENERATORS_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace bvcheck {

using Rational = mpq_class;
using GenId = int;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

/// What a generator stands for. The kind gates which operations accept it
/// (derivation, Berezin integration, substitution, Gaussian moments).
enum class GenKind {
  EvenCoord,       // chart coordinate x^a
  OddCoord,        // chart coordinate xi_a
  OddConst,        // adjoined odd constant lambda_i
  SimplexCoord,    // barycentric coordinate t_i (t_0 eliminated)
  SimplexForm,     // dt_i, odd of ghost +1
  CochainGen,      // Lie superalgebra cochain generator eps^a
  Parameter,       // commuting indeterminate (momenta p_mu, pi, ...)
  NilpotentParam,  // even constant with square zero (flow parameter)
  Hbar,            // formal Laurent variable
  UnitParam,       // invertible symbol, arbitrary integer exponent
  AlgebraicParam,  // symbol reduced by a declared monic quadratic relation
  Field,           // world-line field at a point
  FieldDeriv,      // formal d/dt-derivative of a field
};

enum class ExpDomain { Nat, Integer };
enum class SquareRule { None, Zero, Reduce };

struct GenInfo {
  std::string name;
  int parity = 0;  // 0 even, 1 odd
  int ghost = 0;
  GenKind kind = GenKind::Parameter;
  ExpDomain domain = ExpDomain::Nat;
  SquareRule square = SquareRule::None;
  int square_poly = -1;  // index into Universe square table
  int square_rank = 0;   // reduction DAG depth, guards termination
};

class Poly;

/// Append-only table of generators plus their reduction relations. A single
/// global creation order fixes every Koszul sign; polynomials hold a shared
/// pointer so serialized results are reproducible bit for bit.
class Universe : public std::enable_shared_from_this<Universe> {
 public:
  static std::shared_ptr<Universe> create();

  GenId add(GenInfo info);

  GenId even_coord(const std::string& name, int ghost = 0);
  GenId odd_coord(const std::string& name, int ghost = 0);
  GenId odd_const(const std::string& name, int ghost = 0);
  GenId simplex_coord(const std::string& name);
  GenId simplex_form(const std::string& name);
  GenId cochain_gen(const std::string& name, int parity, int ghost = 1);
  GenId parameter(const std::string& name);
  GenId nilpotent_param(const std::string& name);
  GenId hbar();
  GenId unit_param(const std::string& name);
  /// Adjoins g with the relation g^2 = square. When `unit` is set the square
  /// must be an invertible monomial so negative exponents fold away.
  GenId algebraic_param(const std::string& name, const Poly& square,
                        bool unit = false);
  GenId field(const std::string& name, int parity, int ghost);
  GenId field_deriv(const std::string& name, int parity, int ghost);

  int size() const { return static_cast<int>(gens_.size()); }
  const GenInfo& info(GenId g) const;
  GenId find(const std::string& name) const;           // -1 if absent
  GenId require(const std::string& name) const;        // fails if absent
  const Poly& square_poly(int index) const;
  GenId hbar_id() const { return hbar_; }

 private:
  Universe() = default;
  std::vector<GenInfo> gens_;
  std::vector<std::shared_ptr<const Poly>> squares_;
  std::map<std::string, GenId> by_name_;
  GenId hbar_ = -1;
};

using UniversePtr = std::shared_ptr<Universe>;
using ConstUniversePtr = std::shared_ptr<const Universe>;

}  // namespace bvcheck

#endif
