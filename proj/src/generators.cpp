#include "bvcheck/generators.hpp"

#include "bvcheck/poly.hpp"

namespace bvcheck {

std::shared_ptr<Universe> Universe::create() {
  return std::shared_ptr<Universe>(new Universe());
}

GenId Universe::add(GenInfo info) {
  if (info.name.empty()) fail("generator needs a name");
  if (by_name_.count(info.name))
    fail("generator '" + info.name + "' already declared");
  GenId id = static_cast<GenId>(gens_.size());
  by_name_[info.name] = id;
  gens_.push_back(std::move(info));
  return id;
}

GenId Universe::even_coord(const std::string& name, int ghost) {
  return add({name, 0, ghost, GenKind::EvenCoord, ExpDomain::Nat,
              SquareRule::None, -1, 0});
}

GenId Universe::odd_coord(const std::string& name, int ghost) {
  return add({name, 1, ghost, GenKind::OddCoord, ExpDomain::Nat,
              SquareRule::Zero, -1, 0});
}

GenId Universe::odd_const(const std::string& name, int ghost) {
  return add({name, 1, ghost, GenKind::OddConst, ExpDomain::Nat,
              SquareRule::Zero, -1, 0});
}

GenId Universe::simplex_coord(const std::string& name) {
  return add({name, 0, 0, GenKind::SimplexCoord, ExpDomain::Nat,
              SquareRule::None, -1, 0});
}

GenId Universe::simplex_form(const std::string& name) {
  return add({name, 1, 1, GenKind::SimplexForm, ExpDomain::Nat,
              SquareRule::Zero, -1, 0});
}

GenId Universe::cochain_gen(const std::string& name, int parity, int ghost) {
  return add({name, parity, ghost, GenKind::CochainGen, ExpDomain::Nat,
              parity ? SquareRule::Zero : SquareRule::None, -1, 0});
}

GenId Universe::parameter(const std::string& name) {
  return add({name, 0, 0, GenKind::Parameter, ExpDomain::Nat,
              SquareRule::None, -1, 0});
}

GenId Universe::nilpotent_param(const std::string& name) {
  return add({name, 0, 0, GenKind::NilpotentParam, ExpDomain::Nat,
              SquareRule::Zero, -1, 0});
}

GenId Universe::hbar() {
  if (hbar_ >= 0) return hbar_;
  hbar_ = add({"h", 0, 0, GenKind::Hbar, ExpDomain::Integer, SquareRule::None,
               -1, 0});
  return hbar_;
}

GenId Universe::unit_param(const std::string& name) {
  return add({name, 0, 0, GenKind::UnitParam, ExpDomain::Integer,
              SquareRule::None, -1, 0});
}

GenId Universe::algebraic_param(const std::string& name, const Poly& square,
                                bool unit) {
  if (square.universe().get() != this)
    fail("square relation for '" + name + "' built over a foreign universe");
  if (!square.is_zero() && square.parity() != 0)
    fail("square relation for '" + name + "' must be even");
  int rank = 0;
  for (GenId g : square.support()) {
    const GenInfo& gi = info(g);
    if (gi.square == SquareRule::Reduce)
      rank = std::max(rank, gi.square_rank + 1);
  }
  if (unit) {
    // g^{-1} = g * square^{-1}: the square must itself be invertible.
    square.try_inverse();
  }
  GenInfo gi{name,
             0,
             0,
             GenKind::AlgebraicParam,
             unit ? ExpDomain::Integer : ExpDomain::Nat,
             SquareRule::Reduce,
             static_cast<int>(squares_.size()),
             rank};
  squares_.push_back(std::make_shared<const Poly>(square));
  return add(std::move(gi));
}

GenId Universe::field(const std::string& name, int parity, int ghost) {
  return add({name, parity, ghost, GenKind::Field, ExpDomain::Nat,
              parity ? SquareRule::Zero : SquareRule::None, -1, 0});
}

GenId Universe::field_deriv(const std::string& name, int parity, int ghost) {
  return add({name, parity, ghost, GenKind::FieldDeriv, ExpDomain::Nat,
              parity ? SquareRule::Zero : SquareRule::None, -1, 0});
}

const GenInfo& Universe::info(GenId g) const {
  if (g < 0 || g >= size()) fail("generator id out of range");
  return gens_[g];
}

GenId Universe::find(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

GenId Universe::require(const std::string& name) const {
  GenId g = find(name);
  if (g < 0) fail("unknown generator '" + name + "'");
  return g;
}

const Poly& Universe::square_poly(int index) const {
  if (index < 0 || index >= static_cast<int>(squares_.size()))
    fail("square relation index out of range");
  return *squares_[index];
}

}  // namespace bvcheck
