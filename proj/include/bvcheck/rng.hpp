#ifndef BVCHECK_RNG_HPP
#define BVCHECK_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "bvcheck/poly.hpp"

namespace bvcheck {

/// Deterministic RNG for seeded suites. mt19937_64 output is fully specified
/// by the standard, and we use raw draws only, so reports are reproducible
/// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  int uniform(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(int max_abs_num = 5, int max_den = 3) {
    Rational r(uniform(-max_abs_num, max_abs_num), uniform(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int max_abs_num = 5, int max_den = 3) {
    for (;;) {
      Rational r = rational(max_abs_num, max_den);
      if (r != 0) return r;
    }
  }

  /// Random polynomial in the given generators: `terms` monomials of total
  /// degree <= max_degree (odd generators capped at exponent 1).
  Poly poly(const ConstUniversePtr& u, const std::vector<GenId>& gens,
            int max_degree, int terms, int max_abs_num = 3, int max_den = 2) {
    Poly p(u);
    for (int t = 0; t < terms; ++t) {
      Poly mono = Poly::constant(u, rational(max_abs_num, max_den));
      int deg = uniform(0, max_degree);
      for (int d = 0; d < deg; ++d) {
        GenId g = gens[static_cast<std::size_t>(uniform(
            0, static_cast<int>(gens.size()) - 1))];
        mono *= Poly::gen(u, g);
      }
      p += mono;
    }
    return p;
  }

  /// Random polynomial of homogeneous parity (resamples the mixed-parity
  /// part away by construction: keeps only the requested half).
  Poly poly_with_parity(const ConstUniversePtr& u,
                        const std::vector<GenId>& gens, int max_degree,
                        int terms, int parity) {
    Poly p = poly(u, gens, max_degree, terms);
    auto [even, odd] = p.split_parity();
    return parity ? odd : even;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bvcheck

#endif
