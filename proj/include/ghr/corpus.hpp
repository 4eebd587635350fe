#pragma once

#include <string>
#include <vector>

#include "ghr/gamma_hemiring.hpp"

namespace ghr {

/// ({0,1}, max, min).
inline Hemiring boolean_semiring() {
  Hemiring h;
  h.additive = boolean_monoid();
  h.mul = {0, 0, 0, 1};
  return h;
}

/// Z_n with addition and multiplication mod n.
inline Hemiring cyclic_ring(std::size_t n) {
  Hemiring h;
  h.additive = cyclic_monoid(n);
  h.mul.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) h.mul[a * n + b] = static_cast<Elem>((a * b) % n);
  return h;
}

/// The one-element hemiring {0}.
inline Hemiring trivial_hemiring() {
  Hemiring h;
  h.additive.elements = {"0"};
  h.additive.zero = 0;
  h.additive.add = {0};
  h.mul = {0};
  return h;
}

/// Every product is zero; S and Gamma are arbitrary monoids.
inline GammaHemiring zero_action(FiniteMonoid s, FiniteMonoid gamma, std::string name) {
  GammaHemiring g;
  g.name = std::move(name);
  g.S = std::move(s);
  g.Gamma = std::move(gamma);
  g.action.assign(g.S.size() * g.Gamma.size() * g.S.size(), g.S.zero);
  return g;
}

namespace corpus {

inline GammaHemiring boolean() { return from_hemiring(boolean_semiring(), "B"); }
inline GammaHemiring cyclic(std::size_t n) { return from_hemiring(cyclic_ring(n), "Z" + std::to_string(n)); }
inline GammaHemiring z2_squared() { return product(cyclic(2), cyclic(2)); }
inline GammaHemiring boolean_column_matrices() { return matrix_gamma_hemiring(boolean_semiring(), 2, 1); }
inline GammaHemiring zero_action_z2() { return zero_action(cyclic_monoid(2), cyclic_monoid(2), "Z2zero"); }

/// The fixed verification corpus: B, Z2, Z3, Z4, Z2xZ2, Mat2x1 over B.
inline std::vector<GammaHemiring> standard() {
  return {boolean(), cyclic(2), cyclic(3), cyclic(4), z2_squared(), boolean_column_matrices()};
}

}  // namespace corpus
}  // namespace ghr
