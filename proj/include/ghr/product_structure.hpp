#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ghr/gamma_hemiring.hpp"

namespace ghr {

/// A carrier monoid together with, for each ordered pair (a, b), the set of
/// all products of a and b. For a Gamma-hemiring that set is {a g b : g in
/// Gamma}; for a hemiring it is {a b}. Ideal checks and h-products run on
/// this view so S, L and R share one engine.
struct ProductStructure {
  std::string carrier_id;
  FiniteMonoid carrier;
  std::vector<std::vector<Elem>> pair_products;  // [a * n + b], sorted, unique

  std::size_t size() const { return carrier.size(); }
  const std::vector<Elem>& products(Elem a, Elem b) const {
    return pair_products[static_cast<std::size_t>(a) * size() + b];
  }
};

inline ProductStructure as_product_structure(const GammaHemiring& g, std::string carrier_id = "S") {
  ProductStructure p;
  p.carrier_id = std::move(carrier_id);
  p.carrier = g.S;
  const auto n = static_cast<Elem>(g.size());
  p.pair_products.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto& out = p.pair_products[static_cast<std::size_t>(a) * n + b];
      for (Elem al = 0; al < g.gamma_size(); ++al) out.push_back(g.act(a, al, b));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  return p;
}

inline ProductStructure hemiring_as_product_structure(const Hemiring& h, std::string carrier_id) {
  ProductStructure p;
  p.carrier_id = std::move(carrier_id);
  p.carrier = h.additive;
  const auto n = static_cast<Elem>(h.size());
  p.pair_products.resize(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) p.pair_products[static_cast<std::size_t>(a) * n + b] = {h.product(a, b)};
  return p;
}

}  // namespace ghr
