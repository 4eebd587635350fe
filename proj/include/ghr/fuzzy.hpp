#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghr/error.hpp"
#include "ghr/monoid.hpp"
#include "ghr/product_structure.hpp"
#include "ghr/rational.hpp"

namespace ghr {

/// Crisp subset of a named finite carrier.
struct CrispSubset {
  std::string carrier;
  std::vector<bool> members;

  std::size_t size() const { return members.size(); }
  bool contains(Elem e) const { return members[e]; }
  std::size_t count() const { return static_cast<std::size_t>(std::count(members.begin(), members.end(), true)); }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i]) out.push_back(static_cast<Elem>(i));
    return out;
  }

  bool is_subset_of(const CrispSubset& other) const {
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] && !other.members[i]) return false;
    return true;
  }

  static CrispSubset of(std::string carrier, std::size_t n, std::initializer_list<Elem> elems) {
    CrispSubset s{std::move(carrier), std::vector<bool>(n, false)};
    for (auto e : elems) s.members.at(e) = true;
    return s;
  }

  friend bool operator==(const CrispSubset&, const CrispSubset&) = default;
};

/// Size first, then lexicographic on the sorted element lists.
inline bool crisp_order(const CrispSubset& a, const CrispSubset& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.elements() < b.elements();
}

/// Exact-valued fuzzy subset over a named finite carrier.
struct FuzzySubset {
  std::string carrier;
  std::vector<Rational01> values;

  std::size_t size() const { return values.size(); }
  const Rational01& operator[](Elem e) const { return values[e]; }
  Rational01& operator[](Elem e) { return values[e]; }

  bool is_constant() const {
    return std::all_of(values.begin(), values.end(), [&](const Rational01& v) { return v == values.front(); });
  }
  bool is_empty() const {
    return std::all_of(values.begin(), values.end(), [](const Rational01& v) { return v.is_zero(); });
  }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;
};

struct LevelSet {
  Rational01 threshold;
  CrispSubset members;
};

inline std::string to_string(const FuzzySubset& mu) {
  std::string out = "{";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ",";
    out += mu.values[i].str();
  }
  return out + "}";
}

inline std::string to_string(const FuzzySubset& mu, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) out += ", ";
    out += labels[i] + ":" + mu.values[i].str();
  }
  return out + "}";
}

namespace detail {

inline void require_same_carrier(const FuzzySubset& a, const FuzzySubset& b) {
  if (a.carrier != b.carrier || a.size() != b.size())
    throw PreconditionError("carrier mismatch: " + a.carrier + " vs " + b.carrier);
}

inline void require_carrier(const FuzzySubset& a, const std::string& carrier, std::size_t n) {
  if (a.carrier != carrier || a.size() != n)
    throw PreconditionError("carrier mismatch: expected " + carrier + ", got " + a.carrier);
}

}  // namespace detail

inline FuzzySubset constant(std::string carrier, std::size_t n, Rational01 value) {
  return {std::move(carrier), std::vector<Rational01>(n, value)};
}

inline FuzzySubset characteristic(const CrispSubset& a) {
  FuzzySubset mu{a.carrier, std::vector<Rational01>(a.size())};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.members[i]) mu.values[i] = Rational01::one();
  return mu;
}

inline LevelSet level_set(const FuzzySubset& mu, Rational01 t) {
  LevelSet ls{t, {mu.carrier, std::vector<bool>(mu.size(), false)}};
  for (std::size_t i = 0; i < mu.size(); ++i) ls.members.members[i] = mu.values[i] >= t;
  return ls;
}

inline FuzzySubset intersect(const FuzzySubset& a, const FuzzySubset& b) {
  detail::require_same_carrier(a, b);
  FuzzySubset out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.values[i] = std::min(a.values[i], b.values[i]);
  return out;
}

inline bool is_subset(const FuzzySubset& a, const FuzzySubset& b) {
  detail::require_same_carrier(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.values[i] > b.values[i]) return false;
  return true;
}

inline bool equals(const FuzzySubset& a, const FuzzySubset& b) {
  detail::require_same_carrier(a, b);
  return a.values == b.values;
}

/// (mu1 (+) mu2)(x) = max over u + v = x of min(mu1(u), mu2(v)).
inline FuzzySubset fuzzy_sum(const FiniteMonoid& m, const FuzzySubset& a, const FuzzySubset& b) {
  detail::require_same_carrier(a, b);
  if (a.size() != m.size()) throw PreconditionError("fuzzy_sum: carrier size differs from monoid size");
  FuzzySubset out = constant(a.carrier, a.size(), Rational01::zero());
  const auto n = static_cast<Elem>(m.size());
  for (Elem u = 0; u < n; ++u)
    for (Elem v = 0; v < n; ++v) {
      auto& slot = out.values[m.sum(u, v)];
      slot = std::max(slot, std::min(a.values[u], b.values[v]));
    }
  return out;
}

/// (mu x sigma)(x, y) = min(mu(x), sigma(y)); index x * |sigma| + y.
inline FuzzySubset cartesian(const FuzzySubset& mu, const FuzzySubset& sigma) {
  FuzzySubset out{mu.carrier + "x" + sigma.carrier, {}};
  out.values.reserve(mu.size() * sigma.size());
  for (const auto& a : mu.values)
    for (const auto& b : sigma.values) out.values.push_back(std::min(a, b));
  return out;
}

namespace detail {

inline void require_on(const ProductStructure& p, const FuzzySubset& mu) { require_carrier(mu, p.carrier_id, p.size()); }

/// Elements x admitting x + u + z = v + z for some u, v in `pool` and z.
inline std::vector<bool> h_reachable(const FiniteMonoid& m, const std::vector<bool>& pool) {
  const auto n = static_cast<Elem>(m.size());
  std::vector<bool> out(n, false);
  std::vector<Elem> members;
  for (Elem u = 0; u < n; ++u)
    if (pool[u]) members.push_back(u);
  if (members.empty()) return out;
  std::vector<bool> shifted(n);
  for (Elem z = 0; z < n; ++z) {
    std::fill(shifted.begin(), shifted.end(), false);
    for (auto v : members) shifted[m.sum(v, z)] = true;
    for (Elem x = 0; x < n; ++x) {
      if (out[x]) continue;
      for (auto u : members)
        if (shifted[m.sum(x, m.sum(u, z))]) {
          out[x] = true;
          break;
        }
    }
  }
  return out;
}

/// Closure of `gens` under carrier addition (non-empty finite sums).
inline std::vector<bool> additive_closure(const FiniteMonoid& m, const std::vector<bool>& gens) {
  const auto n = static_cast<Elem>(m.size());
  std::vector<bool> in = gens;
  std::vector<Elem> gen_list, queue;
  for (Elem e = 0; e < n; ++e)
    if (gens[e]) {
      gen_list.push_back(e);
      queue.push_back(e);
    }
  while (!queue.empty()) {
    Elem e = queue.back();
    queue.pop_back();
    for (auto g : gen_list) {
      Elem s = m.sum(e, g);
      if (!in[s]) {
        in[s] = true;
        queue.push_back(s);
      }
    }
  }
  return in;
}

}  // namespace detail

/// Generalized h-product, computed by level sets: for each candidate
/// threshold t (descending) the sums of products with mu(a) >= t and
/// theta(b) >= t form P_t, and x gets the largest t with
/// x + u + z = v + z for some u, v in P_t. Both sides may use different
/// numbers of terms.
inline FuzzySubset generalized_h_product(const ProductStructure& p, const FuzzySubset& mu, const FuzzySubset& theta) {
  detail::require_on(p, mu);
  detail::require_on(p, theta);
  const auto n = static_cast<Elem>(p.size());
  std::vector<Rational01> thresholds;
  for (const auto& v : mu.values) thresholds.push_back(v);
  for (const auto& v : theta.values) thresholds.push_back(v);
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  FuzzySubset out = constant(p.carrier_id, n, Rational01::zero());
  std::vector<bool> assigned(n, false);
  for (const auto& t : thresholds) {
    if (t.is_zero()) break;
    std::vector<bool> gens(n, false);
    for (Elem a = 0; a < n; ++a) {
      if (mu.values[a] < t) continue;
      for (Elem b = 0; b < n; ++b) {
        if (theta.values[b] < t) continue;
        for (auto q : p.products(a, b)) gens[q] = true;
      }
    }
    auto reach = detail::h_reachable(p.carrier, detail::additive_closure(p.carrier, gens));
    for (Elem x = 0; x < n; ++x)
      if (reach[x] && !assigned[x]) {
        assigned[x] = true;
        out.values[x] = t;
      }
  }
  return out;
}

/// Simple h-product: single-term decompositions x + a g b + z = c d e + z,
/// valued min(mu(a), mu(c), theta(b), theta(e)).
inline FuzzySubset simple_h_product(const ProductStructure& p, const FuzzySubset& mu, const FuzzySubset& theta) {
  detail::require_on(p, mu);
  detail::require_on(p, theta);
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  // best[q]: largest min(mu(a), theta(b)) over a, b with q among their products.
  std::vector<std::optional<Rational01>> best(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      auto v = std::min(mu.values[a], theta.values[b]);
      for (auto q : p.products(a, b))
        if (!best[q] || *best[q] < v) best[q] = v;
    }
  std::vector<Elem> reachable;
  for (Elem q = 0; q < n; ++q)
    if (best[q]) reachable.push_back(q);

  FuzzySubset out = constant(p.carrier_id, n, Rational01::zero());
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z)
      for (auto u : reachable) {
        Elem lhs = m.sum(m.sum(x, u), z);
        for (auto v : reachable)
          if (m.sum(v, z) == lhs) out.values[x] = std::max(out.values[x], std::min(*best[u], *best[v]));
      }
  return out;
}

}  // namespace ghr
