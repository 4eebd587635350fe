#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghr/error.hpp"
#include "ghr/faults.hpp"
#include "ghr/fuzzy.hpp"
#include "ghr/limits.hpp"
#include "ghr/product_structure.hpp"

namespace ghr {

enum class Sidedness { left, right, two_sided };

inline const char* to_string(Sidedness s) {
  switch (s) {
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
    default: return "two-sided";
  }
}

enum class Flavor { ideal, h_ideal };

struct IdealKind {
  Sidedness sidedness = Sidedness::two_sided;
  Flavor flavor = Flavor::ideal;
};

/// Outcome of a checker. `holds` iff no witness; `note` names the failing
/// condition or qualifies a pass (e.g. "relative-to-family").
struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;
  std::string note;

  static CheckResult pass(std::string note = {}) { return {true, std::nullopt, std::move(note)}; }
  static CheckResult fail(Witness w, std::string note) { return {false, std::move(w), std::move(note)}; }
  explicit operator bool() const { return holds; }
};

/// Substructures handled by the closure-based enumerations.
enum class IdealClass { left_h_ideal, right_h_ideal, h_ideal, h_bi_ideal, h_quasi_ideal };

inline const char* to_string(IdealClass c) {
  switch (c) {
    case IdealClass::left_h_ideal: return "left h-ideal";
    case IdealClass::right_h_ideal: return "right h-ideal";
    case IdealClass::h_ideal: return "h-ideal";
    case IdealClass::h_bi_ideal: return "h-bi-ideal";
    default: return "h-quasi-ideal";
  }
}

inline IdealClass h_ideal_class(Sidedness s) {
  switch (s) {
    case Sidedness::left: return IdealClass::left_h_ideal;
    case Sidedness::right: return IdealClass::right_h_ideal;
    default: return IdealClass::h_ideal;
  }
}

using Grid = std::vector<Rational01>;

/// Strictly ascending, containing 0 and 1.
inline void check_grid(const Grid& grid) {
  if (grid.size() < 2 || !grid.front().is_zero() || !grid.back().is_one())
    throw PreconditionError("value grid must start at 0 and end at 1");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i - 1] < grid[i])) throw PreconditionError("value grid must be strictly ascending");
}

/// Complete list of grid-valued fuzzy substructures of one class with
/// mu(0) = 1, over one carrier.
struct FuzzyFamily {
  std::string carrier_id;
  Grid grid;
  IdealClass kind = IdealClass::h_ideal;
  std::vector<FuzzySubset> members;

  std::size_t size() const { return members.size(); }
};

using FuzzyHIdealFamily = FuzzyFamily;

namespace detail {

inline void require_crisp_on(const ProductStructure& p, const CrispSubset& a) {
  if (a.carrier != p.carrier_id || a.size() != p.size())
    throw PreconditionError("carrier mismatch: expected " + p.carrier_id + ", got " + a.carrier);
}

inline void require_nonempty(const FuzzySubset& mu) {
  if (mu.is_empty()) throw PreconditionError("fuzzy subset is identically 0");
}

inline std::string label(const ProductStructure& p, Elem e) { return p.carrier.label(e); }

/// First (x, a, b, z) in lexicographic order with bad(x, a, b) and
/// x + a + z = b + z.
template <class Bad>
std::optional<Witness> h_scan(const ProductStructure& p, Bad bad) {
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  const bool only_zero = active_faults().h_scan_skips_z;
  for (Elem x = 0; x < n; ++x)
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!bad(x, a, b)) continue;
        for (Elem z = 0; z < n; ++z) {
          if (only_zero && z != m.zero) continue;
          if (m.sum(m.sum(x, a), z) == m.sum(b, z))
            return Witness{{"x", label(p, x)}, {"a", label(p, a)}, {"b", label(p, b)}, {"z", label(p, z)}};
        }
      }
  return std::nullopt;
}

/// All products x alpha y beta z, indexed [x * n + z].
inline std::vector<std::vector<bool>> chained_products(const ProductStructure& p) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<std::vector<bool>> out(static_cast<std::size_t>(n) * n, std::vector<bool>(n, false));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (auto q : p.products(x, y))
        for (Elem z = 0; z < n; ++z)
          for (auto r : p.products(q, z)) out[static_cast<std::size_t>(x) * n + z][r] = true;
  return out;
}

inline bool is_left(Sidedness s) { return s != Sidedness::right; }
inline bool is_right(Sidedness s) { return s != Sidedness::left; }

}  // namespace detail

/// Closure under + and under products per sidedness (no h-condition unless
/// kind.flavor is h_ideal).
inline CheckResult is_ideal(const ProductStructure& p, const CrispSubset& a, IdealKind kind) {
  detail::require_crisp_on(p, a);
  if (!a.contains(p.carrier.zero)) throw PreconditionError("ideal check needs 0 in the subset");
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  auto L = [&](Elem e) { return detail::label(p, e); };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (a.contains(x) && a.contains(y) && !a.contains(m.sum(x, y)))
        return CheckResult::fail({{"x", L(x)}, {"y", L(y)}}, "addition");

  for (Elem s = 0; s < n; ++s)
    for (Elem x = 0; x < n; ++x) {
      if (!a.contains(x)) continue;
      if (detail::is_left(kind.sidedness))
        for (auto q : p.products(s, x))
          if (!a.contains(q)) return CheckResult::fail({{"s", L(s)}, {"x", L(x)}, {"product", L(q)}}, "left product");
      if (detail::is_right(kind.sidedness))
        for (auto q : p.products(x, s))
          if (!a.contains(q)) return CheckResult::fail({{"x", L(x)}, {"s", L(s)}, {"product", L(q)}}, "right product");
    }

  if (kind.flavor == Flavor::h_ideal) {
    auto w = detail::h_scan(p, [&](Elem x, Elem u, Elem v) { return a.contains(u) && a.contains(v) && !a.contains(x); });
    if (w) return CheckResult::fail(std::move(*w), "h-condition");
  }
  return CheckResult::pass();
}

inline CheckResult is_h_ideal(const ProductStructure& p, const CrispSubset& a,
                              Sidedness sidedness = Sidedness::two_sided) {
  return is_ideal(p, a, {sidedness, Flavor::h_ideal});
}

namespace detail {

/// Least superset of `seed` closed under the rules of `cls`; the empty set
/// is its own closure.
inline std::vector<bool> close(const ProductStructure& p, IdealClass cls, std::vector<bool> in,
                               const std::vector<std::vector<bool>>* chained = nullptr) {
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  if (std::none_of(in.begin(), in.end(), [](bool b) { return b; })) return in;
  std::vector<std::vector<bool>> local;
  if (cls == IdealClass::h_bi_ideal && !chained) {
    local = chained_products(p);
    chained = &local;
  }

  for (bool changed = true; changed;) {
    changed = false;
    auto add = [&](Elem e) {
      if (!in[e]) {
        in[e] = true;
        changed = true;
      }
    };
    in = additive_closure(m, in);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        switch (cls) {
          case IdealClass::left_h_ideal:
            if (in[y]) for (auto q : p.products(x, y)) add(q);
            break;
          case IdealClass::right_h_ideal:
            if (in[x]) for (auto q : p.products(x, y)) add(q);
            break;
          case IdealClass::h_ideal:
            if (in[x] || in[y]) for (auto q : p.products(x, y)) add(q);
            break;
          case IdealClass::h_bi_ideal:
            if (in[x] && in[y]) {
              for (auto q : p.products(x, y)) add(q);
              const auto& row = (*chained)[static_cast<std::size_t>(x) * n + y];
              for (Elem r = 0; r < n; ++r)
                if (row[r]) add(r);
            }
            break;
          case IdealClass::h_quasi_ideal:
            break;
        }
      }
    }
    if (cls == IdealClass::h_quasi_ideal) {
      std::vector<bool> is(n, false), si(n, false);
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
          if (in[x]) for (auto q : p.products(x, y)) is[q] = true;
          if (in[y]) for (auto q : p.products(x, y)) si[q] = true;
        }
      auto left = h_reachable(m, additive_closure(m, is));
      auto right = h_reachable(m, additive_closure(m, si));
      for (Elem x = 0; x < n; ++x)
        if (left[x] && right[x]) add(x);
    }
    auto reach = h_reachable(m, in);
    for (Elem x = 0; x < n; ++x)
      if (reach[x]) add(x);
  }
  return in;
}

/// All nonempty closed sets of `cls`, found by closing {0} and then
/// repeatedly adjoining one element to a known closed set.
inline std::vector<CrispSubset> enumerate_closed(const ProductStructure& p, IdealClass cls, const Limits& limits) {
  const auto n = static_cast<Elem>(p.size());
  if (p.size() > limits.ideal_carrier)
    throw CapacityError(std::string(to_string(cls)) + " enumeration on " + p.carrier_id + ": carrier of size " +
                        std::to_string(p.size()) + " exceeds " + std::to_string(limits.ideal_carrier));
  std::vector<std::vector<bool>> chained;
  if (cls == IdealClass::h_bi_ideal) chained = chained_products(p);

  std::vector<bool> seed(n, false);
  seed[p.carrier.zero] = true;
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> order;
  auto visit = [&](std::vector<bool> s) {
    if (seen.insert(s).second) {
      if (seen.size() > limits.ideal_count)
        throw CapacityError(std::string(to_string(cls)) + " enumeration on " + p.carrier_id + " exceeds " +
                            std::to_string(limits.ideal_count) + " sets");
      order.push_back(std::move(s));
    }
  };
  visit(close(p, cls, seed, &chained));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Elem x = 0; x < n; ++x) {
      if (order[i][x]) continue;
      auto next = order[i];
      next[x] = true;
      visit(close(p, cls, std::move(next), &chained));
    }

  std::vector<CrispSubset> out;
  for (auto& s : order) out.push_back({p.carrier_id, std::move(s)});
  std::sort(out.begin(), out.end(), crisp_order);
  return out;
}

}  // namespace detail

/// Least two-sided h-ideal containing A (sidedness selects one-sided ideals).
inline CrispSubset h_closure(const ProductStructure& p, const CrispSubset& a,
                             Sidedness sidedness = Sidedness::two_sided) {
  detail::require_crisp_on(p, a);
  return {p.carrier_id, detail::close(p, h_ideal_class(sidedness), a.members)};
}

/// Every h-ideal of the given sidedness, sorted by size then elements.
inline std::vector<CrispSubset> enumerate_h_ideals(const ProductStructure& p,
                                                   Sidedness sidedness = Sidedness::two_sided,
                                                   const Limits& limits = {}) {
  auto out = detail::enumerate_closed(p, h_ideal_class(sidedness), limits);
  for (const auto& a : out)
    if (!is_h_ideal(p, a, sidedness))
      throw Error("h-closure produced a set that is not an h-ideal on " + p.carrier_id);
  return out;
}

inline CheckResult is_fuzzy_h_ideal(const ProductStructure& p, const FuzzySubset& mu,
                                    Sidedness sidedness = Sidedness::two_sided, bool require_top = false) {
  detail::require_on(p, mu);
  detail::require_nonempty(mu);
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  auto L = [&](Elem e) { return detail::label(p, e); };

  if (require_top && !mu[m.zero].is_one()) return CheckResult::fail({{"x", L(m.zero)}}, "value at zero");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (mu[m.sum(x, y)] < std::min(mu[x], mu[y])) return CheckResult::fail({{"x", L(x)}, {"y", L(y)}}, "addition");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (auto q : p.products(x, y)) {
        if (detail::is_left(sidedness) && mu[q] < mu[y])
          return CheckResult::fail({{"x", L(x)}, {"y", L(y)}, {"product", L(q)}}, "left product");
        if (detail::is_right(sidedness) && mu[q] < mu[x])
          return CheckResult::fail({{"x", L(x)}, {"y", L(y)}, {"product", L(q)}}, "right product");
      }

  auto w = detail::h_scan(p, [&](Elem x, Elem a, Elem b) { return mu[x] < std::min(mu[a], mu[b]); });
  if (w) return CheckResult::fail(std::move(*w), "h-condition");
  return CheckResult::pass();
}

inline CheckResult is_fuzzy_h_bi_ideal(const ProductStructure& p, const FuzzySubset& mu) {
  detail::require_on(p, mu);
  detail::require_nonempty(mu);
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  auto L = [&](Elem e) { return detail::label(p, e); };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (mu[m.sum(x, y)] < std::min(mu[x], mu[y])) return CheckResult::fail({{"x", L(x)}, {"y", L(y)}}, "addition");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (auto q : p.products(x, y))
        if (mu[q] < std::min(mu[x], mu[y]))
          return CheckResult::fail({{"x", L(x)}, {"y", L(y)}, {"product", L(q)}}, "product");

  auto chained = detail::chained_products(p);
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      const auto& row = chained[static_cast<std::size_t>(x) * n + z];
      for (Elem r = 0; r < n; ++r)
        if (row[r] && mu[r] < std::min(mu[x], mu[z]))
          return CheckResult::fail({{"x", L(x)}, {"z", L(z)}, {"product", L(r)}}, "chained product");
    }

  auto w = detail::h_scan(p, [&](Elem x, Elem a, Elem b) { return mu[x] < std::min(mu[a], mu[b]); });
  if (w) return CheckResult::fail(std::move(*w), "h-condition");
  return CheckResult::pass();
}

inline CheckResult is_fuzzy_h_quasi_ideal(const ProductStructure& p, const FuzzySubset& mu) {
  detail::require_on(p, mu);
  detail::require_nonempty(mu);
  const auto n = static_cast<Elem>(p.size());
  const auto& m = p.carrier;
  auto L = [&](Elem e) { return detail::label(p, e); };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (mu[m.sum(x, y)] < std::min(mu[x], mu[y])) return CheckResult::fail({{"x", L(x)}, {"y", L(y)}}, "addition");

  // The h-condition is scanned before the product condition so that both
  // checkers report the same witness when the h-condition is what breaks.
  auto w = detail::h_scan(p, [&](Elem x, Elem a, Elem b) { return mu[x] < std::min(mu[a], mu[b]); });
  if (w) return CheckResult::fail(std::move(*w), "h-condition");

  auto all = constant(p.carrier_id, n, Rational01::one());
  auto meet = intersect(generalized_h_product(p, mu, all), generalized_h_product(p, all, mu));
  for (Elem x = 0; x < n; ++x)
    if (meet[x] > mu[x]) return CheckResult::fail({{"x", L(x)}, {"product-value", meet[x].str()}}, "quasi-condition");
  return CheckResult::pass();
}

/// Dispatches to the fuzzy checker of `cls` (mu(0) = 1 is not required).
inline CheckResult check_fuzzy(const ProductStructure& p, const FuzzySubset& mu, IdealClass cls) {
  switch (cls) {
    case IdealClass::left_h_ideal: return is_fuzzy_h_ideal(p, mu, Sidedness::left);
    case IdealClass::right_h_ideal: return is_fuzzy_h_ideal(p, mu, Sidedness::right);
    case IdealClass::h_ideal: return is_fuzzy_h_ideal(p, mu, Sidedness::two_sided);
    case IdealClass::h_bi_ideal: return is_fuzzy_h_bi_ideal(p, mu);
    default: return is_fuzzy_h_quasi_ideal(p, mu);
  }
}

/// Every closed set of `cls` (left/right/two-sided h-ideals, h-bi-ideals,
/// h-quasi-ideals), sorted by size then elements.
inline std::vector<CrispSubset> enumerate_closed_sets(const ProductStructure& p, IdealClass cls,
                                                      const Limits& limits = {}) {
  return detail::enumerate_closed(p, cls, limits);
}

/// All grid-valued fuzzy substructures of class `cls` with mu(0) = 1. A fuzzy
/// subset belongs to the class iff each of its level sets does, so members
/// correspond to descending chains I_1 >= ... >= I_k of closed sets, one per
/// nonzero grid value. Each member is re-checked with the fuzzy checker.
inline FuzzyFamily enumerate_fuzzy_family(const ProductStructure& p, const Grid& grid, IdealClass cls,
                                          const Limits& limits = {}) {
  check_grid(grid);
  auto closed = detail::enumerate_closed(p, cls, limits);
  const std::size_t levels = grid.size() - 1;  // grid[1..]
  const auto n = static_cast<Elem>(p.size());

  // below[i]: closed sets contained in closed[i].
  std::vector<std::vector<std::size_t>> below(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    for (std::size_t j = 0; j < closed.size(); ++j)
      if (closed[j].is_subset_of(closed[i])) below[i].push_back(j);

  FuzzyFamily family{p.carrier_id, grid, cls, {}};
  std::vector<std::size_t> chain(levels);
  auto emit = [&] {
    if (family.members.size() >= limits.family_members)
      throw CapacityError(std::string("fuzzy ") + to_string(cls) + " family on " + p.carrier_id + " exceeds " +
                          std::to_string(limits.family_members) + " members");
    FuzzySubset mu = constant(p.carrier_id, n, Rational01::zero());
    for (std::size_t level = 0; level < levels; ++level)
      for (Elem x = 0; x < n; ++x)
        if (closed[chain[level]].contains(x)) mu[x] = grid[level + 1];
    family.members.push_back(std::move(mu));
  };
  auto extend = [&](auto& self, std::size_t level) -> void {
    if (level == levels) {
      emit();
      return;
    }
    if (level == 0) {
      for (std::size_t i = 0; i < closed.size(); ++i) {
        chain[0] = i;
        self(self, 1);
      }
      return;
    }
    for (auto j : below[chain[level - 1]]) {
      chain[level] = j;
      self(self, level + 1);
    }
  };
  extend(extend, 0);

  std::sort(family.members.begin(), family.members.end(),
            [](const FuzzySubset& a, const FuzzySubset& b) { return a.values < b.values; });
  for (const auto& mu : family.members)
    if (auto r = check_fuzzy(p, mu, cls); !r)
      throw Error(std::string("level-set enumeration produced a non-member of the fuzzy ") + to_string(cls) +
                  " family on " + p.carrier_id);
  return family;
}

inline FuzzyHIdealFamily enumerate_fuzzy_h_ideals(const ProductStructure& p, const Grid& grid,
                                                  Sidedness sidedness = Sidedness::two_sided,
                                                  const Limits& limits = {}) {
  return enumerate_fuzzy_family(p, grid, h_ideal_class(sidedness), limits);
}

/// Filters all |V|^(n-1) assignments with mu(0) = 1 through the fuzzy
/// checker. Exponential; kept as a cross-check for the level-set route.
inline FuzzyFamily filter_fuzzy_family(const ProductStructure& p, const Grid& grid, IdealClass cls,
                                       const Limits& limits = {}) {
  check_grid(grid);
  const auto n = static_cast<Elem>(p.size());
  std::size_t candidates = 1;
  for (Elem i = 1; i < n; ++i) {
    if (candidates > limits.fuzzy_candidates / grid.size())
      throw CapacityError("candidate filter on " + p.carrier_id + " exceeds " +
                          std::to_string(limits.fuzzy_candidates) + " candidates");
    candidates *= grid.size();
  }
  FuzzyFamily family{p.carrier_id, grid, cls, {}};
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t c = 0; c < candidates; ++c) {
    FuzzySubset mu = constant(p.carrier_id, n, Rational01::zero());
    std::size_t rest = c;
    for (Elem x = 0; x < n; ++x) {
      if (x == p.carrier.zero) {
        mu[x] = Rational01::one();
        continue;
      }
      mu[x] = grid[rest % grid.size()];
      rest /= grid.size();
    }
    if (check_fuzzy(p, mu, cls)) family.members.push_back(std::move(mu));
  }
  std::sort(family.members.begin(), family.members.end(),
            [](const FuzzySubset& a, const FuzzySubset& b) { return a.values < b.values; });
  return family;
}

/// Memoized simple h-products of family members, keyed by member indices.
class FamilyProducts {
 public:
  FamilyProducts(const ProductStructure& p, const FuzzyFamily& family) : p_(p), family_(family) {}

  const FuzzySubset& at(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, simple_h_product(p_, family_.members[i], family_.members[j])).first;
    return it->second;
  }

 private:
  const ProductStructure& p_;
  const FuzzyFamily& family_;
  std::map<std::pair<std::size_t, std::size_t>, FuzzySubset> cache_;
};

namespace detail {

inline CheckResult prime_check(const ProductStructure& p, const FuzzySubset& zeta, const FuzzyFamily& family,
                               FamilyProducts* products, bool semiprime) {
  detail::require_on(p, zeta);
  if (family.carrier_id != p.carrier_id) throw PreconditionError("family lives on another carrier");
  auto sidedness = family.kind == IdealClass::left_h_ideal    ? Sidedness::left
                   : family.kind == IdealClass::right_h_ideal ? Sidedness::right
                                                              : Sidedness::two_sided;
  if (!is_fuzzy_h_ideal(p, zeta, sidedness)) throw PreconditionError("prime checks need a fuzzy h-ideal");
  if (zeta.is_constant()) return CheckResult::fail({{"constant-value", zeta[0].str()}}, "constant function");

  std::optional<FamilyProducts> local;
  if (!products) products = &local.emplace(p, family);
  const auto& labels = p.carrier.elements;
  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!is_subset(family.members[i], zeta)) outside.push_back(i);

  for (auto i : outside)
    for (auto j : outside) {
      if (semiprime && i != j) continue;
      if (is_subset(products->at(i, j), zeta)) {
        Witness w{{"theta", to_string(family.members[i], labels)}};
        if (!semiprime) w.emplace_back("eta", to_string(family.members[j], labels));
        return CheckResult::fail(std::move(w), "product inside zeta, factors outside");
      }
    }
  return CheckResult::pass("relative-to-family");
}

}  // namespace detail

inline CheckResult is_prime_fuzzy_h_ideal(const ProductStructure& p, const FuzzySubset& zeta,
                                          const FuzzyFamily& family, FamilyProducts* products = nullptr) {
  return detail::prime_check(p, zeta, family, products, false);
}

inline CheckResult is_semiprime_fuzzy_h_ideal(const ProductStructure& p, const FuzzySubset& zeta,
                                              const FuzzyFamily& family, FamilyProducts* products = nullptr) {
  return detail::prime_check(p, zeta, family, products, true);
}

}  // namespace ghr
