#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ghr/error.hpp"
#include "ghr/faults.hpp"
#include "ghr/gamma_hemiring.hpp"
#include "ghr/limits.hpp"

namespace ghr {

enum class Side { left, right };

inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

/// Representative of a rho-class: sum of [x, alpha] (left) or [alpha, x]
/// (right). Terms are stored as (S-index, Gamma-index) on both sides.
struct FormalSum {
  Side side = Side::left;
  std::vector<std::pair<Elem, Elem>> terms;

  friend bool operator==(const FormalSum&, const FormalSum&) = default;
};

inline std::string to_string(const GammaHemiring& g, const FormalSum& f) {
  std::string out;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    if (i) out += " + ";
    const auto& [x, al] = f.terms[i];
    if (f.side == Side::left)
      out += "[" + g.S.label(x) + "," + g.Gamma.label(al) + "]";
    else
      out += "[" + g.Gamma.label(al) + "," + g.S.label(x) + "]";
  }
  return out;
}

/// The total function a -> sum x_i alpha_i a (left) or a -> sum a alpha_i x_i
/// (right) induced by a rho-class.
struct ActionMap {
  std::vector<Elem> table;

  Elem operator()(Elem a) const { return table[a]; }
  friend bool operator==(const ActionMap&, const ActionMap&) = default;
};

namespace detail {

struct TableHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

inline void check_formal_sum(const GammaHemiring& g, const FormalSum& f) {
  if (f.terms.empty()) throw PreconditionError("formal sums must have at least one term");
  for (const auto& [x, al] : f.terms)
    if (x >= g.size() || al >= g.gamma_size()) throw PreconditionError("formal sum term out of range");
}

}  // namespace detail

inline ActionMap realize(const GammaHemiring& g, const FormalSum& f) {
  detail::check_formal_sum(g, f);
  const auto n = static_cast<Elem>(g.size());
  ActionMap m{std::vector<Elem>(n, g.S.zero)};
  for (Elem a = 0; a < n; ++a) {
    Elem acc = g.S.zero;
    for (const auto& [x, al] : f.terms) acc = g.sum(acc, f.side == Side::left ? g.act(x, al, a) : g.act(a, al, x));
    m.table[a] = acc;
  }
  return m;
}

/// The defining condition of rho: both sums act identically on every a in S.
inline bool rho_equivalent(const GammaHemiring& g, const FormalSum& f1, const FormalSum& f2) {
  if (f1.side != f2.side) throw PreconditionError("rho compares formal sums of the same side only");
  return realize(g, f1) == realize(g, f2);
}

/// Formal sum realizing the product of two classes: for the left side
/// [x_i, a_i][y_j, b_j] = [x_i a_i y_j, b_j]; for the right side
/// [a_i, x_i][b_j, y_j] = [a_i, x_i b_j y_j].
inline FormalSum formal_product(const GammaHemiring& g, const FormalSum& f1, const FormalSum& f2) {
  if (f1.side != f2.side) throw PreconditionError("formal product of sums from different sides");
  FormalSum out{f1.side, {}};
  for (const auto& [x, al] : f1.terms)
    for (const auto& [y, be] : f2.terms) {
      if (f1.side == Side::left)
        out.terms.emplace_back(g.act(x, al, y), be);
      else
        out.terms.emplace_back(g.act(x, be, y), al);
    }
  return out;
}

inline FormalSum formal_sum(const FormalSum& f1, const FormalSum& f2) {
  if (f1.side != f2.side) throw PreconditionError("formal sum of sums from different sides");
  FormalSum out = f1;
  out.terms.insert(out.terms.end(), f2.terms.begin(), f2.terms.end());
  return out;
}

/// Left or right operator hemiring realized as a closure of action maps.
struct OperatorHemiring {
  Side side = Side::left;
  std::vector<ActionMap> maps;
  std::vector<Elem> add;  // row-major
  std::vector<Elem> mul;  // row-major; left: (f g)(a) = f(g(a)); right: (f g)(a) = g(f(a))
  Elem zero = 0;
  std::vector<FormalSum> provenance;
  std::vector<Elem> embedding;  // [x * |Gamma| + alpha] -> index of [x,alpha] / [alpha,x]

  std::size_t size() const { return maps.size(); }
  Elem sum(Elem i, Elem j) const { return add[static_cast<std::size_t>(i) * size() + j]; }
  Elem product(Elem i, Elem j) const { return mul[static_cast<std::size_t>(i) * size() + j]; }
  static std::string label(Elem i) { return "op" + std::to_string(i); }

  std::optional<Elem> find(const ActionMap& m) const {
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i] == m) return static_cast<Elem>(i);
    return std::nullopt;
  }

  /// The hemiring (L or R, +, .) with labels op0, op1, ...
  Hemiring as_hemiring() const {
    Hemiring h;
    for (std::size_t i = 0; i < size(); ++i) h.additive.elements.push_back(label(static_cast<Elem>(i)));
    h.additive.zero = zero;
    h.additive.add = add;
    h.mul = mul;
    return h;
  }
};

/// Closure of the single-term classes under pointwise addition and
/// composition, breadth first; maps are numbered in discovery order.
inline OperatorHemiring build_operator(const GammaHemiring& g, Side side, const Limits& limits = {}) {
  const auto n = static_cast<Elem>(g.size());
  const auto k = static_cast<Elem>(g.gamma_size());
  const bool flipped = side == Side::left && detail::active_faults().flip_left_composition;

  OperatorHemiring op;
  op.side = side;
  std::unordered_map<std::vector<Elem>, Elem, detail::TableHash> index;

  // origin() builds the provenance lazily, only for newly found maps.
  auto intern = [&](std::vector<Elem> table, auto&& origin) -> Elem {
    auto [it, inserted] = index.try_emplace(table, static_cast<Elem>(op.maps.size()));
    if (inserted) {
      if (op.maps.size() >= limits.operator_maps)
        throw CapacityError(std::string(to_string(side)) + " operator closure exceeds " +
                            std::to_string(limits.operator_maps) + " maps");
      op.provenance.push_back(origin());
      op.maps.push_back({std::move(table)});
    }
    return it->second;
  };
  auto compose = [&](const ActionMap& f, const ActionMap& h) {
    std::vector<Elem> t(n);
    bool f_first = (side == Side::right) != flipped;
    for (Elem a = 0; a < n; ++a) t[a] = f_first ? h(f(a)) : f(h(a));
    return t;
  };

  op.embedding.resize(static_cast<std::size_t>(n) * k);
  for (Elem x = 0; x < n; ++x)
    for (Elem al = 0; al < k; ++al) {
      FormalSum single{side, {{x, al}}};
      op.embedding[static_cast<std::size_t>(x) * k + al] = intern(realize(g, single).table, [&] { return single; });
    }

  for (std::size_t cur = 0; cur < op.maps.size(); ++cur) {
    for (std::size_t j = 0; j <= cur; ++j) {
      std::vector<Elem> s(n);
      for (Elem a = 0; a < n; ++a) s[a] = g.sum(op.maps[cur](a), op.maps[j](a));
      intern(std::move(s), [&] { return formal_sum(op.provenance[cur], op.provenance[j]); });
      auto fg = compose(op.maps[cur], op.maps[j]);
      auto gf = compose(op.maps[j], op.maps[cur]);
      intern(std::move(fg), [&] { return formal_product(g, op.provenance[cur], op.provenance[j]); });
      intern(std::move(gf), [&] { return formal_product(g, op.provenance[j], op.provenance[cur]); });
    }
  }

  const auto m = op.size();
  op.add.resize(m * m);
  op.mul.resize(m * m);
  std::vector<Elem> zero_table(n, g.S.zero);
  op.zero = index.at(zero_table);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Elem> s(n);
      for (Elem a = 0; a < n; ++a) s[a] = g.sum(op.maps[i](a), op.maps[j](a));
      op.add[i * m + j] = index.at(s);
      op.mul[i * m + j] = index.at(compose(op.maps[i], op.maps[j]));
    }

  if (auto r = validate_hemiring(op.as_hemiring(), limits); !r.valid())
    throw InvalidStructure(std::string(to_string(side)) + " operator hemiring breaks hemiring laws", std::move(r));
  return op;
}

/// Index of [x, alpha] in L (left) or [alpha, x] in R (right).
inline Elem embed(const GammaHemiring& g, const OperatorHemiring& op, Elem x, Elem alpha) {
  if (x >= g.size() || alpha >= g.gamma_size()) throw PreconditionError("embed: index out of range");
  return op.embedding[static_cast<std::size_t>(x) * g.gamma_size() + alpha];
}

struct Unity {
  Side kind = Side::left;
  bool strong = false;
  FormalSum witness;
};

/// Present iff the identity map of S lies in the operator hemiring. A strong
/// unity is reported with its single-term witness.
inline std::optional<Unity> find_unity(const GammaHemiring& g, const OperatorHemiring& op) {
  const auto n = static_cast<Elem>(g.size());
  ActionMap id{std::vector<Elem>(n)};
  for (Elem a = 0; a < n; ++a) id.table[a] = a;
  auto where = op.find(id);
  if (!where) return std::nullopt;
  for (Elem x = 0; x < n; ++x)
    for (Elem al = 0; al < g.gamma_size(); ++al)
      if (embed(g, op, x, al) == *where) return Unity{op.side, true, FormalSum{op.side, {{x, al}}}};
  return Unity{op.side, false, op.provenance[*where]};
}

}  // namespace ghr
