#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ghr/error.hpp"
#include "ghr/limits.hpp"
#include "ghr/monoid.hpp"

namespace ghr {

/// Additive commutative monoid with a distributive, zero-annihilating
/// semigroup multiplication. No multiplicative identity is required.
struct Hemiring {
  FiniteMonoid additive;
  std::vector<Elem> mul;  // row-major

  std::size_t size() const { return additive.size(); }
  Elem sum(Elem a, Elem b) const { return additive.sum(a, b); }
  Elem product(Elem a, Elem b) const { return mul[static_cast<std::size_t>(a) * size() + b]; }

  friend bool operator==(const Hemiring&, const Hemiring&) = default;
};

/// Finite Gamma-hemiring: monoids S and Gamma and the ternary action a alpha b.
struct GammaHemiring {
  std::string name;
  FiniteMonoid S;
  FiniteMonoid Gamma;
  std::vector<Elem> action;  // index [a][alpha][b]

  std::size_t size() const { return S.size(); }
  std::size_t gamma_size() const { return Gamma.size(); }
  Elem sum(Elem a, Elem b) const { return S.sum(a, b); }
  Elem act(Elem a, Elem alpha, Elem b) const {
    return action[(static_cast<std::size_t>(a) * Gamma.size() + alpha) * S.size() + b];
  }
  Elem& act_ref(Elem a, Elem alpha, Elem b) {
    return action[(static_cast<std::size_t>(a) * Gamma.size() + alpha) * S.size() + b];
  }

  friend bool operator==(const GammaHemiring&, const GammaHemiring&) = default;
};

/// Thrown when a construction receives tables that break their laws.
class InvalidStructure : public Error {
 public:
  InvalidStructure(const std::string& what, ValidationReport report)
      : Error(what + ": " + describe(report)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  static std::string describe(const ValidationReport& r) {
    if (r.violations.empty()) return "invalid";
    return "axiom " + r.violations.front().axiom + " fails at " + to_string(r.violations.front().witness);
  }
  ValidationReport report_;
};

namespace detail {

inline ValidationReport prefixed(ValidationReport r, const std::string& prefix) {
  for (auto& v : r.violations) v.axiom = prefix + v.axiom;
  return r;
}

}  // namespace detail

inline ValidationReport validate_hemiring(const Hemiring& h, const Limits& limits = {}) {
  auto additive = validate_monoid(h.additive, limits);
  if (!additive.valid()) return additive;
  const auto n = static_cast<Elem>(h.size());
  if (h.mul.size() != static_cast<std::size_t>(n) * n) throw StructuralError("multiplication table is not |E|x|E|");
  for (auto v : h.mul)
    if (v >= n) throw StructuralError("multiplication table entry out of range");

  detail::ViolationSink sink(limits.violations);
  const auto& L = h.additive.elements;
  const Elem z = h.additive.zero;
  for (Elem a = 0; a < n && !sink.full(); ++a)
    if (h.product(z, a) != z || h.product(a, z) != z) sink.add("zero-annihilation", {{"a", L[a]}});
  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem b = 0; b < n && !sink.full(); ++b)
      for (Elem c = 0; c < n && !sink.full(); ++c) {
        if (h.product(h.product(a, b), c) != h.product(a, h.product(b, c)))
          sink.add("mul-associativity", {{"a", L[a]}, {"b", L[b]}, {"c", L[c]}});
        if (h.product(a, h.sum(b, c)) != h.sum(h.product(a, b), h.product(a, c)))
          sink.add("left-distributivity", {{"a", L[a]}, {"b", L[b]}, {"c", L[c]}});
        if (h.product(h.sum(a, b), c) != h.sum(h.product(a, c), h.product(b, c)))
          sink.add("right-distributivity", {{"a", L[a]}, {"b", L[b]}, {"c", L[c]}});
      }
  return sink.take();
}

/// Checks the six Gamma-hemiring axioms exhaustively. Carrier failures
/// short-circuit and are reported with an "S:" or "Gamma:" prefix.
inline ValidationReport validate_gamma_hemiring(const GammaHemiring& g, const Limits& limits = {}) {
  check_monoid_shape(g.S, "S");
  check_monoid_shape(g.Gamma, "Gamma");
  if (auto r = validate_monoid(g.S, limits); !r.valid()) return detail::prefixed(std::move(r), "S:");
  if (auto r = validate_monoid(g.Gamma, limits); !r.valid()) return detail::prefixed(std::move(r), "Gamma:");

  const auto n = static_cast<Elem>(g.size());
  const auto k = static_cast<Elem>(g.gamma_size());
  if (static_cast<std::size_t>(n) * k * n > limits.action_cells)
    throw CapacityError("action table has " + std::to_string(std::size_t{n} * k * n) + " cells, cap is " +
                        std::to_string(limits.action_cells));
  if (g.action.size() != static_cast<std::size_t>(n) * k * n) throw StructuralError("action table is not |S|x|Gamma|x|S|");
  for (auto v : g.action)
    if (v >= n) throw StructuralError("action table entry out of range");

  detail::ViolationSink sink(limits.violations);
  const auto& S = g.S.elements;
  const auto& G = g.Gamma.elements;
  const Elem z = g.S.zero;

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem b = 0; b < n && !sink.full(); ++b)
      for (Elem al = 0; al < k && !sink.full(); ++al)
        for (Elem c = 0; c < n && !sink.full(); ++c)
          if (g.act(g.sum(a, b), al, c) != g.sum(g.act(a, al, c), g.act(b, al, c)))
            sink.add("(1)", {{"a", S[a]}, {"b", S[b]}, {"alpha", G[al]}, {"c", S[c]}});

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem al = 0; al < k && !sink.full(); ++al)
      for (Elem b = 0; b < n && !sink.full(); ++b)
        for (Elem c = 0; c < n && !sink.full(); ++c)
          if (g.act(a, al, g.sum(b, c)) != g.sum(g.act(a, al, b), g.act(a, al, c)))
            sink.add("(2)", {{"a", S[a]}, {"alpha", G[al]}, {"b", S[b]}, {"c", S[c]}});

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem al = 0; al < k && !sink.full(); ++al)
      for (Elem be = 0; be < k && !sink.full(); ++be)
        for (Elem b = 0; b < n && !sink.full(); ++b)
          if (g.act(a, g.Gamma.sum(al, be), b) != g.sum(g.act(a, al, b), g.act(a, be, b)))
            sink.add("(3)", {{"a", S[a]}, {"alpha", G[al]}, {"beta", G[be]}, {"b", S[b]}});

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem al = 0; al < k && !sink.full(); ++al)
      for (Elem b = 0; b < n && !sink.full(); ++b)
        for (Elem be = 0; be < k && !sink.full(); ++be)
          for (Elem c = 0; c < n && !sink.full(); ++c)
            if (g.act(a, al, g.act(b, be, c)) != g.act(g.act(a, al, b), be, c))
              sink.add("(4)", {{"a", S[a]}, {"alpha", G[al]}, {"b", S[b]}, {"beta", G[be]}, {"c", S[c]}});

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem al = 0; al < k && !sink.full(); ++al)
      for (Elem b = 0; b < n && !sink.full(); ++b)
        if ((a == z || b == z) && g.act(a, al, b) != z)
          sink.add("(5)", {{"a", S[a]}, {"alpha", G[al]}, {"b", S[b]}});

  for (Elem a = 0; a < n && !sink.full(); ++a)
    for (Elem b = 0; b < n && !sink.full(); ++b)
      if (g.act(a, g.Gamma.zero, b) != z) sink.add("(6)", {{"a", S[a]}, {"alpha", G[g.Gamma.zero]}, {"b", S[b]}});

  return sink.take();
}

/// A hemiring H viewed as a Gamma-hemiring with Gamma := H and a g b := (a g) b.
inline GammaHemiring from_hemiring(const Hemiring& h, std::string name, const Limits& limits = {}) {
  if (auto r = validate_hemiring(h, limits); !r.valid()) throw InvalidStructure("not a hemiring", std::move(r));
  GammaHemiring g;
  g.name = std::move(name);
  g.S = h.additive;
  g.Gamma = h.additive;
  const auto n = static_cast<Elem>(h.size());
  if (static_cast<std::size_t>(n) * n * n > limits.action_cells)
    throw CapacityError("action table of " + g.name + " exceeds the cell cap");
  g.action.resize(static_cast<std::size_t>(n) * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem c = 0; c < n; ++c)
      for (Elem b = 0; b < n; ++b) g.act_ref(a, c, b) = h.product(h.product(a, c), b);
  return g;
}

/// Binary product over a shared Gamma: componentwise addition and action.
/// Element (x, y) has index x * |S2| + y and label "(x,y)".
inline GammaHemiring product(const GammaHemiring& g1, const GammaHemiring& g2) {
  if (!(g1.Gamma == g2.Gamma)) throw PreconditionError("product requires identical Gamma monoids");
  const auto n1 = static_cast<Elem>(g1.size());
  const auto n2 = static_cast<Elem>(g2.size());
  const auto k = static_cast<Elem>(g1.gamma_size());
  const Elem n = n1 * n2;
  auto idx = [n2](Elem x, Elem y) { return x * n2 + y; };

  GammaHemiring g;
  g.name = g1.name + "x" + g2.name;
  g.Gamma = g1.Gamma;
  g.S.elements.reserve(n);
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y) g.S.elements.push_back("(" + g1.S.label(x) + "," + g2.S.label(y) + ")");
  g.S.zero = idx(g1.S.zero, g2.S.zero);
  g.S.add.resize(static_cast<std::size_t>(n) * n);
  g.action.resize(static_cast<std::size_t>(n) * k * n);
  for (Elem x1 = 0; x1 < n1; ++x1)
    for (Elem x2 = 0; x2 < n2; ++x2)
      for (Elem y1 = 0; y1 < n1; ++y1)
        for (Elem y2 = 0; y2 < n2; ++y2) {
          g.S.add[static_cast<std::size_t>(idx(x1, x2)) * n + idx(y1, y2)] = idx(g1.sum(x1, y1), g2.sum(x2, y2));
          for (Elem al = 0; al < k; ++al)
            g.act_ref(idx(x1, x2), al, idx(y1, y2)) = idx(g1.act(x1, al, y1), g2.act(x2, al, y2));
        }
  return g;
}

/// Componentwise product hemiring; same indexing and labels as product().
inline Hemiring product(const Hemiring& h1, const Hemiring& h2) {
  const auto n1 = static_cast<Elem>(h1.size());
  const auto n2 = static_cast<Elem>(h2.size());
  const Elem n = n1 * n2;
  auto idx = [n2](Elem x, Elem y) { return x * n2 + y; };
  Hemiring h;
  for (Elem x = 0; x < n1; ++x)
    for (Elem y = 0; y < n2; ++y)
      h.additive.elements.push_back("(" + h1.additive.label(x) + "," + h2.additive.label(y) + ")");
  h.additive.zero = idx(h1.additive.zero, h2.additive.zero);
  h.additive.add.resize(static_cast<std::size_t>(n) * n);
  h.mul.resize(static_cast<std::size_t>(n) * n);
  for (Elem x1 = 0; x1 < n1; ++x1)
    for (Elem x2 = 0; x2 < n2; ++x2)
      for (Elem y1 = 0; y1 < n1; ++y1)
        for (Elem y2 = 0; y2 < n2; ++y2) {
          auto at = static_cast<std::size_t>(idx(x1, x2)) * n + idx(y1, y2);
          h.additive.add[at] = idx(h1.sum(x1, y1), h2.sum(x2, y2));
          h.mul[at] = idx(h1.product(x1, y1), h2.product(x2, y2));
        }
  return h;
}

namespace detail {

/// Enumerates rows x cols matrices over a carrier of size q; entry digits
/// are row-major with the first entry most significant.
struct MatrixSpace {
  std::size_t q, rows, cols, count;

  std::vector<Elem> decode(std::size_t index) const {
    std::vector<Elem> entries(rows * cols);
    for (std::size_t i = entries.size(); i-- > 0;) {
      entries[i] = static_cast<Elem>(index % q);
      index /= q;
    }
    return entries;
  }
  std::size_t encode(const std::vector<Elem>& entries) const {
    std::size_t index = 0;
    for (auto e : entries) index = index * q + e;
    return index;
  }
  std::string label(const std::vector<Elem>& entries, const FiniteMonoid& base) const {
    std::string out = "[";
    for (std::size_t r = 0; r < rows; ++r) {
      if (r) out += ";";
      for (std::size_t c = 0; c < cols; ++c) {
        if (c) out += ",";
        out += base.label(entries[r * cols + c]);
      }
    }
    return out + "]";
  }
};

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

}  // namespace detail

/// S = m x n matrices over H, Gamma = n x m matrices, action = triple product.
/// Labels are "[a,b;c,d]" with ';' separating rows.
inline GammaHemiring matrix_gamma_hemiring(const Hemiring& h, std::size_t m, std::size_t n, const Limits& limits = {}) {
  if (m == 0 || n == 0) throw PreconditionError("matrix dimensions must be positive");
  if (auto r = validate_hemiring(h, limits); !r.valid()) throw InvalidStructure("not a hemiring", std::move(r));
  const std::size_t q = h.size();
  const auto count = detail::checked_power(q, m * n, limits.matrix_elements);
  if (count > limits.matrix_elements)
    throw CapacityError("matrix carrier exceeds cap of " + std::to_string(limits.matrix_elements) + " elements");
  if (count * count * count > limits.action_cells) throw CapacityError("matrix action table exceeds the cell cap");

  detail::MatrixSpace Sspace{q, m, n, count};
  detail::MatrixSpace Gspace{q, n, m, count};
  auto make_monoid = [&](const detail::MatrixSpace& space) {
    FiniteMonoid mon;
    std::vector<std::vector<Elem>> decoded(space.count);
    for (std::size_t i = 0; i < space.count; ++i) {
      decoded[i] = space.decode(i);
      mon.elements.push_back(space.label(decoded[i], h.additive));
    }
    mon.zero = static_cast<Elem>(space.encode(std::vector<Elem>(space.rows * space.cols, h.additive.zero)));
    mon.add.resize(space.count * space.count);
    std::vector<Elem> tmp(space.rows * space.cols);
    for (std::size_t a = 0; a < space.count; ++a)
      for (std::size_t b = 0; b < space.count; ++b) {
        for (std::size_t e = 0; e < tmp.size(); ++e) tmp[e] = h.sum(decoded[a][e], decoded[b][e]);
        mon.add[a * space.count + b] = static_cast<Elem>(space.encode(tmp));
      }
    return std::pair{mon, decoded};
  };
  auto [Smon, Sdec] = make_monoid(Sspace);
  auto [Gmon, Gdec] = make_monoid(Gspace);

  // (A G) is m x m, then (A G) B is m x n.
  auto multiply = [&](const std::vector<Elem>& x, std::size_t xr, std::size_t xc, const std::vector<Elem>& y,
                      std::size_t yc) {
    std::vector<Elem> out(xr * yc, h.additive.zero);
    for (std::size_t i = 0; i < xr; ++i)
      for (std::size_t j = 0; j < yc; ++j) {
        Elem acc = h.additive.zero;
        for (std::size_t t = 0; t < xc; ++t) acc = h.sum(acc, h.product(x[i * xc + t], y[t * yc + j]));
        out[i * yc + j] = acc;
      }
    return out;
  };

  GammaHemiring g;
  g.name = "Mat" + std::to_string(m) + "x" + std::to_string(n);
  g.S = std::move(Smon);
  g.Gamma = std::move(Gmon);
  g.action.resize(count * count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t al = 0; al < count; ++al) {
      auto ag = multiply(Sdec[a], m, n, Gdec[al], m);
      for (std::size_t b = 0; b < count; ++b)
        g.act_ref(static_cast<Elem>(a), static_cast<Elem>(al), static_cast<Elem>(b)) =
            static_cast<Elem>(Sspace.encode(multiply(ag, m, m, Sdec[b], n)));
    }
  if (auto r = validate_gamma_hemiring(g, limits); !r.valid())
    throw InvalidStructure("matrix construction produced an invalid structure", std::move(r));
  return g;
}

}  // namespace ghr
