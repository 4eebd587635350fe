#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ghr/error.hpp"
#include "ghr/limits.hpp"

namespace ghr {

/// Dense index of a carrier element.
using Elem = std::uint32_t;

/// Role-labelled tuple of element labels, e.g. {{"x","1"},{"z","1"}}.
using Witness = std::vector<std::pair<std::string, std::string>>;

inline std::string to_string(const Witness& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].first + "=" + w[i].second;
  }
  return out + ")";
}

struct Violation {
  std::string axiom;
  Witness witness;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool truncated = false;

  bool valid() const { return violations.empty(); }

  bool has(std::string_view axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }

  const Violation* first(std::string_view axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }
};

namespace detail {

/// Collects violations up to a cap; callers stop scanning once full(), so
/// reaching the cap marks the report truncated.
class ViolationSink {
 public:
  explicit ViolationSink(std::size_t cap) : cap_(cap) {}

  void add(std::string axiom, Witness witness) {
    if (report_.violations.size() < cap_) report_.violations.push_back({std::move(axiom), std::move(witness)});
    if (report_.violations.size() >= cap_) report_.truncated = true;
  }
  bool full() const { return report_.violations.size() >= cap_; }
  ValidationReport take() { return std::move(report_); }

 private:
  std::size_t cap_;
  ValidationReport report_;
};

}  // namespace detail

/// Finite additive commutative monoid given by its Cayley table.
struct FiniteMonoid {
  std::vector<std::string> elements;
  Elem zero = 0;
  std::vector<Elem> add;  // row-major, size() * size()

  std::size_t size() const { return elements.size(); }
  Elem sum(Elem a, Elem b) const { return add[static_cast<std::size_t>(a) * size() + b]; }
  const std::string& label(Elem e) const { return elements[e]; }

  std::optional<Elem> find(std::string_view label) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
      if (elements[i] == label) return static_cast<Elem>(i);
    return std::nullopt;
  }

  Elem index_of(std::string_view label) const {
    if (auto e = find(label)) return *e;
    throw StructuralError("unknown element label '" + std::string(label) + "'");
  }

  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;
};

/// Throws StructuralError on shape problems (sizes, index range, labels).
inline void check_monoid_shape(const FiniteMonoid& m, std::string_view what = "monoid") {
  const auto n = m.size();
  if (n == 0) throw StructuralError(std::string(what) + ": empty carrier");
  std::unordered_set<std::string> seen;
  for (const auto& label : m.elements) {
    if (label.empty()) throw StructuralError(std::string(what) + ": empty element label");
    if (!seen.insert(label).second) throw StructuralError(std::string(what) + ": duplicate label '" + label + "'");
  }
  if (m.zero >= n) throw StructuralError(std::string(what) + ": zero index out of range");
  if (m.add.size() != n * n) throw StructuralError(std::string(what) + ": addition table is not |E|x|E|");
  for (auto v : m.add)
    if (v >= n) throw StructuralError(std::string(what) + ": addition table entry out of range");
}

/// Checks zero neutrality, commutativity and associativity exhaustively.
/// Witnesses are the lexicographically first failing tuples of each law.
inline ValidationReport validate_monoid(const FiniteMonoid& m, const Limits& limits = {}) {
  check_monoid_shape(m);
  const auto n = static_cast<Elem>(m.size());
  detail::ViolationSink sink(limits.violations);
  const auto& L = m.elements;

  for (Elem x = 0; x < n && !sink.full(); ++x)
    if (m.sum(m.zero, x) != x || m.sum(x, m.zero) != x) sink.add("zero-neutral", {{"x", L[x]}});

  for (Elem x = 0; x < n && !sink.full(); ++x)
    for (Elem y = x + 1; y < n && !sink.full(); ++y)
      if (m.sum(x, y) != m.sum(y, x)) sink.add("commutativity", {{"x", L[x]}, {"y", L[y]}});

  for (Elem x = 0; x < n && !sink.full(); ++x)
    for (Elem y = 0; y < n && !sink.full(); ++y)
      for (Elem z = 0; z < n && !sink.full(); ++z)
        if (m.sum(m.sum(x, y), z) != m.sum(x, m.sum(y, z)))
          sink.add("associativity", {{"x", L[x]}, {"y", L[y]}, {"z", L[z]}});

  return sink.take();
}

/// Z_n under addition, labels "0".."n-1".
inline FiniteMonoid cyclic_monoid(std::size_t n) {
  FiniteMonoid m;
  for (std::size_t i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
  m.zero = 0;
  m.add.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.add[a * n + b] = static_cast<Elem>((a + b) % n);
  return m;
}

/// {0,1} under max.
inline FiniteMonoid boolean_monoid() {
  FiniteMonoid m;
  m.elements = {"0", "1"};
  m.zero = 0;
  m.add = {0, 1, 1, 1};
  return m;
}

}  // namespace ghr
