#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghr/correspondence.hpp"
#include "ghr/error.hpp"
#include "ghr/fuzzy.hpp"
#include "ghr/ideals.hpp"
#include "ghr/limits.hpp"

namespace ghr {

enum class Status { pass, fail, assumption_unmet };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "assumption-unmet";
  }
}

struct PropertyResult {
  std::string id;
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string note;  // missing hypothesis, failing clause, or qualifier
  std::int64_t ms = 0;
};

struct SuiteReport {
  std::string structure;
  Grid grid;
  std::vector<PropertyResult> results;

  bool overall() const {
    for (const auto& r : results)
      if (r.status == Status::fail) return false;
    return true;
  }
  const PropertyResult* find(std::string_view id) const {
    for (const auto& r : results)
      if (r.id == id) return &r;
    return nullptr;
  }
};

enum class Suite { all, section2, section3, section4 };

inline Suite parse_suite(std::string_view s) {
  if (s == "all") return Suite::all;
  if (s == "section2") return Suite::section2;
  if (s == "section3") return Suite::section3;
  if (s == "section4") return Suite::section4;
  throw StructuralError("unknown suite '" + std::string(s) + "'");
}

/// Lazily enumerated families and crisp ideal lattices for one context.
class Workbench {
 public:
  Workbench(const CorrespondenceContext& ctx, Grid grid, Limits limits = {})
      : ctx_(ctx), grid_(std::move(grid)), limits_(limits) {
    check_grid(grid_);
  }

  const CorrespondenceContext& ctx() const { return ctx_; }
  const Grid& grid() const { return grid_; }
  const Limits& limits() const { return limits_; }
  const ProductStructure& view(std::string_view carrier) const { return ctx_.view(carrier); }

  const FuzzyFamily& family(std::string_view carrier, IdealClass cls = IdealClass::h_ideal) {
    auto key = std::make_pair(std::string(carrier), static_cast<int>(cls));
    auto it = families_.find(key);
    if (it == families_.end())
      it = families_.emplace(key, std::make_unique<FuzzyFamily>(enumerate_fuzzy_family(view(carrier), grid_, cls, limits_)))
               .first;
    return *it->second;
  }

  const std::vector<CrispSubset>& h_ideals(std::string_view carrier, Sidedness s = Sidedness::two_sided) {
    auto key = std::make_pair(std::string(carrier), static_cast<int>(s));
    auto it = crisp_.find(key);
    if (it == crisp_.end()) it = crisp_.emplace(key, enumerate_h_ideals(view(carrier), s, limits_)).first;
    return it->second;
  }

  /// Simple h-products within the two-sided fuzzy h-ideal family.
  FamilyProducts& products(std::string_view carrier) {
    std::string key(carrier);
    auto it = products_.find(key);
    if (it == products_.end())
      it = products_.emplace(key, std::make_unique<FamilyProducts>(view(carrier), family(carrier))).first;
    return *it->second;
  }

  /// Members of the two-sided family that are prime (semiprime) relative to it.
  const std::vector<std::size_t>& primes(std::string_view carrier, bool semiprime) {
    auto key = std::make_pair(std::string(carrier), semiprime);
    auto it = primes_.find(key);
    if (it == primes_.end()) {
      std::vector<std::size_t> out;
      const auto& fam = family(carrier);
      auto& prods = products(carrier);
      for (std::size_t i = 0; i < fam.size(); ++i) {
        auto r = semiprime ? is_semiprime_fuzzy_h_ideal(view(carrier), fam.members[i], fam, &prods)
                           : is_prime_fuzzy_h_ideal(view(carrier), fam.members[i], fam, &prods);
        if (r) out.push_back(i);
      }
      it = primes_.emplace(key, std::move(out)).first;
    }
    return it->second;
  }

  std::string show(const FuzzySubset& mu) const { return to_string(mu, view(mu.carrier).carrier.elements); }
  std::string show(const CrispSubset& a) const {
    std::string out = "{";
    bool first = true;
    for (auto e : a.elements()) {
      if (!first) out += ",";
      out += view(a.carrier).carrier.label(e);
      first = false;
    }
    return out + "}";
  }

 private:
  const CorrespondenceContext& ctx_;
  Grid grid_;
  Limits limits_;
  std::map<std::pair<std::string, int>, std::unique_ptr<FuzzyFamily>> families_;
  std::map<std::pair<std::string, int>, std::vector<CrispSubset>> crisp_;
  std::map<std::string, std::unique_ptr<FamilyProducts>> products_;
  std::map<std::pair<std::string, bool>, std::vector<std::size_t>> primes_;
};

namespace detail {

struct Outcome {
  Status status = Status::pass;
  std::optional<Witness> witness;
  std::string note;
};

inline Outcome ok(std::string note = {}) { return {Status::pass, std::nullopt, std::move(note)}; }
inline Outcome bad(Witness w, std::string note) { return {Status::fail, std::move(w), std::move(note)}; }
inline Outcome unmet(std::string hypothesis) { return {Status::assumption_unmet, std::nullopt, std::move(hypothesis)}; }

inline std::optional<Outcome> need_unities(const Workbench& wb) {
  if (!wb.ctx().left_unity) return unmet("left unity");
  if (!wb.ctx().right_unity) return unmet("right unity");
  return std::nullopt;
}

inline Outcome from_check(const CheckResult& r, std::string context) {
  Witness w = r.witness.value_or(Witness{});
  w.insert(w.begin(), {"case", std::move(context)});
  return bad(std::move(w), r.note);
}

inline const char* op_carrier(Side s) { return s == Side::left ? "L" : "R"; }

inline FuzzySubset pull(const CorrespondenceContext& ctx, Side s, const FuzzySubset& mu) {
  return s == Side::left ? plus(ctx, mu) : star(ctx, mu);
}
inline FuzzySubset push(const CorrespondenceContext& ctx, Side s, const FuzzySubset& mu) {
  return s == Side::left ? plus_prime(ctx, mu) : star_prime(ctx, mu);
}
inline CrispSubset crisp_pull(const CorrespondenceContext& ctx, Side s, const CrispSubset& a) {
  return s == Side::left ? crisp_plus(ctx, a) : crisp_star(ctx, a);
}
inline CrispSubset crisp_push(const CorrespondenceContext& ctx, Side s, const CrispSubset& a) {
  return s == Side::left ? crisp_plus_prime(ctx, a) : crisp_star_prime(ctx, a);
}
inline const char* push_name(Side s) { return s == Side::left ? "+'" : "*'"; }
inline const char* pull_name(Side s) { return s == Side::left ? "+" : "*"; }

inline Outcome mismatch(const Workbench& wb, std::string what, const FuzzySubset& got, const FuzzySubset& want) {
  return bad({{"case", std::move(what)}, {"got", wb.show(got)}, {"expected", wb.show(want)}}, "values differ");
}

inline constexpr std::array<Sidedness, 3> kSides{Sidedness::two_sided, Sidedness::left, Sidedness::right};

// ---- section 2: executable sanity of the definitions ----

inline Outcome s2_axioms(Workbench& wb) {
  auto r = validate_gamma_hemiring(wb.ctx().G, wb.limits());
  if (!r.valid()) return bad(r.violations.front().witness, "axiom " + r.violations.front().axiom);
  return ok();
}

inline Outcome s2_operator_laws(Workbench& wb) {
  for (auto side : {Side::left, Side::right}) {
    auto r = validate_hemiring(wb.ctx().op(side).as_hemiring(), wb.limits());
    if (!r.valid()) {
      auto w = r.violations.front().witness;
      w.insert(w.begin(), {"side", to_string(side)});
      return bad(std::move(w), r.violations.front().axiom);
    }
  }
  return ok();
}

/// Tables of L and R agree with the formal sum and product of provenances.
inline Outcome s2_operator_tables(Workbench& wb) {
  const auto& g = wb.ctx().G;
  for (auto side : {Side::left, Side::right}) {
    const auto& op = wb.ctx().op(side);
    for (std::size_t i = 0; i < op.size(); ++i)
      if (!(realize(g, op.provenance[i]) == op.maps[i]))
        return bad({{"side", to_string(side)}, {"map", OperatorHemiring::label(static_cast<Elem>(i))}},
                   "provenance does not realize the map");
    for (std::size_t i = 0; i < op.size(); ++i)
      for (std::size_t j = 0; j < op.size(); ++j) {
        auto a = static_cast<Elem>(i), b = static_cast<Elem>(j);
        Witness w{{"side", to_string(side)}, {"f", OperatorHemiring::label(a)}, {"g", OperatorHemiring::label(b)}};
        if (!(realize(g, formal_sum(op.provenance[i], op.provenance[j])) == op.maps[op.sum(a, b)]))
          return bad(std::move(w), "sum table");
        if (!(realize(g, formal_product(g, op.provenance[i], op.provenance[j])) == op.maps[op.product(a, b)]))
          return bad(std::move(w), "product table");
      }
  }
  return ok();
}

/// Subsets containing 0 to test crisp bridges on: all of them on small
/// carriers, closures of singletons otherwise.
inline std::vector<CrispSubset> probe_subsets(const ProductStructure& p) {
  const auto n = static_cast<Elem>(p.size());
  std::vector<CrispSubset> out;
  if (n <= 10) {
    std::vector<Elem> others;
    for (Elem e = 0; e < n; ++e)
      if (e != p.carrier.zero) others.push_back(e);
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
      CrispSubset a{p.carrier_id, std::vector<bool>(n, false)};
      a.members[p.carrier.zero] = true;
      for (std::size_t b = 0; b < others.size(); ++b)
        if (mask >> b & 1) a.members[others[b]] = true;
      out.push_back(std::move(a));
    }
    return out;
  }
  for (Elem e = 0; e < n; ++e) {
    CrispSubset a{p.carrier_id, std::vector<bool>(n, false)};
    a.members[p.carrier.zero] = true;
    a.members[e] = true;
    out.push_back(a);
    out.push_back(h_closure(p, a));
  }
  return out;
}

inline Outcome s2_h_closure(Workbench& wb) {
  for (const char* c : {"S", "L", "R"}) {
    const auto& p = wb.view(c);
    for (const auto& a : probe_subsets(p)) {
      bool direct = is_h_ideal(p, a).holds;
      bool via_closure = h_closure(p, a) == a && is_ideal(p, a, {Sidedness::two_sided, Flavor::ideal}).holds;
      if (direct != via_closure)
        return bad({{"carrier", c}, {"subset", wb.show(a)}, {"checker", direct ? "h-ideal" : "not h-ideal"}},
                   "checker and closure disagree");
    }
  }
  return ok();
}

inline Outcome s2_indicator(Workbench& wb) {
  for (const char* c : {"S", "L", "R"}) {
    const auto& p = wb.view(c);
    for (const auto& a : probe_subsets(p))
      for (auto s : kSides)
        if (is_h_ideal(p, a, s).holds != is_fuzzy_h_ideal(p, characteristic(a), s).holds)
          return bad({{"carrier", c}, {"subset", wb.show(a)}, {"sidedness", to_string(s)}},
                     "crisp and indicator checks disagree");
  }
  return ok();
}

inline Outcome s2_lattice_meet(Workbench& wb) {
  for (const char* c : {"S", "L", "R"}) {
    const auto& ideals = wb.h_ideals(c);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        CrispSubset m = a;
        for (std::size_t i = 0; i < m.size(); ++i) m.members[i] = a.members[i] && b.members[i];
        if (std::find(ideals.begin(), ideals.end(), m) == ideals.end())
          return bad({{"carrier", c}, {"I", wb.show(a)}, {"J", wb.show(b)}}, "intersection is not an h-ideal");
      }
  }
  return ok();
}

inline Outcome s2_hierarchy(Workbench& wb) {
  for (const char* c : {"S", "L", "R"}) {
    const auto& p = wb.view(c);
    for (const auto& mu : wb.family(c).members) {
      if (auto r = is_fuzzy_h_bi_ideal(p, mu); !r) return from_check(r, std::string(c) + " " + wb.show(mu) + " bi");
      if (auto r = is_fuzzy_h_quasi_ideal(p, mu); !r)
        return from_check(r, std::string(c) + " " + wb.show(mu) + " quasi");
    }
  }
  return ok();
}

/// Level-set enumeration agrees with brute-force filtering where affordable.
inline Outcome s2_family_complete(Workbench& wb) {
  std::string skipped;
  for (const char* c : {"S", "L", "R"}) {
    for (auto cls : {IdealClass::h_ideal, IdealClass::left_h_ideal, IdealClass::right_h_ideal, IdealClass::h_bi_ideal,
                     IdealClass::h_quasi_ideal}) {
      FuzzyFamily brute;
      try {
        brute = filter_fuzzy_family(wb.view(c), wb.grid(), cls, wb.limits());
      } catch (const CapacityError&) {
        if (skipped.find(c) == std::string::npos) skipped += skipped.empty() ? c : std::string(",") + c;
        continue;
      }
      const auto& fam = wb.family(c, cls);
      if (brute.members != fam.members) {
        const FuzzySubset* extra = nullptr;
        for (const auto& mu : brute.members)
          if (std::find(fam.members.begin(), fam.members.end(), mu) == fam.members.end()) extra = &mu;
        for (const auto& mu : fam.members)
          if (std::find(brute.members.begin(), brute.members.end(), mu) == brute.members.end()) extra = &mu;
        Witness w{{"carrier", c}, {"class", to_string(cls)}};
        if (extra) w.emplace_back("member", wb.show(*extra));
        return bad(std::move(w), "level-set and filtered families differ");
      }
    }
  }
  return ok(skipped.empty() ? std::string{} : "filter skipped on " + skipped);
}

inline Outcome s2_prime_semiprime(Workbench& wb) {
  for (const char* c : {"S", "L", "R"}) {
    const auto& semi = wb.primes(c, true);
    for (auto i : wb.primes(c, false))
      if (std::find(semi.begin(), semi.end(), i) == semi.end())
        return bad({{"carrier", c}, {"zeta", wb.show(wb.family(c).members[i])}}, "prime but not semiprime");
  }
  return ok("relative-to-family");
}

// ---- section 3 ----

inline Outcome l3_3(Workbench& wb) {
  for (auto side : {Side::left, Side::right}) {
    const auto& ctx = wb.ctx();
    std::vector<FuzzySubset> pool;
    for (auto s : kSides)
      for (const auto& mu : wb.family(op_carrier(side), h_ideal_class(s)).members)
        if (std::find(pool.begin(), pool.end(), mu) == pool.end()) pool.push_back(mu);
    for (const auto& a : pool)
      for (const auto& b : pool) {
        auto lhs = intersect(pull(ctx, side, a), pull(ctx, side, b));
        auto rhs = pull(ctx, side, intersect(a, b));
        if (!(lhs == rhs)) return mismatch(wb, std::string(pull_name(side)) + " of " + wb.show(a) + " and " + wb.show(b), lhs, rhs);
      }
    if (pool.size() <= 24)
      for (const auto& a : pool)
        for (const auto& b : pool)
          for (const auto& c : pool) {
            auto lhs = intersect(intersect(pull(ctx, side, a), pull(ctx, side, b)), pull(ctx, side, c));
            auto rhs = pull(ctx, side, intersect(intersect(a, b), c));
            if (!(lhs == rhs)) return mismatch(wb, std::string(pull_name(side)) + " triple", lhs, rhs);
          }
  }
  return ok();
}

/// Maps every member of a family on `from` into the class on `to`.
inline Outcome transfer(Workbench& wb, const char* from, IdealClass cls, const char* to,
                        const std::function<FuzzySubset(const FuzzySubset&)>& map, const std::string& name) {
  const auto& p = wb.view(to);
  for (const auto& mu : wb.family(from, cls).members) {
    auto image = map(mu);
    if (image.is_empty()) return bad({{"mu", wb.show(mu)}}, name + " image is identically 0");
    if (auto r = check_fuzzy(p, image, cls); !r)
      return from_check(r, name + " of " + wb.show(mu) + " as " + to_string(cls) + " of " + to);
  }
  return ok();
}

inline Outcome p3_4(Workbench& wb) {
  const auto& ctx = wb.ctx();
  return transfer(wb, "L", IdealClass::h_ideal, "S", [&](const FuzzySubset& m) { return plus(ctx, m); }, "+");
}

inline Outcome sided_transfer(Workbench& wb, const char* from, const char* to, Side side, bool push_dir) {
  const auto& ctx = wb.ctx();
  for (auto s : kSides) {
    auto map = [&](const FuzzySubset& m) { return push_dir ? push(ctx, side, m) : pull(ctx, side, m); };
    auto o = transfer(wb, from, h_ideal_class(s), to, map, push_dir ? push_name(side) : pull_name(side));
    if (o.status != Status::pass) return o;
  }
  return ok();
}

inline Outcome p3_5(Workbench& wb) { return sided_transfer(wb, "S", "L", Side::left, true); }
inline Outcome p3_6(Workbench& wb) { return sided_transfer(wb, "R", "S", Side::right, false); }
inline Outcome p3_7(Workbench& wb) { return sided_transfer(wb, "S", "R", Side::right, true); }

inline Outcome roundtrip(Workbench& wb, Side side) {
  const auto& ctx = wb.ctx();
  const char* oc = op_carrier(side);
  const auto& fs = wb.family("S").members;
  const auto& fo = wb.family(oc).members;
  for (const auto& sigma : fs) {
    auto back = pull(ctx, side, push(ctx, side, sigma));
    if (!(back == sigma)) return mismatch(wb, std::string("S -> ") + oc + " -> S", back, sigma);
    if (std::find(fo.begin(), fo.end(), push(ctx, side, sigma)) == fo.end())
      return bad({{"sigma", wb.show(sigma)}, {"image", wb.show(push(ctx, side, sigma))}},
                 std::string("image is not a fuzzy h-ideal of ") + oc);
  }
  for (const auto& mu : fo) {
    auto back = push(ctx, side, pull(ctx, side, mu));
    if (!(back == mu)) return mismatch(wb, std::string(oc) + " -> S -> " + oc, back, mu);
  }
  if (fs.size() != fo.size())
    return bad({{"S-family", std::to_string(fs.size())}, {std::string(oc) + "-family", std::to_string(fo.size())}},
               "family sizes differ");
  return ok();
}

inline Outcome monotone(Workbench& wb, Side side) {
  const auto& ctx = wb.ctx();
  const auto& fs = wb.family("S").members;
  for (const auto& a : fs)
    for (const auto& b : fs)
      if (is_subset(a, b) != is_subset(push(ctx, side, a), push(ctx, side, b)))
        return bad({{"sigma1", wb.show(a)}, {"sigma2", wb.show(b)}}, "inclusion not preserved and reflected");
  return ok();
}

inline Outcome lattice_ops(Workbench& wb, Side side) {
  const auto& ctx = wb.ctx();
  const auto& fs = wb.family("S").members;
  const auto& target = wb.view(op_carrier(side)).carrier;
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto pa = push(ctx, side, a), pb = push(ctx, side, b);
      auto sum_l = push(ctx, side, fuzzy_sum(ctx.G.S, a, b));
      auto sum_r = fuzzy_sum(target, pa, pb);
      if (!(sum_l == sum_r)) return mismatch(wb, "sum of " + wb.show(a) + " and " + wb.show(b), sum_l, sum_r);
      auto meet_l = push(ctx, side, intersect(a, b));
      auto meet_r = intersect(pa, pb);
      if (!(meet_l == meet_r)) return mismatch(wb, "meet of " + wb.show(a) + " and " + wb.show(b), meet_l, meet_r);
    }
  return ok();
}

inline Outcome t3_8_roundtrip(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  return roundtrip(wb, Side::left);
}
inline Outcome t3_8_monotone(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  return monotone(wb, Side::left);
}
inline Outcome t3_8_lattice(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  return lattice_ops(wb, Side::left);
}
inline Outcome t3_9(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  for (auto f : {roundtrip, monotone, lattice_ops})
    if (auto o = f(wb, Side::right); o.status != Status::pass) return o;
  return ok();
}

inline Outcome c3_10(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  for (const char* c : {"L", "R"})
    for (auto cls : {IdealClass::left_h_ideal, IdealClass::right_h_ideal}) {
      const auto& fam = wb.family(c, cls).members;
      const auto& m = wb.view(c).carrier;
      for (const auto& a : fam)
        for (const auto& b : fam) {
          for (const auto& [what, x] : {std::pair{"meet", intersect(a, b)}, std::pair{"sum", fuzzy_sum(m, a, b)}})
            if (std::find(fam.begin(), fam.end(), x) == fam.end())
              return bad({{"carrier", c}, {"class", to_string(cls)}, {"mu", wb.show(a)}, {"nu", wb.show(b)}},
                         std::string(what) + " leaves the family");
        }
    }
  return ok();
}

/// (lambda_I)^map == lambda_(I^map) for every crisp h-ideal I of `from`.
inline Outcome indicator_square(Workbench& wb, const char* from, Side side, bool push_dir) {
  const auto& ctx = wb.ctx();
  for (auto s : kSides)
    for (const auto& ideal : wb.h_ideals(from, s)) {
      auto fuzzy = push_dir ? push(ctx, side, characteristic(ideal)) : pull(ctx, side, characteristic(ideal));
      auto crisp = characteristic(push_dir ? crisp_push(ctx, side, ideal) : crisp_pull(ctx, side, ideal));
      if (!(fuzzy == crisp))
        return mismatch(wb, std::string(to_string(s)) + " h-ideal " + wb.show(ideal), fuzzy, crisp);
    }
  return ok();
}

inline Outcome l3_11(Workbench& wb) { return indicator_square(wb, "S", Side::left, true); }
inline Outcome l3_12(Workbench& wb) { return indicator_square(wb, "L", Side::left, false); }
inline Outcome l3_13(Workbench& wb) { return indicator_square(wb, "S", Side::right, true); }
inline Outcome l3_14(Workbench& wb) { return indicator_square(wb, "R", Side::right, false); }

inline Outcome crisp_iso(Workbench& wb, Side side) {
  if (auto u = need_unities(wb)) return *u;
  const auto& ctx = wb.ctx();
  const char* oc = op_carrier(side);
  const auto& is = wb.h_ideals("S");
  const auto& io = wb.h_ideals(oc);
  auto show_pair = [&](const CrispSubset& a, const CrispSubset& b) { return wb.show(a) + " -> " + wb.show(b); };
  std::vector<CrispSubset> images;
  for (const auto& a : is) {
    auto b = crisp_push(ctx, side, a);
    if (std::find(io.begin(), io.end(), b) == io.end())
      return bad({{"I", wb.show(a)}, {"image", wb.show(b)}}, std::string("image is not an h-ideal of ") + oc);
    if (!(crisp_pull(ctx, side, b) == a)) return bad({{"I", show_pair(a, b)}}, "inverse does not return I");
    if (std::find(images.begin(), images.end(), b) != images.end()) return bad({{"I", wb.show(a)}}, "not injective");
    images.push_back(b);
  }
  for (const auto& b : io) {
    auto a = crisp_pull(ctx, side, b);
    if (std::find(is.begin(), is.end(), a) == is.end() || !(crisp_push(ctx, side, a) == b))
      return bad({{"J", wb.show(b)}}, "not surjective");
  }
  for (const auto& a : is)
    for (const auto& b : is)
      if (a.is_subset_of(b) != crisp_push(ctx, side, a).is_subset_of(crisp_push(ctx, side, b)))
        return bad({{"I1", wb.show(a)}, {"I2", wb.show(b)}}, "inclusion not preserved and reflected");
  return ok();
}

inline Outcome t3_15(Workbench& wb) { return crisp_iso(wb, Side::left); }
inline Outcome t3_16(Workbench& wb) { return crisp_iso(wb, Side::right); }

inline Outcome composition(Workbench& wb, bool generalized) {
  if (auto u = need_unities(wb)) return *u;
  const auto& ctx = wb.ctx();
  const auto& fs = wb.family("S").members;
  auto prod = [&](const ProductStructure& p, const FuzzySubset& a, const FuzzySubset& b) {
    return generalized ? generalized_h_product(p, a, b) : simple_h_product(p, a, b);
  };
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto lhs = plus_prime(ctx, prod(ctx.S_view, a, b));
      auto rhs = prod(ctx.L_view, plus_prime(ctx, a), plus_prime(ctx, b));
      if (!(lhs == rhs)) return mismatch(wb, wb.show(a) + " with " + wb.show(b), lhs, rhs);
    }
  return ok();
}

inline Outcome p_comp(Workbench& wb) { return composition(wb, true); }
inline Outcome r_gamma(Workbench& wb) { return composition(wb, false); }

/// Prime (semiprime) members on `from` map to prime (semiprime) members on `to`.
inline Outcome prime_transfer(Workbench& wb, const char* from, const char* to,
                              const std::function<FuzzySubset(const FuzzySubset&)>& map, const std::string& name) {
  const auto& p = wb.view(to);
  for (bool semi : {false, true}) {
    const auto& fam = wb.family(from);
    for (auto i : wb.primes(from, semi)) {
      auto image = map(fam.members[i]);
      Witness w{{"zeta", wb.show(fam.members[i])}, {"image", wb.show(image)}};
      if (auto r = is_fuzzy_h_ideal(p, image); !r) return bad(std::move(w), name + " image is not a fuzzy h-ideal");
      auto r = semi ? is_semiprime_fuzzy_h_ideal(p, image, wb.family(to), &wb.products(to))
                    : is_prime_fuzzy_h_ideal(p, image, wb.family(to), &wb.products(to));
      if (!r) {
        for (auto& kv : r.witness.value_or(Witness{})) w.push_back(kv);
        return bad(std::move(w), name + (semi ? " image is not semiprime" : " image is not prime"));
      }
    }
  }
  return ok("relative-to-family");
}

inline Outcome p_prime_fwd(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  const auto& ctx = wb.ctx();
  auto o = prime_transfer(wb, "S", "L", [&](const FuzzySubset& m) { return plus_prime(ctx, m); }, "+'");
  if (o.status != Status::pass) return o;
  return prime_transfer(wb, "S", "R", [&](const FuzzySubset& m) { return star_prime(ctx, m); }, "*'");
}

inline Outcome p_prime_bwd(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  const auto& ctx = wb.ctx();
  auto o = prime_transfer(wb, "L", "S", [&](const FuzzySubset& m) { return plus(ctx, m); }, "+");
  if (o.status != Status::pass) return o;
  return prime_transfer(wb, "R", "S", [&](const FuzzySubset& m) { return star(ctx, m); }, "*");
}

inline Outcome class_transfer(Workbench& wb, IdealClass cls, bool forward) {
  const auto& ctx = wb.ctx();
  for (auto side : {Side::left, Side::right}) {
    const char* oc = op_carrier(side);
    auto map = [&](const FuzzySubset& m) { return forward ? push(ctx, side, m) : pull(ctx, side, m); };
    auto o = forward ? transfer(wb, "S", cls, oc, map, push_name(side))
                     : transfer(wb, oc, cls, "S", map, pull_name(side));
    if (o.status != Status::pass) return o;
  }
  return ok();
}

inline Outcome p_bi_fwd(Workbench& wb) { return class_transfer(wb, IdealClass::h_bi_ideal, true); }
inline Outcome p_bi_bwd(Workbench& wb) { return class_transfer(wb, IdealClass::h_bi_ideal, false); }
inline Outcome p_quasi_fwd(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  return class_transfer(wb, IdealClass::h_quasi_ideal, true);
}
inline Outcome p_quasi_bwd(Workbench& wb) {
  if (auto u = need_unities(wb)) return *u;
  return class_transfer(wb, IdealClass::h_quasi_ideal, false);
}

// ---- section 4 ----

inline Outcome s4_coprod(Workbench& wb) {
  const auto& ctx = wb.ctx();
  const auto& fs = wb.family("S").members;
  auto& prods = wb.products("S");
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t a2 = 0; a2 < fs.size(); ++a2)
      for (std::size_t b = 0; b < fs.size(); ++b)
        for (std::size_t b2 = 0; b2 < fs.size(); ++b2) {
          auto lhs = simple_h_product(ctx.SxS_view, square(fs[a], fs[a2]), square(fs[b], fs[b2]));
          auto rhs = square(prods.at(a, b), prods.at(a2, b2));
          if (!(lhs == rhs))
            return mismatch(wb, wb.show(fs[a]) + " x " + wb.show(fs[a2]) + " with " + wb.show(fs[b]) + " x " +
                                    wb.show(fs[b2]),
                            lhs, rhs);
        }
  return ok();
}

inline Outcome s4_commute_star(Workbench& wb) {
  const auto& ctx = wb.ctx();
  for (auto side : {Side::left, Side::right}) {
    const auto& fam = wb.family(op_carrier(side)).members;
    for (const auto& a : fam)
      for (const auto& b : fam) {
        auto sq = square(a, b);
        auto lhs = side == Side::left ? product_plus(ctx, sq) : product_star(ctx, sq);
        auto rhs = square(pull(ctx, side, a), pull(ctx, side, b));
        if (!(lhs == rhs)) return mismatch(wb, std::string(pull_name(side)) + " of " + wb.show(a) + " x " + wb.show(b), lhs, rhs);
      }
  }
  return ok();
}

inline Outcome s4_commute_starprime(Workbench& wb) {
  const auto& ctx = wb.ctx();
  const auto& fs = wb.family("S").members;
  for (auto side : {Side::left, Side::right})
    for (const auto& a : fs)
      for (const auto& b : fs) {
        auto sq = square(a, b);
        auto lhs = side == Side::left ? product_plus_prime(ctx, sq) : product_star_prime(ctx, sq);
        auto rhs = square(push(ctx, side, a), push(ctx, side, b));
        if (!(lhs == rhs)) return mismatch(wb, std::string(push_name(side)) + " of " + wb.show(a) + " x " + wb.show(b), lhs, rhs);
      }
  return ok();
}

inline Outcome s4_hideal(Workbench& wb) {
  const auto& ctx = wb.ctx();
  for (auto side : {Side::left, Side::right}) {
    const auto& fam = wb.family(op_carrier(side)).members;
    for (const auto& a : fam)
      for (const auto& b : fam) {
        auto sq = square(pull(ctx, side, a), pull(ctx, side, b));
        if (auto r = is_fuzzy_h_ideal(ctx.SxS_view, sq); !r)
          return from_check(r, std::string(pull_name(side)) + " of " + wb.show(a) + " x " + wb.show(b));
      }
  }
  const auto& fs = wb.family("S").members;
  for (auto side : {Side::left, Side::right}) {
    const auto& target = wb.view(side == Side::left ? "LxL" : "RxR");
    for (const auto& a : fs)
      for (const auto& b : fs) {
        auto sq = square(push(ctx, side, a), push(ctx, side, b));
        if (auto r = is_fuzzy_h_ideal(target, sq); !r)
          return from_check(r, std::string(push_name(side)) + " of " + wb.show(a) + " x " + wb.show(b));
      }
  }
  return ok();
}

inline Outcome s4_prime(Workbench& wb) {
  const auto& ctx = wb.ctx();
  for (bool semi : {false, true}) {
    auto check_on = [&](const char* carrier, const FuzzySubset& zeta, Witness w) -> std::optional<Outcome> {
      const auto& p = wb.view(carrier);
      if (auto r = is_fuzzy_h_ideal(p, zeta); !r) return from_check(r, std::string("product on ") + carrier);
      auto r = semi ? is_semiprime_fuzzy_h_ideal(p, zeta, wb.family(carrier), &wb.products(carrier))
                    : is_prime_fuzzy_h_ideal(p, zeta, wb.family(carrier), &wb.products(carrier));
      if (r) return std::nullopt;
      for (auto& kv : r.witness.value_or(Witness{})) w.push_back(kv);
      return bad(std::move(w), std::string(semi ? "semiprime" : "prime") + " product fails on " + carrier);
    };
    for (auto side : {Side::left, Side::right}) {
      const char* oc = op_carrier(side);
      const auto& fam = wb.family(oc).members;
      const auto& primes = wb.primes(oc, semi);
      for (auto i : primes)
        for (auto j : primes) {
          auto zeta = square(pull(ctx, side, fam[i]), pull(ctx, side, fam[j]));
          if (auto o = check_on("SxS", zeta, {{"mu", wb.show(fam[i])}, {"sigma", wb.show(fam[j])}})) return *o;
        }
    }
    const auto& fs = wb.family("S").members;
    const auto& primes = wb.primes("S", semi);
    for (auto side : {Side::left, Side::right})
      for (auto i : primes)
        for (auto j : primes) {
          auto zeta = square(push(ctx, side, fs[i]), push(ctx, side, fs[j]));
          if (auto o = check_on(side == Side::left ? "LxL" : "RxR", zeta, {{"mu", wb.show(fs[i])}, {"sigma", wb.show(fs[j])}}))
            return *o;
        }
  }
  return ok("relative-to-family");
}

inline Outcome t_cores2(Workbench& wb) {
  const auto& ctx = wb.ctx();
  if (!ctx.left_unity || !ctx.left_unity->strong) return unmet("strong left unity");
  if (!ctx.right_unity) return unmet("right unity");
  const auto& fs = wb.family("S").members;
  const auto& fr = wb.family("R").members;
  std::vector<FuzzySubset> dom, img;
  for (const auto& a : fs)
    for (const auto& b : fs) {
      auto sq = square(a, b);
      auto image = product_star_prime(ctx, sq);
      if (!(image == square(star_prime(ctx, a), star_prime(ctx, b))))
        return mismatch(wb, "image of " + wb.show(a) + " x " + wb.show(b), image, square(star_prime(ctx, a), star_prime(ctx, b)));
      auto back = product_star(ctx, image);
      if (!(back == sq)) return mismatch(wb, "S x S -> R x R -> S x S", back, sq);
      dom.push_back(std::move(sq));
      img.push_back(std::move(image));
    }
  for (const auto& a : fr)
    for (const auto& b : fr) {
      auto sq = square(a, b);
      auto back = product_star_prime(ctx, product_star(ctx, sq));
      if (!(back == sq)) return mismatch(wb, "R x R -> S x S -> R x R", back, sq);
      if (std::find(img.begin(), img.end(), sq) == img.end())
        return bad({{"mu", wb.show(a)}, {"sigma", wb.show(b)}}, "product of R-ideals is not hit");
    }
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = 0; j < dom.size(); ++j)
      if (is_subset(dom[i], dom[j]) != is_subset(img[i], img[j]))
        return bad({{"first", wb.show(dom[i])}, {"second", wb.show(dom[j])}}, "inclusion not preserved and reflected");
  return ok();
}

}  // namespace detail

struct CatalogEntry {
  std::string id;
  Suite section;
  std::function<detail::Outcome(Workbench&)> run;
};

/// Every executable statement, in report order.
inline const std::vector<CatalogEntry>& catalog() {
  using namespace detail;
  static const std::vector<CatalogEntry> entries{
      {"S2-axioms", Suite::section2, s2_axioms},
      {"S2-operator-laws", Suite::section2, s2_operator_laws},
      {"S2-operator-tables", Suite::section2, s2_operator_tables},
      {"S2-h-closure", Suite::section2, s2_h_closure},
      {"S2-indicator", Suite::section2, s2_indicator},
      {"S2-lattice-meet", Suite::section2, s2_lattice_meet},
      {"S2-hierarchy", Suite::section2, s2_hierarchy},
      {"S2-family-complete", Suite::section2, s2_family_complete},
      {"S2-prime-semiprime", Suite::section2, s2_prime_semiprime},
      {"L3.3", Suite::section3, l3_3},
      {"P3.4", Suite::section3, p3_4},
      {"P3.5", Suite::section3, p3_5},
      {"P3.6", Suite::section3, p3_6},
      {"P3.7", Suite::section3, p3_7},
      {"T3.8-roundtrip", Suite::section3, t3_8_roundtrip},
      {"T3.8-monotone", Suite::section3, t3_8_monotone},
      {"T3.8-lattice", Suite::section3, t3_8_lattice},
      {"T3.9", Suite::section3, t3_9},
      {"C3.10", Suite::section3, c3_10},
      {"L3.11", Suite::section3, l3_11},
      {"L3.12", Suite::section3, l3_12},
      {"L3.13", Suite::section3, l3_13},
      {"L3.14", Suite::section3, l3_14},
      {"T3.15", Suite::section3, t3_15},
      {"T3.16", Suite::section3, t3_16},
      {"P-comp", Suite::section3, p_comp},
      {"R-gamma", Suite::section3, r_gamma},
      {"P-prime-fwd", Suite::section3, p_prime_fwd},
      {"P-prime-bwd", Suite::section3, p_prime_bwd},
      {"P-bi-fwd", Suite::section3, p_bi_fwd},
      {"P-bi-bwd", Suite::section3, p_bi_bwd},
      {"P-quasi-fwd", Suite::section3, p_quasi_fwd},
      {"P-quasi-bwd", Suite::section3, p_quasi_bwd},
      {"S4-coprod", Suite::section4, s4_coprod},
      {"S4-commute-star", Suite::section4, s4_commute_star},
      {"S4-commute-starprime", Suite::section4, s4_commute_starprime},
      {"S4-hideal", Suite::section4, s4_hideal},
      {"S4-prime", Suite::section4, s4_prime},
      {"T-cores2", Suite::section4, t_cores2},
  };
  return entries;
}

inline std::vector<std::string> catalog_ids(Suite suite = Suite::all) {
  std::vector<std::string> ids;
  for (const auto& e : catalog())
    if (suite == Suite::all || e.section == suite) ids.push_back(e.id);
  return ids;
}

inline PropertyResult run_check(std::string_view id, Workbench& wb) {
  for (const auto& e : catalog()) {
    if (e.id != id) continue;
    auto start = std::chrono::steady_clock::now();
    auto o = e.run(wb);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return {e.id, o.status, std::move(o.witness), std::move(o.note), static_cast<std::int64_t>(ms)};
  }
  throw PreconditionError("unknown check id '" + std::string(id) + "'");
}

inline PropertyResult run_check(std::string_view id, const CorrespondenceContext& ctx, const Grid& grid,
                                const Limits& limits = {}) {
  Workbench wb(ctx, grid, limits);
  return run_check(id, wb);
}

inline SuiteReport run_suite(Workbench& wb, Suite suite = Suite::all) {
  SuiteReport report{wb.ctx().G.name, wb.grid(), {}};
  for (const auto& id : catalog_ids(suite)) report.results.push_back(run_check(id, wb));
  return report;
}

inline SuiteReport run_suite(const CorrespondenceContext& ctx, const Grid& grid, Suite suite = Suite::all,
                             const Limits& limits = {}) {
  Workbench wb(ctx, grid, limits);
  return run_suite(wb, suite);
}

}  // namespace ghr
