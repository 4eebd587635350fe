#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>

#include "ghr/error.hpp"
#include "ghr/faults.hpp"
#include "ghr/fuzzy.hpp"
#include "ghr/gamma_hemiring.hpp"
#include "ghr/limits.hpp"
#include "ghr/operator_hemiring.hpp"
#include "ghr/product_structure.hpp"

namespace ghr {

/// A Gamma-hemiring with its operator hemirings and the carriers the maps
/// move fuzzy subsets between: S, L, R, SxS, LxL, RxR.
struct CorrespondenceContext {
  GammaHemiring G;
  OperatorHemiring L;
  OperatorHemiring R;
  std::optional<Unity> left_unity;
  std::optional<Unity> right_unity;

  ProductStructure S_view;
  ProductStructure L_view;
  ProductStructure R_view;
  ProductStructure SxS_view;
  ProductStructure LxL_view;
  ProductStructure RxR_view;

  static CorrespondenceContext build(GammaHemiring g, const Limits& limits = {}) {
    if (auto r = validate_gamma_hemiring(g, limits); !r.valid())
      throw InvalidStructure(g.name + " is not a Gamma-hemiring", std::move(r));
    CorrespondenceContext ctx;
    ctx.L = build_operator(g, Side::left, limits);
    ctx.R = build_operator(g, Side::right, limits);
    ctx.left_unity = find_unity(g, ctx.L);
    ctx.right_unity = find_unity(g, ctx.R);
    ctx.S_view = as_product_structure(g, "S");
    auto lh = ctx.L.as_hemiring();
    auto rh = ctx.R.as_hemiring();
    ctx.L_view = hemiring_as_product_structure(lh, "L");
    ctx.R_view = hemiring_as_product_structure(rh, "R");
    ctx.SxS_view = as_product_structure(product(g, g), "SxS");
    ctx.LxL_view = hemiring_as_product_structure(product(lh, lh), "LxL");
    ctx.RxR_view = hemiring_as_product_structure(product(rh, rh), "RxR");
    ctx.G = std::move(g);
    return ctx;
  }

  const ProductStructure& view(std::string_view carrier) const {
    if (carrier == "S") return S_view;
    if (carrier == "L") return L_view;
    if (carrier == "R") return R_view;
    if (carrier == "SxS") return SxS_view;
    if (carrier == "LxL") return LxL_view;
    if (carrier == "RxR") return RxR_view;
    throw PreconditionError("unknown carrier '" + std::string(carrier) + "'");
  }

  const OperatorHemiring& op(Side side) const { return side == Side::left ? L : R; }
};

namespace detail {

inline void require_view(const CorrespondenceContext& ctx, const FuzzySubset& mu, std::string_view carrier) {
  const auto& v = ctx.view(carrier);
  require_carrier(mu, v.carrier_id, v.size());
}

inline void require_crisp_view(const CorrespondenceContext& ctx, const CrispSubset& a, std::string_view carrier) {
  const auto& v = ctx.view(carrier);
  if (a.carrier != v.carrier_id || a.size() != v.size())
    throw PreconditionError("carrier mismatch: expected " + v.carrier_id + ", got " + a.carrier);
}

/// x -> min over gamma of mu(embedding of (x, gamma)).
inline FuzzySubset pull_back(const CorrespondenceContext& ctx, const FuzzySubset& mu, Side side) {
  require_view(ctx, mu, side == Side::left ? "L" : "R");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  FuzzySubset out = constant("S", n, Rational01::one());
  for (Elem x = 0; x < n; ++x)
    for (Elem al = 0; al < ctx.G.gamma_size(); ++al) out[x] = std::min(out[x], mu[embed(ctx.G, op, x, al)]);
  return out;
}

/// l -> min over s of sigma(l(s)).
inline FuzzySubset push_forward(const CorrespondenceContext& ctx, const FuzzySubset& sigma, Side side, bool faulty) {
  require_view(ctx, sigma, "S");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  FuzzySubset out = constant(side == Side::left ? "L" : "R", op.size(), Rational01::zero());
  for (std::size_t l = 0; l < op.size(); ++l) {
    auto v = sigma[op.maps[l](0)];
    for (Elem s = 1; s < n; ++s) {
      const auto& w = sigma[op.maps[l](s)];
      v = faulty ? std::max(v, w) : std::min(v, w);
    }
    out.values[l] = v;
  }
  return out;
}

inline CrispSubset crisp_pull_back(const CorrespondenceContext& ctx, const CrispSubset& p, Side side) {
  require_crisp_view(ctx, p, side == Side::left ? "L" : "R");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  CrispSubset out{"S", std::vector<bool>(n, true)};
  for (Elem x = 0; x < n; ++x)
    for (Elem al = 0; al < ctx.G.gamma_size(); ++al)
      if (!p.contains(embed(ctx.G, op, x, al))) out.members[x] = false;
  return out;
}

inline CrispSubset crisp_push_forward(const CorrespondenceContext& ctx, const CrispSubset& q, Side side) {
  require_crisp_view(ctx, q, "S");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  CrispSubset out{side == Side::left ? "L" : "R", std::vector<bool>(op.size(), false)};
  for (std::size_t l = 0; l < op.size(); ++l) {
    std::vector<bool> image(n, false);
    for (Elem s = 0; s < n; ++s) image[op.maps[l](s)] = true;
    auto sums = additive_closure(ctx.G.S, image);
    bool inside = true;
    for (Elem e = 0; e < n && inside; ++e)
      if (sums[e] && !q.contains(e)) inside = false;
    out.members[l] = inside;
  }
  return out;
}

/// (x, y) -> min over (alpha, beta) of phi(embed(x, alpha), embed(y, beta)).
inline FuzzySubset product_pull_back(const CorrespondenceContext& ctx, const FuzzySubset& phi, Side side) {
  require_view(ctx, phi, side == Side::left ? "LxL" : "RxR");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  const auto k = static_cast<Elem>(ctx.G.gamma_size());
  const auto m = op.size();
  FuzzySubset out = constant("SxS", static_cast<std::size_t>(n) * n, Rational01::one());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      auto& slot = out.values[static_cast<std::size_t>(x) * n + y];
      for (Elem al = 0; al < k; ++al)
        for (Elem be = 0; be < k; ++be)
          slot = std::min(slot, phi.values[embed(ctx.G, op, x, al) * m + embed(ctx.G, op, y, be)]);
    }
  return out;
}

/// (l1, l2) -> min over independent s1, s2 of phi(l1(s1), l2(s2)).
inline FuzzySubset product_push_forward(const CorrespondenceContext& ctx, const FuzzySubset& phi, Side side) {
  require_view(ctx, phi, "SxS");
  const auto& op = ctx.op(side);
  const auto n = static_cast<Elem>(ctx.G.size());
  const auto m = op.size();
  FuzzySubset out = constant(side == Side::left ? "LxL" : "RxR", m * m, Rational01::one());
  for (std::size_t l1 = 0; l1 < m; ++l1)
    for (std::size_t l2 = 0; l2 < m; ++l2) {
      auto& slot = out.values[l1 * m + l2];
      for (Elem s1 = 0; s1 < n; ++s1)
        for (Elem s2 = 0; s2 < n; ++s2)
          slot = std::min(slot, phi.values[static_cast<std::size_t>(op.maps[l1](s1)) * n + op.maps[l2](s2)]);
    }
  return out;
}

}  // namespace detail

/// mu over L -> mu+ over S.
inline FuzzySubset plus(const CorrespondenceContext& ctx, const FuzzySubset& mu) {
  return detail::pull_back(ctx, mu, Side::left);
}

/// sigma over S -> sigma+' over L.
inline FuzzySubset plus_prime(const CorrespondenceContext& ctx, const FuzzySubset& sigma) {
  return detail::push_forward(ctx, sigma, Side::left, detail::active_faults().plus_prime_uses_max);
}

/// delta over R -> delta* over S.
inline FuzzySubset star(const CorrespondenceContext& ctx, const FuzzySubset& delta) {
  return detail::pull_back(ctx, delta, Side::right);
}

/// eta over S -> eta*' over R.
inline FuzzySubset star_prime(const CorrespondenceContext& ctx, const FuzzySubset& eta) {
  return detail::push_forward(ctx, eta, Side::right, false);
}

inline CrispSubset crisp_plus(const CorrespondenceContext& ctx, const CrispSubset& p) {
  return detail::crisp_pull_back(ctx, p, Side::left);
}

inline CrispSubset crisp_star(const CorrespondenceContext& ctx, const CrispSubset& p) {
  return detail::crisp_pull_back(ctx, p, Side::right);
}

/// Maps l whose image, closed under finite sums, stays inside Q.
inline CrispSubset crisp_plus_prime(const CorrespondenceContext& ctx, const CrispSubset& q) {
  return detail::crisp_push_forward(ctx, q, Side::left);
}

inline CrispSubset crisp_star_prime(const CorrespondenceContext& ctx, const CrispSubset& q) {
  return detail::crisp_push_forward(ctx, q, Side::right);
}

inline FuzzySubset product_plus(const CorrespondenceContext& ctx, const FuzzySubset& phi) {
  return detail::product_pull_back(ctx, phi, Side::left);
}

inline FuzzySubset product_star(const CorrespondenceContext& ctx, const FuzzySubset& phi) {
  return detail::product_pull_back(ctx, phi, Side::right);
}

inline FuzzySubset product_plus_prime(const CorrespondenceContext& ctx, const FuzzySubset& phi) {
  return detail::product_push_forward(ctx, phi, Side::left);
}

inline FuzzySubset product_star_prime(const CorrespondenceContext& ctx, const FuzzySubset& phi) {
  return detail::product_push_forward(ctx, phi, Side::right);
}

/// Cartesian product relabelled onto a registered square carrier.
inline FuzzySubset square(const FuzzySubset& mu, const FuzzySubset& sigma) {
  detail::require_same_carrier(mu, sigma);
  auto out = cartesian(mu, sigma);
  out.carrier = mu.carrier + "x" + mu.carrier;
  return out;
}

}  // namespace ghr
