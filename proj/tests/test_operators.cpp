#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace ghr;

namespace {

ActionMap identity(std::size_t n) {
  ActionMap m{std::vector<Elem>(n)};
  for (Elem a = 0; a < n; ++a) m.table[a] = a;
  return m;
}

ActionMap constant_map(std::size_t n, Elem v) { return {std::vector<Elem>(n, v)}; }

/// Formal sums of one or two generators on one side.
std::vector<FormalSum> small_sums(const GammaHemiring& g, Side side) {
  std::vector<std::pair<Elem, Elem>> gens;
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem al = 0; al < g.gamma_size(); ++al) gens.emplace_back(x, al);
  std::vector<FormalSum> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.push_back({side, {gens[i]}});
    for (std::size_t j = i; j < gens.size(); ++j) out.push_back({side, {gens[i], gens[j]}});
  }
  return out;
}

}  // namespace

TEST(Realize, TableExamples) {
  auto z2 = corpus::cyclic(2);
  EXPECT_EQ(realize(z2, {Side::left, {{1, 1}, {1, 1}}}), constant_map(2, 0));
  EXPECT_EQ(realize(z2, {Side::left, {{0, 1}}}), constant_map(2, 0));
  EXPECT_EQ(realize(z2, {Side::right, {{0, 0}}}), constant_map(2, 0));
  auto b = corpus::boolean();
  EXPECT_EQ(realize(b, {Side::left, {{1, 1}}}), identity(2));
  EXPECT_THROW(realize(b, {Side::left, {}}), PreconditionError);
  EXPECT_THROW(realize(b, {Side::left, {{2, 0}}}), PreconditionError);
}

TEST(Rho, DefiningCondition) {
  auto z2 = corpus::cyclic(2);
  EXPECT_TRUE(rho_equivalent(z2, {Side::left, {{1, 1}, {1, 1}}}, {Side::left, {{0, 0}}}));
  EXPECT_FALSE(rho_equivalent(z2, {Side::left, {{1, 1}}}, {Side::left, {{0, 0}}}));
  auto b = corpus::boolean();
  EXPECT_TRUE(rho_equivalent(b, {Side::left, {{1, 1}}}, {Side::left, {{1, 1}, {1, 1}}}));
  EXPECT_THROW(rho_equivalent(b, {Side::left, {{1, 1}}}, {Side::right, {{1, 1}}}), PreconditionError);
}

TEST(Rho, IsACongruenceOnSmallSums) {
  for (const char* name : {"B", "Z2", "Z3"}) {
    const auto& g = support::context(name).G;
    for (auto side : {Side::left, Side::right}) {
      auto sums = small_sums(g, side);
      for (const auto& f1 : sums)
        for (const auto& f2 : sums) {
          if (!rho_equivalent(g, f1, f2)) continue;
          for (const auto& h : sums) {
            EXPECT_TRUE(rho_equivalent(g, formal_sum(f1, h), formal_sum(f2, h)));
            EXPECT_TRUE(rho_equivalent(g, formal_product(g, f1, h), formal_product(g, f2, h)));
            EXPECT_TRUE(rho_equivalent(g, formal_product(g, h, f1), formal_product(g, h, f2)));
          }
        }
    }
  }
}

TEST(BuildOperator, SizesOnSmallStructures) {
  const auto& b = support::context("B");
  ASSERT_EQ(b.L.size(), 2u);
  std::set<std::vector<Elem>> maps{b.L.maps[0].table, b.L.maps[1].table};
  EXPECT_EQ(maps, (std::set<std::vector<Elem>>{{0, 0}, {0, 1}}));

  const auto& z2 = support::context("Z2");
  ASSERT_EQ(z2.L.size(), 2u);
  // Addition table is that of Z2: the non-zero map added to itself is zero.
  Elem other = z2.L.zero == 0 ? 1 : 0;
  EXPECT_EQ(z2.L.sum(other, other), z2.L.zero);
  EXPECT_EQ(z2.L.sum(other, z2.L.zero), other);

  const auto& z4 = support::context("Z4");
  ASSERT_EQ(z4.L.size(), 4u);
  std::set<std::vector<Elem>> expected;
  for (Elem c = 0; c < 4; ++c) expected.insert({0, c, (2 * c) % 4, (3 * c) % 4});
  std::set<std::vector<Elem>> got;
  for (const auto& m : z4.L.maps) got.insert(m.table);
  EXPECT_EQ(got, expected);
}

TEST(BuildOperator, MatchesBruteForceOracleOnCorpus) {
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    for (auto side : {Side::left, Side::right}) {
      auto want = oracle::operator_maps(ctx.G, side);
      std::set<std::vector<Elem>> got;
      for (const auto& m : ctx.op(side).maps) got.insert(m.table);
      EXPECT_EQ(got, want) << name << " " << to_string(side);
    }
  }
}

TEST(BuildOperator, CorpusSizes) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> sizes{
      {"B", {2, 2}}, {"Z2", {2, 2}}, {"Z3", {3, 3}}, {"Z4", {4, 4}}, {"Z2xZ2", {4, 4}}, {"Mat2x1", {16, 2}}};
  for (const auto& [name, lr] : sizes) {
    EXPECT_EQ(support::context(name).L.size(), lr.first) << name;
    EXPECT_EQ(support::context(name).R.size(), lr.second) << name;
  }
}

// Products of generators follow [x,a][y,b] = [x a y, b] on the left and
// [a,x][b,y] = [a, x b y] on the right.
TEST(BuildOperator, MultiplicationOrientationMatchesGeneratorProducts) {
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    const auto& g = ctx.G;
    for (auto side : {Side::left, Side::right}) {
      const auto& op = ctx.op(side);
      for (Elem x = 0; x < g.size(); ++x)
        for (Elem al = 0; al < g.gamma_size(); ++al)
          for (Elem y = 0; y < g.size(); ++y)
            for (Elem be = 0; be < g.gamma_size(); ++be) {
              auto want = oracle::generator_product(g, side, {x, al}, {y, be});
              auto got = op.maps[op.product(embed(g, op, x, al), embed(g, op, y, be))].table;
              ASSERT_EQ(got, want) << name << " " << to_string(side);
            }
    }
  }
}

TEST(BuildOperator, MultiplicationLawOnTwoTermSums) {
  for (const char* name : {"B", "Z3", "Z2xZ2", "Mat2x1"}) {
    const auto& ctx = support::context(name);
    for (auto side : {Side::left, Side::right}) {
      const auto& op = ctx.op(side);
      auto sums = small_sums(ctx.G, side);
      for (const auto& f1 : sums) {
        auto i = op.find(realize(ctx.G, f1));
        ASSERT_TRUE(i);
        for (const auto& f2 : sums) {
          auto j = op.find(realize(ctx.G, f2));
          ASSERT_TRUE(j);
          ASSERT_EQ(op.maps[op.product(*i, *j)], realize(ctx.G, formal_product(ctx.G, f1, f2))) << name;
          ASSERT_EQ(op.maps[op.sum(*i, *j)], realize(ctx.G, formal_sum(f1, f2))) << name;
        }
      }
    }
  }
}

TEST(BuildOperator, RightCompositionAppliesLeftFactorFirst) {
  const auto& ctx = support::context("Mat2x1");
  const auto& op = ctx.R;
  for (Elem i = 0; i < op.size(); ++i)
    for (Elem j = 0; j < op.size(); ++j)
      for (Elem a = 0; a < ctx.G.size(); ++a) EXPECT_EQ(op.maps[op.product(i, j)](a), op.maps[j](op.maps[i](a)));
  const auto& L = ctx.L;
  for (Elem i = 0; i < L.size(); ++i)
    for (Elem j = 0; j < L.size(); ++j)
      for (Elem a = 0; a < ctx.G.size(); ++a) EXPECT_EQ(L.maps[L.product(i, j)](a), L.maps[i](L.maps[j](a)));
}

TEST(BuildOperator, MapsAreAdditiveAndProvenanceRealizes) {
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    const auto& g = ctx.G;
    for (auto side : {Side::left, Side::right}) {
      const auto& op = ctx.op(side);
      EXPECT_TRUE(validate_hemiring(op.as_hemiring()).valid());
      for (std::size_t i = 0; i < op.size(); ++i) {
        EXPECT_EQ(realize(g, op.provenance[i]), op.maps[i]);
        for (Elem a = 0; a < g.size(); ++a)
          for (Elem b = 0; b < g.size(); ++b)
            EXPECT_EQ(op.maps[i](g.sum(a, b)), g.sum(op.maps[i](a), op.maps[i](b)));
      }
    }
  }
}

TEST(Embed, Examples) {
  const auto& b = support::context("B");
  EXPECT_EQ(b.L.maps[embed(b.G, b.L, 1, 1)], identity(2));
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    for (Elem al = 0; al < ctx.G.gamma_size(); ++al) {
      EXPECT_EQ(embed(ctx.G, ctx.L, ctx.G.S.zero, al), ctx.L.zero);
      EXPECT_EQ(embed(ctx.G, ctx.R, ctx.G.S.zero, al), ctx.R.zero);
    }
  }
  const auto& z4 = support::context("Z4");
  EXPECT_EQ(z4.L.maps[embed(z4.G, z4.L, 2, 1)].table, (std::vector<Elem>{0, 2, 0, 2}));
  EXPECT_THROW(embed(z4.G, z4.L, 4, 0), PreconditionError);
}

TEST(Embed, IsAdditiveInTheElement) {
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    const auto& g = ctx.G;
    for (auto side : {Side::left, Side::right}) {
      const auto& op = ctx.op(side);
      for (Elem x = 0; x < g.size(); ++x)
        for (Elem y = 0; y < g.size(); ++y)
          for (Elem al = 0; al < g.gamma_size(); ++al)
            EXPECT_EQ(embed(g, op, g.sum(x, y), al), op.sum(embed(g, op, x, al), embed(g, op, y, al))) << name;
    }
  }
}

TEST(Unity, StrongOnRings) {
  const auto& z2 = support::context("Z2");
  ASSERT_TRUE(z2.left_unity);
  EXPECT_TRUE(z2.left_unity->strong);
  EXPECT_EQ(z2.left_unity->witness, (FormalSum{Side::left, {{1, 1}}}));
  for (const char* name : {"B", "Z3", "Z4"}) {
    const auto& ctx = support::context(name);
    ASSERT_TRUE(ctx.left_unity && ctx.right_unity) << name;
    EXPECT_TRUE(ctx.left_unity->strong && ctx.right_unity->strong) << name;
  }
  const auto& zz = support::context("Z2xZ2");
  EXPECT_TRUE(zz.left_unity && zz.right_unity);
}

TEST(Unity, AbsentForZeroAction) {
  const auto& ctx = support::context("Z2zero");
  EXPECT_EQ(ctx.L.size(), 1u);
  EXPECT_FALSE(ctx.left_unity);
  EXPECT_FALSE(ctx.right_unity);
}

TEST(Unity, MatrixLeftUnityNeedsTwoTerms) {
  const auto& ctx = support::context("Mat2x1");
  ASSERT_TRUE(ctx.left_unity);
  EXPECT_FALSE(ctx.left_unity->strong);
  const auto& w = ctx.left_unity->witness;
  EXPECT_EQ(realize(ctx.G, w), identity(ctx.G.size()));
  ASSERT_EQ(w.terms.size(), 2u);
  std::set<std::pair<std::string, std::string>> terms;
  for (const auto& [x, al] : w.terms) terms.emplace(ctx.G.S.label(x), ctx.G.Gamma.label(al));
  EXPECT_EQ(terms, (std::set<std::pair<std::string, std::string>>{{"[1;0]", "[1,0]"}, {"[0;1]", "[0,1]"}}));
  ASSERT_TRUE(ctx.right_unity);
  EXPECT_TRUE(ctx.right_unity->strong);
}

TEST(Unity, AgreesWithOracle) {
  for (auto name : support::kCorpus) {
    const auto& ctx = support::context(name);
    for (auto side : {Side::left, Side::right}) {
      auto maps = oracle::operator_maps(ctx.G, side);
      auto id = identity(ctx.G.size()).table;
      bool present = maps.count(id) > 0;
      bool strong = false;
      for (Elem x = 0; x < ctx.G.size(); ++x)
        for (Elem al = 0; al < ctx.G.gamma_size(); ++al)
          if (oracle::realize_terms(ctx.G, side, {{x, al}}) == id) strong = true;
      const auto& u = side == Side::left ? ctx.left_unity : ctx.right_unity;
      EXPECT_EQ(u.has_value(), present) << name;
      if (u) {
        EXPECT_EQ(u->strong, strong) << name;
        EXPECT_EQ(u->strong, u->witness.terms.size() == 1) << name;
        EXPECT_EQ(realize(ctx.G, u->witness).table, id) << name;
      }
    }
  }
}

TEST(BuildOperator, CapacityCap) {
  Limits tight;
  tight.operator_maps = 3;
  EXPECT_THROW(build_operator(corpus::boolean_column_matrices(), Side::left, tight), CapacityError);
  EXPECT_NO_THROW(build_operator(corpus::cyclic(3), Side::left, tight));
}

TEST(BuildOperator, FlippedCompositionIsVisibleOnlyWhenLIsNotCommutative) {
  const auto& mat = support::context("Mat2x1");
  {
    ScopedFaults faults({false, false, true});
    auto flipped = build_operator(mat.G, Side::left);
    bool differs = false;
    for (Elem i = 0; i < flipped.size(); ++i)
      for (Elem j = 0; j < flipped.size(); ++j)
        if (!(flipped.maps[flipped.product(i, j)] == realize(mat.G, formal_product(mat.G, flipped.provenance[i], flipped.provenance[j]))))
          differs = true;
    EXPECT_TRUE(differs);
  }
  const auto& z2 = support::context("Z2");
  ScopedFaults faults({false, false, true});
  auto flipped = build_operator(z2.G, Side::left);
  EXPECT_EQ(flipped.mul, z2.L.mul);
}
