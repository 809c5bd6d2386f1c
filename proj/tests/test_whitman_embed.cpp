#include <gtest/gtest.h>

#include "freelat/whitman_embed.hpp"
#include "support/oracles.hpp"

using namespace freelat;

namespace {

TEST(FPoly, GoldensOnGenerators) {
  Workspace ws;
  Term x1 = ws.parse("x1"), x2 = ws.parse("x2"), x3 = ws.parse("x3");
  EXPECT_EQ(f_poly(ws.arena, 1, x1, x2, x3), ws.parse("(x1+x2*x3)*(x2+x1*x3)"));
  EXPECT_EQ(f_poly(ws.arena, 2, x1, x2, x3), ws.parse("(x1+x2*x3)*(x3+x1*x2)"));
  EXPECT_EQ(f_poly(ws.arena, 3, x1, x2, x3), ws.parse("x1*(x2+x3)+x2*(x1+x3)"));
  EXPECT_EQ(f_poly(ws.arena, 4, x1, x2, x3), ws.parse("x1*(x2+x3)+x3*(x1+x2)"));
  EXPECT_THROW(f_poly(ws.arena, 5, x1, x2, x3), ConstructionError);
}

TEST(FPoly, CanonicalOnIndependentTriples) {
  Workspace ws;
  for (bool b : check_fj_canonical(ws, ws.parse("x1"), ws.parse("x2"), ws.parse("x3"))) EXPECT_TRUE(b);
  GeneratorChain chain = generator_chain(ws, 3);
  for (bool b : check_fj_canonical(ws, chain.z[0], chain.z[1], chain.z[2])) EXPECT_TRUE(b);
}

TEST(Chain, FirstStages) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 2);
  ASSERT_GE(chain.stages.size(), 3u);
  std::vector<Term> u;
  for (int i = 1; i <= 4; ++i) u.push_back(f_poly(ws.arena, i, ws.parse("x1"), ws.parse("x2"), ws.parse("x3")));
  EXPECT_EQ(chain.stages[1], u);
  EXPECT_TRUE(ws.order.is_independent(u));
  EXPECT_EQ(chain.z[0], u[0]);
  Term v2 = f_poly(ws.arena, 1, u[1], u[2], u[3]);
  EXPECT_TRUE(ws.order.equiv(chain.z[1], v2));
  EXPECT_EQ(ws.canon.canonicalize(v2).term(), chain.z[1]);
  EXPECT_EQ(chain.stages[2].size(), 5u);
}

TEST(Chain, StagesIndependentAndZAreMeets) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 8);
  EXPECT_TRUE(chain.fj_canonical);
  EXPECT_EQ(chain.verified_stages, 9u);
  EXPECT_EQ(chain.z.size(), 8u);
  for (Term z : chain.z) {
    EXPECT_TRUE(ws.arena.is_meet(z));
    EXPECT_TRUE(ws.canon.is_join_irreducible(z));
    EXPECT_EQ(ws.arena.children(z).size(), 2u);
  }
  // Everything but the last three members of a stage is kept from then on.
  for (const auto& stage : chain.stages)
    for (std::size_t k = 0; k + 3 < stage.size() && k < chain.z.size(); ++k) EXPECT_EQ(stage[k], chain.z[k]);
}

TEST(Chain, DagGrowsLinearly) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 12, {.verify_independence_up_to = 0});
  std::size_t prev = 0;
  for (std::size_t k = 0; k < chain.z.size(); ++k) {
    const std::size_t d = ws.arena.dag_size(chain.z[k]);
    EXPECT_GT(d, prev);
    EXPECT_LE(d - prev, 40u) << "z_" << k + 1;
    prev = d;
  }
  EXPECT_GT(ws.arena.tree_size(chain.z.back()), 1000000u);
}

TEST(Zeta, ChainTooShort) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 2);
  EXPECT_THROW(zeta(ws, ws.parse("x1*x3"), chain), ConstructionError);
  EXPECT_NO_THROW(zeta(ws, ws.parse("x1+x2"), chain));
  EXPECT_THROW(generator_chain(ws, 0), ConstructionError);
}

// zeta is an order embedding, checked on random terms over four generators.
TEST(Zeta, OrderEmbeddingProperty) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 4);
  oracle::TermGenerator gen(17, 4, 3);
  for (int i = 0; i < 200; ++i) {
    Term s = gen(ws.arena), t = gen(ws.arena);
    EXPECT_EQ(ws.order.leq(zeta(ws, s, chain), zeta(ws, t, chain)), ws.order.leq(s, t))
        << ws.print(s) << " vs " << ws.print(t);
  }
}

TEST(Zeta, HomomorphismOnSyntax) {
  Workspace ws;
  GeneratorChain chain = generator_chain(ws, 3);
  Term s = ws.parse("x1*(x2+x3)"), t = ws.parse("x3+x1*x2");
  EXPECT_EQ(zeta(ws, ws.arena.meet({s, t}), chain),
            ws.arena.meet({zeta(ws, s, chain), zeta(ws, t, chain)}));
  EXPECT_EQ(zeta(ws, ws.arena.join({s, t}), chain),
            ws.arena.join({zeta(ws, s, chain), zeta(ws, t, chain)}));
}

}  // namespace
