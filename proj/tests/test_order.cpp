#include <gtest/gtest.h>

#include "freelat/canonical.hpp"
#include "freelat/reduction.hpp"
#include "support/oracles.hpp"

using namespace freelat;

namespace {

TEST(Order, BasicCases) {
  Workspace ws;
  EXPECT_TRUE(ws.order.leq(ws.parse("x1*x2"), ws.parse("x1")));
  EXPECT_FALSE(ws.order.leq(ws.parse("x1"), ws.parse("x1*x2")));
  EXPECT_TRUE(ws.order.leq(ws.parse("x1"), ws.parse("x1+x2")));
  EXPECT_FALSE(ws.order.leq(ws.parse("x1"), ws.parse("x2")));
}

// Hand run of the six cases: x1 <= (x1+x2)(x1+x3) splits over the meet into
// x1 <= x1+x2 and x1 <= x1+x3, both true via the joinand x1. The converse is
// meet <= generator, which needs x1+x2 <= x1 or x1+x3 <= x1; both fail on x2
// resp. x3.
TEST(Order, DistributiveShape) {
  Workspace ws;
  Term m = ws.parse("(x1+x2)*(x1+x3)");
  EXPECT_TRUE(ws.order.leq(ws.parse("x1"), m));
  EXPECT_FALSE(ws.order.leq(m, ws.parse("x1")));
}

// Meet below join. The free lattice is not distributive.
TEST(Order, WhitmanCondition) {
  Workspace ws;
  EXPECT_TRUE(ws.order.leq(ws.parse("x1*(x2+x3)"), ws.parse("x1*x2+x3+x1")));
  EXPECT_FALSE(ws.order.leq(ws.parse("x1*(x2+x3)"), ws.parse("x1*x2+x1*x3")));
  EXPECT_TRUE(ws.order.leq(ws.parse("x1*x2+x1*x3"), ws.parse("x1*(x2+x3)")));
}

TEST(Order, XiImageBelowGenerator) {
  Workspace ws;
  // Figure 1 label of q6 lies below x2.
  EXPECT_TRUE(ws.order.leq(ws.parse("x2*x3*x4*x6"), ws.parse("x2")));
  EXPECT_FALSE(ws.order.leq(ws.parse("x2*x3*x4*x6"), ws.parse("x1")));
}

TEST(Order, Equiv) {
  Workspace ws;
  EXPECT_TRUE(ws.order.equiv(ws.parse("x1*(x2+x3)"), ws.parse("x1*(x3+x2)")));
  EXPECT_EQ(ws.parse("(x1+x2)+x3"), ws.parse("x1+(x2+x3)"));
  EXPECT_TRUE(ws.order.equiv(ws.parse("(x1+x2)+x3"), ws.parse("x1+(x2+x3)")));
  EXPECT_FALSE(ws.order.equiv(ws.parse("x1"), ws.parse("x2")));
  EXPECT_TRUE(ws.order.equiv(ws.parse("x1+x1*x2"), ws.parse("x1")));
}

TEST(Order, Independence) {
  Workspace ws;
  std::vector<Term> gens{ws.parse("x1"), ws.parse("x2"), ws.parse("x3")};
  EXPECT_TRUE(ws.order.is_independent(gens));
  std::vector<Term> dep{ws.parse("x1"), ws.parse("x1+x2")};
  EXPECT_FALSE(ws.order.is_independent(dep));
  std::vector<Term> us;
  for (int i = 1; i <= 4; ++i) us.push_back(f_poly(ws.arena, i, gens[0], gens[1], gens[2]));
  EXPECT_TRUE(ws.order.is_independent(us));
  // x1 lies below the join of the others.
  std::vector<Term> above_meet{ws.parse("x1+x2"), ws.parse("x1+x3"), ws.parse("x1")};
  EXPECT_FALSE(ws.order.is_independent(above_meet));
}

// The complement shortcut agrees with testing every subset.
TEST(Order, IndependenceShortcutMatchesAllSubsets) {
  Workspace ws;
  oracle::TermGenerator gen(23, 4, 3);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Term> xs;
    std::set<Term> seen;
    while (xs.size() < 4) {
      Term t = gen(ws.arena);
      if (seen.insert(t).second) xs.push_back(t);
    }
    bool brute = true;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (unsigned mask = 1; mask < (1u << xs.size()); ++mask) {
        if (mask & (1u << i)) continue;
        std::vector<Term> y;
        for (std::size_t j = 0; j < xs.size(); ++j)
          if (mask & (1u << j)) y.push_back(xs[j]);
        if (ws.order.leq(xs[i], ws.arena.join(y)) || ws.order.leq(ws.arena.meet(y), xs[i])) brute = false;
      }
    EXPECT_EQ(ws.order.is_independent(xs), brute);
  }
}

TEST(OrderProperty, MemoizationIsTransparent) {
  Workspace ws;
  oracle::TermGenerator gen(7, 4, 4);
  for (int i = 0; i < 400; ++i) {
    Term s = gen(ws.arena), t = gen(ws.arena);
    EXPECT_EQ(ws.order.leq(s, t), leq_unmemoized(ws.arena, s, t));
  }
}

TEST(OrderProperty, SoundInFiniteLattices) {
  Workspace ws;
  oracle::TermGenerator gen(11, 4, 4);
  const std::vector<oracle::FiniteLattice> lattices{oracle::FiniteLattice::n5(), oracle::FiniteLattice::m3(),
                                                     oracle::FiniteLattice::partitions4(),
                                                     oracle::FiniteLattice::boolean(3)};
  int positives = 0;
  for (int i = 0; i < 600; ++i) {
    Term s = gen(ws.arena);
    Term t = i % 2 ? ws.arena.join({s, gen(ws.arena)}) : gen(ws.arena);
    if (!ws.order.leq(s, t)) continue;
    ++positives;
    for (const auto& l : lattices) EXPECT_TRUE(oracle::order_holds_in(l, ws.arena, s, t, 4, gen.rng(), 20));
  }
  EXPECT_GT(positives, 300);
}

// A term below a generator must mention it.
TEST(OrderProperty, GeneratorOutsideVarsIsNeverAbove) {
  Workspace ws;
  oracle::TermGenerator gen(13, 3, 5);
  Term x4 = ws.arena.gen(4);
  for (int i = 0; i < 300; ++i) EXPECT_FALSE(ws.order.leq(gen(ws.arena), x4));
}

}  // namespace
