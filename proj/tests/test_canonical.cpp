#include <gtest/gtest.h>

#include "freelat/canonical.hpp"
#include "freelat/whitman_embed.hpp"
#include "support/oracles.hpp"

using namespace freelat;

namespace {

TEST(Canonical, Absorption) {
  Workspace ws;
  EXPECT_EQ(ws.canon.canonicalize(ws.parse("x1*(x1+x2)")).term(), ws.parse("x1"));
  EXPECT_EQ(ws.canon.canonicalize(ws.parse("x1+x1*x2")).term(), ws.parse("x1"));
}

// The joinand x1*(x2+x3) of the second meetand is above the whole term, so it
// replaces that meetand; flattening then drops the duplicate x1.
TEST(Canonical, ReplacementRule) {
  Workspace ws;
  Term t = ws.parse("x1*(x2 + x1*(x2+x3))");
  EXPECT_FALSE(ws.canon.is_canonical(t));
  EXPECT_EQ(ws.canon.canonicalize(t).term(), ws.parse("x1*(x2+x3)"));
}

TEST(Canonical, Conditions) {
  Workspace ws;
  EXPECT_TRUE(ws.canon.is_canonical(ws.parse("(x1+x2)*(x1+x3)")));
  EXPECT_TRUE(ws.canon.is_canonical(ws.parse("x1")));
  EXPECT_FALSE(ws.canon.is_canonical(ws.parse("x1*(x1+x2)")));           // (3)
  EXPECT_FALSE(ws.canon.is_canonical(ws.parse("x1*(x2+x1*x3) + x1*x2"))); // (3) for the join
}

TEST(Canonical, RawModeSeesMalformedShapes) {
  Workspace ws;
  EXPECT_FALSE(ws.canon.is_canonical(parse_raw_term("x1+x1")));
  EXPECT_FALSE(ws.canon.is_canonical(parse_raw_term("(x1+x2)+x3")));
  EXPECT_TRUE(ws.canon.is_canonical(parse_raw_term("x1+x2+x3")));
  EXPECT_TRUE(ws.canon.is_canonical(parse_raw_term("(x1+x2)*(x1+x3)")));
  EXPECT_FALSE(ws.canon.is_canonical(parse_raw_term("x1*(x2 + x1*(x2+x3))")));
}

TEST(Canonical, FigureOneWordIsCanonical) {
  Workspace ws;
  Term w = ws.parse("(x1 + x2*x3*x4*x6 + x3*x4*x7 + x4*x8)*(x2 + x3*x4*x7 + x4*x8)*(x3 + x1*x2*x5 + x4*x8)*(x4 + x1*x2*x5)");
  EXPECT_TRUE(ws.canon.is_canonical(w));
  EXPECT_EQ(ws.canon.canonicalize(w).term(), w);
}

TEST(Canonical, Joinands) {
  Workspace ws;
  auto j = ws.canon.canonical_joinands(ws.parse("x1+x2"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0], ws.parse("x1"));
  EXPECT_EQ(j[1], ws.parse("x2"));
  EXPECT_TRUE(ws.canon.canonical_joinands(ws.parse("x1 + x1*x2")).empty());
  EXPECT_TRUE(ws.canon.canonical_joinands(ws.parse("x1")).empty());
}

TEST(Canonical, JoinIrreducible) {
  Workspace ws;
  EXPECT_TRUE(ws.canon.is_join_irreducible(ws.parse("x1")));
  EXPECT_FALSE(ws.canon.is_join_irreducible(ws.parse("x1+x2")));
  EXPECT_TRUE(ws.canon.is_join_irreducible(ws.parse("(x1+x2*x3)*(x2+x1*x3)")));
  // A join that collapses to a meet is join irreducible.
  EXPECT_TRUE(ws.canon.is_join_irreducible(ws.parse("x1*x2 + x1*x2*x3")));
}

TEST(Canonical, FjCollapsesOnEqualArguments) {
  Workspace ws;
  Term x = ws.parse("x1");
  EXPECT_EQ(ws.canon.canonicalize(f_poly(ws.arena, 2, x, x, x)).term(), x);
}

TEST(Canonical, FjOfGeneratorsUnchanged) {
  Workspace ws;
  Term x1 = ws.parse("x1"), x2 = ws.parse("x2"), x3 = ws.parse("x3");
  for (bool ok : check_fj_canonical(ws, x1, x2, x3)) EXPECT_TRUE(ok);
}

class CanonicalProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CanonicalProperty, SoundIdempotentCertified) {
  Workspace ws;
  oracle::TermGenerator gen(GetParam(), 4, 5);
  const auto p4 = oracle::FiniteLattice::partitions4();
  std::vector<int> assignment(4);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(p4.size()) - 1);
  for (int i = 0; i < 200; ++i) {
    Term t = gen(ws.arena);
    Term c = ws.canon.canonicalize(t).term();
    EXPECT_TRUE(ws.order.equiv(c, t));
    EXPECT_EQ(ws.canon.canonicalize(c).term(), c);
    EXPECT_TRUE(ws.canon.is_canonical(c)) << ws.print(c);
    // Independent check of soundness: same value in the partition lattice.
    for (int k = 0; k < 5; ++k) {
      for (auto& v : assignment) v = pick(gen.rng());
      EXPECT_EQ(p4.eval(ws.arena, c, assignment), p4.eval(ws.arena, t, assignment));
    }
  }
}

TEST_P(CanonicalProperty, CanonicalIdentityDecidesEquivalence) {
  Workspace ws;
  oracle::TermGenerator gen(GetParam() + 1000, 3, 4);
  int equal_pairs = 0;
  for (int i = 0; i < 300; ++i) {
    Term s = gen(ws.arena);
    Term t = i % 3 == 0 ? ws.arena.join({s, ws.arena.meet({s, gen(ws.arena)})}) : gen(ws.arena);
    bool same = ws.canon.canonicalize(s).term() == ws.canon.canonicalize(t).term();
    EXPECT_EQ(same, ws.order.equiv(s, t));
    equal_pairs += same;
  }
  EXPECT_GT(equal_pairs, 50);
}

INSTANTIATE_TEST_SUITE_P(Seeds, CanonicalProperty, ::testing::Values(1u, 2u, 3u));

}  // namespace
