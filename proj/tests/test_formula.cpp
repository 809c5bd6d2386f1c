#include <gtest/gtest.h>

#include "freelat/reduction.hpp"
#include "support/data.hpp"
#include "support/fo_eval.hpp"

using namespace freelat;

namespace freelat::fo {
void PrintTo(const Formula& f, std::ostream* os) { *os << to_sexp(f); }
}  // namespace freelat::fo

namespace {

using oracle::FiniteLattice;

std::vector<FiniteLattice> small_lattices() {
  return {FiniteLattice::n5(), FiniteLattice::m3(), FiniteLattice::boolean(3)};
}

// The E relation computed straight from its definition with lattice joins.
bool e_direct(const FiniteLattice& L, int t, int u) {
  const int n = static_cast<int>(L.size());
  auto lt = [&](int a, int b) { return a != b && L.le(a, b); };
  for (int v = 0; v < n; ++v) {
    const int uv = L.join(u, v);
    if (!L.le(t, uv) || L.le(t, u) || L.le(t, v)) continue;
    bool ok = true;
    for (int r = 0; r < n && ok; ++r)
      for (int s = 0; s < n && ok; ++s)
        if (lt(r, u) && lt(s, u) && L.le(t, L.join(L.join(r, s), v))) ok = false;
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z) {
        const int yz = L.join(y, z);
        if (L.le(t, yz) && L.le(yz, uv) && !L.le(t, y) && !L.le(t, z) && yz != uv) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

TEST(FormulaSemantics, LubAndGlb) {
  for (const auto& L : small_lattices()) {
    PhiStarBuilder b;
    fo::Formula lub = b.is_lub("Z", {"A", "B"});
    fo::Formula glb = b.is_glb("Z", {"A", "B"});
    for (int a = 0; a < static_cast<int>(L.size()); ++a)
      for (int c = 0; c < static_cast<int>(L.size()); ++c)
        for (int z = 0; z < static_cast<int>(L.size()); ++z) {
          oracle::Env env{{"A", a}, {"B", c}, {"Z", z}};
          EXPECT_EQ(oracle::holds(L, lub, env), z == L.join(a, c));
          EXPECT_EQ(oracle::holds(L, glb, env), z == L.meet(a, c));
        }
  }
}

TEST(FormulaSemantics, ERelationMatchesDefinition) {
  for (const auto& L : small_lattices()) {
    PhiStarBuilder b;
    fo::Formula e = b.e_relation("T", "U");
    for (int t = 0; t < static_cast<int>(L.size()); ++t)
      for (int u = 0; u < static_cast<int>(L.size()); ++u) {
        oracle::Env env{{"T", t}, {"U", u}};
        EXPECT_EQ(oracle::holds(L, e, env), e_direct(L, t, u)) << "t=" << t << " u=" << u;
      }
  }
}

// Keeps the comparison above from passing on an everywhere-false relation.
TEST(FormulaSemantics, ERelationNonTrivialInM3) {
  const auto L = FiniteLattice::m3();
  int related = 0;
  for (int t = 0; t < 5; ++t)
    for (int u = 0; u < 5; ++u) related += e_direct(L, t, u);
  EXPECT_GT(related, 0);
}

TEST(FormulaSemantics, PrimesAndProperMeet) {
  for (const auto& L : small_lattices()) {
    PhiStarBuilder b;
    fo::Formula jp = b.join_prime("X"), mp = b.meet_prime("X"), pm = b.proper_meet("X");
    const int n = static_cast<int>(L.size());
    for (int x = 0; x < n; ++x) {
      bool jprime = true, mprime = true, proper = false;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
          if (L.le(x, L.join(a, c)) && !L.le(x, a) && !L.le(x, c)) jprime = false;
          if (L.le(L.meet(a, c), x) && !L.le(a, x) && !L.le(c, x)) mprime = false;
          if (L.meet(a, c) == x && !L.le(a, x) && !L.le(c, x)) proper = true;
        }
      oracle::Env env{{"X", x}};
      EXPECT_EQ(oracle::holds(L, jp, env), jprime);
      EXPECT_EQ(oracle::holds(L, mp, env), mprime);
      EXPECT_EQ(oracle::holds(L, pm, env), proper);
    }
  }
}

TEST(PhiStar, TopLevelShape) {
  AESentence phi = oracle::load_sentence("phi_top.json");
  fo::Formula f = translate_phi_star(phi);
  ASSERT_EQ(f.op, fo::Op::forall);
  EXPECT_EQ(f.vars, std::vector<std::string>{"W"});
  const fo::Formula& imp = f.args[0];
  ASSERT_EQ(imp.op, fo::Op::implication);
  EXPECT_EQ(imp.args[0], psi_formula());
  const fo::Formula& body = imp.args[1];
  ASSERT_EQ(body.op, fo::Op::exists);
  EXPECT_EQ(body.vars, std::vector<std::string>{"X1"});
  ASSERT_EQ(body.args[0].op, fo::Op::conjunction);
  const fo::Formula& universal = body.args[0].args.back();
  ASSERT_EQ(universal.op, fo::Op::forall);
  EXPECT_EQ(universal.vars, std::vector<std::string>{"Y1"});
  ASSERT_EQ(universal.args[0].op, fo::Op::implication);
  EXPECT_EQ(universal.args[0].args[1], fo::le("Y1", "X1"));
}

TEST(PhiStar, ExistentialOnlySentenceHasNoUniversalBlock) {
  fo::Formula f = translate_phi_star(oracle::load_sentence("phi_strict_pair.json"));
  const fo::Formula& body = f.args[0].args[1];
  ASSERT_EQ(body.op, fo::Op::exists);
  EXPECT_EQ(body.vars, (std::vector<std::string>{"X1", "X2"}));
  const fo::Formula& matrix = body.args[0].args.back();
  EXPECT_EQ(matrix, fo::conj({fo::le("X1", "X2"), fo::neg(fo::le("X2", "X1"))}));
}

TEST(PhiStar, UndeclaredVariableRejected) {
  AESentence phi;
  phi.n_exists = 1;
  phi.matrix = {{Literal{false, {true, 0}, {false, 0}}}};
  EXPECT_THROW(translate_phi_star(phi), ValidationError);
}

TEST(Emit, SmallTptp) {
  fo::Formula f = fo::forall({"A"}, fo::exists({"B"}, fo::conj({fo::le("A", "B"), fo::neg(fo::eq("A", "B"))})));
  EXPECT_EQ(fo::to_tptp(f), "fof(phi_star, conjecture, (! [A] : (? [B] : (leq(A,B) & ~ (A = B))))).\n");
  EXPECT_EQ(fo::to_sexp(f), "(forall (A) (exists (B) (and (leq A B) (not (= A B)))))\n");
}

TEST(Emit, RoundTrip) {
  for (const char* name : {"phi_top.json", "phi_reflexive.json", "phi_strict_pair.json"}) {
    fo::Formula f = translate_phi_star(oracle::load_sentence(name));
    EXPECT_EQ(fo::read_tptp(fo::to_tptp(f)), f) << name;
    EXPECT_EQ(fo::read_sexp(fo::to_sexp(f)), f) << name;
  }
  fo::Formula psi = psi_formula();
  EXPECT_EQ(fo::read_tptp(fo::to_tptp(psi, "psi", "axiom")), psi);
}

TEST(Read, Errors) {
  EXPECT_THROW(fo::read_tptp("fof(a, axiom, leq(x,Y))."), ParseError);
  EXPECT_THROW(fo::read_tptp("fof(a, axiom, (leq(X,Y) & leq(Y,X) | $true))."), ParseError);
  EXPECT_THROW(fo::read_tptp("fof(a, axiom, $true). extra"), ParseError);
  EXPECT_THROW(fo::read_sexp("(xor true false)"), ParseError);
  EXPECT_THROW(fo::read_sexp("(and true"), ParseError);
}

}  // namespace
