#pragma once

// Whitman's embedding of a countably generated free lattice into F_3.
//
//   f1(p,q,r) = (p + qr)(q + pr)      f3(p,q,r) = p(q + r) + q(p + r)
//   f2(p,q,r) = (p + qr)(r + pq)      f4(p,q,r) = p(q + r) + r(p + q)
//
// Stages: X_3 = (x1, x2, x3); X_{k+1} keeps all but the last three members
// of X_k and appends f1..f4 of those three. Member k never changes after
// stage k+3, which gives z_k = f1(p, q, r) with p, q, r the tail of X_{k+2}.
//
// Applying f1..f4 to the head (v1, v2, v3) of X_5 instead would put v1, v2
// in X_6 twice and break independence, so the tail is used and every stage
// is certified independent.

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "freelat/canonical.hpp"

namespace freelat {

/// f_i(p, q, r) built syntactically; i in 1..4.
inline Term f_poly(TermArena& a, int i, Term p, Term q, Term r) {
  switch (i) {
    case 1: return a.meet({a.join({p, a.meet({q, r})}), a.join({q, a.meet({p, r})})});
    case 2: return a.meet({a.join({p, a.meet({q, r})}), a.join({r, a.meet({p, q})})});
    case 3: return a.join({a.meet({p, a.join({q, r})}), a.meet({q, a.join({p, r})})});
    case 4: return a.join({a.meet({p, a.join({q, r})}), a.meet({r, a.join({p, q})})});
    default: throw ConstructionError("f_poly index must be 1..4, got " + std::to_string(i));
  }
}

/// f_i with every pairwise meet y_i y_j and join y_i + y_j replaced by its
/// canonical form, as assumed before the f_i are claimed canonical.
inline Term f_poly_canonical_args(Workspace& ws, int i, Term p, Term q, Term r) {
  auto& a = ws.arena;
  auto m = [&](Term s, Term t) { return ws.canon.canonicalize(a.meet({s, t})).term(); };
  auto j = [&](Term s, Term t) { return ws.canon.canonicalize(a.join({s, t})).term(); };
  switch (i) {
    case 1: return a.meet({a.join({p, m(q, r)}), a.join({q, m(p, r)})});
    case 2: return a.meet({a.join({p, m(q, r)}), a.join({r, m(p, q)})});
    case 3: return a.join({a.meet({p, j(q, r)}), a.meet({q, j(p, r)})});
    case 4: return a.join({a.meet({p, j(q, r)}), a.meet({r, j(p, q)})});
    default: throw ConstructionError("f_poly index must be 1..4, got " + std::to_string(i));
  }
}

/// For each j = 1..4: f_j(y1, y2, y3) with canonical pairwise meets/joins is
/// already canonical, i.e. canonicalization returns the same node and the
/// condition checker accepts it.
inline std::array<bool, 4> check_fj_canonical(Workspace& ws, Term y1, Term y2, Term y3) {
  std::array<bool, 4> ok{};
  for (int i = 1; i <= 4; ++i) {
    Term f = f_poly_canonical_args(ws, i, y1, y2, y3);
    ok[static_cast<std::size_t>(i - 1)] = ws.canon.canonicalize(f).term() == f && ws.canon.is_canonical(f);
  }
  return ok;
}

struct ChainOptions {
  /// Stages X_k with k <= this bound are checked for independence.
  std::size_t verify_independence_up_to = 11;
};

struct GeneratorChain {
  std::vector<std::vector<Term>> stages;  // stages[i] is X_{i+3}
  std::vector<Term> z;                    // z[k-1] = z_k
  std::vector<bool> stage_independent;    // per stage; only set for verified stages
  std::size_t verified_stages = 0;
  bool fj_canonical = true;               // every appended f_j was already canonical
};

/// z_1..z_n together with every stage needed to reach them.
inline GeneratorChain generator_chain(Workspace& ws, std::size_t n, ChainOptions opts = {}) {
  if (n == 0) throw ConstructionError("generator chain needs n >= 1");
  GeneratorChain chain;
  chain.stages.push_back({ws.arena.gen(1), ws.arena.gen(2), ws.arena.gen(3)});
  while (chain.stages.back().size() < n + 3) {
    const auto& prev = chain.stages.back();
    std::vector<Term> next(prev.begin(), prev.end() - 3);
    const Term p = prev[prev.size() - 3], q = prev[prev.size() - 2], r = prev[prev.size() - 1];
    for (int i = 1; i <= 4; ++i) {
      Term f = f_poly_canonical_args(ws, i, p, q, r);
      Term c = ws.canon.canonicalize(f).term();
      if (c != f || !ws.canon.is_canonical(c)) chain.fj_canonical = false;
      next.push_back(c);
    }
    chain.stages.push_back(std::move(next));
  }
  for (const auto& stage : chain.stages) {
    if (stage.size() > opts.verify_independence_up_to) {
      chain.stage_independent.push_back(false);
      continue;
    }
    if (!ws.order.is_independent(stage))
      throw ConsistencyError("stage X_" + std::to_string(stage.size()) + " is not independent");
    chain.stage_independent.push_back(true);
    ++chain.verified_stages;
  }
  const auto& last = chain.stages.back();
  chain.z.assign(last.begin(), last.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = 0; k < n; ++k)
    if (!ws.arena.is_meet(chain.z[k]))
      throw ConsistencyError("z_" + std::to_string(k + 1) + " is not a proper meet");
  return chain;
}

/// The homomorphism x_j -> z_j.
inline Term zeta(Workspace& ws, Term t, const GeneratorChain& chain) {
  std::map<GeneratorId, Term> sub;
  for (GeneratorId g : vars(ws.arena, t)) {
    if (g.index > chain.z.size())
      throw ConstructionError("generator chain too short: x" + std::to_string(g.index) + " needs z_" +
                              std::to_string(g.index) + ", have " + std::to_string(chain.z.size()));
    sub.emplace(g, chain.z[g.index - 1]);
  }
  return substitute(ws.arena, t, sub);
}

}  // namespace freelat
