#pragma once

// Join covers, refinement, doubly minimal join covers and the E-relation,
// plus the semantic check of the predicate Psi.
//
// E-sets are only computed for canonical proper meets whose meetands are all
// proper joins: there the doubly minimal join covers of t are exactly the
// joinand sets of its meetands. Anything else is UnsupportedShape.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freelat/canonical.hpp"

namespace freelat {

struct JoinCover {
  Term base;
  std::vector<Term> elements;
};

/// Every element of a lies below some element of b.
inline bool refines(OrderOracle& order, std::span<const Term> a, std::span<const Term> b) {
  return std::all_of(a.begin(), a.end(), [&](Term x) {
    return std::any_of(b.begin(), b.end(), [&](Term y) { return order.leq(x, y); });
  });
}

inline bool is_join_cover(Workspace& ws, const JoinCover& c) {
  return !c.elements.empty() && ws.order.leq(c.base, ws.arena.join(c.elements));
}

inline bool is_nontrivial(Workspace& ws, const JoinCover& c) {
  return std::none_of(c.elements.begin(), c.elements.end(), [&](Term a) { return ws.order.leq(c.base, a); });
}

namespace detail {

inline Term require_cover_shape(Workspace& ws, Term t) {
  const Term c = ws.canon.canonicalize(t).term();
  if (ws.arena.is_gen(c))
    throw UnsupportedShape("generator " + ws.print(c) + " is not a proper meet");
  if (ws.arena.is_join(c)) throw UnsupportedShape(ws.print(c) + " is a proper join, not join irreducible");
  for (Term m : ws.arena.children(c))
    if (!ws.arena.is_join(m))
      throw UnsupportedShape("meetand " + ws.print(m) + " of " + ws.print(c) + " is not a proper join");
  return c;
}

inline void sort_terms(const TermArena& arena, std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(), [&](Term a, Term b) { return arena.node_less(a, b); });
}

}  // namespace detail

/// One cover per meetand of the canonical form, in node order.
inline std::vector<JoinCover> doubly_minimal_join_covers(Workspace& ws, Term t) {
  const Term c = detail::require_cover_shape(ws, t);
  std::vector<JoinCover> out;
  for (Term m : ws.arena.children(c)) out.push_back({c, {ws.arena.children(m).begin(), ws.arena.children(m).end()}});
  return out;
}

/// { u : t E u }, sorted in node order. Every element is canonical.
inline std::vector<Term> e_set(Workspace& ws, Term t) {
  std::set<Term> seen;
  std::vector<Term> out;
  for (const JoinCover& cover : doubly_minimal_join_covers(ws, t))
    for (Term u : cover.elements)
      if (seen.insert(u).second) out.push_back(u);
  detail::sort_terms(ws.arena, out);
  return out;
}

// ---------------------------------------------------------------------------
// Psi

struct PsiReport {
  static constexpr std::array<char, 7> kConditions{'a', 'b', 'c', 'd', 'e', 'f', 'g'};

  bool outcome = false;
  /// Indexed by condition a..g; nullopt when the condition was not reached.
  std::array<std::optional<bool>, 7> conditions{};
  std::optional<std::vector<Term>> u_set;
  std::vector<Term> maximal;
  std::vector<Term> minimal;
  std::optional<char> failed_at;
  std::vector<Term> failure_witnesses;
  std::string failure_note;

  std::optional<bool> condition(char c) const { return conditions[static_cast<std::size_t>(c - 'a')]; }
};

/// Evaluates Psi(w) on w itself.
///
/// (b) is checked only against generators in vars(w): Whitman's recursion
/// compares generators of w with the target only, so w <= x is false for
/// every other generator x. The generators are exactly the elements that are
/// both join prime and meet prime.
inline PsiReport psi_check(Workspace& ws, Term w) {
  PsiReport r;
  auto set = [&](char c, bool v) { r.conditions[static_cast<std::size_t>(c - 'a')] = v; };
  auto fail = [&](char c, std::vector<Term> witnesses, std::string note) {
    set(c, false);
    if (!r.failed_at) {
      r.failed_at = c;
      r.failure_witnesses = std::move(witnesses);
      r.failure_note = std::move(note);
    }
  };

  const Term cw = ws.canon.canonicalize(w).term();
  if (!ws.arena.is_meet(cw)) {
    fail('a', {cw}, "canonical form is not a proper meet");
    return r;
  }
  set('a', true);

  for (GeneratorId g : vars(ws.arena, cw)) {
    const Term x = ws.arena.gen(g);
    if (ws.order.leq(cw, x)) {
      fail('b', {x}, "w lies below a generator");
      return r;
    }
  }
  set('b', true);

  // (a) and (b) force every meetand to be a proper join: a generator meetand
  // x would give w <= x.
  std::vector<Term> u = e_set(ws, cw);
  r.u_set = u;
  auto lt = [&](Term a, Term b) { return a != b && ws.order.leq(a, b); };

  for (Term a : u) {
    bool is_max = std::none_of(u.begin(), u.end(), [&](Term t) { return lt(a, t); });
    bool is_min = std::none_of(u.begin(), u.end(), [&](Term t) { return lt(t, a); });
    if (is_max) r.maximal.push_back(a);
    if (is_min) r.minimal.push_back(a);
  }

  // (c) no three-element chain
  {
    std::vector<Term> chain;
    for (Term a : u)
      for (Term b : u)
        for (Term c : u)
          if (chain.empty() && lt(b, a) && lt(c, b)) chain = {a, b, c};
    if (chain.empty())
      set('c', true);
    else
      fail('c', chain, "three-element chain in U");
  }

  if (r.maximal.size() >= 3)
    set('d', true);
  else
    fail('d', r.maximal, "fewer than three maximal elements");
  if (r.minimal.size() >= 3)
    set('e', true);
  else
    fail('e', r.minimal, "fewer than three minimal elements");

  // (f) each maximal u: two distinct minimals below, one minimal not below.
  // (g) dually. Counting is literal, so s1 = u is allowed when u is also
  // minimal; such a u has nothing else comparable to it and still fails.
  auto degree_check = [&](char cond, const std::vector<Term>& from, const std::vector<Term>& to, bool up) {
    for (Term a : from) {
      std::size_t comparable = 0;
      std::size_t incomparable = 0;
      for (Term s : to) {
        bool rel = up ? ws.order.leq(s, a) : ws.order.leq(a, s);
        (rel ? comparable : incomparable)++;
      }
      if (comparable < 2 || incomparable < 1) {
        fail(cond, {a},
             std::string(comparable < 2 ? "fewer than two " : "no ") + (up ? "minimal elements " : "maximal elements ") +
                 (comparable < 2 ? "comparable" : "incomparable"));
        return;
      }
    }
    set(cond, true);
  };
  degree_check('f', r.maximal, r.minimal, true);
  degree_check('g', r.minimal, r.maximal, false);

  r.outcome = std::all_of(r.conditions.begin(), r.conditions.end(), [](const auto& c) { return c.value_or(false); });
  return r;
}

}  // namespace freelat
