#pragma once

// Whitman's decision procedure for s <= t in a free lattice.

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "freelat/term.hpp"

namespace freelat {

/// Memoized Whitman order over one arena. Entries are keyed on (id, id);
/// a completed entry never changes.
class OrderOracle {
 public:
  explicit OrderOracle(TermArena& arena) : arena_(arena) {}
  OrderOracle(const OrderOracle&) = delete;
  OrderOracle& operator=(const OrderOracle&) = delete;

  bool leq(Term s, Term t) {
    if (s == t) return true;
    const std::uint64_t key = (static_cast<std::uint64_t>(s.id) << 32) | t.id;
    if (auto it = cache_.find(key); it != cache_.end()) {
      if (it->second == State::in_progress) throw ConsistencyError("cycle in order recursion");
      return it->second == State::yes;
    }
    cache_.emplace(key, State::in_progress);
    const bool result = decide(s, t);
    cache_[key] = result ? State::yes : State::no;
    return result;
  }

  bool geq(Term s, Term t) { return leq(t, s); }

  bool equiv(Term s, Term t) { return leq(s, t) && leq(t, s); }

  /// No member is below the join, or above the meet, of the others.
  ///
  /// Only the full complement Y = xs \ {x} is tested. For any nonempty
  /// Y' within it, join(Y') <= join(Y) and meet(Y') >= meet(Y), so
  /// x <= join(Y') would give x <= join(Y) and x >= meet(Y') would give
  /// x >= meet(Y). The complement test therefore covers every subset.
  bool is_independent(std::span<const Term> xs) {
    if (xs.size() < 2) return true;
    std::vector<Term> others;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      others.clear();
      for (std::size_t j = 0; j < xs.size(); ++j)
        if (j != i) others.push_back(xs[j]);
      if (leq(xs[i], arena_.join(others))) return false;
      if (leq(arena_.meet(others), xs[i])) return false;
    }
    return true;
  }

  std::size_t cache_size() const { return cache_.size(); }
  void clear_cache() { cache_.clear(); }

  TermArena& arena() { return arena_; }

 private:
  enum class State : std::uint8_t { in_progress, yes, no };

  bool decide(Term s, Term t) {
    const Kind ks = arena_.kind(s);
    const Kind kt = arena_.kind(t);
    if (ks == Kind::join) {
      for (Term si : arena_.children(s))
        if (!leq(si, t)) return false;
      return true;
    }
    if (kt == Kind::meet) {
      for (Term tj : arena_.children(t))
        if (!leq(s, tj)) return false;
      return true;
    }
    // s is a generator or a meet; t is a generator or a join.
    if (ks == Kind::gen && kt == Kind::gen) return arena_.generator(s) == arena_.generator(t);
    if (ks == Kind::meet) {
      for (Term si : arena_.children(s))
        if (leq(si, t)) return true;
    }
    if (kt == Kind::join) {
      for (Term tj : arena_.children(t))
        if (leq(s, tj)) return true;
    }
    return false;
  }

  TermArena& arena_;
  std::unordered_map<std::uint64_t, State> cache_;
};

/// The same recursion with no memo table. Exponential on shared DAGs; used
/// to check that memoization does not change any answer.
inline bool leq_unmemoized(const TermArena& arena, Term s, Term t) {
  if (s == t) return true;
  const Kind ks = arena.kind(s);
  const Kind kt = arena.kind(t);
  if (ks == Kind::join) {
    for (Term si : arena.children(s))
      if (!leq_unmemoized(arena, si, t)) return false;
    return true;
  }
  if (kt == Kind::meet) {
    for (Term tj : arena.children(t))
      if (!leq_unmemoized(arena, s, tj)) return false;
    return true;
  }
  if (ks == Kind::gen && kt == Kind::gen) return arena.generator(s) == arena.generator(t);
  if (ks == Kind::meet)
    for (Term si : arena.children(s))
      if (leq_unmemoized(arena, si, t)) return true;
  if (kt == Kind::join)
    for (Term tj : arena.children(t))
      if (leq_unmemoized(arena, s, tj)) return true;
  return false;
}

}  // namespace freelat
