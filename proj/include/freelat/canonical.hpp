#pragma once

// Canonical forms in free lattices.
//
// A meet t = t_1 ... t_k (k > 1) is canonical iff
//   (1) each t_i is a generator or a join,
//   (2) each t_i is canonical,
//   (3) t_i <= t_j never holds for i != j,
//   (4) no joinand t_ij of a join meetand t_i satisfies t_ij >= t.
// Joins are the dual. Canonical forms are unique, so with hash-consing two
// terms are equivalent iff their canonical forms share a node id.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "freelat/order.hpp"
#include "freelat/term.hpp"

namespace freelat {

/// A term certified canonical by the Canonicalizer that produced it.
class CanonicalTerm {
 public:
  Term term() const { return term_; }
  bool certified() const { return true; }

  bool operator==(const CanonicalTerm&) const = default;

 private:
  friend class Canonicalizer;
  explicit CanonicalTerm(Term t) : term_(t) {}
  Term term_;
};

class Canonicalizer {
 public:
  Canonicalizer(TermArena& arena, OrderOracle& order) : arena_(arena), order_(order) {}
  Canonicalizer(const Canonicalizer&) = delete;
  Canonicalizer& operator=(const Canonicalizer&) = delete;

  CanonicalTerm canonicalize(Term t) { return CanonicalTerm(canon(t)); }

  bool is_canonical(Term t) {
    if (arena_.is_gen(t)) return true;
    if (auto it = certified_.find(t.id); it != certified_.end()) return it->second;
    const bool ok = check_node(t);
    certified_[t.id] = ok;
    return ok;
  }

  /// Raw mode: the tree is checked as written, so duplicate or nested
  /// children that the arena constructor would normalize away are violations.
  bool is_canonical(const RawTerm& raw) {
    if (raw.kind == Kind::gen) return true;
    if (raw.kids.size() < 2) return false;
    std::vector<Term> kids;
    for (const RawTerm& k : raw.kids) {
      if (k.kind == raw.kind) return false;  // (1)
      if (!is_canonical(k)) return false;    // (2)
      kids.push_back(intern_raw(arena_, k));
    }
    const Term whole = arena_.make(raw.kind, kids);
    auto below = [&](Term a, Term b) { return raw.kind == Kind::meet ? order_.leq(a, b) : order_.leq(b, a); };
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (i != j && below(kids[i], kids[j])) return false;  // (3)
    for (const RawTerm& k : raw.kids) {
      if (k.kind == Kind::gen) continue;
      for (const RawTerm& kk : k.kids)
        if (below(whole, intern_raw(arena_, kk))) return false;  // (4)
    }
    return true;
  }

  /// Joinands of the canonical form when it is a proper join, else empty.
  std::vector<Term> canonical_joinands(Term v) {
    Term c = canon(v);
    if (!arena_.is_join(c)) return {};
    return {arena_.children(c).begin(), arena_.children(c).end()};
  }

  /// Generators and proper meets.
  bool is_join_irreducible(Term t) { return !arena_.is_join(canon(t)); }

  bool is_meet_irreducible(Term t) { return !arena_.is_meet(canon(t)); }

  std::size_t cache_size() const { return memo_.size(); }

 private:
  Term canon(Term t) {
    if (arena_.is_gen(t)) return t;
    if (auto it = memo_.find(t.id); it != memo_.end()) return it->second;
    const Kind kind = arena_.kind(t);
    std::vector<Term> parts;
    for (Term c : arena_.children(t)) parts.push_back(canon(c));
    const Term result = reduce(kind, std::move(parts));
    memo_[t.id] = result;
    memo_[result.id] = result;
    return result;
  }

  // parts are canonical. Meet case described; joins are handled by reading
  // "below" as the dual order.
  Term reduce(Kind kind, std::vector<Term> parts) {
    auto below = [&](Term a, Term b) { return kind == Kind::meet ? order_.leq(a, b) : order_.leq(b, a); };
    for (;;) {
      Term current = arena_.make(kind, parts);  // flattens and deduplicates
      if (arena_.kind(current) != kind) return current;
      std::vector<Term> items(arena_.children(current).begin(), arena_.children(current).end());

      // Keep only the minimal meetands.
      std::vector<Term> kept;
      for (std::size_t i = 0; i < items.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < items.size() && !dominated; ++j)
          dominated = j != i && below(items[j], items[i]);
        if (!dominated) kept.push_back(items[i]);
      }
      if (kept.size() != items.size()) {
        current = arena_.make(kind, kept);
        if (arena_.kind(current) != kind) return current;
        items.assign(arena_.children(current).begin(), arena_.children(current).end());
      }

      // A joinand above the whole term replaces its meetand; restart.
      bool replaced = false;
      for (std::size_t i = 0; i < items.size() && !replaced; ++i) {
        if (arena_.kind(items[i]) != dual(kind)) continue;
        for (Term sub : arena_.children(items[i])) {
          if (below(current, sub)) {
            items[i] = sub;
            replaced = true;
            break;
          }
        }
      }
      if (!replaced) return current;
      parts = std::move(items);
    }
  }

  bool check_node(Term t) {
    const Kind kind = arena_.kind(t);
    auto below = [&](Term a, Term b) { return kind == Kind::meet ? order_.leq(a, b) : order_.leq(b, a); };
    auto kids = arena_.children(t);
    for (Term c : kids) {
      if (arena_.kind(c) == kind) return false;
      if (!is_canonical(c)) return false;
    }
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (i != j && below(kids[i], kids[j])) return false;
    for (Term c : kids) {
      if (arena_.kind(c) != dual(kind)) continue;
      for (Term sub : arena_.children(c))
        if (below(t, sub)) return false;
    }
    return true;
  }

  TermArena& arena_;
  OrderOracle& order_;
  std::unordered_map<std::uint32_t, Term> memo_;
  std::unordered_map<std::uint32_t, bool> certified_;
};

/// Arena plus its order and canonical-form caches. One per session.
struct Workspace {
  TermArena arena;
  OrderOracle order{arena};
  Canonicalizer canon{arena, order};

  Workspace() = default;
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  Term parse(std::string_view text) { return parse_term(arena, text, names); }
  std::string print(Term t, PrintStyle style = PrintStyle::ascii) const {
    return print_term(arena, t, style, &names);
  }

  GeneratorNames names;
};

}  // namespace freelat
