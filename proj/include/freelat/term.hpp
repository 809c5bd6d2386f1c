#pragma once

// Hash-consed free-lattice terms.
//
// Every term lives in a TermArena as a node: a generator x_i, or a meet/join
// over at least two children. Construction normalizes eagerly: same-kind
// children are flattened, duplicates removed and the rest sorted by the node
// order below, so structurally equal terms always receive the same id.
//
// Node order: generators by index, then meets, then joins; inside a kind,
// lexicographic on the child id sequence.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "freelat/error.hpp"

namespace freelat {

enum class Kind : std::uint8_t { gen = 0, meet = 1, join = 2 };

inline Kind dual(Kind k) {
  return k == Kind::meet ? Kind::join : k == Kind::join ? Kind::meet : Kind::gen;
}

struct GeneratorId {
  std::uint32_t index = 1;

  auto operator<=>(const GeneratorId&) const = default;
};

/// Handle to an interned node. Only meaningful together with its arena.
struct Term {
  std::uint32_t id = 0;

  auto operator<=>(const Term&) const = default;
};

class TermArena {
 public:
  TermArena() = default;
  TermArena(const TermArena&) = delete;
  TermArena& operator=(const TermArena&) = delete;

  Term gen(GeneratorId g) {
    if (g.index == 0) throw ConstructionError("generator index must be >= 1");
    return intern(Kind::gen, g.index, {});
  }
  Term gen(std::uint32_t index) { return gen(GeneratorId{index}); }

  Term meet(std::span<const Term> parts) { return make(Kind::meet, parts); }
  Term join(std::span<const Term> parts) { return make(Kind::join, parts); }
  Term meet(std::initializer_list<Term> parts) { return make(Kind::meet, {parts.begin(), parts.size()}); }
  Term join(std::initializer_list<Term> parts) { return make(Kind::join, {parts.begin(), parts.size()}); }

  /// mk_meet / mk_join selected by kind; kind must not be Kind::gen.
  Term make(Kind kind, std::span<const Term> parts) {
    if (kind == Kind::gen) throw ConstructionError("cannot build a generator from parts");
    if (parts.empty()) throw ConstructionError("empty meet/join");
    std::vector<Term> flat;
    flat.reserve(parts.size());
    for (Term p : parts) {
      check(p);
      if (this->kind(p) == kind) {
        auto kids = children(p);
        flat.insert(flat.end(), kids.begin(), kids.end());
      } else {
        flat.push_back(p);
      }
    }
    std::sort(flat.begin(), flat.end(), [this](Term a, Term b) { return node_less(a, b); });
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return intern(kind, 0, std::move(flat));
  }

  Kind kind(Term t) const { return nodes_[t.id].kind; }
  bool is_gen(Term t) const { return kind(t) == Kind::gen; }
  bool is_meet(Term t) const { return kind(t) == Kind::meet; }
  bool is_join(Term t) const { return kind(t) == Kind::join; }

  GeneratorId generator(Term t) const { return GeneratorId{nodes_[t.id].gen}; }
  std::span<const Term> children(Term t) const { return nodes_[t.id].kids; }

  std::size_t size() const { return nodes_.size(); }
  bool contains(Term t) const { return t.id < nodes_.size(); }

  bool node_less(Term a, Term b) const {
    if (a == b) return false;
    const Node& x = nodes_[a.id];
    const Node& y = nodes_[b.id];
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.kind == Kind::gen) return x.gen < y.gen;
    return std::lexicographical_compare(x.kids.begin(), x.kids.end(), y.kids.begin(), y.kids.end());
  }

  /// Number of leaves and operators when the DAG is unfolded into a tree.
  /// Saturates at UINT64_MAX.
  std::uint64_t tree_size(Term t) const {
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    std::function<std::uint64_t(Term)> go = [&](Term u) -> std::uint64_t {
      if (is_gen(u)) return 1;
      if (auto it = memo.find(u.id); it != memo.end()) return it->second;
      std::uint64_t total = 1;
      for (Term c : children(u)) {
        std::uint64_t s = go(c);
        total = (total > UINT64_MAX - s) ? UINT64_MAX : total + s;
      }
      memo.emplace(u.id, total);
      return total;
    };
    return go(t);
  }

  /// Number of distinct nodes reachable from t.
  std::size_t dag_size(Term t) const {
    std::set<std::uint32_t> seen;
    std::vector<Term> stack{t};
    while (!stack.empty()) {
      Term u = stack.back();
      stack.pop_back();
      if (!seen.insert(u.id).second) continue;
      for (Term c : children(u)) stack.push_back(c);
    }
    return seen.size();
  }

 private:
  struct Node {
    Kind kind;
    std::uint32_t gen;
    std::vector<Term> kids;
  };

  struct Key {
    Kind kind;
    std::uint32_t gen;
    std::vector<Term> kids;
    bool operator==(const Key&) const = default;
  };

  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ULL ^ k.gen;
      for (Term c : k.kids) h = (h ^ c.id) * 0x100000001b3ULL + (h >> 29);
      return h;
    }
  };

  void check(Term t) const {
    if (!contains(t)) throw ConstructionError("term does not belong to this arena");
  }

  Term intern(Kind kind, std::uint32_t gen, std::vector<Term> kids) {
    Key key{kind, gen, std::move(kids)};
    if (auto it = index_.find(key); it != index_.end()) return Term{it->second};
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(Node{kind, gen, key.kids});
    index_.emplace(std::move(key), id);
    return Term{id};
  }

  std::vector<Node> nodes_;
  std::unordered_map<Key, std::uint32_t, KeyHash> index_;
};

/// Generators occurring in t.
inline std::set<GeneratorId> vars(const TermArena& arena, Term t) {
  std::set<GeneratorId> out;
  std::set<std::uint32_t> seen;
  std::vector<Term> stack{t};
  while (!stack.empty()) {
    Term u = stack.back();
    stack.pop_back();
    if (!seen.insert(u.id).second) continue;
    if (arena.is_gen(u)) {
      out.insert(arena.generator(u));
    } else {
      for (Term c : arena.children(u)) stack.push_back(c);
    }
  }
  return out;
}

/// Homomorphic replacement of generators. Every generator of t must be mapped.
inline Term substitute(TermArena& arena, Term t, const std::map<GeneratorId, Term>& sub) {
  std::unordered_map<std::uint32_t, Term> memo;
  std::function<Term(Term)> go = [&](Term u) -> Term {
    if (auto it = memo.find(u.id); it != memo.end()) return it->second;
    Term result;
    if (arena.is_gen(u)) {
      auto it = sub.find(arena.generator(u));
      if (it == sub.end())
        throw ConstructionError("substitution has no image for x" + std::to_string(arena.generator(u).index));
      result = it->second;
    } else {
      std::vector<Term> kids(arena.children(u).begin(), arena.children(u).end());
      for (Term& k : kids) k = go(k);
      result = arena.make(arena.kind(u), kids);
    }
    memo.emplace(u.id, result);
    return result;
  };
  return go(t);
}

// ---------------------------------------------------------------------------
// Generator naming

/// Maps generator names to indices. "x<digits>" always denotes that index;
/// other identifiers take the smallest index not yet claimed, in order of
/// first occurrence, unless bound explicitly.
class GeneratorNames {
 public:
  /// Binds names to 1, 2, ... in the given order (the --vars list).
  void bind_in_order(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) bind(names[i], static_cast<std::uint32_t>(i + 1));
  }

  /// Claims every explicit x<digits> index occurring in text so that named
  /// generators never collide with them.
  void reserve_explicit(std::string_view text) {
    for (std::size_t i = 0; i < text.size();) {
      if (std::isalpha(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
        if (auto idx = explicit_index(text.substr(i, j - i)); idx && *idx > 0) claimed_.insert(*idx);
        i = j;
      } else {
        ++i;
      }
    }
  }

  std::uint32_t resolve(const std::string& name) {
    if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
    if (auto idx = explicit_index(name)) {
      if (*idx == 0) throw ConstructionError("generator index must be >= 1");
      claimed_.insert(*idx);
      return *idx;
    }
    std::uint32_t next = 1;
    while (claimed_.count(next)) ++next;
    bind(name, next);
    return next;
  }

  /// Display name: a bound name if any, otherwise x<index>.
  std::string name_of(GeneratorId g) const {
    if (auto it = by_index_.find(g.index); it != by_index_.end()) return it->second;
    return "x" + std::to_string(g.index);
  }

  bool has_custom_names() const { return !by_index_.empty(); }

  static std::optional<std::uint32_t> explicit_index(std::string_view name) {
    if (name.size() < 2 || name[0] != 'x') return std::nullopt;
    std::uint64_t v = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > UINT32_MAX) return std::nullopt;
    }
    return static_cast<std::uint32_t>(v);
  }

 private:
  void bind(const std::string& name, std::uint32_t index) {
    by_name_[name] = index;
    if (!explicit_index(name)) by_index_[index] = name;
    claimed_.insert(index);
  }

  std::map<std::string, std::uint32_t> by_name_;
  std::map<std::uint32_t, std::string> by_index_;
  std::set<std::uint32_t> claimed_;
};

// ---------------------------------------------------------------------------
// Raw (unnormalized) trees, as written in the input text.

struct RawTerm {
  Kind kind = Kind::gen;
  std::uint32_t gen = 0;
  std::vector<RawTerm> kids;
};

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, GeneratorNames& names) : text_(text), names_(names) {}

  RawTerm parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty term", pos_);
    RawTerm t = sum();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return t;
  }

 private:
  RawTerm sum() { return chain(Kind::join, '+'); }
  RawTerm prod() { return chain(Kind::meet, '*'); }

  RawTerm chain(Kind kind, char op) {
    RawTerm first = kind == Kind::join ? prod() : atom();
    std::vector<RawTerm> parts;
    parts.push_back(std::move(first));
    for (;;) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == op) {
        ++pos_;
        parts.push_back(kind == Kind::join ? prod() : atom());
      } else {
        break;
      }
    }
    if (parts.size() == 1) return std::move(parts.front());
    return RawTerm{kind, 0, std::move(parts)};
  }

  RawTerm atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of term", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RawTerm inner = sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto idx = GeneratorNames::explicit_index(name); idx && *idx == 0)
        throw ParseError("generator index 0", start);
      return RawTerm{Kind::gen, names_.resolve(name), {}};
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  GeneratorNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses without any normalization; '*' binds tighter than '+'.
inline RawTerm parse_raw_term(std::string_view text, GeneratorNames& names) {
  names.reserve_explicit(text);
  return detail::TermParser(text, names).parse();
}

inline RawTerm parse_raw_term(std::string_view text) {
  GeneratorNames names;
  return parse_raw_term(text, names);
}

inline Term intern_raw(TermArena& arena, const RawTerm& raw) {
  if (raw.kind == Kind::gen) return arena.gen(raw.gen);
  std::vector<Term> kids;
  kids.reserve(raw.kids.size());
  for (const RawTerm& k : raw.kids) kids.push_back(intern_raw(arena, k));
  return arena.make(raw.kind, kids);
}

inline Term parse_term(TermArena& arena, std::string_view text, GeneratorNames& names) {
  return intern_raw(arena, parse_raw_term(text, names));
}

inline Term parse_term(TermArena& arena, std::string_view text) {
  GeneratorNames names;
  return parse_term(arena, text, names);
}

// ---------------------------------------------------------------------------
// Printing

enum class PrintStyle { ascii, paper };

namespace detail {

template <class NameFn, class KindFn, class KidsFn, class Node>
void print_node(std::string& out, const Node& n, PrintStyle style, const NameFn& name, const KindFn& kind_of,
                const KidsFn& kids_of) {
  Kind k = kind_of(n);
  if (k == Kind::gen) {
    out += name(n);
    return;
  }
  const char* sep = k == Kind::join ? "+" : (style == PrintStyle::ascii ? "*" : "");
  bool first = true;
  for (const auto& c : kids_of(n)) {
    if (!first) out += sep;
    first = false;
    Kind ck = kind_of(c);
    // '*' binds tighter, so only join-under-meet and same-kind nesting need parentheses.
    bool paren = ck == k || (k == Kind::meet && ck == Kind::join);
    if (paren) out += '(';
    print_node(out, c, style, name, kind_of, kids_of);
    if (paren) out += ')';
  }
}

}  // namespace detail

inline std::string print_term(const TermArena& arena, Term t, PrintStyle style = PrintStyle::ascii,
                              const GeneratorNames* names = nullptr) {
  std::string out;
  detail::print_node(
      out, t, style,
      [&](Term u) {
        GeneratorId g = arena.generator(u);
        return names ? names->name_of(g) : "x" + std::to_string(g.index);
      },
      [&](Term u) { return arena.kind(u); }, [&](Term u) { return arena.children(u); });
  return out;
}

inline std::string print_raw(const RawTerm& t, PrintStyle style = PrintStyle::ascii) {
  std::string out;
  detail::print_node(
      out, t, style, [](const RawTerm& u) { return "x" + std::to_string(u.gen); },
      [](const RawTerm& u) { return u.kind; }, [](const RawTerm& u) -> const std::vector<RawTerm>& { return u.kids; });
  return out;
}

}  // namespace freelat
