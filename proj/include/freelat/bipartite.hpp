#pragma once

// Finite bipartite graphs and bipartite posets, niceness, and a brute-force
// evaluator for existential-universal sentences in the poset language.
//
// A graph has an "up" sort A and a "down" sort B with edges from A to B. The
// matching poset puts A on top: b < a iff (a, b) is an edge. Elements are
// indexed up list first, then down list.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "freelat/canonical.hpp"
#include "freelat/error.hpp"

namespace freelat {

class BipartiteStructure {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // (up index, down index)

  BipartiteStructure() = default;

  BipartiteStructure(std::vector<std::string> up, std::vector<std::string> down,
                     const std::vector<std::pair<std::string, std::string>>& edges)
      : up_(std::move(up)), down_(std::move(down)) {
    std::set<std::string> names;
    for (const auto& n : up_)
      if (!names.insert(n).second) throw ValidationError("duplicate element name '" + n + "'");
    for (const auto& n : down_) {
      if (std::find(up_.begin(), up_.end(), n) != up_.end())
        throw ValidationError("element '" + n + "' is in both up and down");
      if (!names.insert(n).second) throw ValidationError("duplicate element name '" + n + "'");
    }
    for (const auto& [a, b] : edges) {
      auto ia = find(up_, a);
      auto ib = find(down_, b);
      if (!ia) throw ValidationError("edge source '" + a + "' is not an up element");
      if (!ib) throw ValidationError("edge target '" + b + "' is not a down element");
      edges_.insert({*ia, *ib});
    }
  }

  const std::vector<std::string>& up() const { return up_; }
  const std::vector<std::string>& down() const { return down_; }
  const std::set<Edge>& edges() const { return edges_; }

  std::size_t size() const { return up_.size() + down_.size(); }
  bool adjacent(std::size_t a, std::size_t b) const { return edges_.count({a, b}) != 0; }

  /// Name of element i in up-then-down order.
  const std::string& name(std::size_t i) const { return i < up_.size() ? up_[i] : down_[i - up_.size()]; }

  std::optional<std::size_t> index_of(const std::string& name) const {
    if (auto i = find(up_, name)) return *i;
    if (auto i = find(down_, name)) return up_.size() + *i;
    return std::nullopt;
  }

  bool operator==(const BipartiteStructure&) const = default;

 private:
  static std::optional<std::size_t> find(const std::vector<std::string>& v, const std::string& n) {
    auto it = std::find(v.begin(), v.end(), n);
    if (it == v.end()) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  }

  std::vector<std::string> up_;
  std::vector<std::string> down_;
  std::set<Edge> edges_;
};

inline BipartiteStructure structure_from_json(const nlohmann::json& doc) {
  try {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("edge must be a two-element array");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return BipartiteStructure(doc.at("up").get<std::vector<std::string>>(),
                              doc.at("down").get<std::vector<std::string>>(), edges);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed structure document: ") + e.what());
  }
}

inline nlohmann::json structure_to_json(const BipartiteStructure& s) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : s.edges()) edges.push_back({s.up()[a], s.down()[b]});
  return {{"up", s.up()}, {"down", s.down()}, {"edges", edges}};
}

// ---------------------------------------------------------------------------
// Poset view

/// A finite poset given by its order matrix.
struct PosetView {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> le;  // le[i][j]: element i <= element j

  std::size_t size() const { return names.size(); }
  bool lt(std::size_t i, std::size_t j) const { return i != j && le[i][j]; }

  bool operator==(const PosetView&) const = default;
};

inline PosetView graph_to_poset(const BipartiteStructure& s) {
  const std::size_t n = s.size();
  const std::size_t nu = s.up().size();
  PosetView v;
  for (std::size_t i = 0; i < n; ++i) v.names.push_back(s.name(i));
  v.le.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) v.le[i][i] = true;
  for (const auto& [a, b] : s.edges()) v.le[nu + b][a] = true;
  return v;
}

/// Maximal elements become the up sort, in view order. Requires height <= 2.
inline BipartiteStructure poset_to_graph(const PosetView& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (v.lt(i, j) && v.lt(j, k))
          throw ValidationError("three-element chain " + v.names[i] + " < " + v.names[j] + " < " + v.names[k]);
  std::vector<bool> maximal(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.lt(i, j)) maximal[i] = false;
  std::vector<std::string> up, down;
  for (std::size_t i = 0; i < n; ++i) (maximal[i] ? up : down).push_back(v.names[i]);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (v.lt(i, j)) edges.emplace_back(v.names[j], v.names[i]);
  return BipartiteStructure(std::move(up), std::move(down), edges);
}

// ---------------------------------------------------------------------------
// Niceness

struct NicenessReport {
  bool up_size_ok = false;    // |A| >= 3
  bool down_size_ok = false;  // |B| >= 3
  bool up_degrees_ok = false;
  bool down_degrees_ok = false;
  std::vector<std::string> up_violations;    // up elements with < 2 neighbours or no non-neighbour
  std::vector<std::string> down_violations;

  bool nice() const { return up_size_ok && down_size_ok && up_degrees_ok && down_degrees_ok; }
};

inline NicenessReport check_nice(const BipartiteStructure& s) {
  NicenessReport r;
  const std::size_t nu = s.up().size();
  const std::size_t nd = s.down().size();
  r.up_size_ok = nu >= 3;
  r.down_size_ok = nd >= 3;
  for (std::size_t a = 0; a < nu; ++a) {
    std::size_t deg = 0;
    for (std::size_t b = 0; b < nd; ++b) deg += s.adjacent(a, b);
    if (deg < 2 || deg == nd) r.up_violations.push_back(s.up()[a]);
  }
  for (std::size_t b = 0; b < nd; ++b) {
    std::size_t deg = 0;
    for (std::size_t a = 0; a < nu; ++a) deg += s.adjacent(a, b);
    if (deg < 2 || deg == nu) r.down_violations.push_back(s.down()[b]);
  }
  r.up_degrees_ok = r.up_violations.empty();
  r.down_degrees_ok = r.down_violations.empty();
  return r;
}

inline bool is_nice(const BipartiteStructure& s) { return check_nice(s).nice(); }

// ---------------------------------------------------------------------------
// Sentences of the form  exists x1..xk forall y1..yl (S_1 OR ... OR S_p)

struct SentenceVar {
  bool universal = false;  // y-variable when true
  std::size_t index = 0;   // 0-based

  std::string name() const { return (universal ? "y" : "x") + std::to_string(index + 1); }
  bool operator==(const SentenceVar&) const = default;
};

struct Literal {
  bool negated = false;  // "nle" when true
  SentenceVar lhs;
  SentenceVar rhs;

  bool operator==(const Literal&) const = default;
};

using Conjunction = std::vector<Literal>;

struct AESentence {
  std::size_t n_exists = 0;
  std::size_t n_forall = 0;
  std::vector<Conjunction> matrix;

  bool operator==(const AESentence&) const = default;

  void validate() const {
    if (matrix.empty()) throw ValidationError("sentence matrix must have at least one disjunct");
    for (const auto& conj : matrix)
      for (const auto& lit : conj)
        for (const auto& v : {lit.lhs, lit.rhs})
          if (v.index >= (v.universal ? n_forall : n_exists))
            throw ValidationError("undeclared variable " + v.name());
  }
};

inline SentenceVar parse_sentence_var(const std::string& s) {
  if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'y')) {
    if (auto idx = GeneratorNames::explicit_index("x" + s.substr(1)); idx && *idx > 0)
      return SentenceVar{s[0] == 'y', *idx - 1};
  }
  throw ValidationError("bad sentence variable '" + s + "'");
}

inline AESentence sentence_from_json(const nlohmann::json& doc) {
  try {
    AESentence phi;
    phi.n_exists = doc.at("exists").get<std::size_t>();
    phi.n_forall = doc.at("forall").get<std::size_t>();
    for (const auto& conj : doc.at("dnf")) {
      Conjunction c;
      for (const auto& lit : conj) {
        if (!lit.is_object() || lit.size() != 1) throw ValidationError("literal must be {\"le\"|\"nle\": [v, w]}");
        auto it = lit.begin();
        if (it.key() != "le" && it.key() != "nle") throw ValidationError("unknown literal kind '" + it.key() + "'");
        const auto& args = it.value();
        if (!args.is_array() || args.size() != 2) throw ValidationError("literal needs two variables");
        c.push_back(Literal{it.key() == "nle", parse_sentence_var(args[0].get<std::string>()),
                            parse_sentence_var(args[1].get<std::string>())});
      }
      phi.matrix.push_back(std::move(c));
    }
    phi.validate();
    return phi;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed sentence document: ") + e.what());
  }
}

inline nlohmann::json sentence_to_json(const AESentence& phi) {
  nlohmann::json dnf = nlohmann::json::array();
  for (const auto& conj : phi.matrix) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& lit : conj) c.push_back({{lit.negated ? "nle" : "le", {lit.lhs.name(), lit.rhs.name()}}});
    dnf.push_back(c);
  }
  return {{"exists", phi.n_exists}, {"forall", phi.n_forall}, {"dnf", dnf}};
}

using Tuple = std::vector<std::size_t>;

struct EvalResult {
  bool holds = false;
  /// Lowest x-tuple (lexicographic) all of whose y-extensions satisfy the matrix.
  std::optional<Tuple> witness;
  /// Every x-tuple in lexicographic order with its first refuting y-tuple,
  /// or nullopt when none refutes it.
  std::vector<std::pair<Tuple, std::optional<Tuple>>> per_x;
};

namespace detail {

/// Calls f on every tuple of length k over {0..n-1} in lexicographic order.
/// Stops early when f returns false.
template <class F>
void for_each_tuple(std::size_t n, std::size_t k, F&& f) {
  Tuple t(k, 0);
  if (k > 0 && n == 0) return;
  for (;;) {
    if (!f(t)) return;
    std::size_t i = k;
    while (i > 0 && t[i - 1] + 1 == n) t[--i] = 0;
    if (i == 0) return;
    ++t[i - 1];
  }
}

}  // namespace detail

inline bool satisfies_matrix(const AESentence& phi, const PosetView& p, const Tuple& x, const Tuple& y) {
  auto val = [&](const SentenceVar& v) { return v.universal ? y[v.index] : x[v.index]; };
  return std::any_of(phi.matrix.begin(), phi.matrix.end(), [&](const Conjunction& c) {
    return std::all_of(c.begin(), c.end(), [&](const Literal& l) { return p.le[val(l.lhs)][val(l.rhs)] != l.negated; });
  });
}

inline EvalResult eval_ae_sentence(const AESentence& phi, const PosetView& p) {
  phi.validate();
  EvalResult r;
  detail::for_each_tuple(p.size(), phi.n_exists, [&](const Tuple& x) {
    std::optional<Tuple> refuter;
    detail::for_each_tuple(p.size(), phi.n_forall, [&](const Tuple& y) {
      if (satisfies_matrix(phi, p, x, y)) return true;
      refuter = y;
      return false;
    });
    if (!refuter && !r.witness) r.witness = x;
    r.per_x.emplace_back(x, refuter);
    return true;
  });
  r.holds = r.witness.has_value();
  return r;
}

inline EvalResult eval_ae_sentence(const AESentence& phi, const BipartiteStructure& s) {
  return eval_ae_sentence(phi, graph_to_poset(s));
}

// ---------------------------------------------------------------------------

/// A set of lattice elements read as a bipartite poset under the Whitman order.
struct TermPoset {
  BipartiteStructure structure;
  std::vector<Term> up;
  std::vector<Term> down;
};

/// Maximal terms form the up sort; names are the ascii prints.
inline TermPoset poset_from_terms(Workspace& ws, std::span<const Term> ts) {
  PosetView v;
  for (Term t : ts) v.names.push_back(ws.print(t));
  v.le.assign(ts.size(), std::vector<bool>(ts.size(), false));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j) v.le[i][j] = ws.order.leq(ts[i], ts[j]);
  TermPoset out;
  out.structure = poset_to_graph(v);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (v.lt(i, j)) maximal = false;
    (maximal ? out.up : out.down).push_back(ts[i]);
  }
  return out;
}

}  // namespace freelat
