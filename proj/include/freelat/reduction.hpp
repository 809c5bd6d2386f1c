#pragma once

// From finite bipartite posets to elements of free lattices and back.
//
// Elements q_1..q_m of Q are numbered up list first, then down list.
//   xi(q_i)  = meet of x_j over all q_j >= q_i
//   w_Q      = meet over maximal a of ( xi(a) + sum of xi(b), b minimal, b not <= a )
// When Q is nice, w_Q is canonical, its E-set is exactly xi(Q), and Psi(w_Q)
// holds. Composing with zeta moves the whole picture into F_3.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freelat/bipartite.hpp"
#include "freelat/covers.hpp"
#include "freelat/formula.hpp"
#include "freelat/whitman_embed.hpp"

namespace freelat {

enum class EmbedMode { direct, f3 };

inline std::string to_string(EmbedMode m) { return m == EmbedMode::direct ? "direct" : "f3"; }

/// xi(q_i) for every element, in element order.
inline std::vector<Term> xi_embed(TermArena& arena, const BipartiteStructure& q) {
  const std::size_t nu = q.up().size();
  std::vector<Term> out;
  for (std::size_t i = 0; i < nu; ++i) out.push_back(arena.gen(static_cast<std::uint32_t>(i + 1)));
  for (std::size_t b = 0; b < q.down().size(); ++b) {
    std::vector<Term> above{arena.gen(static_cast<std::uint32_t>(nu + b + 1))};
    for (std::size_t a = 0; a < nu; ++a)
      if (q.adjacent(a, b)) above.push_back(arena.gen(static_cast<std::uint32_t>(a + 1)));
    out.push_back(arena.meet(above));
  }
  return out;
}

/// The w_Q product over arbitrary images of the elements of Q.
inline Term assemble_wQ(TermArena& arena, const BipartiteStructure& q, std::span<const Term> images) {
  const std::size_t nu = q.up().size();
  if (nu == 0) throw EmptyJoinError("Q has no maximal elements");
  std::vector<Term> meetands;
  for (std::size_t a = 0; a < nu; ++a) {
    std::vector<Term> joinands{images[a]};
    for (std::size_t b = 0; b < q.down().size(); ++b)
      if (!q.adjacent(a, b)) joinands.push_back(images[nu + b]);
    if (joinands.size() == 1)
      throw EmptyJoinError("maximal element '" + q.up()[a] + "' is above every minimal element");
    meetands.push_back(arena.join(joinands));
  }
  return arena.meet(meetands);
}

inline Term build_wQ(TermArena& arena, const BipartiteStructure& q) { return assemble_wQ(arena, q, xi_embed(arena, q)); }

// ---------------------------------------------------------------------------
// phi -> phi*

/// Builds the first-order schemas in the language {leq, =}. Joins and meets
/// are expressed through least-upper-bound / greatest-lower-bound
/// subformulas over fresh variables V1, V2, ...
class PhiStarBuilder {
 public:
  using F = fo::Formula;

  std::string fresh() { return "V" + std::to_string(++counter_); }

  /// z is the least upper bound of xs.
  F is_lub(const std::string& z, const std::vector<std::string>& xs) { return bound(z, xs, true); }
  F is_glb(const std::string& z, const std::vector<std::string>& xs) { return bound(z, xs, false); }

  /// exists s (s = join xs and body(s)).
  template <class Body>
  F with_join(const std::vector<std::string>& xs, Body&& body) {
    std::string s = fresh();
    F def = is_lub(s, xs);
    return fo::exists({s}, fo::conj({std::move(def), body(s)}));
  }

  /// t E u:  exists v with
  ///   (i)   t <= u + v
  ///   (ii)  t !<= u and t !<= v
  ///   (iii) r, s < u implies t !<= r + s + v
  ///   (iv)  t <= y + z <= u + v, t !<= y, t !<= z implies y + z = u + v
  F e_relation(const std::string& t, const std::string& u) {
    std::string v = fresh();
    F c1 = with_join({u, v}, [&](const std::string& s) { return fo::le(t, s); });
    F c2 = fo::conj({fo::neg(fo::le(t, u)), fo::neg(fo::le(t, v))});
    std::string r = fresh(), s = fresh();
    F c3 = fo::forall({r, s}, fo::implies(fo::conj({fo::lt(r, u), fo::lt(s, u)}),
                                          with_join({r, s, v}, [&](const std::string& m) { return fo::neg(fo::le(t, m)); })));
    std::string y = fresh(), z = fresh();
    F c4 = fo::forall({y, z}, with_join({y, z}, [&](const std::string& p) {
                        return with_join({u, v}, [&](const std::string& q) {
                          return fo::implies(
                              fo::conj({fo::le(t, p), fo::le(p, q), fo::neg(fo::le(t, y)), fo::neg(fo::le(t, z))}),
                              fo::eq(p, q));
                        });
                      }));
    return fo::exists({v}, fo::conj({std::move(c1), std::move(c2), std::move(c3), std::move(c4)}));
  }

  /// No nontrivial binary join cover; finite covers reduce to binary ones.
  F join_prime(const std::string& x) {
    std::string a = fresh(), b = fresh();
    return fo::forall({a, b}, with_join({a, b}, [&](const std::string& s) {
                        return fo::implies(fo::le(x, s), fo::disj({fo::le(x, a), fo::le(x, b)}));
                      }));
  }

  F meet_prime(const std::string& x) {
    std::string a = fresh(), b = fresh(), m = fresh();
    return fo::forall({a, b}, fo::exists({m}, fo::conj({is_glb(m, {a, b}),
                                                        fo::implies(fo::le(m, x), fo::disj({fo::le(a, x), fo::le(b, x)}))})));
  }

  F proper_meet(const std::string& w) {
    std::string a = fresh(), b = fresh();
    return fo::exists({a, b}, fo::conj({is_glb(w, {a, b}), fo::neg(fo::le(a, w)), fo::neg(fo::le(b, w))}));
  }

  F in_max_u(const std::string& w, const std::string& u) {
    std::string t = fresh();
    return fo::conj({e_relation(w, u), fo::forall({t}, fo::implies(fo::lt(u, t), fo::neg(e_relation(w, t))))});
  }

  F in_min_u(const std::string& w, const std::string& u) {
    std::string t = fresh();
    return fo::conj({e_relation(w, u), fo::forall({t}, fo::implies(fo::lt(t, u), fo::neg(e_relation(w, t))))});
  }

  /// Psi(w), conditions (a)..(g) in order.
  F psi(const std::string& w) {
    std::vector<F> parts;
    parts.push_back(proper_meet(w));  // (a)
    {
      std::string x = fresh();  // (b)
      parts.push_back(fo::forall({x}, fo::implies(fo::conj({join_prime(x), meet_prime(x)}), fo::neg(fo::le(w, x)))));
    }
    {
      std::string u1 = fresh(), u2 = fresh(), u3 = fresh();  // (c)
      parts.push_back(fo::neg(fo::exists(
          {u1, u2, u3}, fo::conj({e_relation(w, u1), e_relation(w, u2), e_relation(w, u3), fo::lt(u2, u1), fo::lt(u3, u2)}))));
    }
    for (bool top : {true, false}) {  // (d), (e)
      std::string a = fresh(), b = fresh(), c = fresh();
      auto mem = [&](const std::string& v) { return top ? in_max_u(w, v) : in_min_u(w, v); };
      parts.push_back(fo::exists({a, b, c}, fo::conj({mem(a), mem(b), mem(c), fo::neg(fo::eq(a, b)), fo::neg(fo::eq(a, c)),
                                                      fo::neg(fo::eq(b, c))})));
    }
    for (bool top : {true, false}) {  // (f), (g)
      std::string u = fresh(), s1 = fresh(), s2 = fresh(), s3 = fresh();
      auto from = [&](const std::string& v) { return top ? in_max_u(w, v) : in_min_u(w, v); };
      auto to = [&](const std::string& v) { return top ? in_min_u(w, v) : in_max_u(w, v); };
      auto rel = [&](const std::string& s) { return top ? fo::le(s, u) : fo::le(u, s); };
      parts.push_back(fo::forall(
          {u}, fo::implies(from(u), fo::exists({s1, s2, s3}, fo::conj({to(s1), to(s2), to(s3), rel(s1), rel(s2),
                                                                        fo::neg(fo::eq(s1, s2)), fo::neg(rel(s3))})))));
    }
    return fo::conj(std::move(parts));
  }

  /// forall W ( Psi(W) => exists X ( AND_j W E X_j  &  forall Y ( AND_k W E Y_k => OR_j S_j ) ) )
  F phi_star(const AESentence& phi) {
    phi.validate();
    const std::string w = "W";
    auto var = [](const SentenceVar& v) { return (v.universal ? "Y" : "X") + std::to_string(v.index + 1); };
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < phi.n_exists; ++i) xs.push_back("X" + std::to_string(i + 1));
    for (std::size_t i = 0; i < phi.n_forall; ++i) ys.push_back("Y" + std::to_string(i + 1));

    F antecedent = psi(w);
    std::vector<F> x_in_u, y_in_u, disjuncts;
    for (const auto& x : xs) x_in_u.push_back(e_relation(w, x));
    for (const auto& y : ys) y_in_u.push_back(e_relation(w, y));
    for (const auto& c : phi.matrix) {
      std::vector<F> lits;
      for (const auto& l : c) {
        F atom = fo::le(var(l.lhs), var(l.rhs));
        lits.push_back(l.negated ? fo::neg(std::move(atom)) : std::move(atom));
      }
      disjuncts.push_back(fo::conj(std::move(lits)));
    }
    F universal = fo::forall(ys, fo::implies(fo::conj(std::move(y_in_u)), fo::disj(std::move(disjuncts))));
    x_in_u.push_back(std::move(universal));
    F body = fo::exists(xs, fo::conj(std::move(x_in_u)));
    return fo::forall({w}, fo::implies(std::move(antecedent), std::move(body)));
  }

 private:
  F bound(const std::string& z, const std::vector<std::string>& xs, bool upper) {
    std::vector<F> bounds, hyp;
    std::string c = fresh();
    for (const auto& x : xs) {
      bounds.push_back(upper ? fo::le(x, z) : fo::le(z, x));
      hyp.push_back(upper ? fo::le(x, c) : fo::le(c, x));
    }
    bounds.push_back(fo::forall({c}, fo::implies(fo::conj(std::move(hyp)), upper ? fo::le(z, c) : fo::le(c, z))));
    return fo::conj(std::move(bounds));
  }

  std::size_t counter_ = 0;
};

inline fo::Formula translate_phi_star(const AESentence& phi) { return PhiStarBuilder{}.phi_star(phi); }

/// Psi(W) exactly as it appears as the antecedent of translate_phi_star.
inline fo::Formula psi_formula() { return PhiStarBuilder{}.psi("W"); }

// ---------------------------------------------------------------------------
// Verification

enum class Conclusion { phi_star_fails_at_w, phi_holds_on_instance, checks_failed };

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::phi_star_fails_at_w: return "phi_star_fails_at_w";
    case Conclusion::phi_holds_on_instance: return "phi_holds_on_instance";
    case Conclusion::checks_failed: return "checks_failed";
  }
  return "";
}

struct ReductionReport {
  EmbedMode mode = EmbedMode::direct;
  Term wq;
  std::vector<Term> images;  // per element of Q, canonical
  bool canonical_ok = false;
  std::optional<bool> zeta_consistent;  // f3: zeta(build_wQ) has canonical form wq
  std::vector<Term> eset_terms;
  std::optional<std::string> shape_error;
  bool eset_matches_image = false;
  bool order_preserved = false;
  bool iso_ok = false;
  PsiReport psi;

  // Filled by verify_counterexample.
  std::optional<AESentence> phi;
  std::optional<EvalResult> phi_on_q;
  std::optional<EvalResult> phi_on_eset;
  bool evaluations_agree = false;
  std::optional<Conclusion> conclusion;

  bool lemma_items_ok() const { return canonical_ok && iso_ok && psi.outcome && zeta_consistent.value_or(true); }
};

/// Lemma label a check instantiates, by mode.
inline std::string lemma_label(EmbedMode mode, int item) {
  return (mode == EmbedMode::direct ? "4.3(" : "5.5(") + std::to_string(item) + ")";
}

namespace detail {

/// poset_from_terms(eset) is Q transported along the image map.
inline bool recovered_matches(Workspace& ws, const BipartiteStructure& q, const std::vector<Term>& images,
                              const std::vector<Term>& eset) {
  TermPoset rec = poset_from_terms(ws, eset);
  const std::size_t nu = q.up().size();
  std::set<Term> up_images(images.begin(), images.begin() + static_cast<std::ptrdiff_t>(nu));
  std::set<Term> down_images(images.begin() + static_cast<std::ptrdiff_t>(nu), images.end());
  if (std::set<Term>(rec.up.begin(), rec.up.end()) != up_images) return false;
  if (std::set<Term>(rec.down.begin(), rec.down.end()) != down_images) return false;
  std::set<std::pair<std::string, std::string>> want, got;
  for (const auto& [a, b] : q.edges()) want.emplace(ws.print(images[a]), ws.print(images[nu + b]));
  for (const auto& [a, b] : rec.structure.edges()) got.emplace(rec.structure.up()[a], rec.structure.down()[b]);
  return want == got;
}

}  // namespace detail

/// Checks, on Q, that w_Q (resp. zeta(w_Q)) is canonical, that its E-set is
/// the image of Q with the same order, and evaluates Psi on it.
inline ReductionReport verify_lemma_wQ(Workspace& ws, const BipartiteStructure& q, EmbedMode mode,
                                       ChainOptions chain_opts = {}) {
  ReductionReport r;
  r.mode = mode;
  const std::vector<Term> xi = xi_embed(ws.arena, q);
  if (mode == EmbedMode::direct) {
    r.images = xi;
  } else {
    GeneratorChain chain = generator_chain(ws, q.size(), chain_opts);
    for (Term t : xi) r.images.push_back(ws.canon.canonicalize(zeta(ws, t, chain)).term());
    r.wq = assemble_wQ(ws.arena, q, r.images);
    const Term raw = zeta(ws, build_wQ(ws.arena, q), chain);
    r.zeta_consistent = ws.canon.canonicalize(raw).term() == r.wq && ws.order.equiv(raw, r.wq);
  }
  if (mode == EmbedMode::direct) r.wq = assemble_wQ(ws.arena, q, r.images);

  r.canonical_ok = ws.canon.is_canonical(r.wq);

  try {
    r.eset_terms = e_set(ws, r.wq);
  } catch (const UnsupportedShape& e) {
    r.shape_error = e.what();
  }
  if (!r.shape_error) {
    std::set<Term> image_set(r.images.begin(), r.images.end());
    r.eset_matches_image = image_set.size() == r.images.size() &&
                           std::set<Term>(r.eset_terms.begin(), r.eset_terms.end()) == image_set;
    const PosetView qv = graph_to_poset(q);
    r.order_preserved = true;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j)
        if (qv.le[i][j] != ws.order.leq(r.images[i], r.images[j])) r.order_preserved = false;
    try {
      r.iso_ok = r.eset_matches_image && r.order_preserved && detail::recovered_matches(ws, q, r.images, r.eset_terms);
    } catch (const ValidationError&) {
      r.iso_ok = false;  // E-set contains a three-element chain
    }
  }
  r.psi = psi_check(ws, r.wq);
  return r;
}

/// Runs verify_lemma_wQ and evaluates phi both on Q and on the poset
/// recovered from the E-set. The two evaluations must agree on every x-tuple.
inline ReductionReport verify_counterexample(Workspace& ws, const AESentence& phi, const BipartiteStructure& q,
                                             EmbedMode mode, ChainOptions chain_opts = {}) {
  if (!is_nice(q)) throw ValidationError("Q is not a nice bipartite poset");
  ReductionReport r = verify_lemma_wQ(ws, q, mode, chain_opts);
  r.phi = phi;
  r.phi_on_q = eval_ae_sentence(phi, q);

  if (r.iso_ok) {
    TermPoset rec = poset_from_terms(ws, r.eset_terms);
    r.phi_on_eset = eval_ae_sentence(phi, rec.structure);
    std::map<Term, std::size_t> rec_index;
    for (std::size_t i = 0; i < rec.up.size(); ++i) rec_index[rec.up[i]] = i;
    for (std::size_t i = 0; i < rec.down.size(); ++i) rec_index[rec.down[i]] = rec.up.size() + i;
    std::map<Tuple, bool> rec_refuted;
    for (const auto& [x, y] : r.phi_on_eset->per_x) rec_refuted[x] = y.has_value();
    for (const auto& [x, y] : r.phi_on_q->per_x) {
      Tuple mapped;
      for (std::size_t e : x) mapped.push_back(rec_index.at(r.images[e]));
      if (rec_refuted.at(mapped) != y.has_value())
        throw ConsistencyError("phi evaluations on Q and on the recovered E-set poset disagree");
    }
    if (r.phi_on_eset->holds != r.phi_on_q->holds)
      throw ConsistencyError("phi evaluations on Q and on the recovered E-set poset disagree");
    r.evaluations_agree = true;
  }

  if (!r.lemma_items_ok() || !r.evaluations_agree)
    r.conclusion = Conclusion::checks_failed;
  else
    r.conclusion = r.phi_on_q->holds ? Conclusion::phi_holds_on_instance : Conclusion::phi_star_fails_at_w;
  return r;
}

/// The F_3 version of verify_lemma_wQ; Q must be nice.
inline ReductionReport verify_f3_lemma(Workspace& ws, const BipartiteStructure& q, ChainOptions chain_opts = {}) {
  if (!is_nice(q)) throw ValidationError("Q is not a nice bipartite poset");
  return verify_lemma_wQ(ws, q, EmbedMode::f3, chain_opts);
}

}  // namespace freelat
