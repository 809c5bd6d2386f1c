#pragma once

// The freelat command line. run() is separate from main so tests can drive
// it in-process.
//
// Exit codes: 0 property holds / checks pass, 1 property fails, 2 usage or
// input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "freelat/reduction.hpp"

namespace freelat::cli {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  EmbedMode mode = EmbedMode::direct;
  std::string format = "text";
  std::vector<std::string> vars;
  double budget_secs = 120.0;
  std::uint64_t seed = 1;
  std::size_t samples = 50;
  bool report = false;
  bool stats = false;
  bool full_terms = false;
};

/// Terms whose printed form would exceed this many generator occurrences are
/// summarized in reports unless --full-terms is given.
inline constexpr std::uint64_t kPrintLimit = 2000;

class Session {
 public:
  Session(RunConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {
    if (!cfg_.vars.empty()) ws_.names.bind_in_order(cfg_.vars);
  }

  int dispatch();

 private:
  bool json_out() const { return cfg_.format == "json"; }

  const std::string& input(std::size_t i) const {
    if (i >= cfg_.inputs.size()) throw ValidationError(cfg_.command + ": missing argument " + std::to_string(i + 1));
    return cfg_.inputs[i];
  }

  void expect_inputs(std::size_t n) const {
    if (cfg_.inputs.size() != n)
      throw ValidationError(cfg_.command + " takes " + std::to_string(n) + " argument(s), got " +
                            std::to_string(cfg_.inputs.size()));
  }

  std::vector<Term> terms() {
    for (const auto& s : cfg_.inputs) ws_.names.reserve_explicit(s);
    std::vector<Term> out;
    for (const auto& s : cfg_.inputs) out.push_back(ws_.parse(s));
    return out;
  }

  static json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }

  json term_doc(Term t) const {
    const std::uint64_t size = ws_.arena.tree_size(t);
    if (size <= kPrintLimit || cfg_.full_terms) return ws_.print(t);
    return {{"tree_size", size}, {"dag_nodes", ws_.arena.dag_size(t)}};
  }

  std::string term_text(Term t) const {
    json d = term_doc(t);
    if (d.is_string()) return d.get<std::string>();
    return "<term: tree size " + std::to_string(d["tree_size"].get<std::uint64_t>()) + ", " +
           std::to_string(d["dag_nodes"].get<std::size_t>()) + " dag nodes>";
  }

  json terms_doc(const std::vector<Term>& ts) const {
    json a = json::array();
    for (Term t : ts) a.push_back(term_doc(t));
    return a;
  }

  /// Prints a boolean verdict and maps it to an exit code.
  int verdict(bool v, json doc = json::object()) {
    if (json_out()) {
      doc["command"] = cfg_.command;
      doc["result"] = v;
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << (v ? "true" : "false") << '\n';
    }
    return v ? 0 : 1;
  }

  void emit_terms(const std::string& key, const std::vector<Term>& ts) {
    if (json_out()) {
      out_ << json{{"command", cfg_.command}, {key, terms_doc(ts)}}.dump(2) << '\n';
    } else {
      for (Term t : ts) out_ << term_text(t) << '\n';
    }
  }

  json psi_doc(const PsiReport& r) const;
  json niceness_doc(const NicenessReport& r) const;
  json eval_doc(const EvalResult& r, const BipartiteStructure& q) const;
  json reduction_doc(const ReductionReport& r, const BipartiteStructure& q) const;
  void print_checks(const json& checks);

  int cmd_le();
  int cmd_equiv();
  int cmd_canon();
  int cmd_is_canon();
  int cmd_joinands();
  int cmd_indep();
  int cmd_eset();
  int cmd_covers();
  int cmd_psi();
  int cmd_nice();
  int cmd_eval();
  int cmd_embed_poset();
  int cmd_wq();
  int cmd_phistar();
  int cmd_verify_lemma();
  int cmd_check_counterexample();
  int cmd_whitman_gens();
  int cmd_verify_f3();

  RunConfig cfg_;
  std::ostream& out_;
  Workspace ws_;
};

// ---------------------------------------------------------------------------
// Term commands

inline int Session::cmd_le() {
  expect_inputs(2);
  auto t = terms();
  return verdict(ws_.order.leq(t[0], t[1]));
}

inline int Session::cmd_equiv() {
  expect_inputs(2);
  auto t = terms();
  return verdict(ws_.order.equiv(t[0], t[1]));
}

inline int Session::cmd_canon() {
  expect_inputs(1);
  Term c = ws_.canon.canonicalize(terms()[0]).term();
  if (json_out())
    out_ << json{{"command", cfg_.command}, {"canonical", term_doc(c)}}.dump(2) << '\n';
  else
    out_ << term_text(c) << '\n';
  return 0;
}

// Checks the text as written, without the flattening and sorting that
// interning would apply.
inline int Session::cmd_is_canon() {
  expect_inputs(1);
  RawTerm raw = parse_raw_term(input(0), ws_.names);
  return verdict(ws_.canon.is_canonical(raw));
}

inline int Session::cmd_joinands() {
  expect_inputs(1);
  emit_terms("joinands", ws_.canon.canonical_joinands(terms()[0]));
  return 0;
}

inline int Session::cmd_indep() {
  if (cfg_.inputs.empty()) throw ValidationError("indep needs at least one term");
  auto t = terms();
  return verdict(ws_.order.is_independent(t));
}

inline int Session::cmd_eset() {
  expect_inputs(1);
  emit_terms("eset", e_set(ws_, terms()[0]));
  return 0;
}

inline int Session::cmd_covers() {
  expect_inputs(1);
  auto covers = doubly_minimal_join_covers(ws_, terms()[0]);
  if (json_out()) {
    json a = json::array();
    for (const auto& c : covers) a.push_back(terms_doc(c.elements));
    out_ << json{{"command", cfg_.command}, {"covers", a}}.dump(2) << '\n';
  } else {
    for (const auto& c : covers) {
      out_ << '{';
      for (std::size_t i = 0; i < c.elements.size(); ++i) out_ << (i ? ", " : "") << term_text(c.elements[i]);
      out_ << "}\n";
    }
  }
  return 0;
}

inline json Session::psi_doc(const PsiReport& r) const {
  json conds = json::object();
  for (char c : PsiReport::kConditions) {
    auto v = r.condition(c);
    conds[std::string(1, c)] = v ? json(*v) : json(nullptr);
  }
  json d{{"outcome", r.outcome}, {"conditions", conds}};
  d["u_set"] = r.u_set ? terms_doc(*r.u_set) : json(nullptr);
  d["maximal"] = terms_doc(r.maximal);
  d["minimal"] = terms_doc(r.minimal);
  if (r.failed_at) {
    d["failed_at"] = std::string(1, *r.failed_at);
    d["failure_witnesses"] = terms_doc(r.failure_witnesses);
    d["failure_note"] = r.failure_note;
  } else {
    d["failed_at"] = nullptr;
  }
  return d;
}

inline int Session::cmd_psi() {
  expect_inputs(1);
  PsiReport r = psi_check(ws_, terms()[0]);
  if (json_out() || cfg_.report) {
    json d = psi_doc(r);
    d["command"] = cfg_.command;
    out_ << d.dump(2) << '\n';
  } else if (r.outcome) {
    out_ << "true\n";
  } else {
    out_ << "false: condition (" << *r.failed_at << ") " << r.failure_note << '\n';
  }
  return r.outcome ? 0 : 1;
}

// ---------------------------------------------------------------------------
// Structure commands

inline json Session::niceness_doc(const NicenessReport& r) const {
  return {{"nice", r.nice()},
          {"conditions",
           {{"up_size", r.up_size_ok}, {"down_size", r.down_size_ok}, {"up_degrees", r.up_degrees_ok},
            {"down_degrees", r.down_degrees_ok}}},
          {"up_violations", r.up_violations},
          {"down_violations", r.down_violations}};
}

inline int Session::cmd_nice() {
  expect_inputs(1);
  BipartiteStructure q = structure_from_json(load(input(0)));
  NicenessReport r = check_nice(q);
  if (json_out()) {
    json d = niceness_doc(r);
    d["command"] = cfg_.command;
    out_ << d.dump(2) << '\n';
  } else {
    out_ << (r.nice() ? "true" : "false") << '\n';
    out_ << "  |up| >= 3: " << (r.up_size_ok ? "yes" : "no") << '\n';
    out_ << "  |down| >= 3: " << (r.down_size_ok ? "yes" : "no") << '\n';
    auto list = [&](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& n : v) s += (s.empty() ? "" : ", ") + n;
      return s.empty() ? std::string("none") : s;
    };
    out_ << "  up degree violations: " << list(r.up_violations) << '\n';
    out_ << "  down degree violations: " << list(r.down_violations) << '\n';
  }
  return r.nice() ? 0 : 1;
}

inline json Session::eval_doc(const EvalResult& r, const BipartiteStructure& q) const {
  auto names = [&](const Tuple& t) {
    json a = json::array();
    for (std::size_t i : t) a.push_back(q.name(i));
    return a;
  };
  json d{{"holds", r.holds}};
  d["witness"] = r.witness ? names(*r.witness) : json(nullptr);
  json rows = json::array();
  for (const auto& [x, y] : r.per_x) rows.push_back({{"x", names(x)}, {"refuted_by", y ? names(*y) : json(nullptr)}});
  d["per_x"] = rows;
  return d;
}

inline int Session::cmd_eval() {
  expect_inputs(2);
  AESentence phi = sentence_from_json(load(input(0)));
  BipartiteStructure q = structure_from_json(load(input(1)));
  EvalResult r = eval_ae_sentence(phi, q);
  if (json_out()) {
    json d = eval_doc(r, q);
    d["command"] = cfg_.command;
    out_ << d.dump(2) << '\n';
  } else {
    out_ << (r.holds ? "true" : "false") << '\n';
    if (r.witness) {
      out_ << "  witness:";
      for (std::size_t i : *r.witness) out_ << ' ' << q.name(i);
      out_ << '\n';
    }
  }
  return r.holds ? 0 : 1;
}

inline int Session::cmd_embed_poset() {
  expect_inputs(1);
  BipartiteStructure q = structure_from_json(load(input(0)));
  auto xi = xi_embed(ws_.arena, q);
  if (json_out()) {
    json a = json::array();
    for (std::size_t i = 0; i < xi.size(); ++i) a.push_back({{"element", q.name(i)}, {"image", term_doc(xi[i])}});
    out_ << json{{"command", cfg_.command}, {"images", a}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < xi.size(); ++i) out_ << q.name(i) << " -> " << term_text(xi[i]) << '\n';
  }
  return 0;
}

inline int Session::cmd_wq() {
  expect_inputs(1);
  BipartiteStructure q = structure_from_json(load(input(0)));
  Term w = build_wQ(ws_.arena, q);
  if (cfg_.mode == EmbedMode::f3) {
    GeneratorChain chain = generator_chain(ws_, q.size());
    w = ws_.canon.canonicalize(zeta(ws_, w, chain)).term();
  }
  if (json_out())
    out_ << json{{"command", cfg_.command}, {"mode", to_string(cfg_.mode)}, {"wq", term_doc(w)}}.dump(2) << '\n';
  else
    out_ << term_text(w) << '\n';
  return 0;
}

inline int Session::cmd_phistar() {
  expect_inputs(1);
  AESentence phi = sentence_from_json(load(input(0)));
  fo::Formula f = translate_phi_star(phi);
  if (cfg_.format == "sexp")
    out_ << fo::to_sexp(f);
  else
    out_ << fo::to_tptp(f);
  return 0;
}

// ---------------------------------------------------------------------------
// Reduction reports

inline json Session::reduction_doc(const ReductionReport& r, const BipartiteStructure& q) const {
  auto check = [&](int item, const std::string& name, bool pass) {
    return json{{"lemma", lemma_label(r.mode, item)}, {"check", name}, {"pass", pass}};
  };
  json checks = json::array();
  checks.push_back(check(1, "canonical", r.canonical_ok));
  if (r.zeta_consistent) checks.push_back(check(1, "zeta_image_canonical_form", *r.zeta_consistent));
  checks.push_back(check(2, "eset_equals_image", r.eset_matches_image));
  checks.push_back(check(2, "order_isomorphic", r.iso_ok));
  checks.push_back(check(3, "psi", r.psi.outcome));

  json images = json::array();
  for (std::size_t i = 0; i < r.images.size(); ++i)
    images.push_back({{"element", q.name(i)}, {"image", term_doc(r.images[i])}});

  json d{{"mode", to_string(r.mode)}, {"wq", term_doc(r.wq)}, {"images", images}};
  d["eset"] = terms_doc(r.eset_terms);
  d["shape_error"] = r.shape_error ? json(*r.shape_error) : json(nullptr);
  d["psi"] = psi_doc(r.psi);
  if (r.phi) {
    d["phi"] = sentence_to_json(*r.phi);
    d["phi_on_q"] = eval_doc(*r.phi_on_q, q);
    d["phi_on_eset_holds"] = r.phi_on_eset ? json(r.phi_on_eset->holds) : json(nullptr);
    checks.push_back({{"lemma", "4.4(2)"}, {"check", "evaluations_agree"}, {"pass", r.evaluations_agree}});
    d["conclusion"] = to_string(*r.conclusion);
  }
  d["checks"] = checks;
  return d;
}

inline void Session::print_checks(const json& checks) {
  for (const auto& c : checks)
    out_ << "  [" << c["lemma"].get<std::string>() << "] " << c["check"].get<std::string>() << ": "
         << (c["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
}

inline int Session::cmd_verify_lemma() {
  expect_inputs(1);
  BipartiteStructure q = structure_from_json(load(input(0)));
  ReductionReport r = verify_lemma_wQ(ws_, q, cfg_.mode);
  json d = reduction_doc(r, q);
  const bool ok = r.lemma_items_ok();
  if (json_out()) {
    d["command"] = cfg_.command;
    d["pass"] = ok;
    out_ << d.dump(2) << '\n';
  } else {
    out_ << "w_Q = " << term_text(r.wq) << '\n';
    print_checks(d["checks"]);
    if (r.psi.failed_at) out_ << "  psi fails at (" << *r.psi.failed_at << "): " << r.psi.failure_note << '\n';
    out_ << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? 0 : 1;
}

inline int Session::cmd_check_counterexample() {
  expect_inputs(2);
  AESentence phi = sentence_from_json(load(input(0)));
  BipartiteStructure q = structure_from_json(load(input(1)));
  ReductionReport r = verify_counterexample(ws_, phi, q, cfg_.mode);
  json d = reduction_doc(r, q);
  if (json_out()) {
    d["command"] = cfg_.command;
    out_ << d.dump(2) << '\n';
  } else {
    print_checks(d["checks"]);
    out_ << "phi on Q: " << (r.phi_on_q->holds ? "holds" : "fails") << '\n';
    out_ << "conclusion: " << to_string(*r.conclusion) << '\n';
  }
  return *r.conclusion == Conclusion::phi_holds_on_instance ? 0 : 1;
}

inline int Session::cmd_whitman_gens() {
  expect_inputs(1);
  std::size_t n = 0;
  try {
    n = std::stoul(input(0));
  } catch (const std::exception&) {
    throw ValidationError("whitman-gens: n must be a positive integer");
  }
  GeneratorChain chain = generator_chain(ws_, n);
  if (cfg_.stats) {
    json rows = json::array();
    for (std::size_t k = 0; k < chain.z.size(); ++k)
      rows.push_back({{"k", k + 1},
                      {"tree_size", ws_.arena.tree_size(chain.z[k])},
                      {"dag_nodes", ws_.arena.dag_size(chain.z[k])}});
    json d{{"command", cfg_.command},
           {"stages", chain.stages.size()},
           {"verified_independent_stages", chain.verified_stages},
           {"fj_canonical", chain.fj_canonical},
           {"arena_nodes", ws_.arena.size()},
           {"z", rows}};
    if (json_out()) {
      out_ << d.dump(2) << '\n';
    } else {
      out_ << "stages " << chain.stages.size() << ", verified independent " << chain.verified_stages
           << ", arena nodes " << ws_.arena.size() << '\n';
      for (const auto& row : rows)
        out_ << "z" << row["k"] << ": tree size " << row["tree_size"] << ", dag nodes " << row["dag_nodes"] << '\n';
    }
  } else if (json_out()) {
    json a = json::array();
    for (Term z : chain.z) a.push_back(term_doc(z));
    out_ << json{{"command", cfg_.command}, {"z", a}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < chain.z.size(); ++k) out_ << 'z' << k + 1 << " = " << term_text(chain.z[k]) << '\n';
  }
  return chain.fj_canonical ? 0 : 1;
}

// Besides the lemma items, samples random pairs of terms over the
// generators of Q and checks that zeta preserves and reflects the order.
inline int Session::cmd_verify_f3() {
  expect_inputs(1);
  BipartiteStructure q = structure_from_json(load(input(0)));
  ReductionReport r = verify_f3_lemma(ws_, q);
  GeneratorChain chain = generator_chain(ws_, q.size());

  std::mt19937_64 rng(cfg_.seed);
  std::uniform_int_distribution<std::uint32_t> gen(1, static_cast<std::uint32_t>(q.size()));
  std::uniform_int_distribution<int> op(0, 3);
  std::function<Term(int)> random_term = [&](int depth) -> Term {
    const int o = op(rng);
    if (depth == 0 || o < 2) return ws_.arena.gen(gen(rng));
    std::vector<Term> kids{random_term(depth - 1), random_term(depth - 1)};
    return o == 2 ? ws_.arena.meet(kids) : ws_.arena.join(kids);
  };
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < cfg_.samples; ++i) {
    Term s = random_term(3), t = random_term(3);
    if (ws_.order.leq(s, t) != ws_.order.leq(zeta(ws_, s, chain), zeta(ws_, t, chain))) ++mismatches;
  }

  json d = reduction_doc(r, q);
  d["checks"].push_back({{"lemma", "5.3"}, {"check", "zeta_order_embedding_samples"}, {"pass", mismatches == 0}});
  d["samples"] = {{"seed", cfg_.seed}, {"count", cfg_.samples}, {"mismatches", mismatches}};
  const bool ok = r.lemma_items_ok() && mismatches == 0;
  if (json_out()) {
    d["command"] = cfg_.command;
    d["pass"] = ok;
    out_ << d.dump(2) << '\n';
  } else {
    out_ << "zeta(w_Q) = " << term_text(r.wq) << '\n';
    print_checks(d["checks"]);
    out_ << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? 0 : 1;
}

inline int Session::dispatch() {
  const bool formula_format = cfg_.format == "tptp" || cfg_.format == "sexp";
  if (cfg_.command == "phistar") {
    if (cfg_.format == "text") cfg_.format = "tptp";
    if (cfg_.format != "tptp" && cfg_.format != "sexp") throw ValidationError("phistar: --format must be tptp or sexp");
    return cmd_phistar();
  }
  if (formula_format) throw ValidationError(cfg_.command + ": --format must be text or json");

  using Handler = int (Session::*)();
  static const std::map<std::string, Handler> table{
      {"le", &Session::cmd_le},
      {"equiv", &Session::cmd_equiv},
      {"canon", &Session::cmd_canon},
      {"is-canon", &Session::cmd_is_canon},
      {"joinands", &Session::cmd_joinands},
      {"indep", &Session::cmd_indep},
      {"eset", &Session::cmd_eset},
      {"covers", &Session::cmd_covers},
      {"psi", &Session::cmd_psi},
      {"nice", &Session::cmd_nice},
      {"eval", &Session::cmd_eval},
      {"embed-poset", &Session::cmd_embed_poset},
      {"wq", &Session::cmd_wq},
      {"verify-lemma", &Session::cmd_verify_lemma},
      {"check-counterexample", &Session::cmd_check_counterexample},
      {"whitman-gens", &Session::cmd_whitman_gens},
      {"verify-f3", &Session::cmd_verify_f3},
  };
  auto it = table.find(cfg_.command);
  if (it == table.end()) throw ValidationError("unknown subcommand '" + cfg_.command + "'");
  return (this->*(it->second))();
}

// ---------------------------------------------------------------------------
// Argument parsing

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Free lattice computations: Whitman order, canonical forms, E-sets and the w_Q reduction.",
               "freelat"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string mode = "direct";
  app.add_option("--format", cfg.format, "Output format: text or json (phistar: tptp or sexp)")
      ->check(CLI::IsMember({"text", "json", "tptp", "sexp"}));
  app.add_option("--mode", mode, "Embedding mode: direct (F_m) or f3 (via zeta)")
      ->check(CLI::IsMember({"direct", "f3"}));
  app.add_option("--vars", cfg.vars, "Comma-separated generator names, bound to x1, x2, ...")->delimiter(',');
  app.add_option("--budget-secs", cfg.budget_secs, "Time budget; exceeding it is a failure")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");
  app.add_option("--samples", cfg.samples, "Number of sampled term pairs (verify-f3)");
  app.add_flag("--full-terms", cfg.full_terms, "Print large terms in full instead of summarizing them");

  struct Spec {
    const char* name;
    const char* help;
    const char* args;
  };
  const std::vector<Spec> specs{
      {"le", "Decide s <= t", "s t"},
      {"equiv", "Decide s = t in the free lattice", "s t"},
      {"canon", "Canonical form of a term", "t"},
      {"is-canon", "Whether the term as written is in canonical form", "t"},
      {"joinands", "Canonical joinands of a term", "t"},
      {"indep", "Whether the given terms form an independent set", "t..."},
      {"eset", "E-set of a canonical proper meet with join meetands", "t"},
      {"covers", "Doubly minimal join covers", "t"},
      {"psi", "Evaluate the predicate Psi at w", "w"},
      {"nice", "Niceness report for a bipartite structure", "Q.json"},
      {"eval", "Evaluate an exists-forall sentence on a structure", "phi.json Q.json"},
      {"embed-poset", "The xi images of the elements of Q", "Q.json"},
      {"wq", "The term w_Q", "Q.json"},
      {"phistar", "Emit the translated sentence phi*", "phi.json"},
      {"verify-lemma", "Check the w_Q lemma items on Q", "Q.json"},
      {"check-counterexample", "Run the reduction end to end for phi and Q", "phi.json Q.json"},
      {"whitman-gens", "Generators z_1..z_n of the embedding into F_3", "n"},
      {"verify-f3", "Check the w_Q lemma items inside F_3", "Q.json"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("args", cfg.inputs, s.args)->required();
    if (std::string(s.name) == "psi") sub->add_flag("--report", cfg.report, "Emit the full report as JSON");
    if (std::string(s.name) == "whitman-gens") sub->add_flag("--stats", cfg.stats, "Print DAG statistics");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.mode = mode == "f3" ? EmbedMode::f3 : EmbedMode::direct;

  try {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream buffer;
    Session session(cfg, buffer);
    const int code = session.dispatch();
    out << buffer.str();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (elapsed.count() > cfg.budget_secs) {
      err << "freelat: time budget of " << cfg.budget_secs << " s exceeded (" << elapsed.count() << " s)\n";
      return 1;
    }
    return code;
  } catch (const Error& e) {
    err << "freelat: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "freelat: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace freelat::cli
