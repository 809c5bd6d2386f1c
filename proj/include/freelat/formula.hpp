#pragma once

// First-order formulas over the single binary relation "leq" (with equality),
// TPTP and s-expression emission, and a reader for both.
//
// And/Or nodes always have at least two arguments and quantifiers at least
// one variable; the smart constructors below collapse the degenerate cases,
// which is what makes emit/read an exact round trip.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freelat/error.hpp"

namespace freelat::fo {

enum class Op { truth, falsity, le, eq, negation, conjunction, disjunction, implication, forall, exists };

struct Formula {
  Op op = Op::truth;
  std::string lhs, rhs;            // atoms
  std::vector<std::string> vars;   // quantifiers
  std::vector<Formula> args;

  bool operator==(const Formula&) const = default;

  /// Number of nodes.
  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& a : args) n += a.size();
    return n;
  }
};

inline Formula truth() { return {Op::truth, {}, {}, {}, {}}; }
inline Formula falsity() { return {Op::falsity, {}, {}, {}, {}}; }
inline Formula le(std::string a, std::string b) { return {Op::le, std::move(a), std::move(b), {}, {}}; }
inline Formula eq(std::string a, std::string b) { return {Op::eq, std::move(a), std::move(b), {}, {}}; }
inline Formula neg(Formula f) { return {Op::negation, {}, {}, {}, {std::move(f)}}; }

inline Formula nary(Op op, std::vector<Formula> fs) {
  if (fs.empty()) return op == Op::conjunction ? truth() : falsity();
  if (fs.size() == 1) return std::move(fs.front());
  return {op, {}, {}, {}, std::move(fs)};
}
inline Formula conj(std::vector<Formula> fs) { return nary(Op::conjunction, std::move(fs)); }
inline Formula disj(std::vector<Formula> fs) { return nary(Op::disjunction, std::move(fs)); }

inline Formula implies(Formula a, Formula b) {
  if (a.op == Op::truth) return b;
  return {Op::implication, {}, {}, {}, {std::move(a), std::move(b)}};
}

inline Formula quant(Op op, std::vector<std::string> vs, Formula body) {
  if (vs.empty()) return body;
  return {op, {}, {}, std::move(vs), {std::move(body)}};
}
inline Formula forall(std::vector<std::string> vs, Formula body) { return quant(Op::forall, std::move(vs), std::move(body)); }
inline Formula exists(std::vector<std::string> vs, Formula body) { return quant(Op::exists, std::move(vs), std::move(body)); }

inline Formula lt(const std::string& a, const std::string& b) { return conj({le(a, b), neg(eq(a, b))}); }

// ---------------------------------------------------------------------------
// Emission

inline void emit_tptp(std::string& out, const Formula& f) {
  auto list = [&](const char* sep) {
    out += '(';
    for (std::size_t i = 0; i < f.args.size(); ++i) {
      if (i) out += sep;
      emit_tptp(out, f.args[i]);
    }
    out += ')';
  };
  switch (f.op) {
    case Op::truth: out += "$true"; break;
    case Op::falsity: out += "$false"; break;
    case Op::le: out += "leq(" + f.lhs + "," + f.rhs + ")"; break;
    case Op::eq: out += "(" + f.lhs + " = " + f.rhs + ")"; break;
    case Op::negation:
      out += "~ ";
      emit_tptp(out, f.args[0]);
      break;
    case Op::conjunction: list(" & "); break;
    case Op::disjunction: list(" | "); break;
    case Op::implication: list(" => "); break;
    case Op::forall:
    case Op::exists: {
      out += f.op == Op::forall ? "(! [" : "(? [";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ",";
        out += f.vars[i];
      }
      out += "] : ";
      emit_tptp(out, f.args[0]);
      out += ')';
      break;
    }
  }
}

inline std::string to_tptp(const Formula& f, const std::string& name = "phi_star", const std::string& role = "conjecture") {
  std::string out = "fof(" + name + ", " + role + ", ";
  emit_tptp(out, f);
  out += ").\n";
  return out;
}

inline void emit_sexp(std::string& out, const Formula& f) {
  auto list = [&](const char* head) {
    out += '(';
    out += head;
    for (const auto& a : f.args) {
      out += ' ';
      emit_sexp(out, a);
    }
    out += ')';
  };
  switch (f.op) {
    case Op::truth: out += "true"; break;
    case Op::falsity: out += "false"; break;
    case Op::le: out += "(leq " + f.lhs + " " + f.rhs + ")"; break;
    case Op::eq: out += "(= " + f.lhs + " " + f.rhs + ")"; break;
    case Op::negation: list("not"); break;
    case Op::conjunction: list("and"); break;
    case Op::disjunction: list("or"); break;
    case Op::implication: list("=>"); break;
    case Op::forall:
    case Op::exists: {
      out += f.op == Op::forall ? "(forall (" : "(exists (";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) out += ' ';
        out += f.vars[i];
      }
      out += ") ";
      emit_sexp(out, f.args[0]);
      out += ')';
      break;
    }
  }
}

inline std::string to_sexp(const Formula& f) {
  std::string out;
  emit_sexp(out, f);
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Reading

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    ws();
    return pos_ >= s_.size();
  }
  char peek() {
    ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    ws();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw ParseError("expected '" + std::string(tok) + "'", pos_);
  }
  std::string word() {
    ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '$'))
      ++pos_;
    if (start == pos_) throw ParseError("expected identifier", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline bool is_variable(const std::string& w) { return !w.empty() && std::isupper(static_cast<unsigned char>(w[0])); }

class TptpReader {
 public:
  explicit TptpReader(std::string_view s) : lx_(s) {}

  Formula annotated() {
    lx_.expect("fof");
    lx_.expect("(");
    lx_.word();
    lx_.expect(",");
    lx_.word();
    lx_.expect(",");
    Formula f = unit();
    lx_.expect(")");
    lx_.expect(".");
    if (!lx_.at_end()) throw ParseError("trailing input", lx_.pos());
    return f;
  }

 private:
  Formula unit() {
    if (lx_.accept("(")) {
      std::vector<Formula> items{unit()};
      Op op = Op::truth;
      for (;;) {
        Op next;
        if (lx_.accept("&"))
          next = Op::conjunction;
        else if (lx_.accept("|"))
          next = Op::disjunction;
        else if (lx_.accept("=>"))
          next = Op::implication;
        else
          break;
        if (op != Op::truth && op != next) throw ParseError("mixed connectives need parentheses", lx_.pos());
        if (next == Op::implication && items.size() == 2) throw ParseError("'=>' is not associative", lx_.pos());
        op = next;
        items.push_back(unit());
      }
      lx_.expect(")");
      if (items.size() == 1) return std::move(items.front());
      return {op, {}, {}, {}, std::move(items)};
    }
    if (lx_.accept("~")) return neg(unit());
    if (lx_.peek() == '!' || lx_.peek() == '?') return quantifier();
    std::string w = lx_.word();
    if (w == "$true") return truth();
    if (w == "$false") return falsity();
    if (w == "leq") {
      lx_.expect("(");
      std::string a = variable();
      lx_.expect(",");
      std::string b = variable();
      lx_.expect(")");
      return le(a, b);
    }
    if (is_variable(w)) {
      lx_.expect("=");
      return eq(w, variable());
    }
    throw ParseError("unknown symbol '" + w + "'", lx_.pos());
  }

  Formula quantifier() {
    const Op op = lx_.accept("!") ? Op::forall : (lx_.expect("?"), Op::exists);
    lx_.expect("[");
    std::vector<std::string> vs{variable()};
    while (lx_.accept(",")) vs.push_back(variable());
    lx_.expect("]");
    lx_.expect(":");
    return {op, {}, {}, std::move(vs), {unit()}};
  }

  std::string variable() {
    std::string w = lx_.word();
    if (!is_variable(w)) throw ParseError("expected variable, got '" + w + "'", lx_.pos());
    return w;
  }

  Lexer lx_;
};

class SexpReader {
 public:
  explicit SexpReader(std::string_view s) : lx_(s) {}

  Formula document() {
    Formula f = expr();
    if (!lx_.at_end()) throw ParseError("trailing input", lx_.pos());
    return f;
  }

 private:
  Formula expr() {
    if (!lx_.accept("(")) {
      std::string w = lx_.word();
      if (w == "true") return truth();
      if (w == "false") return falsity();
      throw ParseError("unexpected atom '" + w + "'", lx_.pos());
    }
    Formula f;
    if (lx_.accept("=>")) {
      f.op = Op::implication;
    } else if (lx_.accept("=")) {
      return atom(Op::eq);
    } else {
      std::string head = lx_.word();
      if (head == "leq") return atom(Op::le);
      if (head == "forall" || head == "exists") {
        f.op = head == "forall" ? Op::forall : Op::exists;
        lx_.expect("(");
        while (!lx_.accept(")")) f.vars.push_back(lx_.word());
        f.args.push_back(expr());
        lx_.expect(")");
        return f;
      }
      if (head == "not")
        f.op = Op::negation;
      else if (head == "and")
        f.op = Op::conjunction;
      else if (head == "or")
        f.op = Op::disjunction;
      else
        throw ParseError("unknown head '" + head + "'", lx_.pos());
    }
    while (!lx_.accept(")")) f.args.push_back(expr());
    return f;
  }

  Formula atom(Op op) {
    std::string a = lx_.word();
    std::string b = lx_.word();
    lx_.expect(")");
    return op == Op::le ? le(std::move(a), std::move(b)) : eq(std::move(a), std::move(b));
  }

  Lexer lx_;
};

}  // namespace detail

/// Reads one "fof(name, role, formula)." annotated formula.
inline Formula read_tptp(std::string_view text) { return detail::TptpReader(text).annotated(); }

inline Formula read_sexp(std::string_view text) { return detail::SexpReader(text).document(); }

}  // namespace freelat::fo
