#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "relcon/multiset.hpp"

namespace relcon {

// Order matters: it is the primary key of the structural formula order.
enum class Kind : std::uint8_t { Zero, One, Top, Atom, Meta, Neg, Fus, And, Or, Imp };

inline bool is_binary(Kind k) { return k == Kind::Fus || k == Kind::And || k == Kind::Or || k == Kind::Imp; }

namespace detail {

struct Node {
  Kind kind;
  std::string name;
  const Node* a;
  const Node* b;
  std::size_t hash;
  int size;
  bool ground;
};

struct NodeKeyHash {
  std::size_t operator()(const Node* n) const { return n->hash; }
};
struct NodeKeyEq {
  bool operator()(const Node* x, const Node* y) const {
    return x->kind == y->kind && x->a == y->a && x->b == y->b && x->name == y->name;
  }
};

// Hash-consing table. Nodes live for the whole process.
class Interner {
 public:
  static Interner& get() {
    static Interner in;
    return in;
  }
  const Node* make(Kind k, std::string name, const Node* a, const Node* b) {
    std::size_t h = std::hash<std::string>{}(name) * 31 + static_cast<std::size_t>(k);
    h = h * 1000003 ^ reinterpret_cast<std::uintptr_t>(a);
    h = h * 1000003 ^ reinterpret_cast<std::uintptr_t>(b);
    Node probe{k, std::move(name), a, b, h, 0, true};
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table_.find(&probe);
    if (it != table_.end()) return *it;
    auto owned = std::make_unique<Node>(std::move(probe));
    // Saturates: heavily shared DAGs can denote trees too large to count.
    long long sz = 1LL + (a ? a->size : 0) + (b ? b->size : 0);
    owned->size = static_cast<int>(std::min<long long>(sz, std::numeric_limits<int>::max()));
    owned->ground = k != Kind::Meta && (!a || a->ground) && (!b || b->ground);
    const Node* p = owned.get();
    store_.push_back(std::move(owned));
    table_.insert(p);
    return p;
  }

 private:
  std::mutex mu_;
  std::unordered_set<const Node*, NodeKeyHash, NodeKeyEq> table_;
  std::vector<std::unique_ptr<Node>> store_;
};

inline int compare_nodes(const Node* x, const Node* y) {
  if (x == y) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  if (x->kind == Kind::Atom || x->kind == Kind::Meta) return x->name < y->name ? -1 : (x->name == y->name ? 0 : 1);
  if (int c = compare_nodes(x->a, y->a)) return c;
  if (x->b) return compare_nodes(x->b, y->b);
  return 0;
}

}  // namespace detail

// Immutable, interned formula (or schema when it contains metavariables).
// Equality is pointer equality.
class Formula {
 public:
  Formula() : n_(detail::Interner::get().make(Kind::Zero, "", nullptr, nullptr)) {}

  static Formula atom(const std::string& name) { return Formula(mk(Kind::Atom, name)); }
  static Formula meta(const std::string& name) { return Formula(mk(Kind::Meta, name)); }
  static Formula zero() { return Formula(mk(Kind::Zero, "")); }
  static Formula one() { return Formula(mk(Kind::One, "")); }
  static Formula top() { return Formula(mk(Kind::Top, "")); }
  static Formula neg(Formula f) { return Formula(mk(Kind::Neg, "", f.n_)); }
  static Formula imp(Formula a, Formula b) { return Formula(mk(Kind::Imp, "", a.n_, b.n_)); }
  static Formula fus(Formula a, Formula b) { return Formula(mk(Kind::Fus, "", a.n_, b.n_)); }
  static Formula conj(Formula a, Formula b) { return Formula(mk(Kind::And, "", a.n_, b.n_)); }
  static Formula disj(Formula a, Formula b) { return Formula(mk(Kind::Or, "", a.n_, b.n_)); }
  static Formula binary(Kind k, Formula a, Formula b) { return Formula(mk(k, "", a.n_, b.n_)); }
  // n+1 = n o 1, -n = ~n.
  static Formula numeral(long long n) {
    if (n == 0) return zero();
    if (n < 0) return neg(numeral(-n));
    Formula f = one();
    for (long long i = 1; i < n; ++i) f = fus(f, one());
    return f;
  }

  Kind kind() const { return n_->kind; }
  const std::string& name() const { return n_->name; }
  Formula lhs() const { return Formula(n_->a); }
  Formula rhs() const { return Formula(n_->b); }
  // Operand of a negation.
  Formula arg() const { return Formula(n_->a); }
  int size() const { return n_->size; }
  bool ground() const { return n_->ground; }
  std::size_t hash() const { return n_->hash; }
  const void* id() const { return n_; }

  // Positive numeral value (n >= 1) if f is the expanded form of one.
  std::optional<long long> positive_numeral() const {
    long long n = 0;
    const detail::Node* p = n_;
    while (p->kind == Kind::Fus && p->b->kind == Kind::One) {
      ++n;
      p = p->a;
    }
    if (p->kind != Kind::One) return std::nullopt;
    return n + 1;
  }

  friend bool operator==(Formula x, Formula y) { return x.n_ == y.n_; }
  friend bool operator!=(Formula x, Formula y) { return x.n_ != y.n_; }
  friend bool operator<(Formula x, Formula y) { return detail::compare_nodes(x.n_, y.n_) < 0; }

 private:
  explicit Formula(const detail::Node* n) : n_(n) {}
  static const detail::Node* mk(Kind k, const std::string& name, const detail::Node* a = nullptr,
                                const detail::Node* b = nullptr) {
    return detail::Interner::get().make(k, name, a, b);
  }
  const detail::Node* n_;
};

struct FormulaHash {
  std::size_t operator()(Formula f) const { return f.hash(); }
};

using FMS = FMultiset<Formula>;
using Subst = std::map<std::string, Formula>;

// ---------------------------------------------------------------- printing

namespace detail {

inline int prec(Formula f) {
  switch (f.kind()) {
    case Kind::Imp: return 1;
    case Kind::Or: return 2;
    case Kind::And: return 3;
    case Kind::Fus: return f.positive_numeral() ? 5 : 4;
    default: return 5;
  }
}

inline const char* op_text(Kind k) {
  switch (k) {
    case Kind::Imp: return " -> ";
    case Kind::Or: return " | ";
    case Kind::And: return " & ";
    case Kind::Fus: return " o ";
    default: return "?";
  }
}

inline void print_rec(std::ostream& os, Formula f) {
  if (auto n = f.positive_numeral()) {
    os << *n;
    return;
  }
  switch (f.kind()) {
    case Kind::Zero: os << "0"; return;
    case Kind::One: os << "1"; return;
    case Kind::Top: os << "t"; return;
    case Kind::Atom:
    case Kind::Meta: os << f.name(); return;
    case Kind::Neg: {
      Formula a = f.arg();
      if (auto n = a.positive_numeral()) {
        os << "-" << *n;
        return;
      }
      os << "~";
      if (prec(a) < 5) {
        os << "(";
        print_rec(os, a);
        os << ")";
      } else {
        print_rec(os, a);
      }
      return;
    }
    default: break;
  }
  int p = prec(f);
  bool right_assoc = f.kind() == Kind::Imp;
  Formula l = f.lhs(), r = f.rhs();
  bool pl = right_assoc ? prec(l) <= p : prec(l) < p;
  bool pr = right_assoc ? prec(r) < p : prec(r) <= p;
  if (pl) os << "(";
  print_rec(os, l);
  if (pl) os << ")";
  os << op_text(f.kind());
  if (pr) os << "(";
  print_rec(os, r);
  if (pr) os << ")";
}

}  // namespace detail

inline std::string print_formula(Formula f) {
  std::ostringstream os;
  detail::print_rec(os, f);
  return os.str();
}

inline std::string print_multiset(const FMS& m) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : m.elements()) {
    if (!first) s += ", ";
    first = false;
    s += print_formula(x);
  }
  return s + "]";
}

inline std::ostream& operator<<(std::ostream& os, Formula f) { return os << print_formula(f); }
inline std::ostream& operator<<(std::ostream& os, const FMS& m) { return os << print_multiset(m); }

inline std::string print_subst(const Subst& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : s) {
    if (!first) out += ", ";
    first = false;
    out += k + " := " + print_formula(v);
  }
  return out + "}";
}

// ----------------------------------------------------------------- parsing

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Decides whether an identifier denotes a metavariable.
using MetaPolicy = std::function<bool(const std::string&)>;

inline MetaPolicy all_atoms() {
  return [](const std::string&) { return false; };
}
// System-file convention: lowercase identifiers are metavariables unless declared atoms.
inline MetaPolicy schema_policy(std::set<std::string> atoms) {
  return [atoms = std::move(atoms)](const std::string& id) {
    return std::islower(static_cast<unsigned char>(id[0])) && !atoms.count(id);
  };
}

class FormulaParser {
 public:
  FormulaParser(const std::string& text, MetaPolicy policy, std::size_t offset = 0)
      : s_(text), pos_(0), offset_(offset), meta_(std::move(policy)) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

  FMS parse_multiset_all() {
    FMS m;
    skip_ws();
    expect('[');
    skip_ws();
    if (peek() == ']') {
      ++pos_;
    } else {
      while (true) {
        m.add(parse_imp());
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after multiset");
    return m;
  }

  // Comma-separated formulas up to end of input (possibly none).
  std::vector<Formula> parse_list_all() {
    std::vector<Formula> v;
    skip_ws();
    if (pos_ == s_.size()) return v;
    while (true) {
      v.push_back(parse_imp());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset_ + pos_); }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char peek2() const { return pos_ + 1 < s_.size() ? s_[pos_ + 1] : '\0'; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }
  bool at_word(const char* w) {
    std::size_t n = std::char_traits<char>::length(w);
    if (s_.compare(pos_, n, w) != 0) return false;
    return pos_ + n >= s_.size() || !ident_char(s_[pos_ + n]);
  }

  Formula parse_imp() {
    Formula l = parse_or();
    skip_ws();
    if (peek() == '-' && peek2() == '>') {
      pos_ += 2;
      return Formula::imp(l, parse_imp());
    }
    return l;
  }
  Formula parse_or() {
    Formula l = parse_and();
    while (true) {
      skip_ws();
      if (peek() == '|' && peek2() != '-') {
        ++pos_;
        l = Formula::disj(l, parse_and());
      } else {
        return l;
      }
    }
  }
  Formula parse_and() {
    Formula l = parse_fus();
    while (true) {
      skip_ws();
      if (peek() == '&') {
        ++pos_;
        l = Formula::conj(l, parse_fus());
      } else {
        return l;
      }
    }
  }
  Formula parse_fus() {
    Formula l = parse_unary();
    while (true) {
      skip_ws();
      if (at_word("o")) {
        ++pos_;
        l = Formula::fus(l, parse_unary());
      } else {
        return l;
      }
    }
  }
  Formula parse_unary() {
    skip_ws();
    char c = peek();
    if (c == '~') {
      ++pos_;
      return Formula::neg(parse_unary());
    }
    if (c == '-' && std::isdigit(static_cast<unsigned char>(peek2()))) {
      ++pos_;
      return Formula::neg(parse_number());
    }
    if (c == '(') {
      ++pos_;
      Formula f = parse_imp();
      expect(')');
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "t") return Formula::top();
      if (id == "o") {
        pos_ = start;
        fail("'o' is the fusion operator, not an identifier");
      }
      return meta_(id) ? Formula::meta(id) : Formula::atom(id);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }
  Formula parse_number() {
    std::size_t start = pos_;
    long long n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + (s_[pos_] - '0');
      if (n > 4096) {
        pos_ = start;
        fail("numeral too large");
      }
      ++pos_;
    }
    return Formula::numeral(n);
  }

  const std::string& s_;
  std::size_t pos_;
  std::size_t offset_;
  MetaPolicy meta_;
};

// Query formulas: every identifier is an atom.
inline Formula parse_formula(const std::string& text) { return FormulaParser(text, all_atoms()).parse_all(); }
inline Formula parse_schema(const std::string& text, const std::set<std::string>& atoms = {}) {
  return FormulaParser(text, schema_policy(atoms)).parse_all();
}
inline FMS parse_multiset(const std::string& text) { return FormulaParser(text, all_atoms()).parse_multiset_all(); }

// ---------------------------------------------------- substitution, matching

class SubstError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void collect_metas(Formula s, std::set<std::string>& out) {
  if (s.ground()) return;
  if (s.kind() == Kind::Meta) {
    out.insert(s.name());
  } else if (s.kind() == Kind::Neg) {
    collect_metas(s.arg(), out);
  } else if (is_binary(s.kind())) {
    collect_metas(s.lhs(), out);
    collect_metas(s.rhs(), out);
  }
}
inline std::set<std::string> metavariables(Formula s) {
  std::set<std::string> out;
  collect_metas(s, out);
  return out;
}

inline void collect_atoms(Formula f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom: out.insert(f.name()); break;
    case Kind::Neg: collect_atoms(f.arg(), out); break;
    default:
      if (is_binary(f.kind())) {
        collect_atoms(f.lhs(), out);
        collect_atoms(f.rhs(), out);
      }
  }
}
inline std::set<std::string> atoms_of(Formula f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

inline Formula substitute(Formula s, const Subst& sigma) {
  if (s.ground()) return s;
  switch (s.kind()) {
    case Kind::Meta: {
      auto it = sigma.find(s.name());
      if (it == sigma.end()) throw SubstError("missing binding for metavariable " + s.name());
      return it->second;
    }
    case Kind::Neg: return Formula::neg(substitute(s.arg(), sigma));
    default: return Formula::binary(s.kind(), substitute(s.lhs(), sigma), substitute(s.rhs(), sigma));
  }
}

// Extends sigma so that substitute(s, sigma) == f; on failure sigma may hold partial bindings.
inline bool match_into(Formula s, Formula f, Subst& sigma) {
  if (s.ground()) return s == f;
  if (s.kind() == Kind::Meta) {
    auto [it, fresh] = sigma.emplace(s.name(), f);
    return fresh || it->second == f;
  }
  if (s.kind() != f.kind()) return false;
  if (s.kind() == Kind::Neg) return match_into(s.arg(), f.arg(), sigma);
  return match_into(s.lhs(), f.lhs(), sigma) && match_into(s.rhs(), f.rhs(), sigma);
}

inline std::optional<Subst> match(Formula s, Formula f, const Subst& base = {}) {
  Subst sigma = base;
  if (!match_into(s, f, sigma)) return std::nullopt;
  return sigma;
}

inline void subformulas_into(Formula f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  if (f.kind() == Kind::Neg) subformulas_into(f.arg(), out);
  if (is_binary(f.kind())) {
    subformulas_into(f.lhs(), out);
    subformulas_into(f.rhs(), out);
  }
}

// ------------------------------------------------------- axiomatic systems

// A consecution schema. Axioms are exactly the rules with an empty left side.
struct Rule {
  std::string name;
  std::vector<Formula> left;
  std::vector<Formula> right;
  bool declared_axiom = false;

  bool is_axiom() const { return left.empty(); }
  std::set<std::string> metas() const {
    std::set<std::string> m;
    for (auto f : left) collect_metas(f, m);
    for (auto f : right) collect_metas(f, m);
    return m;
  }
};

struct AxiomaticSystem {
  std::string name;
  std::set<std::string> atoms;
  std::vector<Rule> rules;
  bool symmetric = false;

  const Rule* find(const std::string& n) const {
    for (const auto& r : rules)
      if (r.name == n) return &r;
    return nullptr;
  }
  std::vector<const Rule*> axioms() const {
    std::vector<const Rule*> v;
    for (const auto& r : rules)
      if (r.is_axiom()) v.push_back(&r);
    return v;
  }
  std::vector<const Rule*> inference_rules() const {
    std::vector<const Rule*> v;
    for (const auto& r : rules)
      if (!r.is_axiom()) v.push_back(&r);
    return v;
  }
  // Name of the first axiom of which f is an instance.
  std::optional<std::string> axiom_instance(Formula f) const {
    for (const auto& r : rules)
      if (r.is_axiom() && r.right.size() == 1 && match(r.right[0], f)) return r.name;
    return std::nullopt;
  }
  bool is_axiom_instance(Formula f) const { return axiom_instance(f).has_value(); }
};

class SystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> w;
  std::string x;
  while (is >> x) w.push_back(x);
  return w;
}

}  // namespace detail

inline AxiomaticSystem parse_system(const std::string& text) {
  AxiomaticSystem as;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool saw_header = false;
  bool multi_right = false;
  auto err = [&](const std::string& msg) { throw SystemError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (line.empty()) continue;
    auto w = detail::words(line);
    if (w[0] == "system") {
      if (w.size() < 2 || w.size() > 3) err("expected 'system NAME [symmetric]'");
      if (w.size() == 3 && w[2] != "symmetric") err("unknown system flag '" + w[2] + "'");
      as.name = w[1];
      as.symmetric = w.size() == 3;
      saw_header = true;
      continue;
    }
    if (w[0] == "atoms") {
      for (std::size_t i = 1; i < w.size(); ++i) as.atoms.insert(w[i]);
      continue;
    }
    if (w[0] != "axiom" && w[0] != "rule") err("unknown directive '" + w[0] + "'");
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) err("missing ':'");
    auto head = detail::words(line.substr(0, colon));
    if (head.size() != 2) err("expected '" + w[0] + " NAME :'");
    Rule r;
    r.name = head[1];
    r.declared_axiom = w[0] == "axiom";
    if (as.find(r.name)) err("duplicate rule name '" + r.name + "'");
    std::string body = line.substr(colon + 1);
    std::size_t off = raw.find(':') + 1;
    auto policy = schema_policy(as.atoms);
    try {
      if (r.declared_axiom) {
        if (body.find("|-") != std::string::npos) err("axioms take a single formula");
        r.right.push_back(FormulaParser(body, policy, off).parse_all());
      } else {
        std::size_t ts = body.find("|-");
        if (ts == std::string::npos) err("rule needs '|-'");
        r.left = FormulaParser(body.substr(0, ts), policy, off).parse_list_all();
        r.right = FormulaParser(body.substr(ts + 2), policy, off + ts + 2).parse_list_all();
        if (r.right.size() != 1) multi_right = true;
      }
    } catch (const ParseError& e) {
      err(e.what());
    }
    as.rules.push_back(std::move(r));
  }
  if (!saw_header) throw SystemError("missing 'system NAME' header");
  if (multi_right) as.symmetric = true;
  return as;
}

inline std::string print_system(const AxiomaticSystem& as) {
  std::ostringstream os;
  os << "system " << as.name << (as.symmetric ? " symmetric" : "") << "\n";
  if (!as.atoms.empty()) {
    os << "atoms";
    for (const auto& a : as.atoms) os << " " << a;
    os << "\n";
  }
  for (const auto& r : as.rules) {
    if (r.declared_axiom && r.left.empty() && r.right.size() == 1) {
      os << "axiom " << r.name << " : " << print_formula(r.right[0]) << "\n";
      continue;
    }
    os << "rule " << r.name << " : ";
    for (std::size_t i = 0; i < r.left.size(); ++i) os << (i ? ", " : "") << print_formula(r.left[i]);
    os << (r.left.empty() ? "|- " : " |- ");
    for (std::size_t i = 0; i < r.right.size(); ++i) os << (i ? ", " : "") << print_formula(r.right[i]);
    os << "\n";
  }
  return os.str();
}

inline bool operator==(const Rule& a, const Rule& b) {
  return a.name == b.name && a.left == b.left && a.right == b.right && a.declared_axiom == b.declared_axiom;
}
inline bool operator==(const AxiomaticSystem& a, const AxiomaticSystem& b) {
  return a.name == b.name && a.atoms == b.atoms && a.rules == b.rules && a.symmetric == b.symmetric;
}

// Renames metavariables to _0, _1, ... by first occurrence, across the given list.
inline std::vector<Formula> canonical_metas(const std::vector<Formula>& fs) {
  std::map<std::string, std::string> ren;
  std::function<Formula(Formula)> go = [&](Formula f) -> Formula {
    if (f.ground()) return f;
    if (f.kind() == Kind::Meta) {
      auto it = ren.find(f.name());
      if (it == ren.end()) it = ren.emplace(f.name(), "_" + std::to_string(ren.size())).first;
      return Formula::meta(it->second);
    }
    if (f.kind() == Kind::Neg) return Formula::neg(go(f.arg()));
    Formula l = go(f.lhs());
    return Formula::binary(f.kind(), l, go(f.rhs()));
  };
  std::vector<Formula> out;
  for (auto f : fs) out.push_back(go(f));
  return out;
}

// Same consecution up to renaming of metavariables (left side order-sensitive).
inline bool same_shape(const Rule& r, const std::vector<Formula>& left, const std::vector<Formula>& right) {
  if (r.left.size() != left.size() || r.right.size() != right.size()) return false;
  auto pack = [](std::vector<Formula> l, const std::vector<Formula>& rr) {
    l.insert(l.end(), rr.begin(), rr.end());
    return canonical_metas(l);
  };
  if (pack(r.right, r.left) == pack(right, left)) return true;
  if (left.size() == 2) {
    std::vector<Formula> sw{left[1], left[0]};
    return pack(r.right, r.left) == pack(right, sw);
  }
  return false;
}

}  // namespace relcon

template <>
struct std::hash<relcon::Formula> {
  std::size_t operator()(relcon::Formula f) const noexcept { return f.hash(); }
};
