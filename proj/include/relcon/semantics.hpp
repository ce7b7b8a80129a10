#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "relcon/oracle.hpp"
#include "relcon/syntax.hpp"

namespace relcon {

// ------------------------------------------------------------------ matrices

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Matrix {
  std::string name;
  std::vector<std::string> values;  // carrier in display order
  std::vector<bool> designated;
  std::map<Kind, std::vector<std::vector<int>>> binary;
  std::map<Kind, std::vector<int>> unary;
  std::map<Kind, int> constants;

  int index_of(const std::string& v) const {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) return static_cast<int>(i);
    return -1;
  }
  bool is_designated(int v) const { return designated.at(static_cast<std::size_t>(v)); }
};

// Valuation: atom name to carrier index.
using MatrixValuation = std::map<std::string, int>;

namespace detail {

inline std::optional<Kind> op_kind(const std::string& t) {
  if (t == "->") return Kind::Imp;
  if (t == "o") return Kind::Fus;
  if (t == "&") return Kind::And;
  if (t == "|") return Kind::Or;
  if (t == "~") return Kind::Neg;
  if (t == "0") return Kind::Zero;
  if (t == "1") return Kind::One;
  if (t == "t") return Kind::Top;
  return std::nullopt;
}

inline const char* op_token(Kind k) {
  switch (k) {
    case Kind::Imp: return "->";
    case Kind::Fus: return "o";
    case Kind::And: return "&";
    case Kind::Or: return "|";
    case Kind::Neg: return "~";
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Top: return "t";
    default: return "?";
  }
}

}  // namespace detail

inline Matrix parse_matrix(const std::string& text) {
  Matrix m;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  auto err = [&](const std::string& msg) { throw SystemError("line " + std::to_string(lineno) + ": " + msg); };
  auto value = [&](const std::string& tok) {
    int i = m.index_of(tok);
    if (i < 0) err("unknown value '" + tok + "'");
    return i;
  };
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto w = detail::words(line);
    if (w[0] == "matrix") {
      if (w.size() != 2) err("expected 'matrix NAME'");
      m.name = w[1];
    } else if (w[0] == "values") {
      m.values.assign(w.begin() + 1, w.end());
      if (m.values.empty()) err("empty carrier");
      m.designated.assign(m.values.size(), false);
    } else if (w[0] == "designated") {
      if (m.values.empty()) err("'designated' before 'values'");
      for (std::size_t i = 1; i < w.size(); ++i) m.designated[static_cast<std::size_t>(value(w[i]))] = true;
    } else if (w[0] == "table" || w[0] == "const") {
      if (m.values.empty()) err("'" + w[0] + "' before 'values'");
      auto colon = line.find(':');
      if (colon == std::string::npos) err("missing ':'");
      auto head = detail::words(line.substr(0, colon));
      if (head.size() != 2) err("expected '" + w[0] + " OP : ...'");
      auto k = detail::op_kind(head[1]);
      if (!k) err("unknown connective '" + head[1] + "'");
      std::string body = line.substr(colon + 1);
      std::size_t n = m.values.size();
      if (w[0] == "const") {
        auto vs = detail::words(body);
        if (vs.size() != 1) err("constant needs one value");
        m.constants[*k] = value(vs[0]);
      } else if (*k == Kind::Neg) {
        auto vs = detail::words(body);
        if (vs.size() != n) err("unary table needs " + std::to_string(n) + " entries");
        std::vector<int> row;
        for (auto& v : vs) row.push_back(value(v));
        m.unary[*k] = row;
      } else if (is_binary(*k)) {
        std::vector<std::vector<int>> tab;
        std::stringstream rows(body);
        std::string r;
        while (std::getline(rows, r, '|')) {
          auto vs = detail::words(r);
          if (vs.size() != n) err("row needs " + std::to_string(n) + " entries");
          std::vector<int> row;
          for (auto& v : vs) row.push_back(value(v));
          tab.push_back(row);
        }
        if (tab.size() != n) err("table needs " + std::to_string(n) + " rows");
        m.binary[*k] = tab;
      } else {
        err("constants use 'const'");
      }
    } else {
      err("unknown directive '" + w[0] + "'");
    }
  }
  if (m.values.empty()) throw SystemError("matrix has no values");
  bool any = false;
  for (bool d : m.designated) any = any || d;
  if (!any) throw SystemError("matrix has no designated value");
  return m;
}

inline Matrix load_matrix(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SystemError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_matrix(ss.str());
}

inline std::string print_matrix(const Matrix& m) {
  std::ostringstream os;
  os << "matrix " << m.name << "\nvalues";
  for (auto& v : m.values) os << ' ' << v;
  os << "\ndesignated";
  for (std::size_t i = 0; i < m.values.size(); ++i)
    if (m.designated[i]) os << ' ' << m.values[i];
  os << '\n';
  for (auto& [k, v] : m.constants) os << "const " << detail::op_token(k) << " : " << m.values[v] << '\n';
  for (auto& [k, row] : m.unary) {
    os << "table " << detail::op_token(k) << " :";
    for (int v : row) os << ' ' << m.values[v];
    os << '\n';
  }
  for (auto& [k, tab] : m.binary) {
    os << "table " << detail::op_token(k) << " :";
    for (std::size_t i = 0; i < tab.size(); ++i) {
      if (i) os << " |";
      for (int v : tab[i]) os << ' ' << m.values[v];
    }
    os << '\n';
  }
  return os.str();
}

inline int eval(const Matrix& m, const MatrixValuation& v, Formula f) {
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw EvalError("missing atom '" + f.name() + "'");
      return it->second;
    }
    case Kind::Meta: throw EvalError("cannot evaluate metavariable '" + f.name() + "'");
    case Kind::Zero:
    case Kind::One:
    case Kind::Top: {
      auto it = m.constants.find(f.kind());
      if (it == m.constants.end())
        throw EvalError(std::string("missing table for constant ") + detail::op_token(f.kind()));
      return it->second;
    }
    case Kind::Neg: {
      auto it = m.unary.find(Kind::Neg);
      if (it == m.unary.end()) throw EvalError("missing table for ~");
      return it->second[static_cast<std::size_t>(eval(m, v, f.arg()))];
    }
    default: {
      auto it = m.binary.find(f.kind());
      if (it == m.binary.end())
        throw EvalError(std::string("missing table for ") + detail::op_token(f.kind()));
      int a = eval(m, v, f.lhs()), b = eval(m, v, f.rhs());
      return it->second[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
  }
}

// First refuting valuation, atoms in name order with the first atom most significant.
inline std::optional<MatrixValuation> countermodel_search(const Matrix& m, Formula f) {
  auto atoms = atoms_of(f);
  std::vector<std::string> names(atoms.begin(), atoms.end());
  std::vector<int> digits(names.size(), 0);
  int n = static_cast<int>(m.values.size());
  while (true) {
    MatrixValuation v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = digits[i];
    if (!m.is_designated(eval(m, v, f))) return v;
    std::size_t i = names.size();
    while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

inline std::string print_valuation(const Matrix& m, const MatrixValuation& v) {
  std::string s = "{";
  bool first = true;
  for (auto& [a, x] : v) {
    if (!first) s += ", ";
    first = false;
    s += a + " = " + m.values[static_cast<std::size_t>(x)];
  }
  return s + "}";
}

// ---------------------------------------------------------- Abelian logic

class OverflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline long long cadd(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow");
  return r;
}
inline long long csub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow");
  return r;
}
inline long long cneg(long long a) { return csub(0, a); }
}  // namespace detail

// Integer linear form: sum of coefficient * atom plus a constant.
struct LinearForm {
  std::map<std::string, long long> coef;  // zero coefficients are dropped
  long long constant = 0;

  LinearForm& operator+=(const LinearForm& o) {
    for (auto& [a, c] : o.coef) {
      long long r = detail::cadd(coef[a], c);
      if (r == 0)
        coef.erase(a);
      else
        coef[a] = r;
    }
    constant = detail::cadd(constant, o.constant);
    return *this;
  }
  LinearForm operator-() const {
    LinearForm r;
    for (auto& [a, c] : coef) r.coef[a] = detail::cneg(c);
    r.constant = detail::cneg(constant);
    return r;
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

namespace detail {

// Memoized over shared subformulas, so heavily shared DAGs stay linear in their node count.
inline std::optional<LinearForm> linear_rec(Formula f,
                                            std::unordered_map<Formula, std::optional<LinearForm>, FormulaHash>& memo) {
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  std::optional<LinearForm> out;
  LinearForm r;
  switch (f.kind()) {
    case Kind::Zero: out = r; break;
    case Kind::One: r.constant = 1; out = r; break;
    case Kind::Atom: r.coef[f.name()] = 1; out = r; break;
    case Kind::Neg:
      if (auto a = linear_rec(f.arg(), memo)) out = -*a;
      break;
    case Kind::Fus:
    case Kind::Imp: {
      auto a = linear_rec(f.lhs(), memo), b = linear_rec(f.rhs(), memo);
      if (!a || !b) break;
      if (f.kind() == Kind::Imp) *a = -*a;
      *a += *b;
      out = a;
      break;
    }
    default: break;
  }
  memo.emplace(f, out);
  return out;
}

}  // namespace detail

// Linear form of f, or none if f uses & or | (or t, which Z does not interpret).
inline std::optional<LinearForm> linear_form(Formula f) {
  std::unordered_map<Formula, std::optional<LinearForm>, FormulaHash> memo;
  return detail::linear_rec(f, memo);
}

inline std::optional<LinearForm> linear_form(const FMS& m) {
  LinearForm r;
  for (auto f : m.elements()) {
    auto l = linear_form(f);
    if (!l) return std::nullopt;
    r += *l;
  }
  return r;
}

using IntValuation = std::map<std::string, long long>;

// Value of f in the ordered group Z: o is +, ~ is negation, a -> b is b - a, & min, | max.
inline long long eval_z(Formula f, const IntValuation& v) {
  switch (f.kind()) {
    case Kind::Zero: return 0;
    case Kind::One: return 1;
    case Kind::Atom: {
      auto it = v.find(f.name());
      if (it == v.end()) throw EvalError("missing atom '" + f.name() + "'");
      return it->second;
    }
    case Kind::Neg: return detail::cneg(eval_z(f.arg(), v));
    case Kind::Fus: return detail::cadd(eval_z(f.lhs(), v), eval_z(f.rhs(), v));
    case Kind::Imp: return detail::csub(eval_z(f.rhs(), v), eval_z(f.lhs(), v));
    case Kind::And: return std::min(eval_z(f.lhs(), v), eval_z(f.rhs(), v));
    case Kind::Or: return std::max(eval_z(f.lhs(), v), eval_z(f.rhs(), v));
    default: throw EvalError("no integer interpretation for " + print_formula(f));
  }
}

inline long long sum_z(const FMS& m, const IntValuation& v) {
  long long s = 0;
  for (auto f : m.elements()) s = detail::cadd(s, eval_z(f, v));
  return s;
}

struct GridOptions {
  long long bound = 8;
  std::size_t max_points = 10'000'000;
};

// Searches [-B,B]^atoms in lexicographic order for a valuation where `holds` is false.
template <class Pred>
std::optional<IntValuation> grid_refute(const std::set<std::string>& atoms, Pred holds, const GridOptions& g,
                                        bool* exhausted = nullptr) {
  std::vector<std::string> names(atoms.begin(), atoms.end());
  double points = 1;
  for (std::size_t i = 0; i < names.size(); ++i) points *= static_cast<double>(2 * g.bound + 1);
  if (exhausted) *exhausted = points <= static_cast<double>(g.max_points);
  if (points > static_cast<double>(g.max_points)) return std::nullopt;
  std::vector<long long> d(names.size(), -g.bound);
  while (true) {
    IntValuation v;
    for (std::size_t i = 0; i < names.size(); ++i) v[names[i]] = d[i];
    if (!holds(v)) return v;
    std::size_t i = names.size();
    while (i > 0 && ++d[i - 1] > g.bound) d[--i] = -g.bound;
    if (i == 0) return std::nullopt;
  }
}

inline std::string print_int_valuation(const IntValuation& v) {
  std::string s = "{";
  bool first = true;
  for (auto& [a, x] : v) {
    if (!first) s += ", ";
    first = false;
    s += a + " = " + std::to_string(x);
  }
  return s + "}";
}

enum class AbelianKind { p, leq, z };

inline std::optional<AbelianKind> abelian_kind(const std::string& s) {
  if (s == "p") return AbelianKind::p;
  if (s == "leq") return AbelianKind::leq;
  if (s == "z") return AbelianKind::z;
  return std::nullopt;
}

struct AbelianResult {
  Tri verdict = Tri::unknown;
  std::optional<IntValuation> counter;
  std::string method;  // "linear", "closed", "grid"
};

namespace detail {

inline void atoms_into(const FMS& m, std::set<std::string>& out) {
  for (auto& [f, _] : m) collect_atoms(f, out);
}

// Truth of a kind-p or kind-leq instance at v. An empty minimum is +infinity.
inline bool abelian_point(AbelianKind k, const FMS& g, Formula phi, const IntValuation& v) {
  long long c = eval_z(phi, v);
  if (g.empty()) return k == AbelianKind::p ? 0 <= c : false;
  long long mn = 0;
  bool first = true;
  for (auto& [f, _] : g) {
    long long x = eval_z(f, v);
    mn = first ? x : std::min(mn, x);
    first = false;
  }
  return k == AbelianKind::p ? (0 > mn || 0 <= c) : mn <= c;
}

inline AbelianResult sum_compare(const FMS& lhs, const FMS& rhs, const GridOptions& g) {
  auto l = linear_form(lhs), r = linear_form(rhs);
  if (l && r) {
    if (l->coef != r->coef) {
      // Nonconstant difference: unbounded, so some point refutes; report the grid witness.
      std::set<std::string> atoms;
      atoms_into(lhs, atoms);
      atoms_into(rhs, atoms);
      auto cv = grid_refute(atoms, [&](const IntValuation& v) { return sum_z(lhs, v) <= sum_z(rhs, v); }, g);
      return {Tri::fails, cv, "linear"};
    }
    if (l->constant <= r->constant) return {Tri::holds, std::nullopt, "linear"};
    IntValuation v;
    std::set<std::string> atoms;
    atoms_into(lhs, atoms);
    atoms_into(rhs, atoms);
    for (auto& a : atoms) v[a] = -g.bound;
    return {Tri::fails, v, "linear"};
  }
  std::set<std::string> atoms;
  atoms_into(lhs, atoms);
  atoms_into(rhs, atoms);
  bool exhausted = false;
  auto cv = grid_refute(atoms, [&](const IntValuation& v) { return sum_z(lhs, v) <= sum_z(rhs, v); }, g, &exhausted);
  if (cv) return {Tri::fails, cv, "grid"};
  if (atoms.empty()) return {Tri::holds, std::nullopt, "closed"};
  return {Tri::unknown, std::nullopt, "grid"};
}

}  // namespace detail

// The three Abelian consequence relations between a premise multiset and a formula.
inline AbelianResult abelian(AbelianKind k, const FMS& gamma, Formula phi, const GridOptions& g = {}) {
  if (k == AbelianKind::z) return detail::sum_compare(gamma, FMS{phi}, g);
  std::set<std::string> atoms;
  detail::atoms_into(gamma, atoms);
  collect_atoms(phi, atoms);
  bool exhausted = false;
  auto cv = grid_refute(atoms, [&](const IntValuation& v) { return detail::abelian_point(k, gamma, phi, v); }, g,
                        &exhausted);
  if (cv) return {Tri::fails, cv, atoms.empty() ? "closed" : "grid"};
  if (atoms.empty()) return {Tri::holds, std::nullopt, "closed"};
  return {Tri::unknown, std::nullopt, "grid"};
}

inline Tri abelian_oracle(AbelianKind k, const FMS& gamma, Formula phi) { return abelian(k, gamma, phi).verdict; }

// Sum relation between multisets; empty sums are 0.
inline AbelianResult abelian_symmetric_result(const FMS& gamma, const FMS& delta, const GridOptions& g = {}) {
  return detail::sum_compare(gamma, delta, g);
}
inline Tri abelian_symmetric(const FMS& gamma, const FMS& delta) {
  return abelian_symmetric_result(gamma, delta).verdict;
}

inline AsymOracle z_oracle() {
  AsymOracle o;
  o.name = "z";
  o.rel = [](const FMS& g, Formula f) { return abelian_oracle(AbelianKind::z, g, f); };
  // Every theorem is >= 0 everywhere and 0 is a theorem, so Gamma entails all theorems iff it entails 0.
  o.theorem_hook = [](const FMS& g) { return abelian_oracle(AbelianKind::z, g, Formula::zero()); };
  return o;
}

inline AsymOracle p_oracle() {
  AsymOracle o;
  o.name = "p";
  o.rel = [](const FMS& g, Formula f) { return abelian_oracle(AbelianKind::p, g, f); };
  // Theorems are >= 0 everywhere, hence entailed by any premises.
  o.theorem_hook = [](const FMS&) { return Tri::holds; };
  return o;
}

inline AsymOracle leq_oracle() {
  AsymOracle o;
  o.name = "leq";
  o.rel = [](const FMS& g, Formula f) { return abelian_oracle(AbelianKind::leq, g, f); };
  // No formula is bounded below by +infinity, so there are no theorems.
  o.theorem_basis = std::vector<Formula>{};
  return o;
}

inline SymOracle abelian_sym_oracle() {
  return SymOracle{"abelian", [](const FMS& g, const FMS& d) { return abelian_symmetric(g, d); }};
}

}  // namespace relcon
