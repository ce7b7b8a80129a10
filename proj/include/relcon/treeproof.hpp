#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "relcon/multiset.hpp"
#include "relcon/syntax.hpp"

namespace relcon {

enum class Just { premise, axiom, rule };

struct ProofTree {
  Formula label;
  Just by = Just::premise;
  std::string name;            // axiom or rule name
  std::optional<Subst> sigma;  // stored instantiation, checked when present
  std::vector<ProofTree> children;

  int size() const {
    int n = 1;
    for (const auto& c : children) n += c.size();
    return n;
  }
  bool is_leaf() const { return children.empty(); }
};

inline bool operator==(const ProofTree& a, const ProofTree& b) {
  return a.label == b.label && a.by == b.by && a.name == b.name && a.sigma == b.sigma && a.children == b.children;
}

inline ProofTree premise_node(Formula f) { return ProofTree{f, Just::premise, "", std::nullopt, {}}; }
inline ProofTree axiom_node(Formula f, const std::string& name, std::optional<Subst> s = std::nullopt) {
  return ProofTree{f, Just::axiom, name, std::move(s), {}};
}
inline ProofTree rule_node(Formula f, const std::string& name, std::vector<ProofTree> kids,
                           std::optional<Subst> s = std::nullopt) {
  return ProofTree{f, Just::rule, name, std::move(s), std::move(kids)};
}

class ProofError : public std::runtime_error {
 public:
  ProofError(std::string code, const std::string& msg) : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline void leaf_multiset_into(const ProofTree& t, FMS& out) {
  if (t.is_leaf()) {
    out.add(t.label);
    return;
  }
  for (const auto& c : t.children) leaf_multiset_into(c, out);
}

// Lambda_T: leaf labels with multiplicity.
inline FMS leaf_multiset(const ProofTree& t) {
  FMS m;
  leaf_multiset_into(t, m);
  return m;
}

// Instantiation of a single-conclusion rule so that its left side is the
// multiset `kids` and its right side is `concl`.
inline std::optional<Subst> match_rule(const Rule& r, const std::vector<Formula>& kids, Formula concl,
                                       const Subst& base = {}) {
  if (r.right.size() != 1 || r.left.size() != kids.size()) return std::nullopt;
  auto s0 = match(r.right[0], concl, base);
  if (!s0) return std::nullopt;
  std::vector<bool> used(kids.size(), false);
  std::optional<Subst> found;
  std::function<bool(std::size_t, const Subst&)> go = [&](std::size_t i, const Subst& s) {
    if (i == r.left.size()) {
      found = s;
      return true;
    }
    for (std::size_t j = 0; j < kids.size(); ++j) {
      if (used[j]) continue;
      if (j > 0 && !used[j - 1] && kids[j] == kids[j - 1]) continue;
      auto s2 = match(r.left[i], kids[j], s);
      if (!s2) continue;
      used[j] = true;
      bool ok = go(i + 1, *s2);
      used[j] = false;
      if (ok) return true;
    }
    return false;
  };
  go(0, *s0);
  return found;
}

enum class Verdict { invalid, plain, weakly_relevant, relevant, strongly_relevant };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::invalid: return "invalid";
    case Verdict::plain: return "plain";
    case Verdict::weakly_relevant: return "weakly_relevant";
    case Verdict::relevant: return "relevant";
    case Verdict::strongly_relevant: return "strongly_relevant";
  }
  return "?";
}

struct VerifyReport {
  Verdict verdict = Verdict::invalid;
  std::string reason;
  FMS leaves;   // Lambda_T
  FMS excess;   // Lambda_T minus Gamma
  FMS missing;  // Gamma minus Lambda_T
};

namespace detail {

inline bool sigma_agrees(const std::optional<Subst>& stored, const Subst& computed, const Rule& r) {
  if (!stored) return true;
  auto ms = r.metas();
  for (const auto& [k, v] : *stored) {
    if (!ms.count(k)) return false;
    auto it = computed.find(k);
    if (it == computed.end() || it->second != v) return false;
  }
  return true;
}

inline bool check_nodes(const ProofTree& t, const AxiomaticSystem& as, const FMS& gamma, std::string& why) {
  if (t.is_leaf()) {
    if (t.by == Just::premise) {
      if (!gamma.contains(t.label)) {
        why = "premise leaf " + print_formula(t.label) + " is not in the premise multiset";
        return false;
      }
      return true;
    }
    const Rule* r = as.find(t.name);
    if (!r || !r->is_axiom() || r->right.size() != 1) {
      why = "leaf " + print_formula(t.label) + " cites unknown axiom '" + t.name + "'";
      return false;
    }
    auto s = t.sigma ? match(r->right[0], t.label, *t.sigma) : match(r->right[0], t.label);
    if (!s || !sigma_agrees(t.sigma, *s, *r)) {
      why = "leaf " + print_formula(t.label) + " is not an instance of axiom " + t.name;
      return false;
    }
    return true;
  }
  if (t.by != Just::rule) {
    why = "internal node " + print_formula(t.label) + " lacks a rule justification";
    return false;
  }
  const Rule* r = as.find(t.name);
  if (!r || r->is_axiom()) {
    why = "node " + print_formula(t.label) + " cites unknown rule '" + t.name + "'";
    return false;
  }
  std::vector<Formula> kids;
  for (const auto& c : t.children) kids.push_back(c.label);
  std::sort(kids.begin(), kids.end());
  auto s = match_rule(*r, kids, t.label, t.sigma ? *t.sigma : Subst{});
  if (!s || !sigma_agrees(t.sigma, *s, *r)) {
    why = "node " + print_formula(t.label) + " is not an instance of rule " + t.name;
    return false;
  }
  for (const auto& c : t.children)
    if (!check_nodes(c, as, gamma, why)) return false;
  return true;
}

}  // namespace detail

// Conditions 1-4 of a tree-proof, then the strongest relevance class.
inline VerifyReport verify(const ProofTree& t, const AxiomaticSystem& as, const FMS& gamma, Formula goal) {
  VerifyReport rep;
  rep.leaves = leaf_multiset(t);
  rep.excess = mdiff(rep.leaves, gamma);
  rep.missing = mdiff(gamma, rep.leaves);
  if (as.symmetric) {
    rep.reason = "system is symmetric";
    return rep;
  }
  if (t.label != goal) {
    rep.reason = "root is " + print_formula(t.label) + ", goal is " + print_formula(goal);
    return rep;
  }
  if (!detail::check_nodes(t, as, gamma, rep.reason)) return rep;
  for (const auto& [chi, n] : rep.excess) {
    if (!as.is_axiom_instance(chi)) {
      rep.reason = "non-axiom " + print_formula(chi) + " labels " + std::to_string(rep.leaves.multiplicity(chi)) +
                   " leaves but occurs " + std::to_string(gamma.multiplicity(chi)) + " times in the premises";
      return rep;
    }
  }
  rep.verdict = Verdict::plain;
  for (const auto& [chi, n] : rep.missing) {
    if (!as.is_axiom_instance(chi)) {
      rep.reason = "premise " + print_formula(chi) + " is unused";
      return rep;
    }
  }
  rep.verdict = Verdict::weakly_relevant;
  if (!rep.missing.empty()) {
    rep.reason = "axiom premises unused: " + print_multiset(rep.missing);
    return rep;
  }
  rep.verdict = Verdict::relevant;
  if (rep.leaves != gamma) {
    rep.reason = "extra axiom leaves: " + print_multiset(rep.excess);
    return rep;
  }
  rep.verdict = Verdict::strongly_relevant;
  return rep;
}

// ------------------------------------------------------------ composition

namespace detail {

inline bool replace_leaf(ProofTree& t, Formula psi, const ProofTree& s) {
  if (t.is_leaf()) {
    if (t.by == Just::premise && t.label == psi) {
      t = s;
      return true;
    }
    return false;
  }
  for (auto& c : t.children)
    if (replace_leaf(c, psi, s)) return true;
  return false;
}

}  // namespace detail

// Replaces the leftmost premise leaf labelled psi in t by s.
inline ProofTree cut_compose(const ProofTree& t, const ProofTree& s, Formula psi) {
  if (s.label != psi) throw ProofError("root-mismatch", "cut tree proves " + print_formula(s.label));
  ProofTree r = t;
  if (!detail::replace_leaf(r, psi, s))
    throw ProofError("no-leaf-labeled-psi", "no premise leaf labelled " + print_formula(psi));
  return r;
}

namespace detail {

inline const std::vector<Formula>& mp_shape() {
  static const std::vector<Formula> l{parse_schema("p -> q"), parse_schema("p")};
  return l;
}
inline bool is_mp(const Rule& r) { return same_shape(r, mp_shape(), {parse_schema("q")}); }
inline bool is_weakening(const Rule& r) { return same_shape(r, {parse_schema("p")}, {parse_schema("q -> p")}); }

}  // namespace detail

// Weakens the root phi to chi -> phi and discharges chi with a new premise leaf.
inline ProofTree pump_use(const ProofTree& t, Formula chi, const AxiomaticSystem& as, const std::string& mp_rule,
                          const std::string& weak_rule) {
  const Rule* mp = as.find(mp_rule);
  const Rule* wk = as.find(weak_rule);
  if (!mp || !detail::is_mp(*mp) || !wk || !detail::is_weakening(*wk))
    throw ProofError("required-rules-absent",
                     "need modus ponens '" + mp_rule + "' and weakening '" + weak_rule + "' in " + as.name);
  Formula phi = t.label;
  Formula weak = Formula::imp(chi, phi);
  ProofTree w = rule_node(weak, wk->name, {t});
  return rule_node(phi, mp->name, {w, premise_node(chi)});
}

// ----------------------------------------------------------------- search

struct SearchBounds {
  int max_nodes = 9;
  int max_formula_size = 16;
  int max_layers = 2;  // connective layers added on top of the subformula closure
};

struct SearchStats {
  long calls = 0;
  int layer = -1;
  std::size_t pool = 0;
};

namespace detail {

inline void collect_kinds(Formula f, std::set<Kind>& ks) {
  if (f.kind() == Kind::Neg || is_binary(f.kind())) ks.insert(f.kind());
  if (f.kind() == Kind::Neg) collect_kinds(f.arg(), ks);
  if (is_binary(f.kind())) {
    collect_kinds(f.lhs(), ks);
    collect_kinds(f.rhs(), ks);
  }
}

// Subformula closure of `seeds`, extended by `layers` rounds of the given connectives.
inline std::vector<Formula> candidate_pool(const std::vector<Formula>& seeds, const std::set<Kind>& kinds, int layers,
                                           int max_size) {
  std::set<Formula> pool;
  for (auto f : seeds) subformulas_into(f, pool);
  for (int l = 0; l < layers; ++l) {
    std::vector<Formula> cur(pool.begin(), pool.end());
    for (Kind k : kinds) {
      if (k == Kind::Neg) {
        for (auto a : cur)
          if (a.size() + 1 <= max_size) pool.insert(Formula::neg(a));
        continue;
      }
      for (auto a : cur)
        for (auto b : cur)
          if (a.size() + b.size() + 1 <= max_size) pool.insert(Formula::binary(k, a, b));
    }
  }
  std::vector<Formula> v;
  for (auto f : pool)
    if (f.size() <= max_size) v.push_back(f);
  std::stable_sort(v.begin(), v.end(), [](Formula a, Formula b) { return a.size() < b.size(); });
  return v;
}

// Ordered distributions of m into k parts.
inline void distributions(const FMS& m, std::size_t k, const std::function<bool(const std::vector<FMS>&)>& f) {
  std::vector<FMS> parts(k);
  if (k == 0) {
    if (m.empty()) f(parts);
    return;
  }
  std::function<bool(std::size_t, const FMS&)> rec = [&](std::size_t i, const FMS& rest) -> bool {
    if (i + 1 == k) {
      parts[i] = rest;
      return f(parts);
    }
    for (const auto& s : submultisets(rest)) {
      parts[i] = s;
      if (rec(i + 1, mdiff(rest, s))) return true;
    }
    return false;
  };
  rec(0, m);
}

class TreeSearcher {
 public:
  TreeSearcher(const AxiomaticSystem& as, std::vector<Formula> pool, int max_size, SearchStats* st)
      : as_(as), pool_(std::move(pool)), max_size_(max_size), st_(st) {}

  std::optional<ProofTree> minproof(Formula goal, const FMS& ms, int budget) {
    if (st_) ++st_->calls;
    if (budget < 1 || static_cast<int>(ms.size()) > budget) return std::nullopt;
    auto key = std::make_pair(goal, ms);
    {
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        if (it->second.best) {
          if (it->second.best->size() <= budget) return it->second.best;
          return std::nullopt;
        }
        if (it->second.failed_upto >= budget) return std::nullopt;
      }
    }
    std::optional<ProofTree> best;
    int best_size = budget + 1;
    if (ms.size() == 1 && ms.contains(goal)) {
      best = premise_node(goal);
      best_size = 1;
    } else if (ms.empty()) {
      if (auto ax = as_.axiom_instance(goal)) {
        best = axiom_node(goal, *ax);
        best_size = 1;
      }
    }
    for (const Rule* r : as_.inference_rules()) {
      if (best_size <= 2) break;
      if (r->right.size() != 1) continue;
      auto s0 = match(r->right[0], goal);
      if (!s0) continue;
      std::vector<std::string> open;
      for (const auto& m : r->metas())
        if (!s0->count(m)) open.push_back(m);
      std::function<void(std::size_t, Subst&)> assign = [&](std::size_t i, Subst& s) {
        if (i == open.size()) {
          try_rule(*r, s, goal, ms, best, best_size);
          return;
        }
        for (auto f : pool_) {
          s[open[i]] = f;
          assign(i + 1, s);
          if (best_size <= 2) break;
        }
        s.erase(open[i]);
      };
      Subst s = *s0;
      assign(0, s);
    }
    auto& e = memo_[key];
    if (best) {
      e.best = best;
    } else {
      e.failed_upto = std::max(e.failed_upto, budget);
    }
    return best;
  }

 private:
  struct Entry {
    int failed_upto = 0;
    std::optional<ProofTree> best;
  };

  void try_rule(const Rule& r, const Subst& s, Formula goal, const FMS& ms, std::optional<ProofTree>& best,
                int& best_size) {
    std::vector<Formula> kids;
    for (auto l : r.left) {
      Formula k = substitute(l, s);
      if (k.size() > max_size_) return;
      kids.push_back(k);
    }
    distributions(ms, kids.size(), [&](const std::vector<FMS>& parts) {
      int lb = 1;
      for (const auto& p : parts) lb += std::max<int>(1, static_cast<int>(p.size()));
      if (lb >= best_size) return false;
      int total = 1;
      std::vector<ProofTree> subs;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        int rest = 0;
        for (std::size_t j = i + 1; j < kids.size(); ++j) rest += std::max<int>(1, static_cast<int>(parts[j].size()));
        int cap = best_size - 1 - total - rest;
        auto t = minproof(kids[i], parts[i], cap);
        if (!t) return false;
        total += t->size();
        subs.push_back(std::move(*t));
      }
      best = rule_node(goal, r.name, std::move(subs));
      best_size = total;
      return best_size <= 2;
    });
  }

  const AxiomaticSystem& as_;
  std::vector<Formula> pool_;
  int max_size_;
  SearchStats* st_;
  std::map<std::pair<Formula, FMS>, Entry> memo_;
};

}  // namespace detail

// Bounded search for a relevant proof of goal from gamma. Returns the smallest
// tree found at the first layer that has one; nullopt is not a disproof.
inline std::optional<ProofTree> search(const AxiomaticSystem& as, const FMS& gamma, Formula goal,
                                       const SearchBounds& b = {}, SearchStats* st = nullptr) {
  if (as.symmetric || b.max_nodes < 1 || b.max_formula_size < 1) return std::nullopt;
  std::set<Kind> kinds;
  for (const auto& r : as.rules) {
    for (auto f : r.left) detail::collect_kinds(f, kinds);
    for (auto f : r.right) detail::collect_kinds(f, kinds);
  }
  std::vector<Formula> seeds = gamma.elements();
  seeds.push_back(goal);
  for (int layer = 0; layer <= b.max_layers; ++layer) {
    auto pool = detail::candidate_pool(seeds, kinds, layer, b.max_formula_size);
    if (st) {
      st->layer = layer;
      st->pool = pool.size();
    }
    detail::TreeSearcher s(as, pool, b.max_formula_size, st);
    if (auto t = s.minproof(goal, gamma, b.max_nodes)) return t;
  }
  return std::nullopt;
}

// ------------------------------------------------------ deduction theorem

namespace detail {

struct BciNames {
  std::string I, B, C, mp;
};

inline std::optional<BciNames> bci_names(const AxiomaticSystem& as) {
  BciNames n;
  const Formula I = parse_schema("p -> p");
  const Formula B = parse_schema("(p -> q) -> ((r -> p) -> (r -> q))");
  const Formula C = parse_schema("(p -> (q -> r)) -> (q -> (p -> r))");
  for (const auto& r : as.rules) {
    if (r.is_axiom() && r.right.size() == 1) {
      if (n.I.empty() && same_shape(r, {}, {I})) n.I = r.name;
      if (n.B.empty() && same_shape(r, {}, {B})) n.B = r.name;
      if (n.C.empty() && same_shape(r, {}, {C})) n.C = r.name;
    } else if (n.mp.empty() && is_mp(r)) {
      n.mp = r.name;
    }
  }
  if (n.I.empty() || n.B.empty() || n.C.empty() || n.mp.empty()) return std::nullopt;
  return n;
}

// Only BCI axioms, the fusion residuation axioms and modus ponens are allowed.
inline bool bci_family(const AxiomaticSystem& as) {
  const std::vector<Formula> allowed{parse_schema("p -> p"), parse_schema("(p -> q) -> ((r -> p) -> (r -> q))"),
                                     parse_schema("(p -> (q -> r)) -> (q -> (p -> r))"),
                                     parse_schema("((p o q) -> r) -> (p -> (q -> r))"),
                                     parse_schema("(p -> (q -> r)) -> ((p o q) -> r)")};
  for (const auto& r : as.rules) {
    if (r.is_axiom()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || same_shape(r, {}, {a});
      if (!ok) return false;
    } else if (!is_mp(r)) {
      return false;
    }
  }
  return true;
}

inline bool find_leftmost(const ProofTree& t, Formula phi, bool premise_only, std::vector<std::size_t>& path) {
  if (t.is_leaf()) return t.label == phi && (!premise_only || t.by == Just::premise);
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    path.push_back(i);
    if (find_leftmost(t.children[i], phi, premise_only, path)) return true;
    path.pop_back();
  }
  return false;
}

// Proof of phi -> label(t) without the leaf at `path`.
inline ProofTree discharge(const ProofTree& t, Formula phi, const std::vector<std::size_t>& path, std::size_t depth,
                           const BciNames& n) {
  if (depth == path.size()) {
    Formula f = Formula::imp(phi, phi);
    return axiom_node(f, n.I);
  }
  // Internal node: modus ponens with children {chi -> psi, chi}.
  Formula psi = t.label;
  std::size_t hot = path[depth];
  std::size_t major = t.children[0].label == Formula::imp(t.children[1].label, psi) ? 0 : 1;
  std::size_t minor = 1 - major;
  const ProofTree& maj = t.children[major];
  const ProofTree& mino = t.children[minor];
  Formula chi = mino.label;
  ProofTree sub = discharge(t.children[hot], phi, path, depth + 1, n);
  if (hot == major) {
    // phi -> (chi -> psi)  ==C==>  chi -> (phi -> psi), then mp with chi.
    Formula cx = Formula::imp(Formula::imp(phi, Formula::imp(chi, psi)), Formula::imp(chi, Formula::imp(phi, psi)));
    ProofTree c = axiom_node(cx, n.C);
    ProofTree step = rule_node(cx.rhs(), n.mp, {c, sub});
    return rule_node(Formula::imp(phi, psi), n.mp, {step, mino});
  }
  // chi -> psi and phi -> chi  ==B==>  phi -> psi.
  Formula bx = Formula::imp(Formula::imp(chi, psi), Formula::imp(Formula::imp(phi, chi), Formula::imp(phi, psi)));
  ProofTree b = axiom_node(bx, n.B);
  ProofTree step = rule_node(bx.rhs(), n.mp, {b, maj});
  return rule_node(Formula::imp(phi, psi), n.mp, {step, sub});
}

inline void rejustify(ProofTree& t, const AxiomaticSystem& as, const FMS& gamma) {
  if (t.is_leaf()) {
    if (t.by == Just::premise && !gamma.contains(t.label))
      if (auto ax = as.axiom_instance(t.label)) t = axiom_node(t.label, *ax);
    return;
  }
  for (auto& c : t.children) rejustify(c, as, gamma);
}

}  // namespace detail

// From a relevant proof of psi from gamma + [phi], builds one of phi -> psi from gamma.
// The discharged occurrence is the leftmost premise leaf labelled phi.
inline ProofTree deduction_transform(const ProofTree& t, const AxiomaticSystem& as, const FMS& gamma, Formula phi) {
  auto names = detail::bci_names(as);
  if (!names || !detail::bci_family(as))
    throw ProofError("system-not-supported", as.name + " is not BCI or BCI with fusion");
  FMS full = gamma;
  full.add(phi);
  auto rep = verify(t, as, full, t.label);
  if (rep.verdict < Verdict::relevant)
    throw ProofError("input-not-relevant", std::string("verdict ") + verdict_name(rep.verdict) + ": " + rep.reason);
  std::vector<std::size_t> path;
  if (!detail::find_leftmost(t, phi, true, path)) {
    path.clear();
    detail::find_leftmost(t, phi, false, path);
  }
  ProofTree out = detail::discharge(t, phi, path, 0, *names);
  detail::rejustify(out, as, gamma);
  return out;
}

// ------------------------------------------------------------- proof files

namespace detail {

inline std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

inline void write_proof(std::ostream& os, const ProofTree& t) {
  os << "{\"formula\": " << json_str(print_formula(t.label)) << ", \"by\": ";
  if (t.by == Just::premise) {
    os << "\"premise\"";
  } else {
    os << "{\"" << (t.by == Just::axiom ? "axiom" : "rule") << "\": " << json_str(t.name);
    if (t.sigma) {
      os << ", \"sigma\": {";
      bool first = true;
      for (const auto& [k, v] : *t.sigma) {
        os << (first ? "" : ", ") << json_str(k) << ": " << json_str(print_formula(v));
        first = false;
      }
      os << "}";
    }
    os << "}";
  }
  if (!t.children.empty()) {
    os << ", \"children\": [";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (i) os << ", ";
      write_proof(os, t.children[i]);
    }
    os << "]";
  }
  os << "}";
}

inline ProofTree read_proof(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("formula") || !j.contains("by"))
    throw ProofError("bad-proof-file", "node needs \"formula\" and \"by\"");
  ProofTree t;
  t.label = parse_formula(j.at("formula").get<std::string>());
  const auto& by = j.at("by");
  if (by.is_string()) {
    if (by.get<std::string>() != "premise") throw ProofError("bad-proof-file", "unknown justification " + by.dump());
    t.by = Just::premise;
  } else if (by.contains("axiom")) {
    t.by = Just::axiom;
    t.name = by.at("axiom").get<std::string>();
  } else if (by.contains("rule")) {
    t.by = Just::rule;
    t.name = by.at("rule").get<std::string>();
  } else {
    throw ProofError("bad-proof-file", "unknown justification " + by.dump());
  }
  if (by.is_object() && by.contains("sigma")) {
    Subst s;
    for (const auto& [k, v] : by.at("sigma").items()) s[k] = parse_formula(v.get<std::string>());
    t.sigma = s;
  }
  if (j.contains("children"))
    for (const auto& c : j.at("children")) t.children.push_back(read_proof(c));
  return t;
}

}  // namespace detail

inline std::string proof_to_json(const ProofTree& t) {
  std::ostringstream os;
  detail::write_proof(os, t);
  return os.str();
}

inline ProofTree proof_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ProofError("bad-proof-file", e.what());
  }
  return detail::read_proof(j);
}

// Indented rendering for reports.
inline void render_proof(std::ostream& os, const ProofTree& t, int depth = 0) {
  os << std::string(2 * depth, ' ') << print_formula(t.label) << "  [";
  if (t.by == Just::premise) os << "premise";
  if (t.by == Just::axiom) os << "axiom " << t.name;
  if (t.by == Just::rule) os << t.name;
  os << "]\n";
  for (const auto& c : t.children) render_proof(os, c, depth + 1);
}

}  // namespace relcon
