#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "relcon/multiset.hpp"
#include "relcon/oracle.hpp"
#include "relcon/semantics.hpp"
#include "relcon/syntax.hpp"
#include "relcon/treeproof.hpp"

namespace relcon {

// ---------------------------------------------------------------- derivations

struct DerivationStep {
  FMS ms;
  std::string rule;  // empty for the first step, or to let the checker pick a rule
  std::optional<Subst> sigma;
};

struct Derivation {
  std::vector<DerivationStep> steps;

  std::size_t size() const { return steps.size(); }
  const FMS& first() const { return steps.front().ms; }
  const FMS& last() const { return steps.back().ms; }
};

inline bool operator==(const DerivationStep& a, const DerivationStep& b) {
  return a.ms == b.ms && a.rule == b.rule && a.sigma == b.sigma;
}
inline bool operator==(const Derivation& a, const Derivation& b) { return a.steps == b.steps; }

enum class DerivVerdict { invalid, plain, relevant };

inline const char* deriv_verdict_name(DerivVerdict v) {
  switch (v) {
    case DerivVerdict::invalid: return "invalid";
    case DerivVerdict::plain: return "plain";
    case DerivVerdict::relevant: return "relevant";
  }
  return "?";
}

struct RuleInstance {
  const Rule* rule = nullptr;
  Subst sigma;
  FMS consumed;
  FMS produced;
};

namespace detail {

inline FMS instantiate(const std::vector<Formula>& schemata, const Subst& s) {
  FMS m;
  for (auto f : schemata) m.add(substitute(f, s));
  return m;
}

// Matches schemata[i..] against distinct occurrences drawn from `avail`.
inline bool match_occurrences(const std::vector<Formula>& schemata, std::size_t i, FMS& avail, const Subst& s,
                              const std::function<bool(const Subst&)>& k) {
  if (i == schemata.size()) return k(s);
  std::vector<Formula> cand;
  for (auto& [f, _] : avail) cand.push_back(f);
  for (auto f : cand) {
    auto s2 = match(schemata[i], f, s);
    if (!s2) continue;
    avail.remove(f);
    bool stop = match_occurrences(schemata, i + 1, avail, *s2, k);
    avail.add(f);
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

// Instantiation of r turning `prev` into `next`: sigma(left) <= prev and
// next = (prev - sigma(left)) + sigma(right).
inline std::optional<Subst> step_instance(const Rule& r, const FMS& prev, const FMS& next, const Subst& base = {}) {
  std::optional<Subst> found;
  FMS avail = prev;
  detail::match_occurrences(r.left, 0, avail, base, [&](const Subst& s) {
    FMS consumed = detail::instantiate(r.left, s);
    FMS ctx = mdiff(prev, consumed);
    if (!submultiset(ctx, next)) return false;
    FMS rest = mdiff(next, ctx);
    if (rest.size() != r.right.size()) return false;
    FMS pool = rest;
    return detail::match_occurrences(r.right, 0, pool, s, [&](const Subst& s2) {
      if (detail::instantiate(r.right, s2) != rest) return false;
      found = s2;
      return true;
    });
  });
  return found;
}

struct DerivationReport {
  DerivVerdict verdict = DerivVerdict::invalid;
  std::string reason;
  std::vector<std::string> rules;  // rule used at each transition
  std::vector<Subst> sigmas;
};

inline DerivationReport check_derivation(const Derivation& d, const AxiomaticSystem& as, const FMS& gamma,
                                         const FMS& delta) {
  DerivationReport rep;
  if (d.steps.empty()) {
    rep.reason = "empty derivation";
    return rep;
  }
  if (d.first() != gamma) {
    rep.reason = "first step " + print_multiset(d.first()) + " is not the premise multiset " + print_multiset(gamma);
    return rep;
  }
  for (std::size_t i = 1; i < d.steps.size(); ++i) {
    const auto& st = d.steps[i];
    const FMS& prev = d.steps[i - 1].ms;
    std::optional<Subst> s;
    const Rule* used = nullptr;
    if (!st.rule.empty()) {
      used = as.find(st.rule);
      if (!used) {
        rep.reason = "step " + std::to_string(i + 1) + ": unknown rule '" + st.rule + "'";
        return rep;
      }
      s = step_instance(*used, prev, st.ms, st.sigma.value_or(Subst{}));
    } else {
      for (const auto& r : as.rules) {
        s = step_instance(r, prev, st.ms);
        if (s) {
          used = &r;
          break;
        }
      }
    }
    if (!s) {
      rep.reason = "step " + std::to_string(i + 1) + ": " + print_multiset(st.ms) + " does not follow from " +
                   print_multiset(prev) + (st.rule.empty() ? "" : " by " + st.rule);
      return rep;
    }
    rep.rules.push_back(used->name);
    rep.sigmas.push_back(*s);
  }
  if (!submultiset(delta, d.last())) {
    rep.reason = "conclusion " + print_multiset(delta) + " is not contained in the last step " +
                 print_multiset(d.last());
    return rep;
  }
  rep.verdict = d.last() == delta ? DerivVerdict::relevant : DerivVerdict::plain;
  if (rep.verdict == DerivVerdict::plain) rep.reason = "last step has extra " + print_multiset(mdiff(d.last(), delta));
  return rep;
}

// Every instance of r applicable to `state`. Metavariables that occur only on
// the right are drawn by matching right schemata against `pool`.
inline void for_each_instance(const Rule& r, const FMS& state, const std::vector<Formula>& pool, int max_size,
                              const std::function<bool(const RuleInstance&)>& f) {
  FMS avail = state;
  std::set<std::pair<FMS, FMS>> seen;
  detail::match_occurrences(r.left, 0, avail, {}, [&](const Subst& s) {
    std::function<bool(std::size_t, const Subst&)> right = [&](std::size_t i, const Subst& s2) -> bool {
      if (i == r.right.size()) {
        RuleInstance ri{&r, s2, detail::instantiate(r.left, s2), detail::instantiate(r.right, s2)};
        for (auto& [g, _] : ri.produced)
          if (g.size() > max_size) return false;
        if (!seen.insert({ri.consumed, ri.produced}).second) return false;
        return f(ri);
      }
      bool open = false;
      for (auto& m : metavariables(r.right[i]))
        if (!s2.count(m)) open = true;
      if (!open) return right(i + 1, s2);
      for (auto g : pool) {
        auto s3 = match(r.right[i], g, s2);
        if (s3 && right(i + 1, *s3)) return true;
      }
      return false;
    };
    return right(0, s);
  });
}

struct DeriveBounds {
  int max_steps = 6;
  int max_formula_size = 16;
  int max_layers = 2;
  std::size_t max_states = 200000;
};

struct DeriveStats {
  std::size_t states = 0;
  int layer = -1;
  bool exhausted = true;  // false if max_states cut the search short
};

namespace detail {

inline std::set<Kind> system_kinds(const AxiomaticSystem& as) {
  std::set<Kind> ks;
  for (const auto& r : as.rules) {
    for (auto f : r.left) collect_kinds(f, ks);
    for (auto f : r.right) collect_kinds(f, ks);
  }
  return ks;
}

}  // namespace detail

// Shortest derivation from gamma to delta within the bounds (breadth first, rules in file order).
inline std::optional<Derivation> derive_search(const AxiomaticSystem& as, const FMS& gamma, const FMS& delta,
                                               const DeriveBounds& b = {}, DeriveStats* stats = nullptr) {
  DeriveStats local;
  DeriveStats& st = stats ? *stats : local;
  st = DeriveStats{};
  if (gamma == delta) {
    st.layer = 0;
    return Derivation{{{gamma, "", std::nullopt}}};
  }
  std::vector<Formula> seeds = gamma.elements();
  for (auto f : delta.elements()) seeds.push_back(f);
  auto kinds = detail::system_kinds(as);
  for (int layer = 0; layer <= b.max_layers; ++layer) {
    st.layer = layer;
    auto pool = detail::candidate_pool(seeds, kinds, layer, b.max_formula_size);
    struct Node {
      FMS ms;
      int parent;
      const Rule* rule;
      Subst sigma;
      int depth;
    };
    std::vector<Node> nodes{{gamma, -1, nullptr, {}, 0}};
    std::set<FMS> visited{gamma};
    std::deque<int> queue{0};
    int goal = -1;
    while (!queue.empty() && goal < 0) {
      int cur = queue.front();
      queue.pop_front();
      if (nodes[static_cast<std::size_t>(cur)].depth >= b.max_steps) continue;
      FMS ms = nodes[static_cast<std::size_t>(cur)].ms;
      int depth = nodes[static_cast<std::size_t>(cur)].depth;
      for (const auto& r : as.rules) {
        for_each_instance(r, ms, pool, b.max_formula_size, [&](const RuleInstance& ri) {
          FMS next = msum(mdiff(ms, ri.consumed), ri.produced);
          if (!visited.insert(next).second) return false;
          if (visited.size() > b.max_states) {
            st.exhausted = false;
            return true;
          }
          nodes.push_back({next, cur, ri.rule, ri.sigma, depth + 1});
          int id = static_cast<int>(nodes.size()) - 1;
          if (next == delta) {
            goal = id;
            return true;
          }
          queue.push_back(id);
          return false;
        });
        if (goal >= 0 || !st.exhausted) break;
      }
      if (!st.exhausted) break;
    }
    st.states += visited.size();
    if (goal >= 0) {
      Derivation d;
      for (int i = goal; i >= 0; i = nodes[static_cast<std::size_t>(i)].parent) {
        const auto& n = nodes[static_cast<std::size_t>(i)];
        d.steps.push_back({n.ms, n.rule ? n.rule->name : "", n.rule ? std::optional<Subst>(n.sigma) : std::nullopt});
      }
      std::reverse(d.steps.begin(), d.steps.end());
      return d;
    }
    if (!st.exhausted) return std::nullopt;
  }
  return std::nullopt;
}

// Certificate of underivability: if every rule preserves the integer sum of its
// formulas (with metavariables read as atoms) but gamma and delta have different
// sums, no derivation from gamma to delta exists at any length.
inline std::optional<std::string> sum_invariant_certificate(const AxiomaticSystem& as, const FMS& gamma,
                                                            const FMS& delta) {
  auto atomize = [](Formula f) {
    Subst s;
    for (auto& m : metavariables(f)) s[m] = Formula::atom("?" + m);
    return substitute(f, s);
  };
  try {
    for (const auto& r : as.rules) {
      FMS l, rr;
      for (auto f : r.left) l.add(atomize(f));
      for (auto f : r.right) rr.add(atomize(f));
      auto a = linear_form(l), c = linear_form(rr);
      if (!a || !c || !(*a == *c)) return std::nullopt;
    }
    auto g = linear_form(gamma), d = linear_form(delta);
    if (!g || !d || *g == *d) return std::nullopt;
    std::ostringstream os;
    os << "every rule preserves the integer sum; sum" << print_multiset(gamma) << " differs from sum"
       << print_multiset(delta);
    return os.str();
  } catch (const OverflowError&) {
    return std::nullopt;
  }
}

// ------------------------------------------------------------ JSON format

inline std::string derivation_to_json(const Derivation& d) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    out += "  {\"multiset\": " + detail::json_str(print_multiset(s.ms));
    if (!s.rule.empty() || i > 0) {
      out += ", \"by\": {\"rule\": " + detail::json_str(s.rule);
      if (s.sigma) {
        out += ", \"sigma\": {";
        bool first = true;
        for (auto& [k, v] : *s.sigma) {
          if (!first) out += ", ";
          first = false;
          out += detail::json_str(k) + ": " + detail::json_str(print_formula(v));
        }
        out += "}";
      }
      out += "}";
    }
    out += i + 1 < d.steps.size() ? "},\n" : "}\n";
  }
  return out + "]\n";
}

inline Derivation derivation_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ProofError("bad-json", e.what());
  }
  if (!j.is_array() || j.empty()) throw ProofError("bad-json", "derivation must be a nonempty array");
  Derivation d;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("multiset") || !rec["multiset"].is_string())
      throw ProofError("bad-json", "each step needs a \"multiset\" string");
    DerivationStep st{parse_multiset(rec["multiset"].get<std::string>()), "", std::nullopt};
    if (rec.contains("by")) {
      const auto& by = rec["by"];
      if (!by.is_object() || !by.contains("rule") || !by["rule"].is_string())
        throw ProofError("bad-json", "\"by\" must be {\"rule\": NAME}");
      st.rule = by["rule"].get<std::string>();
      if (by.contains("sigma")) {
        Subst s;
        for (auto& [k, v] : by["sigma"].items()) s[k] = parse_formula(v.get<std::string>());
        st.sigma = s;
      }
    }
    d.steps.push_back(std::move(st));
  }
  return d;
}

// --------------------------------------------------------- symmetrization

struct SymmetrizeOptions {
  std::size_t max_partitions = 1'000'000;
};

namespace detail {

inline double binom(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace detail

inline double partition_count(const FMS& gamma, std::size_t n) {
  if (n == 0) return gamma.empty() ? 1 : 0;
  double total = 1;
  for (auto& [_, c] : gamma) total *= detail::binom(c + n - 1, n - 1);
  return total;
}

// Calls f on each ordered partition gamma = parts[0] + ... + parts[n-1]; stops when f returns true.
inline void for_each_partition(const FMS& gamma, std::size_t n, const std::function<bool(const std::vector<FMS>&)>& f) {
  std::vector<std::pair<Formula, std::size_t>> items(gamma.begin(), gamma.end());
  std::vector<FMS> parts(n);
  std::function<bool(std::size_t)> elem;
  std::function<bool(std::size_t, std::size_t, std::size_t)> slot = [&](std::size_t e, std::size_t i,
                                                                         std::size_t left) -> bool {
    Formula x = items[e].first;
    if (i + 1 == n) {
      parts[i].add(x, left);
      bool stop = elem(e + 1);
      parts[i].remove(x, left);
      return stop;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      parts[i].add(x, k);
      bool stop = slot(e, i + 1, left - k);
      parts[i].remove(x, k);
      if (stop) return true;
    }
    return false;
  };
  elem = [&](std::size_t e) -> bool {
    if (e == items.size()) return f(parts);
    return slot(e, 0, items[e].second);
  };
  if (n == 0) {
    if (gamma.empty()) f(parts);
    return;
  }
  elem(0);
}

// The symmetrization of an asymmetric relation, using the ordered-partition clause
// for nonempty conclusions and the theorem clause for the empty one.
inline Tri symmetrize(const AsymOracle& o, const FMS& gamma, const FMS& delta, const SymmetrizeOptions& opt = {}) {
  if (delta.empty()) {
    if (o.theorem_hook) return o.theorem_hook(gamma);
    if (o.theorem_basis) {
      Tri r = Tri::holds;
      for (auto chi : *o.theorem_basis) r = tri_and(r, o(gamma, chi));
      return r;
    }
    return Tri::unknown;
  }
  auto chis = delta.elements();
  if (partition_count(gamma, chis.size()) > static_cast<double>(opt.max_partitions)) return Tri::unknown;
  std::map<std::pair<FMS, Formula>, Tri> memo;
  auto ask = [&](const FMS& g, Formula c) {
    auto key = std::make_pair(g, c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    return memo[key] = o(g, c);
  };
  Tri best = Tri::fails;
  for_each_partition(gamma, chis.size(), [&](const std::vector<FMS>& parts) {
    Tri r = Tri::holds;
    for (std::size_t i = 0; i < chis.size() && r != Tri::fails; ++i) r = tri_and(r, ask(parts[i], chis[i]));
    if (r == Tri::holds) {
      best = Tri::holds;
      return true;
    }
    if (r == Tri::unknown) best = Tri::unknown;
    return false;
  });
  return best;
}

inline SymOracle symmetrization(AsymOracle o, SymmetrizeOptions opt = {}) {
  std::string name = o.name + "^s";
  return SymOracle{name, [o = std::move(o), opt](const FMS& g, const FMS& d) { return symmetrize(o, g, d, opt); }};
}

// The asymmetric part: gamma |-a phi iff gamma |- [phi].
inline Tri asymmetric(const SymOracle& o, const FMS& gamma, Formula phi) { return o(gamma, FMS{phi}); }

// Theorems of the asymmetric part among `universe`.
inline std::vector<Formula> theorems_within(const SymOracle& o, const std::vector<Formula>& universe) {
  std::vector<Formula> out;
  for (auto f : universe)
    if (asymmetric(o, {}, f) == Tri::holds) out.push_back(f);
  return out;
}

inline AsymOracle asymmetric_part(SymOracle o, std::optional<std::vector<Formula>> basis = std::nullopt,
                                  std::function<Tri(const FMS&)> hook = {}) {
  AsymOracle a;
  a.name = o.name + "^a";
  a.rel = [o = std::move(o)](const FMS& g, Formula f) { return asymmetric(o, g, f); };
  a.theorem_basis = std::move(basis);
  a.theorem_hook = std::move(hook);
  return a;
}

// Symmetric relation from a monotone asymmetric one: every conclusion follows from all premises.
inline SymOracle pointwise_symmetric(AsymOracle o) {
  std::string name = o.name + "^set";
  return SymOracle{name, [o = std::move(o)](const FMS& g, const FMS& d) {
                     if (d.empty()) {
                       if (o.theorem_hook) return o.theorem_hook(g);
                       if (!o.theorem_basis) return Tri::unknown;
                       Tri r = Tri::holds;
                       for (auto chi : *o.theorem_basis) r = tri_and(r, o(g, chi));
                       return r;
                     }
                     Tri r = Tri::holds;
                     for (auto& [chi, _] : d) r = tri_and(r, o(g, chi));
                     return r;
                   }};
}

// Over multisets of the atom x: gamma |- delta iff gamma = delta or gamma(x) > delta(x) >= 2.
inline SymOracle threshold_oracle(const std::string& x = "x") {
  Formula fx = Formula::atom(x);
  return SymOracle{"threshold", [fx](const FMS& g, const FMS& d) {
                     if (g == d) return Tri::holds;
                     if (g.distinct() > 1 || d.distinct() > 1) return Tri::fails;
                     if ((!g.empty() && !g.contains(fx)) || (!d.empty() && !d.contains(fx))) return Tri::fails;
                     return tri(g.size() > d.size() && d.size() >= 2);
                   }};
}

// Relevant derivability in `as` within bounds, as a symmetric oracle (unknown when not found).
inline SymOracle derivability_oracle(const AxiomaticSystem& as, DeriveBounds b = {}) {
  return SymOracle{as.name + "^r", [as, b](const FMS& g, const FMS& d) {
                     if (derive_search(as, g, d, b)) return Tri::holds;
                     if (sum_invariant_certificate(as, g, d)) return Tri::fails;
                     return Tri::unknown;
                   }};
}

// Relevant tree-provability in `as` within bounds (unknown when not found).
inline AsymOracle provability_oracle(const AxiomaticSystem& as, SearchBounds b = {}) {
  AsymOracle o;
  o.name = as.name + "^r";
  o.rel = [as, b](const FMS& g, Formula f) { return search(as, g, f, b) ? Tri::holds : Tri::unknown; };
  return o;
}

// ---------------------------------------------------------- tree extraction

struct Extraction {
  FMS gamma_phi;
  ProofTree tree;
  FMS gamma_r;
  Derivation residual;
};

// Splits a relevant derivation in a single-conclusion system into a tree proof
// of phi and a relevant derivation of the remaining conclusions.
inline Extraction extract_tree(const Derivation& d, const AxiomaticSystem& as, Formula phi) {
  FMS gamma = d.first(), delta = d.last();
  auto rep = check_derivation(d, as, gamma, delta);
  if (rep.verdict != DerivVerdict::relevant) throw ProofError("not-relevant", rep.reason);
  if (!delta.contains(phi)) throw ProofError("not-in-conclusion", print_formula(phi) + " is not concluded");
  for (auto& name : rep.rules)
    if (as.find(name)->right.size() != 1) throw ProofError("system-not-supported", "rule " + name + " is symmetric");

  // Occurrence lists per level. Each node remembers where it came from:
  // a carried node points to one node one level down, a conclusion to the consumed ones.
  struct Occ {
    Formula label;
    int from = -1;             // carried from this index at the previous level
    std::vector<int> consumed; // for a rule conclusion: indices at the previous level
    int step = -1;             // transition index producing this conclusion
  };
  std::vector<std::vector<Occ>> lv;
  {
    std::vector<Occ> l0;
    for (auto f : gamma.elements()) l0.push_back({f, -1, {}, -1});
    lv.push_back(std::move(l0));
  }
  for (std::size_t i = 0; i < rep.rules.size(); ++i) {
    const Rule& r = *as.find(rep.rules[i]);
    const auto& prev = lv.back();
    std::vector<bool> taken(prev.size(), false);
    std::vector<int> consumed;
    for (auto f : r.left) {
      Formula g = substitute(f, rep.sigmas[i]);
      for (std::size_t j = 0; j < prev.size(); ++j)
        if (!taken[j] && prev[j].label == g) {
          taken[j] = true;
          consumed.push_back(static_cast<int>(j));
          break;
        }
    }
    std::vector<Occ> next;
    for (std::size_t j = 0; j < prev.size(); ++j)
      if (!taken[j]) next.push_back({prev[j].label, static_cast<int>(j), {}, -1});
    next.push_back({substitute(r.right[0], rep.sigmas[i]), -1, consumed, static_cast<int>(i)});
    lv.push_back(std::move(next));
  }

  std::vector<std::vector<bool>> used(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i) used[i].assign(lv[i].size(), false);
  FMS gamma_phi;
  std::function<ProofTree(std::size_t, int)> build = [&](std::size_t level, int idx) -> ProofTree {
    used[level][static_cast<std::size_t>(idx)] = true;
    const Occ& o = lv[level][static_cast<std::size_t>(idx)];
    if (level == 0) {
      gamma_phi.add(o.label);
      return premise_node(o.label);
    }
    if (o.step < 0) return build(level - 1, o.from);
    const Rule& r = *as.find(rep.rules[static_cast<std::size_t>(o.step)]);
    if (r.is_axiom()) return axiom_node(o.label, r.name);
    std::vector<ProofTree> kids;
    for (int c : o.consumed) kids.push_back(build(level - 1, c));
    return rule_node(o.label, r.name, std::move(kids));
  };
  std::size_t top = lv.size() - 1;
  int root = -1;
  for (std::size_t j = 0; j < lv[top].size(); ++j)
    if (lv[top][j].label == phi) {
      root = static_cast<int>(j);
      break;
    }
  Extraction ex;
  ex.tree = build(top, root);
  ex.gamma_phi = gamma_phi;
  for (std::size_t i = 0; i < lv.size(); ++i) {
    FMS rest;
    for (std::size_t j = 0; j < lv[i].size(); ++j)
      if (!used[i][j]) rest.add(lv[i][j].label);
    if (i == 0) {
      ex.gamma_r = rest;
      ex.residual.steps.push_back({rest, "", std::nullopt});
    } else if (rest != ex.residual.last()) {
      ex.residual.steps.push_back({rest, rep.rules[i - 1], rep.sigmas[i - 1]});
    }
  }
  return ex;
}

}  // namespace relcon
