#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relcon/multiset.hpp"
#include "relcon/oracle.hpp"
#include "relcon/syntax.hpp"

namespace relcon {

enum class Law {
  Reflexivity,
  Cut,
  Monotonicity,
  Contraction,
  RelevantCut,
  TheoremRemoval,
  GeneralizedReflexivity,
  Transitivity,
  Compatibility,
  rContraction,
  MultiCut,
  TheoremReflexivity,
};

inline const char* law_name(Law l) {
  switch (l) {
    case Law::Reflexivity: return "Reflexivity";
    case Law::Cut: return "Cut";
    case Law::Monotonicity: return "Monotonicity";
    case Law::Contraction: return "Contraction";
    case Law::RelevantCut: return "RelevantCut";
    case Law::TheoremRemoval: return "TheoremRemoval";
    case Law::GeneralizedReflexivity: return "GeneralizedReflexivity";
    case Law::Transitivity: return "Transitivity";
    case Law::Compatibility: return "Compatibility";
    case Law::rContraction: return "rContraction";
    case Law::MultiCut: return "MultiCut";
    case Law::TheoremReflexivity: return "TheoremReflexivity";
  }
  return "?";
}

inline std::optional<Law> law_from_name(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Law::TheoremReflexivity); ++i)
    if (s == law_name(static_cast<Law>(i))) return static_cast<Law>(i);
  return std::nullopt;
}

inline const std::vector<Law>& asym_laws() {
  static const std::vector<Law> v{Law::Reflexivity,    Law::Cut,           Law::Monotonicity,
                                  Law::Contraction,    Law::RelevantCut,   Law::TheoremRemoval,
                                  Law::GeneralizedReflexivity};
  return v;
}

inline const std::vector<Law>& sym_laws() {
  static const std::vector<Law> v{Law::Reflexivity,  Law::Transitivity, Law::Compatibility,
                                  Law::Monotonicity, Law::Contraction,  Law::rContraction,
                                  Law::GeneralizedReflexivity, Law::TheoremReflexivity, Law::MultiCut,
                                  Law::TheoremRemoval};
  return v;
}

// Finite formula universe and multiset size bound. Laws are checked on the
// instances whose multisets all have at most max_size elements.
struct SampleDomain {
  std::vector<Formula> universe;
  std::size_t max_size = 3;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 100000;  // instances; above this, seeded sampling
  std::size_t samples = 20000;
};

inline std::vector<Formula> numeral_universe(long long lo, long long hi) {
  std::vector<Formula> u;
  for (long long n = lo; n <= hi; ++n) u.push_back(Formula::numeral(n));
  return u;
}

enum class LawStatus { passed, counterexample, inconclusive };

inline const char* law_status_name(LawStatus s) {
  switch (s) {
    case LawStatus::passed: return "PASS";
    case LawStatus::counterexample: return "FAIL";
    case LawStatus::inconclusive: return "UNKNOWN";
  }
  return "?";
}

struct LawOutcome {
  Law law = Law::Reflexivity;
  LawStatus status = LawStatus::passed;
  std::string witness;
  std::size_t instances = 0;
  std::size_t unknowns = 0;
  bool exhaustive = true;

  bool passed() const { return status == LawStatus::passed; }
  bool passed_exhaustively() const { return passed() && exhaustive; }
};

// Oracle values tabulated over a domain.
class LawTables {
 public:
  LawTables(const SampleDomain& dom, const AsymOracle* asym, const SymOracle* sym) : dom_(dom) {
    ms_ = all_multisets<Formula>(dom.universe, dom.max_size);
    for (std::size_t i = 0; i < ms_.size(); ++i) idx_[ms_[i]] = static_cast<int>(i);
    std::size_t n = ms_.size();
    sum_.assign(n, std::vector<int>(n, -1));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (ms_[a].size() + ms_[b].size() <= dom.max_size) sum_[a][b] = idx_.at(msum(ms_[a], ms_[b]));
    single_.resize(dom.universe.size());
    for (std::size_t f = 0; f < dom.universe.size(); ++f) single_[f] = idx_.at(FMS{dom.universe[f]});
    if (asym) {
      asym_.assign(n, std::vector<Tri>(dom.universe.size(), Tri::unknown));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t f = 0; f < dom.universe.size(); ++f) asym_[a][f] = (*asym)(ms_[a], dom.universe[f]);
    }
    if (sym) {
      sym_.assign(n, std::vector<Tri>(n, Tri::unknown));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) sym_[a][b] = (*sym)(ms_[a], ms_[b]);
    }
  }

  const SampleDomain& domain() const { return dom_; }
  const std::vector<FMS>& multisets() const { return ms_; }
  std::size_t nm() const { return ms_.size(); }
  std::size_t nf() const { return dom_.universe.size(); }
  int index(const FMS& m) const {
    auto it = idx_.find(m);
    return it == idx_.end() ? -1 : it->second;
  }
  int sum(int a, int b) const { return a < 0 || b < 0 ? -1 : sum_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int single(int f) const { return single_[static_cast<std::size_t>(f)]; }
  int with(int a, int f) const { return sum(a, single(f)); }
  std::size_t msize(int a) const { return ms_[static_cast<std::size_t>(a)].size(); }
  Tri asym(int a, int f) const { return asym_[static_cast<std::size_t>(a)][static_cast<std::size_t>(f)]; }
  Tri sym(int a, int b) const { return sym_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  bool has_asym() const { return !asym_.empty(); }
  bool has_sym() const { return !sym_.empty(); }
  std::string m(int a) const { return print_multiset(ms_[static_cast<std::size_t>(a)]); }
  std::string f(int x) const { return print_formula(dom_.universe[static_cast<std::size_t>(x)]); }

 private:
  SampleDomain dom_;
  std::vector<FMS> ms_;
  std::map<FMS, int> idx_;
  std::vector<std::vector<int>> sum_;
  std::vector<int> single_;
  std::vector<std::vector<Tri>> asym_;
  std::vector<std::vector<Tri>> sym_;
};

namespace detail {

// Drives an enumerator either over every choice or over one random choice per call.
class Chooser {
 public:
  explicit Chooser(std::mt19937_64* rng) : rng_(rng) {}
  template <class F>
  bool each(std::size_t n, F&& f) {
    if (n == 0) return false;
    if (rng_) return f(static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(*rng_)));
    for (std::size_t i = 0; i < n; ++i)
      if (f(static_cast<int>(i))) return true;
    return false;
  }

 private:
  std::mt19937_64* rng_;
};

// Visitor receives premise truth, conclusion truth and a lazy witness; returns true to stop.
using Visit = std::function<bool(Tri, Tri, const std::function<std::string()>&)>;

inline Tri all_of(std::initializer_list<Tri> ts) {
  Tri r = Tri::holds;
  for (Tri t : ts) r = tri_and(r, t);
  return r;
}

inline std::string asym_pair(const LawTables& t, int a, int f) { return t.m(a) + " |- " + t.f(f); }
inline std::string sym_pair(const LawTables& t, int a, int b) { return t.m(a) + " |- " + t.m(b); }

inline bool enumerate_asym(Law law, const LawTables& t, Chooser& c, const Visit& visit) {
  int nm = static_cast<int>(t.nm()), nf = static_cast<int>(t.nf());
  auto M = [&](auto&& f) { return c.each(static_cast<std::size_t>(nm), f); };
  auto F = [&](auto&& f) { return c.each(static_cast<std::size_t>(nf), f); };
  switch (law) {
    case Law::Reflexivity:
      return F([&](int p) {
        int a = t.single(p);
        return visit(Tri::holds, t.asym(a, p), [&] { return "not " + asym_pair(t, a, p); });
      });
    case Law::GeneralizedReflexivity:
      return M([&](int g) {
        return F([&](int p) {
          int a = t.with(g, p);
          if (a < 0) return false;
          return visit(Tri::holds, t.asym(a, p), [&] { return "not " + asym_pair(t, a, p); });
        });
      });
    case Law::Monotonicity:
      return M([&](int g) {
        return F([&](int p) {
          return M([&](int d) {
            int gd = t.sum(g, d);
            if (gd < 0) return false;
            return visit(t.asym(g, p), t.asym(gd, p),
                         [&] { return asym_pair(t, g, p) + " but not " + asym_pair(t, gd, p); });
          });
        });
      });
    case Law::Contraction:
      return M([&](int g) {
        return F([&](int q) {
          return F([&](int p) {
            int g1 = t.with(g, q), g2 = t.with(g1, q);
            if (g2 < 0) return false;
            return visit(t.asym(g2, p), t.asym(g1, p),
                         [&] { return asym_pair(t, g2, p) + " but not " + asym_pair(t, g1, p); });
          });
        });
      });
    case Law::Cut:
      return M([&](int g) {
        return F([&](int q) {
          return F([&](int p) {
            return M([&](int d) {
              int gq = t.with(g, q), gd = t.sum(g, d);
              if (gq < 0 || gd < 0) return false;
              return visit(all_of({t.asym(gq, p), t.asym(d, q)}), t.asym(gd, p), [&] {
                return asym_pair(t, gq, p) + " and " + asym_pair(t, d, q) + " but not " + asym_pair(t, gd, p);
              });
            });
          });
        });
      });
    case Law::TheoremRemoval:
      return M([&](int g) {
        return M([&](int d) {
          return F([&](int p) {
            int gd = t.sum(g, d);
            if (gd < 0) return false;
            Tri thm = Tri::holds;
            for (auto x : t.multisets()[static_cast<std::size_t>(d)].support()) {
              int xi = -1;
              for (int k = 0; k < nf; ++k)
                if (t.domain().universe[static_cast<std::size_t>(k)] == x) xi = k;
              thm = tri_and(thm, t.asym(t.index(FMS{}), xi));
            }
            return visit(all_of({thm, t.asym(gd, p)}), t.asym(g, p), [&] {
              return t.m(d) + " are theorems and " + asym_pair(t, gd, p) + " but not " + asym_pair(t, g, p);
            });
          });
        });
      });
    case Law::RelevantCut:
      // chi_1..chi_n |- phi and Delta_i |- chi_i give Delta_1 + ... + Delta_n |- phi.
      return M([&](int x) {
        const auto chis = t.multisets()[static_cast<std::size_t>(x)].elements();
        if (chis.empty()) return false;
        std::vector<int> ci;
        for (auto ch : chis)
          for (int k = 0; k < nf; ++k)
            if (t.domain().universe[static_cast<std::size_t>(k)] == ch) ci.push_back(k);
        return F([&](int p) {
          std::vector<int> ds;
          std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int acc) -> bool {
            if (i == chis.size()) {
              Tri prem = t.asym(x, p);
              for (std::size_t j = 0; j < ds.size(); ++j) prem = tri_and(prem, t.asym(ds[j], ci[j]));
              return visit(prem, t.asym(acc, p), [&] {
                std::string s = asym_pair(t, x, p);
                for (std::size_t j = 0; j < ds.size(); ++j) s += " and " + asym_pair(t, ds[j], ci[j]);
                return s + " but not " + asym_pair(t, acc, p);
              });
            }
            return M([&](int d) {
              int acc2 = t.sum(acc, d);
              if (acc2 < 0) return false;
              ds.push_back(d);
              bool stop = rec(i + 1, acc2);
              ds.pop_back();
              return stop;
            });
          };
          return rec(0, t.index(FMS{}));
        });
      });
    default: return false;
  }
}

inline bool enumerate_sym(Law law, const LawTables& t, Chooser& c, const Visit& visit) {
  int nm = static_cast<int>(t.nm()), nf = static_cast<int>(t.nf());
  int empty = t.index(FMS{});
  auto M = [&](auto&& f) { return c.each(static_cast<std::size_t>(nm), f); };
  auto F = [&](auto&& f) { return c.each(static_cast<std::size_t>(nf), f); };
  switch (law) {
    case Law::Reflexivity:
      return M([&](int g) { return visit(Tri::holds, t.sym(g, g), [&] { return "not " + sym_pair(t, g, g); }); });
    case Law::TheoremReflexivity:
      return M(
          [&](int g) { return visit(Tri::holds, t.sym(g, empty), [&] { return "not " + sym_pair(t, g, empty); }); });
    case Law::GeneralizedReflexivity:
      return M([&](int g) {
        return M([&](int d) {
          int gd = t.sum(g, d);
          if (gd < 0) return false;
          return visit(Tri::holds, t.sym(gd, g), [&] { return "not " + sym_pair(t, gd, g); });
        });
      });
    case Law::Transitivity:
      return M([&](int g) {
        return M([&](int d) {
          return M([&](int p) {
            return visit(all_of({t.sym(g, d), t.sym(d, p)}), t.sym(g, p), [&] {
              return sym_pair(t, g, d) + " and " + sym_pair(t, d, p) + " but not " + sym_pair(t, g, p);
            });
          });
        });
      });
    case Law::Compatibility:
      return M([&](int g) {
        return M([&](int d) {
          return M([&](int p) {
            int gp = t.sum(g, p), dp = t.sum(d, p);
            if (gp < 0 || dp < 0) return false;
            return visit(t.sym(g, d), t.sym(gp, dp),
                         [&] { return sym_pair(t, g, d) + " but not " + sym_pair(t, gp, dp); });
          });
        });
      });
    case Law::Monotonicity:
      return M([&](int g) {
        return M([&](int d) {
          return M([&](int p) {
            int gp = t.sum(g, p);
            if (gp < 0) return false;
            return visit(t.sym(g, d), t.sym(gp, d),
                         [&] { return sym_pair(t, g, d) + " but not " + sym_pair(t, gp, d); });
          });
        });
      });
    case Law::Contraction:
      return M([&](int g) {
        return F([&](int q) {
          return M([&](int d) {
            int g1 = t.with(g, q), g2 = t.with(g1, q);
            if (g2 < 0) return false;
            return visit(t.sym(g2, d), t.sym(g1, d),
                         [&] { return sym_pair(t, g2, d) + " but not " + sym_pair(t, g1, d); });
          });
        });
      });
    case Law::rContraction:
      return M([&](int g) {
        return M([&](int d) {
          return F([&](int q) {
            int d1 = t.with(d, q), d2 = t.with(d1, q);
            if (d2 < 0) return false;
            return visit(t.sym(g, d2), t.sym(g, d1),
                         [&] { return sym_pair(t, g, d2) + " but not " + sym_pair(t, g, d1); });
          });
        });
      });
    case Law::MultiCut:
      return M([&](int g) {
        return M([&](int d) {
          if (t.sym(g, d) == Tri::fails) return false;
          return M([&](int p) {
            int dp = t.sum(d, p), gp = t.sum(g, p);
            if (dp < 0 || gp < 0) return false;
            return M([&](int f) {
              return visit(all_of({t.sym(g, d), t.sym(dp, f)}), t.sym(gp, f), [&] {
                return sym_pair(t, g, d) + " and " + sym_pair(t, dp, f) + " but not " + sym_pair(t, gp, f);
              });
            });
          });
        });
      });
    case Law::TheoremRemoval:
      return M([&](int d) {
        if (t.sym(empty, d) == Tri::fails) return false;
        return M([&](int p) {
          int dp = t.sum(d, p);
          if (dp < 0) return false;
          return M([&](int f) {
            return visit(all_of({t.sym(empty, d), t.sym(dp, f)}), t.sym(p, f), [&] {
              return sym_pair(t, empty, d) + " and " + sym_pair(t, dp, f) + " but not " + sym_pair(t, p, f);
            });
          });
        });
      });
    default: (void)nf; return false;
  }
}

}  // namespace detail

inline LawOutcome check_law(Law law, const LawTables& t, bool symmetric) {
  LawOutcome out;
  out.law = law;
  auto run = [&](detail::Chooser& c, const detail::Visit& v) {
    return symmetric ? detail::enumerate_sym(law, t, c, v) : detail::enumerate_asym(law, t, c, v);
  };
  // Count instances first; tables make this cheap.
  std::size_t count = 0;
  {
    detail::Chooser all(nullptr);
    run(all, [&](Tri, Tri, const std::function<std::string()>&) { return ++count > t.domain().exhaustive_limit; });
  }
  out.exhaustive = count <= t.domain().exhaustive_limit;
  detail::Visit visit = [&](Tri prem, Tri concl, const std::function<std::string()>& w) {
    ++out.instances;
    if (prem == Tri::holds && concl == Tri::fails) {
      out.status = LawStatus::counterexample;
      out.witness = w();
      return true;
    }
    if (prem != Tri::fails && concl != Tri::holds) ++out.unknowns;
    return false;
  };
  if (out.exhaustive) {
    detail::Chooser all(nullptr);
    run(all, visit);
  } else {
    std::mt19937_64 rng(t.domain().seed ^ (static_cast<std::uint64_t>(law) * 0x9E3779B97F4A7C15ULL));
    detail::Chooser one(&rng);
    for (std::size_t i = 0; i < t.domain().samples && out.status != LawStatus::counterexample; ++i) run(one, visit);
  }
  if (out.status != LawStatus::counterexample && out.unknowns > 0) out.status = LawStatus::inconclusive;
  return out;
}

inline LawOutcome check_law(const AsymOracle& o, Law law, const SampleDomain& dom) {
  LawTables t(dom, &o, nullptr);
  return check_law(law, t, false);
}

inline LawOutcome check_law(const SymOracle& o, Law law, const SampleDomain& dom) {
  LawTables t(dom, nullptr, &o);
  return check_law(law, t, true);
}

// -------------------------------------------------------------- classification

struct Implication {
  std::vector<Law> premises;
  Law conclusion;
  std::string text;
};

// Implications between laws that hold on every size-bounded domain.
inline const std::vector<Implication>& sym_network() {
  static const std::vector<Implication> v{
      {{Law::Reflexivity, Law::Monotonicity}, Law::GeneralizedReflexivity, "Reflexivity & Monotonicity => GeneralizedReflexivity"},
      {{Law::GeneralizedReflexivity, Law::Transitivity}, Law::Monotonicity, "GeneralizedReflexivity & Transitivity => Monotonicity"},
      {{Law::TheoremReflexivity, Law::Compatibility}, Law::GeneralizedReflexivity, "TheoremReflexivity & Compatibility => GeneralizedReflexivity"},
      {{Law::MultiCut}, Law::Transitivity, "MultiCut => Transitivity"},
      {{Law::MultiCut}, Law::TheoremRemoval, "MultiCut => TheoremRemoval"},
      {{Law::MultiCut, Law::Reflexivity}, Law::Compatibility, "MultiCut & Reflexivity => Compatibility"},
      {{Law::Transitivity, Law::Compatibility}, Law::MultiCut, "Transitivity & Compatibility => MultiCut"},
  };
  return v;
}

inline const std::vector<Implication>& asym_network() {
  static const std::vector<Implication> v{
      {{Law::Reflexivity, Law::Cut}, Law::RelevantCut, "Reflexivity & Cut => RelevantCut"},
      {{Law::Reflexivity, Law::Cut}, Law::TheoremRemoval, "Reflexivity & Cut => TheoremRemoval"},
      {{Law::Reflexivity, Law::Monotonicity}, Law::GeneralizedReflexivity, "Reflexivity & Monotonicity => GeneralizedReflexivity"},
  };
  return v;
}

struct Classification {
  std::string oracle;
  bool symmetric = false;
  std::vector<LawOutcome> results;
  bool consequence_relation = false;  // CR or SCR, according to `symmetric`
  bool monotone = false;
  bool contractive = false;
  std::vector<std::string> network_checked;
  std::vector<std::string> network_violations;

  const LawOutcome& get(Law l) const {
    for (const auto& r : results)
      if (r.law == l) return r;
    throw std::out_of_range(law_name(l));
  }
  bool tarskian() const { return consequence_relation && monotone && contractive; }
};

inline Classification classify(const LawTables& t, bool symmetric, const std::string& name) {
  Classification c;
  c.oracle = name;
  c.symmetric = symmetric;
  for (Law l : symmetric ? sym_laws() : asym_laws()) c.results.push_back(check_law(l, t, symmetric));
  auto pass = [&](Law l) { return c.get(l).passed(); };
  if (symmetric) {
    c.consequence_relation = pass(Law::Reflexivity) && pass(Law::Transitivity) && pass(Law::Compatibility);
    c.contractive = pass(Law::Contraction) && pass(Law::rContraction);
  } else {
    c.consequence_relation = pass(Law::Reflexivity) && pass(Law::Cut);
    c.contractive = pass(Law::Contraction);
  }
  c.monotone = pass(Law::Monotonicity);
  for (const auto& imp : symmetric ? sym_network() : asym_network()) {
    bool applies = true;
    for (Law l : imp.premises) applies = applies && c.get(l).passed_exhaustively();
    if (!applies) continue;
    c.network_checked.push_back(imp.text);
    const auto& concl = c.get(imp.conclusion);
    if (concl.status == LawStatus::counterexample)
      c.network_violations.push_back(imp.text + ": " + concl.witness);
  }
  return c;
}

inline Classification classify(const AsymOracle& o, const SampleDomain& dom) {
  LawTables t(dom, &o, nullptr);
  return classify(t, false, o.name);
}

inline Classification classify(const SymOracle& o, const SampleDomain& dom) {
  LawTables t(dom, nullptr, &o);
  return classify(t, true, o.name);
}

inline std::string classification_report(const Classification& c) {
  std::ostringstream os;
  os << "oracle " << c.oracle << (c.symmetric ? " (symmetric)" : "") << '\n';
  for (const auto& r : c.results) {
    os << "LAW " << law_name(r.law) << ' ' << law_status_name(r.status);
    if (!r.witness.empty()) os << ' ' << r.witness;
    os << "  [" << r.instances << (r.exhaustive ? " instances, exhaustive" : " samples") << "]\n";
  }
  os << (c.symmetric ? "SCR " : "CR ") << (c.consequence_relation ? "yes" : "no") << '\n';
  os << "monotone " << (c.monotone ? "yes" : "no") << '\n';
  os << "contractive " << (c.contractive ? "yes" : "no") << '\n';
  for (const auto& s : c.network_checked) os << "IMPLICATION ok " << s << '\n';
  for (const auto& s : c.network_violations) os << "IMPLICATION VIOLATED " << s << '\n';
  return os.str();
}

// ------------------------------------------------------- monotonic companion

// gamma |-m phi iff delta |- phi for some delta <= gamma.
inline Tri monotonic_companion(const AsymOracle& o, const FMS& gamma, Formula phi) {
  Tri r = Tri::fails;
  for (const auto& d : submultisets(gamma)) {
    Tri x = o(d, phi);
    if (x == Tri::holds) return Tri::holds;
    if (x == Tri::unknown) r = Tri::unknown;
  }
  return r;
}

inline AsymOracle companion(AsymOracle o) {
  AsymOracle c;
  c.name = o.name + "^m";
  c.rel = [o](const FMS& g, Formula f) { return monotonic_companion(o, g, f); };
  c.theorem_basis = o.theorem_basis;
  return c;
}

inline SymOracle companion(SymOracle o) {
  std::string name = o.name + "^m";
  return SymOracle{name, [o = std::move(o)](const FMS& g, const FMS& d) {
                     Tri r = Tri::fails;
                     for (const auto& s : submultisets(g)) {
                       Tri x = o(s, d);
                       if (x == Tri::holds) return Tri::holds;
                       if (x == Tri::unknown) r = Tri::unknown;
                     }
                     return r;
                   }};
}

}  // namespace relcon
