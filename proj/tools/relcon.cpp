#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "relcon/laws.hpp"
#include "relcon/semantics.hpp"
#include "relcon/symmetric.hpp"
#include "relcon/syntax.hpp"
#include "relcon/theory.hpp"
#include "relcon/treeproof.hpp"

using namespace relcon;

namespace {

// Exit codes.
constexpr int kHolds = 0, kFails = 1, kUsage = 2, kUnknown = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int result(const std::string& verdict, int code) {
  std::cout << "RESULT " << verdict << '\n';
  return code;
}

int tri_result(Tri t) {
  return result(tri_name(t), t == Tri::holds ? kHolds : t == Tri::fails ? kFails : kUnknown);
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("RELCON_SEED")) return std::strtoull(s, nullptr, 10);
  return 1;
}

// Oracle names: z, p, leq (asymmetric); abelian, threshold, tarski (symmetric);
// system:FILE (tree provability, or derivability for symmetric systems).
struct NamedOracle {
  std::optional<AsymOracle> asym;
  std::optional<SymOracle> sym;
};

NamedOracle lookup_oracle(const std::string& name) {
  NamedOracle o;
  if (name == "z") o.asym = z_oracle();
  else if (name == "p") o.asym = p_oracle();
  else if (name == "leq") o.asym = leq_oracle();
  else if (name == "abelian") o.sym = abelian_sym_oracle();
  else if (name == "threshold" || name == "ex54") o.sym = threshold_oracle();
  else if (name == "tarski") o.sym = pointwise_symmetric(p_oracle());
  else if (name.rfind("system:", 0) == 0) {
    auto as = parse_system(slurp(name.substr(7)));
    if (as.symmetric)
      o.sym = derivability_oracle(as);
    else
      o.asym = provability_oracle(as);
  } else {
    throw UsageError("unknown oracle '" + name + "'");
  }
  return o;
}

SampleDomain parse_domain(const std::string& spec, std::uint64_t seed) {
  auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw UsageError("domain must look like LO..HI:SIZE or [f, g]:SIZE");
  SampleDomain d;
  d.seed = seed;
  d.max_size = std::stoul(spec.substr(colon + 1));
  std::string u = spec.substr(0, colon);
  auto dots = u.find("..");
  if (dots != std::string::npos && u.front() != '[') {
    d.universe = numeral_universe(std::stoll(u.substr(0, dots)), std::stoll(u.substr(dots + 2)));
  } else {
    if (u.size() < 2 || u.front() != '[' || u.back() != ']') throw UsageError("bad universe '" + u + "'");
    d.universe = FormulaParser(u.substr(1, u.size() - 2), all_atoms()).parse_list_all();
  }
  return d;
}

MatrixValuation parse_matrix_valuation(const Matrix& m, const std::string& text) {
  MatrixValuation v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("valuation entries look like atom=value");
    std::string a = detail::trim(item.substr(0, eq)), x = detail::trim(item.substr(eq + 1));
    int i = m.index_of(x);
    if (i < 0) throw UsageError("value '" + x + "' is not in the carrier");
    v[a] = i;
  }
  return v;
}

int deriv_code(DerivVerdict v) {
  switch (v) {
    case DerivVerdict::relevant: return 0;
    case DerivVerdict::plain: return 1;
    case DerivVerdict::invalid: return 2;
  }
  return kUnknown;
}

int proof_code(Verdict v) {
  switch (v) {
    case Verdict::strongly_relevant:
    case Verdict::relevant: return 0;
    case Verdict::weakly_relevant:
    case Verdict::plain: return 1;
    case Verdict::invalid: return 2;
  }
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relcon: relevant consequence relations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "random seed (default 1, or $RELCON_SEED)");

  std::string system_file, premises, goal, conclusion, proof_file, deriv_file, matrix_file, formula, valuation;
  std::string kind = "z", oracle_name, dom_spec, laws_spec = "all", multiset_text, out_file;
  SearchBounds sb;
  DeriveBounds db;
  std::size_t exhaustive_limit = 100000, samples = 20000, max_partitions = 1'000'000;
  bool symmetrize_flag = false;
  std::string gen, other, member;

  auto* parse = app.add_subcommand("parse", "parse and reprint a formula, multiset, system, matrix, proof or derivation");
  parse->add_option("--formula", formula);
  parse->add_option("--multiset", multiset_text);
  parse->add_option("--system", system_file);
  parse->add_option("--matrix", matrix_file);
  parse->add_option("--proof", proof_file);
  parse->add_option("--derivation", deriv_file);

  auto* checkp = app.add_subcommand("check-proof", "verify a tree proof (exit 0 relevant, 1 plain, 2 invalid)");
  checkp->add_option("--system", system_file)->required();
  checkp->add_option("--premises", premises)->default_val("[]");
  checkp->add_option("--goal", goal)->required();
  checkp->add_option("--proof", proof_file)->required();

  auto* searchc = app.add_subcommand("search", "bounded search for a relevant tree proof");
  searchc->add_option("--system", system_file)->required();
  searchc->add_option("--premises", premises)->default_val("[]");
  searchc->add_option("--goal", goal)->required();
  searchc->add_option("--max-nodes", sb.max_nodes, "default 9");
  searchc->add_option("--max-size", sb.max_formula_size, "largest formula used, default 16");
  searchc->add_option("--max-layers", sb.max_layers, "connective layers over the subformula closure, default 2");
  searchc->add_option("--out", out_file, "write the proof here as well");

  auto* checkd = app.add_subcommand("check-derivation", "check a multiset derivation (exit 0 relevant, 1 plain, 2 invalid)");
  checkd->add_option("--system", system_file)->required();
  checkd->add_option("--premises", premises)->default_val("[]");
  checkd->add_option("--conclusion", conclusion)->required();
  checkd->add_option("--derivation", deriv_file)->required();

  auto* derive = app.add_subcommand("derive", "bounded search for a relevant derivation");
  derive->add_option("--system", system_file)->required();
  derive->add_option("--premises", premises)->default_val("[]");
  derive->add_option("--conclusion", conclusion)->required();
  derive->add_option("--max-steps", db.max_steps, "default 6");
  derive->add_option("--max-size", db.max_formula_size, "default 16");
  derive->add_option("--max-layers", db.max_layers, "default 2");
  derive->add_option("--out", out_file);

  auto* symc = app.add_subcommand("symmetrize", "decide the symmetrization of an asymmetric oracle");
  symc->add_option("--oracle", oracle_name)->required();
  symc->add_option("--premises", premises)->default_val("[]");
  symc->add_option("--conclusion", conclusion)->required();
  symc->add_option("--max-partitions", max_partitions, "default 1000000");

  auto* meval = app.add_subcommand("matrix-eval", "evaluate a formula in a finite matrix");
  meval->add_option("--matrix", matrix_file)->required();
  meval->add_option("--formula", formula)->required();
  meval->add_option("--valuation", valuation, "e.g. a=2,b=0")->default_val("");

  auto* mref = app.add_subcommand("matrix-refute", "search for a refuting valuation (exit 0 if found)");
  mref->add_option("--matrix", matrix_file)->required();
  mref->add_option("--formula", formula)->required();

  auto* abel = app.add_subcommand("abelian", "Abelian relations over the integers");
  abel->add_option("--kind", kind, "p, leq, z, or sum (multiset conclusion)")->default_val("z");
  abel->add_option("--premises", premises)->default_val("[]");
  abel->add_option("--goal", goal);
  abel->add_option("--conclusion", conclusion);

  auto* laws = app.add_subcommand("laws", "check consequence laws on a finite domain");
  laws->require_subcommand(1);
  auto* lcheck = laws->add_subcommand("check", "run the law battery");
  auto* lcomp = laws->add_subcommand("companion", "decide the monotonic companion");
  for (auto* s : {lcheck, lcomp}) s->add_option("--oracle", oracle_name)->required();
  lcheck->add_option("--dom", dom_spec, "LO..HI:SIZE (numerals) or [f, g]:SIZE")->required();
  lcheck->add_option("--laws", laws_spec, "all or comma-separated names")->default_val("all");
  lcheck->add_option("--exhaustive-limit", exhaustive_limit, "default 100000");
  lcheck->add_option("--samples", samples, "default 20000");
  lcheck->add_flag("--symmetrize", symmetrize_flag, "check the symmetrization of an asymmetric oracle");
  lcomp->add_option("--premises", premises)->default_val("[]");
  lcomp->add_option("--goal", goal)->required();

  auto* theo = app.add_subcommand("theory", "principal theories of a symmetric oracle");
  std::string theo_op;
  theo->add_option("op", theo_op, "eq, leq, contains, add or quotient")->required();
  theo->add_option("--oracle", oracle_name)->required();
  theo->add_option("--gen", gen, "generator multiset of the first theory");
  theo->add_option("--with", other, "generator multiset of the second theory");
  theo->add_option("--member", member);
  theo->add_option("--dom", dom_spec);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e) == 0) return 0;
    return result("error", kUsage);
  }

  try {
    if (parse->parsed()) {
      try {
        if (!formula.empty()) std::cout << print_formula(parse_formula(formula)) << '\n';
        if (!multiset_text.empty()) std::cout << print_multiset(parse_multiset(multiset_text)) << '\n';
        if (!system_file.empty()) std::cout << print_system(parse_system(slurp(system_file)));
        if (!matrix_file.empty()) std::cout << print_matrix(parse_matrix(slurp(matrix_file)));
        if (!proof_file.empty()) std::cout << proof_to_json(proof_from_json(slurp(proof_file))) << '\n';
        if (!deriv_file.empty()) std::cout << derivation_to_json(derivation_from_json(slurp(deriv_file)));
      } catch (const ParseError& e) {
        std::cout << "error: " << e.what() << '\n';
        return result("invalid", kFails);
      } catch (const SystemError& e) {
        std::cout << "error: " << e.what() << '\n';
        return result("invalid", kFails);
      } catch (const ProofError& e) {
        std::cout << "error: " << e.what() << '\n';
        return result("invalid", kFails);
      }
      return result("ok", kHolds);
    }

    if (checkp->parsed()) {
      auto as = parse_system(slurp(system_file));
      auto t = proof_from_json(slurp(proof_file));
      auto rep = verify(t, as, parse_multiset(premises), parse_formula(goal));
      if (!rep.reason.empty()) std::cout << "note: " << rep.reason << '\n';
      if (!rep.excess.empty()) std::cout << "leaves beyond premises: " << print_multiset(rep.excess) << '\n';
      if (!rep.missing.empty()) std::cout << "premises not used: " << print_multiset(rep.missing) << '\n';
      return result(verdict_name(rep.verdict), proof_code(rep.verdict));
    }

    if (searchc->parsed()) {
      auto as = parse_system(slurp(system_file));
      SearchStats st;
      auto t = search(as, parse_multiset(premises), parse_formula(goal), sb, &st);
      std::cout << "bounds: max-nodes " << sb.max_nodes << ", max-size " << sb.max_formula_size << ", max-layers "
                << sb.max_layers << '\n';
      if (!t) return result("unknown", kUnknown);
      std::cout << proof_to_json(*t) << '\n';
      if (!out_file.empty()) std::ofstream(out_file) << proof_to_json(*t);
      return result("found", kHolds);
    }

    if (checkd->parsed()) {
      auto as = parse_system(slurp(system_file));
      auto d = derivation_from_json(slurp(deriv_file));
      auto rep = check_derivation(d, as, parse_multiset(premises), parse_multiset(conclusion));
      if (!rep.reason.empty()) std::cout << "note: " << rep.reason << '\n';
      return result(deriv_verdict_name(rep.verdict), deriv_code(rep.verdict));
    }

    if (derive->parsed()) {
      auto as = parse_system(slurp(system_file));
      FMS g = parse_multiset(premises), d = parse_multiset(conclusion);
      if (auto cert = sum_invariant_certificate(as, g, d)) {
        std::cout << "no derivation: " << *cert << '\n';
        return result("fails", kFails);
      }
      DeriveStats st;
      auto r = derive_search(as, g, d, db, &st);
      if (r) {
        std::cout << derivation_to_json(*r);
        if (!out_file.empty()) std::ofstream(out_file) << derivation_to_json(*r);
        return result("found", kHolds);
      }
      std::cout << "searched " << st.states << " states" << (st.exhausted ? "" : " (state cap reached)") << '\n';
      return result("unknown", kUnknown);
    }

    if (symc->parsed()) {
      auto o = lookup_oracle(oracle_name);
      if (!o.asym) throw UsageError("symmetrize needs an asymmetric oracle");
      return tri_result(symmetrize(*o.asym, parse_multiset(premises), parse_multiset(conclusion), {max_partitions}));
    }

    if (meval->parsed()) {
      auto m = parse_matrix(slurp(matrix_file));
      int v = eval(m, parse_matrix_valuation(m, valuation), parse_formula(formula));
      std::cout << "VALUE " << m.values[static_cast<std::size_t>(v)] << '\n';
      return m.is_designated(v) ? result("designated", kHolds) : result("undesignated", kFails);
    }

    if (mref->parsed()) {
      auto m = parse_matrix(slurp(matrix_file));
      auto f = parse_formula(formula);
      auto v = countermodel_search(m, f);
      if (!v) return result("valid", kFails);
      std::cout << "VALUATION " << print_valuation(m, *v) << '\n';
      std::cout << "VALUE " << m.values[static_cast<std::size_t>(eval(m, *v, f))] << '\n';
      return result("refuted", kHolds);
    }

    if (abel->parsed()) {
      FMS g = parse_multiset(premises);
      AbelianResult r;
      if (kind == "sum") {
        if (conclusion.empty() && goal.empty()) throw UsageError("--kind sum needs --conclusion");
        r = abelian_symmetric_result(g, conclusion.empty() ? FMS{parse_formula(goal)} : parse_multiset(conclusion));
      } else {
        auto k = abelian_kind(kind);
        if (!k) throw UsageError("unknown kind '" + kind + "'");
        if (goal.empty()) throw UsageError("--goal is required");
        r = abelian(*k, g, parse_formula(goal));
      }
      std::cout << "method " << r.method << '\n';
      if (r.counter && !r.counter->empty()) std::cout << "counter-valuation " << print_int_valuation(*r.counter) << '\n';
      return tri_result(r.verdict);
    }

    if (lcheck->parsed()) {
      auto o = lookup_oracle(oracle_name);
      auto dom = parse_domain(dom_spec, seed);
      dom.exhaustive_limit = exhaustive_limit;
      dom.samples = samples;
      std::cout << "seed " << dom.seed << '\n';
      std::optional<SymOracle> sym = o.sym;
      if (symmetrize_flag) {
        if (!o.asym) throw UsageError("--symmetrize needs an asymmetric oracle");
        sym = symmetrization(*o.asym);
      }
      Classification c = sym ? classify(*sym, dom) : classify(*o.asym, dom);
      std::vector<Law> wanted;
      if (laws_spec != "all") {
        std::stringstream ss(laws_spec);
        std::string n;
        while (std::getline(ss, n, ',')) {
          auto l = law_from_name(detail::trim(n));
          if (!l) throw UsageError("unknown law '" + n + "'");
          wanted.push_back(*l);
        }
        std::vector<LawOutcome> keep;
        for (auto& r : c.results)
          if (std::find(wanted.begin(), wanted.end(), r.law) != wanted.end()) keep.push_back(r);
        c.results = keep;
      }
      std::cout << classification_report(c);
      Tri all = Tri::holds;
      for (auto& r : c.results)
        all = tri_and(all, r.status == LawStatus::passed ? Tri::holds
                           : r.status == LawStatus::counterexample ? Tri::fails : Tri::unknown);
      if (!c.network_violations.empty()) return result("internal-error", kUnknown);
      return tri_result(all);
    }

    if (lcomp->parsed()) {
      auto o = lookup_oracle(oracle_name);
      if (!o.asym) throw UsageError("companion needs an asymmetric oracle");
      return tri_result(monotonic_companion(*o.asym, parse_multiset(premises), parse_formula(goal)));
    }

    if (theo->parsed()) {
      auto o = lookup_oracle(oracle_name);
      if (!o.sym) throw UsageError("theories need a symmetric oracle");
      auto so = std::make_shared<const SymOracle>(*o.sym);
      if (theo_op == "quotient") {
        if (dom_spec.empty()) throw UsageError("quotient needs --dom");
        auto rep = quotient_check(so, parse_domain(dom_spec, seed));
        std::cout << rep.text();
        return rep.all_passed() ? result("holds", kHolds) : result("fails", kFails);
      }
      if (gen.empty()) throw UsageError("--gen is required");
      auto t = theory(so, parse_multiset(gen));
      if (theo_op == "contains") {
        if (member.empty()) throw UsageError("contains needs --member");
        return tri_result(th_contains(t, parse_multiset(member)));
      }
      if (other.empty()) throw UsageError(theo_op + " needs --with");
      auto s = theory(so, parse_multiset(other));
      if (theo_op == "eq") return tri_result(th_eq(t, s));
      if (theo_op == "leq") return tri_result(th_leq(t, s));
      if (theo_op == "add") {
        auto r = th_add(t, s);
        std::cout << print_theory(r) << '\n';
        if (!member.empty()) return tri_result(th_contains(r, parse_multiset(member)));
        return result("ok", kHolds);
      }
      throw UsageError("unknown theory operation '" + theo_op + "'");
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return result("error", kUsage);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return result("error", kUsage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return result("error", kUsage);
  }
  return kUsage;
}
