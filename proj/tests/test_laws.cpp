#include "doctest.h"
#include "gen.hpp"
#include "relcon/laws.hpp"
#include "relcon/semantics.hpp"
#include "relcon/symmetric.hpp"

using namespace relcon;

namespace {

FMS ms(const char* s) { return parse_multiset(s); }

SampleDomain numerals(long long lo, long long hi, std::size_t k) {
  SampleDomain d{numeral_universe(lo, hi), k};
  d.exhaustive_limit = 100'000'000;
  return d;
}

// Brute-force law checks written directly from the definitions.
bool brute_reflexivity(const AsymOracle& o, const SampleDomain& d) {
  for (auto f : d.universe)
    if (o(FMS{f}, f) != Tri::holds) return false;
  return true;
}

bool brute_monotonicity(const AsymOracle& o, const SampleDomain& d) {
  auto all = all_multisets(d.universe, d.max_size);
  for (const auto& g : all)
    for (auto f : d.universe) {
      if (o(g, f) != Tri::holds) continue;
      for (auto x : d.universe) {
        FMS h = g;
        h.add(x);
        if (h.size() <= d.max_size && o(h, f) != Tri::holds) return false;
      }
    }
  return true;
}

bool brute_contraction(const AsymOracle& o, const SampleDomain& d) {
  auto all = all_multisets(d.universe, d.max_size);
  for (const auto& g : all)
    for (auto x : d.universe)
      for (auto f : d.universe) {
        FMS gx = g, gxx = g;
        gx.add(x);
        gxx.add(x, 2);
        if (gxx.size() > d.max_size) continue;
        if (o(gxx, f) == Tri::holds && o(gx, f) != Tri::holds) return false;
      }
  return true;
}

bool brute_cut(const AsymOracle& o, const SampleDomain& d) {
  auto all = all_multisets(d.universe, d.max_size);
  for (const auto& g : all)
    for (auto psi : d.universe)
      for (auto f : d.universe) {
        FMS gp = g;
        gp.add(psi);
        if (gp.size() > d.max_size || o(gp, f) != Tri::holds) continue;
        for (const auto& dl : all) {
          FMS gd = msum(g, dl);
          if (gd.size() > d.max_size) continue;
          if (o(dl, psi) == Tri::holds && o(gd, f) != Tri::holds) return false;
        }
      }
  return true;
}

AsymOracle random_oracle(std::uint64_t seed) {
  AsymOracle o;
  o.name = "random";
  o.rel = [seed](const FMS& g, Formula f) {
    std::size_t h = seed;
    for (auto& [x, c] : g) h = h * 1315423911u ^ (x.hash() + c);
    h = h * 2654435761u ^ f.hash();
    return tri(h % 5 != 0);
  };
  o.theorem_basis = std::vector<Formula>{};
  return o;
}

}  // namespace

TEST_CASE("law names round-trip") {
  for (Law l : sym_laws()) CHECK(law_from_name(law_name(l)) == l);
  for (Law l : asym_laws()) CHECK(law_from_name(law_name(l)) == l);
  CHECK_FALSE(law_from_name("Weakening"));
}

TEST_CASE("integer relation: consequence relation, neither monotone nor contractive") {
  auto c = classify(z_oracle(), numerals(-3, 3, 3));
  CHECK(c.consequence_relation);
  CHECK_FALSE(c.monotone);
  CHECK_FALSE(c.contractive);
  CHECK(c.network_violations.empty());
  CHECK(c.get(Law::Reflexivity).passed_exhaustively());
  CHECK(c.get(Law::Cut).passed_exhaustively());
  // The instance usually cited against contraction: two copies of 1 do not give 1, one does.
  CHECK(z_oracle()(ms("[1, 1]"), parse_formula("1")) == Tri::fails);
  CHECK(z_oracle()(ms("[1]"), parse_formula("1")) == Tri::holds);
}

TEST_CASE("closed-numeral p relation is Tarskian") {
  auto c = classify(p_oracle(), numerals(-3, 3, 3));
  CHECK(c.tarskian());
  CHECK(c.network_violations.empty());
}

TEST_CASE("threshold relation: symmetric consequence relation, not monotone") {
  SampleDomain d{{Formula::atom("x")}, 5};
  auto c = classify(threshold_oracle(), d);
  CHECK(c.consequence_relation);
  CHECK_FALSE(c.monotone);
  CHECK(c.network_violations.empty());
  // [x] |- [x] but not [x, x] |- [x].
  auto th = threshold_oracle();
  CHECK(th(ms("[x]"), ms("[x]")) == Tri::holds);
  CHECK(th(ms("[x, x]"), ms("[x]")) == Tri::fails);
}

TEST_CASE("law checks agree with brute force") {
  for (const auto& o : {z_oracle(), p_oracle(), leq_oracle(), random_oracle(7), random_oracle(8)}) {
    auto d = numerals(-2, 2, 3);
    CAPTURE(o.name);
    CHECK(check_law(o, Law::Reflexivity, d).passed() == brute_reflexivity(o, d));
    CHECK(check_law(o, Law::Monotonicity, d).passed() == brute_monotonicity(o, d));
    CHECK(check_law(o, Law::Contraction, d).passed() == brute_contraction(o, d));
    CHECK(check_law(o, Law::Cut, d).passed() == brute_cut(o, d));
  }
}

TEST_CASE("witnesses are genuine counterexamples") {
  auto d = numerals(-3, 3, 3);
  auto mono = check_law(z_oracle(), Law::Monotonicity, d);
  REQUIRE(mono.status == LawStatus::counterexample);
  CHECK(mono.witness == "[] |- 0 but not [1] |- 0");
  auto con = check_law(z_oracle(), Law::Contraction, d);
  REQUIRE(con.status == LawStatus::counterexample);
  CHECK(z_oracle()(ms("[-2, -2]"), parse_formula("-3")) == Tri::holds);
  CHECK(z_oracle()(ms("[-2]"), parse_formula("-3")) == Tri::fails);
}

TEST_CASE("sampling is seeded and reproducible") {
  SampleDomain d{numeral_universe(-3, 3), 3};
  d.exhaustive_limit = 10;
  d.samples = 3000;
  auto a = check_law(z_oracle(), Law::Cut, d);
  auto b = check_law(z_oracle(), Law::Cut, d);
  CHECK_FALSE(a.exhaustive);
  CHECK(a.instances == b.instances);
  CHECK(a.status == b.status);
  auto m1 = check_law(z_oracle(), Law::Monotonicity, d);
  d.seed = 99;
  auto m2 = check_law(z_oracle(), Law::Monotonicity, d);
  CHECK(m1.status == LawStatus::counterexample);
  CHECK(m2.status == LawStatus::counterexample);
}

TEST_CASE("unknown verdicts make a law inconclusive, never passed") {
  AsymOracle o;
  o.name = "shrug";
  o.rel = [](const FMS& g, Formula f) { return g == FMS{f} ? Tri::holds : Tri::unknown; };
  o.theorem_basis = std::vector<Formula>{};
  auto r = check_law(o, Law::Monotonicity, numerals(-1, 1, 2));
  CHECK(r.status == LawStatus::inconclusive);
  CHECK(r.unknowns > 0);
  CHECK(check_law(o, Law::Reflexivity, numerals(-1, 1, 2)).passed());
}

TEST_CASE("implication network holds on random oracles") {
  for (std::uint64_t s = 1; s <= 20; ++s) {
    auto c = classify(random_oracle(s), numerals(-1, 1, 3));
    CHECK(c.network_violations.empty());
    auto cs = classify(symmetrization(random_oracle(s)), numerals(-1, 1, 2));
    CHECK(cs.network_violations.empty());
  }
}

TEST_CASE("monotonic companion") {
  auto d = numerals(-3, 3, 3);
  CHECK(monotonic_companion(z_oracle(), ms("[1]"), parse_formula("0")) == Tri::holds);
  auto zm = companion(z_oracle());
  auto c = classify(zm, d);
  CHECK(c.monotone);
  CHECK(c.get(Law::GeneralizedReflexivity).passed_exhaustively());
  // Definition check and agreement with the oracle where it is already monotone.
  for (const auto& g : all_multisets(d.universe, d.max_size))
    for (auto f : d.universe) {
      bool some = false;
      for (const auto& s : submultisets(g)) some = some || z_oracle()(s, f) == Tri::holds;
      CHECK(zm(g, f) == tri(some));
    }
  auto pc = companion(p_oracle());
  for (const auto& g : all_multisets(d.universe, d.max_size))
    for (auto f : d.universe) CHECK(pc(g, f) == p_oracle()(g, f));
}
