#include "doctest.h"
#include "gen.hpp"
#include "relcon/semantics.hpp"
#include "relcon/symmetric.hpp"
#include "relcon/theory.hpp"

using namespace relcon;

namespace {

FMS ms(const char* s) { return parse_multiset(s); }

std::shared_ptr<const SymOracle> abelian_ptr() { return std::make_shared<const SymOracle>(abelian_sym_oracle()); }
std::shared_ptr<const SymOracle> tarski_ptr() {
  return std::make_shared<const SymOracle>(pointwise_symmetric(p_oracle()));
}

SampleDomain numerals(long long lo, long long hi, std::size_t k) {
  SampleDomain d{numeral_universe(lo, hi), k};
  d.exhaustive_limit = 100'000'000;
  return d;
}

}  // namespace

TEST_CASE("principal theories of the sum relation") {
  auto o = abelian_ptr();
  auto zero = th_zero(o);
  CHECK(th_eq(theory(o, ms("[1, -1]")), zero) == Tri::holds);
  CHECK(th_eq(theory(o, ms("[2]")), theory(o, ms("[1, 1]"))) == Tri::holds);
  CHECK(th_contains(theory(o, ms("[1]")), ms("[1]")) == Tri::holds);
  CHECK(th_contains(theory(o, ms("[2]")), ms("[1]")) == Tri::fails);
  auto sum = th_add(theory(o, ms("[1]")), theory(o, ms("[2]")));
  CHECK(th_contains(sum, ms("[3]")) == Tri::holds);
  CHECK(print_theory(sum) == "Th[1, 2]");
}

TEST_CASE("operations on theories of different oracles are rejected") {
  auto a = theory(abelian_ptr(), ms("[1]"));
  auto b = theory(abelian_ptr(), ms("[1]"));
  CHECK_THROWS_AS(th_add(a, b), TheoryError);
  CHECK_THROWS_AS(th_leq(a, b), TheoryError);
}

TEST_CASE("order on theories is reverse inclusion of generators' consequences") {
  auto o = abelian_ptr();
  gen::Rng r(61);
  auto u = numeral_universe(-2, 2);
  for (int i = 0; i < 300; ++i) {
    auto t = theory(o, gen::multiset(r, u, 3));
    auto s = theory(o, gen::multiset(r, u, 3));
    auto x = gen::multiset(r, u, 3);
    // If Th(T) <= Th(S) then every member of T is a member of S.
    if (th_leq(t, s) == Tri::holds && th_contains(t, x) == Tri::holds) CHECK(th_contains(s, x) == Tri::holds);
    CHECK(th_leq(t, t) == Tri::holds);
  }
}

TEST_CASE("quotient checks pass for the sum relation") {
  auto rep = quotient_check(abelian_ptr(), numerals(-3, 3, 3));
  for (const auto& l : rep.lines) CHECK_MESSAGE(l.status == LawStatus::passed, l.name, " ", l.witness);
  CHECK(rep.get("three-way-agreement").instances > 0);
}

TEST_CASE("quotient checks detect a non-congruence") {
  // Compares numbers of distinct elements: [1] and [2] are equivalent, [1, 1] and [2, 1] are not.
  auto distinct = std::make_shared<const SymOracle>(
      SymOracle{"distinct", [](const FMS& g, const FMS& d) { return tri(g.distinct() >= d.distinct()); }});
  auto rep = quotient_check(distinct, numerals(-1, 2, 2));
  CHECK(rep.get("congruence").status == LawStatus::counterexample);
}

TEST_CASE("monotone theory map iff monotone relation") {
  auto d = numerals(-3, 3, 3);
  auto ab = monotone_mapping_check(abelian_ptr(), d);
  CHECK(ab.law == Tri::fails);
  CHECK(ab.mapping == Tri::fails);
  CHECK_FALSE(ab.witness.empty());
  auto ta = monotone_mapping_check(tarski_ptr(), d);
  CHECK(ta.law == Tri::holds);
  CHECK(ta.mapping == Tri::holds);
  auto th = monotone_mapping_check(std::make_shared<const SymOracle>(threshold_oracle()),
                                   SampleDomain{{Formula::atom("x")}, 5});
  CHECK(th.agree());
}

TEST_CASE("union characterization needs a monotone contractive relation") {
  auto d = numerals(-2, 2, 3);
  CHECK_THROWS_WITH_AS(union_theory_check(theory(abelian_ptr(), ms("[1]")), d), doctest::Contains("precondition"),
                       TheoryError);
  for (const char* g : {"[]", "[1]", "[-1]", "[1, -2]"}) {
    auto rep = union_theory_check(theory(tarski_ptr(), ms(g)), d);
    CHECK_MESSAGE(rep.all_passed(), g, "\n", rep.text());
  }
}
