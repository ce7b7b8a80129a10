#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "relcon/syntax.hpp"

using namespace relcon;

namespace {

std::string read_file(const std::string& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("implication is right associative and binds loosest") {
  Formula a = Formula::atom("a"), b = Formula::atom("b"), c = Formula::atom("c");
  CHECK(parse_formula("a -> b -> c") == Formula::imp(a, Formula::imp(b, c)));
  CHECK(parse_formula("a o b -> c") == Formula::imp(Formula::fus(a, b), c));
  CHECK(parse_formula("a & b | c") == Formula::disj(Formula::conj(a, b), c));
  CHECK(parse_formula("~a o b") == Formula::fus(Formula::neg(a), b));
}

TEST_CASE("numerals expand and print back as digits") {
  CHECK(parse_formula("3") == Formula::fus(Formula::fus(Formula::one(), Formula::one()), Formula::one()));
  CHECK(parse_formula("-2") == Formula::neg(Formula::numeral(2)));
  CHECK(print_formula(Formula::numeral(3)) == "3");
  CHECK(print_formula(Formula::numeral(-3)) == "-3");
  CHECK(print_formula(Formula::numeral(0)) == "0");
  CHECK(print_formula(parse_formula("1 o 1 -> -1")) == "2 -> -1");
}

TEST_CASE("print then parse is the identity on random formulas") {
  gen::Rng r(21);
  for (int i = 0; i < 3000; ++i) {
    Formula f = gen::formula(r, 5);
    CHECK_MESSAGE(parse_formula(print_formula(f)) == f, print_formula(f));
  }
}

TEST_CASE("interning gives pointer equality") {
  CHECK(parse_formula("(a -> b) o c").id() == parse_formula("(a->b)o c").id());
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_formula("a -> (b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_multiset("a, b"), ParseError);
  CHECK_THROWS_AS(parse_formula("a ->"), ParseError);
}

TEST_CASE("metavariables, matching and substitution") {
  Formula s = parse_schema("p -> (q -> p)");
  CHECK(metavariables(s) == std::set<std::string>{"p", "q"});
  Formula f = parse_formula("(a o b) -> (c -> (a o b))");
  auto sigma = match(s, f);
  REQUIRE(sigma);
  CHECK(substitute(s, *sigma) == f);
  CHECK_FALSE(match(s, parse_formula("a -> (c -> b)")));
  CHECK(atoms_of(f) == std::set<std::string>{"a", "b", "c"});
}

TEST_CASE("match recovers random substitutions") {
  gen::Rng r(22);
  Formula s = parse_schema("(p -> q) -> ((r -> p) -> (r -> q))");
  for (int i = 0; i < 500; ++i) {
    Subst sigma{{"p", gen::formula(r, 3)}, {"q", gen::formula(r, 3)}, {"r", gen::formula(r, 3)}};
    Formula inst = substitute(s, sigma);
    auto back = match(s, inst);
    REQUIRE(back);
    CHECK(*back == sigma);
  }
}

TEST_CASE("system files parse and round-trip") {
  for (const char* name : {"bci.rcs", "bcif.rcs", "t_imp_fus.rcs", "toy.rcs"}) {
    auto as = parse_system(read_file(std::string(RELCON_FIXTURES) + "/" + name));
    CHECK_MESSAGE(parse_system(print_system(as)) == as, name);
  }
  auto toy = parse_system(read_file(std::string(RELCON_FIXTURES) + "/toy.rcs"));
  CHECK(toy.axioms().size() == 2);
  CHECK(toy.is_axiom_instance(Formula::atom("x")));
  CHECK_FALSE(toy.is_axiom_instance(Formula::atom("z")));
  auto bci = parse_system(read_file(std::string(RELCON_FIXTURES) + "/bci.rcs"));
  CHECK(bci.inference_rules().size() == 1);
  CHECK(bci.axiom_instance(parse_formula("(a -> b) -> (a -> b)")) == std::optional<std::string>("I"));
}

TEST_CASE("system parse errors name the line") {
  CHECK_THROWS_AS(parse_system("axiom I : p -> p\n"), SystemError);
  CHECK_THROWS_WITH_AS(parse_system("system S\nrule mp : p -> q, p\n"), doctest::Contains("line 2"), SystemError);
  CHECK_THROWS_AS(parse_system("system S\naxiom I : p\naxiom I : q\n"), SystemError);
  CHECK(parse_system("system S\nrule split : p o q |- p, q\n").symmetric);
}
