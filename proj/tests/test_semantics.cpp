#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gen.hpp"
#include "relcon/semantics.hpp"

using namespace relcon;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream f(std::string(RELCON_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Hand transcription of the four-element tables, indexed [left][right].
constexpr int kImp[4][4] = {{3, 3, 3, 3}, {0, 3, 0, 3}, {1, 1, 3, 3}, {0, 1, 0, 3}};
constexpr int kFus[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 2, 3}, {0, 1, 2, 3}};

int t4_eval(Formula f, const std::map<std::string, int>& v) {
  switch (f.kind()) {
    case Kind::Atom: return v.at(f.name());
    case Kind::Imp: return kImp[t4_eval(f.lhs(), v)][t4_eval(f.rhs(), v)];
    case Kind::Fus: return kFus[t4_eval(f.lhs(), v)][t4_eval(f.rhs(), v)];
    default: throw std::logic_error("outside the fragment");
  }
}

// Direct integer semantics, written independently of LinearForm.
long long z_eval(Formula f, const std::map<std::string, long long>& v) {
  switch (f.kind()) {
    case Kind::Zero: return 0;
    case Kind::One: return 1;
    case Kind::Atom: return v.count(f.name()) ? v.at(f.name()) : 0;
    case Kind::Neg: return -z_eval(f.arg(), v);
    case Kind::Fus: return z_eval(f.lhs(), v) + z_eval(f.rhs(), v);
    case Kind::Imp: return z_eval(f.rhs(), v) - z_eval(f.lhs(), v);
    case Kind::And: return std::min(z_eval(f.lhs(), v), z_eval(f.rhs(), v));
    case Kind::Or: return std::max(z_eval(f.lhs(), v), z_eval(f.rhs(), v));
    default: throw std::logic_error("no integer value");
  }
}

Formula linear_formula(gen::Rng& r, int depth) {
  if (depth <= 0 || gen::below(r, 3) == 0) {
    switch (gen::below(r, 5)) {
      case 0: return Formula::zero();
      case 1: return Formula::one();
      default: return Formula::atom(std::string(1, static_cast<char>('a' + gen::below(r, 3))));
    }
  }
  switch (gen::below(r, 3)) {
    case 0: return Formula::neg(linear_formula(r, depth - 1));
    case 1: return Formula::fus(linear_formula(r, depth - 1), linear_formula(r, depth - 1));
    default: return Formula::imp(linear_formula(r, depth - 1), linear_formula(r, depth - 1));
  }
}

}  // namespace

TEST_CASE("the four-element matrix") {
  auto m = parse_matrix(fixture("t4.mat"));
  CHECK(m.values.size() == 4);
  CHECK(m.is_designated(3));
  CHECK_FALSE(m.is_designated(2));
  Formula f = parse_formula("(a -> b) -> ((a o c) -> (b o c))");
  MatrixValuation v{{"a", 2}, {"b", 0}, {"c", 1}};
  CHECK(eval(m, v, f) == 0);
  auto cm = countermodel_search(m, f);
  REQUIRE(cm);
  CHECK_FALSE(m.is_designated(eval(m, *cm, f)));
  CHECK(parse_matrix(print_matrix(m)).binary == m.binary);
}

TEST_CASE("matrix evaluation agrees with the hand-coded tables") {
  auto m = parse_matrix(fixture("t4.mat"));
  gen::Rng r(41);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::imp_fus(r, 4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          std::map<std::string, int> v{{"a", a}, {"b", b}, {"c", c}};
          REQUIRE(eval(m, v, f) == t4_eval(f, v));
        }
  }
}

TEST_CASE("countermodel search is complete on the matrix") {
  auto m = parse_matrix(fixture("t4.mat"));
  gen::Rng r(42);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen::imp_fus(r, 3);
    bool valid = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) valid = valid && t4_eval(f, {{"a", a}, {"b", b}, {"c", c}}) == 3;
    CHECK(countermodel_search(m, f).has_value() == !valid);
  }
  // Axioms of the system hold in the matrix; identity is valid.
  CHECK_FALSE(countermodel_search(m, parse_formula("a -> a")));
  CHECK_FALSE(countermodel_search(m, parse_formula("(a -> b) -> ((b -> c) -> (a -> c))")));
}

TEST_CASE("matrix errors") {
  auto m = parse_matrix(fixture("t4.mat"));
  CHECK_THROWS_AS(eval(m, {{"a", 0}}, parse_formula("a -> b")), EvalError);
  CHECK_THROWS_AS(eval(m, {{"a", 0}}, parse_formula("~a")), EvalError);
  CHECK_THROWS_AS(parse_matrix("matrix M\nvalues 0 1\ndesignated 1\ntable -> : 0 1 | 1\n"), SystemError);
  CHECK_THROWS_AS(parse_matrix("matrix M\nvalues 0 1\n"), SystemError);
  CHECK_THROWS_AS(parse_matrix("matrix M\nvalues 0 1\ndesignated 2\n"), SystemError);
}

TEST_CASE("integer semantics: the worked instances") {
  auto z = [](const char* g, const char* f) { return abelian_oracle(AbelianKind::z, parse_multiset(g), parse_formula(f)); };
  CHECK(z("[]", "0") == Tri::holds);
  CHECK(z("[1]", "0") == Tri::fails);
  CHECK(z("[1]", "1") == Tri::holds);
  CHECK(z("[1, 1]", "1") == Tri::fails);
  CHECK(z("[a, a -> b]", "b") == Tri::holds);
  CHECK(z("[a]", "b") == Tri::fails);
}

TEST_CASE("deduction theorem fails for the min-based relations") {
  for (auto k : {AbelianKind::p, AbelianKind::leq}) {
    CHECK(abelian_oracle(k, parse_multiset("[1, 2]"), parse_formula("1")) == Tri::holds);
    CHECK(abelian_oracle(k, parse_multiset("[1]"), parse_formula("2 -> 1")) == Tri::fails);
  }
  // Modus ponens fails for the order relation.
  CHECK(abelian_oracle(AbelianKind::leq, parse_multiset("[-1 -> -2, -1]"), parse_formula("-2")) == Tri::fails);
  CHECK(abelian_oracle(AbelianKind::p, parse_multiset("[-1 -> -2, -1]"), parse_formula("-2")) == Tri::holds);
}

TEST_CASE("exact linear decision agrees with an evaluation oracle") {
  gen::Rng r(43);
  for (int i = 0; i < 1500; ++i) {
    FMS g;
    std::size_t n = gen::below(r, 4);
    for (std::size_t j = 0; j < n; ++j) g.add(linear_formula(r, 3));
    Formula phi = linear_formula(r, 3);
    // lhs - rhs is affine; it is positive somewhere iff it is at the origin or some
    // atom has a nonzero coefficient, which a large value of that atom exposes.
    auto diff = [&](const std::map<std::string, long long>& v) {
      long long s = 0;
      for (auto& [f, c] : g) s += static_cast<long long>(c) * z_eval(f, v);
      return s - z_eval(phi, v);
    };
    bool refuted = diff({}) > 0;
    for (const char* a : {"a", "b", "c"})
      for (long long x : {-100LL, 100LL}) refuted = refuted || diff({{a, x}}) > 0;
    auto res = abelian(AbelianKind::z, g, phi);
    CHECK(res.method == "linear");
    CHECK(res.verdict == (refuted ? Tri::fails : Tri::holds));
    if (res.counter) {
      CHECK(refuted);
      CHECK(diff(std::map<std::string, long long>(res.counter->begin(), res.counter->end())) > 0);
    }
  }
}

TEST_CASE("lattice connectives are handled by bounded refutation") {
  CHECK(abelian_oracle(AbelianKind::z, parse_multiset("[a & b]"), parse_formula("a")) == Tri::unknown);
  CHECK(abelian_oracle(AbelianKind::z, parse_multiset("[a | b]"), parse_formula("a")) == Tri::fails);
  CHECK(abelian_oracle(AbelianKind::z, parse_multiset("[1 & 2]"), parse_formula("1")) == Tri::holds);
}

TEST_CASE("overflow is reported, not wrapped") {
  Formula f = Formula::atom("a");
  for (int i = 0; i < 70; ++i) f = Formula::fus(f, f);
  CHECK_THROWS_AS(linear_form(f), OverflowError);
}

TEST_CASE("symmetric sum relation") {
  CHECK(abelian_symmetric(parse_multiset("[]"), parse_multiset("[1, -1]")) == Tri::holds);
  CHECK(abelian_symmetric(parse_multiset("[a, b]"), parse_multiset("[a o b]")) == Tri::holds);
  CHECK(abelian_symmetric(parse_multiset("[2]"), parse_multiset("[1]")) == Tri::fails);
}
