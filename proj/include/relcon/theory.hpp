#pragma once

#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "relcon/laws.hpp"
#include "relcon/multiset.hpp"
#include "relcon/oracle.hpp"
#include "relcon/syntax.hpp"

namespace relcon {

class TheoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The principal upset Th(generator) = {Delta | generator |- Delta}.
struct TheoryHandle {
  FMS generator;
  std::shared_ptr<const SymOracle> oracle;
};

inline TheoryHandle theory(std::shared_ptr<const SymOracle> o, FMS gen) { return {std::move(gen), std::move(o)}; }
inline TheoryHandle th_zero(std::shared_ptr<const SymOracle> o) { return {FMS{}, std::move(o)}; }

namespace detail {
inline void same_oracle(const TheoryHandle& t, const TheoryHandle& s) {
  if (t.oracle != s.oracle) throw TheoryError("theories over different oracles are incomparable");
}
}  // namespace detail

inline Tri th_contains(const TheoryHandle& t, const FMS& delta) { return (*t.oracle)(t.generator, delta); }

inline TheoryHandle th_add(const TheoryHandle& t, const TheoryHandle& s) {
  detail::same_oracle(t, s);
  return {msum(t.generator, s.generator), t.oracle};
}

// Th(T) included in Th(S), decided as: generator of S entails generator of T.
inline Tri th_leq(const TheoryHandle& t, const TheoryHandle& s) {
  detail::same_oracle(t, s);
  return (*t.oracle)(s.generator, t.generator);
}

inline Tri th_eq(const TheoryHandle& t, const TheoryHandle& s) { return tri_and(th_leq(t, s), th_leq(s, t)); }

inline std::string print_theory(const TheoryHandle& t) { return "Th" + print_multiset(t.generator); }

// ------------------------------------------------------------- sample checks

struct CheckLine {
  std::string name;
  LawStatus status = LawStatus::passed;
  std::string witness;
  std::size_t instances = 0;
};

struct TheoryReport {
  std::vector<CheckLine> lines;

  bool all_passed() const {
    for (const auto& l : lines)
      if (l.status != LawStatus::passed) return false;
    return true;
  }
  const CheckLine& get(const std::string& n) const {
    for (const auto& l : lines)
      if (l.name == n) return l;
    throw std::out_of_range(n);
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& l : lines) {
      os << "CHECK " << l.name << ' ' << law_status_name(l.status);
      if (!l.witness.empty()) os << ' ' << l.witness;
      os << "  [" << l.instances << " instances]\n";
    }
    return os.str();
  }
};

namespace detail {

// Accumulates one named check over many instances.
class Checker {
 public:
  explicit Checker(std::string name) { line_.name = std::move(name); }
  void see(Tri t, const std::function<std::string()>& w) {
    ++line_.instances;
    if (line_.status == LawStatus::counterexample) return;
    if (t == Tri::fails) {
      line_.status = LawStatus::counterexample;
      line_.witness = w();
    } else if (t == Tri::unknown) {
      line_.status = LawStatus::inconclusive;
    }
  }
  CheckLine done() const { return line_; }

 private:
  CheckLine line_;
};

inline Tri implies(Tri a, Tri b) {
  if (a == Tri::fails || b == Tri::holds) return Tri::holds;
  if (a == Tri::holds && b == Tri::fails) return Tri::fails;
  return Tri::unknown;
}
inline Tri iff(Tri a, Tri b) {
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return tri(a == b);
}

}  // namespace detail

// Monoid, congruence and ordered-quotient checks over every generator in the domain.
inline TheoryReport quotient_check(std::shared_ptr<const SymOracle> o, const SampleDomain& dom) {
  LawTables t(dom, nullptr, o.get());
  int n = static_cast<int>(t.nm());
  auto S = [&](int a, int b) { return t.sym(a, b); };
  auto inter = [&](int a, int b) { return tri_and(S(a, b), S(b, a)); };
  auto th = [&](int a) { return theory(o, t.multisets()[static_cast<std::size_t>(a)]); };
  auto pair = [&](int a, int b) { return t.m(a) + " ~ " + t.m(b); };
  TheoryReport rep;

  detail::Checker refl("equivalence-reflexive"), symm("equivalence-symmetric"), trans("equivalence-transitive");
  detail::Checker cong("congruence"), welldef("order-well-defined"), compat("order-compatible-with-sum");
  detail::Checker comm("monoid-commutative"), assoc("monoid-associative"), ident("monoid-identity");
  detail::Checker hom("homomorphism"), antitone("antitone-theory-map"), three("three-way-agreement");
  detail::Checker pre("leq-preorder");

  // Domain-restricted theories as explicit sets.
  std::vector<std::vector<Tri>> member(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) member[static_cast<std::size_t>(a)].push_back(S(a, b));
  auto subset = [&](int a, int b) {  // Th(a) within Th(b), over the domain
    Tri r = Tri::holds;
    for (int d = 0; d < n; ++d) r = tri_and(r, detail::implies(member[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)],
                                                              member[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]));
    return r;
  };

  for (int a = 0; a < n; ++a) {
    refl.see(inter(a, a), [&] { return "not " + pair(a, a); });
    pre.see(th_leq(th(a), th(a)), [&] { return "not Th" + t.m(a) + " <= itself"; });
    ident.see(th_eq(th_add(th(a), th_zero(o)), th(a)), [&] { return print_theory(th(a)) + " + 0"; });
    for (int b = 0; b < n; ++b) {
      symm.see(detail::implies(inter(a, b), inter(b, a)), [&] { return pair(a, b); });
      int ab = t.sum(a, b);
      if (ab >= 0) {
        comm.see(th_eq(th_add(th(a), th(b)), th_add(th(b), th(a))), [&] { return t.m(a) + " + " + t.m(b); });
        hom.see(th_eq(th_add(th(a), th(b)), th(ab)), [&] { return t.m(a) + " + " + t.m(b); });
      }
      Tri rel = S(a, b);
      Tri cont = th_contains(th(a), t.multisets()[static_cast<std::size_t>(b)]);
      Tri leq = th_leq(th(b), th(a));
      three.see(tri_and(detail::iff(rel, cont), detail::iff(rel, leq)),
                [&] { return t.m(a) + " |- " + t.m(b); });
      antitone.see(detail::iff(rel, subset(b, a)), [&] { return t.m(a) + " |- " + t.m(b); });
      for (int c = 0; c < n; ++c) {
        trans.see(detail::implies(tri_and(inter(a, b), inter(b, c)), inter(a, c)),
                  [&] { return pair(a, b) + ", " + pair(b, c) + " but not " + pair(a, c); });
        // Tabulated forms of th_eq / th_leq, as the triple loop is the hot path.
        pre.see(detail::implies(tri_and(S(b, a), S(c, b)), S(c, a)),
                [&] { return "Th" + t.m(a) + " <= Th" + t.m(b) + " <= Th" + t.m(c) + " but not transitively"; });
        int bc = t.sum(b, c);
        int l = t.sum(ab, c), r = t.sum(a, bc);
        if (l >= 0 && r >= 0) assoc.see(inter(l, r), [&] { return t.m(a) + " + " + t.m(b) + " + " + t.m(c); });
        int ac = t.sum(a, c);
        if (ac >= 0 && bc >= 0)
          compat.see(detail::implies(S(a, b), S(ac, bc)),
                     [&] { return "Th" + t.m(b) + " <= Th" + t.m(a) + " but not after adding " + t.m(c); });
      }
    }
  }
  // Congruence and well-definedness over pairs of equivalent generators.
  std::vector<std::pair<int, int>> eqv;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (inter(a, b) == Tri::holds) eqv.emplace_back(a, b);
  for (auto [g, g2] : eqv)
    for (auto [d, d2] : eqv) {
      int gd = t.sum(g, d), gd2 = t.sum(g2, d2);
      if (gd >= 0 && gd2 >= 0)
        cong.see(inter(gd, gd2), [&] { return pair(g, g2) + ", " + pair(d, d2) + " but not " + pair(gd, gd2); });
      welldef.see(detail::iff(S(g, d), S(g2, d2)),
                  [&] { return pair(g, g2) + ", " + pair(d, d2) + " disagree on entailment"; });
    }
  for (auto* c : {&refl, &symm, &trans, &cong, &welldef, &compat, &comm, &assoc, &ident, &hom, &antitone, &three, &pre})
    rep.lines.push_back(c->done());
  return rep;
}

struct MonotoneMappingReport {
  Tri law = Tri::unknown;      // Monotonicity on the domain
  Tri mapping = Tri::unknown;  // gamma <= gamma' implies Th(gamma) within Th(gamma'), over the domain
  std::string witness;
  bool agree() const { return law == mapping; }
};

// Compares the Monotonicity law with monotonicity of the map gamma -> Th(gamma).
inline MonotoneMappingReport monotone_mapping_check(std::shared_ptr<const SymOracle> o, const SampleDomain& dom) {
  MonotoneMappingReport r;
  LawTables t(dom, nullptr, o.get());
  auto law = check_law(Law::Monotonicity, t, true);
  r.law = law.status == LawStatus::passed ? Tri::holds
                                          : law.status == LawStatus::counterexample ? Tri::fails : Tri::unknown;
  int n = static_cast<int>(t.nm());
  r.mapping = Tri::holds;
  for (int a = 0; a < n && r.mapping != Tri::fails; ++a)
    for (int p = 0; p < n && r.mapping != Tri::fails; ++p) {
      int ap = t.sum(a, p);
      if (ap < 0) continue;
      for (int d = 0; d < n; ++d) {
        Tri step = detail::implies(t.sym(a, d), t.sym(ap, d));
        if (step == Tri::fails) {
          r.mapping = Tri::fails;
          r.witness = t.m(d) + " in Th" + t.m(a) + " but not in Th" + t.m(ap);
          break;
        }
        if (step == Tri::unknown) r.mapping = Tri::unknown;
      }
    }
  return r;
}

// For a monotone contractive oracle: a set is in T iff it is included in the
// union of the members of T, with both sides restricted to sets within the domain.
inline TheoryReport union_theory_check(const TheoryHandle& th, const SampleDomain& dom) {
  LawTables t(dom, nullptr, th.oracle.get());
  for (Law l : {Law::Monotonicity, Law::Contraction}) {
    auto out = check_law(l, t, true);
    if (!out.passed())
      throw TheoryError(std::string("precondition: oracle does not satisfy ") + law_name(l) + " on the domain" +
                        (out.witness.empty() ? "" : ": " + out.witness));
  }
  std::vector<int> sets;
  for (int a = 0; a < static_cast<int>(t.nm()); ++a) {
    const FMS& m = t.multisets()[static_cast<std::size_t>(a)];
    if (m.size() == m.distinct()) sets.push_back(a);
  }
  std::set<Formula> uni;
  bool unknown = false;
  for (int a : sets) {
    Tri in = th_contains(th, t.multisets()[static_cast<std::size_t>(a)]);
    if (in == Tri::unknown) unknown = true;
    if (in == Tri::holds)
      for (auto f : t.multisets()[static_cast<std::size_t>(a)].support()) uni.insert(f);
  }
  detail::Checker c("union-characterization");
  for (int a : sets) {
    const FMS& m = t.multisets()[static_cast<std::size_t>(a)];
    bool inside = true;
    for (auto f : m.support()) inside = inside && uni.count(f);
    Tri in = th_contains(th, m);
    c.see(unknown ? Tri::unknown : detail::iff(in, tri(inside)), [&] {
      return print_multiset(m) + (inside ? " is within the union but not in " : " is in but not within the union of ") +
             print_theory(th);
    });
  }
  TheoryReport rep;
  rep.lines.push_back(c.done());
  return rep;
}

}  // namespace relcon
