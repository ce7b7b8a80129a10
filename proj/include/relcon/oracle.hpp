#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "relcon/syntax.hpp"

namespace relcon {

enum class Tri { fails, holds, unknown };

inline Tri tri(bool b) { return b ? Tri::holds : Tri::fails; }
inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::fails: return "fails";
    case Tri::holds: return "holds";
    case Tri::unknown: return "unknown";
  }
  return "?";
}
inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::fails || b == Tri::fails) return Tri::fails;
  if (a == Tri::unknown || b == Tri::unknown) return Tri::unknown;
  return Tri::holds;
}

// Relation between finite multisets and formulas.
struct AsymOracle {
  std::string name;
  std::function<Tri(const FMS&, Formula)> rel;
  // Finite theorem basis: gamma |-s [] iff gamma |- chi for every chi listed.
  std::optional<std::vector<Formula>> theorem_basis;
  // Decides "gamma |- chi for each theorem chi"; preferred over the basis.
  std::function<Tri(const FMS&)> theorem_hook;

  Tri operator()(const FMS& g, Formula f) const { return rel(g, f); }
};

// Relation between finite multisets.
struct SymOracle {
  std::string name;
  std::function<Tri(const FMS&, const FMS&)> rel;

  Tri operator()(const FMS& g, const FMS& d) const { return rel(g, d); }
};

}  // namespace relcon
