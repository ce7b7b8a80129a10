#pragma once
// Seeded random generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "relcon/syntax.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& r, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(r); }

inline relcon::Formula formula(Rng& r, int depth, const std::vector<std::string>& atoms = {"a", "b", "c"}) {
  using relcon::Formula;
  if (depth <= 0 || below(r, 3) == 0) {
    switch (below(r, 6)) {
      case 0: return Formula::zero();
      case 1: return Formula::one();
      case 2: return Formula::top();
      default: return Formula::atom(atoms[below(r, atoms.size())]);
    }
  }
  switch (below(r, 5)) {
    case 0: return Formula::neg(formula(r, depth - 1, atoms));
    case 1: return Formula::imp(formula(r, depth - 1, atoms), formula(r, depth - 1, atoms));
    case 2: return Formula::fus(formula(r, depth - 1, atoms), formula(r, depth - 1, atoms));
    case 3: return Formula::conj(formula(r, depth - 1, atoms), formula(r, depth - 1, atoms));
    default: return Formula::disj(formula(r, depth - 1, atoms), formula(r, depth - 1, atoms));
  }
}

// Implication/fusion formulas over the given atoms.
inline relcon::Formula imp_fus(Rng& r, int depth, const std::vector<std::string>& atoms = {"a", "b", "c"}) {
  using relcon::Formula;
  if (depth <= 0 || below(r, 3) == 0) return Formula::atom(atoms[below(r, atoms.size())]);
  Formula x = imp_fus(r, depth - 1, atoms), y = imp_fus(r, depth - 1, atoms);
  return below(r, 3) == 0 ? Formula::fus(x, y) : Formula::imp(x, y);
}

inline relcon::FMS multiset(Rng& r, const std::vector<relcon::Formula>& universe, std::size_t max_size) {
  relcon::FMS m;
  std::size_t n = below(r, max_size + 1);
  for (std::size_t i = 0; i < n; ++i) m.add(universe[below(r, universe.size())]);
  return m;
}

inline std::vector<relcon::Formula> atoms(const std::vector<std::string>& names) {
  std::vector<relcon::Formula> v;
  for (const auto& n : names) v.push_back(relcon::Formula::atom(n));
  return v;
}

}  // namespace gen
