#include "latpack/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace latpack::reference {

const std::vector<Constant>& constants() {
  static const std::vector<Constant> table = {
      {1, 0.5, false, "integer lattice Z"},
      {2, 1 / (2 * std::sqrt(3.0)), false, "hexagonal lattice A2, optimal"},
      {3, 1 / (4 * std::sqrt(2.0)), false, "face-centred cubic lattice D3, optimal"},
      {4, 1.0 / 8, false, "D4, optimal (Korkine-Zolotarev)"},
      {5, 1 / (8 * std::sqrt(2.0)), false, "D5, optimal (Korkine-Zolotarev)"},
      {6, 1 / (8 * std::sqrt(3.0)), false, "E6, optimal (Blichfeldt)"},
      {7, 1.0 / 16, false, "E7, optimal (Blichfeldt)"},
      {8, 1.0 / 16, false, "E8, optimal"},
      {9, 0.0442, true, "best known lattice in dimension 9 (laminated)"},
      {24, 1.0, false, "Leech lattice, optimal"},
      {25, 0.707, true, "best known lattice in dimension 25"},
  };
  return table;
}

const Constant& center_density(int n) {
  for (const auto& c : constants()) {
    if (c.n == n) return c;
  }
  throw std::out_of_range("reference: no constant for dimension " + std::to_string(n));
}

double hermite(int n) { return 4 * std::pow(center_density(n).center_density, 2.0 / n); }

}  // namespace latpack::reference
