#pragma once

// Center densities of known lattices, each tagged with where it comes from.

#include <string>
#include <vector>

namespace latpack::reference {

struct Constant {
  int n = 0;
  double center_density = 0;
  /// true for the best currently known value rather than the optimum
  bool candidate = false;
  std::string provenance;
};

const std::vector<Constant>& constants();

/// Throws std::out_of_range when dimension n has no entry.
const Constant& center_density(int n);
double hermite(int n);

}  // namespace latpack::reference
