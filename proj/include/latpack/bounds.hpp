#pragma once

// Density inequalities relating Hermite constants in consecutive dimensions:
// the function F_n(x, y), its implicit level set Y_n(x), the envelope C_n(x),
// the three equivalent inequality forms, Mordell's upper bound and the chain
// of elementary majorations ending in the Minkowski-Hlawka-type bound.

#include <string_view>
#include <vector>

namespace latpack::bounds {

enum class Exec { serial, parallel };

/// F_n(x, y) = sum_{k=1}^{floor(sqrt(x) y)} w_n(k) (x - (k/y)^2)^((n-1)/2),
/// w_n(k) = sum_{l|k} mu(l) / l^(n-1). Evaluated with the divisor sum swapped
/// out; long smooth inner sums use their trapezoid closed form.
double eval_F(int n, double x, double y);

/// Literal k-sum with mobius_weight per term. Cost grows like sqrt(x) y.
double eval_F_direct(int n, double x, double y);

/// 1 / V_{n-1} = ((n-1)/2)! / pi^((n-1)/2), the level defining Y_n.
double level(int n);

/// Y_n(x): the smallest y with F_n(x, y) = 1 / V_{n-1}, by bisection.
double eval_Y(int n, double x);

struct EnvelopeResult {
  double value = 0;       ///< C_n(x)
  double argmax = 0;      ///< xi attaining the sup
  double right_edge = 0;  ///< x Y_n(x)^(2/n)
  bool interior_sup = false;  ///< the sup exceeds the right-edge value
};

/// C_n(x) = sup_{0 < xi <= x} xi Y_n(xi)^(2/n), searched on a 256-point
/// geometric grid over [x/100, x] with golden-section refinement.
EnvelopeResult envelope(int n, double x, Exec exec = Exec::parallel);
double eval_C(int n, double x);

enum class Kind { density, center_density, hermite };
Kind parse_kind(std::string_view name);
std::string_view kind_name(Kind k);

/// Conversions among Delta = delta V_n, delta, gamma = 4 delta^(2/n).
double convert(Kind from, Kind to, double value, int n);

struct Theorem1Input {
  int n = 2;
  double delta_prev = 0;  ///< center density in dimension n-1
  double delta_cur = 0;   ///< center density in dimension n
  Kind form = Kind::center_density;
};

/// Left-hand side minus 1 of the chosen form; inputs are center densities
/// converted into that form's variables.
double check_theorem1(const Theorem1Input& input);

double theorem1_density_lhs(int n, double density_prev, double density_cur);
double theorem1_center_lhs(int n, double delta_prev, double delta_cur);
double theorem1_hermite_lhs(int n, double gamma_prev, double gamma_cur);

/// gamma_{n-1}^((n-1)/(n-2)). Throws for n < 3.
double mordell_upper(int n, double gamma_prev);

/// delta_{n-1} / 2 from the orthogonal sum with a copy of Z.
double trivial_lower(double delta_prev);

struct MarinChain {
  double lhs = 0;  ///< the center-density inequality's left-hand side
  double mid = 0;  ///< the same sum without Moebius factors
  double rhs = 0;  ///< 2^(n-1) Delta_n
  bool monotone() const { return lhs <= mid * (1 + 1e-12) && mid <= rhs * (1 + 1e-12); }
};

MarinChain marin_chain(int n, double delta_prev, double delta_cur);

}  // namespace latpack::bounds
