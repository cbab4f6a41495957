#include "latpack/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/zeta.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "latpack/numth.hpp"

namespace latpack::bounds {

namespace {

void check_nx(int n, double x) {
  if (n < 2) throw std::invalid_argument("bounds: n must be >= 2");
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument("bounds: x must be positive");
}

// (x - u^2)^alpha, zero outside the support.
double profile(double x, double u, double alpha) {
  const double base = x - u * u;
  return base > 0 ? std::pow(base, alpha) : 0.0;
}

// Length above which a sampled sum of the profile is replaced by its
// trapezoid closed form; the endpoint error then sits below ~1e-17 relative.
double closed_form_threshold(int n) {
  const double alpha = 0.5 * (n - 1);
  const double t = std::pow(10.0, (20.0 + alpha * std::log10(2.0)) / (alpha + 2.0));
  return std::clamp(t, 256.0, 1e7);
}

// Integral of (x - u^2)^((n-1)/2) over [0, sqrt(x)] = x^(n/2) V_n / (2 V_{n-1}).
double log_profile_integral(int n, double x) {
  return 0.5 * n * std::log(x) + numth::log_ball_volume(n) - numth::log_ball_volume(n - 1) - std::log(2.0);
}

double profile_sum(double x, double h, double count, double alpha) {
  double s = 0;
  const auto m_max = static_cast<std::uint64_t>(count);
  for (std::uint64_t m = 1; m <= m_max; ++m) s += profile(x, static_cast<double>(m) * h, alpha);
  return s;
}

double form_term(double base, double alpha) { return base > 0 ? std::pow(base, alpha) : 0.0; }

}  // namespace

double level(int n) { return std::exp(-numth::log_ball_volume(n - 1)); }

double eval_F_direct(int n, double x, double y) {
  check_nx(n, x);
  if (y < 0) throw std::invalid_argument("eval_F: y must be >= 0");
  const double alpha = 0.5 * (n - 1);
  const double kmax = std::floor(std::sqrt(x) * y);
  double s = 0;
  for (double k = 1; k <= kmax; ++k) {
    s += numth::mobius_weight(static_cast<std::uint64_t>(k), n) * profile(x, k / y, alpha);
  }
  return s;
}

double eval_F(int n, double x, double y) {
  check_nx(n, x);
  if (y < 0) throw std::invalid_argument("eval_F: y must be >= 0");
  const double kmax = std::floor(std::sqrt(x) * y);
  if (kmax < 1) return 0.0;
  const double alpha = 0.5 * (n - 1);
  const double threshold = closed_form_threshold(n);
  const double integral = std::exp(log_profile_integral(n, x));
  const double g0 = std::pow(x, alpha);

  // sum_k w(k) g(k/y) = sum_l mu(l) l^(1-n) sum_m g(l m / y)
  double sum = 0;
  for (double l = 1; l <= kmax; ++l) {
    const auto li = static_cast<std::uint64_t>(l);
    const int u = numth::mobius(li);
    if (u != 0) {
      const double count = std::floor(kmax / l);
      const double h = l / y;
      const double inner = count <= threshold ? profile_sum(x, h, count, alpha) : integral / h - 0.5 * g0;
      sum += u * std::pow(l, 1.0 - n) * inner;
    }
    if (n >= 3) {
      const double tail = kmax * g0 * std::pow(l, 1.0 - n) / (n - 1);
      if (tail < 1e-17 * std::fabs(sum)) break;
    }
  }
  return sum;
}

double eval_Y(int n, double x) {
  check_nx(n, x);
  const double target = level(n);
  const double integral = std::exp(log_profile_integral(n, x));
  auto f = [&](double y) { return eval_F(n, x, y) - target; };
  // F(x, y) <= y * integral, so Y >= target / integral.
  const double floor_y = std::max(1.0 / std::sqrt(x), target / integral);
  if (f(floor_y) >= 0) return floor_y;

  // For long sums F ~ y I / zeta(n) - g(0) / (2 zeta(n-1)).
  double lead = target;
  if (n >= 3) lead += 0.5 * std::pow(x, 0.5 * (n - 1)) / boost::math::zeta(n - 1.0);
  const double guess = std::max(floor_y, lead * boost::math::zeta(static_cast<double>(n)) / integral);

  double a = guess, b = guess, fa = f(a), fb = fa;
  double step = 1e-3 * guess;
  for (int expansions = 0; fb < 0; ++expansions) {
    if (expansions > 200) throw std::runtime_error("eval_Y: bracket did not close");
    a = b;
    fa = fb;
    b += step;
    step *= 2;
    fb = f(b);
  }
  for (int expansions = 0; fa >= 0; ++expansions) {
    if (expansions > 200) throw std::runtime_error("eval_Y: bracket did not close");
    b = a;
    fb = fa;
    a = std::max(floor_y, a - step);
    step *= 2;
    fa = f(a);
  }
  // Relative: F is steep in y for large n and x, so an absolute 1e-12 does not
  // pin F(Y) to the level; for y below ~1e3 this is also finer than 1e-12.
  const auto tol = [](double lo, double hi) {
    return hi - lo <= 4 * std::numeric_limits<double>::epsilon() * hi;
  };
  std::uintmax_t iters = 200;
  const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
  if (iters >= 200) throw std::runtime_error("eval_Y: root finder did not converge");
  return 0.5 * (r.first + r.second);
}

namespace {

double envelope_value(int n, double xi) { return std::exp(std::log(xi) + 2.0 / n * std::log(eval_Y(n, xi))); }

}  // namespace

EnvelopeResult envelope(int n, double x, Exec exec) {
  check_nx(n, x);
  constexpr int kGrid = 256;
  const double a = x / 100;
  std::vector<double> grid(kGrid), vals(kGrid);
  for (int i = 0; i < kGrid; ++i) grid[i] = a * std::pow(100.0, static_cast<double>(i) / (kGrid - 1));
  grid.back() = x;
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < kGrid; ++i) vals[i] = envelope_value(n, grid[i]);
  } else {
    for (int i = 0; i < kGrid; ++i) vals[i] = envelope_value(n, grid[i]);
  }
  const int best = static_cast<int>(std::max_element(vals.begin(), vals.end()) - vals.begin());

  EnvelopeResult r;
  r.right_edge = vals.back();
  r.value = vals[best];
  r.argmax = grid[best];
  // golden-section refinement inside the neighbouring grid cells
  double lo = grid[std::max(best - 1, 0)];
  double hi = grid[std::min(best + 1, kGrid - 1)];
  const double phi = 0.5 * (std::sqrt(5.0) - 1);
  double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
  double fc = envelope_value(n, c), fd = envelope_value(n, d);
  while (hi - lo > 1e-10 * std::max(1.0, x)) {
    if (fc >= fd) {
      hi = d; d = c; fd = fc;
      c = hi - phi * (hi - lo);
      fc = envelope_value(n, c);
    } else {
      lo = c; c = d; fc = fd;
      d = lo + phi * (hi - lo);
      fd = envelope_value(n, d);
    }
  }
  if (fc > r.value) { r.value = fc; r.argmax = c; }
  if (fd > r.value) { r.value = fd; r.argmax = d; }
  if (r.right_edge >= r.value) {
    r.value = r.right_edge;
    r.argmax = x;
  }
  r.interior_sup = r.value > r.right_edge * (1 + 1e-12);
  return r;
}

double eval_C(int n, double x) { return envelope(n, x).value; }

Kind parse_kind(std::string_view name) {
  if (name == "density") return Kind::density;
  if (name == "center" || name == "center-density" || name == "center_density") return Kind::center_density;
  if (name == "hermite") return Kind::hermite;
  throw std::invalid_argument("unknown density kind: " + std::string(name));
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::density: return "density";
    case Kind::center_density: return "center";
    case Kind::hermite: return "hermite";
  }
  return "?";
}

double convert(Kind from, Kind to, double value, int n) {
  if (!(value > 0) || n < 1) throw std::invalid_argument("convert: need value > 0, n >= 1");
  double log_delta = 0;
  switch (from) {
    case Kind::density: log_delta = std::log(value) - numth::log_ball_volume(n); break;
    case Kind::center_density: log_delta = std::log(value); break;
    case Kind::hermite: log_delta = 0.5 * n * (std::log(value) - std::log(4.0)); break;
  }
  switch (to) {
    case Kind::density: return std::exp(log_delta + numth::log_ball_volume(n));
    case Kind::center_density: return std::exp(log_delta);
    case Kind::hermite: return 4.0 * std::exp(2.0 / n * log_delta);
  }
  return 0;
}

double theorem1_center_lhs(int n, double dp, double dc) {
  check_nx(n, dp);
  const double alpha = 0.5 * (n - 1);
  const double kmax = std::floor(2 * dc / dp);
  double s = 0;
  for (double k = 1; k <= kmax; ++k) {
    const double r = k * dp / (2 * dc);
    s += numth::mobius_weight(static_cast<std::uint64_t>(k), n) * form_term(1 - r * r, alpha);
  }
  return std::exp((n - 1) * std::log(2.0) + std::log(dp) + numth::log_ball_volume(n - 1)) * s;
}

double theorem1_density_lhs(int n, double dp, double dc) {
  check_nx(n, dp);
  const double alpha = 0.5 * (n - 1);
  const double ratio = std::exp(numth::log_ball_volume(n) - numth::log_ball_volume(n - 1));  // V_n / V_{n-1}
  const double kmax = std::floor(2 * dc / (dp * ratio));
  double s = 0;
  for (double k = 1; k <= kmax; ++k) {
    const double r = k * dp * ratio / (2 * dc);
    s += numth::mobius_weight(static_cast<std::uint64_t>(k), n) * form_term(1 - r * r, alpha);
  }
  return std::exp((n - 1) * std::log(2.0) + std::log(dp)) * s;
}

double theorem1_hermite_lhs(int n, double gp, double gc) {
  check_nx(n, gp);
  const double alpha = 0.5 * (n - 1);
  const double kmax = std::floor(std::exp(0.5 * n * std::log(gc) - alpha * std::log(gp)));
  const double q = std::exp(n * (std::log(gp) - std::log(gc)));  // (gp / gc)^n
  double s = 0;
  for (double k = 1; k <= kmax; ++k) {
    s += numth::mobius_weight(static_cast<std::uint64_t>(k), n) * form_term(gp - k * k * q, alpha);
  }
  return std::exp(numth::log_ball_volume(n - 1)) * s;
}

double check_theorem1(const Theorem1Input& in) {
  if (in.n < 2 || !(in.delta_prev > 0) || !(in.delta_cur > 0)) {
    throw std::invalid_argument("check_theorem1: need n >= 2 and positive densities");
  }
  const double prev = convert(Kind::center_density, in.form, in.delta_prev, in.n - 1);
  const double cur = convert(Kind::center_density, in.form, in.delta_cur, in.n);
  switch (in.form) {
    case Kind::density: return theorem1_density_lhs(in.n, prev, cur) - 1;
    case Kind::center_density: return theorem1_center_lhs(in.n, prev, cur) - 1;
    case Kind::hermite: return theorem1_hermite_lhs(in.n, prev, cur) - 1;
  }
  return 0;
}

double mordell_upper(int n, double gamma_prev) {
  if (n < 3) throw std::invalid_argument("mordell_upper: n must be >= 3");
  if (!(gamma_prev > 0)) throw std::invalid_argument("mordell_upper: gamma must be positive");
  return std::pow(gamma_prev, static_cast<double>(n - 1) / (n - 2));
}

double trivial_lower(double delta_prev) { return 0.5 * delta_prev; }

MarinChain marin_chain(int n, double dp, double dc) {
  check_nx(n, dp);
  if (!(dc > 0)) throw std::invalid_argument("marin_chain: densities must be positive");
  const double alpha = 0.5 * (n - 1);
  const double kmax = std::floor(2 * dc / dp);
  double plain = 0;
  for (double k = 1; k <= kmax; ++k) {
    const double r = k * dp / (2 * dc);
    plain += form_term(1 - r * r, alpha);
  }
  MarinChain c;
  c.lhs = theorem1_center_lhs(n, dp, dc);
  c.mid = std::exp(n * std::log(2.0) + std::log(dc) + numth::log_ball_volume(n - 1)) * plain * dp / (2 * dc);
  c.rhs = std::exp((n - 1) * std::log(2.0) + std::log(dc) + numth::log_ball_volume(n));
  return c;
}

}  // namespace latpack::bounds
