#include "latpack/thetaflow.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "latpack/numth.hpp"

namespace latpack::thetaflow {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double x, const char* what) {
  if (!(x > 0) || !std::isfinite(x)) throw std::invalid_argument(std::string(what) + ": argument must be positive");
}

}  // namespace

TauValue tau_with_bound(double x, const ThetaParams& params) {
  require_positive(x, "tau");
  TauValue r;
  const double a = kPi / (x * x);
  for (int k = 1;; ++k) {
    const double term = std::exp(-a * k * k);
    if (term == 0 || (k > 1 && term < params.tolerance * r.value)) {
      // terms beyond k - 1 are dominated by a geometric series with ratio exp(-a (2k + 1))
      const double ratio = std::exp(-a * (2 * k + 1));
      r.tail_bound = term / (1 - ratio);
      break;
    }
    r.value += term;
    r.terms = k;
  }
  return r;
}

double tau(double x, const ThetaParams& params) { return tau_with_bound(x, params).value; }

double tau_prime(double x, const ThetaParams& params) {
  require_positive(x, "tau_prime");
  const double a = kPi / (x * x);
  double s = 0;
  for (int k = 1;; ++k) {
    const double term = static_cast<double>(k) * k * std::exp(-a * k * k);
    if (term == 0 || (k > 1 && term < params.tolerance * s)) break;
    s += term;
  }
  return 2 * kPi / (x * x * x) * s;
}

double psi(double t, const ThetaParams& params) {
  require_positive(t, "psi");
  // x/2 - 1 < tau(x) < x/2
  double lo = 2 * t, hi = 2 * t + 2;
  for (int it = 0; it < 300 && hi - lo > 2 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (tau(mid, params) < t) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double omega(double x) {
  require_positive(x, "omega");
  return x * psi(1 / x);
}

double omega_prime(double x) {
  require_positive(x, "omega_prime");
  const double y = psi(1 / x);
  return y - 1 / (x * tau_prime(y));
}

FixedPoint fixpoint() {
  const double t1 = tau(1);
  return {1 / t1, 1 - t1 / tau_prime(1)};
}

double f_residual(int n, double x, double y) {
  const double c = x * numth::ball_volume_ratio(n) / y;
  double s = 0;
  for (int k = 1;; ++k) {
    const double t = (k * c) * (k * c);
    if (t >= 1) break;
    s += std::exp(0.5 * n * std::log1p(-t));
  }
  return x * s - 1;
}

double f_step(int n, double x) {
  if (n < 1) throw std::invalid_argument("f_step: n must be >= 1");
  require_positive(x, "f_step");
  // below y = x r the sum is empty
  double lo = x * numth::ball_volume_ratio(n);
  double hi = 2 * lo;
  int doublings = 0;
  while (f_residual(n, x, hi) < 0) {
    lo = hi;
    hi *= 2;
    if (++doublings > 60) throw std::runtime_error("f_step: bracket did not close");
  }
  for (int it = 0; it < 300 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f_residual(n, x, mid) >= 0) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

const FlowRow& FlowTrace::row(int n) const {
  if (n < 1 || n > static_cast<int>(rows.size())) throw std::out_of_range("FlowTrace: no row " + std::to_string(n));
  return rows[n - 1];
}

std::vector<double> iterate_perturbed(const IndexedMap& f, double x0, int steps,
                                      std::optional<std::pair<double, double>> domain) {
  if (steps < 0) throw std::invalid_argument("iterate_perturbed: steps must be >= 0");
  std::vector<double> out;
  out.reserve(steps);
  double x = x0;
  for (int k = 1; k <= steps; ++k) {
    x = f(k, x);
    if (!std::isfinite(x) || (domain && (x < domain->first || x > domain->second))) {
      throw std::domain_error("iterate_perturbed: iterate left the domain at step " + std::to_string(k));
    }
    out.push_back(x);
  }
  return out;
}

std::vector<double> perturbed_error_bound(double lambda, double e0, const std::vector<double>& sup) {
  std::vector<double> out;
  out.reserve(sup.size());
  double b = e0;
  for (double s : sup) {
    b = lambda * b + s;
    out.push_back(b);
  }
  return out;
}

double omega_lipschitz(double a, double b, int samples) {
  if (!(a <= b) || samples < 2) throw std::invalid_argument("omega_lipschitz: need a <= b and samples >= 2");
  double m = 0;
  for (int i = 0; i < samples; ++i) {
    m = std::max(m, std::fabs(omega_prime(a + (b - a) * i / (samples - 1))));
  }
  return m;
}

FlowTrace iterate_d(int max_n) {
  if (max_n < 1) throw std::invalid_argument("iterate_d: max_n must be >= 1");
  // d_{k+1} = f_k(d_k), omega_{k+1} = Omega(omega_k)
  const auto d = iterate_perturbed([](int k, double x) { return f_step(k, x); }, 2.0, max_n - 1);
  const auto w = iterate_perturbed([](int, double x) { return omega(x); }, 2.0, max_n - 1);
  FlowTrace trace;
  const auto fp = fixpoint();
  trace.xi = fp.xi;
  trace.xi_derivative = fp.derivative;
  trace.rows.resize(max_n);
  for (int n = 1; n <= max_n; ++n) {
    FlowRow& r = trace.rows[n - 1];
    r.n = n;
    r.d = n == 1 ? 2.0 : d[n - 2];
    r.omega = n == 1 ? 2.0 : w[n - 2];
    r.scaled_diff = n * (r.d - r.omega);
  }
  for (int n = 2; n <= max_n; ++n) {
    const double prev = trace.rows[n - 2].d;
    const double ratio = trace.rows[n - 1].d / prev / numth::ball_volume_ratio(n - 1);
    trace.rows[n - 1].a = static_cast<std::int64_t>(std::floor(ratio));
  }
  return trace;
}

AsymptoticFit asymptotic_fit(const FlowTrace& trace, const std::vector<int>& ladder) {
  if (ladder.size() != 4) throw std::invalid_argument("asymptotic_fit: ladder needs exactly 4 dimensions");
  if (std::set<int>(ladder.begin(), ladder.end()).size() != 4) {
    throw std::invalid_argument("asymptotic_fit: ladder dimensions must be distinct");
  }
  Eigen::Matrix4d a;
  Eigen::Vector4d b;
  for (int i = 0; i < 4; ++i) {
    const double u = 1.0 / ladder[i];
    a(i, 0) = 1;
    a(i, 1) = u;
    a(i, 2) = u * u;
    a(i, 3) = u * u * u;
    b(i) = trace.row(ladder[i]).d;
  }
  Eigen::FullPivLU<Eigen::Matrix4d> lu(a);
  if (lu.rank() < 4) throw std::runtime_error("asymptotic_fit: singular system");
  const Eigen::Vector4d c = lu.solve(b);
  return {c(0), c(1), c(2), c(3), ladder};
}

}  // namespace latpack::thetaflow
