#pragma once

// Theta-tail sums tau(x) = sum_{k>=1} exp(-pi (k/x)^2), the inverse psi, the
// map Omega(x) = x psi(1/x) and its fixed point, the per-dimension maps f_n
// whose iterates d_n approach that fixed point, and a 1/n expansion fit.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace latpack::thetaflow {

struct ThetaParams {
  /// Stop at the first term below tolerance * partial sum.
  double tolerance = 1e-15;
};

struct TauValue {
  double value = 0;
  int terms = 0;          ///< number of summed terms K
  double tail_bound = 0;  ///< bound on the omitted sum_{k>K}
};

TauValue tau_with_bound(double x, const ThetaParams& params = {});
double tau(double x, const ThetaParams& params = {});

/// d tau / dx = (2 pi / x^3) sum k^2 exp(-pi (k/x)^2).
double tau_prime(double x, const ThetaParams& params = {});

/// Inverse of tau, bisected on (2t, 2t + 2).
double psi(double t, const ThetaParams& params = {});

double omega(double x);
/// Omega'(x) = Y - 1/(x tau'(Y)) with Y = psi(1/x).
double omega_prime(double x);

struct FixedPoint {
  double xi = 0;          ///< 1 / tau(1)
  double derivative = 0;  ///< 1 - tau(1) / tau'(1)
};
FixedPoint fixpoint();

/// f_n(x): the y solving x sum_{k>=1} (1 - (k x r / y)^2)^(n/2) = 1 with
/// r = V_{n+1} / V_n, summing while the base stays positive.
double f_step(int n, double x);

/// x sum_k (1 - (k x r / y)^2)^(n/2) - 1, the residual of f_step.
double f_residual(int n, double x, double y);

struct FlowRow {
  int n = 0;
  double d = 0;
  double omega = 0;        ///< Omega^(n-1)(2)
  double scaled_diff = 0;  ///< n (d - omega)
  std::int64_t a = 0;      ///< floor(d_n V_{n-1} / (d_{n-1} V_n)); 0 for n = 1
};

struct FlowTrace {
  std::vector<FlowRow> rows;  ///< rows[i].n == i + 1
  double xi = 0;
  double xi_derivative = 0;

  const FlowRow& row(int n) const;
};

FlowTrace iterate_d(int max_n);

/// s_k = f(k, s_{k-1}), s_0 = x0, for k = 1..steps. Throws std::domain_error
/// naming the step when an iterate is not finite or leaves `domain`.
using IndexedMap = std::function<double(int, double)>;
std::vector<double> iterate_perturbed(const IndexedMap& f, double x0, int steps,
                                      std::optional<std::pair<double, double>> domain = std::nullopt);

/// b_n = lambda^n e0 + sum_{k=1}^n lambda^(n-k) sup_k, for n = 1..sup.size().
std::vector<double> perturbed_error_bound(double lambda, double e0, const std::vector<double>& sup);

/// max |Omega'| over `samples` equally spaced points of [a, b].
double omega_lipschitz(double a, double b, int samples = 200);

struct AsymptoticFit {
  double c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::vector<int> ladder;

  double operator()(double n) const { return c0 + c1 / n + c2 / (n * n) + c3 / (n * n * n); }
};

/// Solves the 4x4 system d_n = c0 + c1/n + c2/n^2 + c3/n^3 on `ladder`.
AsymptoticFit asymptotic_fit(const FlowTrace& trace, const std::vector<int>& ladder = {128, 256, 512, 1024});

}  // namespace latpack::thetaflow
