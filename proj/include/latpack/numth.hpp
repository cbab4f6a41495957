#pragma once

#include <cstdint>
#include <vector>

namespace latpack::numth {

/// Moebius function by trial factorization. Throws std::invalid_argument for k == 0.
int mobius(std::uint64_t k);

/// Precomputed Moebius values on [1, limit]. Immutable after construction,
/// so concurrent readers never observe partial state.
class MobiusCache {
 public:
  static constexpr std::uint64_t kMaxLimit = 1'000'000;

  explicit MobiusCache(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  /// mu(k) for 1 <= k <= limit; falls back to trial division above the limit.
  int operator()(std::uint64_t k) const;

 private:
  std::uint64_t limit_;
  std::vector<std::int8_t> values_;  // values_[k - 1] = mu(k)
};

/// Divisor sum sum_{l | k} mu(l) / l^(n-1).
double mobius_weight(std::uint64_t k, int n);

/// The same factor as an Euler product prod_{p | k} (1 - p^(1-n)).
double mobius_weight_product(std::uint64_t k, int n);

/// log((n/2)!) = lgamma(n/2 + 1), valid for every n >= 0.
double log_half_factorial(int n);

/// log V_n, V_n = pi^(n/2) / (n/2)! the volume of the unit ball in R^n.
double log_ball_volume(int n);

/// V_n. Underflows to 0 for very large n; use log_ball_volume there.
double ball_volume(int n);

/// V_{n+1} / V_n computed in log space.
double ball_volume_ratio(int n);

/// Upper bound 2 * (mu + n/4)^(n/2) * V_n on the number of z in Z^n with |z|^2 <= mu.
double ball_point_count_bound(int n, double mu);
double log_ball_point_count_bound(int n, double mu);

}  // namespace latpack::numth
