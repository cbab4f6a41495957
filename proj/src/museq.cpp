#include "latpack/museq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>

#include "latpack/ball.hpp"
#include "latpack/errors.hpp"
#include "latpack/numth.hpp"

namespace latpack::museq {

namespace {

struct BallPoint {
  std::int64_t dot;
  std::int64_t norm;
  std::int64_t content;  // gcd of |z_i|
};

void check_ball_budget(int len, std::int64_t max_norm, const Options& options) {
  if (max_norm < 1) return;
  if (numth::log_ball_point_count_bound(len, static_cast<double>(max_norm)) > std::log(options.ball_budget)) {
    throw ResourceError("ball enumeration: point-count bound exceeds the configured budget");
  }
}

// Every nonzero z in Z^len with |z|^2 <= max_norm and <z, s> != 0.
std::vector<BallPoint> ball_points(const std::vector<std::int64_t>& s, std::int64_t max_norm, Exec exec) {
  const int len = static_cast<int>(s.size());
  auto visit = [&s](std::span<const int> z, std::int64_t norm) -> std::optional<BallPoint> {
    if (norm == 0) return std::nullopt;
    __int128 acc = 0;
    std::int64_t g = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      acc += static_cast<__int128>(z[i]) * s[i];
      g = std::gcd(g, static_cast<std::int64_t>(z[i] < 0 ? -z[i] : z[i]));
    }
    if (acc == 0) return std::nullopt;
    if (acc > std::numeric_limits<std::int64_t>::max() || acc < -std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("ball enumeration: <z, s> exceeds 64 bits");
    }
    return BallPoint{static_cast<std::int64_t>(acc), norm, g};
  };
  if (exec == Exec::parallel) return ball::collect_parallel<BallPoint>(len, max_norm, visit);
  return ball::collect_serial<BallPoint>(len, max_norm, visit);
}

double log1p_exp(double a) { return a > 0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a)); }

}  // namespace

std::pair<double, double> log_greedy_entry_bounds(std::int64_t mu, int n) {
  if (mu < 2 || n < 0) throw std::invalid_argument("greedy bounds: need mu >= 2, n >= 0");
  const double m = static_cast<double>(mu);
  const double lv = numth::log_ball_volume(n);
  double first = 0.0;  // log 1
  if (mu > 2) first = log1p_exp(0.5 * std::log(m - 2) + 0.5 * n * std::log(m - 1 + 0.25 * n) + lv);
  const double second = 0.5 * std::log(m) + 0.5 * n * std::log(m + 0.25 * n) + lv;
  return {first, second};
}

double greedy_density_floor(std::int64_t mu, int n) {
  const double m = static_cast<double>(mu);
  return std::exp(-0.5 * n * std::log1p(n / (4 * m)) - n * std::log(2.0) - 0.5 * std::log((n + 1) * m));
}

std::vector<BigInt> forbidden_values(const SVector& s, std::int64_t mu, const Options& options) {
  if (mu < 2) throw std::invalid_argument("forbidden_values: mu must be >= 2");
  const auto sv = s.to_int64();
  const std::int64_t max_norm = mu - 2;  // |z|^2 + k^2 < mu with k >= 1
  if (max_norm < 1) return {};
  check_ball_budget(static_cast<int>(sv.size()), max_norm, options);

  std::vector<std::int64_t> values;
  for (const auto& p : ball_points(sv, max_norm, options.exec)) {
    if (p.dot < 0) continue;  // -z carries the same value
    for (std::int64_t k = 1; p.norm + k * k < mu; ++k) {
      if (p.dot % k == 0) values.push_back(p.dot / k);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {values.begin(), values.end()};
}

BigInt greedy_extend(const SVector& s, std::int64_t mu, const Options& options) {
  BigInt t = 1;
  for (const auto& v : forbidden_values(s, mu, options)) {
    if (v == t) ++t;
    else if (v > t) break;
  }
  return t;
}

MuSequence certify(const SVector& s, std::int64_t mu, const Options& options) {
  MuSequence out{mu, s, true};
  if (s.dim() >= 1) out.certified = has_minimum_at_least(s, mu, options.enumeration);
  return out;
}

MuSequence greedy_sequence(std::int64_t mu, int dim, const Options& options) {
  if (mu < 2 || dim < 1) throw std::invalid_argument("greedy_sequence: need mu >= 2, dim >= 1");
  SVector s{1};
  for (int n = 1; n <= dim; ++n) {
    const BigInt t = greedy_extend(s, mu, options);
    const auto [first, second] = log_greedy_entry_bounds(mu, n);
    const double lt = log_big(t);
    if (lt > first + 1e-12 || lt > second + 1e-12) {
      throw std::logic_error("greedy_sequence: entry exceeds the greedy bound");
    }
    s = s.extended(t);
  }
  MuSequence out = certify(s, mu, options);
  if (!out.certified) throw std::logic_error("greedy_sequence: SVP certification failed");
  return out;
}

IntervalSpec IntervalSpec::from_sigmas(double sigma_tilde, double sigma, std::int64_t mu, int n) {
  if (!(sigma_tilde > 0) || !(sigma >= sigma_tilde)) {
    throw std::invalid_argument("IntervalSpec: need 0 < sigma_tilde <= sigma");
  }
  const double scale = std::exp(0.5 * n * std::log(static_cast<double>(mu)) + numth::log_ball_volume(n));
  return IntervalSpec{sigma_tilde * scale, sigma * scale, sigma, sigma_tilde, sigma / sigma_tilde - 1};
}

IntervalSpec IntervalSpec::from_bounds(double lo, double hi, std::int64_t mu, int n) {
  if (!(lo > 0) || !(hi >= lo)) throw std::invalid_argument("IntervalSpec: need 0 < lo <= hi");
  const double scale = std::exp(0.5 * n * std::log(static_cast<double>(mu)) + numth::log_ball_volume(n));
  return IntervalSpec{lo, hi, hi / scale, lo / scale, hi / lo - 1};
}

std::pair<std::int64_t, std::int64_t> IntervalSpec::integer_range() const {
  const double first = std::ceil(std::max(lo, 1.0));
  const double last = std::floor(hi);
  if (last > 9e18) throw std::overflow_error("IntervalSpec: interval exceeds 64-bit range");
  return {static_cast<std::int64_t>(first), static_cast<std::int64_t>(last)};
}

bool ObstructionReport::invariants_hold() const {
  std::uint64_t primitive = 0;
  for (const auto& k : per_k) {
    if (k.obstructed.size() > k.witnesses) return false;
    primitive += k.primitive_witnesses;
  }
  return union_size <= primitive;
}

ObstructionReport interval_obstructions(const SVector& s, std::int64_t mu, const IntervalSpec& interval,
                                        const Options& options) {
  if (mu < 2) throw std::invalid_argument("interval_obstructions: mu must be >= 2");
  if (!(interval.lo > 0) || interval.hi < interval.lo) {
    throw std::invalid_argument("interval_obstructions: need 0 < lo <= hi");
  }
  const auto sv = s.to_int64();
  const int len = static_cast<int>(sv.size());
  const auto [t_first, t_last] = interval.integer_range();

  ObstructionReport rep;
  rep.k_max = static_cast<int>(ball::isqrt(mu - 1));
  rep.interval_size = t_last >= t_first ? static_cast<std::uint64_t>(t_last - t_first + 1) : 0;
  {
    // Asymptotic cutoff with the current density lower bound in place of the limit density.
    const double lsum = log_big(determinant(s));
    const double log_density_prev = 0.5 * (len - 1) * std::log(static_cast<double>(mu)) -
                                    (len - 1) * std::log(2.0) - 0.5 * lsum + numth::log_ball_volume(len - 1);
    const double log_a = (1 - len) * std::log(2.0) + numth::log_ball_volume(len - 1) -
                         numth::log_ball_volume(len) - log_density_prev - std::log(interval.sigma);
    rep.cutoff_a = log_a > 43 ? std::numeric_limits<std::int64_t>::max()
                              : static_cast<std::int64_t>(std::floor(std::exp(log_a)));
  }

  rep.per_k.resize(static_cast<std::size_t>(rep.k_max));
  for (int k = 1; k <= rep.k_max; ++k) {
    auto& ko = rep.per_k[k - 1];
    ko.k = k;
    ko.residue_counts.assign(static_cast<std::size_t>(k), 0);
  }

  const std::int64_t max_norm = mu - 2;
  if (max_norm >= 1) {
    check_ball_budget(len, max_norm, options);
    for (const auto& p : ball_points(sv, max_norm, options.exec)) {
      if (p.dot <= 0) continue;
      const double dot = static_cast<double>(p.dot);
      for (int k = 1; k <= rep.k_max && p.norm + static_cast<std::int64_t>(k) * k < mu; ++k) {
        if (dot < k * interval.lo || dot > k * interval.hi) continue;
        auto& ko = rep.per_k[k - 1];
        ++ko.total;
        const auto j = static_cast<std::size_t>(p.dot % k);
        ++ko.residue_counts[j];
        if (j != 0) continue;
        const std::int64_t t = p.dot / k;
        if (t < t_first || t > t_last) continue;
        ++ko.witnesses;
        if (std::gcd(p.content, static_cast<std::int64_t>(k)) == 1) ++ko.primitive_witnesses;
        ko.obstructed.push_back(t);
      }
    }
  }
  for (auto& ko : rep.per_k) {
    std::sort(ko.obstructed.begin(), ko.obstructed.end());
    ko.obstructed.erase(std::unique(ko.obstructed.begin(), ko.obstructed.end()), ko.obstructed.end());
    const double mean = static_cast<double>(ko.total) / ko.k;
    for (auto c : ko.residue_counts) ko.residue_spread = std::max(ko.residue_spread, std::fabs(c - mean));
    rep.union_set.insert(rep.union_set.end(), ko.obstructed.begin(), ko.obstructed.end());
  }
  std::sort(rep.union_set.begin(), rep.union_set.end());
  rep.union_set.erase(std::unique(rep.union_set.begin(), rep.union_set.end()), rep.union_set.end());
  rep.union_size = rep.union_set.size();
  return rep;
}

std::optional<std::int64_t> extend_in_interval(const SVector& s, std::int64_t mu, const IntervalSpec& interval,
                                               const Options& options) {
  const auto rep = interval_obstructions(s, mu, interval, options);
  const auto [first, last] = interval.integer_range();
  auto it = rep.union_set.begin();
  for (std::int64_t t = first; t <= last; ++t) {
    while (it != rep.union_set.end() && *it < t) ++it;
    if (it != rep.union_set.end() && *it == t) continue;
    if (!has_minimum_at_least(s.extended(t), mu, options.enumeration)) {
      throw std::logic_error("extend_in_interval: unobstructed value failed SVP certification");
    }
    return t;
  }
  return std::nullopt;
}

}  // namespace latpack::museq
