#include "latpack/numth.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "latpack/bigint.hpp"

namespace latpack {

double log_big(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log_big: non-positive argument");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 900) return std::log(value.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::numbers::ln2;
}

double to_double(const BigInt& value) {
  if (value == 0) return 0.0;
  const BigInt mag = abs(value);
  if (boost::multiprecision::msb(mag) >= 1024) {
    return value < 0 ? -HUGE_VAL : HUGE_VAL;
  }
  return value.convert_to<double>();
}

bool fits_int64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

BigInt dot(const BigVector& a, const BigVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigInt acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace latpack

namespace latpack::numth {

int mobius(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("mobius: k must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

MobiusCache::MobiusCache(std::uint64_t limit) : limit_(limit) {
  if (limit == 0 || limit > kMaxLimit) {
    throw std::invalid_argument("MobiusCache: limit must lie in [1, 1e6]");
  }
  values_.resize(limit);
  for (std::uint64_t k = 1; k <= limit; ++k) {
    values_[k - 1] = static_cast<std::int8_t>(mobius(k));
  }
}

int MobiusCache::operator()(std::uint64_t k) const {
  if (k >= 1 && k <= limit_) return values_[k - 1];
  return mobius(k);
}

double mobius_weight(std::uint64_t k, int n) {
  if (k == 0) throw std::invalid_argument("mobius_weight: k must be positive");
  if (n < 2) throw std::invalid_argument("mobius_weight: n must be >= 2");
  const double e = static_cast<double>(n - 1);
  double sum = 0.0;
  for (std::uint64_t l = 1; l * l <= k; ++l) {
    if (k % l != 0) continue;
    const std::uint64_t m = k / l;
    if (int u = mobius(l); u != 0) sum += u * std::pow(static_cast<double>(l), -e);
    if (m != l) {
      if (int u = mobius(m); u != 0) sum += u * std::pow(static_cast<double>(m), -e);
    }
  }
  return sum;
}

double mobius_weight_product(std::uint64_t k, int n) {
  if (k == 0) throw std::invalid_argument("mobius_weight_product: k must be positive");
  if (n < 2) throw std::invalid_argument("mobius_weight_product: n must be >= 2");
  const double e = static_cast<double>(n - 1);
  double prod = 1.0;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    prod *= 1.0 - std::pow(static_cast<double>(p), -e);
  }
  if (k > 1) prod *= 1.0 - std::pow(static_cast<double>(k), -e);
  return prod;
}

double log_half_factorial(int n) {
  if (n < 0) throw std::invalid_argument("log_half_factorial: n must be >= 0");
  return std::lgamma(0.5 * n + 1.0);
}

namespace {

// V_n by the two-step recursion in long double; the lgamma route loses about
// |log V_n| ulps once exponentiated.
constexpr int kVolumeTable = 4096;

const std::vector<long double>& volume_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> v(kVolumeTable + 1);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    v[0] = 1;
    v[1] = 2;
    for (int n = 2; n <= kVolumeTable; ++n) v[n] = v[n - 2] * two_pi / n;
    return v;
  }();
  return table;
}

}  // namespace

double log_ball_volume(int n) {
  if (n < 0) throw std::invalid_argument("log_ball_volume: n must be >= 0");
  if (n <= kVolumeTable) return static_cast<double>(std::log(volume_table()[n]));
  return 0.5 * n * std::log(std::numbers::pi) - log_half_factorial(n);
}

double ball_volume(int n) {
  if (n >= 0 && n <= kVolumeTable) return static_cast<double>(volume_table()[n]);
  return std::exp(log_ball_volume(n));
}

double ball_volume_ratio(int n) { return std::exp(log_ball_volume(n + 1) - log_ball_volume(n)); }

double log_ball_point_count_bound(int n, double mu) {
  if (n < 1 || mu < 0) throw std::invalid_argument("ball_point_count_bound: need n >= 1, mu >= 0");
  return std::numbers::ln2 + 0.5 * n * std::log(mu + 0.25 * n) + log_ball_volume(n);
}

double ball_point_count_bound(int n, double mu) {
  return std::exp(log_ball_point_count_bound(n, mu));
}

}  // namespace latpack::numth
