#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latpack/numth.hpp"
#include "latpack/oracle.hpp"

using namespace latpack::numth;

namespace {

// Moebius from the prime factorization computed here.
int mobius_ref(std::uint64_t k) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  return k > 1 ? -sign : sign;
}

}  // namespace

TEST_CASE("mobius small values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(mobius(7) == -1);
  CHECK(mobius(6) == 1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("mobius divisor sums vanish") {
  for (std::uint64_t k = 1; k <= 10000; ++k) {
    int s = 0;
    for (std::uint64_t l = 1; l * l <= k; ++l) {
      if (k % l) continue;
      s += mobius(l);
      if (l * l != k) s += mobius(k / l);
    }
    REQUIRE(s == (k == 1 ? 1 : 0));
  }
}

TEST_CASE("mobius cache agrees with factorization") {
  const MobiusCache cache(5000);
  CHECK(cache.limit() == 5000);
  for (std::uint64_t k = 1; k <= 6000; ++k) REQUIRE(cache(k) == mobius_ref(k));
  CHECK_THROWS(MobiusCache(MobiusCache::kMaxLimit + 1));
}

TEST_CASE("mobius weight values") {
  CHECK(mobius_weight(1, 5) == doctest::Approx(1.0));
  CHECK(mobius_weight(2, 3) == doctest::Approx(0.75));
  CHECK(mobius_weight(6, 2) == doctest::Approx(1.0 / 3));
  CHECK_THROWS(mobius_weight(0, 3));
  CHECK_THROWS(mobius_weight(3, 1));
}

TEST_CASE("mobius weight divisor sum equals Euler product") {
  double worst = 0;
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t k = 1; k <= 3000; ++k) {
      const double a = mobius_weight(k, n), b = mobius_weight_product(k, n);
      worst = std::max(worst, std::fabs(a - b) / b);
      REQUIRE(a > 0);
      REQUIRE(a <= 1);
      if (k == 1) REQUIRE(a == 1);
    }
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("ball volumes") {
  CHECK(ball_volume(0) == doctest::Approx(1.0));
  CHECK(ball_volume(1) == doctest::Approx(2.0));
  CHECK(ball_volume(2) == doctest::Approx(std::numbers::pi));
  CHECK(ball_volume(3) == doctest::Approx(4 * std::numbers::pi / 3));
  for (int n = 2; n <= 200; ++n) {
    const double want = ball_volume(n - 2) * 2 * std::numbers::pi / n;
    REQUIRE(std::fabs(ball_volume(n) - want) <= 1e-13 * want);
  }
  // log space stays finite where V_n underflows
  CHECK(std::isfinite(log_ball_volume(2000)));
  CHECK(ball_volume_ratio(1024) == doctest::Approx(std::exp(log_ball_volume(1025) - log_ball_volume(1024))));
  CHECK(log_half_factorial(1) == doctest::Approx(std::log(std::sqrt(std::numbers::pi) / 2)));
}

TEST_CASE("ball point count bound") {
  CHECK(ball_point_count_bound(1, 1) == doctest::Approx(4 * std::sqrt(1.25)));
  CHECK(ball_point_count_bound(2, 2) == doctest::Approx(5 * std::numbers::pi));
  for (int n = 1; n <= 5; ++n) {
    for (int mu = 1; mu <= 50; ++mu) {
      REQUIRE(ball_point_count_bound(n, mu) >= static_cast<double>(latpack::oracle::ball_count(n, mu)));
    }
  }
  CHECK(log_ball_point_count_bound(3, 7) == doctest::Approx(std::log(ball_point_count_bound(3, 7))));
}
