#include <doctest.h>

#include <cmath>
#include <numbers>

#include "latpack/bounds.hpp"
#include "latpack/numth.hpp"

using namespace latpack;
using bounds::Kind;

namespace {

const double kSqrt3 = std::sqrt(3.0);
const double kPi = std::numbers::pi;

// Known center densities in dimensions 1..8.
double known_delta(int n) {
  const double d[] = {0, 0.5, 1 / (2 * kSqrt3), 1 / (4 * std::sqrt(2.0)), 1.0 / 8, 1 / (8 * std::sqrt(2.0)),
                      1 / (8 * kSqrt3), 1.0 / 16, 1.0 / 16};
  return d[n];
}

double known_gamma(int n) { return 4 * std::pow(known_delta(n), 2.0 / n); }

}  // namespace

TEST_CASE("F examples") {
  CHECK(bounds::eval_F(2, 1, 1) == doctest::Approx(0.0));
  CHECK(bounds::eval_F(2, 4, 1) == doctest::Approx(kSqrt3));
  CHECK(bounds::eval_F(2, 1, 2 / kSqrt3) == doctest::Approx(0.5));
  CHECK(bounds::eval_F(5, 2, 0.5) == 0.0);
  CHECK_THROWS(bounds::eval_F(1, 1, 1));
  CHECK_THROWS(bounds::eval_F(3, -1, 1));
}

TEST_CASE("F agrees with the literal double sum") {
  for (int n = 2; n <= 12; ++n) {
    for (double x : {0.3, 1.0, 2.5, 7.0}) {
      for (double y : {0.5, 1.7, 4.0, 13.0, 60.0, 400.0}) {
        const double a = bounds::eval_F(n, x, y), b = bounds::eval_F_direct(n, x, y);
        REQUIRE(a == doctest::Approx(b).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("F long sums use the closed form accurately") {
  // n = 9 forces the closed form for inner sums longer than a few thousand terms
  for (double y : {1e4, 3e4}) {
    CHECK(bounds::eval_F(9, 1.0, y) == doctest::Approx(bounds::eval_F_direct(9, 1.0, y)).epsilon(1e-11));
  }
}

TEST_CASE("F is monotone in y") {
  for (int n : {2, 3, 6}) {
    const double x = 1.3;
    double prev = -1;
    for (int i = 0; i <= 400; ++i) {
      const double y = 0.5 + i * 0.05;
      const double f = bounds::eval_F(n, x, y);
      REQUIRE(f >= prev);
      if (y > 1 / std::sqrt(x) + 0.01 && prev >= 0) REQUIRE(f > prev);
      if (y <= 1 / std::sqrt(x)) REQUIRE(f == 0.0);
      prev = f;
    }
  }
}

TEST_CASE("Y examples and defining equation") {
  CHECK(bounds::eval_Y(2, 1) == doctest::Approx(2 / kSqrt3).epsilon(1e-12));
  CHECK(bounds::eval_F(2, 4, bounds::eval_Y(2, 4)) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(bounds::level(2) == doctest::Approx(0.5));
  CHECK(bounds::level(4) == doctest::Approx(3 / (4 * kPi)));
  for (int n = 2; n <= 30; ++n) {
    for (int i = 0; i < 9; ++i) {
      const double x = 0.5 * std::pow(16.0, i / 8.0);
      const double y = bounds::eval_Y(n, x);
      REQUIRE(std::fabs(bounds::eval_F(n, x, y) - bounds::level(n)) < 1e-9);
    }
  }
}

TEST_CASE("Y weakly decreases in x") {
  for (int n : {2, 3, 5, 9}) {
    double prev = INFINITY;
    for (int i = 0; i < 40; ++i) {
      const double y = bounds::eval_Y(n, 0.2 + 0.25 * i);
      REQUIRE(y <= prev * (1 + 1e-12));
      prev = y;
    }
  }
}

TEST_CASE("C envelope") {
  CHECK(bounds::eval_C(2, 1) == doctest::Approx(2 / kSqrt3).epsilon(1e-9));
  const double v3 = bounds::eval_C(3, 2 / kSqrt3);
  CHECK(std::pow(v3, 1.5) / 8 == doctest::Approx(0.1695).epsilon(5e-4 / 0.1695));
  const double v9 = bounds::eval_C(9, 2);
  CHECK(std::pow(v9, 4.5) / 512 == doctest::Approx(0.0388).epsilon(5e-4 / 0.0388));

  for (int n : {2, 4, 7}) {
    double prev = 0;
    for (int i = 0; i < 12; ++i) {
      const double x = 1.0 + 0.3 * i;  // Hermite-constant range
      const auto e = bounds::envelope(n, x);
      const double edge = x * std::pow(bounds::eval_Y(n, x), 2.0 / n);
      REQUIRE(e.right_edge == doctest::Approx(edge).epsilon(1e-14));
      REQUIRE(e.value >= edge - 1e-12);
      REQUIRE(e.value >= prev - 1e-12);
      prev = e.value;
    }
  }
}

TEST_CASE("envelope parallel equals serial") {
  for (int n : {3, 9, 25}) {
    const auto a = bounds::envelope(n, 2.0, bounds::Exec::serial);
    const auto b = bounds::envelope(n, 2.0, bounds::Exec::parallel);
    CHECK(a.value == b.value);
    CHECK(a.argmax == b.argmax);
  }
}

TEST_CASE("lower bound never exceeds the upper bound") {
  for (int n = 3; n <= 9; ++n) {
    const double g = known_gamma(n - 1);
    REQUIRE(bounds::eval_C(n, g) <= bounds::mordell_upper(n, g));
  }
  CHECK(bounds::eval_C(3, 2 / kSqrt3) <= std::cbrt(2.0));
}

TEST_CASE("Mordell bound") {
  CHECK(bounds::mordell_upper(3, 2 / kSqrt3) == doctest::Approx(4.0 / 3));
  CHECK(bounds::mordell_upper(4, std::cbrt(2.0)) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS(bounds::mordell_upper(2, 1.0));
  CHECK(bounds::trivial_lower(0.5) == 0.25);
}

TEST_CASE("conversions") {
  CHECK(bounds::convert(Kind::center_density, Kind::hermite, 0.5, 1) == doctest::Approx(1.0));
  CHECK(bounds::convert(Kind::center_density, Kind::density, 1 / (2 * kSqrt3), 2) ==
        doctest::Approx(kPi / (2 * kSqrt3)));
  for (int n = 1; n <= 30; ++n) {
    const double g = 1.7;
    const double back = bounds::convert(Kind::center_density, Kind::hermite,
                                        bounds::convert(Kind::hermite, Kind::center_density, g, n), n);
    REQUIRE(std::fabs(back - g) <= 1e-13 * g);
    const double d = 0.1;
    const double back2 = bounds::convert(Kind::density, Kind::center_density,
                                         bounds::convert(Kind::center_density, Kind::density, d, n), n);
    REQUIRE(std::fabs(back2 - d) <= 1e-13 * d);
  }
  CHECK(bounds::parse_kind("hermite") == Kind::hermite);
  CHECK(bounds::kind_name(Kind::density) == "density");
  CHECK_THROWS(bounds::parse_kind("volume"));
}

TEST_CASE("consecutive-dimension inequality") {
  CHECK(std::fabs(bounds::check_theorem1({2, 0.5, 1 / (2 * kSqrt3), Kind::center_density})) < 1e-12);
  // written out: 2^(n-1) d' V_{n-1} sum w(k) (1 - (k d'/2d)^2)^((n-1)/2), n = 3
  const double dp = known_delta(2), dc = known_delta(3);
  double sum = 0;
  for (int k = 1; k <= std::floor(2 * dc / dp); ++k) sum += numth::mobius_weight(k, 3) * (1 - std::pow(k * dp / (2 * dc), 2));
  const double lhs = 4 * dp * kPi * sum;
  CHECK(bounds::theorem1_center_lhs(3, dp, dc) == doctest::Approx(lhs));
  for (int n = 2; n <= 8; ++n) {
    double r[3];
    int i = 0;
    for (Kind k : {Kind::density, Kind::center_density, Kind::hermite}) {
      r[i++] = bounds::check_theorem1({n, known_delta(n - 1), known_delta(n), k});
    }
    REQUIRE(r[1] >= -1e-12);
    REQUIRE(std::fabs(r[0] - r[1]) < 1e-10);
    REQUIRE(std::fabs(r[2] - r[1]) < 1e-10);
  }
  CHECK_THROWS(bounds::check_theorem1({3, 0, 0.1, Kind::center_density}));
}

TEST_CASE("elementary majoration chain") {
  const auto c2 = bounds::marin_chain(2, 0.5, 1 / (2 * kSqrt3));
  CHECK(c2.monotone());
  CHECK(c2.rhs == doctest::Approx(2 * kPi / (2 * kSqrt3)));
  for (int n = 2; n <= 8; ++n) {
    const auto c = bounds::marin_chain(n, known_delta(n - 1), known_delta(n));
    REQUIRE(c.monotone());
    REQUIRE(c.lhs >= 1 - 1e-12);
    REQUIRE(c.rhs >= 1);
  }
}
