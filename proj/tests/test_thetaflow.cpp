#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "latpack/thetaflow.hpp"

using namespace latpack::thetaflow;

namespace {

constexpr double kPi = std::numbers::pi;

// Fixed-length sum, long enough for every argument used below.
double tau_ref(double x) {
  double s = 0;
  for (int k = 1000; k >= 1; --k) s += std::exp(-kPi * (k / x) * (k / x));
  return s;
}

}  // namespace

TEST_CASE("tau values") {
  CHECK(tau(1) == doctest::Approx(0.0432178).epsilon(1e-6));
  CHECK(tau(1) == doctest::Approx(std::exp(-kPi) + std::exp(-4 * kPi) + std::exp(-9 * kPi)).epsilon(1e-15));
  CHECK(tau(0.1) < 1e-100);
  CHECK(tau(0.01) == 0.0);
  CHECK(tau(10) > 4);
  CHECK(tau(10) < 5);
  CHECK_THROWS(tau(0));
}

TEST_CASE("tau truncation bound") {
  for (double x : {0.3, 1.0, 5.0, 20.0, 60.0}) {
    const auto t = tau_with_bound(x);
    const double ref = tau_ref(x);
    // recursive summation error (terms - 1) u sum on top of the tail
    const double rounding = (t.terms + 1) * std::numeric_limits<double>::epsilon() * ref;
    REQUIRE(std::fabs(ref - t.value) <= t.tail_bound + rounding);
    double tail = 0;
    for (int k = 1000; k > t.terms; --k) tail += std::exp(-kPi * (k / x) * (k / x));
    REQUIRE(tail <= t.tail_bound);
    REQUIRE(t.tail_bound <= 1e-14 * t.value);
  }
}

TEST_CASE("tau is increasing and bracketed") {
  double prev = 0;
  for (int i = 0; i < 200; ++i) {
    const double x = 0.2 * std::pow(250.0, i / 199.0);
    const double t = tau(x);
    REQUIRE(t > prev);
    REQUIRE(x / 2 - 1 < t);
    REQUIRE(t < x / 2);
    prev = t;
  }
}

TEST_CASE("tau derivative") {
  for (double x : {0.5, 1.0, 3.0, 12.0}) {
    const double h = 1e-5 * x;
    CHECK(tau_prime(x) == doctest::Approx((tau(x + h) - tau(x - h)) / (2 * h)).epsilon(1e-7));
  }
}

TEST_CASE("psi inverts tau") {
  CHECK(psi(tau(1)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::fabs(psi(tau(3.7)) - 3.7) < 1e-10);
  const double p = psi(0.5);
  CHECK(p > 1);
  CHECK(p < 3);
  for (int i = 0; i < 60; ++i) {
    const double x = 0.2 * std::pow(250.0, i / 59.0);
    REQUIRE(std::fabs(psi(tau(x)) - x) < 1e-10);
    const double t = 0.01 * std::pow(2000.0, i / 59.0);
    REQUIRE(std::fabs(tau(psi(t)) - t) < 1e-10 * std::max(1.0, t));
  }
}

TEST_CASE("Omega") {
  CHECK(omega(2) == doctest::Approx(3.99997210).epsilon(1e-9));
  const auto fp = fixpoint();
  CHECK(std::fabs(omega(fp.xi) - fp.xi) < 1e-9);
  const double w = omega(0.05);
  CHECK(w > 2);
  CHECK(w < 2.3);
  double prev = 0;
  for (int i = 0; i <= 200; ++i) {
    const double x = 2.01 + i * (50 - 2.01) / 200;
    const double v = omega(x);
    REQUIRE(v > 2);
    REQUIRE(v > prev);
    prev = v;
  }
  for (double x : {2.5, 10.0, 23.0, 40.0}) {
    const double h = 1e-4;
    CHECK(omega_prime(x) == doctest::Approx((omega(x + h) - omega(x - h)) / (2 * h)).epsilon(1e-6));
  }
}

TEST_CASE("fixed point") {
  const auto fp = fixpoint();
  CHECK(std::fabs(fp.xi - 23.13882534) < 1e-7);
  CHECK(fp.xi == doctest::Approx(1 / tau(1)));
  CHECK(fp.derivative == doctest::Approx(omega_prime(fp.xi)).epsilon(1e-9));
  double s0 = 0, s2 = 0;
  for (int k = 1; k <= 10; ++k) {
    s0 += std::exp(-kPi * k * k);
    s2 += k * k * std::exp(-kPi * k * k);
  }
  CHECK(fp.derivative == doctest::Approx(1 - s0 / (2 * kPi * s2)).epsilon(1e-12));
  CHECK(fp.derivative < 1);
}

TEST_CASE("per-dimension maps") {
  CHECK(f_step(1, 2) == doctest::Approx(2 * kPi / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(std::fabs(f_step(1, 2) - 3.62759873) < 1e-8);
  const auto tr = iterate_d(4);
  CHECK(std::fabs(f_step(3, tr.row(3).d) - 8.08369319) < 1e-6);
  for (int n : {1, 5, 50, 500}) {
    const double y = f_step(n, 10.0);
    REQUIRE(std::fabs(f_residual(n, 10.0, y)) < 1e-10);
  }
  CHECK_THROWS(f_step(0, 1.0));
}

TEST_CASE("perturbed iteration driver") {
  const auto s = iterate_perturbed([](int n, double x) { return x / 2 + 1.0 / n; }, 1.0, 400);
  CHECK(s.size() == 400);
  CHECK(std::fabs(s.back()) < 0.01);
  const auto c = iterate_perturbed([](int, double) { return 7.5; }, 1.0, 5);
  for (double v : c) CHECK(v == 7.5);
  CHECK_THROWS_WITH_AS(iterate_perturbed([](int, double x) { return 2 * x; }, 1.0, 10, std::pair{0.0, 100.0}),
                       "iterate_perturbed: iterate left the domain at step 7", std::domain_error);
  CHECK_THROWS_AS(iterate_perturbed([](int, double) { return NAN; }, 1.0, 3), std::domain_error);
}

TEST_CASE("error bound for a perturbed contraction") {
  // f_n(x) = x/2 + 1/n^2 converges to f(x) = x/2 with fixed point 0
  const int steps = 30;
  std::vector<double> sup;
  for (int k = 1; k <= steps; ++k) sup.push_back(1.0 / (k * k));
  const auto s = iterate_perturbed([](int n, double x) { return x / 2 + 1.0 / (n * n); }, 3.0, steps);
  const auto b = perturbed_error_bound(0.5, 3.0, sup);
  for (int i = 0; i < steps; ++i) REQUIRE(std::fabs(s[i]) <= b[i] + 1e-15);
}

TEST_CASE("Omega iterates stay inside the contraction bound near the fixed point") {
  const auto fp = fixpoint();
  const auto w = iterate_perturbed([](int, double x) { return omega(x); }, 2.0, 200);
  // w[m] = Omega^(m+1)(2); start where the orbit is within 1 of xi
  int m = 0;
  while (fp.xi - w[m] > 1) ++m;
  const double lambda = omega_lipschitz(w[m], fp.xi);
  REQUIRE(lambda < 1);
  const auto b = perturbed_error_bound(lambda, fp.xi - w[m], std::vector<double>(199 - m, 0.0));
  for (int i = 0; i < 199 - m; ++i) REQUIRE(std::fabs(w[m + 1 + i] - fp.xi) <= b[i] + 1e-12);
}

TEST_CASE("d_n table") {
  const auto tr = iterate_d(1024);
  CHECK(tr.rows.size() == 1024);
  CHECK(tr.row(1).d == 2.0);
  CHECK(tr.row(1).omega == 2.0);
  struct Row {
    int n;
    double d, w, s;
  };
  const Row rows[] = {{2, 3.62759873, 3.99997210, -0.7447467},     {8, 18.71971890, 14.38756801, 34.6572071},
                      {16, 30.69030131, 20.71395996, 159.6214617}, {128, 24.17810739, 23.13882533, 133.0281029},
                      {1024, 23.25703467, 23.13882534, 121.0463495}};
  for (const auto& r : rows) {
    CHECK(std::fabs(tr.row(r.n).d - r.d) < 1e-6);
    CHECK(std::fabs(tr.row(r.n).omega - r.w) < 1e-6);
    CHECK(std::fabs(tr.row(r.n).scaled_diff - r.s) < 5e-3);
  }
  for (int n = 2; n <= 1024; ++n) {
    REQUIRE(tr.row(n).d > 2);
    REQUIRE(tr.row(n).omega == doctest::Approx(omega(tr.row(n - 1).omega)).epsilon(1e-14));
  }
  CHECK(std::fabs(tr.row(1024).d - tr.xi) < 0.12);
  for (int n = 65; n <= 1024; ++n) REQUIRE(std::fabs(tr.row(n).d - tr.xi) < std::fabs(tr.row(n - 1).d - tr.xi));
  CHECK(tr.row(2).a >= 1);
  CHECK_THROWS(tr.row(1025));
  CHECK_THROWS(iterate_d(0));
}

TEST_CASE("asymptotic fit") {
  const auto tr = iterate_d(1024);
  const auto f = asymptotic_fit(tr);
  CHECK(std::fabs(f.c0 - tr.xi) < 1e-4);
  CHECK(f.c1 == doctest::Approx(119.58193).epsilon(0.01));
  CHECK(std::fabs(tr.row(1024).d - f(1024)) < 1e-5);
  CHECK_THROWS(asymptotic_fit(tr, {128, 128, 512, 1024}));
  CHECK_THROWS(asymptotic_fit(tr, {128, 256, 512}));
}
