#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>

#include "dosc/errors.hpp"
#include "dosc/special.hpp"

using namespace dosc;
using std::numbers::pi;

namespace {

// Ascending series in quad precision; trustworthy for u <= 10.
double oracle_series(double alpha, double u) {
  using q = __float128;
  const q uu = u;
  const q half = uu / 2;
  q term = 1;
  // (u/2)^alpha / Gamma(alpha+1)
  term = static_cast<q>(std::pow(static_cast<long double>(u) / 2, static_cast<long double>(alpha)) /
                        std::tgamma(static_cast<long double>(alpha) + 1));
  q sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -(half * half) / (static_cast<q>(k) * (k + static_cast<q>(alpha)));
    sum += term;
    if (k > 20 && (term < 0 ? -term : term) < static_cast<q>(1e-30)) break;
  }
  return static_cast<double>(sum);
}

double oracle(double alpha, double u) {
  if (u <= 10.0) return oracle_series(alpha, u);
  return static_cast<double>(boost::math::cyl_bessel_j(static_cast<long double>(alpha),
                                                       static_cast<long double>(u)));
}

const double kOrders[] = {-0.5, -0.25, 0.0, 0.3, 0.5, 1.0, 1.5, 2.0, 2.5, 3.7, 5.0};

}  // namespace

TEST_CASE("closed-form examples") {
  CHECK(bessel_j(Order(0.5), pi / 2) == doctest::Approx(2.0 / pi).epsilon(1e-15));
  CHECK(bessel_j(Order(-0.5), pi) == doctest::Approx(-std::sqrt(2.0) / pi).epsilon(1e-15));
  CHECK(std::abs(bessel_j(Order(1.0), 2.5) - oracle(1.0, 2.5)) <= 1e-10);
  CHECK(bessel_j_normalized(Order(-0.5), 0.0) == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-15));
  CHECK(bessel_j_normalized(Order(0.0), 0.0) == 1.0);
  for (double x : {0.1, 1.0, 7.3, 40.0})
    CHECK(bessel_j_normalized(Order(0.5), x) ==
          doctest::Approx(std::sqrt(2.0 / pi) * std::sin(x) / x).epsilon(1e-14));
}

TEST_CASE("absolute accuracy up to u = 10") {
  for (double a : kOrders) {
    for (int i = 1; i <= 400; ++i) {
      const double u = 10.0 * i / 400.0;
      const double err = std::abs(bessel_j(Order(a), u) - oracle(a, u));
      INFO("alpha=" << a << " u=" << u);
      CHECK(err <= 1e-12);
    }
  }
}

TEST_CASE("relative accuracy beyond u = 10") {
  // Relative to the envelope sqrt(2/(pi u)); pointwise relative error is
  // unbounded at zeros for every method.
  for (double a : kOrders) {
    for (int i = 1; i <= 500; ++i) {
      const double u = 10.0 + 0.37 * i;
      const double env = std::sqrt(2.0 / (pi * u));
      const double err = std::abs(bessel_j(Order(a), u) - oracle(a, u)) / env;
      INFO("alpha=" << a << " u=" << u);
      CHECK(err <= 1e-10);
    }
  }
}

TEST_CASE("normalized kernel consistent with J") {
  for (double a : {-0.5, 0.0, 0.5, 1.0, 1.5, 2.0}) {
    for (double u : {1e-6, 0.01, 0.7, 3.0, 9.99, 10.01, 14.9, 15.1, 33.0, 120.0}) {
      const double j = bessel_j(Order(a), u);
      const double jn = bessel_j_normalized(Order(a), u) * std::pow(u, a);
      CHECK(std::abs(jn - j) <= 1e-10 * (1.0 + std::abs(j)));
    }
  }
}

TEST_CASE("continuity at 0") {
  for (double a : {-0.5, -0.2, 0.0, 0.5, 1.0, 2.3}) {
    CHECK(std::abs(bessel_j_normalized(Order(a), 1e-8) - bessel_j_normalized(Order(a), 0.0)) <= 1e-7);
  }
  CHECK(bessel_j_normalized(Order(1.0), 0.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("three-term recurrence across independently computed orders") {
  for (double a : {0.5, 0.75, 1.0, 1.5, 2.0, 3.3}) {
    for (int i = 0; i <= 500; ++i) {
      const double u = 0.1 + (50.0 - 0.1) * i / 500.0;
      const double lhs = bessel_j(Order(a - 1), u) + bessel_j(Order(a + 1), u);
      const double rhs = 2.0 * a / u * bessel_j(Order(a), u);
      const double scale = std::abs(bessel_j(Order(a - 1), u)) + std::abs(bessel_j(Order(a + 1), u)) +
                           std::abs(rhs) + 1e-300;
      CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("series and asymptotic regimes agree near the split") {
  for (double a : {0.0, 0.3, 1.0, 2.0, 4.0}) {
    for (double u : {14.0, 14.99, 15.0, 15.01, 16.0, 18.0}) {
      const double env = std::sqrt(2.0 / (pi * u));
      CHECK(std::abs(bessel_j(Order(a), u) - oracle(a, u)) <= 1e-11 * env);
    }
  }
}

TEST_CASE("modified kernel") {
  for (double a : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
    for (double u : {1e-4, 0.5, 5.0, 15.5, 80.0}) {
      CHECK(std::abs(bessel_j_sqrt(Order(a), u) - std::sqrt(u) * oracle(a, u)) <= 1e-11 * (1 + std::sqrt(u)));
    }
  }
}

TEST_CASE("gamma") {
  for (double x = 0.5; x < 20.0; x += 0.173) {
    CHECK(std::abs(lanczos_gamma(x) / std::tgamma(x) - 1.0) <= 1e-13);
  }
  CHECK(lanczos_gamma(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Order(-0.6), ArgumentError);
  CHECK_THROWS_AS(bessel_j(Order(0.0), -1.0), DomainError);
  CHECK_THROWS_AS(bessel_j_normalized(Order(1.0), -1e-3), DomainError);
  CHECK(Order(0.5).shifted(1.0).alpha() == 1.5);
}
