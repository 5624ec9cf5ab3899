#include "dosc/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dosc/errors.hpp"

namespace dosc {

namespace {

constexpr double kPi = std::numbers::pi;

// Spherical Bessel y_n(u) = sqrt(pi/(2u)) J_{n+1/2}(u) by upward recurrence.
double spherical_j(int n, double u) {
  const double s = std::sin(u), c = std::cos(u);
  double y0 = s / u;
  if (n == 0) return y0;
  double y1 = s / (u * u) - c / u;
  for (int k = 1; k < n; ++k) {
    const double y2 = (2.0 * k + 1.0) / u * y1 - y0;
    y0 = y1;
    y1 = y2;
  }
  return y1;
}

void check_u(double u) {
  if (!(u >= 0.0)) throw DomainError("bessel: argument must be >= 0, got " + std::to_string(u));
}

}  // namespace

Order::Order(double alpha) : alpha_(alpha) {
  if (!(alpha >= -0.5) || !std::isfinite(alpha))
    throw ArgumentError("order alpha must be >= -1/2, got " + std::to_string(alpha));
}

double lanczos_gamma(double x) {
  static constexpr double g = 7.0;
  static constexpr double c[9] = {0.99999999999980993,  676.5203681218851,
                                  -1259.1392167224028,  771.32342877765313,
                                  -176.61502916214059,  12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6,
                                  1.5056327351493116e-7};
  if (x < 0.5) return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
  x -= 1.0;
  double a = c[0];
  const double t = x + g + 0.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

BesselEvaluator::BesselEvaluator(Order order) : order_(order), half_n_(-2) {
  const double alpha = order.alpha();
  const double m = alpha - 0.5;
  if (m == std::floor(m) && m <= 1000.0) half_n_ = static_cast<int>(m);
  if (alpha == std::floor(alpha) && alpha <= 40.0) {
    long double f = 1.0L;
    for (int k = 2; k <= static_cast<int>(alpha); ++k) f *= k;
    t0_ = 1.0L / (std::ldexp(1.0L, static_cast<int>(alpha)) * f);
  } else {
    t0_ = 1.0L / (std::pow(2.0L, static_cast<long double>(alpha)) *
                  static_cast<long double>(lanczos_gamma(alpha + 1.0)));
  }
  inv_kk_[0] = 0.0L;
  for (int k = 1; k < 64; ++k)
    inv_kk_[k] = 1.0L / (static_cast<long double>(k) * (k + static_cast<long double>(alpha)));
  const double c = (0.5 * alpha + 0.25) * kPi;
  cos_c_ = std::cos(c);
  sin_c_ = std::sin(c);
}

// J_alpha(u)/u^alpha by the ascending series, summed in extended precision.
double BesselEvaluator::series(double u) const {
  using ld = long double;
  const ld alpha = order_.alpha();
  const ld q = static_cast<ld>(u) * u / 4;
  ld term = t0_;
  ld sum = term;
  ld peak = std::fabs(term);
  for (int k = 1; k < 500; ++k) {
    term *= k < 64 ? -q * inv_kk_[k] : -q / (static_cast<ld>(k) * (k + alpha));
    sum += term;
    const ld a = std::fabs(term);
    if (a > peak) peak = a;
    if (k * k > q && (a <= 1e-19L * std::fabs(sum) || a <= 1e-23L * peak)) break;
  }
  return static_cast<double>(sum);
}

// Hankel's expansion, truncated at the smallest term.
double BesselEvaluator::asymptotic(double u) const {
  const double nu = order_.alpha();
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double last = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * u);
    const double a = std::fabs(next);
    if (a > last) break;
    term = next;
    last = a;
    // a_k(nu)/u^k enters P (even k) or Q (odd k) with sign (-1)^floor(k/2).
    const double sgn = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) p += sgn * term; else q += sgn * term;
    if (a < 1e-17 || term == 0.0) break;
  }
  const double su = std::sin(u), cu = std::cos(u);
  const double cs = cu * cos_c_ + su * sin_c_;
  const double sn = su * cos_c_ - cu * sin_c_;
  return std::sqrt(2.0 / (kPi * u)) * (p * cs - q * sn);
}

double BesselEvaluator::normalized(double u) const {
  check_u(u);
  const double alpha = order_.alpha();
  const int n = half_n_;
  if (n == -1) return std::sqrt(2.0 / kPi) * std::cos(u);
  if (n == 0) return u == 0.0 ? std::sqrt(2.0 / kPi) : std::sqrt(2.0 / kPi) * std::sin(u) / u;
  if (n > 0) {
    if (u >= 2.0 * n + 2.0)
      return std::sqrt(2.0 / kPi) * spherical_j(n, u) / std::pow(u, alpha - 0.5);
    return series(u);
  }
  if (u <= kBesselAsymptoticFrom) return series(u);
  return asymptotic(u) / std::pow(u, alpha);
}

double BesselEvaluator::j(double u) const {
  check_u(u);
  const double alpha = order_.alpha();
  if (u == 0.0) {
    if (alpha == 0.0) return 1.0;
    return alpha > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  const int n = half_n_;
  if (n == -1) return std::sqrt(2.0 / (kPi * u)) * std::cos(u);
  if (n == 0) return std::sqrt(2.0 / (kPi * u)) * std::sin(u);
  if (n > 0) {
    if (u >= 2.0 * n + 2.0) return std::sqrt(2.0 * u / kPi) * spherical_j(n, u);
    return series(u) * std::pow(u, alpha);
  }
  if (u <= kBesselAsymptoticFrom) return series(u) * std::pow(u, alpha);
  return asymptotic(u);
}

double BesselEvaluator::sqrt_kernel(double u) const {
  check_u(u);
  const double alpha = order_.alpha();
  if (half_n_ == -1) return std::sqrt(2.0 / kPi) * std::cos(u);
  if (half_n_ == 0) return std::sqrt(2.0 / kPi) * std::sin(u);
  if (u <= kBesselAsymptoticFrom) return normalized(u) * std::pow(u, alpha + 0.5);
  return std::sqrt(u) * j(u);
}

double bessel_j(Order order, double u) { return BesselEvaluator(order).j(u); }
double bessel_j_normalized(Order order, double u) { return BesselEvaluator(order).normalized(u); }
double bessel_j_sqrt(Order order, double u) { return BesselEvaluator(order).sqrt_kernel(u); }

}  // namespace dosc
