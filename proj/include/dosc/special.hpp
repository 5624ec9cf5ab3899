#pragma once

#include <array>

namespace dosc {

// Order of a Bessel kernel, alpha >= -1/2.
class Order {
 public:
  explicit Order(double alpha);
  double alpha() const { return alpha_; }
  Order shifted(double d) const { return Order(alpha_ + d); }
  bool operator==(const Order&) const = default;

 private:
  double alpha_;
};

// Gamma function, Lanczos approximation (g = 7, 9 terms).
double lanczos_gamma(double x);

// J_alpha(u) for u >= 0.
double bessel_j(Order order, double u);

// J_alpha(u) / u^alpha, extended at 0 by 1 / (2^alpha Gamma(alpha+1)).
double bessel_j_normalized(Order order, double u);

// u^(1/2) J_alpha(u), the kernel of the modified Hankel transform.
double bessel_j_sqrt(Order order, double u);

// Per-order evaluator; precomputes the constants the hot kernels reuse.
class BesselEvaluator {
 public:
  explicit BesselEvaluator(Order order);
  Order order() const { return order_; }
  double j(double u) const;
  double normalized(double u) const;
  double sqrt_kernel(double u) const;

 private:
  double series(double u) const;
  double asymptotic(double u) const;

  Order order_;
  int half_n_;  // n when alpha = n + 1/2, otherwise -2
  long double t0_;
  std::array<long double, 64> inv_kk_;  // 1/(k(k+alpha))
  double cos_c_, sin_c_;
};

// Split point between the ascending series and the Hankel expansion.
inline constexpr double kBesselAsymptoticFrom = 15.0;

}  // namespace dosc
