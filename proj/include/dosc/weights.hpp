#pragma once

#include <string>

#include "dosc/sampled_fn.hpp"
#include "dosc/special.hpp"

namespace dosc {

struct NormSpec {
  double p;
  double beta;
  Order alpha;
  NormSpec(double p, double beta, Order alpha);
};

// Even weights |x|^a (1+|x|)^{b-a}; power(beta) is the case a = b = beta.
class Weight {
 public:
  enum class Kind { power, w_ab };
  static Weight power(double beta);
  static Weight w_ab(double a, double b);

  Kind kind() const { return kind_; }
  double a() const { return a_; }  // behaviour at 0
  double b() const { return b_; }  // behaviour at infinity
  double operator()(double x) const;
  // w(x) |x|^c, again of the same kind.
  Weight reweighted(double c) const;
  std::string describe() const;

 private:
  Weight(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_, b_;
};

// (int |f|^p w(x) |x|^{beta+2 alpha+1} dx)^{1/p} by the grid quadrature.
// DomainError when the power at 0 is not integrable.
double weighted_lp_norm(const SampledFn& f, const NormSpec& spec, const Weight& w = Weight::power(0.0));

struct ApResult {
  bool is_member;
  double sup_estimate;  // +inf when an average diverges
};

// Sup of the A_p product over intervals with centers 0, +-2^k and lengths
// 2^m, k, m in [-range, range]. Member when the sup is finite and moves by at
// most 5% both when the range doubles and when the quadrature doubles.
ApResult ap_check(const Weight& w, double p, int range = 10);

// w |x|^{2 alpha+1-p(alpha+1/2)} in A_p. Power weights use the closed criterion.
bool ap_alpha_check(const Weight& w, double p, Order alpha);
// Numeric check for any weight.
ApResult ap_alpha_check_numeric(const Weight& w, double p, Order alpha, int range = 10);

// The A_p condition with averages taken against |x|^{2 alpha+1} dx.
// Experimental: no acceptance weight.
ApResult ap_measure_check(const Weight& w, double p, Order alpha, int range = 10);

// -1 < beta + (alpha+1/2)(2-p) < p/2 - 1, plus beta = 0 at p = 2. ArgumentError for p < 2.
bool range_full_oscillation(double p, double beta, Order alpha);
// -1 < beta + (alpha+1/2)(2-p) < p - 1.
bool range_dyadic_oscillation(double p, double beta, Order alpha);
// -1 - p min(alpha+1/2, gamma+1/2) < beta < -1 + p min(alpha+3/2, gamma+3/2).
bool transplant_range(double p, double beta, Order alpha, Order gamma);
// beta - (alpha+1/2)(2-p).
double beta_star(double beta, Order alpha, double p);

}  // namespace dosc
