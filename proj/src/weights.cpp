#include "dosc/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dosc/errors.hpp"
#include "dosc/grid.hpp"
#include "dosc/parallel.hpp"

namespace dosc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

NormSpec::NormSpec(double p_, double beta_, Order alpha_) : p(p_), beta(beta_), alpha(alpha_) {
  if (!(p > 1.0) || !std::isfinite(p)) throw ArgumentError("norm spec: p must be > 1");
  if (!std::isfinite(beta)) throw ArgumentError("norm spec: beta must be finite");
}

Weight Weight::power(double beta) { return Weight(Kind::power, beta, beta); }
Weight Weight::w_ab(double a, double b) { return Weight(Kind::w_ab, a, b); }

double Weight::operator()(double x) const {
  const double t = std::abs(x);
  if (kind_ == Kind::power) return std::pow(t, a_);
  return std::pow(t, a_) * std::pow(1.0 + t, b_ - a_);
}

Weight Weight::reweighted(double c) const { return Weight(kind_, a_ + c, b_ + c); }

std::string Weight::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::power) os << "power(" << a_ << ")";
  else os << "w_ab(" << a_ << "," << b_ << ")";
  return os.str();
}

double weighted_lp_norm(const SampledFn& f, const NormSpec& spec, const Weight& w) {
  const double e0 = spec.beta + 2.0 * spec.alpha.alpha() + 1.0;
  if (!(e0 + w.a() > -1.0)) {
    std::ostringstream msg;
    msg << "weighted_lp_norm: |x|^" << e0 + w.a() << " is not integrable at 0";
    throw DomainError(msg.str());
  }
  const auto& x = f.grid().points();
  const auto& q = f.grid().weights();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(f[i]);
    if (a == 0.0) continue;
    const double ax = std::abs(x[i]);
    s += q[i] * std::pow(a, spec.p) * w(x[i]) * (e0 == 0.0 ? 1.0 : std::pow(ax, e0));
  }
  return std::pow(s, 1.0 / spec.p);
}

namespace {

// int_lo^hi x^e (1+x)^f dx for 0 <= lo < hi. Geometric panels (ratio 1/2)
// from hi toward lo; when lo = 0 the remaining tail is extrapolated from the
// ratio of the last two panel integrals, +inf if they do not decrease.
struct PowerIntegrator {
  int levels;  // geometric levels toward 0
  int nodes;   // Gauss-Legendre nodes per panel
  const std::vector<double>* gx;
  const std::vector<double>* gw;

  PowerIntegrator(int lv, int nd) : levels(lv), nodes(nd) {
    static thread_local std::pair<std::vector<double>, std::vector<double>> cache[2];
    auto& c = cache[nd == 16 ? 0 : 1];
    if (c.first.size() != static_cast<std::size_t>(nd)) c = gauss_legendre(nd);
    gx = &c.first;
    gw = &c.second;
  }

  double panel(double e, double f, double a, double b) const {
    const double h = 0.5 * (b - a), m = 0.5 * (b + a);
    double s = 0.0;
    for (int i = 0; i < nodes; ++i) {
      const double x = m + h * (*gx)[i];
      s += (*gw)[i] * std::pow(x, e) * std::pow(1.0 + x, f);
    }
    return s * h;
  }

  double operator()(double e, double f, double lo, double hi) const {
    double total = 0.0;
    double b = hi;
    double prev = 0.0, last = 0.0;
    for (int k = 0; k < levels; ++k) {
      const double a = std::max(lo, 0.5 * b);
      // split long panels so each has ratio >= 1/2
      const double v = panel(e, f, a, b);
      total += v;
      prev = last;
      last = v;
      if (a <= lo) return total;
      b = a;
      if (lo > 0.0 && b < 2.0 * lo) {
        total += panel(e, f, lo, b);
        return total;
      }
    }
    if (lo > 0.0) return total + panel(e, f, lo, b);
    if (!(last > 0.0)) return total;
    const double rho = last / prev;
    if (!(rho < 1.0 - 1e-9)) return kInf;
    return total + last * rho / (1.0 - rho);
  }
};

// int over [lo, hi] of |x|^e (1+|x|)^f.
double even_integral(const PowerIntegrator& I, double e, double f, double lo, double hi) {
  if (lo >= 0.0) return I(e, f, lo, hi);
  if (hi <= 0.0) return I(e, f, -hi, -lo);
  return I(e, f, 0.0, -lo) + I(e, f, 0.0, hi);
}

// sup over intervals of (avg_mu w)(avg_mu w^{-1/(p-1)})^{p-1}, d mu = |x|^m dx.
double ap_sup(const Weight& w, double p, double m, int range, int levels, int nodes) {
  std::vector<std::pair<double, double>> intervals;
  std::vector<double> centers{0.0};
  for (int k = -range; k <= range; ++k) centers.push_back(std::ldexp(1.0, k));
  for (double c : centers)
    for (int j = -range; j <= range; ++j) {
      const double len = std::ldexp(1.0, j);
      intervals.emplace_back(c - 0.5 * len, c + 0.5 * len);
    }
  const double s = -1.0 / (p - 1.0);
  const double fa = w.b() - w.a();
  std::vector<double> vals(intervals.size());
  const long n = static_cast<long>(intervals.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(num_threads())
  for (long i = 0; i < n; ++i) {
    const PowerIntegrator I(levels, nodes);
    const auto [lo, hi] = intervals[i];
    const double mu = m == 0.0 ? hi - lo : even_integral(I, m, 0.0, lo, hi);
    const double a1 = even_integral(I, w.a() + m, fa, lo, hi) / mu;
    const double a2 = even_integral(I, s * w.a() + m, s * fa, lo, hi) / mu;
    vals[i] = (std::isinf(a1) || std::isinf(a2)) ? kInf : a1 * std::pow(a2, p - 1.0);
  }
  double best = 0.0;
  for (double v : vals) best = std::max(best, v);
  return best;
}

ApResult ap_generic(const Weight& w, double p, double m, int range) {
  if (!(p > 1.0)) throw ArgumentError("ap_check: p must be > 1");
  if (range < 1) throw ArgumentError("ap_check: range must be >= 1");
  const double base = ap_sup(w, p, m, range, 60, 16);
  if (std::isinf(base)) return {false, kInf};
  const double wide = ap_sup(w, p, m, 2 * range, 60, 16);
  const double fine = ap_sup(w, p, m, range, 120, 32);
  const bool stable = std::isfinite(wide) && std::isfinite(fine) && wide <= 1.05 * base &&
                      std::abs(fine - base) <= 0.05 * base;
  return {stable, std::max(base, wide)};
}

}  // namespace

ApResult ap_check(const Weight& w, double p, int range) { return ap_generic(w, p, 0.0, range); }

ApResult ap_alpha_check_numeric(const Weight& w, double p, Order alpha, int range) {
  const double a = alpha.alpha();
  return ap_check(w.reweighted(2.0 * a + 1.0 - p * (a + 0.5)), p, range);
}

bool ap_alpha_check(const Weight& w, double p, Order alpha) {
  if (!(p > 1.0)) throw ArgumentError("ap_alpha_check: p must be > 1");
  if (w.kind() == Weight::Kind::power) {
    const double e = w.a() + (alpha.alpha() + 0.5) * (2.0 - p);
    return -1.0 < e && e < p - 1.0;
  }
  return ap_alpha_check_numeric(w, p, alpha).is_member;
}

ApResult ap_measure_check(const Weight& w, double p, Order alpha, int range) {
  return ap_generic(w, p, 2.0 * alpha.alpha() + 1.0, range);
}

bool range_full_oscillation(double p, double beta, Order alpha) {
  if (!(p >= 2.0)) throw ArgumentError("range_full_oscillation: p must be >= 2");
  if (p == 2.0 && beta == 0.0) return true;
  const double e = beta + (alpha.alpha() + 0.5) * (2.0 - p);
  return -1.0 < e && e < p / 2.0 - 1.0;
}

bool range_dyadic_oscillation(double p, double beta, Order alpha) {
  if (!(p > 1.0)) throw ArgumentError("range_dyadic_oscillation: p must be > 1");
  const double e = beta + (alpha.alpha() + 0.5) * (2.0 - p);
  return -1.0 < e && e < p - 1.0;
}

bool transplant_range(double p, double beta, Order alpha, Order gamma) {
  if (!(p > 1.0)) throw ArgumentError("transplant_range: p must be > 1");
  const double lo = -1.0 - p * std::min(alpha.alpha() + 0.5, gamma.alpha() + 0.5);
  const double hi = -1.0 + p * std::min(alpha.alpha() + 1.5, gamma.alpha() + 1.5);
  return lo < beta && beta < hi;
}

double beta_star(double beta, Order alpha, double p) { return beta - (alpha.alpha() + 0.5) * (2.0 - p); }

}  // namespace dosc
