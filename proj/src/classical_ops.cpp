#include "dosc/classical_ops.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_expint.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dosc/errors.hpp"
#include "dosc/parallel.hpp"

namespace dosc {

SupGrid::SupGrid(std::vector<double> r, std::vector<double> fr) : radii(std::move(r)), frequencies(std::move(fr)) {
  if (radii.empty()) throw ArgumentError("sup grid: radii must be nonempty");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw ArgumentError("sup grid: radii must be positive");
    if (i > 0 && !(radii[i] < radii[i - 1])) throw ArgumentError("sup grid: radii must strictly decrease");
  }
  if (frequencies.empty()) throw ArgumentError("sup grid: frequencies must be nonempty");
  std::vector<double> s(frequencies), m;
  for (double v : frequencies) m.push_back(-v);
  std::sort(s.begin(), s.end());
  std::sort(m.begin(), m.end());
  if (s != m) throw ArgumentError("sup grid: frequencies must be symmetric about 0");
}

SupGrid SupGrid::dyadic(double scale, std::vector<double> frequencies) {
  if (!(scale > 0.0)) throw ArgumentError("sup grid: scale must be positive");
  std::vector<double> r;
  for (int k = 8; k >= -8; --k) r.push_back(std::ldexp(scale, k));
  return SupGrid(std::move(r), std::move(frequencies));
}

std::vector<double> SupGrid::frequencies_from(const ThresholdSeq& t) {
  std::vector<double> f{0.0};
  for (double v : t.values()) {
    f.push_back(v);
    f.push_back(-v);
  }
  return f;
}

double support_scale(const Grid& g) { return 0.5 * (g.hi() - g.lo()); }

namespace {

// Piecewise-linear interpolant of complex samples.
struct Interp {
  std::vector<double> z;
  std::vector<cplx> g;
};

Interp make_interp(const SampledFn& f, bool absolute) {
  Interp it;
  const auto& x = f.grid().points();
  const double lo = f.domain() == Domain::half_line ? std::max(0.0, f.grid().lo()) : f.grid().lo();
  auto val = [&](std::size_t i) { return absolute ? cplx(std::abs(f[i])) : f[i]; };
  if (x.front() > lo) {
    it.z.push_back(lo);
    it.g.push_back(val(0));
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    it.z.push_back(x[i]);
    it.g.push_back(val(i));
  }
  if (x.back() < f.grid().hi()) {
    it.z.push_back(f.grid().hi());
    it.g.push_back(val(x.size() - 1));
  }
  return it;
}

// Cumulative integral of a real interpolant at arbitrary points.
struct Cumulative {
  const Interp& it;
  std::vector<double> c;  // integral from z_0 to z_k
  explicit Cumulative(const Interp& i) : it(i), c(i.z.size(), 0.0) {
    for (std::size_t k = 1; k < it.z.size(); ++k)
      c[k] = c[k - 1] + 0.5 * (it.g[k - 1].real() + it.g[k].real()) * (it.z[k] - it.z[k - 1]);
  }
  double at(double p) const {
    const auto& z = it.z;
    if (p <= z.front()) return 0.0;
    if (p >= z.back()) return c.back();
    const std::size_t k = std::upper_bound(z.begin(), z.end(), p) - z.begin() - 1;
    const double d = p - z[k];
    const double s = (it.g[k + 1].real() - it.g[k].real()) / (z[k + 1] - z[k]);
    return c[k] + it.g[k].real() * d + 0.5 * s * d * d;
  }
};

double hl_at(const Cumulative& cum, const SupGrid& sup, double x) {
  double best = 0.0;
  for (double r : sup.radii) best = std::max(best, (cum.at(x + r) - cum.at(x - r)) / (2.0 * r));
  return best;
}

// Integral over [a, b] (0 < a < b) of the real interpolant divided by y.
double hardy_at(const Interp& it, double x) {
  const double a0 = std::abs(x);
  const auto& z = it.z;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    const double a = std::max({z[k], a0, 0.0});
    const double b = z[k + 1];
    if (!(b > a) || a <= 0.0) continue;
    const double s = (it.g[k + 1].real() - it.g[k].real()) / (z[k + 1] - z[k]);
    const double A = it.g[k].real() - s * z[k];
    total += A * std::log(b / a) + s * (b - a);
  }
  return total;
}

// Primitive of e^{i xi u}/u and of e^{i xi u}.
struct Kernel {
  double xi;
  cplx phi(double u) const {
    if (xi == 0.0) return std::log(std::abs(u));
    return cplx(gsl_sf_Ci(std::abs(xi * u)), gsl_sf_Si(xi * u));
  }
  cplx psi(double u) const {
    if (xi == 0.0) return u;
    return cplx(std::sin(xi * u), -std::cos(xi * u)) / xi;
  }
};

// sup over eps of |int_{|u| > eps} e^{i xi u} g(x-u)/u du| for each interpolant,
// with the kernel primitives at the knots shared between interpolants.
void modulated_sup(std::span<const Interp> its, const SupGrid& sup, double x, std::span<const cplx> phi_eps_pos,
                   std::span<const cplx> phi_eps_neg, std::span<const cplx> psi_eps_pos,
                   std::span<const cplx> psi_eps_neg, const Kernel& kern, std::vector<cplx>& phi_k,
                   std::vector<cplx>& psi_k, std::span<double> best) {
  const auto& z = its[0].z;
  const std::size_t m = z.size();
  phi_k.resize(m);
  psi_k.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = x - z[k];
    if (u == 0.0) continue;
    phi_k[k] = kern.phi(u);
    psi_k[k] = kern.psi(u);
  }
  // segments fully left of x: z_{k+1} < x; fully right: z_k > x
  const std::size_t n_seg = m - 1;
  std::vector<cplx> pre(n_seg + 1), suf(n_seg + 2);
  for (std::size_t fi = 0; fi < its.size(); ++fi) {
    const auto& g = its[fi].g;
    auto seg = [&](std::size_t k, double ua, double ub, const cplx& pa, const cplx& pb, const cplx& qa,
                   const cplx& qb) {
      // integral over u in [ub, ua] of e^{i xi u}(B - s u)/u
      const cplx s = (g[k + 1] - g[k]) / (z[k + 1] - z[k]);
      const cplx B = g[k] + s * (x - z[k]);
      (void)ua;
      (void)ub;
      return B * (pa - pb) - s * (qa - qb);
    };
    pre[0] = 0.0;
    for (std::size_t k = 0; k < n_seg; ++k)
      pre[k + 1] = z[k + 1] < x ? pre[k] + seg(k, x - z[k], x - z[k + 1], phi_k[k], phi_k[k + 1], psi_k[k],
                                               psi_k[k + 1])
                                : pre[k];
    suf[n_seg] = 0.0;
    for (std::size_t k = n_seg; k-- > 0;)
      suf[k] = z[k] > x ? suf[k + 1] + seg(k, x - z[k], x - z[k + 1], phi_k[k], phi_k[k + 1], psi_k[k],
                                           psi_k[k + 1])
                        : suf[k + 1];
    double b = best[fi];
    for (std::size_t e = 0; e < sup.radii.size(); ++e) {
      const double eps = sup.radii[e];
      cplx total = 0.0;
      const double zl = x - eps, zr = x + eps;
      if (zl > z.front()) {
        // segment containing zl
        const std::size_t kl = std::min<std::size_t>(
            std::upper_bound(z.begin(), z.end(), zl) - z.begin() - 1, n_seg - 1);
        total += pre[kl];
        if (zl > z[kl]) total += seg(kl, x - z[kl], eps, phi_k[kl], phi_eps_pos[e], psi_k[kl], psi_eps_pos[e]);
      }
      if (zr < z.back()) {
        const std::size_t kr = std::upper_bound(z.begin(), z.end(), zr) - z.begin() - 1;
        total += suf[kr + 1];
        if (zr < z[kr + 1])
          total += seg(kr, -eps, x - z[kr + 1], phi_eps_neg[e], phi_k[kr + 1], psi_eps_neg[e], psi_k[kr + 1]);
      }
      b = std::max(b, std::abs(total));
    }
    best[fi] = b;
  }
}

void check_frequencies(const Grid& g, const SupGrid& sup) {
  double m = 0.0;
  for (double v : sup.frequencies) m = std::max(m, std::abs(v));
  if (m * g.spacing() > std::numbers::pi / 3.0 * (1.0 + 1e-9)) {
    std::ostringstream msg;
    msg << "carleson_hunt: frequency " << m << " times node spacing " << g.spacing() << " exceeds pi/3";
    throw ResolutionError(msg.str());
  }
}

struct GslQuiet {
  GslQuiet() { gsl_set_error_handler_off(); }
};

std::vector<std::vector<double>> modulated_batch(std::span<const Interp> its, const SupGrid& sup,
                                                 std::span<const double> xs) {
  static const GslQuiet quiet;
  const std::size_t nf = its.size();
  std::vector<std::vector<double>> out(nf, std::vector<double>(xs.size(), 0.0));
  if (nf == 0) return out;
  const std::size_t ne = sup.radii.size();
  const long nx = static_cast<long>(xs.size());
#pragma omp parallel num_threads(num_threads())
  {
    std::vector<cplx> phi_k, psi_k, pp(ne), pn(ne), qp(ne), qn(ne);
    std::vector<double> best(nf);
#pragma omp for schedule(dynamic, 2)
    for (long i = 0; i < nx; ++i) {
      std::fill(best.begin(), best.end(), 0.0);
      for (double xi : sup.frequencies) {
        const Kernel kern{xi};
        for (std::size_t e = 0; e < ne; ++e) {
          pp[e] = kern.phi(sup.radii[e]);
          pn[e] = kern.phi(-sup.radii[e]);
          qp[e] = kern.psi(sup.radii[e]);
          qn[e] = kern.psi(-sup.radii[e]);
        }
        modulated_sup(its, sup, xs[i], pp, pn, qp, qn, kern, phi_k, psi_k, best);
      }
      for (std::size_t fi = 0; fi < nf; ++fi) out[fi][i] = best[fi];
    }
  }
  return out;
}

SampledFn real_fn(const SampledFn& like, const std::vector<double>& v) {
  std::vector<cplx> c(v.begin(), v.end());
  return SampledFn(like.grid(), std::move(c), like.domain());
}

}  // namespace

std::vector<double> hardy_littlewood_max_at(const SampledFn& f, const SupGrid& sup, std::span<const double> xs) {
  const Interp it = make_interp(f, true);
  const Cumulative cum(it);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = hl_at(cum, sup, xs[i]);
  return out;
}

std::vector<double> conjugate_hardy_at(const SampledFn& f, std::span<const double> xs) {
  const Interp it = make_interp(f, true);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = hardy_at(it, xs[i]);
  return out;
}

std::vector<double> carleson_hunt_at(const SampledFn& f, const SupGrid& sup, std::span<const double> xs) {
  check_frequencies(f.grid(), sup);
  const Interp it = make_interp(f, false);
  return modulated_batch(std::span<const Interp>(&it, 1), sup, xs)[0];
}

std::vector<std::vector<double>> carleson_hunt_batch(std::span<const SampledFn> fs, const SupGrid& sup,
                                                     std::span<const double> xs) {
  std::vector<Interp> its;
  for (const auto& f : fs) {
    if (!(f.grid() == fs[0].grid()) || f.domain() != fs[0].domain())
      throw ArgumentError("carleson_hunt_batch: functions must share grid and domain");
    check_frequencies(f.grid(), sup);
    its.push_back(make_interp(f, false));
  }
  return modulated_batch(its, sup, xs);
}

SampledFn hardy_littlewood_max(const SampledFn& f, const SupGrid& sup) {
  return real_fn(f, hardy_littlewood_max_at(f, sup, f.grid().points()));
}

SampledFn conjugate_hardy(const SampledFn& f) { return real_fn(f, conjugate_hardy_at(f, f.grid().points())); }

SampledFn maximal_hilbert(const SampledFn& f, const SupGrid& sup) {
  const SupGrid zero(sup.radii, {0.0});
  return real_fn(f, carleson_hunt_at(f, zero, f.grid().points()));
}

SampledFn carleson_hunt(const SampledFn& f, const SupGrid& sup) {
  return real_fn(f, carleson_hunt_at(f, sup, f.grid().points()));
}

std::vector<SampledFn> prestini_majorant_batch(std::span<const Order> orders, std::span<const SampledFn> fs,
                                               const SupGrid& sup) {
  if (fs.empty()) return {};
  const Grid& grid = fs[0].grid();
  std::vector<double> xs;
  for (double x : grid.points()) xs.push_back(std::abs(x));
  std::vector<SampledFn> gs;
  for (const Order& o : orders)
    for (const auto& f : fs) {
      if (!(f.grid() == grid)) throw ArgumentError("prestini_majorant: functions must share one grid");
      if (f.grid().lo() < 0.0) throw ArgumentError("prestini_majorant: f must live on the half line");
      gs.push_back(multiply_power(SampledFn(f.grid(), f.values(), Domain::half_line), {o.alpha() + 0.5}));
    }
  const auto ch = carleson_hunt_batch(gs, sup, xs);
  const SupGrid zero(sup.radii, {0.0});
  const auto hs = carleson_hunt_batch(gs, zero, xs);
  std::vector<SampledFn> out;
  for (std::size_t gi = 0; gi < gs.size(); ++gi) {
    const double a = orders[gi / fs.size()].alpha() + 0.5;
    const auto hl = hardy_littlewood_max_at(gs[gi], sup, xs);
    const auto hc = conjugate_hardy_at(gs[gi], xs);
    std::vector<cplx> v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      v[i] = (a == 0.0 ? 1.0 : std::pow(xs[i], -a)) * (hl[i] + hc[i] + hs[gi][i] + ch[gi][i]);
    out.emplace_back(grid, std::move(v), fs[gi % fs.size()].domain());
  }
  return out;
}

SampledFn prestini_majorant(Order order, const SampledFn& f, const SupGrid& sup) {
  return prestini_majorant_batch(std::span<const Order>(&order, 1), std::span<const SampledFn>(&f, 1), sup)[0];
}

}  // namespace dosc
