#include "dosc/transforms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "dosc/errors.hpp"
#include "dosc/kernels.hpp"

namespace dosc {

namespace {

constexpr double kPi = std::numbers::pi;
using K = TransformKind::Kind;

// Returns the carried spectrum if it answers this forward transform.
const SampledFn* carried(const SampledFn& f, TransformKind kind, const Grid& out) {
  const auto& s = f.spectrum();
  if (s && s->kind == kind && s->values.grid() == out) return &s->values;
  return nullptr;
}

SampledFn attach(SampledFn f, TransformKind kind, const SampledFn& spectrum) {
  return f.with_spectrum(std::make_shared<const Spectrum>(Spectrum{kind, spectrum.without_spectrum()}));
}

void require_half(const SampledFn& f, const char* what) {
  if (f.grid().lo() < 0.0) throw ArgumentError(std::string(what) + ": input must live on the half line");
}

void require_half_grid(const Grid& g, const char* what) {
  if (g.lo() < 0.0) throw ArgumentError(std::string(what) + ": output grid must lie in [0, inf)");
}

// sum_j K(x y_j) w_j f_j y_j^power over a half-line input.
std::vector<cplx> bessel_sum(kernels::Bessel kind, Order order, const SampledFn& f, double power,
                             std::span<const double> xs) {
  const auto& y = f.grid().points();
  const auto& w = f.grid().weights();
  std::vector<cplx> v(f.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = (power == 0.0 ? w[j] : w[j] * std::pow(y[j], power)) * f[j];
  std::vector<cplx> out(xs.size());
  const std::size_t cut = y.size();
  kernels::bessel_prefix_parallel(kind, order, y, v, xs, std::span<const std::size_t>(&cut, 1), out);
  return out;
}

void require_symmetric(const SampledFn& f, const char* what) {
  if (!f.grid().symmetric()) throw ArgumentError(std::string(what) + ": input grid must be symmetric about 0");
}

}  // namespace

void check_resolution(const Grid& in, const Grid& out, const char* what) {
  const double xmax = out.max_abs();
  if (xmax == 0.0) return;
  const double npw = 2.0 * kPi / (xmax * in.spacing());
  if (npw < kMinNodesPerWavelength * (1.0 - 1e-9)) {
    std::ostringstream msg;
    msg << what << ": " << npw << " nodes per wavelength at |x| = " << xmax << " (need "
        << kMinNodesPerWavelength << "); refine the input grid or shrink the output band";
    throw ResolutionError(msg.str());
  }
}

double resolvable_band(const Grid& spatial) {
  return 2.0 * kPi / (kMinNodesPerWavelength * spatial.spacing());
}

Grid default_frequency_grid(const Grid& spatial, std::span<const double> cuts, int nodes_per_panel) {
  const double W = resolvable_band(spatial);
  const double width = nodes_per_panel * 2.0 * kPi / (kMinNodesPerWavelength * spatial.max_abs());
  if (spatial.lo() < 0.0) return make_breakpoint_grid(-W, W, cuts, width, nodes_per_panel);
  return make_breakpoint_grid(0.0, W, cuts, width, nodes_per_panel);
}

SampledFn fourier(const SampledFn& f, const Grid& out) {
  if (auto s = carried(f, {K::fourier}, out)) return *s;
  check_resolution(f.grid(), out, "fourier");
  const auto& w = f.grid().weights();
  std::vector<cplx> v(f.size());
  const double c = 1.0 / std::sqrt(2.0 * kPi);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * w[j] * f[j];
  std::vector<cplx> res(out.size());
  kernels::fourier_parallel(-1.0, f.grid().points(), v, out.points(), res);
  return SampledFn(out, std::move(res), Domain::full_line);
}

SampledFn fourier_inverse(const SampledFn& g, const Grid& out) {
  check_resolution(g.grid(), out, "fourier_inverse");
  const auto& w = g.grid().weights();
  std::vector<cplx> v(g.size());
  const double c = 1.0 / std::sqrt(2.0 * kPi);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = c * w[j] * g[j];
  std::vector<cplx> res(out.size());
  kernels::fourier_parallel(1.0, g.grid().points(), v, out.points(), res);
  return attach(SampledFn(out, std::move(res), Domain::full_line), {K::fourier}, g);
}

SampledFn hankel(Order order, const SampledFn& f, const Grid& out) {
  if (auto s = carried(f, {K::hankel, order.alpha()}, out)) return *s;
  require_half(f, "hankel");
  require_half_grid(out, "hankel");
  check_resolution(f.grid(), out, "hankel");
  auto v = bessel_sum(kernels::Bessel::normalized, order, f, 2.0 * order.alpha() + 1.0, out.points());
  return SampledFn(out, std::move(v), Domain::half_line);
}

SampledFn hankel_modified(Order order, const SampledFn& f, const Grid& out) {
  if (auto s = carried(f, {K::hankel_modified, order.alpha()}, out)) return *s;
  require_half(f, "hankel_modified");
  require_half_grid(out, "hankel_modified");
  check_resolution(f.grid(), out, "hankel_modified");
  auto v = bessel_sum(kernels::Bessel::sqrt, order, f, 0.0, out.points());
  return SampledFn(out, std::move(v), Domain::half_line);
}

namespace detail {

HalfEval half_eval_points(const Grid& out) {
  HalfEval h;
  const auto& x = out.points();
  if (out.symmetric()) {
    const std::size_t n = x.size(), half = n / 2;
    h.xs.assign(x.begin() + half, x.end());
    h.index.resize(n);
    for (std::size_t i = 0; i < n; ++i) h.index[i] = i >= half ? i - half : half - 1 - i;
  } else {
    h.xs.resize(x.size());
    h.index.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      h.xs[i] = std::abs(x[i]);
      h.index[i] = i;
    }
  }
  return h;
}

void dunkl_synthesis(Order order, const SampledFn& g, std::span<const double> xs,
                     std::span<const std::size_t> cuts, std::vector<cplx>& a, std::vector<cplx>& b) {
  const auto [ge, go] = even_odd_split(g);
  const auto& y = ge.grid().points();
  const auto& w = ge.grid().weights();
  const double alpha = order.alpha();
  std::vector<cplx> ve(y.size()), vo(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    ve[j] = (alpha == -0.5 ? w[j] : w[j] * std::pow(y[j], 2.0 * alpha + 1.0)) * ge[j];
    vo[j] = w[j] * std::pow(y[j], 2.0 * alpha + 3.0) * (go[j] / y[j]);
  }
  a.assign(cuts.size() * xs.size(), 0.0);
  b.assign(cuts.size() * xs.size(), 0.0);
  kernels::bessel_prefix_parallel(kernels::Bessel::normalized, order, y, ve, xs, cuts, a);
  kernels::bessel_prefix_parallel(kernels::Bessel::normalized, order.shifted(1.0), y, vo, xs, cuts, b);
}

void hankel_synthesis(Order order, const SampledFn& g, std::span<const double> xs,
                      std::span<const std::size_t> cuts, std::vector<cplx>& a) {
  const auto& y = g.grid().points();
  const auto& w = g.grid().weights();
  const double alpha = order.alpha();
  std::vector<cplx> v(y.size());
  for (std::size_t j = 0; j < y.size(); ++j)
    v[j] = (alpha == -0.5 ? w[j] : w[j] * std::pow(y[j], 2.0 * alpha + 1.0)) * g[j];
  a.assign(cuts.size() * xs.size(), 0.0);
  kernels::bessel_prefix_parallel(kernels::Bessel::normalized, order, y, v, xs, cuts, a);
}

}  // namespace detail

namespace {

// sign = -1: forward transform; sign = +1: inverse (evaluation at -x).
SampledFn dunkl_decomposition(Order order, const SampledFn& f, const Grid& out, double sign) {
  require_symmetric(f, "dunkl");
  check_resolution(f.grid(), out, "dunkl");
  const auto h = detail::half_eval_points(out);
  const std::size_t cut = f.size() / 2;
  std::vector<cplx> a, b;
  detail::dunkl_synthesis(order, f, h.xs, std::span<const std::size_t>(&cut, 1), a, b);
  const auto& x = out.points();
  std::vector<cplx> res(out.size());
  for (std::size_t i = 0; i < res.size(); ++i) {
    const std::size_t k = h.index[i];
    res[i] = a[k] + cplx(0.0, sign * x[i]) * b[k];
  }
  return SampledFn(out, std::move(res), Domain::full_line);
}

SampledFn dunkl_direct(Order order, const SampledFn& f, const Grid& out, double sign) {
  check_resolution(f.grid(), out, "dunkl");
  const auto& y = f.grid().points();
  const auto& w = f.grid().weights();
  const double alpha = order.alpha();
  std::vector<cplx> v(f.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = (alpha == -0.5 ? w[j] : w[j] * std::pow(std::abs(y[j]), 2.0 * alpha + 1.0)) * f[j];
  std::vector<double> x(out.points());
  if (sign > 0) for (auto& xi : x) xi = -xi;
  std::vector<cplx> res(out.size());
  kernels::dunkl_direct_parallel(order, y, v, x, res);
  return SampledFn(out, std::move(res), Domain::full_line);
}

SampledFn modified_dunkl_impl(Order order, const SampledFn& f, const Grid& out, double sign) {
  require_symmetric(f, "dunkl_modified");
  check_resolution(f.grid(), out, "dunkl_modified");
  const auto [fe, fo] = even_odd_split(f);
  const auto h = detail::half_eval_points(out);
  const auto a = bessel_sum(kernels::Bessel::sqrt, order, fe, 0.0, h.xs);
  const auto b = bessel_sum(kernels::Bessel::sqrt, order.shifted(1.0), fo, 0.0, h.xs);
  const auto& x = out.points();
  std::vector<cplx> res(out.size());
  for (std::size_t i = 0; i < res.size(); ++i) {
    const std::size_t k = h.index[i];
    const double sg = x[i] > 0 ? 1.0 : (x[i] < 0 ? -1.0 : 0.0);
    res[i] = a[k] + cplx(0.0, sign * sg) * b[k];
  }
  return SampledFn(out, std::move(res), Domain::full_line);
}

}  // namespace

SampledFn dunkl(Order order, const SampledFn& f, const Grid& out, Route route) {
  if (auto s = carried(f, {K::dunkl, order.alpha()}, out)) return *s;
  if (route == Route::direct_kernel) return dunkl_direct(order, f, out, -1.0);
  return dunkl_decomposition(order, f, out, -1.0);
}

SampledFn dunkl_inverse(Order order, const SampledFn& g, const Grid& out, Route route) {
  SampledFn r = route == Route::direct_kernel ? dunkl_direct(order, g, out, 1.0)
                                              : dunkl_decomposition(order, g, out, 1.0);
  return attach(std::move(r), {K::dunkl, order.alpha()}, g);
}

SampledFn dunkl_modified(Order order, const SampledFn& f, const Grid& out) {
  if (auto s = carried(f, {K::dunkl_modified, order.alpha()}, out)) return *s;
  return modified_dunkl_impl(order, f, out, -1.0);
}

SampledFn dunkl_modified_inverse(Order order, const SampledFn& g, const Grid& out) {
  return attach(modified_dunkl_impl(order, g, out, 1.0), {K::dunkl_modified, order.alpha()}, g);
}

SampledFn transplant_dunkl(Order alpha, Order gamma, const SampledFn& f) {
  return transplant_dunkl(alpha, gamma, f, default_frequency_grid(f.grid()));
}

SampledFn transplant_dunkl(Order alpha, Order gamma, const SampledFn& f, const Grid& freq) {
  return dunkl_modified_inverse(alpha, dunkl_modified(gamma, f, freq), f.grid());
}

SampledFn transplant_hankel(Order alpha, Order gamma, const SampledFn& f) {
  return transplant_hankel(alpha, gamma, f, default_frequency_grid(f.grid()));
}

SampledFn transplant_hankel(Order alpha, Order gamma, const SampledFn& f, const Grid& freq) {
  const SampledFn inner = hankel_modified(gamma, f, freq);
  return attach(hankel_modified(alpha, inner, f.grid()), {K::hankel_modified, alpha.alpha()}, inner);
}

}  // namespace dosc
