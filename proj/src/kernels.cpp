#include "dosc/kernels.hpp"

#include <cmath>

#include "dosc/errors.hpp"
#include "dosc/parallel.hpp"

namespace dosc::kernels {

namespace {

inline double eval(const BesselEvaluator& e, Bessel kind, double u) {
  return kind == Bessel::normalized ? e.normalized(u) : e.sqrt_kernel(u);
}

inline void prefix_row(const BesselEvaluator& e, Bessel kind, std::span<const double> y,
                       std::span<const cplx> v, double xi, std::span<const std::size_t> cuts,
                       std::span<cplx> out, std::size_t i, std::size_t nx) {
  cplx acc = 0.0;
  std::size_t c = 0;
  const std::size_t nc = cuts.size();
  for (std::size_t j = 0; j < y.size(); ++j) {
    while (c < nc && cuts[c] == j) out[c++ * nx + i] = acc;
    if (c == nc) return;
    acc += eval(e, kind, std::abs(xi * y[j])) * v[j];
  }
  while (c < nc) out[c++ * nx + i] = acc;
}

void check_prefix_args(std::span<const double> y, std::span<const cplx> v, std::span<const double> x,
                       std::span<const std::size_t> cuts, std::span<cplx> out) {
  if (y.size() != v.size()) throw ArgumentError("kernel: y/v size mismatch");
  if (out.size() != cuts.size() * x.size()) throw ArgumentError("kernel: output size mismatch");
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    if (cuts[c] > y.size()) throw ArgumentError("kernel: cut beyond input length");
    if (c > 0 && cuts[c] < cuts[c - 1]) throw ArgumentError("kernel: cuts must be nondecreasing");
  }
}

inline cplx fourier_row(double sign, std::span<const double> y, std::span<const cplx> v, double xi) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double u = xi * y[j];
    acc += cplx(std::cos(u), sign * std::sin(u)) * v[j];
  }
  return acc;
}

inline cplx dunkl_row(const BesselEvaluator& e0, const BesselEvaluator& e1, std::span<const double> y,
                      std::span<const cplx> v, double xi) {
  cplx acc = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double u = xi * y[j];
    const double au = std::abs(u);
    acc += cplx(0.5 * e0.normalized(au), -0.5 * u * e1.normalized(au)) * v[j];
  }
  return acc;
}

}  // namespace

void bessel_prefix_serial(Bessel kind, Order order, std::span<const double> y, std::span<const cplx> v,
                          std::span<const double> x, std::span<const std::size_t> cuts, std::span<cplx> out) {
  check_prefix_args(y, v, x, cuts, out);
  const BesselEvaluator e(order);
  for (std::size_t i = 0; i < x.size(); ++i) prefix_row(e, kind, y, v, x[i], cuts, out, i, x.size());
}

void bessel_prefix_parallel(Bessel kind, Order order, std::span<const double> y, std::span<const cplx> v,
                            std::span<const double> x, std::span<const std::size_t> cuts,
                            std::span<cplx> out) {
  check_prefix_args(y, v, x, cuts, out);
  const BesselEvaluator e(order);
  const long nx = static_cast<long>(x.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(num_threads())
  for (long i = 0; i < nx; ++i) prefix_row(e, kind, y, v, x[i], cuts, out, i, x.size());
}

void fourier_serial(double sign, std::span<const double> y, std::span<const cplx> v, std::span<const double> x,
                    std::span<cplx> out) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = fourier_row(sign, y, v, x[i]);
}

void fourier_parallel(double sign, std::span<const double> y, std::span<const cplx> v,
                      std::span<const double> x, std::span<cplx> out) {
  const long nx = static_cast<long>(x.size());
#pragma omp parallel for schedule(static) num_threads(num_threads())
  for (long i = 0; i < nx; ++i) out[i] = fourier_row(sign, y, v, x[i]);
}

void dunkl_direct_serial(Order order, std::span<const double> y, std::span<const cplx> v,
                         std::span<const double> x, std::span<cplx> out) {
  const BesselEvaluator e0(order), e1(order.shifted(1.0));
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = dunkl_row(e0, e1, y, v, x[i]);
}

void dunkl_direct_parallel(Order order, std::span<const double> y, std::span<const cplx> v,
                           std::span<const double> x, std::span<cplx> out) {
  const BesselEvaluator e0(order), e1(order.shifted(1.0));
  const long nx = static_cast<long>(x.size());
#pragma omp parallel for schedule(dynamic, 4) num_threads(num_threads())
  for (long i = 0; i < nx; ++i) out[i] = dunkl_row(e0, e1, y, v, x[i]);
}

}  // namespace dosc::kernels
