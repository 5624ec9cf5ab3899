#pragma once

#include <complex>
#include <span>

#include "dosc/special.hpp"

// Dense quadrature kernels. Each output node sums its terms in input order,
// so the serial and OpenMP variants agree bit for bit at any thread count.
namespace dosc::kernels {

using cplx = std::complex<double>;

enum class Bessel {
  normalized,  // J_a(u) / u^a
  sqrt,        // u^(1/2) J_a(u)
};

// out[c * x.size() + i] = sum_{j < cuts[c]} K(x_i y_j) v_j, cuts nondecreasing.
void bessel_prefix_serial(Bessel kind, Order order, std::span<const double> y, std::span<const cplx> v,
                          std::span<const double> x, std::span<const std::size_t> cuts, std::span<cplx> out);
void bessel_prefix_parallel(Bessel kind, Order order, std::span<const double> y, std::span<const cplx> v,
                            std::span<const double> x, std::span<const std::size_t> cuts, std::span<cplx> out);

// out_i = sum_j exp(i sign x_i y_j) v_j
void fourier_serial(double sign, std::span<const double> y, std::span<const cplx> v, std::span<const double> x,
                    std::span<cplx> out);
void fourier_parallel(double sign, std::span<const double> y, std::span<const cplx> v,
                      std::span<const double> x, std::span<cplx> out);

// out_i = sum_j (1/2)(j_a(u) - i u j_{a+1}(u)) v_j, u = x_i y_j (signed).
void dunkl_direct_serial(Order order, std::span<const double> y, std::span<const cplx> v,
                         std::span<const double> x, std::span<cplx> out);
void dunkl_direct_parallel(Order order, std::span<const double> y, std::span<const cplx> v,
                           std::span<const double> x, std::span<cplx> out);

}  // namespace dosc::kernels
