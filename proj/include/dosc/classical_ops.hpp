#pragma once

#include <span>
#include <vector>

#include "dosc/projections.hpp"
#include "dosc/sampled_fn.hpp"
#include "dosc/special.hpp"

// Operators act on the piecewise-linear interpolant of the samples: knots at
// the nodes plus the grid ends (constant extension to the ends), zero outside
// the grid support, and zero on (-inf, 0) for half-line functions. Integrals
// of the interpolant against 1, 1/y and e^{i xi y}/y are evaluated in closed
// form, so truncations at x +- eps are exact.
namespace dosc {

struct SupGrid {
  std::vector<double> radii;        // strictly decreasing, positive
  std::vector<double> frequencies;  // symmetric about 0

  SupGrid(std::vector<double> radii, std::vector<double> frequencies = {0.0});
  // radii 2^k * scale for k = 8, ..., -8
  static SupGrid dyadic(double scale, std::vector<double> frequencies = {0.0});
  // {0} and +-t for each threshold
  static std::vector<double> frequencies_from(const ThresholdSeq& t);
};

// Default radius scale for a grid: half the support length.
double support_scale(const Grid& g);

SampledFn hardy_littlewood_max(const SampledFn& f, const SupGrid& sup);
SampledFn conjugate_hardy(const SampledFn& f);
SampledFn maximal_hilbert(const SampledFn& f, const SupGrid& sup);
SampledFn carleson_hunt(const SampledFn& f, const SupGrid& sup);

// Evaluation at arbitrary points.
std::vector<double> hardy_littlewood_max_at(const SampledFn& f, const SupGrid& sup, std::span<const double> xs);
std::vector<double> conjugate_hardy_at(const SampledFn& f, std::span<const double> xs);
std::vector<double> carleson_hunt_at(const SampledFn& f, const SupGrid& sup, std::span<const double> xs);

// Carleson-Hunt sups for several functions on one grid; the kernel
// primitives are evaluated once per (x, xi) and shared.
std::vector<std::vector<double>> carleson_hunt_batch(std::span<const SampledFn> fs, const SupGrid& sup,
                                                     std::span<const double> xs);

// |x|^{-(a+1/2)} (M_HL + H + H_* + C)(y^{a+1/2} f)(|x|) at the nodes of f's grid.
SampledFn prestini_majorant(Order order, const SampledFn& f, const SupGrid& sup);
std::vector<SampledFn> prestini_majorant_batch(std::span<const Order> orders, std::span<const SampledFn> fs,
                                               const SupGrid& sup);

}  // namespace dosc
