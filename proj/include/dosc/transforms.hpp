#pragma once

#include <span>
#include <vector>

#include "dosc/grid.hpp"
#include "dosc/sampled_fn.hpp"
#include "dosc/special.hpp"

namespace dosc {

// Minimum input nodes per wavelength of the fastest kernel oscillation.
inline constexpr double kMinNodesPerWavelength = 6.0;

// Throws ResolutionError if max|out| * in.spacing() leaves fewer than
// kMinNodesPerWavelength nodes per wavelength.
void check_resolution(const Grid& in, const Grid& out, const char* what);

// Largest frequency the grid resolves under the guard.
double resolvable_band(const Grid& spatial);

// Frequency grid matched to a spatial grid: band [-W, W] (or [0, W] for a
// half-line grid) with W = resolvable_band(spatial), panel width small enough
// that the inverse transform back onto `spatial` passes the guard, and panel
// edges at every cut frequency so that sharp cuts fall between panels.
Grid default_frequency_grid(const Grid& spatial, std::span<const double> cuts = {}, int nodes_per_panel = 16);

enum class Route { decomposition, direct_kernel };

SampledFn fourier(const SampledFn& f, const Grid& out);
SampledFn fourier_inverse(const SampledFn& g, const Grid& out);

SampledFn hankel(Order order, const SampledFn& f, const Grid& out);
SampledFn hankel_modified(Order order, const SampledFn& f, const Grid& out);

SampledFn dunkl(Order order, const SampledFn& f, const Grid& out, Route route = Route::decomposition);
SampledFn dunkl_inverse(Order order, const SampledFn& g, const Grid& out, Route route = Route::decomposition);

SampledFn dunkl_modified(Order order, const SampledFn& f, const Grid& out);
SampledFn dunkl_modified_inverse(Order order, const SampledFn& g, const Grid& out);

// T_{alpha gamma} = inverse modified Dunkl of order alpha after modified Dunkl of order gamma.
SampledFn transplant_dunkl(Order alpha, Order gamma, const SampledFn& f);
SampledFn transplant_dunkl(Order alpha, Order gamma, const SampledFn& f, const Grid& freq);
// H_alpha after H_gamma on the half line.
SampledFn transplant_hankel(Order alpha, Order gamma, const SampledFn& f);
SampledFn transplant_hankel(Order alpha, Order gamma, const SampledFn& f, const Grid& freq);

namespace detail {
// Weighted inputs and |x| evaluation points for the half-line synthesis used
// by dunkl_inverse and the partial-sum families.
struct HalfEval {
  std::vector<double> xs;         // distinct |x| values
  std::vector<std::size_t> index;  // output node -> position in xs
};
HalfEval half_eval_points(const Grid& out);

// Even and odd synthesis sums of the inverse Dunkl transform for each cut:
// a[c][k] = H_alpha(1_cut g_e)(xs_k), b[c][k] = H_{alpha+1}(1_cut g_o / y)(xs_k).
void dunkl_synthesis(Order order, const SampledFn& g, std::span<const double> xs,
                     std::span<const std::size_t> cuts, std::vector<cplx>& a, std::vector<cplx>& b);
// Hankel synthesis sums for each cut.
void hankel_synthesis(Order order, const SampledFn& g, std::span<const double> xs,
                      std::span<const std::size_t> cuts, std::vector<cplx>& a);
}  // namespace detail

}  // namespace dosc
