#pragma once

#include <span>
#include <vector>

#include "dosc/sampled_fn.hpp"
#include "dosc/special.hpp"
#include "dosc/transforms.hpp"

namespace dosc {

// Strictly increasing positive thresholds.
class ThresholdSeq {
 public:
  explicit ThresholdSeq(std::vector<double> values);
  // {2^k : k_lo <= k <= k_hi}
  static ThresholdSeq dyadic(int k_lo, int k_hi);
  // n geometric values from lo to hi, merged with every dyadic point in [lo, hi].
  static ThresholdSeq geometric_with_dyadic(double lo, double hi, int n);
  // Default family grid for a frequency band W: 64 geometric values over
  // [W/1024, W] plus the dyadic points in that range.
  static ThresholdSeq default_for_band(double W);

  const std::vector<double>& values() const { return v_; }
  std::size_t size() const { return v_.size(); }
  double operator[](std::size_t i) const { return v_[i]; }
  bool is_dyadic() const;
  // Index of t in the sequence, or -1 (relative tolerance 1e-12).
  long index_of(double t) const;
  ThresholdSeq scaled(double s) const;

 private:
  std::vector<double> v_;
};

bool is_dyadic(double t);

// Rows S_t f for each t of the grid, sharing one forward transform.
class PartialSumFamily {
 public:
  PartialSumFamily(SampledFn base, Order order, TransformKind kind, ThresholdSeq t_grid,
                   std::vector<cplx> values, SampledFn spectrum);

  const SampledFn& base() const { return base_; }
  Order order() const { return order_; }
  TransformKind kind() const { return kind_; }
  const ThresholdSeq& t_grid() const { return t_; }
  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return base_.size(); }
  cplx at(std::size_t row, std::size_t col) const { return values_[row * cols() + col]; }
  std::span<const cplx> row_values(std::size_t row) const {
    return std::span<const cplx>(values_).subspan(row * cols(), cols());
  }
  // Row as a function; carries its masked spectrum.
  SampledFn row(std::size_t r) const;
  const SampledFn& spectrum() const { return spectrum_; }

 private:
  SampledFn base_;
  Order order_;
  TransformKind kind_;
  ThresholdSeq t_;
  std::vector<cplx> values_;
  SampledFn spectrum_;
};

// Partial sums through the Dunkl transform for full-line f, through the
// Hankel transform for half-line f. The frequency grid defaults to
// default_frequency_grid(f.grid(), t_grid).
PartialSumFamily build_family(Order order, const SampledFn& f, const ThresholdSeq& t_grid);
PartialSumFamily build_family(Order order, const SampledFn& f, const ThresholdSeq& t_grid, const Grid& freq);

// The cut keeps frequency nodes with |node| <= t; t beyond the grid band is a
// resolution error.
SampledFn dunkl_partial_sum(Order order, const SampledFn& f, double t);
SampledFn dunkl_partial_sum(Order order, const SampledFn& f, double t, const Grid& freq,
                            Route route = Route::decomposition);
SampledFn hankel_partial_sum(Order order, const SampledFn& f, double t);
SampledFn hankel_partial_sum(Order order, const SampledFn& f, double t, const Grid& freq);
SampledFn fourier_partial_sum(const SampledFn& f, double t);
SampledFn fourier_partial_sum(const SampledFn& f, double t, const Grid& freq);
// Radial profile of the ball partial sum in R^n: Hankel partial sum of order (n-2)/2.
SampledFn radial_partial_sum(int dimension, const SampledFn& f0, double t);
SampledFn radial_partial_sum(int dimension, const SampledFn& f0, double t, const Grid& freq);

// Zero outside |node| <= t.
SampledFn frequency_cut(const SampledFn& g, double t);

// CSV: comment header, then "x,re@t,im@t,..." and one row per node.
void write_family_csv(const PartialSumFamily& fam, std::ostream& os);

}  // namespace dosc
