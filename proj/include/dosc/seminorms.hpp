#pragma once

#include <cstdint>

#include "dosc/projections.hpp"
#include "dosc/sampled_fn.hpp"

namespace dosc {

// Cuts I_1 < ... < I_{J+1} taken from a family's t-grid.
struct CutSequence {
  ThresholdSeq seq;
  int J;
  CutSequence(ThresholdSeq seq, int J);
};

// (sum_{j<=J} sup_{I_j <= t < I_{j+1}} |a_t - a_{I_j}|^2)^{1/2}, the sup over
// t-grid rows in the block.
SampledFn oscillation(const PartialSumFamily& fam, const CutSequence& cuts);

// Pointwise max of the oscillation over n_random seeded sequences of J+1
// t-grid values, together with the canonical dyadic sequence (the smallest
// J+1 dyadic values of the grid, fewer if the grid has fewer). With
// dyadic_only the random sequences are drawn from the dyadic values too.
SampledFn max_oscillation_over_sampled_sequences(const PartialSumFamily& fam, int J, int n_random,
                                                 std::uint64_t seed, bool dyadic_only = false);

// Canonical dyadic sequence used above; ArgumentError if the grid has fewer
// than two dyadic values.
CutSequence canonical_dyadic_cuts(const ThresholdSeq& t_grid, int J);

// sup over increasing row selections of (sum |a_{t_{j+1}} - a_{t_j}|^r)^{1/r},
// exact by dynamic programming over all rows.
SampledFn variation(const PartialSumFamily& fam, double r);

// max_t |S_t f| over the family rows.
SampledFn carleson_dunkl_max(const PartialSumFamily& fam);
SampledFn carleson_dunkl_max(Order order, const SampledFn& f, const ThresholdSeq& t_grid);

}  // namespace dosc
