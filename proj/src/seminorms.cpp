#include "dosc/seminorms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dosc/errors.hpp"
#include "dosc/parallel.hpp"

namespace dosc {

CutSequence::CutSequence(ThresholdSeq s, int j) : seq(std::move(s)), J(j) {
  if (J < 1) throw ArgumentError("cut sequence: J must be >= 1");
  if (seq.size() < static_cast<std::size_t>(J) + 1)
    throw ArgumentError("cut sequence: need at least J+1 cuts");
}

namespace {

SampledFn real_on(const PartialSumFamily& fam, std::vector<double> v) {
  std::vector<cplx> c(v.begin(), v.end());
  return SampledFn(fam.base().grid(), std::move(c), fam.base().domain());
}

// Row indices of the cuts.
std::vector<std::size_t> cut_rows(const PartialSumFamily& fam, const CutSequence& cuts) {
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j <= static_cast<std::size_t>(cuts.J); ++j) {
    const long r = fam.t_grid().index_of(cuts.seq[j]);
    if (r < 0) throw ArgumentError("oscillation: cut " + std::to_string(cuts.seq[j]) + " is not in the t-grid");
    rows.push_back(static_cast<std::size_t>(r));
  }
  return rows;
}

// Oscillation at column i for cut rows r_0 < ... < r_J (block j spans rows [r_j, r_{j+1})).
double osc_at(const PartialSumFamily& fam, std::span<const std::size_t> rows, std::size_t i) {
  double total = 0.0;
  for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
    const cplx a0 = fam.at(rows[j], i);
    double m = 0.0;
    for (std::size_t r = rows[j] + 1; r < rows[j + 1]; ++r) m = std::max(m, std::norm(fam.at(r, i) - a0));
    total += m;
  }
  return std::sqrt(total);
}

std::vector<std::size_t> dyadic_rows(const ThresholdSeq& t) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < t.size(); ++r)
    if (is_dyadic(t[r])) rows.push_back(r);
  return rows;
}

}  // namespace

SampledFn oscillation(const PartialSumFamily& fam, const CutSequence& cuts) {
  const auto rows = cut_rows(fam, cuts);
  std::vector<double> out(fam.cols());
  const long n = static_cast<long>(fam.cols());
#pragma omp parallel for schedule(static) num_threads(num_threads())
  for (long i = 0; i < n; ++i) out[i] = osc_at(fam, rows, static_cast<std::size_t>(i));
  return real_on(fam, std::move(out));
}

CutSequence canonical_dyadic_cuts(const ThresholdSeq& t_grid, int J) {
  const auto rows = dyadic_rows(t_grid);
  if (rows.size() < 2) throw ArgumentError("canonical dyadic cuts: t-grid has fewer than two dyadic values");
  const std::size_t n = std::min(rows.size(), static_cast<std::size_t>(J) + 1);
  std::vector<double> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(t_grid[rows[k]]);
  return CutSequence(ThresholdSeq(std::move(v)), static_cast<int>(n) - 1);
}

SampledFn max_oscillation_over_sampled_sequences(const PartialSumFamily& fam, int J, int n_random,
                                                 std::uint64_t seed, bool dyadic_only) {
  if (J < 1 || n_random < 0) throw ArgumentError("max oscillation: need J >= 1 and n_random >= 0");
  std::vector<std::size_t> pool(fam.rows());
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  if (dyadic_only) pool = dyadic_rows(fam.t_grid());
  if (pool.size() < static_cast<std::size_t>(J) + 1)
    throw ArgumentError("max oscillation: t-grid has fewer than J+1 admissible values");

  std::vector<std::vector<std::size_t>> seqs;
  {
    const auto dy = dyadic_rows(fam.t_grid());
    if (dy.size() >= 2) seqs.emplace_back(dy.begin(), dy.begin() + std::min(dy.size(), std::size_t(J) + 1));
  }
  for (int s = 0; s < n_random; ++s) {
    auto rng = make_rng(seed, static_cast<std::uint64_t>(s));
    std::vector<std::size_t> p = pool;
    for (std::size_t k = 0; k <= static_cast<std::size_t>(J); ++k) {
      const std::size_t m = k + static_cast<std::size_t>(uniform01(rng) * static_cast<double>(p.size() - k));
      std::swap(p[k], p[std::min(m, p.size() - 1)]);
    }
    p.resize(static_cast<std::size_t>(J) + 1);
    std::sort(p.begin(), p.end());
    seqs.push_back(std::move(p));
  }

  std::vector<double> out(fam.cols(), 0.0);
  const long n = static_cast<long>(fam.cols());
#pragma omp parallel for schedule(static) num_threads(num_threads())
  for (long i = 0; i < n; ++i) {
    double m = 0.0;
    for (const auto& rows : seqs) m = std::max(m, osc_at(fam, rows, static_cast<std::size_t>(i)));
    out[i] = m;
  }
  return real_on(fam, std::move(out));
}

SampledFn variation(const PartialSumFamily& fam, double r) {
  if (!(r >= 1.0)) throw ArgumentError("variation: r must be >= 1");
  const std::size_t T = fam.rows();
  std::vector<double> out(fam.cols());
  const long n = static_cast<long>(fam.cols());
#pragma omp parallel num_threads(num_threads())
  {
    std::vector<double> best(T);
#pragma omp for schedule(static)
    for (long i = 0; i < n; ++i) {
      double top = 0.0;
      for (std::size_t j = 0; j < T; ++j) {
        double b = 0.0;
        const cplx aj = fam.at(j, static_cast<std::size_t>(i));
        for (std::size_t k = 0; k < j; ++k) {
          const double d = std::abs(aj - fam.at(k, static_cast<std::size_t>(i)));
          b = std::max(b, best[k] + (r == 2.0 ? d * d : std::pow(d, r)));
        }
        best[j] = b;
        top = std::max(top, b);
      }
      out[i] = r == 2.0 ? std::sqrt(top) : std::pow(top, 1.0 / r);
    }
  }
  return real_on(fam, std::move(out));
}

SampledFn carleson_dunkl_max(const PartialSumFamily& fam) {
  std::vector<double> out(fam.cols(), 0.0);
  for (std::size_t r = 0; r < fam.rows(); ++r)
    for (std::size_t i = 0; i < fam.cols(); ++i) out[i] = std::max(out[i], std::abs(fam.at(r, i)));
  return real_on(fam, std::move(out));
}

SampledFn carleson_dunkl_max(Order order, const SampledFn& f, const ThresholdSeq& t_grid) {
  return carleson_dunkl_max(build_family(order, f, t_grid));
}

}  // namespace dosc
