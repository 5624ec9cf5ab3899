#include "dosc/projections.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dosc/errors.hpp"

namespace dosc {

using K = TransformKind::Kind;

bool is_dyadic(double t) {
  if (!(t > 0.0)) return false;
  int e = 0;
  return std::frexp(t, &e) == 0.5;
}

ThresholdSeq::ThresholdSeq(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty()) throw ArgumentError("threshold sequence is empty");
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (!(v_[i] > 0.0) || !std::isfinite(v_[i])) throw ArgumentError("thresholds must be positive and finite");
    if (i > 0 && !(v_[i] > v_[i - 1])) throw ArgumentError("thresholds must be strictly increasing");
  }
}

ThresholdSeq ThresholdSeq::dyadic(int k_lo, int k_hi) {
  if (k_hi < k_lo) throw ArgumentError("dyadic: empty exponent range");
  std::vector<double> v;
  for (int k = k_lo; k <= k_hi; ++k) v.push_back(std::ldexp(1.0, k));
  return ThresholdSeq(std::move(v));
}

ThresholdSeq ThresholdSeq::geometric_with_dyadic(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ArgumentError("geometric thresholds: need 0 < lo < hi, n >= 2");
  std::vector<double> v;
  const double r = std::log(hi / lo);
  for (int i = 0; i < n; ++i) v.push_back(i + 1 == n ? hi : lo * std::exp(r * i / (n - 1)));
  for (int k = static_cast<int>(std::ceil(std::log2(lo))); std::ldexp(1.0, k) <= hi; ++k) {
    const double d = std::ldexp(1.0, k);
    if (d >= lo) v.push_back(d);
  }
  std::sort(v.begin(), v.end());
  // merge near-duplicates, keeping dyadic values
  std::vector<double> out;
  for (double t : v) {
    if (!out.empty() && std::abs(t - out.back()) <= 1e-12 * t) {
      if (dosc::is_dyadic(t)) out.back() = t;
      continue;
    }
    out.push_back(t);
  }
  return ThresholdSeq(std::move(out));
}

ThresholdSeq ThresholdSeq::default_for_band(double W) { return geometric_with_dyadic(W / 1024.0, W, 64); }

bool ThresholdSeq::is_dyadic() const {
  return std::all_of(v_.begin(), v_.end(), [](double t) { return dosc::is_dyadic(t); });
}

long ThresholdSeq::index_of(double t) const {
  auto it = std::lower_bound(v_.begin(), v_.end(), t * (1.0 - 1e-12));
  if (it != v_.end() && std::abs(*it - t) <= 1e-12 * t) return it - v_.begin();
  return -1;
}

ThresholdSeq ThresholdSeq::scaled(double s) const {
  std::vector<double> v(v_);
  for (auto& t : v) t *= s;
  return ThresholdSeq(std::move(v));
}

PartialSumFamily::PartialSumFamily(SampledFn base, Order order, TransformKind kind, ThresholdSeq t_grid,
                                   std::vector<cplx> values, SampledFn spectrum)
    : base_(std::move(base)),
      order_(order),
      kind_(kind),
      t_(std::move(t_grid)),
      values_(std::move(values)),
      spectrum_(std::move(spectrum)) {
  if (values_.size() != t_.size() * base_.size()) throw ArgumentError("family: value matrix has wrong shape");
}

SampledFn frequency_cut(const SampledFn& g, double t) {
  std::vector<cplx> v(g.values());
  const auto& x = g.grid().points();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(std::abs(x[i]) <= t)) v[i] = 0.0;
  return SampledFn(g.grid(), std::move(v), g.domain());
}

SampledFn PartialSumFamily::row(std::size_t r) const {
  auto vals = row_values(r);
  SampledFn f(base_.grid(), std::vector<cplx>(vals.begin(), vals.end()), base_.domain());
  auto spec = std::make_shared<const Spectrum>(Spectrum{kind_, frequency_cut(spectrum_, t_[r])});
  return f.with_spectrum(std::move(spec));
}

namespace {

void check_band(const Grid& freq, double t) {
  if (t > freq.max_abs() * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "partial sum: t = " << t << " exceeds the resolvable band " << freq.max_abs();
    throw ResolutionError(msg.str());
  }
}

// Number of nonnegative-half frequency nodes with node <= t.
std::vector<std::size_t> cut_counts(const std::vector<double>& half_nodes, const ThresholdSeq& ts) {
  std::vector<std::size_t> c;
  for (double t : ts.values())
    c.push_back(static_cast<std::size_t>(std::upper_bound(half_nodes.begin(), half_nodes.end(), t) -
                                         half_nodes.begin()));
  return c;
}

}  // namespace

PartialSumFamily build_family(Order order, const SampledFn& f, const ThresholdSeq& t_grid) {
  return build_family(order, f, t_grid, default_frequency_grid(f.grid(), t_grid.values()));
}

PartialSumFamily build_family(Order order, const SampledFn& f, const ThresholdSeq& t_grid, const Grid& freq) {
  for (double t : t_grid.values()) check_band(freq, t);
  const std::size_t n = f.size(), T = t_grid.size();
  if (f.domain() == Domain::half_line) {
    const TransformKind kind{K::hankel, order.alpha()};
    SampledFn F = hankel(order, f, freq);
    check_resolution(freq, f.grid(), "hankel partial sum");
    const auto cuts = cut_counts(freq.points(), t_grid);
    std::vector<cplx> a;
    detail::hankel_synthesis(order, F, f.grid().points(), cuts, a);
    return PartialSumFamily(f.without_spectrum(), order, kind, t_grid, std::move(a), std::move(F));
  }
  const TransformKind kind{K::dunkl, order.alpha()};
  SampledFn F = dunkl(order, f, freq);
  check_resolution(freq, f.grid(), "dunkl partial sum");
  const auto h = detail::half_eval_points(f.grid());
  const Grid fh = freq.positive_half();
  const auto cuts = cut_counts(fh.points(), t_grid);
  std::vector<cplx> a, b;
  detail::dunkl_synthesis(order, F, h.xs, cuts, a, b);
  const auto& x = f.grid().points();
  const std::size_t m = h.xs.size();
  std::vector<cplx> values(T * n);
  for (std::size_t r = 0; r < T; ++r)
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = h.index[i];
      values[r * n + i] = a[r * m + k] + cplx(0.0, x[i]) * b[r * m + k];
    }
  return PartialSumFamily(f.without_spectrum(), order, kind, t_grid, std::move(values), std::move(F));
}

SampledFn dunkl_partial_sum(Order order, const SampledFn& f, double t) {
  const double cut[1] = {t};
  return dunkl_partial_sum(order, f, t, default_frequency_grid(f.grid(), cut));
}

SampledFn dunkl_partial_sum(Order order, const SampledFn& f, double t, const Grid& freq, Route route) {
  if (!(t > 0.0)) throw ArgumentError("partial sum: t must be positive");
  if (f.domain() != Domain::full_line) throw ArgumentError("dunkl_partial_sum: f must be a full-line function");
  if (route == Route::direct_kernel) {
    check_band(freq, t);
    return dunkl_inverse(order, frequency_cut(dunkl(order, f, freq, route), t), f.grid(), route);
  }
  return build_family(order, f, ThresholdSeq({t}), freq).row(0);
}

SampledFn hankel_partial_sum(Order order, const SampledFn& f, double t) {
  const double cut[1] = {t};
  return hankel_partial_sum(order, f, t, default_frequency_grid(f.grid(), cut));
}

SampledFn hankel_partial_sum(Order order, const SampledFn& f, double t, const Grid& freq) {
  if (!(t > 0.0)) throw ArgumentError("partial sum: t must be positive");
  if (f.domain() != Domain::half_line) throw ArgumentError("hankel_partial_sum: f must be a half-line function");
  return build_family(order, f, ThresholdSeq({t}), freq).row(0);
}

SampledFn fourier_partial_sum(const SampledFn& f, double t) {
  const double cut[1] = {t};
  return fourier_partial_sum(f, t, default_frequency_grid(f.grid(), cut));
}

SampledFn fourier_partial_sum(const SampledFn& f, double t, const Grid& freq) {
  if (!(t > 0.0)) throw ArgumentError("partial sum: t must be positive");
  check_band(freq, t);
  return fourier_inverse(frequency_cut(fourier(f, freq), t), f.grid());
}

SampledFn radial_partial_sum(int dimension, const SampledFn& f0, double t) {
  const double cut[1] = {t};
  return radial_partial_sum(dimension, f0, t, default_frequency_grid(f0.grid(), cut));
}

SampledFn radial_partial_sum(int dimension, const SampledFn& f0, double t, const Grid& freq) {
  if (dimension < 1) throw ArgumentError("radial_partial_sum: dimension must be >= 1");
  return hankel_partial_sum(Order((dimension - 2) / 2.0), f0, t, freq);
}

void write_family_csv(const PartialSumFamily& fam, std::ostream& os) {
  os << std::setprecision(17);
  os << "# dunkl-osc family v1 kind=" << to_string(fam.kind().kind) << " alpha=" << fam.order().alpha()
     << " rows=" << fam.rows() << "\n";
  os << "x";
  for (double t : fam.t_grid().values()) os << ",re@" << t << ",im@" << t;
  os << "\n";
  const auto& x = fam.base().grid().points();
  for (std::size_t i = 0; i < fam.cols(); ++i) {
    os << x[i];
    for (std::size_t r = 0; r < fam.rows(); ++r) os << "," << fam.at(r, i).real() << "," << fam.at(r, i).imag();
    os << "\n";
  }
}

}  // namespace dosc
