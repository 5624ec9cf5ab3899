#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>

namespace testutil {

inline double max_abs_diff(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const std::complex<double>> a) {
  double m = 0.0;
  for (const auto& v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace testutil

#include "dosc/sampled_fn.hpp"

namespace testutil {

// (sum w |f|^2 |x|^{2a+1})^{1/2}
inline double l2_norm(const dosc::SampledFn& f, double a) {
  double s = 0.0;
  const auto& x = f.grid().points();
  const auto& w = f.grid().weights();
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * std::norm(f[i]) * std::pow(std::abs(x[i]), 2.0 * a + 1.0);
  return std::sqrt(s);
}

inline double max_abs_diff(const dosc::SampledFn& a, const dosc::SampledFn& b) {
  return max_abs_diff(std::span<const std::complex<double>>(a.values()),
                      std::span<const std::complex<double>>(b.values()));
}

inline double max_abs(const dosc::SampledFn& a) {
  return max_abs(std::span<const std::complex<double>>(a.values()));
}

}  // namespace testutil
