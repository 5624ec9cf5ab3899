#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dosc/grid.hpp"

namespace dosc {

using cplx = std::complex<double>;

enum class Domain { full_line, half_line };

struct TransformKind {
  enum class Kind { fourier, hankel, hankel_modified, dunkl, dunkl_modified };
  Kind kind;
  double alpha = -0.5;  // ignored for fourier
  bool operator==(const TransformKind& o) const {
    return kind == o.kind && (kind == Kind::fourier || alpha == o.alpha);
  }
};

std::string to_string(TransformKind::Kind k);

struct Spectrum;

// Complex samples of a function at the nodes of a Grid.
//
// A function synthesized by an inverse transform may carry the spectrum it
// was synthesized from; the matching forward transform onto the same grid
// then returns that spectrum instead of re-integrating a non-compact function.
class SampledFn {
 public:
  SampledFn(Grid grid, std::vector<cplx> values, Domain domain);

  template <class F>
  static SampledFn sample(const Grid& grid, Domain domain, F&& f) {
    std::vector<cplx> v;
    v.reserve(grid.size());
    for (double x : grid.points()) v.emplace_back(f(x));
    return SampledFn(grid, std::move(v), domain);
  }
  static SampledFn zero(const Grid& grid, Domain domain) {
    return SampledFn(grid, std::vector<cplx>(grid.size()), domain);
  }

  const Grid& grid() const { return grid_; }
  const std::vector<cplx>& values() const { return values_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  const std::shared_ptr<const Spectrum>& spectrum() const { return spectrum_; }
  SampledFn with_spectrum(std::shared_ptr<const Spectrum> s) const;
  SampledFn without_spectrum() const;

 private:
  Grid grid_;
  std::vector<cplx> values_;
  Domain domain_;
  std::shared_ptr<const Spectrum> spectrum_;
};

struct Spectrum {
  TransformKind kind;
  SampledFn values;
};

struct MultExponent {
  double a = 0.0;
};

// Sum of weight * value.
cplx integrate(const SampledFn& f);

// Even and odd parts on the positive half of a symmetric grid.
std::pair<SampledFn, SampledFn> even_odd_split(const SampledFn& f);

// |x|^a f(x).
SampledFn multiply_power(const SampledFn& f, MultExponent a);

// Pointwise arithmetic on a common grid; results carry no spectrum.
SampledFn operator+(const SampledFn& a, const SampledFn& b);
SampledFn operator-(const SampledFn& a, const SampledFn& b);
SampledFn operator*(cplx c, const SampledFn& f);

// Values at the nodes x > 0 of a full-line function on a symmetric grid.
SampledFn restrict_to_half(const SampledFn& f);

// exp(-1/(1-((x-c)/r)^2)) inside (c-r, c+r), 0 outside.
struct Bump {
  double center, radius;
  Bump(double c, double r);
  double operator()(double x) const;
  double lo() const { return center - radius; }
  double hi() const { return center + radius; }
};

// exp(-(x-c)^2 / (2 s^2)).
struct Gaussian {
  double center, sigma;
  double operator()(double x) const;
};

// CSV with columns x, weight, re, im.
void write_csv(const SampledFn& f, std::ostream& os);
SampledFn read_csv(std::istream& is);
void write_csv_file(const SampledFn& f, const std::string& path);
SampledFn read_csv_file(const std::string& path);

}  // namespace dosc
