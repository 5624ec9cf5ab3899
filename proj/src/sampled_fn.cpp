#include "dosc/sampled_fn.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "dosc/errors.hpp"

namespace dosc {

std::string to_string(TransformKind::Kind k) {
  switch (k) {
    case TransformKind::Kind::fourier: return "fourier";
    case TransformKind::Kind::hankel: return "hankel";
    case TransformKind::Kind::hankel_modified: return "hankel_modified";
    case TransformKind::Kind::dunkl: return "dunkl";
    case TransformKind::Kind::dunkl_modified: return "dunkl_modified";
  }
  return "?";
}

SampledFn::SampledFn(Grid grid, std::vector<cplx> values, Domain domain)
    : grid_(std::move(grid)), values_(std::move(values)), domain_(domain) {
  if (values_.size() != grid_.size()) throw ArgumentError("sampled function: values/grid size mismatch");
  if (domain_ == Domain::half_line && grid_.lo() < 0.0)
    throw ArgumentError("sampled function: half-line function needs grid lo >= 0");
}

SampledFn SampledFn::with_spectrum(std::shared_ptr<const Spectrum> s) const {
  SampledFn out = *this;
  out.spectrum_ = std::move(s);
  return out;
}

SampledFn SampledFn::without_spectrum() const {
  SampledFn out = *this;
  out.spectrum_.reset();
  return out;
}

cplx integrate(const SampledFn& f) {
  cplx s = 0.0;
  const auto& w = f.grid().weights();
  for (std::size_t i = 0; i < f.size(); ++i) s += w[i] * f[i];
  return s;
}

std::pair<SampledFn, SampledFn> even_odd_split(const SampledFn& f) {
  const Grid& g = f.grid();
  if (!g.symmetric()) throw ArgumentError("even_odd_split: grid is not symmetric about 0");
  const std::size_t n = g.size(), h = n / 2;
  std::vector<cplx> e(h), o(h);
  for (std::size_t k = 0; k < h; ++k) {
    const cplx a = f[h + k], b = f[h - 1 - k];
    e[k] = 0.5 * (a + b);
    o[k] = 0.5 * (a - b);
  }
  const Grid half = g.positive_half();
  return {SampledFn(half, std::move(e), Domain::half_line), SampledFn(half, std::move(o), Domain::half_line)};
}

SampledFn multiply_power(const SampledFn& f, MultExponent a) {
  std::vector<cplx> v(f.size());
  const auto& x = f.grid().points();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double ax = std::abs(x[i]);
    if (a.a < 0.0 && ax < 1e-300) {
      if (f[i] != cplx(0.0)) throw DomainError("multiply_power: negative power at x = 0 with f(0) != 0");
      v[i] = 0.0;
      continue;
    }
    v[i] = a.a == 0.0 ? f[i] : std::pow(ax, a.a) * f[i];
  }
  return SampledFn(f.grid(), std::move(v), f.domain());
}

namespace {
void require_same_grid(const SampledFn& a, const SampledFn& b) {
  if (!(a.grid() == b.grid())) throw ArgumentError("pointwise arithmetic needs a common grid");
}
}  // namespace

SampledFn operator+(const SampledFn& a, const SampledFn& b) {
  require_same_grid(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return SampledFn(a.grid(), std::move(v), a.domain());
}

SampledFn operator-(const SampledFn& a, const SampledFn& b) {
  require_same_grid(a, b);
  std::vector<cplx> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return SampledFn(a.grid(), std::move(v), a.domain());
}

SampledFn operator*(cplx c, const SampledFn& f) {
  std::vector<cplx> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f[i];
  return SampledFn(f.grid(), std::move(v), f.domain());
}

SampledFn restrict_to_half(const SampledFn& f) {
  if (f.grid().lo() >= 0.0) return SampledFn(f.grid(), f.values(), Domain::half_line);
  const Grid half = f.grid().positive_half();
  const std::size_t h = f.size() / 2;
  return SampledFn(half, std::vector<cplx>(f.values().begin() + h, f.values().end()), Domain::half_line);
}

Bump::Bump(double c, double r) : center(c), radius(r) {
  if (!(r > 0.0)) throw ArgumentError("bump: radius must be positive");
}

double Bump::operator()(double x) const {
  const double s = (x - center) / radius;
  const double d = 1.0 - s * s;
  if (!(d > 0.0)) return 0.0;
  return std::exp(-1.0 / d);
}

double Gaussian::operator()(double x) const {
  const double s = (x - center) / sigma;
  return std::exp(-0.5 * s * s);
}

void write_csv(const SampledFn& f, std::ostream& os) {
  os << "# dunkl-osc sampledfn v1 domain=" << (f.domain() == Domain::full_line ? "full" : "half") << "\n";
  os << std::setprecision(17);
  os << "# support=" << f.grid().lo() << "," << f.grid().hi() << " spacing=" << f.grid().spacing() << "\n";
  os << "x,weight,re,im\n";
  const auto& x = f.grid().points();
  const auto& w = f.grid().weights();
  for (std::size_t i = 0; i < f.size(); ++i)
    os << x[i] << "," << w[i] << "," << f[i].real() << "," << f[i].imag() << "\n";
}

SampledFn read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("# dunkl-osc sampledfn v1", 0) != 0)
    throw ArgumentError("sampled function csv: missing '# dunkl-osc sampledfn v1' header");
  Domain domain;
  if (line.find("domain=full") != std::string::npos) domain = Domain::full_line;
  else if (line.find("domain=half") != std::string::npos) domain = Domain::half_line;
  else throw ArgumentError("sampled function csv: header lacks domain=<full|half>");
  bool have_support = false;
  double lo = 0.0, hi = 0.0, spacing = 0.0;
  std::vector<double> x, w;
  std::vector<cplx> v;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (auto p = line.find("support="); p != std::string::npos) {
        std::istringstream ss(line.substr(p + 8));
        char comma;
        ss >> lo >> comma >> hi;
        have_support = static_cast<bool>(ss);
      }
      if (auto p = line.find("spacing="); p != std::string::npos) spacing = std::stod(line.substr(p + 8));
      continue;
    }
    if (line.rfind("x,", 0) == 0) continue;
    std::istringstream ss(line);
    double cols[4];
    for (int c = 0; c < 4; ++c) {
      std::string tok;
      if (!std::getline(ss, tok, ',')) throw ArgumentError("sampled function csv: expected 4 columns: " + line);
      try {
        cols[c] = std::stod(tok);
      } catch (const std::exception&) {
        throw ArgumentError("sampled function csv: bad number '" + tok + "'");
      }
    }
    x.push_back(cols[0]);
    w.push_back(cols[1]);
    v.emplace_back(cols[2], cols[3]);
  }
  if (x.empty()) throw ArgumentError("sampled function csv: no data rows");
  if (!have_support) {
    double total = 0.0;
    for (double wi : w) total += wi;
    if (domain == Domain::half_line) {
      lo = 0.0;
      hi = total;
    } else {
      hi = 0.5 * total;
      lo = -hi;
    }
  }
  return SampledFn(Grid(std::move(x), std::move(w), lo, hi, spacing), std::move(v), domain);
}

void write_csv_file(const SampledFn& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ArgumentError("cannot open for writing: " + path);
  write_csv(f, os);
}

SampledFn read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ArgumentError("cannot open for reading: " + path);
  return read_csv(is);
}

}  // namespace dosc
