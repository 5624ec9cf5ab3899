#include "dosc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dosc/errors.hpp"
#include "dosc/parallel.hpp"

namespace dosc {

double CorpusEntry::half_width() const { return std::max(std::abs(lo), std::abs(hi)); }

Grid CorpusEntry::grid(int n_nodes, int nodes_per_panel) const {
  const int per_side = n_nodes / (2 * nodes_per_panel);
  if (per_side < 1 || per_side * 2 * nodes_per_panel != n_nodes)
    throw ArgumentError("corpus grid: n_nodes must be a multiple of 2*nodes_per_panel");
  const double L = half_width();
  return make_graded_grid(-L, L, per_side, nodes_per_panel, 1.0);
}

SampledFn CorpusEntry::sample(int n_nodes, int nodes_per_panel) const {
  return sample_on(grid(n_nodes, nodes_per_panel));
}

SampledFn CorpusEntry::sample_on(const Grid& g, Domain d) const {
  return SampledFn::sample(g, d, [this](double x) { return cplx(fn(x), 0.0); });
}

namespace {

CorpusEntry bump_entry(double c, double r) {
  std::ostringstream name;
  name << "bump(" << c << "," << r << ")";
  Bump b(c, r);
  return {name.str(), b, b.lo(), b.hi()};
}

CorpusEntry gaussian_entry(double c, double s) {
  std::ostringstream name;
  name << "gaussian(" << c << "," << s << ")";
  Gaussian g{c, s};
  const double lo = c - 12.0 * s, hi = c + 12.0 * s;
  return {name.str(), [g, lo, hi](double x) { return x < lo || x > hi ? 0.0 : g(x); }, lo, hi};
}

CorpusEntry xbump_entry(double c, double r) {
  std::ostringstream name;
  name << "xbump(" << c << "," << r << ")";
  Bump b(c, r);
  return {name.str(), [b](double x) { return x * b(x); }, b.lo(), b.hi()};
}

// Gaussian envelope times a seeded trigonometric polynomial of degree 4.
CorpusEntry modes_entry(std::uint64_t seed, int index) {
  auto rng = make_rng(seed, 1000 + index);
  double c[5], phi[5];
  for (int k = 0; k < 5; ++k) {
    c[k] = 2.0 * uniform01(rng) - 1.0;
    phi[k] = 2.0 * std::numbers::pi * uniform01(rng);
  }
  std::ostringstream name;
  name << "modes(" << seed << "," << index << ")";
  const double L = 12.0;
  return {name.str(),
          [=](double x) {
            if (x < -L || x > L) return 0.0;
            double s = 0.0;
            for (int k = 0; k < 5; ++k) s += c[k] * std::cos(k * x + phi[k]);
            return std::exp(-0.5 * x * x) * s;
          },
          -L, L};
}

}  // namespace

std::vector<CorpusEntry> standard_corpus(std::uint64_t seed) {
  return {bump_entry(0.0, 1.0),      bump_entry(0.0, 2.0),       bump_entry(0.3, 1.0),
          bump_entry(-0.4, 1.5),     bump_entry(0.25, 0.75),     xbump_entry(0.0, 1.5),
          gaussian_entry(0.0, 1.0),  gaussian_entry(0.5, 0.5),   gaussian_entry(-1.0, 0.75),
          modes_entry(seed, 0),      modes_entry(seed, 1),       modes_entry(seed, 2)};
}

std::vector<CorpusEntry> away_corpus() {
  std::vector<CorpusEntry> out{bump_entry(1.2, 1.0), bump_entry(-2.0, 1.5), bump_entry(3.0, 2.0),
                               bump_entry(0.8, 0.6)};
  Bump a(1.2, 1.0), b(-1.5, 0.8);
  out.push_back({"bump(1.2,1)+0.5*bump(-1.5,0.8)", [a, b](double x) { return a(x) + 0.5 * b(x); }, -2.3, 2.2});
  return out;
}

CorpusEntry zero_entry() {
  return {"zero", [](double) { return 0.0; }, -1.0, 1.0};
}

CorpusEntry parse_function_spec(const std::string& spec, std::uint64_t seed) {
  for (const auto& e : standard_corpus(seed))
    if (e.name == spec) return e;
  for (const auto& e : away_corpus())
    if (e.name == spec) return e;
  if (spec == "zero") return zero_entry();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ArgumentError("unknown function spec: " + spec);
  const std::string kind = spec.substr(0, colon);
  double a = 0.0, b = 0.0;
  char comma = 0;
  std::istringstream ss(spec.substr(colon + 1));
  if (!(ss >> a >> comma >> b) || comma != ',') throw ArgumentError("function spec needs two numbers: " + spec);
  if (kind == "bump") return bump_entry(a, b);
  if (kind == "xbump") return xbump_entry(a, b);
  if (kind == "gaussian") {
    if (!(b > 0.0)) throw ArgumentError("gaussian sigma must be positive");
    return gaussian_entry(a, b);
  }
  throw ArgumentError("unknown function kind: " + kind);
}

}  // namespace dosc
