#include "dosc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "dosc/errors.hpp"

namespace dosc {

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  if (n < 1) throw ArgumentError("gauss_legendre: n must be positive");
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<double> x(n), w(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (z * p1 - p0) / (z * z - 1.0);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  cache.emplace(n, std::make_pair(x, w));
  return {x, w};
}

Grid::Grid(std::vector<double> points, std::vector<double> weights, double lo, double hi,
           double spacing) {
  const std::size_t n = points.size();
  if (n == 0) throw ArgumentError("grid: no points");
  if (weights.size() != n) throw ArgumentError("grid: points/weights size mismatch");
  if (!(lo < hi)) throw ArgumentError("grid: lo must be < hi");
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(weights[i] > 0.0)) throw ArgumentError("grid: weights must be positive");
    if (i > 0 && !(points[i] > points[i - 1])) throw ArgumentError("grid: points must increase");
    sum += weights[i];
  }
  if (points.front() < lo || points.back() > hi) throw ArgumentError("grid: points outside support");
  if (std::abs(sum - (hi - lo)) > 1e-12 * (hi - lo))
    throw ArgumentError("grid: weights do not integrate 1 to hi-lo (" + std::to_string(sum) + " vs " +
                        std::to_string(hi - lo) + ")");
  if (!(spacing > 0.0)) {
    double gap = 2.0 * std::max(points.front() - lo, hi - points.back());
    for (std::size_t i = 1; i < n; ++i) gap = std::max(gap, points[i] - points[i - 1]);
    spacing = gap * 2.0 / std::numbers::pi;
  }
  bool sym = (n % 2 == 0) && lo == -hi;
  for (std::size_t i = 0; sym && i < n / 2; ++i)
    sym = points[i] == -points[n - 1 - i] && weights[i] == weights[n - 1 - i];
  d_ = std::make_shared<Data>(Data{std::move(points), std::move(weights), lo, hi, spacing, sym});
}

double Grid::max_abs() const { return std::max(std::abs(lo()), std::abs(hi())); }

Grid Grid::positive_half() const {
  if (lo() >= 0.0) return *this;
  if (!symmetric()) throw ArgumentError("positive_half: grid is not symmetric about 0");
  const std::size_t h = size() / 2;
  std::vector<double> p(points().begin() + h, points().end());
  std::vector<double> w(weights().begin() + h, weights().end());
  return Grid(std::make_shared<Data>(Data{std::move(p), std::move(w), 0.0, hi(), spacing(), false}));
}

Grid Grid::scaled(double s) const {
  if (!(s > 0.0)) throw ArgumentError("grid scale must be positive");
  auto d = std::make_shared<Data>(*d_);
  for (auto& x : d->points) x *= s;
  for (auto& w : d->weights) w *= s;
  d->lo *= s;
  d->hi *= s;
  d->spacing *= s;
  return Grid(std::move(d));
}

bool Grid::operator==(const Grid& o) const {
  if (d_ == o.d_) return true;
  return d_->lo == o.d_->lo && d_->hi == o.d_->hi && d_->points == o.d_->points &&
         d_->weights == o.d_->weights;
}

namespace {

struct Panel {
  double a, b;
  int nodes;
};

Grid assemble(const std::vector<Panel>& panels, double lo, double hi) {
  std::vector<double> p, w;
  double spacing = 0.0;
  for (const auto& pan : panels) {
    const auto [x, wt] = gauss_legendre(pan.nodes);
    const double m = 0.5 * (pan.a + pan.b), r = 0.5 * (pan.b - pan.a);
    for (int i = 0; i < pan.nodes; ++i) {
      p.push_back(m + r * x[i]);
      w.push_back(r * wt[i]);
    }
    spacing = std::max(spacing, (pan.b - pan.a) / pan.nodes);
  }
  return Grid(std::move(p), std::move(w), lo, hi, spacing);
}

// Mirror panels on [0, hi] to a grid on [-hi, hi]; nodes are exact negatives.
Grid assemble_symmetric(const std::vector<Panel>& pos, double hi) {
  std::vector<double> p, w;
  double spacing = 0.0;
  std::vector<double> pp, pw;
  for (const auto& pan : pos) {
    const auto [x, wt] = gauss_legendre(pan.nodes);
    const double m = 0.5 * (pan.a + pan.b), r = 0.5 * (pan.b - pan.a);
    for (int i = 0; i < pan.nodes; ++i) {
      pp.push_back(m + r * x[i]);
      pw.push_back(r * wt[i]);
    }
    spacing = std::max(spacing, (pan.b - pan.a) / pan.nodes);
  }
  for (std::size_t i = pp.size(); i-- > 0;) {
    p.push_back(-pp[i]);
    w.push_back(pw[i]);
  }
  p.insert(p.end(), pp.begin(), pp.end());
  w.insert(w.end(), pw.begin(), pw.end());
  return Grid(std::move(p), std::move(w), -hi, hi, spacing);
}

std::vector<Panel> graded_panels(double a, double b, int n_panels, int nodes, double g) {
  // graded toward a
  std::vector<Panel> out;
  double prev = a;
  for (int k = 1; k <= n_panels; ++k) {
    const double e = k == n_panels ? b : a + (b - a) * std::pow(static_cast<double>(k) / n_panels, g);
    out.push_back({prev, e, nodes});
    prev = e;
  }
  return out;
}

}  // namespace

Grid make_graded_grid(double lo, double hi, int n_panels, int nodes_per_panel, double grading) {
  if (!(lo < hi)) throw ArgumentError("make_graded_grid: lo must be < hi");
  if (n_panels < 1 || nodes_per_panel < 1) throw ArgumentError("make_graded_grid: counts must be positive");
  if (!(grading >= 1.0)) throw ArgumentError("make_graded_grid: grading exponent must be >= 1");
  if (lo < 0.0 && hi > 0.0) {
    if (lo != -hi) {
      // unequal sides: grade each half separately toward 0
      auto neg = graded_panels(0.0, -lo, n_panels, nodes_per_panel, grading);
      auto pos = graded_panels(0.0, hi, n_panels, nodes_per_panel, grading);
      std::vector<Panel> all;
      for (auto it = neg.rbegin(); it != neg.rend(); ++it) all.push_back({-it->b, -it->a, it->nodes});
      all.insert(all.end(), pos.begin(), pos.end());
      return assemble(all, lo, hi);
    }
    return assemble_symmetric(graded_panels(0.0, hi, n_panels, nodes_per_panel, grading), hi);
  }
  if (lo >= 0.0) return assemble(graded_panels(lo, hi, n_panels, nodes_per_panel, grading), lo, hi);
  auto neg = graded_panels(-hi, -lo, n_panels, nodes_per_panel, grading);
  std::vector<Panel> all;
  for (auto it = neg.rbegin(); it != neg.rend(); ++it) all.push_back({-it->b, -it->a, it->nodes});
  return assemble(all, lo, hi);
}

Grid make_panel_grid(std::span<const double> edges, int nodes_per_panel) {
  if (edges.size() < 2) throw ArgumentError("make_panel_grid: need at least two edges");
  std::vector<Panel> panels;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (!(edges[i] > edges[i - 1])) throw ArgumentError("make_panel_grid: edges must increase");
    panels.push_back({edges[i - 1], edges[i], nodes_per_panel});
  }
  return assemble(panels, edges.front(), edges.back());
}

Grid make_breakpoint_grid(double lo, double hi, std::span<const double> breaks, double max_width,
                          int nodes_per_panel, int min_nodes) {
  if (!(lo < hi)) throw ArgumentError("make_breakpoint_grid: lo must be < hi");
  if (!(max_width > 0.0)) throw ArgumentError("make_breakpoint_grid: max_width must be positive");
  const bool sym = lo < 0.0 && hi > 0.0;
  if (sym && lo != -hi) throw ArgumentError("make_breakpoint_grid: straddling grid must be symmetric");
  const double a = sym ? 0.0 : lo;
  std::vector<double> edges{a, hi};
  for (double b : breaks) {
    const double v = sym ? std::abs(b) : b;
    if (v > a && v < hi) edges.push_back(v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<Panel> panels;
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const double w = edges[i] - edges[i - 1];
    const int m = std::max(1, static_cast<int>(std::ceil(w / max_width - 1e-9)));
    const double pw = w / m;
    const int nodes = std::clamp(static_cast<int>(std::ceil(nodes_per_panel * pw / max_width - 1e-9)),
                                 std::min(min_nodes, nodes_per_panel), nodes_per_panel);
    for (int k = 0; k < m; ++k) {
      const double e0 = edges[i - 1] + w * k / m;
      const double e1 = k + 1 == m ? edges[i] : edges[i - 1] + w * (k + 1) / m;
      panels.push_back({e0, e1, nodes});
    }
  }
  if (sym) return assemble_symmetric(panels, hi);
  return assemble(panels, lo, hi);
}

}  // namespace dosc
