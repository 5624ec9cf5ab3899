#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace dosc {

// Gauss-Legendre nodes and weights on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

// Quadrature grid: strictly increasing nodes with positive weights over [lo, hi].
// Shared immutable storage, cheap to copy.
class Grid {
 public:
  // spacing <= 0 infers the effective node spacing from the largest node gap.
  Grid(std::vector<double> points, std::vector<double> weights, double lo, double hi,
       double spacing = 0.0);

  const std::vector<double>& points() const { return d_->points; }
  const std::vector<double>& weights() const { return d_->weights; }
  std::size_t size() const { return d_->points.size(); }
  double lo() const { return d_->lo; }
  double hi() const { return d_->hi; }
  double max_abs() const;
  // Largest panel width over nodes in that panel; drives the resolution guard.
  double spacing() const { return d_->spacing; }
  bool symmetric() const { return d_->symmetric; }

  // Nodes > 0 of a symmetric grid (or the grid itself when lo >= 0), support [0, hi].
  Grid positive_half() const;
  // x -> s*x, weights scaled by s (s > 0).
  Grid scaled(double s) const;

  bool operator==(const Grid& o) const;

 private:
  struct Data {
    std::vector<double> points, weights;
    double lo, hi, spacing;
    bool symmetric;
  };
  explicit Grid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

// Composite Gauss-Legendre grid with panel edges graded as (k/n_panels)^grading
// toward 0 (or toward the end nearest 0). If lo < 0 < hi the grid is symmetric
// with n_panels panels on each side.
Grid make_graded_grid(double lo, double hi, int n_panels, int nodes_per_panel, double grading);

// Composite grid on the given panel edges with a fixed node count per panel.
Grid make_panel_grid(std::span<const double> edges, int nodes_per_panel);

// Panels break at every value of `breaks` inside (lo, hi), subdivided to width
// <= max_width. Narrow panels get proportionally fewer nodes, at least min_nodes.
// lo < 0 < hi requires lo == -hi and mirrors the breaks.
Grid make_breakpoint_grid(double lo, double hi, std::span<const double> breaks, double max_width,
                          int nodes_per_panel, int min_nodes = 8);

}  // namespace dosc
