#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dosc/corpus.hpp"
#include "dosc/report.hpp"
#include "dosc/special.hpp"
#include "dosc/weights.hpp"

namespace dosc {

inline constexpr const char* kLowerBoundNote = "empirical lower bound of the operator norm";

struct Resolution {
  int n = 512;  // nodes per corpus grid
  int nodes_per_panel = 16;
  std::string describe() const;
};

struct IdentityOptions {
  Resolution res;
  std::uint64_t seed = 7;
  std::vector<double> alphas{-0.5, 0.0, 0.5, 1.0};
  std::vector<double> cuts{0.5, 1.0, 2.0, 4.0};
  bool include_zero = true;
};

// Plancherel, inversion, Fourier reduction, two-route decomposition,
// partial-sum decomposition and projection algebra on the standard corpus;
// conjugation and transplantation on the away-from-zero corpus. One report
// per identity and (alpha, function). Failures are reported, not thrown.
std::vector<ExperimentReport> run_identity_suite(const IdentityOptions& opt);
bool all_passed(const std::vector<ExperimentReport>& reports);

// Ratio sweeps refuse to run unless the identity suite passed at their
// resolution and seed. record_identity_gate stores an outcome computed
// elsewhere; require_identity_gate runs the suite when nothing is recorded
// and throws NumericalFailure when it failed.
void record_identity_gate(const Resolution& res, std::uint64_t seed, bool passed);
void require_identity_gate(const Resolution& res, std::uint64_t seed);

struct OscillationOptions {
  Resolution res;
  int J = 8;
  int n_sequences = 100;
  std::uint64_t seed = 7;
  bool dyadic_only = false;
  std::vector<double> dilations{0.5, 2.0};
  std::vector<std::string> functions;  // corpus names; empty means all
};

// Ratio ||max sampled oscillation|| / ||f|| in L^p(|x|^{beta+2 alpha+1}),
// maximized over the corpus, at N and 2N and under dilation.
// Passes when finite, within a factor 2 across resolutions and within 1%
// under dilation.
std::vector<ExperimentReport> oscillation_ratio_sweep(const std::vector<NormSpec>& specs,
                                                      const OscillationOptions& opt);

struct PrestiniOptions {
  std::vector<int> ladder{512, 1024};
  int nodes_per_panel = 16;
  double half_width = 5.0;
  std::uint64_t seed = 7;
};

// Empirical C_alpha = max over corpus, t-grid and nodes of
// |Hankel partial sum| / majorant, for each resolution of the ladder.
std::vector<ExperimentReport> prestini_constant_sweep(const std::vector<Order>& alphas,
                                                      const PrestiniOptions& opt);

// Even multipliers m_k(xi) = m_k(|xi|), bounded by 1.
struct MultiplierFamily {
  struct Member {
    std::string label;
    std::function<double(double)> m;  // evaluated at |xi|
  };
  std::vector<Member> members;
  std::vector<double> breaks;  // discontinuities, aligned with frequency panel edges

  static MultiplierFamily identity();
  // 1 on +-[lo_k, hi_k); intervals must be disjoint.
  static MultiplierFamily indicators(const std::vector<std::pair<double, double>>& intervals);
  // 1_{+-[2^k, 2^{k+1})}, k_lo <= k <= k_hi.
  static MultiplierFamily dyadic_indicators(int k_lo, int k_hi);
};

struct TransferenceOptions {
  std::vector<int> ladder{512, 1024};
  int nodes_per_panel = 16;
  std::uint64_t seed = 7;
  std::vector<std::string> functions;  // corpus names; empty means all
};

// Square-function ratios for the family: the Fourier side on L^p(|x|^beta),
// and the Hankel side of order (n-2)/2 on L^p(x^{beta*+n-1}) for radial
// profiles, taken as the even part of each corpus function on x > 0. At
// p = 2 and beta = 0 both are computed on the frequency side by Plancherel.
// ArgumentError unless -1 < beta < p-1.
ExperimentReport transference_demo(const MultiplierFamily& family, const NormSpec& spec, int dimension,
                                   const TransferenceOptions& opt = {});

struct CarlesonOptions {
  std::vector<int> ladder{512, 1024};
  int nodes_per_panel = 16;
  std::uint64_t seed = 7;
  std::vector<std::string> functions;
};

// Per weight: max corpus ratio ||C_* f|| / ||f|| in L^p(w |x|^{2 alpha+1}),
// with refinement stability.
std::vector<ExperimentReport> weighted_carleson_sweep(const std::vector<Weight>& weights, double p, Order alpha,
                                                      const CarlesonOptions& opt = {});
// 5x5 lattice of w_ab weights straddling -(2 alpha+2) < a < 2 alpha+2, -1 < b < 1.
std::vector<Weight> bcv_lattice(Order alpha);
bool in_bcv_rectangle(const Weight& w, Order alpha);

// Conjecture checker with no pass/fail semantics.
ExperimentReport measure_adapted_experiment(const Weight& w, double p, Order alpha);

}  // namespace dosc
