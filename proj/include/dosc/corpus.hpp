#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dosc/sampled_fn.hpp"

namespace dosc {

// A test function with compact (or 12-sigma truncated) support.
struct CorpusEntry {
  std::string name;
  std::function<double(double)> fn;
  double lo, hi;  // support

  double half_width() const;
  // Symmetric uniform-panel grid on [-L, L], L = half_width(), n_nodes total.
  Grid grid(int n_nodes, int nodes_per_panel = 16) const;
  SampledFn sample(int n_nodes, int nodes_per_panel = 16) const;
  SampledFn sample_on(const Grid& g, Domain d = Domain::full_line) const;
};

// Twelve functions: bumps, x*bump, truncated Gaussians, seeded random modes.
std::vector<CorpusEntry> standard_corpus(std::uint64_t seed = 7);

// Bumps with support in {0.2 <= |x| <= 5}.
std::vector<CorpusEntry> away_corpus();

// Zero function on [-1, 1].
CorpusEntry zero_entry();

// "bump:c,r", "gaussian:c,s", "xbump:c,r" or a corpus entry name.
CorpusEntry parse_function_spec(const std::string& spec, std::uint64_t seed = 7);

}  // namespace dosc
