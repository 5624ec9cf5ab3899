#pragma once

#include <cstdint>
#include <random>

namespace dosc {

// Thread count used by the OpenMP kernels. Defaults to DUNKL_OSC_THREADS if set.
int num_threads();
void set_num_threads(int n);

// Counter-based seeding: stream `index` of `seed` is independent of call order.
std::uint64_t splitmix64(std::uint64_t x);
std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index);
// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

}  // namespace dosc
