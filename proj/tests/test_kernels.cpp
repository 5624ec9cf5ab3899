#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <cstring>
#include <vector>

#include "dosc/kernels.hpp"
#include "dosc/parallel.hpp"

using namespace dosc;
using kernels::cplx;

namespace {

struct Data {
  std::vector<double> y, x;
  std::vector<cplx> v;
};

Data make_data(std::size_t ny, std::size_t nx, std::uint64_t seed, bool signed_x = false) {
  Data d;
  auto rng = make_rng(seed, 0);
  for (std::size_t j = 0; j < ny; ++j) {
    d.y.push_back(0.01 + 20.0 * uniform01(rng));
    d.v.emplace_back(uniform01(rng) - 0.5, uniform01(rng) - 0.5);
  }
  for (std::size_t i = 0; i < nx; ++i) d.x.push_back((signed_x ? 2.0 * uniform01(rng) - 1.0 : uniform01(rng)) * 3.0);
  return d;
}

bool bitwise_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

double boost_normalized(double a, double u) {
  if (u == 0.0) return std::pow(0.5, a) / std::tgamma(a + 1.0);
  return boost::math::cyl_bessel_j(a, u) / std::pow(u, a);
}

}  // namespace

TEST_CASE("bessel prefix sums match an independent oracle") {
  const Data d = make_data(300, 40, 1);
  const std::vector<std::size_t> cuts{0, 17, 150, 300};
  for (double a : {-0.5, 0.0, 0.75, 2.0}) {
    std::vector<cplx> out(cuts.size() * d.x.size());
    kernels::bessel_prefix_serial(kernels::Bessel::normalized, Order(a), d.y, d.v, d.x, cuts, out);
    std::vector<cplx> sq(cuts.size() * d.x.size());
    kernels::bessel_prefix_serial(kernels::Bessel::sqrt, Order(a), d.y, d.v, d.x, cuts, sq);
    for (std::size_t c = 0; c < cuts.size(); ++c)
      for (std::size_t i = 0; i < d.x.size(); ++i) {
        cplx ref = 0.0, ref_sq = 0.0;
        double scale = 0.0;
        for (std::size_t j = 0; j < cuts[c]; ++j) {
          const double u = d.x[i] * d.y[j];
          ref += boost_normalized(a, u) * d.v[j];
          ref_sq += std::sqrt(u) * boost::math::cyl_bessel_j(a, u) * d.v[j];
          scale += std::abs(d.v[j]);
        }
        CHECK(std::abs(out[c * d.x.size() + i] - ref) <= 1e-12 * (scale + 1.0));
        CHECK(std::abs(sq[c * d.x.size() + i] - ref_sq) <= 1e-12 * (scale + 1.0) * 10.0);
      }
  }
}

TEST_CASE("fourier kernel matches direct exponential sums") {
  const Data d = make_data(200, 30, 2, true);
  std::vector<cplx> out(d.x.size());
  kernels::fourier_serial(-1.0, d.y, d.v, d.x, out);
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    cplx ref = 0.0;
    for (std::size_t j = 0; j < d.y.size(); ++j) ref += std::polar(1.0, -d.x[i] * d.y[j]) * d.v[j];
    CHECK(std::abs(out[i] - ref) <= 1e-12);
  }
}

TEST_CASE("direct dunkl kernel: closed form at alpha = -1/2 and boost oracle") {
  const Data d = make_data(150, 25, 3, true);
  std::vector<cplx> out(d.x.size()), ex(d.x.size());
  // at alpha = -1/2 the kernel is e^{-i u} / sqrt(2 pi)
  kernels::dunkl_direct_serial(Order(-0.5), d.y, d.v, d.x, out);
  kernels::fourier_serial(-1.0, d.y, d.v, d.x, ex);
  for (std::size_t i = 0; i < d.x.size(); ++i) CHECK(std::abs(out[i] - ex[i] / std::sqrt(2.0 * M_PI)) <= 1e-12);

  const double a = 1.25;
  kernels::dunkl_direct_serial(Order(a), d.y, d.v, d.x, out);
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    cplx ref = 0.0;
    for (std::size_t j = 0; j < d.y.size(); ++j) {
      const double u = d.x[i] * d.y[j];
      ref += 0.5 * cplx(boost_normalized(a, std::abs(u)), -u * boost_normalized(a + 1.0, std::abs(u))) * d.v[j];
    }
    CHECK(std::abs(out[i] - ref) <= 1e-12);
  }
}

TEST_CASE("parallel kernels equal the serial reference bit for bit") {
  const Data d = make_data(700, 333, 4, true);
  Data pos = d;
  for (auto& x : pos.x) x = std::abs(x);
  const std::vector<std::size_t> cuts{3, 64, 64, 500, 700};
  for (int threads : {1, 2, 3, 4, 7}) {
    set_num_threads(threads);
    for (auto kind : {kernels::Bessel::normalized, kernels::Bessel::sqrt})
      for (double a : {-0.5, 0.0, 1.5, 0.3}) {
        std::vector<cplx> s(cuts.size() * pos.x.size()), p(s.size());
        kernels::bessel_prefix_serial(kind, Order(a), pos.y, pos.v, pos.x, cuts, s);
        kernels::bessel_prefix_parallel(kind, Order(a), pos.y, pos.v, pos.x, cuts, p);
        CHECK(bitwise_equal(s, p));
      }
    std::vector<cplx> s(d.x.size()), p(d.x.size());
    kernels::fourier_serial(1.0, d.y, d.v, d.x, s);
    kernels::fourier_parallel(1.0, d.y, d.v, d.x, p);
    CHECK(bitwise_equal(s, p));
    kernels::dunkl_direct_serial(Order(0.5), d.y, d.v, d.x, s);
    kernels::dunkl_direct_parallel(Order(0.5), d.y, d.v, d.x, p);
    CHECK(bitwise_equal(s, p));
  }
  set_num_threads(0);
}

TEST_CASE("prefix rows are partial sums of one another") {
  const Data d = make_data(100, 10, 5);
  const std::vector<std::size_t> full{100}, parts{40, 100};
  std::vector<cplx> a(d.x.size()), b(2 * d.x.size());
  kernels::bessel_prefix_serial(kernels::Bessel::normalized, Order(0.0), d.y, d.v, d.x, full, a);
  kernels::bessel_prefix_serial(kernels::Bessel::normalized, Order(0.0), d.y, d.v, d.x, parts, b);
  for (std::size_t i = 0; i < d.x.size(); ++i) CHECK(a[i] == b[d.x.size() + i]);
}

TEST_CASE("counter-based rng") {
  auto a = make_rng(7, 3), b = make_rng(7, 3), c = make_rng(7, 4);
  const double ua = uniform01(a), ub = uniform01(b), uc = uniform01(c);
  CHECK(ua == ub);
  CHECK(ua != uc);
  for (int k = 0; k < 1000; ++k) {
    const double u = uniform01(a);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
