#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>
#include <vector>

#include "dosc/corpus.hpp"
#include "dosc/errors.hpp"
#include "dosc/parallel.hpp"
#include "dosc/projections.hpp"
#include "test_util.hpp"

using namespace dosc;
using testutil::l2_norm;
using testutil::max_abs;
using testutil::max_abs_diff;

namespace {

const std::vector<double> kCuts{0.5, 1.0, 2.0, 4.0};

// (1/pi) int f(y) sin(t(x-y))/(x-y) dy by the grid rule.
std::vector<cplx> dirichlet(const SampledFn& f, double t) {
  const auto& y = f.grid().points();
  const auto& w = f.grid().weights();
  std::vector<cplx> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double d = y[i] - y[j];
      s += w[j] * f[j] * (d == 0.0 ? t : std::sin(t * d) / d);
    }
    out[i] = s / std::numbers::pi;
  }
  return out;
}

SampledFn even_extension(const SampledFn& half, const Grid& full) {
  const std::size_t h = full.size() / 2;
  std::vector<cplx> v(full.size());
  for (std::size_t i = 0; i < full.size(); ++i) v[i] = half[i >= h ? i - h : h - 1 - i];
  return SampledFn(full, std::move(v), Domain::full_line);
}

}  // namespace

TEST_CASE("threshold sequences") {
  CHECK_THROWS_AS(ThresholdSeq({}), ArgumentError);
  CHECK_THROWS_AS(ThresholdSeq({1.0, 1.0}), ArgumentError);
  CHECK_THROWS_AS(ThresholdSeq({-1.0, 1.0}), ArgumentError);
  const ThresholdSeq d = ThresholdSeq::dyadic(-3, 5);
  CHECK(d.size() == 9);
  CHECK(d.is_dyadic());
  CHECK(d[0] == 0.125);
  CHECK(d[8] == 32.0);
  const ThresholdSeq g = ThresholdSeq::geometric_with_dyadic(0.3, 10.0, 12);
  CHECK_FALSE(g.is_dyadic());
  for (double t : {0.5, 1.0, 2.0, 4.0, 8.0}) CHECK(g.index_of(t) >= 0);
  CHECK(g.index_of(3.0) == -1);
  CHECK(is_dyadic(0.25));
  CHECK_FALSE(is_dyadic(0.3));
  const ThresholdSeq s = d.scaled(2.0);
  CHECK(s[0] == 0.25);
}

TEST_CASE("partial sums of zero are zero") {
  const SampledFn z = zero_entry().sample(64);
  CHECK(max_abs(dunkl_partial_sum(Order(0.5), z, 1.0)) == 0.0);
  CHECK(max_abs(fourier_partial_sum(z, 1.0)) == 0.0);
  const SampledFn zh = restrict_to_half(z);
  CHECK(max_abs(hankel_partial_sum(Order(0.5), zh, 1.0)) == 0.0);
  CHECK(max_abs(radial_partial_sum(3, zh, 1.0)) == 0.0);
}

TEST_CASE("t at the band edge recovers f") {
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.name);
    const SampledFn f = e.sample(512);
    const Grid G = default_frequency_grid(f.grid());
    const double W = G.max_abs();
    for (double a : {-0.5, 0.0, 1.0}) {
      const double nf = l2_norm(f, a);
      CHECK(l2_norm(dunkl_partial_sum(Order(a), f, W, G) - f, a) / nf <= 1e-5);
    }
    // even part: smooth at the origin
    const SampledFn fh = even_odd_split(f).first;
    const Grid Gh = G.positive_half();
    if (l2_norm(fh, 0.5) > 0.0)
      CHECK(l2_norm(hankel_partial_sum(Order(0.5), fh, W, Gh) - fh, 0.5) / l2_norm(fh, 0.5) <= 1e-5);
    CHECK_THROWS_AS(dunkl_partial_sum(Order(0.0), f, 2.0 * W, G), ResolutionError);
  }
}

TEST_CASE("alpha = -1/2: frequency cut agrees with the Dirichlet kernel") {
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.name);
    const SampledFn f = e.sample(256);
    const Grid G = default_frequency_grid(f.grid(), kCuts);
    for (double t : kCuts) {
      const SampledFn S = dunkl_partial_sum(Order(-0.5), f, t, G);
      const auto ref = dirichlet(f, t);
      CHECK(max_abs_diff(std::span<const cplx>(S.values()), ref) <= 1e-7);
      CHECK(max_abs_diff(fourier_partial_sum(f, t, G), S) <= 1e-9);
    }
  }
}

TEST_CASE("partial sum decomposition into Hankel pieces") {
  for (const auto& e : standard_corpus()) {
    CAPTURE(e.name);
    const SampledFn f = e.sample(256);
    const Grid G = default_frequency_grid(f.grid(), kCuts);
    const Grid Gh = G.positive_half();
    const auto [fe, fo] = even_odd_split(f);
    std::vector<cplx> ov(fo.size());
    for (std::size_t j = 0; j < fo.size(); ++j) ov[j] = fo[j] / fo.grid().points()[j];
    const SampledFn fo_y(fo.grid(), ov, Domain::half_line);
    for (double a : {-0.5, 0.0, 1.0}) {
      for (double t : kCuts) {
        const SampledFn S = dunkl_partial_sum(Order(a), f, t, G);
        const SampledFn A = hankel_partial_sum(Order(a), fe, t, Gh);
        const SampledFn B = hankel_partial_sum(Order(a + 1.0), fo_y, t, Gh);
        const std::size_t h = f.size() / 2;
        double m = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          const std::size_t k = i >= h ? i - h : h - 1 - i;
          m = std::max(m, std::abs(A[k] + f.grid().points()[i] * B[k] - S[i]));
        }
        CHECK(m <= 1e-8);
        CHECK(max_abs_diff(dunkl_partial_sum(Order(a), f, t, G, Route::direct_kernel), S) <= 1e-8);
      }
    }
  }
}

TEST_CASE("radial partial sums") {
  const auto corpus = standard_corpus();
  SUBCASE("dimension 1 is the even Fourier partial sum") {
    const SampledFn f = corpus[1].sample(256);
    const SampledFn fh = restrict_to_half(f);
    const SampledFn feven = even_extension(fh, f.grid());
    const Grid G = default_frequency_grid(f.grid(), kCuts);
    for (double t : kCuts) {
      const SampledFn R = radial_partial_sum(1, fh, t, G.positive_half());
      CHECK(max_abs_diff(R, restrict_to_half(fourier_partial_sum(feven, t, G))) <= 1e-8);
    }
  }
  SUBCASE("dimension 3 is a projection") {
    const SampledFn fh = restrict_to_half(corpus[0].sample(256));
    const Grid G = default_frequency_grid(fh.grid(), kCuts);
    for (double s : kCuts)
      for (double t : kCuts) {
        const SampledFn St = radial_partial_sum(3, fh, t, G);
        CHECK(max_abs_diff(radial_partial_sum(3, St, s, G), radial_partial_sum(3, fh, std::min(s, t), G)) <= 1e-8);
      }
  }
  CHECK_THROWS_AS(radial_partial_sum(0, restrict_to_half(corpus[0].sample(64)), 1.0), ArgumentError);
}

TEST_CASE("projection algebra and L2 properties") {
  for (double a : {-0.5, 0.0, 0.5, 1.0}) {
    for (std::size_t idx : {0u, 3u, 5u, 7u, 10u}) {
      const CorpusEntry e = standard_corpus()[idx];
      CAPTURE(a);
      CAPTURE(e.name);
      const SampledFn f = e.sample(256);
      const Grid G = default_frequency_grid(f.grid(), kCuts);
      const PartialSumFamily fam = build_family(Order(a), f, ThresholdSeq(kCuts), G);
      const double nf = l2_norm(f, a);
      double prev = 0.0;
      for (std::size_t r = 0; r < kCuts.size(); ++r) {
        const SampledFn St = fam.row(r);
        const double n = l2_norm(St, a);
        CHECK(n <= nf * (1.0 + 1e-6));
        CHECK(n >= prev - 1e-8);
        prev = n;
        for (std::size_t q = 0; q < kCuts.size(); ++q) {
          const SampledFn SsSt = dunkl_partial_sum(Order(a), St, kCuts[q], G);
          CHECK(max_abs_diff(SsSt, fam.row(std::min(q, r))) <= 1e-8);
        }
      }
    }
  }
}

TEST_CASE("build_family") {
  const SampledFn f = standard_corpus()[3].sample(256);
  const Grid G = default_frequency_grid(f.grid(), kCuts);
  SUBCASE("single t equals the partial sum") {
    const PartialSumFamily fam = build_family(Order(0.5), f, ThresholdSeq({2.0}), G);
    CHECK(fam.rows() == 1);
    CHECK(fam.cols() == f.size());
    CHECK(max_abs_diff(fam.row(0), dunkl_partial_sum(Order(0.5), f, 2.0, G)) == 0.0);
  }
  SUBCASE("dyadic shape") {
    const SampledFn g = standard_corpus()[3].sample(512);
    const PartialSumFamily fam = build_family(Order(0.5), g, ThresholdSeq::dyadic(-3, 5));
    CHECK(fam.rows() == 9);
    CHECK(fam.cols() == g.size());
  }
  SUBCASE("largest t is nearest to f") {
    for (const auto& e : standard_corpus()) {
      const SampledFn h = e.sample(256);
      const double W = resolvable_band(h.grid());
      const ThresholdSeq ts = ThresholdSeq::default_for_band(W);
      const PartialSumFamily fam = build_family(Order(0.0), h, ts);
      const double last = l2_norm(fam.row(fam.rows() - 1) - h, 0.0);
      for (std::size_t r = 0; r + 1 < fam.rows(); ++r) CHECK(last <= l2_norm(fam.row(r) - h, 0.0) + 1e-12);
    }
  }
  SUBCASE("half-line input gives Hankel rows") {
    const SampledFn fh = restrict_to_half(f);
    const Grid Gh = G.positive_half();
    const PartialSumFamily fam = build_family(Order(1.0), fh, ThresholdSeq(kCuts), Gh);
    CHECK(fam.kind().kind == TransformKind::Kind::hankel);
    for (std::size_t r = 0; r < kCuts.size(); ++r)
      CHECK(max_abs_diff(fam.row(r), hankel_partial_sum(Order(1.0), fh, kCuts[r], Gh)) <= 1e-14);
  }
  SUBCASE("csv has one column pair per t") {
    const PartialSumFamily fam = build_family(Order(0.5), f, ThresholdSeq(kCuts), G);
    std::ostringstream os;
    write_family_csv(fam, os);
    std::istringstream is(os.str());
    std::string line;
    std::size_t data = 0;
    std::string header;
    while (std::getline(is, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (header.empty()) {
        header = line;
        continue;
      }
      ++data;
    }
    CHECK(data == f.size());
    CHECK(std::count(header.begin(), header.end(), ',') == static_cast<long>(2 * kCuts.size()));
  }
}

TEST_CASE("frequency cut keeps |node| <= t") {
  const Grid g = make_graded_grid(-4.0, 4.0, 4, 4, 1.0);
  const SampledFn one = SampledFn::sample(g, Domain::full_line, [](double) { return 1.0; });
  const SampledFn c = frequency_cut(one, 2.0);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(c[i] == (std::abs(g.points()[i]) <= 2.0 ? cplx(1.0) : cplx(0.0)));
}

TEST_CASE("families do not depend on the thread count") {
  const SampledFn f = standard_corpus()[10].sample(256);
  const ThresholdSeq ts = ThresholdSeq::default_for_band(resolvable_band(f.grid()));
  set_num_threads(1);
  const PartialSumFamily ref = build_family(Order(0.5), f, ts);
  for (int t : {2, 4}) {
    set_num_threads(t);
    const PartialSumFamily fam = build_family(Order(0.5), f, ts);
    bool same = true;
    for (std::size_t r = 0; r < fam.rows(); ++r)
      same = same && std::memcmp(fam.row_values(r).data(), ref.row_values(r).data(), fam.cols() * sizeof(cplx)) == 0;
    CHECK(same);
  }
  set_num_threads(0);
}
