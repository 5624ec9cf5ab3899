#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <sstream>

#include "dosc/corpus.hpp"
#include "dosc/errors.hpp"
#include "dosc/grid.hpp"
#include "dosc/sampled_fn.hpp"

using namespace dosc;

namespace {

double total_weight(const Grid& g) {
  double s = 0.0;
  for (double w : g.weights()) s += w;
  return s;
}

// Independent oracle: tanh-sinh quadrature of the bump.
double bump_integral(double c, double r) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate([&](double x) { return Bump(c, r)(x); }, c - r, c + r);
}

}  // namespace

TEST_CASE("graded grid examples") {
  const Grid g = make_graded_grid(0.0, 1.0, 8, 16, 2.0);
  CHECK(g.size() == 128);
  CHECK(std::abs(total_weight(g) - 1.0) <= 1e-14);

  // int_0^1 x^{-1/2} dx = 2. The first panel [0, n^{-g}] limits the accuracy
  // to about 4e-4 at (16 panels, g = 3); it improves with grading and panels.
  auto inv_sqrt_error = [](int panels, double grading) {
    const Grid h = make_graded_grid(0.0, 1.0, panels, 16, grading);
    double s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) s += h.weights()[i] / std::sqrt(h.points()[i]);
    return std::abs(s - 2.0) / 2.0;
  };
  CHECK(inv_sqrt_error(16, 3.0) <= 5e-4);
  CHECK(inv_sqrt_error(16, 4.0) < inv_sqrt_error(16, 3.0));
  CHECK(inv_sqrt_error(32, 3.0) < inv_sqrt_error(16, 3.0));
  CHECK(inv_sqrt_error(32, 5.0) <= 1e-5);

  const Grid sym = make_graded_grid(-1.0, 1.0, 8, 16, 2.0);
  CHECK(sym.symmetric());
  double m = 0.0;
  for (std::size_t i = 0; i < sym.size(); ++i) m += sym.weights()[i] * sym.points()[i];
  CHECK(std::abs(m) <= 1e-14);
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(sym.points()[i] == -sym.points()[sym.size() - 1 - i]);
}

TEST_CASE("grid invariants") {
  for (double grading : {1.0, 2.0, 3.5}) {
    const Grid g = make_graded_grid(-3.0, 3.0, 5, 12, grading);
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g.weights()[i] > 0.0);
      CHECK(g.points()[i] != 0.0);
      if (i > 0) CHECK(g.points()[i] > g.points()[i - 1]);
    }
    CHECK(std::abs(total_weight(g) - 6.0) <= 6e-12);
  }
  CHECK_THROWS_AS(make_graded_grid(1.0, 1.0, 4, 8, 1.0), ArgumentError);
  CHECK_THROWS_AS(make_graded_grid(2.0, 1.0, 4, 8, 1.0), ArgumentError);
  // weights that do not reproduce the support length
  CHECK_THROWS_AS(Grid({0.25, 0.75}, {0.5, 0.4}, 0.0, 1.0), ArgumentError);
  CHECK_THROWS_AS(Grid({0.75, 0.25}, {0.5, 0.5}, 0.0, 1.0), ArgumentError);
}

TEST_CASE("breakpoint grid puts panel edges at the breaks") {
  const std::vector<double> breaks{0.5, 1.3};
  const Grid g = make_breakpoint_grid(-2.0, 2.0, breaks, 0.25, 16);
  CHECK(g.symmetric());
  // integral of the indicator of [0.5, 1.3] is exact when the breaks are panel edges
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.points()[i];
    if (x > 0.5 && x < 1.3) s += g.weights()[i];
  }
  CHECK(std::abs(s - 0.8) <= 1e-13);
}

TEST_CASE("integrate") {
  const Grid g = make_graded_grid(-1.0, 1.0, 8, 16, 1.0);
  CHECK(integrate(SampledFn::zero(g, Domain::full_line)) == cplx(0.0));
  const auto odd = SampledFn::sample(g, Domain::full_line, [](double x) { return x * std::exp(x * x); });
  CHECK(std::abs(integrate(odd)) <= 1e-13);

  const double oracle = bump_integral(0.0, 1.0);
  const auto b = SampledFn::sample(make_graded_grid(-1.0, 1.0, 16, 16, 1.0), Domain::full_line, Bump(0.0, 1.0));
  CHECK(std::abs(integrate(b).real() - oracle) / oracle <= 1e-8);
}

TEST_CASE("refinement convergence of bump integrals") {
  for (auto [c, r] : {std::pair{0.0, 1.0}, {0.3, 0.7}, {-1.0, 2.0}}) {
    const Bump b(c, r);
    const double L = std::abs(c) + r;
    const double i1 = integrate(SampledFn::sample(make_graded_grid(-L, L, 16, 16, 1.0), Domain::full_line, b)).real();
    const double i2 = integrate(SampledFn::sample(make_graded_grid(-L, L, 32, 16, 1.0), Domain::full_line, b)).real();
    CHECK(std::abs(i2 - i1) / std::abs(i2) <= 1e-10);
    CHECK(std::abs(i2 - bump_integral(c, r)) / std::abs(i2) <= 1e-10);
  }
}

TEST_CASE("even odd split") {
  const Grid g = make_graded_grid(-2.0, 2.0, 4, 8, 1.0);
  {
    const auto [fe, fo] = even_odd_split(SampledFn::sample(g, Domain::full_line, [](double x) { return x * x; }));
    CHECK(fe.domain() == Domain::half_line);
    for (std::size_t i = 0; i < fe.size(); ++i) {
      const double x = fe.grid().points()[i];
      CHECK(fe[i] == cplx(x * x));
      CHECK(fo[i] == cplx(0.0));
    }
  }
  {
    const auto [fe, fo] = even_odd_split(SampledFn::sample(g, Domain::full_line, [](double x) { return x * x * x; }));
    for (std::size_t i = 0; i < fe.size(); ++i) {
      const double x = fe.grid().points()[i];
      CHECK(fe[i] == cplx(0.0));
      CHECK(fo[i] == cplx(x * x * x));
    }
  }
  {
    auto f = [](double x) { return std::exp(-x * x) * (1.0 + x); };
    const auto F = SampledFn::sample(g, Domain::full_line, f);
    const auto [fe, fo] = even_odd_split(F);
    for (std::size_t i = 0; i < fe.size(); ++i) {
      const double x = fe.grid().points()[i];
      CHECK(std::abs(fe[i] - std::exp(-x * x)) <= 1e-15);
      CHECK(std::abs(fo[i] - x * std::exp(-x * x)) <= 1e-15);
    }
  }
  // reconstruction is exact at every node
  const auto F = SampledFn::sample(g, Domain::full_line, [](double x) { return cplx(std::sin(3 * x) + x * x, std::cos(x) * x); });
  const auto [fe, fo] = even_odd_split(F);
  const std::size_t h = F.size() / 2;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const std::size_t k = i >= h ? i - h : h - 1 - i;
    const double sgn = i >= h ? 1.0 : -1.0;
    const cplx rec = fe[k] + sgn * fo[k];
    CHECK(std::abs(rec - F[i]) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(F[i]) + 1e-300);
  }
  CHECK_THROWS_AS(even_odd_split(SampledFn::zero(make_graded_grid(-1.0, 2.0, 4, 8, 1.0), Domain::full_line)),
                  ArgumentError);
}

TEST_CASE("multiply_power") {
  const Grid g = make_graded_grid(-3.0, 3.0, 6, 8, 1.0);
  const auto f = SampledFn::sample(g, Domain::full_line, [](double x) { return std::cos(x) + 0.5; });
  const auto same = multiply_power(f, {0.0});
  CHECK(same.values() == f.values());

  const Grid p = make_graded_grid(1.0, 2.0, 2, 8, 1.0);
  const auto one = SampledFn::sample(p, Domain::half_line, [](double) { return 1.0; });
  const auto x = multiply_power(one, {1.0});
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(x[i] == cplx(p.points()[i]));

  for (double a : {-1.5, -0.25, 0.7, 2.0}) {
    const auto back = multiply_power(multiply_power(f, {a}), {-a});
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(back[i] - f[i]) <= 4e-16 * std::abs(f[i]));
    const auto ab = multiply_power(multiply_power(f, {a}), {0.3});
    const auto sum = multiply_power(f, {a + 0.3});
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(ab[i] - sum[i]) <= 8 * std::numeric_limits<double>::epsilon() * std::abs(sum[i]));
  }

  // a grid that contains 0 (read from a file, say)
  const Grid z({-0.5, 0.0, 0.5}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, -0.5, 0.5);
  const SampledFn nz(z, {1.0, 1.0, 1.0}, Domain::full_line);
  CHECK_THROWS_AS(multiply_power(nz, {-1.0}), DomainError);
  const SampledFn vz(z, {1.0, 0.0, 1.0}, Domain::full_line);
  const auto ok = multiply_power(vz, {-1.0});
  CHECK(ok[1] == cplx(0.0));
  CHECK(ok[0] == cplx(2.0));
}

TEST_CASE("bump generator") {
  CHECK(Bump(0.0, 1.0)(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(Bump(0.0, 1.0)(1.0) == 0.0);
  CHECK(Bump(0.0, 1.0)(-1.0) == 0.0);
  const Bump b(3.0, 2.0);
  CHECK(b.lo() == 1.0);
  CHECK(b.hi() == 5.0);
  CHECK(b(0.999) == 0.0);
  CHECK(b(1.1) > 0.0);
  CHECK_THROWS_AS(Bump(0.0, 0.0), ArgumentError);
}

TEST_CASE("corpus") {
  const auto c = standard_corpus(7);
  CHECK(c.size() == 12);
  for (const auto& e : c) {
    const SampledFn f = e.sample(512);
    CHECK(f.size() == 512);
    CHECK(f.grid().symmetric());
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    CHECK(m > 0.0);
  }
  // same seed, same functions; different seed, different random modes
  const auto c2 = standard_corpus(7), c3 = standard_corpus(8);
  CHECK(c2[9].fn(0.3) == c[9].fn(0.3));
  CHECK(c3[9].fn(0.3) != c[9].fn(0.3));
  for (const auto& e : away_corpus()) {
    CHECK(e.lo >= -5.0);
    CHECK(e.hi <= 5.0);
    for (double x = -0.19; x <= 0.19; x += 0.01) CHECK(e.fn(x) == 0.0);
  }
  CHECK(parse_function_spec("bump:3,2").lo == 1.0);
  CHECK(parse_function_spec("gaussian:0,1").fn(0.0) == 1.0);
  CHECK(parse_function_spec("xbump:0,1").fn(0.5) == doctest::Approx(0.5 * Bump(0, 1)(0.5)));
  CHECK(parse_function_spec(c[4].name).name == c[4].name);
  CHECK_THROWS_AS(parse_function_spec("nonsense"), ArgumentError);
}

TEST_CASE("csv roundtrip is exact") {
  const auto f = SampledFn::sample(make_graded_grid(-2.0, 2.0, 4, 8, 2.0), Domain::full_line,
                                   [](double x) { return cplx(std::exp(-x * x) / 3.0, x / 7.0); });
  std::stringstream ss;
  write_csv(f, ss);
  CHECK(ss.str().rfind("# dunkl-osc sampledfn v1 domain=full", 0) == 0);
  const SampledFn g = read_csv(ss);
  CHECK(g.domain() == Domain::full_line);
  CHECK(g.grid().lo() == f.grid().lo());
  CHECK(g.grid().hi() == f.grid().hi());
  CHECK(g.grid().spacing() == f.grid().spacing());
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(g.grid().points()[i] == f.grid().points()[i]);
    CHECK(g.grid().weights()[i] == f.grid().weights()[i]);
    CHECK(g[i] == f[i]);
  }
  std::stringstream bad("x,weight,re,im\n0,1,0,0\n");
  CHECK_THROWS_AS(read_csv(bad), ArgumentError);
}

TEST_CASE("arithmetic requires a common grid") {
  const Grid a = make_graded_grid(-1.0, 1.0, 2, 8, 1.0), b = make_graded_grid(-1.0, 1.0, 4, 8, 1.0);
  CHECK_THROWS_AS(SampledFn::zero(a, Domain::full_line) + SampledFn::zero(b, Domain::full_line), ArgumentError);
  CHECK_THROWS_AS(SampledFn(a, std::vector<cplx>(3), Domain::full_line), ArgumentError);
  CHECK_THROWS_AS(SampledFn::zero(a, Domain::half_line), ArgumentError);
}
