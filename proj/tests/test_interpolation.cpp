#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ppinterp/error.hpp"
#include "ppinterp/interpolation.hpp"

using namespace ppinterp;

namespace {

std::vector<double> uniform_points(double a, double b, std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = a + (b - a) * k / (n - 1.0);
  return x;
}

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

Mesh1D runge_mesh(std::size_t n) {
  const auto x = uniform_points(-1.0, 1.0, n);
  std::vector<double> u;
  for (double v : x) u.push_back(runge(v));
  return Mesh1D(x, u);
}

// Largest excursion of the interpolant outside the end values of any
// interval.
double interval_excursion(const PiecewiseInterpolant& p, std::span<const double> u,
                          std::size_t per_interval) {
  double worst = 0.0;
  const auto x = p.points();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double lo = std::min(u[i], u[i + 1]);
    const double hi = std::max(u[i], u[i + 1]);
    for (std::size_t k = 0; k <= per_interval; ++k) {
      const double v = p(x[i] + (x[i + 1] - x[i]) * k / per_interval);
      worst = std::max({worst, v - hi, lo - v});
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("locating intervals") {
  const std::vector<double> x{0.0, 1.0, 2.5, 3.0};
  CHECK(locate_interval(x, 0.0) == 0);
  CHECK(locate_interval(x, 0.999) == 0);
  CHECK(locate_interval(x, 1.0) == 1);
  CHECK(locate_interval(x, 2.9) == 2);
  CHECK(locate_interval(x, 3.0) == 2);
  CHECK_THROWS_AS(locate_interval(x, -1e-12), DomainError);
  CHECK_THROWS_AS(locate_interval(x, 3.5), DomainError);
  CHECK_THROWS_AS(locate_interval(x, NAN), DomainError);
}

TEST_CASE("every method reproduces the data") {
  const Mesh1D mesh({0.0, 0.3, 0.5, 1.4, 2.0, 2.1, 3.0},
                    {1.0, -0.5, 2.0, 2.0, 0.25, 4.0, 3.0});
  const auto x = mesh.points();
  for (Method m : {Method::kDbi, Method::kPpi, Method::kPchip, Method::kLinear}) {
    const auto v = interpolate_1d(mesh, x, {m, 5, 0.01});
    for (std::size_t k = 0; k < x.size(); ++k) {
      CHECK(v[k] == doctest::Approx(mesh.values()[k]).epsilon(1e-14).scale(1.0));
    }
  }
}

TEST_CASE("linear method") {
  const Mesh1D mesh({0.0, 1.0, 3.0}, {0.0, 2.0, -2.0});
  const std::vector<double> q{0.5, 2.0};
  const auto v = interpolate_1d(mesh, q, {Method::kLinear, 7, 0.0});
  CHECK(v[0] == doctest::Approx(1.0));
  CHECK(v[1] == doctest::Approx(0.0));
  const PiecewiseInterpolant p(mesh, {Method::kLinear, 7, 0.0});
  CHECK(p.piece(0).degree == 1);
  CHECK(p.piece_count() == 2);
  CHECK_THROWS_AS(PiecewiseInterpolant(mesh, {Method::kPchip, 3, 0.0}), InvalidArgument);
}

TEST_CASE("pchip slopes") {
  const Mesh1D mesh({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 4.0, 9.0});
  const PchipInterpolant p(mesh);
  CHECK(p.slopes()[0] == 0.0);
  CHECK(p.slopes()[1] == doctest::Approx(1.5));
  CHECK(p.slopes()[2] == doctest::Approx(3.75));

  SUBCASE("extrema of the data get zero slope") {
    const PchipInterpolant q(Mesh1D({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}));
    CHECK(q.slopes()[1] == 0.0);
  }
  SUBCASE("two points give the secant") {
    const PchipInterpolant q(Mesh1D({0.0, 2.0}, {1.0, 5.0}));
    CHECK(q(1.0) == doctest::Approx(3.0));
  }
  SUBCASE("monotone data stays monotone") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    std::vector<double> x{0.0};
    std::vector<double> u{0.0};
    for (int k = 0; k < 30; ++k) {
      x.push_back(x.back() + 0.05 + d(rng));
      u.push_back(u.back() + (k % 5 == 0 ? 0.0 : d(rng) * d(rng) * 10.0));
    }
    const PchipInterpolant q(Mesh1D(x, u));
    double previous = q(x.front());
    for (int k = 1; k <= 20000; ++k) {
      const double v = q(x.front() + (x.back() - x.front()) * k / 20000.0);
      CHECK(v >= previous - 1e-12);
      previous = v;
    }
  }
}

TEST_CASE("large epsilon lets PPI oscillate") {
  const Mesh1D mesh = runge_mesh(17);
  const auto u = mesh.values();
  auto excursion = [&](Method m, double eps) {
    return interval_excursion(PiecewiseInterpolant(mesh, {m, 16, eps}), u, 200);
  };
  CHECK(excursion(Method::kDbi, 0.0) <= 1e-15);
  CHECK(excursion(Method::kPpi, 0.01) <= 1e-15);
  CHECK(excursion(Method::kPpi, 1.0) > 1e-3);
}

TEST_CASE("tensor product interpolation") {
  const auto x = uniform_points(-1.0, 1.0, 9);
  const auto y = uniform_points(-0.5, 1.5, 7);
  auto f = [](double a, double b) { return 1.0 / (1.0 + 25.0 * (a * a + b * b)); };
  Matrix values(y.size(), x.size());
  for (std::size_t r = 0; r < y.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) values(r, c) = f(x[c], y[r]);
  }
  const GridData2D grid(x, y, values);

  SUBCASE("grid reproduction") {
    for (Method m : {Method::kDbi, Method::kPpi, Method::kPchip, Method::kLinear}) {
      const Matrix out = interpolate_2d(grid, x, y, {m, 4, 0.01});
      for (std::size_t r = 0; r < y.size(); ++r) {
        for (std::size_t c = 0; c < x.size(); ++c) {
          CHECK(out(r, c) == doctest::Approx(values(r, c)).epsilon(1e-14).scale(1.0));
        }
      }
    }
  }
  SUBCASE("degree one is bilinear") {
    const std::vector<double> xq{0.1, -0.37};
    const std::vector<double> yq{0.2};
    const Matrix out = interpolate_2d(grid, xq, yq, {Method::kDbi, 1, 0.0});
    CHECK(out.rows() == 1);
    CHECK(out.cols() == 2);
    for (std::size_t c = 0; c < xq.size(); ++c) {
      const std::size_t i = locate_interval(x, xq[c]);
      const std::size_t j = locate_interval(y, yq[0]);
      const double s = (xq[c] - x[i]) / (x[i + 1] - x[i]);
      const double t = (yq[0] - y[j]) / (y[j + 1] - y[j]);
      const double expected = (1 - s) * (1 - t) * values(j, i) + s * (1 - t) * values(j, i + 1) +
                              (1 - s) * t * values(j + 1, i) + s * t * values(j + 1, i + 1);
      CHECK(out(0, c) == doctest::Approx(expected).epsilon(1e-14));
    }
  }
  SUBCASE("bounds and positivity on a fine query grid") {
    const auto xq = uniform_points(-1.0, 1.0, 101);
    const auto yq = uniform_points(-0.5, 1.5, 83);
    const double hi = *std::max_element(values.data().begin(), values.data().end());
    const double lo = *std::min_element(values.data().begin(), values.data().end());
    const Matrix dbi = interpolate_2d(grid, xq, yq, {Method::kDbi, 8, 0.0});
    const Matrix ppi = interpolate_2d(grid, xq, yq, {Method::kPpi, 8, 0.01});
    for (double v : dbi.data()) {
      CHECK(v <= hi + 1e-14);
      CHECK(v >= lo - 1e-14);
    }
    for (double v : ppi.data()) CHECK(v >= 0.0);
  }
  SUBCASE("query order does not matter") {
    const std::vector<double> xq{0.3, -0.9, 0.05};
    const std::vector<double> yq{1.2, -0.1};
    const std::vector<double> xr{0.05, 0.3, -0.9};
    const std::vector<double> yr{-0.1, 1.2};
    const Matrix a = interpolate_2d(grid, xq, yq, {Method::kPpi, 6, 0.01});
    const Matrix b = interpolate_2d(grid, xr, yr, {Method::kPpi, 6, 0.01});
    CHECK(a(0, 0) == b(1, 1));
    CHECK(a(0, 1) == b(1, 2));
    CHECK(a(1, 2) == b(0, 0));
  }
  SUBCASE("sweep order") {
    const auto xq = uniform_points(-1.0, 1.0, 41);
    const auto yq = uniform_points(-0.5, 1.5, 41);
    InterpConfig cfg{Method::kPpi, 6, 0.01};
    const Matrix xy = interpolate_2d(grid, xq, yq, cfg);
    cfg.sweep_order = SweepOrder::kYThenX;
    const Matrix yx = interpolate_2d(grid, xq, yq, cfg);
    double diff = 0.0;
    for (std::size_t k = 0; k < xy.data().size(); ++k) {
      diff = std::max(diff, std::abs(xy.data()[k] - yx.data()[k]));
    }
    MESSAGE("max |xy - yx| = " << diff);
    CHECK(diff < 0.1);
    // Linear sweeps commute.
    const Matrix lxy = interpolate_2d(grid, xq, yq, {Method::kLinear, 1, 0.0});
    const Matrix lyx =
        interpolate_2d(grid, xq, yq, {Method::kLinear, 1, 0.0, SweepOrder::kYThenX});
    for (std::size_t k = 0; k < lxy.data().size(); ++k) {
      CHECK(lxy.data()[k] == doctest::Approx(lyx.data()[k]).epsilon(1e-14));
    }
  }
  SUBCASE("queries outside the grid") {
    const std::vector<double> xq{1.01};
    CHECK_THROWS_AS(interpolate_2d(grid, xq, y, {}), DomainError);
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(GridData2D({0.0, 1.0}, {0.0, 1.0}, Matrix(3, 2)), MeshError);
  CHECK_THROWS_AS(GridData2D({0.0, 0.0}, {0.0, 1.0}, Matrix(2, 2)), MeshError);
  Matrix bad(2, 2);
  bad(1, 1) = NAN;
  CHECK_THROWS_AS(GridData2D({0.0, 1.0}, {0.0, 1.0}, bad), MeshError);
}
