#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ppinterp/ppinterp.h"

TEST_CASE("defaults") {
  ppi_config c;
  ppi_config_default(&c);
  CHECK(c.method == PPI_METHOD_PPI);
  CHECK(c.degree == 3);
  CHECK(c.epsilon == 0.01);
  CHECK(c.sweep_order == PPI_SWEEP_X_THEN_Y);
  CHECK(std::string(ppi_status_string(PPI_OK)) == "ok");
  CHECK(std::string(ppi_status_string(PPI_ERR_OUT_OF_DOMAIN)).size() > 0);
}

TEST_CASE("1d interpolator") {
  const std::vector<double> x{0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> u{0.0, 1.0, 4.0, 9.0, 16.0};
  ppi_config c;
  ppi_config_default(&c);
  c.degree = 2;
  ppi_interpolator* p = nullptr;
  REQUIRE(ppi_interpolator_create(x.data(), u.data(), x.size(), &c, &p) == PPI_OK);
  REQUIRE(p != nullptr);

  const std::vector<double> q{0.5, 2.5, 4.0};
  std::vector<double> out(q.size());
  CHECK(ppi_interpolator_evaluate(p, q.data(), q.size(), out.data()) == PPI_OK);
  CHECK(out[0] == doctest::Approx(0.25));
  CHECK(out[1] == doctest::Approx(6.25));
  CHECK(out[2] == doctest::Approx(16.0));

  int degree = 0;
  CHECK(ppi_interpolator_interval_degree(p, 1, &degree) == PPI_OK);
  CHECK(degree == 2);
  CHECK(ppi_interpolator_interval_degree(p, 4, &degree) == PPI_ERR_INVALID_ARGUMENT);

  const double outside = 4.5;
  CHECK(ppi_interpolator_evaluate(p, &outside, 1, out.data()) == PPI_ERR_OUT_OF_DOMAIN);
  CHECK(std::string(ppi_last_error_message()).find("outside") != std::string::npos);
  ppi_interpolator_destroy(p);
  ppi_interpolator_destroy(nullptr);

  SUBCASE("pchip handle") {
    c.method = PPI_METHOD_PCHIP;
    REQUIRE(ppi_interpolator_create(x.data(), u.data(), x.size(), &c, &p) == PPI_OK);
    CHECK(ppi_interpolator_interval_degree(p, 0, &degree) == PPI_OK);
    CHECK(degree == 3);
    ppi_interpolator_destroy(p);
  }
}

TEST_CASE("error codes") {
  const std::vector<double> x{0.0, 0.0, 1.0};
  const std::vector<double> u{1.0, 2.0, 3.0};
  ppi_config c;
  ppi_config_default(&c);
  ppi_interpolator* p = reinterpret_cast<ppi_interpolator*>(&c);
  CHECK(ppi_interpolator_create(x.data(), u.data(), 3, &c, &p) == PPI_ERR_INVALID_MESH);
  CHECK(p == nullptr);
  CHECK(std::string(ppi_last_error_message()).size() > 0);
  CHECK(ppi_interpolator_create(nullptr, u.data(), 3, &c, &p) == PPI_ERR_INVALID_ARGUMENT);
  CHECK(ppi_interpolator_create(x.data(), u.data(), 3, nullptr, &p) ==
        PPI_ERR_INVALID_ARGUMENT);
  CHECK(ppi_interpolator_create(x.data(), u.data(), 3, &c, nullptr) ==
        PPI_ERR_INVALID_ARGUMENT);
  const std::vector<double> good{0.0, 1.0, 2.0};
  c.degree = 0;
  CHECK(ppi_interpolator_create(good.data(), u.data(), 3, &c, &p) ==
        PPI_ERR_INVALID_ARGUMENT);
  c.degree = 3;
  c.method = static_cast<ppi_method>(42);
  CHECK(ppi_interpolator_create(good.data(), u.data(), 3, &c, &p) ==
        PPI_ERR_INVALID_ARGUMENT);
  c.method = PPI_METHOD_DBI;
  REQUIRE(ppi_interpolator_create(good.data(), u.data(), 3, &c, &p) == PPI_OK);
  CHECK(std::string(ppi_last_error_message()).empty());
  ppi_interpolator_destroy(p);
}

TEST_CASE("2d interpolation") {
  const std::vector<double> x{0.0, 1.0, 2.0};
  const std::vector<double> y{0.0, 2.0};
  // values[iy * nx + ix] = x + 10 y
  const std::vector<double> v{0.0, 1.0, 2.0, 20.0, 21.0, 22.0};
  const std::vector<double> xq{0.5, 1.5};
  const std::vector<double> yq{1.0};
  ppi_config c;
  ppi_config_default(&c);
  c.method = PPI_METHOD_LINEAR;
  std::vector<double> out(2);
  REQUIRE(ppi_interpolate_2d(x.data(), 3, y.data(), 2, v.data(), xq.data(), 2, yq.data(), 1,
                             &c, out.data()) == PPI_OK);
  CHECK(out[0] == doctest::Approx(10.5));
  CHECK(out[1] == doctest::Approx(11.5));
  const double far = 3.0;
  CHECK(ppi_interpolate_2d(x.data(), 3, y.data(), 2, v.data(), &far, 1, yq.data(), 1, &c,
                           out.data()) == PPI_ERR_OUT_OF_DOMAIN);
  CHECK(ppi_interpolate_2d(x.data(), 3, y.data(), 2, nullptr, xq.data(), 2, yq.data(), 1,
                           &c, out.data()) == PPI_ERR_INVALID_ARGUMENT);
}

TEST_CASE("experiments") {
  ppi_experiment_spec s;
  ppi_experiment_spec_default(&s);
  const std::size_t n[] = {17, 33};
  s.function = PPI_FUNCTION_F1;
  s.method = PPI_METHOD_LINEAR;
  s.resolutions = n;
  s.resolution_count = 2;
  ppi_experiment* e = nullptr;
  REQUIRE(ppi_experiment_run(&s, &e) == PPI_OK);
  REQUIRE(ppi_experiment_row_count(e) == 2);

  std::size_t points = 0;
  double err = 0.0;
  double rate = -1.0;
  int has_rate = -1;
  CHECK(ppi_experiment_row(e, 0, &points, &err, &rate, &has_rate) == PPI_OK);
  CHECK(points == 17);
  CHECK(has_rate == 0);
  CHECK(ppi_experiment_row(e, 1, &points, &err, &rate, &has_rate) == PPI_OK);
  CHECK(has_rate == 1);
  CHECK(rate > 1.5);
  CHECK(ppi_experiment_row(e, 2, &points, &err, &rate, &has_rate) ==
        PPI_ERR_INVALID_ARGUMENT);

  const std::string csv = ppi_experiment_csv(e);
  CHECK(csv.rfind("function,mesh,method,degree,ni,l2_error,rate\n", 0) == 0);
  CHECK(csv.find("f1,uniform,linear,1,33,") != std::string::npos);
  CHECK(std::string(ppi_experiment_table(e)).find("f1 / uniform / linear") == 0);

  const std::string path = "c_api_experiment.csv";
  CHECK(ppi_experiment_write_csv(e, path.c_str()) == PPI_OK);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == csv);
  std::remove(path.c_str());
  CHECK(ppi_experiment_write_csv(e, "no/such/dir/out.csv") == PPI_ERR_IO);
  ppi_experiment_destroy(e);

  SUBCASE("bad lgl resolution") {
    const std::size_t bad[] = {10};
    s.mesh = PPI_MESH_LGL;
    s.resolutions = bad;
    s.resolution_count = 1;
    e = reinterpret_cast<ppi_experiment*>(&s);
    CHECK(ppi_experiment_run(&s, &e) == PPI_ERR_INVALID_ARGUMENT);
    CHECK(e == nullptr);
    CHECK(std::string(ppi_last_error_message()).find("divisible by 8") != std::string::npos);
  }
}
