#include "ppinterp/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ppinterp/error.hpp"

namespace ppinterp {

std::size_t locate_interval(std::span<const double> points, double x) {
  if (!(x >= points.front() && x <= points.back())) {
    std::ostringstream msg;
    msg << "query " << x << " outside mesh domain [" << points.front() << ", "
        << points.back() << "]";
    throw DomainError(msg.str());
  }
  const auto it = std::upper_bound(points.begin(), points.end(), x);
  const auto k = static_cast<std::size_t>(it - points.begin());
  return std::min(k - 1, points.size() - 2);
}

namespace {

std::size_t table_order(const InterpConfig& config) {
  if (config.method == Method::kLinear) return 1;
  // Order 2 is needed to normalize intervals with u_i == u_{i+1}.
  return std::max<std::size_t>(static_cast<std::size_t>(config.target_degree), 2);
}

}  // namespace

PiecewiseInterpolant::PiecewiseInterpolant(const Mesh1D& mesh,
                                           const InterpConfig& config)
    : points_(mesh.points().begin(), mesh.points().end()) {
  validate(config);
  if (config.method == Method::kPchip) {
    throw InvalidArgument("use PchipInterpolant for the PCHIP method");
  }
  const DividedDifferenceTable table(mesh, table_order(config));
  pieces_.reserve(mesh.interval_count());
  for (std::size_t i = 0; i < mesh.interval_count(); ++i) {
    pieces_.push_back(build_interval_interpolant(table, i, config));
  }
}

double PiecewiseInterpolant::operator()(double x) const {
  return pieces_[locate_interval(points_, x)](x);
}

std::vector<double> PiecewiseInterpolant::evaluate(
    std::span<const double> queries) const {
  std::vector<double> out(queries.size());
  std::transform(queries.begin(), queries.end(), out.begin(),
                 [this](double x) { return (*this)(x); });
  return out;
}

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

double pchip_end_slope(double h0, double h1, double del0, double del1) {
  double d = ((2.0 * h0 + h1) * del0 - h0 * del1) / (h0 + h1);
  if (sign(d) != sign(del0)) {
    d = 0.0;
  } else if (sign(del0) != sign(del1) && std::abs(d) > std::abs(3.0 * del0)) {
    d = 3.0 * del0;
  }
  return d;
}

}  // namespace

PchipInterpolant::PchipInterpolant(const Mesh1D& mesh)
    : points_(mesh.points().begin(), mesh.points().end()),
      values_(mesh.values().begin(), mesh.values().end()),
      slopes_(mesh.size(), 0.0) {
  const std::size_t n = points_.size();
  std::vector<double> h(n - 1);
  std::vector<double> del(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = points_[k + 1] - points_[k];
    del[k] = (values_[k + 1] - values_[k]) / h[k];
  }
  if (n == 2) {
    slopes_[0] = slopes_[1] = del[0];
    return;
  }
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (sign(del[k - 1]) * sign(del[k]) <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    slopes_[k] = (w1 + w2) / (w1 / del[k - 1] + w2 / del[k]);
  }
  slopes_[0] = pchip_end_slope(h[0], h[1], del[0], del[1]);
  slopes_[n - 1] = pchip_end_slope(h[n - 2], h[n - 3], del[n - 2], del[n - 3]);
}

double PchipInterpolant::operator()(double x) const {
  const std::size_t k = locate_interval(points_, x);
  const double h = points_[k + 1] - points_[k];
  const double t = (x - points_[k]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * values_[k] + h10 * h * slopes_[k] + h01 * values_[k + 1] +
         h11 * h * slopes_[k + 1];
}

std::vector<double> PchipInterpolant::evaluate(
    std::span<const double> queries) const {
  std::vector<double> out(queries.size());
  std::transform(queries.begin(), queries.end(), out.begin(),
                 [this](double x) { return (*this)(x); });
  return out;
}

std::vector<double> interpolate_1d(const Mesh1D& mesh,
                                   std::span<const double> queries,
                                   const InterpConfig& config) {
  validate(config);
  if (config.method == Method::kPchip) {
    return PchipInterpolant(mesh).evaluate(queries);
  }
  return PiecewiseInterpolant(mesh, config).evaluate(queries);
}

std::vector<double> pchip_interpolate(const Mesh1D& mesh,
                                      std::span<const double> queries) {
  return PchipInterpolant(mesh).evaluate(queries);
}

GridData2D::GridData2D(std::vector<double> x, std::vector<double> y,
                       Matrix values)
    : x_(std::move(x)), y_(std::move(y)), values_(std::move(values)) {
  if (values_.rows() != y_.size() || values_.cols() != x_.size()) {
    throw MeshError("grid values must be |y| x |x|");
  }
  // Validates both axes (monotonicity, size, finiteness).
  Mesh1D(x_, std::vector<double>(x_.size(), 0.0));
  Mesh1D(y_, std::vector<double>(y_.size(), 0.0));
  for (double v : values_.data()) {
    if (!std::isfinite(v)) throw MeshError("non-finite grid value");
  }
}

namespace {

// Interpolates every row of `source` (sampled at `axis`) onto `queries`.
Matrix sweep_rows(const Matrix& source, std::span<const double> axis,
                  std::span<const double> queries, const InterpConfig& config) {
  Matrix out(source.rows(), queries.size());
  const std::vector<double> points(axis.begin(), axis.end());
  for (std::size_t r = 0; r < source.rows(); ++r) {
    const auto row = source.row(r);
    const Mesh1D mesh(points, std::vector<double>(row.begin(), row.end()));
    const auto values = interpolate_1d(mesh, queries, config);
    std::copy(values.begin(), values.end(), out.row(r).begin());
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

}  // namespace

Matrix interpolate_2d(const GridData2D& grid, std::span<const double> x_queries,
                      std::span<const double> y_queries,
                      const InterpConfig& config) {
  validate(config);
  for (double x : x_queries) locate_interval(grid.x(), x);
  for (double y : y_queries) locate_interval(grid.y(), y);

  if (config.sweep_order == SweepOrder::kXThenY) {
    const Matrix along_x = sweep_rows(grid.values(), grid.x(), x_queries, config);
    return transpose(sweep_rows(transpose(along_x), grid.y(), y_queries, config));
  }
  const Matrix along_y =
      sweep_rows(transpose(grid.values()), grid.y(), y_queries, config);
  return sweep_rows(transpose(along_y), grid.x(), x_queries, config);
}

}  // namespace ppinterp
