#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppinterp/divided_differences.hpp"
#include "ppinterp/stencil_selection.hpp"

namespace ppinterp {

/// Interval containing `x`: x_i <= x < x_{i+1}, with the last node assigned
/// to the last interval. Throws DomainError outside [x_0, x_{n-1}].
std::size_t locate_interval(std::span<const double> points, double x);

/// Piecewise polynomial built interval by interval with DBI, PPI or linear
/// stencils. All interval pieces are built once at construction and are
/// read-only afterwards.
class PiecewiseInterpolant {
 public:
  PiecewiseInterpolant(const Mesh1D& mesh, const InterpConfig& config);

  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> queries) const;

  const IntervalInterpolant& piece(std::size_t interval) const {
    return pieces_.at(interval);
  }
  std::size_t piece_count() const noexcept { return pieces_.size(); }
  std::span<const double> points() const noexcept { return points_; }

 private:
  std::vector<double> points_;
  std::vector<IntervalInterpolant> pieces_;
};

/// Monotone piecewise cubic Hermite interpolant (Fritsch-Carlson). Interior
/// slopes use the weighted harmonic mean of neighbouring secants, set to zero
/// at local extrema of the data; end slopes use the one-sided three-point
/// formula, limited to keep shape.
class PchipInterpolant {
 public:
  explicit PchipInterpolant(const Mesh1D& mesh);

  double operator()(double x) const;
  std::vector<double> evaluate(std::span<const double> queries) const;
  std::span<const double> slopes() const noexcept { return slopes_; }

 private:
  std::vector<double> points_;
  std::vector<double> values_;
  std::vector<double> slopes_;
};

std::vector<double> interpolate_1d(const Mesh1D& mesh,
                                   std::span<const double> queries,
                                   const InterpConfig& config);

std::vector<double> pchip_interpolate(const Mesh1D& mesh,
                                      std::span<const double> queries);

/// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Values on a tensor grid: values(iy, ix) sits at (x[ix], y[iy]).
class GridData2D {
 public:
  GridData2D(std::vector<double> x, std::vector<double> y, Matrix values);

  std::span<const double> x() const noexcept { return x_; }
  std::span<const double> y() const noexcept { return y_; }
  const Matrix& values() const noexcept { return values_; }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  Matrix values_;
};

/// Tensor-product interpolation by successive 1D sweeps. Output is
/// |y_queries| x |x_queries|, indexed (iy, ix).
Matrix interpolate_2d(const GridData2D& grid, std::span<const double> x_queries,
                      std::span<const double> y_queries,
                      const InterpConfig& config);

}  // namespace ppinterp
