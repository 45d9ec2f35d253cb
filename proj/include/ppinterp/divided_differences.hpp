#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ppinterp {

/// Strictly increasing abscissae with one data value per point.
///
/// The constructor validates: at least two points, equal lengths, finite
/// entries and strictly increasing abscissae. Throws MeshError otherwise.
class Mesh1D {
 public:
  Mesh1D(std::vector<double> points, std::vector<double> values);

  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t interval_count() const noexcept { return points_.size() - 1; }

  double point(std::size_t k) const { return points_[k]; }
  double value(std::size_t k) const { return values_[k]; }

 private:
  std::vector<double> points_;
  std::vector<double> values_;
};

/// Triangular table of Newton divided differences, `(i, j)` being
/// U[x_i, ..., x_{i+j}].
///
/// Entries are stored column by column (one column per order), so a table
/// truncated at `max_order` costs O(n * max_order). Immutable once built.
class DividedDifferenceTable {
 public:
  /// Full table, orders 0 ... n-1.
  explicit DividedDifferenceTable(const Mesh1D& mesh);
  /// Orders 0 ... min(max_order, n-1).
  DividedDifferenceTable(const Mesh1D& mesh, std::size_t max_order);

  /// U[x_i, ..., x_{i+order}]. Requires order <= max_order() and
  /// i + order < size().
  double operator()(std::size_t i, std::size_t order) const {
    return entries_[column_offset(order) + i];
  }

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t max_order() const noexcept { return max_order_; }
  std::span<const double> points() const noexcept { return points_; }
  double point(std::size_t k) const { return points_[k]; }
  double value(std::size_t k) const { return (*this)(k, 0); }
  std::span<const double> values() const noexcept {
    return {entries_.data(), points_.size()};
  }

 private:
  std::size_t column_offset(std::size_t order) const noexcept {
    const std::size_t n = points_.size();
    return order * n - order * (order - 1) / 2;
  }

  std::vector<double> points_;
  std::size_t max_order_ = 0;
  std::vector<double> entries_;
};

/// Mesh indices of an interpolation stencil for interval I_i, kept in the
/// order they were inserted: i, i+1, then one expansion point per step. The
/// index set is always the contiguous range [left(), right()].
class StencilNodes {
 public:
  /// Initial stencil {i, i+1} on a mesh of `mesh_size` points.
  StencilNodes(std::size_t interval, std::size_t mesh_size);

  std::size_t interval() const noexcept { return order_.front(); }
  std::size_t left() const noexcept { return left_; }
  std::size_t right() const noexcept { return right_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::span<const std::size_t> order() const noexcept { return order_; }

  bool can_grow_left() const noexcept { return left_ > 0; }
  bool can_grow_right() const noexcept { return right_ + 1 < mesh_size_; }

  void grow_left();
  void grow_right();

  /// Extremes of the prefix stencil made of the first `count` inserted nodes.
  std::size_t prefix_left(std::size_t count) const;
  std::size_t prefix_right(std::size_t count) const;

  /// Points strictly left of x_i.
  std::size_t points_left_of_interval() const noexcept {
    return interval() - left_;
  }
  /// Points strictly right of x_i (x_{i+1} included).
  std::size_t points_right_of_base() const noexcept {
    return right_ - interval();
  }

 private:
  std::vector<std::size_t> order_;
  std::size_t left_;
  std::size_t right_;
  std::size_t mesh_size_;
};

/// Newton coefficients for the stencil in insertion order: entry k is the
/// divided difference over the first k+1 inserted nodes.
std::vector<double> newton_coefficients(const StencilNodes& stencil,
                                        const DividedDifferenceTable& table);

/// Nested (Horner) evaluation of the Newton form with the given nodes.
/// `nodes` must be at least as long as `coefficients` minus one.
double horner_newton(std::span<const double> nodes,
                     std::span<const double> coefficients, double x);

/// Evaluates the Newton interpolant over `stencil` at `x`.
double newton_eval(const StencilNodes& stencil,
                   const DividedDifferenceTable& table, double x);

/// Normalized geometry of the step that formed V_j:
///   offset = (x_j^e - x_i) / (x_{i+1} - x_i), x_j^e the j-th inserted node
///   width  = (x_j^r - x_j^l) / (x_{i+1} - x_i)
/// Both are independent of the evaluation point.
struct StepGeometry {
  double offset;
  double width;
};

/// Requires 1 <= step and step + 2 <= stencil.size().
StepGeometry interval_geometry(const StencilNodes& stencil,
                               const DividedDifferenceTable& table,
                               std::size_t step);

}  // namespace ppinterp
