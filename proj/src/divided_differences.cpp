#include "ppinterp/divided_differences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ppinterp/error.hpp"

namespace ppinterp {

Mesh1D::Mesh1D(std::vector<double> points, std::vector<double> values)
    : points_(std::move(points)), values_(std::move(values)) {
  if (points_.size() != values_.size()) {
    throw MeshError("mesh has " + std::to_string(points_.size()) +
                    " points but " + std::to_string(values_.size()) +
                    " values");
  }
  if (points_.size() < 2) {
    throw MeshError("mesh needs at least two points");
  }
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!std::isfinite(points_[k]) || !std::isfinite(values_[k])) {
      throw MeshError("non-finite entry at mesh index " + std::to_string(k));
    }
    if (k > 0 && !(points_[k - 1] < points_[k])) {
      throw MeshError("mesh points not strictly increasing at index " +
                      std::to_string(k));
    }
  }
}

DividedDifferenceTable::DividedDifferenceTable(const Mesh1D& mesh)
    : DividedDifferenceTable(mesh, mesh.size() - 1) {}

DividedDifferenceTable::DividedDifferenceTable(const Mesh1D& mesh,
                                               std::size_t max_order)
    : points_(mesh.points().begin(), mesh.points().end()),
      max_order_(std::min(max_order, mesh.size() - 1)) {
  const std::size_t n = points_.size();
  entries_.resize(column_offset(max_order_ + 1));
  std::copy(mesh.values().begin(), mesh.values().end(), entries_.begin());
  for (std::size_t j = 1; j <= max_order_; ++j) {
    const std::size_t prev = column_offset(j - 1);
    const std::size_t cur = column_offset(j);
    for (std::size_t i = 0; i + j < n; ++i) {
      entries_[cur + i] = (entries_[prev + i + 1] - entries_[prev + i]) /
                          (points_[i + j] - points_[i]);
    }
  }
}

StencilNodes::StencilNodes(std::size_t interval, std::size_t mesh_size)
    : order_{interval, interval + 1},
      left_(interval),
      right_(interval + 1),
      mesh_size_(mesh_size) {
  if (interval + 1 >= mesh_size) {
    throw InvalidArgument("interval index " + std::to_string(interval) +
                          " out of range for mesh of " +
                          std::to_string(mesh_size) + " points");
  }
}

void StencilNodes::grow_left() {
  if (!can_grow_left()) throw InvalidArgument("stencil at left mesh boundary");
  order_.push_back(--left_);
}

void StencilNodes::grow_right() {
  if (!can_grow_right()) {
    throw InvalidArgument("stencil at right mesh boundary");
  }
  order_.push_back(++right_);
}

std::size_t StencilNodes::prefix_left(std::size_t count) const {
  return *std::min_element(order_.begin(), order_.begin() + count);
}

std::size_t StencilNodes::prefix_right(std::size_t count) const {
  return *std::max_element(order_.begin(), order_.begin() + count);
}

std::vector<double> newton_coefficients(const StencilNodes& stencil,
                                        const DividedDifferenceTable& table) {
  if (stencil.size() - 1 > table.max_order()) {
    throw InvalidArgument("divided-difference table truncated below stencil "
                          "degree");
  }
  std::vector<double> coefficients(stencil.size());
  std::size_t left = stencil.interval();
  for (std::size_t k = 0; k < stencil.size(); ++k) {
    left = std::min(left, stencil.order()[k]);
    coefficients[k] = table(left, k);
  }
  return coefficients;
}

double horner_newton(std::span<const double> nodes,
                     std::span<const double> coefficients, double x) {
  double acc = coefficients.back();
  for (std::size_t k = coefficients.size() - 1; k-- > 0;) {
    acc = coefficients[k] + (x - nodes[k]) * acc;
  }
  return acc;
}

double newton_eval(const StencilNodes& stencil,
                   const DividedDifferenceTable& table, double x) {
  const auto coefficients = newton_coefficients(stencil, table);
  std::vector<double> nodes(stencil.size());
  for (std::size_t k = 0; k < stencil.size(); ++k) {
    nodes[k] = table.point(stencil.order()[k]);
  }
  return horner_newton(nodes, coefficients, x);
}

StepGeometry interval_geometry(const StencilNodes& stencil,
                               const DividedDifferenceTable& table,
                               std::size_t step) {
  if (step < 1 || step + 2 > stencil.size()) {
    throw InvalidArgument("step " + std::to_string(step) +
                          " outside stencil of " +
                          std::to_string(stencil.size()) + " nodes");
  }
  const std::size_t i = stencil.interval();
  const double h = table.point(i + 1) - table.point(i);
  const double added = table.point(stencil.order()[step]);
  const double width = table.point(stencil.prefix_right(step + 2)) -
                       table.point(stencil.prefix_left(step + 2));
  return {(added - table.point(i)) / h, width / h};
}

}  // namespace ppinterp
