#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppinterp/divided_differences.hpp"

namespace ppinterp {

enum class Method {
  kDbi,     ///< data-bounded: U(x) stays within [min, max] of u_i, u_{i+1}
  kPpi,     ///< positivity-preserving: U(x) stays within [u_min, u_max]
  kPchip,   ///< Fritsch-Carlson monotone cubic baseline
  kLinear,  ///< piecewise linear baseline
};

enum class SweepOrder { kXThenY, kYThenX };

struct InterpConfig {
  Method method = Method::kPpi;
  int target_degree = 3;
  /// Relative margin of the PPI window on intervals without an extremum.
  double epsilon = 0.01;
  /// Only used by tensor-product interpolation.
  SweepOrder sweep_order = SweepOrder::kXThenY;
};

/// Throws InvalidArgument on degree < 1, negative or non-finite epsilon.
void validate(const InterpConfig& config);

/// Slopes of the three intervals around I_i: sigma_{i-1}, sigma_i,
/// sigma_{i+1}. A slope missing at the domain boundary copies its neighbour.
struct NeighbourSlopes {
  double left;
  double center;
  double right;
};

NeighbourSlopes neighbour_slopes(const DividedDifferenceTable& table,
                                 std::size_t interval);

/// Classification of a possible extremum hidden inside I_i.
enum class ExtremumKind {
  kNone,
  kMinimum,    ///< sigma_{i-1} < 0 < sigma_{i+1}: room needed below the data
  kMaximum,    ///< sigma_{i-1} > 0 > sigma_{i+1}: room needed above the data
  kAmbiguous,  ///< outer slopes agree but sigma_{i-1} sigma_i < 0
};

ExtremumKind classify_extremum(const NeighbourSlopes& slopes);
ExtremumKind detect_extremum(const DividedDifferenceTable& table,
                             std::size_t interval);

/// Per-interval confinement window [u_min, u_max] for PPI.
struct ValueWindow {
  double lower;
  double upper;
};

ValueWindow interval_window(std::size_t interval, std::span<const double> values,
                            ExtremumKind extremum, double epsilon);

/// How S_n is normalized on an interval.
enum class Normalization {
  kSlope,      ///< u_{i+1} != u_i: U = u_i + (u_{i+1} - u_i) S_n
  kCurvature,  ///< u_{i+1} == u_i: U = u_i + w S_n, w from the quadratic term
  kLinearFallback,
};

/// Relaxation factors m_l <= 0 and m_r for the normalized polynomial S_n.
struct RelaxationFactors {
  double lower;  ///< m_l
  double upper;  ///< m_r
  Normalization normalization;
};

/// Which mesh point forms V_1 from V_0 = {x_i, x_{i+1}}.
enum class Side { kLeft, kRight };

/// m_l and m_r for interval `interval`. For DBI the result is always (0, 1).
///
/// When u_i == u_{i+1} the factors are normalized by the quadratic weight
/// w = U[V_1] (x_{i+1} - x_i) (x_1^r - x_1^l), with V_1 formed on
/// `first_side`; in that case the upper factor is max(0, .) rather than
/// max(1, .), because the normalized polynomial has no linear term to
/// absorb. A vanishing U[V_1] yields kLinearFallback.
RelaxationFactors compute_m_bounds(Method method, std::size_t interval,
                                   const DividedDifferenceTable& table,
                                   const ValueWindow& window, Side first_side);

/// Bounds on lambda-bar_1 for a slope-normalized interval:
///   B_1^- = (-4 (m_r - 1) - 1) d_1,  B_1^+ = (-4 m_l + 1) d_1.
struct BoundPair {
  double lower;
  double upper;
};

BoundPair ppi_initial_bounds(double m_lower, double m_upper, double width1);

/// Bounds on lambda-bar_1 for a curvature-normalized interval, where
/// S_n = s (s - 1) / d_1 * lambda-bar_1 delta_2 carries no linear term:
///   B_1^- = -4 m_r d_1,  B_1^+ = -4 m_l d_1.
BoundPair curvature_initial_bounds(double m_lower, double m_upper,
                                   double width1);

/// Recursive bound state after step j of the stencil growth.
struct BoundLedger {
  std::size_t step = 0;
  double lambda_bar = 1.0;
  double b_minus = 0.0;
  double b_plus = 0.0;
  double m_lower = 0.0;
  double m_upper = 1.0;
};

/// B^- < 0 < B^+ and B^- <= lambda-bar <= B^+, compared exactly.
bool admissible(const BoundLedger& ledger);

/// Bounds for step j from the ledger at step j-1 and the geometry of step j.
/// Only `b_minus`, `b_plus` and `step` of the result are updated;
/// `lambda_bar` still refers to step j-1.
///   offset <= 0: B_j^{+-} = (B_{j-1}^{+-} - lb_{j-1}) d_j / (1 - t_j)
///   offset  > 0: B_j^{+-} = (B_{j-1}^{-+} - lb_{j-1}) d_j / (-t_j)
BoundLedger advance_bounds(const BoundLedger& ledger, double offset,
                           double width);

/// Polynomial piece for one interval: insertion-ordered stencil with its
/// Newton coefficients and the bound states of every accepted step.
struct IntervalInterpolant {
  std::size_t interval = 0;
  std::vector<std::size_t> stencil;   ///< mesh indices, insertion order
  std::vector<double> nodes;          ///< abscissae of `stencil`
  std::vector<double> coefficients;   ///< Newton coefficients
  int degree = 1;
  ExtremumKind extremum = ExtremumKind::kNone;
  ValueWindow window{};
  Normalization normalization = Normalization::kSlope;
  std::vector<BoundLedger> trace;     ///< one entry per accepted expansion

  double operator()(double x) const {
    return horner_newton(nodes, coefficients, x);
  }
};

/// Grows the stencil of interval `interval` from {x_i, x_{i+1}} towards
/// `config.target_degree` + 1 points, accepting an expansion only while the
/// DBI or PPI sufficient conditions hold. When both sides are admissible the
/// side restoring symmetry around x_i wins; on a tie the candidate with the
/// smaller |lambda-bar| wins (right on equality).
///
/// `table` must hold orders up to min(target_degree, n - 1) and at least 2
/// when available.
IntervalInterpolant build_interval_interpolant(
    const DividedDifferenceTable& table, std::size_t interval,
    const InterpConfig& config);

}  // namespace ppinterp
