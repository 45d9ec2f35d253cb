#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppinterp/interpolation.hpp"
#include "ppinterp/stencil_selection.hpp"

namespace ppinterp::bench {

struct Domain {
  double lower;
  double upper;
  double length() const noexcept { return upper - lower; }
};

enum class FunctionId { kF1, kF2, kF7, kF10 };

/// Analytic benchmark functions.
///   f1(x)    = 1 / (1 + 25 x^2)                       on [-1, 1]
///   f2(x)    = 1 / (1 + exp(-2 k x)),         k = 100 on [-0.2, 0.2]
///   f7(x,y)  = 1 / (1 + 25 (x^2 + y^2))               on [-1, 1]^2
///   f10(x,y) = 1 / (1 + exp(-sqrt(2) k (x + y))), k = 100 on [-0.2, 0.2]^2
class TestFunction {
 public:
  explicit TestFunction(FunctionId id);

  FunctionId id() const noexcept { return id_; }
  int arity() const noexcept;
  Domain domain() const noexcept;

  double operator()(double x) const;
  double operator()(double x, double y) const;

 private:
  FunctionId id_;
};

enum class MeshFamily { kUniform, kLgl };

std::string_view to_string(FunctionId id);
std::string_view to_string(MeshFamily family);
std::string_view to_string(Method method);
std::optional<FunctionId> parse_function(std::string_view name);
std::optional<MeshFamily> parse_mesh_family(std::string_view name);
std::optional<Method> parse_method(std::string_view name);

/// `count` equispaced points including both ends. The two halves are
/// generated from opposite ends so a symmetric domain gives a mirror
/// symmetric mesh.
std::vector<double> uniform_mesh(Domain domain, std::size_t count);

/// Legendre-Gauss-Lobatto nodes on [-1, 1]: the roots of
/// (1 - x^2) P'_{p-1}(x), ascending. Throws NumericalError if Newton fails
/// to converge.
std::vector<double> lgl_nodes(std::size_t count);

/// Points per LGL element (element degree 8).
inline constexpr std::size_t kLglElementNodes = 9;

/// (count - 1) / 8 equal elements each carrying 9 affinely mapped LGL nodes,
/// shared element ends stored once. Throws InvalidArgument unless
/// (count - 1) is a positive multiple of 8.
std::vector<double> lgl_mesh(Domain domain, std::size_t count);

std::vector<double> make_mesh(MeshFamily family, Domain domain,
                              std::size_t count);

/// Trapezoid-rule L2 norm of samples on the uniform grid of `samples.size()`
/// points over `domain`.
double trapezoid_l2(Domain domain, std::span<const double> samples);
/// Tensor trapezoid rule; samples(iy, ix) on uniform grids over `x` and `y`.
double trapezoid_l2(Domain x, Domain y, const Matrix& samples);

/// L2 error of `approx` sampled on the uniform grid of approx.size() points
/// over the function's domain.
double l2_error(const TestFunction& exact, std::span<const double> approx);
/// 2D variant; approx(iy, ix) on uniform grids of approx.rows() and
/// approx.cols() points.
double l2_error(const TestFunction& exact, const Matrix& approx);

inline constexpr std::size_t kEvalPoints1D = 10000;
inline constexpr std::size_t kEvalPoints2D = 1000;

struct ExperimentSpec {
  FunctionId function = FunctionId::kF1;
  MeshFamily mesh = MeshFamily::kUniform;
  Method method = Method::kPpi;
  int degree = 3;
  double epsilon = 0.01;
  /// Input point counts per axis; empty selects the default ladder.
  std::vector<std::size_t> resolutions;
  SweepOrder sweep_order = SweepOrder::kXThenY;
  /// Even point counts so extrema of symmetric functions fall between nodes.
  bool hidden_extremum = false;
  std::size_t eval_points_1d = kEvalPoints1D;
  std::size_t eval_points_2d = kEvalPoints2D;
};

/// {17, 33, 65, 129, 257}, or {16, 32, 64, 128, 256} for hidden extrema.
std::vector<std::size_t> default_resolutions(bool hidden_extremum);

/// Resolves the default ladder and checks the combination. Throws
/// InvalidArgument.
ExperimentSpec resolve(ExperimentSpec spec);

struct ConvergenceRow {
  std::size_t points;
  double max_spacing;
  double l2_error;
  std::optional<double> rate;
};

/// Rate between two rows: log(e_prev / e_cur) / log(h_prev / h_cur).
double convergence_rate(const ConvergenceRow& previous,
                        const ConvergenceRow& current);

/// Error of one resolution.
ConvergenceRow measure(const ExperimentSpec& spec, std::size_t points);

std::vector<ConvergenceRow> run_experiment(const ExperimentSpec& spec);

/// Degree reported in output: the target degree for DBI/PPI, 3 for PCHIP
/// and 1 for linear.
int reported_degree(const ExperimentSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "function,mesh,method,degree,ni,l2_error,rate";

/// Header line plus one line per row; numbers in %.5e, rate empty on the
/// first row.
std::string format_csv(const ExperimentSpec& spec,
                       std::span<const ConvergenceRow> rows);
std::string format_table(const ExperimentSpec& spec,
                         std::span<const ConvergenceRow> rows);

}  // namespace ppinterp::bench
