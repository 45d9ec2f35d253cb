#include "ppinterp/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "ppinterp/error.hpp"

namespace ppinterp::bench {

namespace {
constexpr double kHeavisideSharpness = 100.0;
}

TestFunction::TestFunction(FunctionId id) : id_(id) {}

int TestFunction::arity() const noexcept {
  return id_ == FunctionId::kF1 || id_ == FunctionId::kF2 ? 1 : 2;
}

Domain TestFunction::domain() const noexcept {
  if (id_ == FunctionId::kF1 || id_ == FunctionId::kF7) return {-1.0, 1.0};
  return {-0.2, 0.2};
}

double TestFunction::operator()(double x) const {
  switch (id_) {
    case FunctionId::kF1:
      return 1.0 / (1.0 + 25.0 * x * x);
    case FunctionId::kF2:
      return 1.0 / (1.0 + std::exp(-2.0 * kHeavisideSharpness * x));
    default:
      throw InvalidArgument(std::string(to_string(id_)) +
                            " is a function of two variables");
  }
}

double TestFunction::operator()(double x, double y) const {
  switch (id_) {
    case FunctionId::kF7:
      return 1.0 / (1.0 + 25.0 * (x * x + y * y));
    case FunctionId::kF10:
      return 1.0 / (1.0 + std::exp(-std::numbers::sqrt2 * kHeavisideSharpness *
                                   (x + y)));
    default:
      throw InvalidArgument(std::string(to_string(id_)) +
                            " is a function of one variable");
  }
}

std::string_view to_string(FunctionId id) {
  switch (id) {
    case FunctionId::kF1: return "f1";
    case FunctionId::kF2: return "f2";
    case FunctionId::kF7: return "f7";
    case FunctionId::kF10: return "f10";
  }
  return "?";
}

std::string_view to_string(MeshFamily family) {
  return family == MeshFamily::kUniform ? "uniform" : "lgl";
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kDbi: return "dbi";
    case Method::kPpi: return "ppi";
    case Method::kPchip: return "pchip";
    case Method::kLinear: return "linear";
  }
  return "?";
}

std::optional<FunctionId> parse_function(std::string_view name) {
  for (auto id : {FunctionId::kF1, FunctionId::kF2, FunctionId::kF7,
                  FunctionId::kF10}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

std::optional<MeshFamily> parse_mesh_family(std::string_view name) {
  if (name == "uniform") return MeshFamily::kUniform;
  if (name == "lgl") return MeshFamily::kLgl;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto m : {Method::kDbi, Method::kPpi, Method::kPchip, Method::kLinear}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<double> uniform_mesh(Domain domain, std::size_t count) {
  if (count < 2) throw InvalidArgument("uniform mesh needs at least 2 points");
  std::vector<double> points(count);
  const double last = static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) {
    if (2 * k <= count - 1) {
      points[k] = domain.lower + domain.length() * (static_cast<double>(k) / last);
    } else {
      points[k] = domain.upper -
                  domain.length() * (static_cast<double>(count - 1 - k) / last);
    }
  }
  return points;
}

std::vector<double> make_mesh(MeshFamily family, Domain domain,
                              std::size_t count) {
  return family == MeshFamily::kUniform ? uniform_mesh(domain, count)
                                        : lgl_mesh(domain, count);
}

namespace {

// Trapezoid weights for `count` uniform points over `domain`.
std::vector<double> trapezoid_weights(Domain domain, std::size_t count) {
  if (count < 2) throw InvalidArgument("quadrature needs at least 2 points");
  const double h = domain.length() / static_cast<double>(count - 1);
  std::vector<double> w(count, h);
  w.front() = w.back() = 0.5 * h;
  return w;
}

}  // namespace

double trapezoid_l2(Domain domain, std::span<const double> samples) {
  const auto w = trapezoid_weights(domain, samples.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    sum += w[k] * samples[k] * samples[k];
  }
  return std::sqrt(sum);
}

double trapezoid_l2(Domain x, Domain y, const Matrix& samples) {
  const auto wx = trapezoid_weights(x, samples.cols());
  const auto wy = trapezoid_weights(y, samples.rows());
  double sum = 0.0;
  for (std::size_t r = 0; r < samples.rows(); ++r) {
    double row_sum = 0.0;
    for (std::size_t c = 0; c < samples.cols(); ++c) {
      row_sum += wx[c] * samples(r, c) * samples(r, c);
    }
    sum += wy[r] * row_sum;
  }
  return std::sqrt(sum);
}

double l2_error(const TestFunction& exact, std::span<const double> approx) {
  const Domain d = exact.domain();
  const auto grid = uniform_mesh(d, approx.size());
  std::vector<double> diff(approx.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    diff[k] = approx[k] - exact(grid[k]);
  }
  return trapezoid_l2(d, diff);
}

double l2_error(const TestFunction& exact, const Matrix& approx) {
  const Domain d = exact.domain();
  const auto gx = uniform_mesh(d, approx.cols());
  const auto gy = uniform_mesh(d, approx.rows());
  Matrix diff(approx.rows(), approx.cols());
  for (std::size_t r = 0; r < approx.rows(); ++r) {
    for (std::size_t c = 0; c < approx.cols(); ++c) {
      diff(r, c) = approx(r, c) - exact(gx[c], gy[r]);
    }
  }
  return trapezoid_l2(d, d, diff);
}

std::vector<std::size_t> default_resolutions(bool hidden_extremum) {
  if (hidden_extremum) return {16, 32, 64, 128, 256};
  return {17, 33, 65, 129, 257};
}

ExperimentSpec resolve(ExperimentSpec spec) {
  if (spec.resolutions.empty()) {
    spec.resolutions = default_resolutions(spec.hidden_extremum);
  }
  if (spec.degree < 1) throw InvalidArgument("degree must be >= 1");
  if (!std::isfinite(spec.epsilon) || spec.epsilon < 0.0) {
    throw InvalidArgument("epsilon must be finite and >= 0");
  }
  if (spec.eval_points_1d < 2 || spec.eval_points_2d < 2) {
    throw InvalidArgument("evaluation grid needs at least 2 points per axis");
  }
  if (spec.hidden_extremum && spec.mesh != MeshFamily::kUniform) {
    throw InvalidArgument("hidden-extremum study uses uniform meshes");
  }
  for (std::size_t n : spec.resolutions) {
    if (n < 2) throw InvalidArgument("resolution must be >= 2 points");
    if (spec.hidden_extremum && n % 2 != 0) {
      throw InvalidArgument("hidden-extremum study needs even point counts, got " +
                            std::to_string(n));
    }
    if (spec.mesh == MeshFamily::kLgl &&
        (n < kLglElementNodes || (n - 1) % (kLglElementNodes - 1) != 0)) {
      throw InvalidArgument("LGL mesh needs (N - 1) divisible by 8, got N = " +
                            std::to_string(n));
    }
  }
  return spec;
}

double convergence_rate(const ConvergenceRow& previous,
                        const ConvergenceRow& current) {
  return std::log(previous.l2_error / current.l2_error) /
         std::log(previous.max_spacing / current.max_spacing);
}

namespace {

InterpConfig config_of(const ExperimentSpec& spec) {
  InterpConfig config;
  config.method = spec.method;
  config.target_degree = spec.degree;
  config.epsilon = spec.epsilon;
  config.sweep_order = spec.sweep_order;
  return config;
}

}  // namespace

ConvergenceRow measure(const ExperimentSpec& spec, std::size_t points) {
  const TestFunction f(spec.function);
  const Domain d = f.domain();
  const auto mesh = make_mesh(spec.mesh, d, points);
  double spacing = 0.0;
  for (std::size_t k = 0; k + 1 < mesh.size(); ++k) {
    spacing = std::max(spacing, mesh[k + 1] - mesh[k]);
  }
  const InterpConfig config = config_of(spec);

  double error = 0.0;
  if (f.arity() == 1) {
    std::vector<double> values(mesh.size());
    std::transform(mesh.begin(), mesh.end(), values.begin(),
                   [&f](double x) { return f(x); });
    const auto grid = uniform_mesh(d, spec.eval_points_1d);
    const auto approx = interpolate_1d(Mesh1D(mesh, values), grid, config);
    error = l2_error(f, approx);
  } else {
    Matrix values(mesh.size(), mesh.size());
    for (std::size_t r = 0; r < mesh.size(); ++r) {
      for (std::size_t c = 0; c < mesh.size(); ++c) {
        values(r, c) = f(mesh[c], mesh[r]);
      }
    }
    const GridData2D grid_data(mesh, mesh, std::move(values));
    const auto grid = uniform_mesh(d, spec.eval_points_2d);
    error = l2_error(f, interpolate_2d(grid_data, grid, grid, config));
  }
  return {points, spacing, error, std::nullopt};
}

std::vector<ConvergenceRow> run_experiment(const ExperimentSpec& raw) {
  const ExperimentSpec spec = resolve(raw);
  std::vector<ConvergenceRow> rows;
  rows.reserve(spec.resolutions.size());
  for (std::size_t n : spec.resolutions) {
    rows.push_back(measure(spec, n));
    if (rows.size() > 1) {
      rows.back().rate = convergence_rate(rows[rows.size() - 2], rows.back());
    }
  }
  return rows;
}

int reported_degree(const ExperimentSpec& spec) {
  switch (spec.method) {
    case Method::kPchip: return 3;
    case Method::kLinear: return 1;
    default: return spec.degree;
  }
}

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

}  // namespace

std::string format_csv(const ExperimentSpec& spec,
                       std::span<const ConvergenceRow> rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    out << to_string(spec.function) << ',' << to_string(spec.mesh) << ','
        << to_string(spec.method) << ',' << reported_degree(spec) << ','
        << row.points << ',' << sci(row.l2_error) << ','
        << (row.rate ? sci(*row.rate) : std::string()) << '\n';
  }
  return out.str();
}

std::string format_table(const ExperimentSpec& spec,
                         std::span<const ConvergenceRow> rows) {
  std::ostringstream out;
  out << to_string(spec.function) << " / " << to_string(spec.mesh) << " / "
      << to_string(spec.method) << " / degree " << reported_degree(spec);
  if (spec.method == Method::kPpi) out << " / epsilon " << spec.epsilon;
  out << '\n';
  char line[96];
  std::snprintf(line, sizeof line, "%8s  %12s  %8s\n", "N", "L2 error", "rate");
  out << line;
  for (const auto& row : rows) {
    char rate[16] = "--";
    if (row.rate) std::snprintf(rate, sizeof rate, "%.2f", *row.rate);
    std::snprintf(line, sizeof line, "%8zu  %12.2E  %8s\n", row.points,
                  row.l2_error, rate);
    out << line;
  }
  return out.str();
}

}  // namespace ppinterp::bench
