#include "ppinterp/ppinterp.h"

#include <algorithm>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppinterp/bench.hpp"
#include "ppinterp/error.hpp"
#include "ppinterp/interpolation.hpp"

using namespace ppinterp;

struct ppi_interpolator {
  std::variant<PiecewiseInterpolant, PchipInterpolant> impl;
};

struct ppi_experiment {
  bench::ExperimentSpec spec;
  std::vector<bench::ConvergenceRow> rows;
  std::string csv;
  std::string table;
};

namespace {

thread_local std::string last_error;

ppi_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return PPI_ERR_INVALID_ARGUMENT;
    case ErrorCode::kInvalidMesh: return PPI_ERR_INVALID_MESH;
    case ErrorCode::kOutOfDomain: return PPI_ERR_OUT_OF_DOMAIN;
    case ErrorCode::kNumerical: return PPI_ERR_NUMERICAL;
    case ErrorCode::kIo: return PPI_ERR_IO;
  }
  return PPI_ERR_INTERNAL;
}

template <class F>
ppi_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return PPI_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return PPI_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

Method method_of(ppi_method m) {
  switch (m) {
    case PPI_METHOD_DBI: return Method::kDbi;
    case PPI_METHOD_PPI: return Method::kPpi;
    case PPI_METHOD_PCHIP: return Method::kPchip;
    case PPI_METHOD_LINEAR: return Method::kLinear;
  }
  throw InvalidArgument("unknown method");
}

SweepOrder sweep_of(ppi_sweep_order s) {
  switch (s) {
    case PPI_SWEEP_X_THEN_Y: return SweepOrder::kXThenY;
    case PPI_SWEEP_Y_THEN_X: return SweepOrder::kYThenX;
  }
  throw InvalidArgument("unknown sweep order");
}

InterpConfig config_of(const ppi_config* c) {
  require(c != nullptr, "config is null");
  InterpConfig config;
  config.method = method_of(c->method);
  config.target_degree = c->degree;
  config.epsilon = c->epsilon;
  config.sweep_order = sweep_of(c->sweep_order);
  validate(config);
  return config;
}

bench::FunctionId function_of(ppi_function f) {
  switch (f) {
    case PPI_FUNCTION_F1: return bench::FunctionId::kF1;
    case PPI_FUNCTION_F2: return bench::FunctionId::kF2;
    case PPI_FUNCTION_F7: return bench::FunctionId::kF7;
    case PPI_FUNCTION_F10: return bench::FunctionId::kF10;
  }
  throw InvalidArgument("unknown function");
}

bench::MeshFamily mesh_of(ppi_mesh_family m) {
  switch (m) {
    case PPI_MESH_UNIFORM: return bench::MeshFamily::kUniform;
    case PPI_MESH_LGL: return bench::MeshFamily::kLgl;
  }
  throw InvalidArgument("unknown mesh family");
}

}  // namespace

extern "C" {

void ppi_config_default(ppi_config* config) {
  if (!config) return;
  config->method = PPI_METHOD_PPI;
  config->degree = 3;
  config->epsilon = 0.01;
  config->sweep_order = PPI_SWEEP_X_THEN_Y;
}

const char* ppi_last_error_message(void) { return last_error.c_str(); }

const char* ppi_status_string(ppi_status status) {
  switch (status) {
    case PPI_OK: return "ok";
    case PPI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case PPI_ERR_INVALID_MESH: return "invalid mesh";
    case PPI_ERR_OUT_OF_DOMAIN: return "query outside domain";
    case PPI_ERR_NUMERICAL: return "numerical failure";
    case PPI_ERR_IO: return "i/o error";
    case PPI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ppi_status ppi_interpolator_create(const double* x, const double* u, size_t n,
                                   const ppi_config* config,
                                   ppi_interpolator** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = nullptr;
    require(x != nullptr && u != nullptr, "mesh arrays are null");
    const InterpConfig cfg = config_of(config);
    const Mesh1D mesh(std::vector<double>(x, x + n), std::vector<double>(u, u + n));
    if (cfg.method == Method::kPchip) {
      *out = new ppi_interpolator{PchipInterpolant(mesh)};
    } else {
      *out = new ppi_interpolator{PiecewiseInterpolant(mesh, cfg)};
    }
  });
}

ppi_status ppi_interpolator_evaluate(const ppi_interpolator* interp,
                                     const double* queries, size_t count,
                                     double* out) {
  return guarded([&] {
    require(interp != nullptr, "interpolator is null");
    require(count == 0 || (queries != nullptr && out != nullptr),
            "query or output array is null");
    std::visit(
        [&](const auto& impl) {
          for (size_t k = 0; k < count; ++k) out[k] = impl(queries[k]);
        },
        interp->impl);
  });
}

ppi_status ppi_interpolator_interval_degree(const ppi_interpolator* interp,
                                            size_t interval, int* degree) {
  return guarded([&] {
    require(interp != nullptr && degree != nullptr, "null argument");
    if (const auto* pw = std::get_if<PiecewiseInterpolant>(&interp->impl)) {
      if (interval >= pw->piece_count()) throw InvalidArgument("interval out of range");
      *degree = pw->piece(interval).degree;
    } else {
      const auto& pchip = std::get<PchipInterpolant>(interp->impl);
      if (interval + 1 >= pchip.slopes().size()) {
        throw InvalidArgument("interval out of range");
      }
      *degree = 3;
    }
  });
}

void ppi_interpolator_destroy(ppi_interpolator* interp) { delete interp; }

ppi_status ppi_interpolate_2d(const double* x, size_t nx, const double* y,
                              size_t ny, const double* values,
                              const double* x_queries, size_t nxq,
                              const double* y_queries, size_t nyq,
                              const ppi_config* config, double* out) {
  return guarded([&] {
    require(x && y && values, "grid arrays are null");
    require((nxq == 0 || x_queries) && (nyq == 0 || y_queries),
            "query arrays are null");
    require(nxq * nyq == 0 || out, "output array is null");
    const InterpConfig cfg = config_of(config);
    Matrix grid_values(ny, nx);
    std::copy(values, values + nx * ny, grid_values.data().begin());
    const GridData2D grid(std::vector<double>(x, x + nx),
                          std::vector<double>(y, y + ny), std::move(grid_values));
    const Matrix result = interpolate_2d(grid, {x_queries, nxq},
                                         {y_queries, nyq}, cfg);
    std::copy(result.data().begin(), result.data().end(), out);
  });
}

void ppi_experiment_spec_default(ppi_experiment_spec* spec) {
  if (!spec) return;
  spec->function = PPI_FUNCTION_F1;
  spec->mesh = PPI_MESH_UNIFORM;
  spec->method = PPI_METHOD_PPI;
  spec->degree = 3;
  spec->epsilon = 0.01;
  spec->sweep_order = PPI_SWEEP_X_THEN_Y;
  spec->hidden_extremum = 0;
  spec->resolutions = nullptr;
  spec->resolution_count = 0;
}

ppi_status ppi_experiment_run(const ppi_experiment_spec* spec,
                              ppi_experiment** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = nullptr;
    require(spec != nullptr, "spec is null");
    require(spec->resolution_count == 0 || spec->resolutions != nullptr,
            "resolution array is null");
    bench::ExperimentSpec s;
    s.function = function_of(spec->function);
    s.mesh = mesh_of(spec->mesh);
    s.method = method_of(spec->method);
    s.degree = spec->degree;
    s.epsilon = spec->epsilon;
    s.sweep_order = sweep_of(spec->sweep_order);
    s.hidden_extremum = spec->hidden_extremum != 0;
    s.resolutions.assign(spec->resolutions,
                         spec->resolutions + spec->resolution_count);
    s = bench::resolve(s);
    auto experiment = std::make_unique<ppi_experiment>();
    experiment->spec = s;
    experiment->rows = bench::run_experiment(s);
    experiment->csv = bench::format_csv(s, experiment->rows);
    experiment->table = bench::format_table(s, experiment->rows);
    *out = experiment.release();
  });
}

size_t ppi_experiment_row_count(const ppi_experiment* experiment) {
  return experiment ? experiment->rows.size() : 0;
}

ppi_status ppi_experiment_row(const ppi_experiment* experiment, size_t row,
                              size_t* points, double* l2_error, double* rate,
                              int* has_rate) {
  return guarded([&] {
    require(experiment != nullptr, "experiment is null");
    if (row >= experiment->rows.size()) throw InvalidArgument("row out of range");
    const auto& r = experiment->rows[row];
    if (points) *points = r.points;
    if (l2_error) *l2_error = r.l2_error;
    if (rate) *rate = r.rate.value_or(0.0);
    if (has_rate) *has_rate = r.rate.has_value() ? 1 : 0;
  });
}

const char* ppi_experiment_csv(const ppi_experiment* experiment) {
  return experiment ? experiment->csv.c_str() : "";
}

const char* ppi_experiment_table(const ppi_experiment* experiment) {
  return experiment ? experiment->table.c_str() : "";
}

ppi_status ppi_experiment_write_csv(const ppi_experiment* experiment,
                                    const char* path) {
  return guarded([&] {
    require(experiment != nullptr && path != nullptr, "null argument");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError(std::string("cannot open ") + path);
    file << experiment->csv;
    file.close();
    if (!file) throw IoError(std::string("failed writing ") + path);
  });
}

void ppi_experiment_destroy(ppi_experiment* experiment) { delete experiment; }

}  // extern "C"
