#ifndef PPINTERP_PPINTERP_H
#define PPINTERP_PPINTERP_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PPINTERP_BUILDING)
#    define PPI_API __declspec(dllexport)
#  else
#    define PPI_API __declspec(dllimport)
#  endif
#else
#  define PPI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppi_status {
  PPI_OK = 0,
  PPI_ERR_INVALID_ARGUMENT = 1,
  PPI_ERR_INVALID_MESH = 2,
  PPI_ERR_OUT_OF_DOMAIN = 3,
  PPI_ERR_NUMERICAL = 4,
  PPI_ERR_IO = 5,
  PPI_ERR_INTERNAL = 6
} ppi_status;

typedef enum ppi_method {
  PPI_METHOD_DBI = 0,
  PPI_METHOD_PPI = 1,
  PPI_METHOD_PCHIP = 2,
  PPI_METHOD_LINEAR = 3
} ppi_method;

typedef enum ppi_sweep_order {
  PPI_SWEEP_X_THEN_Y = 0,
  PPI_SWEEP_Y_THEN_X = 1
} ppi_sweep_order;

typedef enum ppi_function {
  PPI_FUNCTION_F1 = 0,
  PPI_FUNCTION_F2 = 1,
  PPI_FUNCTION_F7 = 2,
  PPI_FUNCTION_F10 = 3
} ppi_function;

typedef enum ppi_mesh_family {
  PPI_MESH_UNIFORM = 0,
  PPI_MESH_LGL = 1
} ppi_mesh_family;

typedef struct ppi_config {
  ppi_method method;
  int degree;
  double epsilon;
  ppi_sweep_order sweep_order;
} ppi_config;

/* PPI, degree 3, epsilon 0.01, x then y. */
PPI_API void ppi_config_default(ppi_config* config);

/* Message of the last failing call on this thread; "" if none. */
PPI_API const char* ppi_last_error_message(void);
PPI_API const char* ppi_status_string(ppi_status status);

typedef struct ppi_interpolator ppi_interpolator;

/* Copies x and u; x must be strictly increasing with n >= 2. */
PPI_API ppi_status ppi_interpolator_create(const double* x, const double* u,
                                           size_t n, const ppi_config* config,
                                           ppi_interpolator** out);
PPI_API ppi_status ppi_interpolator_evaluate(const ppi_interpolator* interp,
                                             const double* queries, size_t count,
                                             double* out);
/* Achieved polynomial degree on interval [x_i, x_{i+1}]. */
PPI_API ppi_status ppi_interpolator_interval_degree(
    const ppi_interpolator* interp, size_t interval, int* degree);
PPI_API void ppi_interpolator_destroy(ppi_interpolator* interp);

/* Tensor-product interpolation. values and out are row-major with y along
   rows: values[iy * nx + ix], out[iq * nxq + jq]. */
PPI_API ppi_status ppi_interpolate_2d(const double* x, size_t nx,
                                      const double* y, size_t ny,
                                      const double* values,
                                      const double* x_queries, size_t nxq,
                                      const double* y_queries, size_t nyq,
                                      const ppi_config* config, double* out);

typedef struct ppi_experiment_spec {
  ppi_function function;
  ppi_mesh_family mesh;
  ppi_method method;
  int degree;
  double epsilon;
  ppi_sweep_order sweep_order;
  int hidden_extremum;
  /* Point counts per axis; NULL or zero count selects the default ladder. */
  const size_t* resolutions;
  size_t resolution_count;
} ppi_experiment_spec;

PPI_API void ppi_experiment_spec_default(ppi_experiment_spec* spec);

typedef struct ppi_experiment ppi_experiment;

PPI_API ppi_status ppi_experiment_run(const ppi_experiment_spec* spec,
                                      ppi_experiment** out);
PPI_API size_t ppi_experiment_row_count(const ppi_experiment* experiment);
/* has_rate is 0 on the first row. */
PPI_API ppi_status ppi_experiment_row(const ppi_experiment* experiment,
                                      size_t row, size_t* points,
                                      double* l2_error, double* rate,
                                      int* has_rate);
/* Strings stay valid until the experiment is destroyed. */
PPI_API const char* ppi_experiment_csv(const ppi_experiment* experiment);
PPI_API const char* ppi_experiment_table(const ppi_experiment* experiment);
PPI_API ppi_status ppi_experiment_write_csv(const ppi_experiment* experiment,
                                            const char* path);
PPI_API void ppi_experiment_destroy(ppi_experiment* experiment);

#ifdef __cplusplus
}
#endif

#endif
