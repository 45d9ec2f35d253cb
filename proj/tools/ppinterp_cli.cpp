// Convergence tables for the benchmark functions, written as CSV.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppinterp/ppinterp.h"

int main(int argc, char** argv) {
  CLI::App app{"Convergence study of data-bounded and positivity-preserving interpolation"};

  ppi_experiment_spec spec;
  ppi_experiment_spec_default(&spec);
  std::vector<size_t> ni;
  std::string out_path;

  const std::map<std::string, ppi_function> functions{
      {"f1", PPI_FUNCTION_F1}, {"f2", PPI_FUNCTION_F2},
      {"f7", PPI_FUNCTION_F7}, {"f10", PPI_FUNCTION_F10}};
  const std::map<std::string, ppi_mesh_family> meshes{
      {"uniform", PPI_MESH_UNIFORM}, {"lgl", PPI_MESH_LGL}};
  const std::map<std::string, ppi_method> methods{
      {"pchip", PPI_METHOD_PCHIP}, {"dbi", PPI_METHOD_DBI},
      {"ppi", PPI_METHOD_PPI}, {"linear", PPI_METHOD_LINEAR}};
  const std::map<std::string, ppi_sweep_order> sweeps{
      {"xy", PPI_SWEEP_X_THEN_Y}, {"yx", PPI_SWEEP_Y_THEN_X}};

  app.add_option("--function", spec.function, "f1, f2 (1D) or f7, f10 (2D)")
      ->required()
      ->transform(CLI::CheckedTransformer(functions, CLI::ignore_case));
  app.add_option("--mesh", spec.mesh, "uniform or lgl")
      ->transform(CLI::CheckedTransformer(meshes, CLI::ignore_case));
  app.add_option("--method", spec.method, "pchip, dbi, ppi or linear")
      ->required()
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  app.add_option("--degree", spec.degree, "target polynomial degree (dbi, ppi)")
      ->check(CLI::PositiveNumber);
  app.add_option("--epsilon", spec.epsilon, "PPI relaxation")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--ni", ni, "comma-separated point counts per axis")
      ->delimiter(',')
      ->check(CLI::Range(size_t{2}, size_t{1} << 20));
  app.add_option("--out", out_path, "CSV output path");
  app.add_option("--sweep-order", spec.sweep_order, "2D sweep order: xy or yx")
      ->transform(CLI::CheckedTransformer(sweeps, CLI::ignore_case));
  bool hidden = false;
  app.add_flag("--hidden-extremum", hidden,
               "even point counts so the extremum falls between nodes");

  CLI11_PARSE(app, argc, argv);

  spec.hidden_extremum = hidden ? 1 : 0;
  spec.resolutions = ni.empty() ? nullptr : ni.data();
  spec.resolution_count = ni.size();

  ppi_experiment* experiment = nullptr;
  if (ppi_experiment_run(&spec, &experiment) != PPI_OK) {
    std::fprintf(stderr, "error: %s\n", ppi_last_error_message());
    return 2;
  }
  std::fputs(ppi_experiment_table(experiment), stdout);
  int status = 0;
  if (!out_path.empty() &&
      ppi_experiment_write_csv(experiment, out_path.c_str()) != PPI_OK) {
    std::fprintf(stderr, "error: %s\n", ppi_last_error_message());
    status = 1;
  }
  ppi_experiment_destroy(experiment);
  return status;
}
