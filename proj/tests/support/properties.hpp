#pragma once

// Randomized property checks of the interpolation guarantees. Each check
// returns a report instead of asserting so it can back both unit tests and
// the acceptance run.

#include <cstddef>
#include <cstdint>
#include <string>

namespace properties {

struct Report {
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  ///< first failure, empty on success
};

inline constexpr double kRangeTolerance = 1e-12;      // times data scale
inline constexpr double kReductionTolerance = 1e-14;  // relative
inline constexpr double kNewtonTolerance = 1e-12;     // relative
inline constexpr std::size_t kSamplesPerInterval = 1000;

/// DBI stays within the end values of every interval and PPI within its
/// relaxed window, on random nonuniform meshes and data.
Report range_invariants(std::size_t trials, std::uint64_t seed);

/// PPI (epsilon <= 0.01) on nonnegative data never goes below zero.
Report ppi_positivity(std::size_t trials, std::uint64_t seed);

/// PPI with epsilon = 0 equals DBI on strictly monotone data.
Report epsilon_zero_reduction(std::size_t trials, std::uint64_t seed);

/// Stencils match the exhaustive enumerator on meshes of at most 6 points.
Report brute_force_equivalence(std::size_t trials, std::uint64_t seed);

/// Every accepted step of every interval satisfies B^- < 0 < B^+ and
/// B^- <= lambda-bar <= B^+, and every interval reproduces its end values.
Report ledger_soundness(std::size_t trials, std::uint64_t seed);

/// Newton form over random insertion-ordered stencils agrees with the
/// Lagrange form, relative to sum |u_k l_k(x)|.
Report newton_vs_lagrange(std::size_t trials, std::uint64_t seed);

}  // namespace properties
