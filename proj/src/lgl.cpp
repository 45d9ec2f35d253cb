#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ppinterp/bench.hpp"
#include "ppinterp/error.hpp"

namespace ppinterp::bench {

namespace {

struct LegendrePair {
  double p_n;
  double p_nm1;
};

// P_n(x) and P_{n-1}(x) by the three-term recurrence.
LegendrePair legendre(std::size_t n, double x) {
  double prev = 1.0;
  double cur = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0) * x * cur - (k - 1.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

std::vector<double> lgl_nodes(std::size_t count) {
  if (count < 2) throw InvalidArgument("LGL rule needs at least 2 nodes");
  const std::size_t n = count - 1;
  if (n == 1) return {-1.0, 1.0};

  // (1 - x^2) P'_n(x) = n (P_{n-1}(x) - x P_n(x)), so the nodes are the roots
  // of g(x) = x P_n(x) - P_{n-1}(x), with g'(x) = (n + 1) P_n(x).
  constexpr int kMaxIterations = 100;
  constexpr double kTolerance = 1e-14;
  std::vector<double> nodes(count);
  for (std::size_t k = 0; k < count; ++k) {
    double x = -std::cos(std::numbers::pi * static_cast<double>(k) / n);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      const auto [p_n, p_nm1] = legendre(n, x);
      const double g = x * p_n - p_nm1;
      double step = g / ((n + 1.0) * p_n);
      // Damp steps that would leave [-1, 1].
      while (std::abs(x - step) > 1.0) step *= 0.5;
      x -= step;
      if (std::abs(step) <= kTolerance) {
        converged = true;
        break;
      }
    }
    const auto [p_n, p_nm1] = legendre(n, x);
    if (!converged || std::abs(x * p_n - p_nm1) > kTolerance * n) {
      throw NumericalError("LGL Newton iteration did not converge for node " +
                           std::to_string(k) + " of " + std::to_string(count));
    }
    nodes[k] = x;
  }
  std::sort(nodes.begin(), nodes.end());
  // Enforce exact symmetry.
  for (std::size_t k = 0; k < count / 2; ++k) {
    const double m = 0.5 * (nodes[count - 1 - k] - nodes[k]);
    nodes[k] = -m;
    nodes[count - 1 - k] = m;
  }
  if (count % 2 == 1) nodes[count / 2] = 0.0;
  nodes.front() = -1.0;
  nodes.back() = 1.0;
  return nodes;
}

std::vector<double> lgl_mesh(Domain domain, std::size_t count) {
  constexpr std::size_t kSub = kLglElementNodes - 1;
  if (count < kLglElementNodes || (count - 1) % kSub != 0) {
    throw InvalidArgument("LGL mesh needs (N - 1) divisible by " +
                          std::to_string(kSub) + ", got N = " +
                          std::to_string(count));
  }
  const std::size_t elements = (count - 1) / kSub;
  const auto reference = lgl_nodes(kLglElementNodes);
  const auto breaks = uniform_mesh(domain, elements + 1);
  std::vector<double> points;
  points.reserve(count);
  points.push_back(domain.lower);
  for (std::size_t e = 0; e < elements; ++e) {
    const double a = breaks[e];
    const double b = breaks[e + 1];
    for (std::size_t k = 1; k + 1 < kLglElementNodes; ++k) {
      points.push_back(a + 0.5 * (b - a) * (reference[k] + 1.0));
    }
    points.push_back(b);
  }
  return points;
}

}  // namespace ppinterp::bench
