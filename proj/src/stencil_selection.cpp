#include "ppinterp/stencil_selection.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "ppinterp/error.hpp"

namespace ppinterp {

void validate(const InterpConfig& config) {
  if (config.target_degree < 1) {
    throw InvalidArgument("target degree must be >= 1, got " +
                          std::to_string(config.target_degree));
  }
  if (!std::isfinite(config.epsilon) || config.epsilon < 0.0) {
    throw InvalidArgument("epsilon must be finite and >= 0");
  }
}

NeighbourSlopes neighbour_slopes(const DividedDifferenceTable& table,
                                 std::size_t interval) {
  const std::size_t n = table.size();
  const double center = table(interval, 1);
  const double left = interval > 0 ? table(interval - 1, 1) : center;
  const double right = interval + 2 < n ? table(interval + 1, 1) : center;
  return {left, center, right};
}

ExtremumKind classify_extremum(const NeighbourSlopes& slopes) {
  const double outer = slopes.left * slopes.right;
  if (outer < 0.0) {
    return slopes.left < 0.0 ? ExtremumKind::kMinimum : ExtremumKind::kMaximum;
  }
  if (slopes.left * slopes.center < 0.0) return ExtremumKind::kAmbiguous;
  return ExtremumKind::kNone;
}

ExtremumKind detect_extremum(const DividedDifferenceTable& table,
                             std::size_t interval) {
  return classify_extremum(neighbour_slopes(table, interval));
}

ValueWindow interval_window(std::size_t interval, std::span<const double> values,
                            ExtremumKind extremum, double epsilon) {
  const double lo = std::min(values[interval], values[interval + 1]);
  const double hi = std::max(values[interval], values[interval + 1]);
  const bool open_below = extremum == ExtremumKind::kMinimum ||
                          extremum == ExtremumKind::kAmbiguous;
  const bool open_above = extremum == ExtremumKind::kMaximum ||
                          extremum == ExtremumKind::kAmbiguous;
  const double margin_below = open_below ? std::abs(lo) : epsilon * std::abs(lo);
  const double margin_above = open_above ? std::abs(hi) : epsilon * std::abs(hi);
  return {lo - margin_below, hi + margin_above};
}

RelaxationFactors compute_m_bounds(Method method, std::size_t interval,
                                   const DividedDifferenceTable& table,
                                   const ValueWindow& window, Side first_side) {
  const double ui = table.value(interval);
  const double uj = table.value(interval + 1);
  if (method != Method::kPpi) {
    if (ui == uj) return {0.0, 1.0, Normalization::kLinearFallback};
    return {0.0, 1.0, Normalization::kSlope};
  }
  if (ui != uj) {
    const double jump = uj - ui;
    const double a = (window.lower - ui) / jump;
    const double b = (window.upper - ui) / jump;
    // Case u_{i+1} > u_i maps u_min to the lower factor; otherwise the
    // window endpoints swap roles.
    if (jump > 0.0) return {std::min(0.0, a), std::max(1.0, b), Normalization::kSlope};
    return {std::min(0.0, b), std::max(1.0, a), Normalization::kSlope};
  }

  const std::size_t left = first_side == Side::kLeft ? interval - 1 : interval;
  const double curvature = table(left, 2);
  if (curvature == 0.0) return {0.0, 0.0, Normalization::kLinearFallback};
  const double h = table.point(interval + 1) - table.point(interval);
  const double width1 = table.point(left + 2) - table.point(left);
  const double w = curvature * h * width1;
  const double a = (window.lower - ui) / w;
  const double b = (window.upper - ui) / w;
  if (curvature > 0.0) return {std::min(0.0, a), std::max(0.0, b), Normalization::kCurvature};
  return {std::min(0.0, b), std::max(0.0, a), Normalization::kCurvature};
}

BoundPair ppi_initial_bounds(double m_lower, double m_upper, double width1) {
  return {(-4.0 * (m_upper - 1.0) - 1.0) * width1,
          (-4.0 * m_lower + 1.0) * width1};
}

BoundPair curvature_initial_bounds(double m_lower, double m_upper,
                                   double width1) {
  return {-4.0 * m_upper * width1, -4.0 * m_lower * width1};
}

bool admissible(const BoundLedger& ledger) {
  return ledger.b_minus < 0.0 && ledger.b_plus > 0.0 &&
         ledger.b_minus <= ledger.lambda_bar &&
         ledger.lambda_bar <= ledger.b_plus;
}

BoundLedger advance_bounds(const BoundLedger& ledger, double offset,
                           double width) {
  BoundLedger next = ledger;
  next.step = ledger.step + 1;
  const double lb = ledger.lambda_bar;
  if (offset <= 0.0) {
    const double scale = width / (1.0 - offset);
    next.b_minus = (ledger.b_minus - lb) * scale;
    next.b_plus = (ledger.b_plus - lb) * scale;
  } else {
    const double scale = width / (-offset);
    next.b_minus = (ledger.b_plus - lb) * scale;
    next.b_plus = (ledger.b_minus - lb) * scale;
  }
  return next;
}

namespace {

struct Candidate {
  Side side;
  BoundLedger ledger;
};

class StencilBuilder {
 public:
  StencilBuilder(const DividedDifferenceTable& table, std::size_t interval,
                 const InterpConfig& config)
      : table_(table),
        config_(config),
        stencil_(interval, table.size()),
        h_(table.point(interval + 1) - table.point(interval)) {}

  IntervalInterpolant run() {
    const std::size_t i = stencil_.interval();
    IntervalInterpolant out;
    out.interval = i;

    const bool high_order = (config_.method == Method::kDbi ||
                             config_.method == Method::kPpi) &&
                            config_.target_degree > 1 && table_.size() > 2;
    if (high_order) {
      out.extremum = detect_extremum(table_, i);
      const std::span<const double> values = table_.values();
      out.window = config_.method == Method::kPpi
                       ? interval_window(i, values, out.extremum, config_.epsilon)
                       : ValueWindow{std::min(table_.value(i), table_.value(i + 1)),
                                     std::max(table_.value(i), table_.value(i + 1))};
      window_ = out.window;
      degenerate_ = table_.value(i) == table_.value(i + 1);
      if (degenerate_ && config_.method == Method::kDbi) {
        // The DBI window collapses to a single value.
        out.normalization = Normalization::kLinearFallback;
      } else {
        out.normalization = degenerate_ ? Normalization::kCurvature
                                        : Normalization::kSlope;
        grow(out);
      }
    } else {
      out.window = {std::min(table_.value(i), table_.value(i + 1)),
                    std::max(table_.value(i), table_.value(i + 1))};
    }

    if (degenerate_ && out.trace.empty() && config_.method == Method::kPpi) {
      out.normalization = Normalization::kLinearFallback;
    }
    out.stencil.assign(stencil_.order().begin(), stencil_.order().end());
    out.coefficients = newton_coefficients(stencil_, table_);
    out.nodes.resize(out.stencil.size());
    for (std::size_t k = 0; k < out.stencil.size(); ++k) {
      out.nodes[k] = table_.point(out.stencil[k]);
    }
    out.degree = static_cast<int>(out.stencil.size()) - 1;
    return out;
  }

 private:
  void grow(IntervalInterpolant& out) {
    const std::size_t max_points =
        std::min<std::size_t>(static_cast<std::size_t>(config_.target_degree) + 1,
                              table_.max_order() + 1);
    BoundLedger ledger;
    while (stencil_.size() < max_points) {
      std::optional<Candidate> left;
      std::optional<Candidate> right;
      if (stencil_.can_grow_left()) left = evaluate(ledger, Side::kLeft);
      if (stencil_.can_grow_right()) right = evaluate(ledger, Side::kRight);

      const Candidate* pick = nullptr;
      if (left && right) {
        const std::size_t mu_left = stencil_.points_left_of_interval();
        const std::size_t mu_right = stencil_.points_right_of_base();
        if (mu_left < mu_right) {
          pick = &*left;
        } else if (mu_left > mu_right) {
          pick = &*right;
        } else {
          pick = std::abs(left->ledger.lambda_bar) >=
                         std::abs(right->ledger.lambda_bar)
                     ? &*right
                     : &*left;
        }
      } else if (left) {
        pick = &*left;
      } else if (right) {
        pick = &*right;
      } else {
        break;
      }

      if (pick->side == Side::kLeft) {
        stencil_.grow_left();
      } else {
        stencil_.grow_right();
      }
      ledger = pick->ledger;
      out.trace.push_back(ledger);
      width_product_ = width_product();
    }
  }

  // Candidate state for V_{j+1} built from the current V_j; nullopt when the
  // expansion is not admissible.
  std::optional<Candidate> evaluate(const BoundLedger& ledger, Side side) const {
    const std::size_t j = stencil_.size() - 2;
    const std::size_t new_left =
        side == Side::kLeft ? stencil_.left() - 1 : stencil_.left();
    const std::size_t new_right =
        side == Side::kRight ? stencil_.right() + 1 : stencil_.right();
    const double full_width = table_.point(new_right) - table_.point(new_left);
    const double width = full_width / h_;
    const double top = table_(new_left, j + 2);

    BoundLedger next;
    if (j == 0) {
      const RelaxationFactors m = compute_m_bounds(
          config_.method, stencil_.interval(), table_, window_, side);
      if (m.normalization == Normalization::kLinearFallback) return std::nullopt;
      const BoundPair b = m.normalization == Normalization::kCurvature
                              ? curvature_initial_bounds(m.lower, m.upper, width)
                              : ppi_initial_bounds(m.lower, m.upper, width);
      next.step = 1;
      next.m_lower = m.lower;
      next.m_upper = m.upper;
      next.b_minus = b.lower;
      next.b_plus = b.upper;
      // In the curvature normalization lambda-bar_1 is 1 by construction.
      next.lambda_bar =
          degenerate_ ? 1.0 : top / table_(stencil_.interval(), 1) * full_width;
    } else {
      const double previous = table_(stencil_.left(), j + 1);
      const double offset =
          (table_.point(stencil_.order()[j + 1]) -
           table_.point(stencil_.interval())) / h_;
      next = advance_bounds(ledger, offset, width);
      if (previous != 0.0) {
        next.lambda_bar = top / previous * full_width * ledger.lambda_bar;
      } else {
        // lambda_j is unbounded but the product is not: use the closed form
        // U[V_j] / U[V_base] * prod(widths).
        next.lambda_bar = top / base_coefficient() * width_product_ * full_width;
      }
    }
    if (!std::isfinite(next.lambda_bar) || !admissible(next)) return std::nullopt;
    return Candidate{side, next};
  }

  // Coefficient normalizing lambda-bar: U[V_0], or U[V_1] when u_i == u_{i+1}.
  double base_coefficient() const {
    return degenerate_ ? table_(stencil_.prefix_left(3), 2)
                       : table_(stencil_.interval(), 1);
  }

  // Product of the stencil widths entering the closed form of lambda-bar.
  double width_product() const {
    double product = 1.0;
    for (std::size_t count = degenerate_ ? 4 : 3; count <= stencil_.size();
         ++count) {
      product *= table_.point(stencil_.prefix_right(count)) -
                 table_.point(stencil_.prefix_left(count));
    }
    return product;
  }

  const DividedDifferenceTable& table_;
  const InterpConfig& config_;
  StencilNodes stencil_;
  double h_;
  ValueWindow window_{};
  bool degenerate_ = false;
  double width_product_ = 1.0;
};

}  // namespace

IntervalInterpolant build_interval_interpolant(
    const DividedDifferenceTable& table, std::size_t interval,
    const InterpConfig& config) {
  validate(config);
  if (interval + 1 >= table.size()) {
    throw InvalidArgument("interval index " + std::to_string(interval) +
                          " out of range");
  }
  if (config.method == Method::kPchip) {
    throw InvalidArgument("PCHIP is not a stencil-selection method");
  }
  return StencilBuilder(table, interval, config).run();
}

}  // namespace ppinterp
