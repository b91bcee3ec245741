#pragma once

#include <string>
#include <vector>

namespace acd {

/// A control value applied only at (within kRootBand of) one state.
struct PointControl {
  double state = 0.0;
  double control = 0.0;

  friend bool operator==(const PointControl&, const PointControl&) = default;
};

/// Piecewise-constant state-feedback control rule on [0, 1].
///
/// `breakpoints` x_1 < ... < x_n split [0, 1] into n + 1 open regions, and
/// `values[k]` is the control on region k. A state within kRootBand of a
/// `singular_points` entry takes that entry's control instead; a state within
/// the band of a breakpoint with no such entry takes the value of the region
/// to its right.
class FeedbackPolicy {
 public:
  FeedbackPolicy() : values_{0.0} {}

  /// Throws Error(invalid_argument) when the invariants do not hold.
  FeedbackPolicy(std::vector<double> breakpoints, std::vector<double> values,
                 std::vector<PointControl> singular_points = {});

  static FeedbackPolicy constant(double control);

  /// Control applied at state i_B.
  double operator()(double i_B) const;

  /// Control on the open region containing i_B, ignoring point controls.
  double region_value(double i_B) const;

  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<PointControl>& singular_points() const noexcept { return singular_; }

  /// Breakpoints and singular states, sorted and deduplicated.
  std::vector<double> critical_states() const;

  bool is_constant() const noexcept { return breakpoints_.empty() && singular_.empty(); }

  /// Human-readable region listing, e.g. "0 on (0,0.146), 0.5 at 0.146, ...".
  std::string describe() const;

  friend bool operator==(const FeedbackPolicy&, const FeedbackPolicy&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  std::vector<PointControl> singular_;
};

}  // namespace acd
