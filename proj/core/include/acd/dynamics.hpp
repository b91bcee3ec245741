#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acd/model.hpp"
#include "acd/policy.hpp"

namespace acd {

inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kDefaultTail = 1e-9;

struct Sample {
  double t = 0.0;
  double i_B = 0.0;
  double pi_B = 0.0;
  std::optional<double> pi_R;  // empty when the attacker is non-strategic
  double running_cost = 0.0;   // discounted defender cost accumulated on [0, t]
  double attacker_cost = 0.0;  // discounted attacker cost accumulated on [0, t]

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct Trajectory {
  std::vector<Sample> samples;
  double step = kDefaultStep;

  const Sample& back() const { return samples.back(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// Fixed-step RK4 path of the state equation with both controls re-evaluated
/// from the current state. `attacker` empty means the attacker keeps
/// params.alpha_R. Steps are split where the path reaches a policy breakpoint,
/// and a state trapped between opposing regions is held with the equivalent
/// (drift-cancelling) mix of the two controls.
Trajectory integrate(const FeedbackPolicy& defender, const std::optional<FeedbackPolicy>& attacker,
                     const ModelParams& params, double i0, double t_end,
                     double step = kDefaultStep);

struct DiscountOptions {
  double step = kDefaultStep;
  double tail = kDefaultTail;   // bound on the neglected part of the integral
  double horizon_scale = 1.0;   // multiplies the truncation horizon (for checks)
};

/// Truncation horizon T with sup|integrand| * e^{-zT} / z <= tail.
double discount_horizon(const ModelParams& params, double tail = kDefaultTail);

struct CostPair {
  double defender = 0.0;
  double attacker = 0.0;

  double of(Player p) const noexcept { return p == Player::defender ? defender : attacker; }

  friend bool operator==(const CostPair&, const CostPair&) = default;
};

/// Infinite-horizon discounted costs of both players, truncated at discount_horizon.
CostPair discounted_costs(const FeedbackPolicy& defender,
                          const std::optional<FeedbackPolicy>& attacker,
                          const ModelParams& params, double i0, const DiscountOptions& opts = {});

double discounted_cost(const FeedbackPolicy& defender, const std::optional<FeedbackPolicy>& attacker,
                       const ModelParams& params, double i0, Player whose,
                       const DiscountOptions& opts = {});

enum class CostShape { linear, quadratic };

const char* to_string(CostShape shape);

/// Effort penalty h(pi).
inline double effort(double pi, CostShape shape) noexcept {
  return shape == CostShape::linear ? pi : pi * pi;
}

/// T + lambda * integral of h(pi) over [0, T], with `controls` held piecewise
/// constant on equal sub-intervals of [0, T].
double fast_cost(std::span<const double> controls, double T, const ModelParams& params,
                 CostShape shape);

}  // namespace acd
