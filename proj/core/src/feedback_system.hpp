#pragma once

// Shared by the integrator and the phase-line outcome analysis: resolves what
// the closed-loop system does from a given state.

#include <cmath>
#include <optional>
#include <vector>

#include "acd/model.hpp"
#include "acd/policy.hpp"

namespace acd::detail {

struct Controls {
  double pi_B = 0.0;
  double pi_R = 0.0;  // implied level when the attacker is non-strategic
};

struct Motion {
  Controls controls;
  double rate = 0.0;       // alpha_B - alpha_R
  bool hold = false;       // state does not move
  bool has_target = false; // next critical state in the direction of motion
  double target = 0.0;
};

class FeedbackSystem {
 public:
  FeedbackSystem(const FeedbackPolicy& defender, const FeedbackPolicy* attacker,
                 const ModelParams& params);

  Motion resolve(double i) const;

  double attacker_power(double pi_R) const noexcept {
    return attacker_ ? params_.power(pi_R) : params_.alpha_R;
  }
  double rate(const Controls& c) const noexcept {
    return params_.power(c.pi_B) - attacker_power(c.pi_R);
  }
  bool strategic_attacker() const noexcept { return attacker_ != nullptr; }
  const ModelParams& params() const noexcept { return params_; }

 private:
  Controls point_controls(double i) const;
  Controls region_controls(double i) const;
  bool negligible(double r) const noexcept { return std::abs(r) <= rate_tol_; }

  const FeedbackPolicy& defender_;
  const FeedbackPolicy* attacker_;
  ModelParams params_;
  std::vector<double> critical_;
  double fixed_pi_R_;
  double rate_tol_;
};

}  // namespace acd::detail
