#pragma once

#include <optional>
#include <string>

#include "acd/model.hpp"
#include "acd/policy.hpp"

namespace acd {

/// Long-run behaviour of i_B(t) under a closed-loop control pair.
struct Outcome {
  enum class Kind { static_state, converges_to, collapses_to_zero, occupies_all };

  Kind kind = Kind::static_state;
  double limit = 0.0;  // lim i_B(t)

  std::string tag() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

const char* to_string(Outcome::Kind kind);

/// Follows the phase line of the piecewise-constant closed-loop system from i0
/// to the state where it stops, or to 0 / 1.
Outcome phase_line_outcome(const FeedbackPolicy& defender,
                           const std::optional<FeedbackPolicy>& attacker,
                           const ModelParams& params, double i0);

}  // namespace acd
