#pragma once

// Model parameters and the scalar attack-defense state equation
//
//   di_B/dt = (alpha_B - alpha_R) * i_B * (1 - i_B),   alpha = b + pi * (a - b)
//
// where i_B is the fraction of nodes held by the defender and i_R = 1 - i_B
// the fraction held by the attacker.

#include <string>

namespace acd {

/// Band around a singular / breakpoint state inside which its point control applies.
inline constexpr double kRootBand = 1e-9;

struct ModelParams {
  double a = 1.0;          // upper control power
  double b = 0.0;          // lower control power
  double alpha_R = 0.5;    // attacker power when the attacker is non-strategic
  double z = 0.5;          // discount rate
  double k_B = 0.0;        // defender detection-cost ratio
  double k_R = 0.0;        // attacker penetration-cost ratio
  double lambda = 1.0;     // time-vs-effort ratio for the fast problems
  double fB_slope = -1.0;  // f_B(i) = -fB_slope * (1 - i)
  double fR_slope = 1.0;   // f_R(i) = fR_slope * i

  /// Throws Error(invalid_argument) naming the first violated invariant.
  void validate() const;

  double span() const noexcept { return a - b; }

  /// Power induced by control level pi.
  double power(double pi) const noexcept { return b + pi * (a - b); }

  /// Defender recovery cost; non-increasing, zero when the defender holds everything.
  double f_B(double i_B) const noexcept { return -fB_slope * (1.0 - i_B); }

  /// Attacker maintenance cost; non-decreasing, zero when the attacker holds everything.
  double f_R(double i_B) const noexcept { return fR_slope * i_B; }

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

enum class Player { defender, attacker };

const char* to_string(Player p);

/// Right-hand side of the state equation.
inline double drift(double i_B, double alpha_B, double alpha_R) noexcept {
  return (alpha_B - alpha_R) * i_B * (1.0 - i_B);
}

/// Logistic solution of the state equation under constant powers. Rejects the
/// absorbing states i0 in {0, 1}, where the odds transform is singular.
double closed_form_state(double t, double i0, double alpha_B, double alpha_R);

/// x / (1 - x)
inline double odds(double x) noexcept { return x / (1.0 - x); }

}  // namespace acd
