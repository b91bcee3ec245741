#include "acd/model.hpp"

#include <cmath>
#include <string>

#include "acd/error.hpp"

namespace acd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::unreachable_target: return "unreachable-target";
    case ErrorKind::inadmissible_singular: return "inadmissible-singular";
    case ErrorKind::regime_mismatch: return "regime-mismatch";
    case ErrorKind::verification_failed: return "verification-failed";
  }
  return "unknown";
}

const char* to_string(Player p) {
  return p == Player::defender ? "defender" : "attacker";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::invalid_argument, what);
}

}  // namespace

void ModelParams::validate() const {
  for (double v : {a, b, alpha_R, z, k_B, k_R, lambda, fB_slope, fR_slope}) {
    require(std::isfinite(v), "model parameters must be finite");
  }
  require(0.0 <= b && b < a && a <= 1.0, "control powers must satisfy 0 <= b < a <= 1");
  require(z > 0.0, "discount rate z must be positive");
  require(lambda > 0.0, "lambda must be positive");
  require(k_B >= 0.0 && k_R >= 0.0, "cost ratios k_B, k_R must be non-negative");
  require(fB_slope < 0.0, "fB_slope must be negative");
  require(fR_slope > 0.0, "fR_slope must be positive");
}

double closed_form_state(double t, double i0, double alpha_B, double alpha_R) {
  if (!(i0 > 0.0 && i0 < 1.0)) {
    throw Error(ErrorKind::invalid_argument,
                "closed_form_state: i0 must lie strictly inside (0, 1)");
  }
  const double r = alpha_B - alpha_R;
  if (r == 0.0) return i0;
  // Logistic form 1 / (1 + e^{-x}) stays accurate at both tails.
  const double x = std::log(odds(i0)) + r * t;
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace acd
