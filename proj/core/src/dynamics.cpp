#include "acd/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "acd/error.hpp"
#include "feedback_system.hpp"

namespace acd {

const char* to_string(CostShape shape) {
  return shape == CostShape::linear ? "linear" : "quadratic";
}

namespace {

using detail::Controls;
using detail::FeedbackSystem;
using detail::Motion;

struct State {
  double i = 0.0;
  double cost_B = 0.0;
  double cost_R = 0.0;
};

class Stepper {
 public:
  explicit Stepper(const FeedbackSystem& sys) : sys_(sys), p_(sys.params()) {}

  // Advances the state from t0 by h.
  void advance(double t0, State& s, double h) const {
    double t = t0;
    double remaining = h;
    for (int guard = 0; remaining > 0.0; ++guard) {
      const Motion m = sys_.resolve(s.i);
      if (m.hold) {
        hold(t, s, remaining, m.controls);
        return;
      }
      double dt = remaining;
      bool hit = false;
      // Event location: stop exactly on the next breakpoint in the direction of motion.
      if (m.has_target && guard < kMaxEvents) {
        const double tau = std::log(odds(m.target) / odds(s.i)) / m.rate;
        if (tau <= remaining) {
          dt = std::max(tau, 0.0);
          hit = true;
        }
      }
      rk4(t, s, dt, m.controls, m.rate);
      if (hit) s.i = m.target;
      s.i = std::clamp(s.i, 0.0, 1.0);
      t += dt;
      remaining -= dt;
    }
  }

  Controls controls_at(double i) const { return sys_.resolve(i).controls; }

 private:
  static constexpr int kMaxEvents = 64;

  double loss_B(double i, const Controls& c) const { return p_.f_B(i) + p_.k_B * c.pi_B; }
  double loss_R(double i, const Controls& c) const { return p_.f_R(i) + p_.k_R * c.pi_R; }

  void rk4(double t, State& s, double h, const Controls& c, double rate) const {
    if (h <= 0.0) return;
    auto f = [rate](double x) { return rate * x * (1.0 - x); };
    const double d0 = std::exp(-p_.z * t);
    const double dm = std::exp(-p_.z * (t + 0.5 * h));
    const double d1 = std::exp(-p_.z * (t + h));

    const double x1 = s.i;
    const double k1 = f(x1);
    const double x2 = s.i + 0.5 * h * k1;
    const double k2 = f(x2);
    const double x3 = s.i + 0.5 * h * k2;
    const double k3 = f(x3);
    const double x4 = s.i + h * k3;
    const double k4 = f(x4);

    s.i += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    s.cost_B += h / 6.0 *
                (d0 * loss_B(x1, c) + 2.0 * dm * loss_B(x2, c) + 2.0 * dm * loss_B(x3, c) +
                 d1 * loss_B(x4, c));
    s.cost_R += h / 6.0 *
                (d0 * loss_R(x1, c) + 2.0 * dm * loss_R(x2, c) + 2.0 * dm * loss_R(x3, c) +
                 d1 * loss_R(x4, c));
  }

  // Static state: the discounted integral of a constant integrand is exact.
  void hold(double t, State& s, double h, const Controls& c) const {
    const double w = (std::exp(-p_.z * t) - std::exp(-p_.z * (t + h))) / p_.z;
    s.cost_B += w * loss_B(s.i, c);
    s.cost_R += w * loss_R(s.i, c);
  }

  const FeedbackSystem& sys_;
  const ModelParams& p_;
};

void check_inputs(const ModelParams& params, double i0, double step) {
  params.validate();
  if (!(std::isfinite(i0) && i0 >= 0.0 && i0 <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "initial state must lie in [0, 1]");
  }
  if (!(std::isfinite(step) && step > 0.0)) {
    throw Error(ErrorKind::invalid_argument, "integrator step must be positive");
  }
}

std::size_t step_count(double horizon, double step) {
  if (horizon <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
}

}  // namespace

Trajectory integrate(const FeedbackPolicy& defender, const std::optional<FeedbackPolicy>& attacker,
                     const ModelParams& params, double i0, double t_end, double step) {
  check_inputs(params, i0, step);
  if (!(std::isfinite(t_end) && t_end >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "t_end must be finite and non-negative");
  }
  const FeedbackSystem sys(defender, attacker ? &*attacker : nullptr, params);
  const Stepper stepper(sys);

  Trajectory traj;
  traj.step = step;
  const std::size_t n = step_count(t_end, step);
  traj.samples.reserve(n + 1);

  State s{i0, 0.0, 0.0};
  auto record = [&](double t) {
    const Controls c = stepper.controls_at(s.i);
    Sample smp;
    smp.t = t;
    smp.i_B = s.i;
    smp.pi_B = c.pi_B;
    if (attacker) smp.pi_R = c.pi_R;
    smp.running_cost = s.cost_B;
    smp.attacker_cost = s.cost_R;
    traj.samples.push_back(smp);
  };

  record(0.0);
  double t = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double t_next = k == n ? t_end : static_cast<double>(k) * step;
    stepper.advance(t, s, t_next - t);
    t = t_next;
    record(t);
  }
  return traj;
}

double discount_horizon(const ModelParams& params, double tail) {
  if (!(tail > 0.0)) throw Error(ErrorKind::invalid_argument, "tail tolerance must be positive");
  const double bound = std::max(std::abs(params.fB_slope), std::abs(params.fR_slope)) +
                       std::max(params.k_B, params.k_R);
  return std::max(0.0, std::log(bound / (params.z * tail)) / params.z);
}

CostPair discounted_costs(const FeedbackPolicy& defender,
                          const std::optional<FeedbackPolicy>& attacker,
                          const ModelParams& params, double i0, const DiscountOptions& opts) {
  check_inputs(params, i0, opts.step);
  const double horizon = opts.horizon_scale * discount_horizon(params, opts.tail);
  const FeedbackSystem sys(defender, attacker ? &*attacker : nullptr, params);
  const Stepper stepper(sys);

  State s{i0, 0.0, 0.0};
  const std::size_t n = step_count(horizon, opts.step);
  double t = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double t_next = k == n ? horizon : static_cast<double>(k) * opts.step;
    stepper.advance(t, s, t_next - t);
    t = t_next;
  }
  return {s.cost_B, s.cost_R};
}

double discounted_cost(const FeedbackPolicy& defender, const std::optional<FeedbackPolicy>& attacker,
                       const ModelParams& params, double i0, Player whose,
                       const DiscountOptions& opts) {
  return discounted_costs(defender, attacker, params, i0, opts).of(whose);
}

double fast_cost(std::span<const double> controls, double T, const ModelParams& params,
                 CostShape shape) {
  if (!(std::isfinite(T) && T >= 0.0)) {
    throw Error(ErrorKind::invalid_argument, "fast_cost: T must be finite and non-negative");
  }
  if (controls.empty()) return T;
  double total = 0.0;
  for (double pi : controls) total += effort(pi, shape);
  return T + params.lambda * T * total / static_cast<double>(controls.size());
}

}  // namespace acd
