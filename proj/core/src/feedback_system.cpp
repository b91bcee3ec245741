#include "feedback_system.hpp"

#include <algorithm>

namespace acd::detail {

FeedbackSystem::FeedbackSystem(const FeedbackPolicy& defender, const FeedbackPolicy* attacker,
                               const ModelParams& params)
    : defender_(defender),
      attacker_(attacker),
      params_(params),
      critical_(defender.critical_states()),
      fixed_pi_R_((params.alpha_R - params.b) / params.span()),
      rate_tol_(1e-12 * std::max(1.0, std::abs(params.a))) {
  if (attacker_) {
    const auto extra = attacker_->critical_states();
    critical_.insert(critical_.end(), extra.begin(), extra.end());
    std::sort(critical_.begin(), critical_.end());
    critical_.erase(std::unique(critical_.begin(), critical_.end()), critical_.end());
  }
  // 0 and 1 are absorbing and handled separately.
  std::erase_if(critical_, [](double x) { return x <= 0.0 || x >= 1.0; });
}

Controls FeedbackSystem::point_controls(double i) const {
  return {defender_(i), attacker_ ? (*attacker_)(i) : fixed_pi_R_};
}

Controls FeedbackSystem::region_controls(double i) const {
  return {defender_.region_value(i), attacker_ ? attacker_->region_value(i) : fixed_pi_R_};
}

Motion FeedbackSystem::resolve(double i) const {
  Motion m;
  if (i <= 0.0 || i >= 1.0) {
    m.controls = point_controls(i);
    m.hold = true;
    return m;
  }

  const std::size_t n = critical_.size();
  const auto it = std::lower_bound(critical_.begin(), critical_.end(), i - kRootBand);
  const std::size_t k = static_cast<std::size_t>(it - critical_.begin());

  if (k < n && std::abs(critical_[k] - i) < kRootBand) {
    const Controls cp = point_controls(i);
    const double rp = rate(cp);
    if (negligible(rp)) {
      m.controls = cp;
      m.hold = true;
      return m;
    }
    const bool up = rp > 0.0;
    const double edge = up ? (k + 1 < n ? critical_[k + 1] : 1.0) : (k > 0 ? critical_[k - 1] : 0.0);
    const Controls cn = region_controls(0.5 * (critical_[k] + edge));
    const double rn = rate(cn);
    if (!negligible(rn) && (rn > 0.0) == up) {
      m.controls = cn;
      m.rate = rn;
      m.has_target = edge > 0.0 && edge < 1.0;
      m.target = edge;
      return m;
    }
    // Trapped: the point pushes into a region that pushes back.
    const double theta = negligible(rn) ? 0.0 : rn / (rn - rp);
    m.controls = {theta * cp.pi_B + (1.0 - theta) * cn.pi_B,
                  theta * cp.pi_R + (1.0 - theta) * cn.pi_R};
    m.hold = true;
    return m;
  }

  const auto up_it = std::upper_bound(critical_.begin(), critical_.end(), i);
  const std::size_t idx = static_cast<std::size_t>(up_it - critical_.begin());
  m.controls = region_controls(i);
  m.rate = rate(m.controls);
  if (negligible(m.rate)) {
    m.hold = true;
    return m;
  }
  if (m.rate > 0.0 && idx < n) {
    m.has_target = true;
    m.target = critical_[idx];
  } else if (m.rate < 0.0 && idx > 0) {
    m.has_target = true;
    m.target = critical_[idx - 1];
  }
  return m;
}

}  // namespace acd::detail
