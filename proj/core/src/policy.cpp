#include "acd/policy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "acd/error.hpp"
#include "acd/model.hpp"

namespace acd {

namespace {

bool is_control(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::invalid_argument, what);
}

}  // namespace

FeedbackPolicy::FeedbackPolicy(std::vector<double> breakpoints, std::vector<double> values,
                               std::vector<PointControl> singular_points)
    : breakpoints_(std::move(breakpoints)),
      values_(std::move(values)),
      singular_(std::move(singular_points)) {
  require(values_.size() == breakpoints_.size() + 1,
          "policy needs exactly one value per region");
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    const double x = breakpoints_[k];
    require(std::isfinite(x) && x > 0.0 && x < 1.0, "breakpoints must lie inside (0, 1)");
    require(k == 0 || breakpoints_[k - 1] < x, "breakpoints must be strictly increasing");
  }
  for (double v : values_) require(is_control(v), "policy values must lie in [0, 1]");
  for (const auto& p : singular_) {
    require(std::isfinite(p.state) && p.state >= 0.0 && p.state <= 1.0,
            "singular states must lie in [0, 1]");
    require(is_control(p.control), "singular controls must lie in [0, 1]");
  }
  std::sort(singular_.begin(), singular_.end(),
            [](const PointControl& l, const PointControl& r) { return l.state < r.state; });
}

FeedbackPolicy FeedbackPolicy::constant(double control) {
  return FeedbackPolicy({}, {control});
}

double FeedbackPolicy::region_value(double i_B) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), i_B);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

double FeedbackPolicy::operator()(double i_B) const {
  for (const auto& p : singular_) {
    if (std::abs(i_B - p.state) < kRootBand) return p.control;
  }
  for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
    if (std::abs(i_B - breakpoints_[k]) < kRootBand) return values_[k + 1];
  }
  return region_value(i_B);
}

std::vector<double> FeedbackPolicy::critical_states() const {
  std::vector<double> out = breakpoints_;
  for (const auto& p : singular_) out.push_back(p.state);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string FeedbackPolicy::describe() const {
  std::ostringstream os;
  os.precision(6);
  double lo = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double hi = k < breakpoints_.size() ? breakpoints_[k] : 1.0;
    if (k > 0) os << ", ";
    os << values_[k] << " on (" << lo << "," << hi << ")";
    lo = hi;
  }
  for (const auto& p : singular_) os << ", " << p.control << " at " << p.state;
  return os.str();
}

}  // namespace acd
