#include "acd/game.hpp"

#include <cmath>
#include <limits>

#include "acd/error.hpp"

namespace acd {

const char* to_string(CostLevel level) {
  switch (level) {
    case CostLevel::below: return "below";
    case CostLevel::at: return "at";
    case CostLevel::above: return "above";
  }
  return "unknown";
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::defender_outer: return "i1<i3<i4<i2";
    case Ordering::attacker_outer: return "i3<i1<i2<i4";
    case Ordering::coincident: return "i1=i3,i2=i4";
  }
  return "unknown";
}

int table_row(CostLevel defender, CostLevel attacker) {
  return 3 * static_cast<int>(defender) + static_cast<int>(attacker) + 1;
}

double eval_F_R(double i_B, const ModelParams& params) {
  return i_B * (1.0 - i_B) * params.span() * params.fR_slope - params.k_R * params.z;
}

RootPair roots_F_R(const ModelParams& params) {
  params.validate();
  return logistic_roots(std::abs(params.fR_slope) * params.span(), params.k_R * params.z);
}

namespace {

CostLevel level_of(const RootPair& roots) {
  switch (roots.kind) {
    case RootPair::Kind::two_roots: return CostLevel::below;
    case RootPair::Kind::single_root: return CostLevel::at;
    case RootPair::Kind::no_root: return CostLevel::above;
  }
  return CostLevel::above;
}

// 1 on (lo, hi), 0 outside, with explicit controls at both ends. Ends on the
// absorbing states 0 and 1 are dropped.
FeedbackPolicy inside(double lo, double hi, double at_lo, double at_hi) {
  std::vector<double> bps;
  std::vector<double> vals{lo > 0.0 ? 0.0 : 1.0};
  std::vector<PointControl> pts;
  if (lo > 0.0) {
    bps.push_back(lo);
    vals.push_back(1.0);
    pts.push_back({lo, at_lo});
  }
  if (hi < 1.0) {
    bps.push_back(hi);
    vals.push_back(0.0);
    pts.push_back({hi, at_hi});
  }
  return FeedbackPolicy(std::move(bps), std::move(vals), std::move(pts));
}

// 0 everywhere except `control` at the tangent state.
FeedbackPolicy spike(double state, double control) {
  return FeedbackPolicy({state}, {0.0, 0.0}, {{state, control}});
}

}  // namespace

NashProfile nash_profile(const ModelParams& params, double i_B0) {
  params.validate();
  if (!(i_B0 >= 0.0 && i_B0 <= 1.0)) {
    throw Error(ErrorKind::invalid_argument, "initial state must lie in [0, 1]");
  }
  NashProfile np;
  np.roots_B = roots_F_B(params);
  np.roots_R = roots_F_R(params);
  np.defender_level = level_of(np.roots_B);
  np.attacker_level = level_of(np.roots_R);
  np.regime_row = table_row(np.defender_level, np.attacker_level);

  const double i1 = np.roots_B.i1, i2 = np.roots_B.i2;
  const double i3 = np.roots_R.i1, i4 = np.roots_R.i2;
  const FeedbackPolicy zero = FeedbackPolicy::constant(0.0);

  switch (np.regime_row) {
    case 1:  // B: 0 if <= i1, 1 inside, 0 if >= i2.  R: 1 on [i3, i4].
      np.defender_policy = inside(i1, i2, 0.0, 0.0);
      np.attacker_policy = inside(i3, i4, 1.0, 1.0);
      break;
    case 2:  // R: 1 only at i3 = 1/2.
      np.defender_policy = inside(i1, i2, 0.0, 0.0);
      np.attacker_policy = spike(i3, 1.0);
      break;
    case 3:
      np.defender_policy = inside(i1, i2, 0.0, 0.0);
      np.attacker_policy = zero;
      break;
    case 4:  // B: 1 only at i1 = 1/2.  R: 0 if <= i3, 1 inside, 0 if >= i4.
      np.defender_policy = spike(i1, 1.0);
      np.attacker_policy = inside(i3, i4, 0.0, 0.0);
      break;
    case 5:
      // Each player's value at 1/2 is tabulated as the other's; any common
      // value keeps the state static. The common value 0 is used.
      np.defender_policy = zero;
      np.attacker_policy = zero;
      break;
    case 7:
      np.defender_policy = zero;
      np.attacker_policy = inside(i3, i4, 0.0, 0.0);
      break;
    default:  // rows 6, 8, 9
      np.defender_policy = zero;
      np.attacker_policy = zero;
      break;
  }

  np.pi_B0 = np.defender_policy(i_B0);
  np.pi_R0 = np.attacker_policy(i_B0);
  np.predicted_outcome = phase_line_outcome(np.defender_policy, np.attacker_policy, params, i_B0);
  return np;
}

Ordering ordering_check(const ModelParams& params) {
  const RootPair b = roots_F_B(params);
  const RootPair r = roots_F_R(params);
  if (b.kind != RootPair::Kind::two_roots || r.kind != RootPair::Kind::two_roots) {
    throw Error(ErrorKind::regime_mismatch,
                "ordering check needs both F_B and F_R in the two-roots regime");
  }
  constexpr double tol = 1e-12;
  Ordering found;
  if (std::abs(b.i1 - r.i1) <= tol && std::abs(b.i2 - r.i2) <= tol) {
    found = Ordering::coincident;
  } else if (b.i1 < r.i1 && r.i1 < r.i2 && r.i2 < b.i2) {
    found = Ordering::defender_outer;
  } else if (r.i1 < b.i1 && b.i1 < b.i2 && b.i2 < r.i2) {
    found = Ordering::attacker_outer;
  } else {
    throw Error(ErrorKind::verification_failed, "root pairs interleave without nesting");
  }

  // The smaller normalized cost product has the wider root pair.
  const double cb = params.k_B * params.z / std::abs(params.fB_slope);
  const double cr = params.k_R * params.z / std::abs(params.fR_slope);
  const Ordering expected = cb < cr   ? Ordering::defender_outer
                            : cr < cb ? Ordering::attacker_outer
                                      : Ordering::coincident;
  if (found != expected && found != Ordering::coincident) {
    throw Error(ErrorKind::verification_failed,
                std::string("root ordering ") + to_string(found) +
                    " contradicts the cost ordering (expected " + to_string(expected) + ")");
  }
  return found;
}

Trajectory equilibrium_trajectory(const ModelParams& params, double i_B0, double t_end,
                                  double step) {
  const NashProfile np = nash_profile(params, i_B0);
  return integrate(np.defender_policy, np.attacker_policy, params, i_B0, t_end, step);
}

BestResponseReport best_response_check(const NashProfile& profile, const ModelParams& params,
                                       double i_B0, int deviation_grid, double tolerance,
                                       const DiscountOptions& opts) {
  if (deviation_grid < 2) throw Error(ErrorKind::invalid_argument, "deviation grid needs >= 2 points");
  const CostPair eq =
      discounted_costs(profile.defender_policy, profile.attacker_policy, params, i_B0, opts);

  const auto sweep = [&](Player who) {
    DeviationReport rep;
    rep.player = who;
    rep.equilibrium_cost = eq.of(who);
    rep.best_deviation_cost = std::numeric_limits<double>::infinity();
    for (int k = 0; k < deviation_grid; ++k) {
      const double u = static_cast<double>(k) / (deviation_grid - 1);
      const FeedbackPolicy dev = FeedbackPolicy::constant(u);
      const double cost =
          who == Player::defender
              ? discounted_cost(dev, profile.attacker_policy, params, i_B0, who, opts)
              : discounted_cost(profile.defender_policy, dev, params, i_B0, who, opts);
      if (cost < rep.best_deviation_cost) {
        rep.best_deviation_cost = cost;
        rep.best_deviation_control = u;
      }
    }
    rep.max_improvement = rep.equilibrium_cost - rep.best_deviation_cost;
    return rep;
  };

  BestResponseReport out;
  out.defender = sweep(Player::defender);
  out.attacker = sweep(Player::attacker);
  out.tolerance = tolerance;
  out.passed = out.defender.max_improvement <= tolerance && out.attacker.max_improvement <= tolerance;
  return out;
}

HamiltonianPair hamiltonian_pair(double i_B, double pi_B, double pi_R, double p1, double p2,
                                 const ModelParams& params) {
  const double flow = drift(i_B, params.power(pi_B), params.power(pi_R));
  return {params.f_B(i_B) + params.k_B * pi_B + p1 * flow,
          params.f_R(i_B) + params.k_R * pi_R + p2 * flow};
}

}  // namespace acd
