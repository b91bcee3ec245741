#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <vector>

#include "acd/dynamics.hpp"
#include "acd/error.hpp"
#include "acd/infinite_horizon.hpp"
#include "support.hpp"

using namespace acd;

namespace {

// Discounted defender cost of a constant control, by quadrature on the closed form.
double quadrature_cost(const ModelParams& p, double u, double i0) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto f = [&](double t) {
    const double i = closed_form_state(t, i0, p.power(u), p.alpha_R);
    return std::exp(-p.z * t) * (p.f_B(i) + p.k_B * u);
  };
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace

TEST_CASE("integrate examples") {
  ModelParams p;  // a = 1, b = 0, alpha_R = 0.5
  SUBCASE("matching powers keep the state") {
    const Trajectory tr = integrate(FeedbackPolicy::constant(0.4), FeedbackPolicy::constant(0.4), p, 0.37, 10.0);
    for (const Sample& s : tr.samples) CHECK(s.i_B == 0.37);
  }
  SUBCASE("full power reaches 3/4 at 2 ln 9") {
    const double T = 2.0 * std::log(9.0);
    const Trajectory tr = integrate(FeedbackPolicy::constant(1.0), std::nullopt, p, 0.25, T);
    CHECK(tr.back().t == doctest::Approx(T).epsilon(1e-15));
    CHECK(std::abs(tr.back().i_B - 0.75) <= 1e-6);
  }
  SUBCASE("zero is absorbing") {
    const Trajectory tr = integrate(FeedbackPolicy::constant(1.0), std::nullopt, p, 0.0, 5.0);
    for (const Sample& s : tr.samples) CHECK(s.i_B == 0.0);
  }
  SUBCASE("one is absorbing") {
    const Trajectory tr = integrate(FeedbackPolicy::constant(0.0), std::nullopt, p, 1.0, 5.0);
    for (const Sample& s : tr.samples) CHECK(s.i_B == 1.0);
  }
}

TEST_CASE("samples sit on the step grid and stay in [0, 1]") {
  ModelParams p;
  const Trajectory tr = integrate(FeedbackPolicy({0.6}, {1.0, 0.0}), std::nullopt, p, 0.3, 2.5, 0.01);
  REQUIRE(tr.samples.size() == 251);
  for (std::size_t k = 0; k < tr.samples.size(); ++k) {
    CHECK(tr.samples[k].t == doctest::Approx(0.01 * k));
    CHECK(tr.samples[k].i_B >= 0.0);
    CHECK(tr.samples[k].i_B <= 1.0);
    CHECK_FALSE(tr.samples[k].pi_R.has_value());
  }
}

TEST_CASE("constant controls agree with the closed form") {
  testing::Draws d(3);
  for (int k = 0; k < 30; ++k) {
    ModelParams p;
    p.alpha_R = d.uniform(0.0, 1.0);
    const double u = d.uniform(0.0, 1.0), i0 = d.uniform(0.01, 0.99);
    const Trajectory tr = integrate(FeedbackPolicy::constant(u), std::nullopt, p, i0, 20.0, 1e-3);
    double worst = 0.0;
    for (const Sample& s : tr.samples) {
      worst = std::max(worst, std::abs(s.i_B - closed_form_state(s.t, i0, p.power(u), p.alpha_R)));
    }
    CHECK(worst <= 1e-6);
  }
}

TEST_CASE("step halving on smooth runs") {
  testing::Draws d(5);
  for (int k = 0; k < 20; ++k) {
    ModelParams p;
    p.alpha_R = d.uniform(0.0, 1.0);
    const double u = d.uniform(0.0, 1.0), i0 = d.uniform(0.01, 0.99);
    const double e1 = integrate(FeedbackPolicy::constant(u), std::nullopt, p, i0, 20.0, 1e-3).back().i_B;
    const double e2 = integrate(FeedbackPolicy::constant(u), std::nullopt, p, i0, 20.0, 5e-4).back().i_B;
    CHECK(std::abs(e1 - e2) <= 1e-8);
  }
}

TEST_CASE("breakpoints are located exactly") {
  ModelParams p;
  SUBCASE("opposing regions hold the state at the breakpoint") {
    const Trajectory tr = integrate(FeedbackPolicy({0.6}, {1.0, 0.0}), std::nullopt, p, 0.3, 30.0);
    CHECK(tr.back().i_B == doctest::Approx(0.6).epsilon(1e-14));
    // Held with the drift-cancelling mix: alpha_B = alpha_R.
    CHECK(tr.back().pi_B == doctest::Approx(0.5));
  }
  SUBCASE("same-direction regions are crossed") {
    const Trajectory tr = integrate(FeedbackPolicy({0.6}, {1.0, 0.8}), std::nullopt, p, 0.3, 60.0);
    CHECK(tr.back().i_B > 0.99);
  }
  SUBCASE("singular point control holds the state") {
    const FeedbackPolicy pol({0.4}, {1.0, 1.0}, {{0.4, 0.5}});
    const Trajectory tr = integrate(pol, std::nullopt, p, 0.2, 30.0);
    CHECK(tr.back().i_B == doctest::Approx(0.4).epsilon(1e-14));
  }
}

TEST_CASE("discounted cost examples") {
  const ModelParams p = testing::unit_span(0.125);  // k_B = 0.25
  const InfiniteHorizonPolicy opt = optimal_policy(p);
  const double i2 = opt.roots.i2, uB = *opt.singular;

  SUBCASE("held at i2") {
    const double j = discounted_cost(opt.policy, std::nullopt, p, i2, Player::defender);
    CHECK(j == doctest::Approx((p.f_B(i2) + p.k_B * uB) / p.z).epsilon(1e-9));
  }
  SUBCASE("static state with no defense") {
    ModelParams q = p;
    q.alpha_R = q.b;
    const double j = discounted_cost(FeedbackPolicy::constant(0.0), std::nullopt, q, 0.4, Player::defender);
    CHECK(j == doctest::Approx(q.f_B(0.4) / q.z).epsilon(1e-9));
  }
  SUBCASE("full power against quadrature and step refinement") {
    ModelParams q = p;
    q.k_B = 0.125;
    const double j1 = discounted_cost(FeedbackPolicy::constant(1.0), std::nullopt, q, 0.25, Player::defender);
    DiscountOptions half;
    half.step = 5e-4;
    const double j2 = discounted_cost(FeedbackPolicy::constant(1.0), std::nullopt, q, 0.25, Player::defender, half);
    CHECK(std::abs(j1 - j2) <= 1e-6);
    CHECK(std::abs(j1 - quadrature_cost(q, 1.0, 0.25)) <= 1e-8);
  }
}

TEST_CASE("discounted cost matches quadrature for constant controls") {
  testing::Draws d(17);
  for (int k = 0; k < 20; ++k) {
    ModelParams p;
    p.alpha_R = d.uniform(0.05, 0.95);
    p.z = d.uniform(0.2, 2.0);
    p.k_B = d.uniform(0.0, 1.0);
    const double u = d.uniform(0.0, 1.0), i0 = d.uniform(0.01, 0.99);
    const double j = discounted_cost(FeedbackPolicy::constant(u), std::nullopt, p, i0, Player::defender);
    CHECK(std::abs(j - quadrature_cost(p, u, i0)) <= 1e-8);
  }
}

TEST_CASE("discount truncation is stable under horizon doubling") {
  testing::Draws d(19);
  DiscountOptions twice;
  twice.horizon_scale = 2.0;
  for (int k = 0; k < 10; ++k) {
    const ModelParams p = testing::unit_span(d.uniform(0.0, 0.3), d.uniform(0.0, 0.3));
    const double i0 = d.uniform(0.0, 1.0);
    const FeedbackPolicy pol({0.3, 0.7}, {0.0, 1.0, 0.0});
    const FeedbackPolicy att({0.5}, {1.0, 0.0});
    for (Player who : {Player::defender, Player::attacker}) {
      const double j1 = discounted_cost(pol, att, p, i0, who);
      const double j2 = discounted_cost(pol, att, p, i0, who, twice);
      CHECK(std::abs(j1 - j2) <= 2.0 * kDefaultTail);
    }
  }
}

TEST_CASE("discount horizon bounds the tail") {
  ModelParams p = testing::unit_span(0.125, 0.2);
  const double T = discount_horizon(p, 1e-9);
  const double M = 1.0 + std::max(p.k_B, p.k_R);
  CHECK(M * std::exp(-p.z * T) / p.z <= 1e-9 * (1 + 1e-12));
  CHECK_THROWS_AS(discount_horizon(p, 0.0), Error);
}

TEST_CASE("fast cost examples") {
  ModelParams p;
  p.lambda = 3.0;
  const std::vector<double> zero{0.0};
  CHECK(fast_cost(zero, 3.0, p, CostShape::linear) == doctest::Approx(3.0));
  const double T1 = 2.0 * std::log(9.0);
  const std::vector<double> one{1.0};
  CHECK(fast_cost(one, T1, p, CostShape::linear) == doctest::Approx(T1 * (1.0 + p.lambda)));
  const std::vector<double> u{0.6, 0.6, 0.6};
  CHECK(fast_cost(u, 2.0, p, CostShape::quadratic) == doctest::Approx(2.0 * (1.0 + p.lambda * 0.36)));
  const std::vector<double> mixed{0.0, 1.0};
  CHECK(fast_cost(mixed, 2.0, p, CostShape::linear) == doctest::Approx(2.0 + p.lambda * 1.0));
  CHECK(fast_cost({}, 2.5, p, CostShape::linear) == doctest::Approx(2.5));
}
