#pragma once

#include <cmath>
#include <utility>

#include <boost/math/tools/roots.hpp>

namespace acd::numerics {

/// Root of f on [lo, hi] by bisection, bracket width below tol.
/// f(lo) and f(hi) must not share a strict sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol) {
  const auto done = [tol](double l, double h) { return h - l <= tol; };
  const auto [l, h] = boost::math::tools::bisect(std::forward<F>(f), lo, hi, done);
  return 0.5 * (l + h);
}

struct Minimum {
  double x = 0.0;
  double value = 0.0;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

}  // namespace acd::numerics
