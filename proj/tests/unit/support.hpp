#pragma once

#include <random>

#include "acd/model.hpp"

namespace testing {

// Fixed-seed draws so failures reproduce.
struct Draws {
  std::mt19937_64 gen;
  explicit Draws(unsigned long long seed) : gen(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen); }
};

// a = 1, b = 0, alpha_R = 0.5, z = 0.5; k_B set from the product k_B z.
inline acd::ModelParams unit_span(double kBz, double kRz = 0.0) {
  acd::ModelParams p;
  p.a = 1.0;
  p.b = 0.0;
  p.alpha_R = 0.5;
  p.z = 0.5;
  p.k_B = kBz / p.z;
  p.k_R = kRz / p.z;
  return p;
}

}  // namespace testing
