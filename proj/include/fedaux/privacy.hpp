#pragma once

#include <cstdint>

#include "fedaux/erm.hpp"
#include "fedaux/rng.hpp"
#include "fedaux/types.hpp"

namespace fedaux {

// Closed-form l2-sensitivity of the regularized logistic regression optimum:
// 2*sqrt(C)/(lambda*N) for a C-way head, 2/(lambda*N) for the single-row
// binary representation.
struct SensitivityBound {
  double value = 0.0;
  int class_count = 0;  // 1 marks the single-row binary representation
  double lambda = 0.0;
  std::size_t n = 0;
};

SensitivityBound l2_sensitivity(int class_count, double lambda, std::size_t n);
SensitivityBound l2_sensitivity_binary(double lambda, std::size_t n);

struct NoiseScale {
  double sigma_squared = 0.0;  // 0 means privacy disabled (no-op sanitize)
};

// Gaussian mechanism calibration: sigma = sqrt(2 ln(1.25/delta)) * Delta / eps.
// For the multinomial bound this equals the closed form
// 8 C ln(1.25/delta) / (eps^2 lambda^2 N^2).
// The classical guarantee is stated for eps < 1; larger eps is allowed but
// reported via a one-time stderr warning per distinct value.
NoiseScale gaussian_sigma(double eps, double delta, const SensitivityBound& sensitivity);

// beta* -> beta* + N(0, I sigma^2). Requires a converged fit; refuses
// otherwise since the sensitivity bound only covers exact optima.
// sigma^2 == 0 returns the input bit-for-bit without consuming the stream.
HeadParams sanitize(const FitResult& fit, const NoiseScale& noise, RngStream& stream);

// epsilon_total = sum eps_i, delta_total = sum delta_i (basic composition).
std::pair<double, double> compose(const PrivacySpend& spend);

// Brute-force neighboring-dataset oracle. Each trial samples a dataset of
// points inside the unit ball, replaces exactly one point, fits both problems
// to tolerance 1e-10 and records ||beta1* - beta2*||_2. Small instances only.
struct SensitivityProbeConfig {
  int class_count = 2;      // 1 = single-row binary head
  double lambda = 1.0;
  std::size_t n = 20;       // dataset size
  int feature_dim = 3;      // excludes the bias-style coordinate; total dims = feature_dim + 1
  double fit_tolerance = 1e-10;
};

struct SensitivityProbeResult {
  double max_distance = 0.0;
  double mean_distance = 0.0;
  int trials = 0;
};

SensitivityProbeResult empirical_sensitivity(const SensitivityProbeConfig& config,
                                             int trials, RngStream& rng);

}  // namespace fedaux
