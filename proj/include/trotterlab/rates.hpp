#pragma once

#include <functional>
#include <string>
#include <vector>

namespace trotterlab {

struct ErrorCurve {
  std::vector<long> ns;         // strictly increasing
  std::vector<double> errors;   // same length, nonnegative
};

struct RateFit {
  double gamma = 0.0;      // decay exponent in error ~ C (log n)^k / n^gamma
  double log_c = 0.0;      // ln C
  double r_squared = 0.0;
  int points_used = 0;
};

// Points with error <= kFitFloor are excluded as round-off noise.
inline constexpr double kFitFloor = 1e-14;

// Least-squares fit of ln(error) = log_c - gamma ln(n) + logpow * ln(ln n).
// Throws DegenerateFitError when fewer than 4 usable points remain.
RateFit fit_rate(const ErrorCurve& curve, int logpow = 0);

enum class RateVerdict { big_o, small_o, theta, omega, inconclusive };

std::string to_string(RateVerdict v);

// Classification thresholds; surfaced in every report so a reader can audit
// the verdicts without the source.
struct RateThresholds {
  double o_big_slack = 1.1;      // max(top half r) <= slack * max(bottom half r)
  double theta_floor = 0.9;      // min(top half r) >= floor * min(bottom half r)
  double omega_growth = 1.1;     // per-doubling growth of r
  double o_small_drop = 0.1;     // r_last < drop * r_first
};

inline constexpr RateThresholds kRateThresholds{};

// Compares errors against the reference model f via ratios r_i = e_i/f(n_i).
// Precedence: omega, then small o, then Theta, then big O, else inconclusive.
// Requires at least 6 points.
RateVerdict classify_rate(const ErrorCurve& curve,
                          const std::function<double(long)>& reference);

// Reference models by name: "1" (flat), "1/n", "1/sqrt(n)", "n^-c" with a
// positive decimal c, or "log(n)/n^c". Unknown strings are rejected.
std::function<double(long)> parse_rate_model(const std::string& model);

RateVerdict classify_rate(const ErrorCurve& curve, const std::string& model);

}  // namespace trotterlab
