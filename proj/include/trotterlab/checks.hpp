#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trotterlab/core.hpp"

namespace trotterlab {

// satisfied <=> lhs <= rhs + kBoundCheckTol * max(1, rhs).
inline constexpr double kBoundCheckTol = 1e-9;

struct BoundCheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, double>> params;  // insertion order kept
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
  double margin = 0.0;  // rhs - lhs
};

BoundCheckReport make_report(std::string check_id,
                             std::vector<std::pair<std::string, double>> params,
                             double lhs, double rhs);

// || (e^{-tA} - sum_{k=0}^{n} (-tA)^k / k!) A^{-n-1} ||_2
//   <= C * t^{n+1} / (n+1)!
BoundCheckReport taylor_remainder_check(const GeneratorSpec& a, int n, double t);

// Residual of the exact algebraic identity
//   (I+A)^{-1} A^{-n-1} = (sum_{k=0}^{n} (-A)^k) A^{-n-1} + (-1)^{n+1} (I+A)^{-1},
// checked to round-off (rhs pinned at 1e-10).
BoundCheckReport resolvent_expansion_check(const GeneratorSpec& a, int n);

// (1/t^2) || ((I + tA)^{-1} - e^{-tA}) A^{-2} ||_2 <= 3C/2.
BoundCheckReport euler_approx_check(const GeneratorSpec& a, double t);

// || A^alpha (A + mu)^{-1} ||_2 <= C_{A,alpha} / mu^{1-alpha} with
//   C_{A,alpha} = C (1 + C) / (alpha (1-alpha) |Gamma(-alpha)|),
// degenerating to C/mu at alpha = 0 and to C at alpha = 1.
BoundCheckReport frac_resolvent_check(const GeneratorSpec& a, double alpha,
                                      double mu);

// max over the grid of t^alpha ||A^alpha e^{-tA}||_2. For SPD inputs the
// exact supremum is (alpha/e)^alpha; a pure log grid only gets within ~1e-4
// of it, so callers chasing the exact value append the per-eigenvalue
// maximizer candidates t = alpha/lambda (see moment_grid_with_candidates).
double holomorphic_moment(const GeneratorSpec& a, double alpha,
                          const std::vector<double>& t_grid);

// Standard 200-point log grid on [1e-4, 1e2].
std::vector<double> default_moment_grid();

// default grid plus t = alpha/Re(lambda) for each eigenvalue with positive
// real part (the scalar maximizers of t^alpha lambda^alpha e^{-t lambda}).
std::vector<double> moment_grid_with_candidates(const GeneratorSpec& a,
                                                double alpha);

// Sector half-angle: pi/2 - max |arg lambda| over nonzero spectrum, clamped
// to [0, pi/2]. Requires a normal input.
double sector_check(const GeneratorSpec& a);

}  // namespace trotterlab
