#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trotterlab/cantor.hpp"

namespace trotterlab {

// Point of the parameter simplex 0 < s <= t <= 1. The open corner s = 0 is
// approached through grid points and analytic corner values, never stored.
struct SimplexPoint {
  double s;
  double t;
  SimplexPoint(double s_, double t_);
};

enum class PotentialKind {
  constant,
  linear,
  holder_kink,
  weierstrass,
  cantor,
  witness,
  custom
};

const char* to_string(PotentialKind k);

struct HolderPair {
  double beta;      // exponent in (0, 1]
  double constant;  // certified upper bound for the Holder quotient
};

struct WitnessLevel {
  long n;        // sampling count, dyadic, strictly increasing across levels
  double delta;  // error floor demanded at this level, in (0, 1]
};

// kind + numeric parameters; the serializable face of a potential.
struct PotentialDescriptor {
  std::string kind;
  std::vector<std::pair<std::string, double>> params;
};

inline constexpr int kWeierstrassTerms = 12;

// Nonnegative scalar potential on [0, 1] with an exact antiderivative where
// one exists. Value type; copying is cheap except for custom closures.
class ScalarPotential {
 public:
  static ScalarPotential constant(double c);
  static ScalarPotential linear(double slope = 1.0);
  // |t - 1/2|^beta; Holder pair (beta, 1).
  static ScalarPotential holder_kink(double beta);
  // sum over k = 1..kWeierstrassTerms of 2^{-beta k} (1 + cos(2^k pi t))/2;
  // Holder pair (beta, kWeierstrassTerms * (pi/2)^beta), certified termwise.
  static ScalarPotential weierstrass(double beta);
  // Indicator of the residual set; no antiderivative in closed form, the
  // integral goes through the interval measure (midpoint value).
  static ScalarPotential cantor(const CantorSpec& spec = {});
  // Superposed tent trains, one train per level, tents vanishing on every
  // sample grid j/n_m with m <= their own level. Heights min(1, 4 delta_k).
  // Validates the corner error floor at every level on construction
  // (ConstructionError names the first failing level). An empty level list
  // degenerates to the zero potential.
  static ScalarPotential witness(const std::vector<WitnessLevel>& levels);
  static ScalarPotential custom(std::function<double(double)> eval,
                                double sup_norm,
                                std::function<double(double)> antideriv = {},
                                std::optional<HolderPair> holder = {});

  double operator()(double t) const;
  PotentialKind kind() const { return kind_; }
  double sup_norm() const { return sup_norm_; }
  const std::optional<HolderPair>& holder() const { return holder_; }
  bool has_antideriv() const;
  // Exact integral_0^t q (cantor: measure-based midpoint value).
  double antideriv(double t) const;
  // integral_s^t q; falls back to adaptive quadrature (tol 1e-10) only for
  // custom potentials without an antiderivative.
  double integral(double s, double t) const;
  // Serializable description; custom potentials cannot be serialized.
  PotentialDescriptor descriptor() const;

  const std::vector<WitnessLevel>& witness_levels() const;
  const CantorSpec& cantor_spec() const { return cantor_; }
  double param() const { return c_; }
  double beta() const { return beta_; }

 private:
  ScalarPotential() = default;
  PotentialKind kind_ = PotentialKind::constant;
  double c_ = 0.0;     // constant value / linear slope
  double beta_ = 0.0;  // kink / weierstrass exponent
  CantorSpec cantor_;
  std::vector<WitnessLevel> levels_;
  std::vector<double> heights_;  // witness tent heights
  std::vector<double> amps_;     // weierstrass term amplitudes 2^{-beta k}
  std::vector<double> freqs_;    // weierstrass angular frequencies 2^k pi
  std::function<double(double)> custom_eval_;
  std::function<double(double)> custom_antideriv_;
  std::optional<HolderPair> holder_;
  double sup_norm_ = 0.0;
};

enum class HolderVariant { kink, weierstrass };

// The two rough-potential families with certified Holder pairs.
ScalarPotential make_holder_potential(double beta, HolderVariant variant);

// Piecewise-linear potential realizing prescribed Riemann-gap floors
// delta_k at sample counts n_k (n_k strictly increasing dyadic, delta_k
// nonincreasing). Same contract as ScalarPotential::witness.
ScalarPotential slow_witness(const std::vector<WitnessLevel>& levels);

// exp(-integral_s^t q).
double propagator_exact(const ScalarPotential& q, const SimplexPoint& p);

// exp(-tau_n sum_{k=0}^{n-1} q(s + k tau_n)), tau_n = (t-s)/n.
double trotter_propagator(const ScalarPotential& q, const SimplexPoint& p,
                          long n);

// |integral_s^t q - tau_n sum q(s + k tau_n)|.
double riemann_error(const ScalarPotential& q, const SimplexPoint& p, long n);

// The s -> 0+, t = 1 limit of riemann_error: |integral_0^1 q -
// (1/n) sum_{k=0}^{n-1} q(k/n)|.
double corner_riemann_error(const ScalarPotential& q, long n);

inline constexpr long kMinGridDensity = 64;

// Certified lower bound for sup over the simplex of riemann_error: max over
// the triangular grid (i/g, j/g) plus kind-specific candidate points
// (analytic corner for linear, corner limit for continuous kinds, the
// deep-level windows for cantor). Nondecreasing under nested grid
// refinement. Cantor values are floored by the measure-tail uncertainty so
// the certification survives truncation.
double sup_riemann_error(const ScalarPotential& q, long n, long grid_density,
                         bool parallel = true);
double sup_riemann_error_serial(const ScalarPotential& q, long n,
                                long grid_density);

// (e^{-||q||_inf} R, R) with R = sup_riemann_error: the two-sided operator
// error bracket.
std::pair<double, double> operator_error_sandwich(const ScalarPotential& q,
                                                  long n, long grid_density);

struct BridgeResult {
  double matrix_error;  // sup over the aligned tau-grid, p = inf norm
  double scalar_error;  // same (t, s) pairs through the scalar propagators
};

inline constexpr long kBridgeMaxDim = 4096;

// Realizes the shift semigroup on the m-point grid (one nonzero per row,
// composed stepwise) and compares its Trotter error against the scalar
// propagator gap on the same grid-aligned pairs. tau and tau/n must be
// integer multiples of 1/m; n >= m is degenerate (every grid point sampled)
// and rejected.
BridgeResult discretized_bridge(const ScalarPotential& q, long m, double tau,
                                long n);

// All full-cell rows (s, t, n, R_n) of the triangular sweep, for export.
struct SweepRow {
  double s, t;
  long n;
  double error;
};
std::vector<SweepRow> riemann_sweep_rows(const ScalarPotential& q, long n,
                                         long grid_density);

// "s,t,n,R_n" header plus one RFC 4180 row per sweep cell, reals at 17
// significant digits.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os);

}  // namespace trotterlab
