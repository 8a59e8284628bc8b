#include "trotterlab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trotterlab/errors.hpp"
#include "trotterlab/quadrature.hpp"

namespace trotterlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(long n) { return n >= 1 && (n & (n - 1)) == 0; }

// One tent train: tents of height h filling every cell of the 1/n grid,
// apex at the cell midpoint, feet on the grid. Vanishes at every multiple
// of 1/n, and its left Riemann sum over any strictly finer dyadic grid
// reproduces the integral h/2 exactly (symmetric pairing around each apex).
double tent_train(double t, long n, double h) {
  double x = t * static_cast<double>(n);
  double cell = std::floor(x);
  if (cell >= static_cast<double>(n)) cell = static_cast<double>(n - 1);
  if (cell < 0.0) cell = 0.0;
  double u = x - cell;  // position inside the cell, in units of 1/n
  double v = 1.0 - std::abs(2.0 * u - 1.0);
  return v > 0.0 ? h * v : 0.0;
}

double tent_train_antideriv(double t, long n, double h) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 0.5 * h;
  double nn = static_cast<double>(n);
  double x = t * nn;
  double cell = std::floor(x);
  if (cell >= nn) cell = nn - 1.0;
  double u = (x - cell) / nn;  // offset from the cell's left edge, in time
  double full = 0.5 * h * cell / nn;
  double half = 0.5 / nn;
  double partial = (u <= half) ? h * nn * u * u
                               : h * (2.0 * u - nn * u * u - 0.5 / nn);
  return full + partial;
}

}  // namespace

SimplexPoint::SimplexPoint(double s_, double t_) : s(s_), t(t_) {
  if (!(s > 0.0) || !(s <= t) || !(t <= 1.0))
    throw DomainError("simplex point requires 0 < s <= t <= 1, got s=" +
                      std::to_string(s_) + " t=" + std::to_string(t_));
}

const char* to_string(PotentialKind k) {
  switch (k) {
    case PotentialKind::constant: return "constant";
    case PotentialKind::linear: return "linear";
    case PotentialKind::holder_kink: return "holder_kink";
    case PotentialKind::weierstrass: return "weierstrass";
    case PotentialKind::cantor: return "cantor";
    case PotentialKind::witness: return "witness";
    case PotentialKind::custom: return "custom";
  }
  return "unknown";
}

ScalarPotential ScalarPotential::constant(double c) {
  if (!(c >= 0.0) || !std::isfinite(c))
    throw InvalidInputError("constant potential needs a finite value >= 0");
  ScalarPotential q;
  q.kind_ = PotentialKind::constant;
  q.c_ = c;
  q.sup_norm_ = c;
  q.holder_ = HolderPair{1.0, 0.0};
  return q;
}

ScalarPotential ScalarPotential::linear(double slope) {
  if (!(slope >= 0.0) || !std::isfinite(slope))
    throw InvalidInputError("linear potential needs a finite slope >= 0");
  ScalarPotential q;
  q.kind_ = PotentialKind::linear;
  q.c_ = slope;
  q.sup_norm_ = slope;
  q.holder_ = HolderPair{1.0, slope};
  return q;
}

ScalarPotential ScalarPotential::holder_kink(double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw InvalidInputError("kink exponent must lie in (0, 1]");
  ScalarPotential q;
  q.kind_ = PotentialKind::holder_kink;
  q.beta_ = beta;
  q.sup_norm_ = std::pow(0.5, beta);
  q.holder_ = HolderPair{beta, 1.0};
  return q;
}

ScalarPotential ScalarPotential::weierstrass(double beta) {
  if (!(beta > 0.0 && beta <= 1.0))
    throw InvalidInputError("weierstrass exponent must lie in (0, 1]");
  ScalarPotential q;
  q.kind_ = PotentialKind::weierstrass;
  q.beta_ = beta;
  double sup = 0.0;
  for (int k = 1; k <= kWeierstrassTerms; ++k) {
    double amp = std::pow(2.0, -beta * k);
    q.amps_.push_back(amp);
    q.freqs_.push_back(std::ldexp(1.0, k) * kPi);
    sup += amp;
  }
  q.sup_norm_ = sup;
  // Each term is bounded by 2^{-beta k} and has slope at most
  // (pi/2) 2^{(1-beta)k}; interpolating the two bounds gives a per-term
  // Holder quotient of (pi/2)^beta independently of k.
  q.holder_ = HolderPair{beta, kWeierstrassTerms * std::pow(0.5 * kPi, beta)};
  return q;
}

ScalarPotential ScalarPotential::cantor(const CantorSpec& spec) {
  ScalarPotential q;
  q.kind_ = PotentialKind::cantor;
  q.cantor_ = spec;
  q.sup_norm_ = 1.0;
  return q;
}

ScalarPotential ScalarPotential::witness(
    const std::vector<WitnessLevel>& levels) {
  if (levels.empty()) return ScalarPotential::constant(0.0);
  long prev = 1;
  double prev_delta = 2.0;
  for (const auto& lv : levels) {
    if (!is_power_of_two(lv.n) || lv.n < 2)
      throw InvalidInputError("witness level counts must be dyadic and >= 2");
    if (lv.n <= prev)
      throw InvalidInputError("witness level counts must strictly increase");
    if (!(lv.delta > 0.0 && lv.delta <= 1.0))
      throw InvalidInputError("witness error floors must lie in (0, 1]");
    if (lv.delta > prev_delta)
      throw InvalidInputError("witness error floors must be nonincreasing");
    prev = lv.n;
    prev_delta = lv.delta;
  }
  ScalarPotential q;
  q.kind_ = PotentialKind::witness;
  q.levels_ = levels;
  double sup = 0.0;
  double lip = 0.0;
  for (const auto& lv : levels) {
    double h = std::min(1.0, 4.0 * lv.delta);
    q.heights_.push_back(h);
    sup += h;
    lip += 2.0 * h * static_cast<double>(lv.n);
  }
  q.sup_norm_ = sup;
  q.holder_ = HolderPair{1.0, lip};
  for (std::size_t k = 0; k < levels.size(); ++k) {
    double err = corner_riemann_error(q, levels[k].n);
    if (!(err >= levels[k].delta))
      throw ConstructionError(
          "witness level " + std::to_string(k) + " (n=" +
              std::to_string(levels[k].n) + ") realizes corner error " +
              std::to_string(err) + " below the requested floor " +
              std::to_string(levels[k].delta),
          static_cast<int>(k));
  }
  return q;
}

ScalarPotential ScalarPotential::custom(std::function<double(double)> eval,
                                        double sup_norm,
                                        std::function<double(double)> antideriv,
                                        std::optional<HolderPair> holder) {
  if (!eval) throw InvalidInputError("custom potential needs an evaluator");
  if (!(sup_norm >= 0.0) || !std::isfinite(sup_norm))
    throw InvalidInputError("custom potential needs a finite sup norm >= 0");
  ScalarPotential q;
  q.kind_ = PotentialKind::custom;
  q.custom_eval_ = std::move(eval);
  q.custom_antideriv_ = std::move(antideriv);
  q.holder_ = holder;
  q.sup_norm_ = sup_norm;
  return q;
}

double ScalarPotential::operator()(double t) const {
  switch (kind_) {
    case PotentialKind::constant:
      return c_;
    case PotentialKind::linear:
      return c_ * t;
    case PotentialKind::holder_kink:
      return std::pow(std::abs(t - 0.5), beta_);
    case PotentialKind::weierstrass: {
      double v = 0.0;
      for (std::size_t k = 0; k < amps_.size(); ++k)
        v += amps_[k] * 0.5 * (1.0 + std::cos(freqs_[k] * t));
      return v;
    }
    case PotentialKind::cantor:
      return cantor_membership(t, cantor_) ? 1.0 : 0.0;
    case PotentialKind::witness: {
      double v = 0.0;
      for (std::size_t k = 0; k < levels_.size(); ++k)
        v += tent_train(t, levels_[k].n, heights_[k]);
      return v;
    }
    case PotentialKind::custom:
      return custom_eval_(t);
  }
  return 0.0;
}

bool ScalarPotential::has_antideriv() const {
  if (kind_ == PotentialKind::custom) return static_cast<bool>(custom_antideriv_);
  return true;
}

double ScalarPotential::antideriv(double t) const {
  switch (kind_) {
    case PotentialKind::constant:
      return c_ * t;
    case PotentialKind::linear:
      return 0.5 * c_ * t * t;
    case PotentialKind::holder_kink: {
      double p = 1.0 + beta_;
      double half = std::pow(0.5, p) / p;
      if (t <= 0.5) return half - std::pow(0.5 - t, p) / p;
      return half + std::pow(t - 0.5, p) / p;
    }
    case PotentialKind::weierstrass: {
      double v = 0.0;
      for (std::size_t k = 0; k < amps_.size(); ++k)
        v += amps_[k] * 0.5 * (t + std::sin(freqs_[k] * t) / freqs_[k]);
      return v;
    }
    case PotentialKind::cantor:
      if (t <= 0.0) return 0.0;
      return cantor_closed_integral(0.0, std::min(t, 1.0), cantor_).value;
    case PotentialKind::witness: {
      double v = 0.0;
      for (std::size_t k = 0; k < levels_.size(); ++k)
        v += tent_train_antideriv(t, levels_[k].n, heights_[k]);
      return v;
    }
    case PotentialKind::custom:
      if (!custom_antideriv_)
        throw UnsupportedInputError(
            "custom potential has no antiderivative; use integral()");
      return custom_antideriv_(t);
  }
  return 0.0;
}

double ScalarPotential::integral(double s, double t) const {
  if (!(s <= t)) throw DomainError("integral needs s <= t");
  if (kind_ == PotentialKind::constant) return c_ * (t - s);
  if (kind_ == PotentialKind::custom && !custom_antideriv_) {
    auto f = [this](double u) { return custom_eval_(u); };
    return integrate_scalar(f, s, t, 1e-10);
  }
  if (kind_ == PotentialKind::cantor)
    return cantor_closed_integral(s, t, cantor_).value;
  return antideriv(t) - antideriv(s);
}

PotentialDescriptor ScalarPotential::descriptor() const {
  PotentialDescriptor d;
  d.kind = trotterlab::to_string(kind_);
  switch (kind_) {
    case PotentialKind::constant:
      d.params.emplace_back("value", c_);
      break;
    case PotentialKind::linear:
      d.params.emplace_back("slope", c_);
      break;
    case PotentialKind::holder_kink:
    case PotentialKind::weierstrass:
      d.params.emplace_back("beta", beta_);
      break;
    case PotentialKind::cantor:
      d.params.emplace_back("n_max", static_cast<double>(cantor_.n_max));
      break;
    case PotentialKind::witness:
      for (std::size_t k = 0; k < levels_.size(); ++k) {
        d.params.emplace_back("n_" + std::to_string(k),
                              static_cast<double>(levels_[k].n));
        d.params.emplace_back("delta_" + std::to_string(k), levels_[k].delta);
      }
      break;
    case PotentialKind::custom:
      throw UnsupportedInputError("custom potentials cannot be serialized");
  }
  return d;
}

const std::vector<WitnessLevel>& ScalarPotential::witness_levels() const {
  if (kind_ != PotentialKind::witness)
    throw UnsupportedInputError("witness_levels requires a witness potential");
  return levels_;
}

ScalarPotential make_holder_potential(double beta, HolderVariant variant) {
  return variant == HolderVariant::kink ? ScalarPotential::holder_kink(beta)
                                        : ScalarPotential::weierstrass(beta);
}

ScalarPotential slow_witness(const std::vector<WitnessLevel>& levels) {
  return ScalarPotential::witness(levels);
}

double propagator_exact(const ScalarPotential& q, const SimplexPoint& p) {
  return std::exp(-q.integral(p.s, p.t));
}

static double left_sample_sum(const ScalarPotential& q, double s, double t,
                              long n) {
  double tau = (t - s) / static_cast<double>(n);
  double sum = 0.0;
  for (long k = 0; k < n; ++k) sum += q(s + static_cast<double>(k) * tau);
  return tau * sum;
}

double trotter_propagator(const ScalarPotential& q, const SimplexPoint& p,
                          long n) {
  if (n < 1) throw InvalidInputError("trotter_propagator needs n >= 1");
  return std::exp(-left_sample_sum(q, p.s, p.t, n));
}

double riemann_error(const ScalarPotential& q, const SimplexPoint& p, long n) {
  if (n < 1) throw InvalidInputError("riemann_error needs n >= 1");
  return std::abs(q.integral(p.s, p.t) - left_sample_sum(q, p.s, p.t, n));
}

double corner_riemann_error(const ScalarPotential& q, long n) {
  if (n < 1) throw InvalidInputError("corner_riemann_error needs n >= 1");
  double sum = 0.0;
  for (long k = 0; k < n; ++k)
    sum += q(static_cast<double>(k) / static_cast<double>(n));
  return std::abs(q.integral(0.0, 1.0) - sum / static_cast<double>(n));
}

namespace {

// Riemann error at one interior point. Cantor integrals carry the measure
// truncation uncertainty; subtracting it keeps the value a true lower bound.
double point_error(const ScalarPotential& q, long n, double s, double t) {
  if (q.kind() == PotentialKind::cantor) {
    MeasureResult I = cantor_closed_integral(s, t, q.cantor_spec());
    double gap = std::abs(I.value - left_sample_sum(q, s, t, n));
    return std::max(0.0, gap - I.uncertainty);
  }
  return std::abs(q.integral(s, t) - left_sample_sum(q, s, t, n));
}

double sup_row_max(const ScalarPotential& q, long n, long g, long i) {
  double s = static_cast<double>(i) / static_cast<double>(g);
  double best = 0.0;
  for (long j = i + 1; j <= g; ++j) {
    double t = static_cast<double>(j) / static_cast<double>(g);
    best = std::max(best, point_error(q, n, s, t));
  }
  return best;
}

// Interior limits the grid cannot see: the s -> 0+ corner for continuous
// kinds (where the sup is typically attained) and the deep window points
// for the cantor indicator.
double candidate_max(const ScalarPotential& q, long n) {
  double best = 0.0;
  switch (q.kind()) {
    case PotentialKind::constant:
    case PotentialKind::linear:
    case PotentialKind::holder_kink:
    case PotentialKind::weierstrass:
    case PotentialKind::witness:
      best = corner_riemann_error(q, n);
      break;
    case PotentialKind::cantor:
      for (int m = 1; m <= kCantorMaxWindow; ++m) {
        auto w = cantor_window(m);
        best = std::max(best, point_error(q, n, w.first, w.second));
      }
      break;
    case PotentialKind::custom:
      break;  // no continuity certificate, grid only
  }
  return best;
}

void check_sup_args(long n, long g) {
  if (n < 1) throw InvalidInputError("sup_riemann_error needs n >= 1");
  if (g < kMinGridDensity)
    throw InvalidInputError("grid density below the floor of " +
                            std::to_string(kMinGridDensity));
}

}  // namespace

double sup_riemann_error_serial(const ScalarPotential& q, long n,
                                long grid_density) {
  check_sup_args(n, grid_density);
  double best = candidate_max(q, n);
  for (long i = 1; i <= grid_density; ++i)
    best = std::max(best, sup_row_max(q, n, grid_density, i));
  return best;
}

double sup_riemann_error(const ScalarPotential& q, long n, long grid_density,
                         bool parallel) {
  if (!parallel) return sup_riemann_error_serial(q, n, grid_density);
  check_sup_args(n, grid_density);
  std::vector<double> rows(static_cast<std::size_t>(grid_density), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (long i = 1; i <= grid_density; ++i)
    rows[static_cast<std::size_t>(i - 1)] = sup_row_max(q, n, grid_density, i);
  double best = candidate_max(q, n);
  for (double r : rows) best = std::max(best, r);
  return best;
}

std::pair<double, double> operator_error_sandwich(const ScalarPotential& q,
                                                  long n, long grid_density) {
  double r = sup_riemann_error(q, n, grid_density);
  return {std::exp(-q.sup_norm()) * r, r};
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "s,t,n,R_n\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%ld,%.17g\n", r.s, r.t, r.n,
                  r.error);
    os << buf;
  }
}

std::vector<SweepRow> riemann_sweep_rows(const ScalarPotential& q, long n,
                                         long grid_density) {
  check_sup_args(n, grid_density);
  std::vector<SweepRow> rows;
  double g = static_cast<double>(grid_density);
  for (long i = 1; i <= grid_density; ++i) {
    for (long j = i + 1; j <= grid_density; ++j) {
      double s = static_cast<double>(i) / g;
      double t = static_cast<double>(j) / g;
      rows.push_back({s, t, n, point_error(q, n, s, t)});
    }
  }
  return rows;
}

BridgeResult discretized_bridge(const ScalarPotential& q, long m, double tau,
                                long n) {
  if (m < 2 || m > kBridgeMaxDim)
    throw DimensionError("bridge grid size must lie in [2, " +
                         std::to_string(kBridgeMaxDim) + "]");
  if (n < 1) throw InvalidInputError("bridge needs n >= 1");
  if (n >= m)
    throw AlignmentError(
        "bridge with n >= m is degenerate: the split step would not be "
        "coarser than the grid");
  if (!(tau > 0.0 && tau <= 1.0))
    throw InvalidInputError("bridge needs tau in (0, 1]");
  double mm = static_cast<double>(m);
  double total_cells = tau * mm;
  if (std::abs(total_cells - std::round(total_cells)) > 1e-9)
    throw AlignmentError("tau must be an integer multiple of 1/m");
  double step_cells = total_cells / static_cast<double>(n);
  long c1 = static_cast<long>(std::llround(step_cells));
  if (std::abs(step_cells - static_cast<double>(c1)) > 1e-9 || c1 < 1)
    throw AlignmentError("tau/n must be an integer multiple of 1/m");

  double h = 1.0 / mm;
  long j_max = static_cast<long>(std::floor((1.0 + 1e-12) / tau));
  double worst_matrix = 0.0;
  double worst_scalar = 0.0;
  for (long j = 1; j <= j_max; ++j) {
    long c = j * c1;            // per-step shift in grid cells
    long shift = n * c;         // total shift of the composed product
    if (shift >= m) break;      // nothing survives the boundary cut-off
    double sigma = static_cast<double>(c) * h;
    for (long i = shift + 1; i <= m; ++i) {
      double t = static_cast<double>(i) * h;
      double s = static_cast<double>(i - shift) * h;
      // The composed operator keeps one nonzero per row, so the p = inf
      // operator norm of the difference is the largest coefficient gap.
      // Steps are composed in exponent space (the coefficient of a product
      // of diagonal-times-shift factors is the exponential of the summed
      // samples); this keeps the commuting constant-q case exactly zero.
      double expo = 0.0;
      for (long step = 1; step <= n; ++step)
        expo += sigma * q(static_cast<double>(i - step * c) * h);
      double prod = std::exp(-expo);
      double exact = std::exp(-q.integral(s, t));
      worst_matrix = std::max(worst_matrix, std::abs(exact - prod));
      SimplexPoint p(s, t);
      double scalar_gap =
          std::abs(propagator_exact(q, p) - trotter_propagator(q, p, n));
      worst_scalar = std::max(worst_scalar, scalar_gap);
    }
  }
  return {worst_matrix, worst_scalar};
}

}  // namespace trotterlab
