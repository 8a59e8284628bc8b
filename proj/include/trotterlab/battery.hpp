#pragma once

#include <vector>

#include "trotterlab/checks.hpp"
#include "trotterlab/core.hpp"
#include "trotterlab/rng.hpp"
#include "trotterlab/trotter.hpp"

namespace trotterlab {

// Real SPD matrix with log-uniform spectrum in [lo, hi], conjugated by the
// orthogonal factor of a gaussian sample.
Matrix random_spd(Eigen::Index dim, SplitMix64& rng, double lo, double hi);

// Real accretive, generally non-normal matrix: SPD spectrum in
// [sym_lo, sym_hi] plus skew_scale times a gaussian skew part. The skew part
// leaves the Hermitian part (hence accretivity) untouched.
Matrix random_accretive(Eigen::Index dim, SplitMix64& rng, double sym_lo,
                        double sym_hi, double skew_scale);

struct GeneratorPair {
  GeneratorSpec a;
  GeneratorSpec b;
};

// The standard test pair: A SPD with spectrum in [0.3, 1.5], B accretive
// with symmetric spectrum in [0.1, 0.8] and skew scale 0.3.
GeneratorPair random_pair(Eigen::Index dim, SplitMix64& rng);

// Fills every measured field of RateConstants for (A, B) at this alpha and
// derives the rest. eta comes from auto_shift_eta; a_prime and d are the
// two-sided bounds at the shifted generator; the semigroup and moment
// constants are measured on the shifted A, B and shifted H = A + B + eta
// over the candidate-augmented grids. alpha = 0 uses the logarithmic branch
// (l3_tilde), alpha in (0, 1) the zeta branch.
RateConstants measure_rate_constants(const GeneratorSpec& a,
                                     const GeneratorSpec& b, double alpha);

// One full inequality sweep over `cases` random pairs: Taylor remainders
// (n = 0, 1, 2), resolvent expansion identities, Euler resolvent
// approximation, fractional-power resolvent bounds, for A, B and A + B.
// Every report's params carry the case index and the sub-seed, so a single
// failing draw can be replayed alone.
std::vector<BoundCheckReport> inequality_battery(int cases, Eigen::Index dim,
                                                 std::uint64_t seed,
                                                 bool parallel = true);
std::vector<BoundCheckReport> inequality_battery_serial(int cases,
                                                        Eigen::Index dim,
                                                        std::uint64_t seed);

}  // namespace trotterlab
