#pragma once

#include <utility>

namespace trotterlab {

// Dyadic-center open covering: at level n, open intervals of half-width
// 2^{-(2n+2)} around every center k/2^n (one-sided strips at k = 0 and
// k = 2^n). The union over n >= 1 is the open set; its complement in [0,1]
// is the fat residual set the counterexample potential is built on.
struct CantorSpec {
  int n_max = 26;  // deepest level enumerated; 2^{-(2*26+2)} = 2^{-54} is
                   // already below double resolution at scale 1
};

struct MeasureResult {
  double value = 0.0;        // exact for levels <= n_max
  double uncertainty = 0.0;  // tail bound 2^{-(n_max+1)} for deeper levels
};

// True iff t is outside every covering interval up to n_max (t in the
// residual set, as far as the enumerated levels can tell). t must lie in
// [0, 1].
bool cantor_membership(double t, const CantorSpec& spec = {});

// Lebesgue measure of (open union) intersect (a, b), exact for levels
// <= n_max. Nested duplicates are skipped (even-numerator centers repeat a
// coarser center with strictly smaller width); levels deep enough that
// their intervals are pairwise disjoint and narrower than any center
// spacing are counted arithmetically against the merged coarse runs, so the
// full enumeration is never materialized.
MeasureResult cantor_open_measure(double a, double b,
                                  const CantorSpec& spec = {});

// integral_a^b of the residual-set indicator = (b - a) - open measure.
// value is the midpoint estimate; value - uncertainty is a certified lower
// bound.
MeasureResult cantor_closed_integral(double a, double b,
                                     const CantorSpec& spec = {});

// The (s, t) evaluation pair (eps_n, 1 - eps_n) with eps_n = 1/(3*2^(2n+2)):
// sampling [s, t] at 2^n equal steps lands every sample strictly inside a
// covering interval. Levels above 14 collapse at double precision
// (ResolutionError).
std::pair<double, double> cantor_window(int n);

double cantor_eps(int n);

inline constexpr int kCantorMaxWindow = 14;

}  // namespace trotterlab
