#pragma once

#include <vector>

#include "trotterlab/checks.hpp"
#include "trotterlab/core.hpp"
#include "trotterlab/rates.hpp"

namespace trotterlab {

enum class Ordering { ba, ab, sym };

const char* to_string(Ordering o);

// ((step)(t/n))^n for the chosen step ordering:
//   ba: e^{-tau B} e^{-tau A}, ab: e^{-tau A} e^{-tau B},
//   sym: e^{-tau A/2} e^{-tau B} e^{-tau A/2}.
// The n-th power is taken by binary exponentiation (n is deterministic, so
// the rounding pattern is too).
Matrix trotter_product(const GeneratorSpec& a, const GeneratorSpec& b,
                       double t, long n, Ordering ord);

// op_norm(trotter_product(...) - e^{-tH}, norm) with H = A + B, for each n.
ErrorCurve trotter_error_curve(const GeneratorSpec& a, const GeneratorSpec& b,
                               double t, const std::vector<long>& ns,
                               Ordering ord, NormKind norm,
                               bool parallel = true);

// Serial reference for the curve kernel (identical output, no OpenMP).
ErrorCurve trotter_error_curve_serial(const GeneratorSpec& a,
                                      const GeneratorSpec& b, double t,
                                      const std::vector<long>& ns, Ordering ord,
                                      NormKind norm);

// d = ||B (A + eta I)^{-alpha}||_2 and a' = ||B (A + eta I)^{-1}||_2.
struct RelativeBound {
  double d = 0.0;
  double a_prime = 0.0;
};
RelativeBound relative_bound_estimate(const GeneratorSpec& a,
                                      const GeneratorSpec& b, double alpha,
                                      double eta);

// Smallest eta in {0} U {2^j : j in [-20, 60]} such that the two-sided
// relative bound max(||B(A+eta)^{-1}||, ||(A+eta)^{-1}B||) is <= 1/2.
double auto_shift_eta(const GeneratorSpec& a, const GeneratorSpec& b);

// Everything the convergence envelope needs, computed once per pair. The
// derived constants follow the proof chain:
//   l1 = c_b a' + c_a + c_h (1 + a'),
//   l2 = a' c_a c_b + 3 c_a/2 + 3 c_b a'^2/2 + 3 c_h (1+a')^2/2
//        + 1 + a'^2 + (1+a')^2,
//   l3 = d * m_alpha * zeta(1 + alpha)          (alpha > 0)
//   l3_tilde = ||B|| * c_a_prime                (alpha = 0)
//   m1 = 4 l1 (c_a_prime + c_h_prime/(1-a')) + 4 l2 c_h_prime c_a_prime/(1-a'),
//   m2 = 2 l3 l1 + 2 l3 l2 c_h_prime/(1-a'),
//   m2_tilde = 2 l3_tilde l1 + 2 l3_tilde l2 c_h_prime/(1-a').
// m_alpha is the moment constant of order 1 + alpha (the power-growth bound
// consumes ||A^{1+alpha} e^{-tA}|| <= m_alpha / t^{1+alpha}).
struct RateConstants {
  double alpha = 0.5;
  double eta = 0.0;
  double c_a = 1.0, c_b = 1.0, c_h = 1.0;  // semigroup bounds (1 = contraction)
  double c_a_prime = 0.0;                  // sup_t t ||A e^{-tA}||
  double c_h_prime = 0.0;                  // sup_t t ||H e^{-tH}||
  double a_prime = 0.0;                    // two-sided relative bound
  double d = 0.0;                          // two-sided bound at order alpha
  double b_norm = 0.0;                     // ||B||_2
  double m_alpha = 0.0;                    // moment constant, order 1 + alpha
  double zeta_1_alpha = 0.0;               // zeta(1 + alpha), alpha > 0
  double l1 = 0.0, l2 = 0.0, l3 = 0.0, l3_tilde = 0.0;
  double m1 = 0.0, m2 = 0.0, m2_tilde = 0.0;
};

// Derives l1..m2_tilde from the measured fields; the measured fields must be
// set by the caller (see measure_rate_constants in battery.hpp). Requires
// a_prime < 1 for the m-constants.
RateConstants theorem_constants(RateConstants measured);

// zeta(1 + alpha) for alpha in (0, 1.5], via direct summation plus an
// Euler-Maclaurin tail, absolute accuracy well under 1e-10.
double zeta_one_plus(double alpha);

// Compares an error curve against the proved envelope
//   alpha > 0: e^{eta t} (m1 + m2 t^{1-alpha}) ln n / n^{1-alpha}
//   alpha = 0: e^{eta t} (m1 + m2_tilde t) 2 (ln n)^2 / n
// (n >= 2; the envelope is meaningless at n = 1). One report per point.
std::vector<BoundCheckReport> envelope_check(const ErrorCurve& curve,
                                             const RateConstants& k, double t);

// The tau-scale defect bounds behind the envelope, checked directly:
//   first order : ||A^{-1}(T(tau) - U(tau))|| and ||(T(tau) - U(tau))A^{-1}||
//                 <= l1 tau for T = e^{-tau B}e^{-tau A}, U = e^{-tau H};
//   second order: ||A^{-1}(T(tau) - U(tau))A^{-1}|| <= l2 tau^2 for both
//                 step orderings;
//   power growth: ||T(tau)^k A|| <= l3 / tau^alpha + c_a_prime/(k tau)
//                 (alpha > 0), or l3_tilde (1 + ln k) + c_a_prime/(k tau)
//                 (alpha = 0).
// A must be invertible here (no shift is applied); pass the shifted pair if
// the raw one is not.
std::vector<BoundCheckReport> lemma_bound_checks(
    const GeneratorSpec& a, const GeneratorSpec& b, const RateConstants& k,
    const std::vector<double>& taus, const std::vector<long>& ks);

}  // namespace trotterlab
