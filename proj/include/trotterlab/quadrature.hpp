#pragma once

#include <cmath>
#include <functional>

#include "trotterlab/core.hpp"
#include "trotterlab/errors.hpp"

namespace trotterlab {

inline constexpr int kSimpsonMaxDepth = 40;

namespace detail {

// Adaptive Simpson with the classic Richardson acceptance test. Works for any
// value type that supports +, -, scalar *, and a norm functor.
template <typename T, typename F, typename NormFn>
T adaptive_simpson_rec(const F& f, NormFn norm, double a, double b, double tol,
                       const T& fa, const T& fm, const T& fb, const T& whole,
                       int depth, double* worst) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  T flm = f(lm);
  T frm = f(rm);
  T left = ((b - a) / 12.0) * (fa + 4.0 * flm + fm);
  T right = ((b - a) / 12.0) * (fm + 4.0 * frm + fb);
  T delta = left + right - whole;
  double err = norm(delta) / 15.0;
  if (err <= tol || depth >= kSimpsonMaxDepth) {
    if (depth >= kSimpsonMaxDepth && err > *worst) *worst = err;
    return left + right + (1.0 / 15.0) * delta;
  }
  return adaptive_simpson_rec<T>(f, norm, a, m, 0.5 * tol, fa, flm, fm, left,
                                 depth + 1, worst) +
         adaptive_simpson_rec<T>(f, norm, m, b, 0.5 * tol, fm, frm, fb, right,
                                 depth + 1, worst);
}

}  // namespace detail

// Integrates f over [a, b] to absolute tolerance tol. Throws AccuracyError
// (carrying the worst panel estimate) if the depth cap is hit before the
// tolerance is met.
template <typename T, typename F, typename NormFn>
T adaptive_simpson(const F& f, NormFn norm, double a, double b, double tol) {
  if (!(b >= a)) throw DomainError("adaptive_simpson: reversed interval");
  if (a == b) return T(0.0 * f(a));
  T fa = f(a);
  T fb = f(b);
  T fm = f(0.5 * (a + b));
  T whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  double worst = 0.0;
  T result = detail::adaptive_simpson_rec<T>(f, norm, a, b, tol, fa, fm, fb,
                                             whole, 0, &worst);
  if (worst > tol)
    throw AccuracyError("adaptive_simpson: depth cap reached", worst);
  return result;
}

inline double integrate_scalar(const std::function<double(double)>& f, double a,
                               double b, double tol) {
  return adaptive_simpson<double>(f, [](double v) { return std::fabs(v); }, a,
                                  b, tol);
}

}  // namespace trotterlab
