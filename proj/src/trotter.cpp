#include "trotterlab/trotter.hpp"

#include <cmath>
#include <limits>

#include "trotterlab/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace trotterlab {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::ba: return "ba";
    case Ordering::ab: return "ab";
    case Ordering::sym: return "sym";
  }
  return "?";
}

namespace {

Matrix matrix_power(Matrix base, long n) {
  Eigen::Index d = base.rows();
  Matrix acc = Matrix::Identity(d, d);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

Matrix step_matrix(const GeneratorSpec& a, const GeneratorSpec& b, double tau,
                   Ordering ord) {
  switch (ord) {
    case Ordering::ba: return expm(b, tau) * expm(a, tau);
    case Ordering::ab: return expm(a, tau) * expm(b, tau);
    case Ordering::sym: {
      Matrix half = expm(a, 0.5 * tau);
      return half * expm(b, tau) * half;
    }
  }
  throw InvalidInputError("trotter_product: unknown ordering");
}

}  // namespace

Matrix trotter_product(const GeneratorSpec& a, const GeneratorSpec& b,
                       double t, long n, Ordering ord) {
  require_square_finite(a.mat, "trotter_product");
  require_square_finite(b.mat, "trotter_product");
  if (a.dim() != b.dim())
    throw DimensionError("trotter_product: operand dimensions differ");
  if (n < 1) throw DomainError("trotter_product: n must be >= 1");
  if (!(t >= 0.0)) throw DomainError("trotter_product: t must be >= 0");
  return matrix_power(step_matrix(a, b, t / static_cast<double>(n), ord), n);
}

namespace {

ErrorCurve error_curve_impl(const GeneratorSpec& a, const GeneratorSpec& b,
                            double t, const std::vector<long>& ns,
                            Ordering ord, NormKind norm, bool parallel) {
  if (ns.empty()) throw DimensionError("trotter_error_curve: empty n list");
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 1) throw DomainError("trotter_error_curve: n must be >= 1");
    if (i > 0 && ns[i] <= ns[i - 1])
      throw InvalidInputError("trotter_error_curve: ns must be increasing");
  }
  GeneratorSpec h = GeneratorSpec::analyze(a.mat + b.mat);
  Matrix exact = expm(h, t);

  ErrorCurve curve;
  curve.ns = ns;
  curve.errors.assign(ns.size(), 0.0);
  long count = static_cast<long>(ns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) {
    Matrix prod = trotter_product(a, b, t, ns[i], ord);
    curve.errors[i] = op_norm(prod - exact, norm);
  }
  return curve;
}

}  // namespace

ErrorCurve trotter_error_curve(const GeneratorSpec& a, const GeneratorSpec& b,
                               double t, const std::vector<long>& ns,
                               Ordering ord, NormKind norm, bool parallel) {
  return error_curve_impl(a, b, t, ns, ord, norm, parallel);
}

ErrorCurve trotter_error_curve_serial(const GeneratorSpec& a,
                                      const GeneratorSpec& b, double t,
                                      const std::vector<long>& ns, Ordering ord,
                                      NormKind norm) {
  return error_curve_impl(a, b, t, ns, ord, norm, false);
}

RelativeBound relative_bound_estimate(const GeneratorSpec& a,
                                      const GeneratorSpec& b, double alpha,
                                      double eta) {
  if (a.dim() != b.dim())
    throw DimensionError("relative_bound_estimate: dimensions differ");
  if (!(eta >= 0.0)) throw DomainError("relative_bound_estimate: eta < 0");
  Eigen::Index d = a.dim();
  GeneratorSpec shifted =
      GeneratorSpec::analyze(a.mat + eta * Matrix::Identity(d, d));
  Matrix inv = resolvent(shifted, Complex(0.0, 0.0));
  Matrix inv_alpha = frac_power(GeneratorSpec::analyze(inv), alpha);
  RelativeBound rb;
  rb.d = op_norm(b.mat * inv_alpha, NormKind::p2);
  rb.a_prime = op_norm(b.mat * inv, NormKind::p2);
  return rb;
}

double auto_shift_eta(const GeneratorSpec& a, const GeneratorSpec& b) {
  Eigen::Index d = a.dim();
  auto two_sided = [&](double eta) {
    Matrix shifted = a.mat + eta * Matrix::Identity(d, d);
    double cond = condition_estimate(shifted);
    if (!(cond < kConditionLimit)) return std::numeric_limits<double>::infinity();
    Matrix inv =
        Eigen::PartialPivLU<Matrix>(shifted).solve(Matrix::Identity(d, d));
    return std::max(op_norm(b.mat * inv, NormKind::p2),
                    op_norm(inv * b.mat, NormKind::p2));
  };
  if (two_sided(0.0) <= 0.5) return 0.0;
  for (int j = -20; j <= 60; ++j) {
    double eta = std::ldexp(1.0, j);
    if (two_sided(eta) <= 0.5) return eta;
  }
  throw AccuracyError("auto_shift_eta: no power-of-two shift reaches a' <= 1/2",
                      two_sided(std::ldexp(1.0, 60)));
}

double zeta_one_plus(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.5))
    throw DomainError("zeta_one_plus: alpha must lie in (0, 1.5]");
  double s = 1.0 + alpha;
  const long cut = 4096;
  double sum = 0.0;
  for (long j = 1; j <= cut; ++j) sum += std::pow(static_cast<double>(j), -s);
  // Euler-Maclaurin tail from j = cut+1 on; the B_4 term already leaves an
  // error around s(s+1)...(s+4) cut^{-s-5}, far below 1e-10 here.
  double nn = static_cast<double>(cut);
  double tail = std::pow(nn, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(nn, -s) +
                (s / 12.0) * std::pow(nn, -s - 1.0) -
                (s * (s + 1.0) * (s + 2.0) / 720.0) * std::pow(nn, -s - 3.0);
  return sum + tail;
}

RateConstants theorem_constants(RateConstants k) {
  double ap = k.a_prime;
  k.l1 = k.c_b * ap + k.c_a + k.c_h * (1.0 + ap);
  k.l2 = ap * k.c_a * k.c_b + 1.5 * k.c_a + 1.5 * k.c_b * ap * ap +
         1.5 * k.c_h * (1.0 + ap) * (1.0 + ap) + 1.0 + ap * ap +
         (1.0 + ap) * (1.0 + ap);
  if (k.alpha > 0.0) {
    k.zeta_1_alpha = zeta_one_plus(k.alpha);
    k.l3 = k.d * k.m_alpha * k.zeta_1_alpha;
  } else {
    k.zeta_1_alpha = 0.0;
    k.l3 = 0.0;
  }
  k.l3_tilde = k.b_norm * k.c_a_prime;
  if (ap < 1.0) {
    double geo = 1.0 / (1.0 - ap);  // ||(A+eta)(H+eta)^{-1}|| <= 1/(1-a')
    k.m1 = 4.0 * k.l1 * (k.c_a_prime + k.c_h_prime * geo) +
           4.0 * k.l2 * k.c_h_prime * k.c_a_prime * geo;
    k.m2 = 2.0 * k.l3 * k.l1 + 2.0 * k.l3 * k.l2 * k.c_h_prime * geo;
    k.m2_tilde =
        2.0 * k.l3_tilde * k.l1 + 2.0 * k.l3_tilde * k.l2 * k.c_h_prime * geo;
  } else {
    // The envelope derivation needs a' < 1; the tau-scale defect constants
    // above remain valid without it.
    k.m1 = k.m2 = k.m2_tilde = std::numeric_limits<double>::quiet_NaN();
  }
  return k;
}

std::vector<BoundCheckReport> envelope_check(const ErrorCurve& curve,
                                             const RateConstants& k,
                                             double t) {
  if (!(t > 0.0)) throw DomainError("envelope_check: t must be > 0");
  if (!std::isfinite(k.m1))
    throw PreconditionError("envelope_check: constants need a' < 1");
  std::vector<BoundCheckReport> out;
  out.reserve(curve.ns.size());
  for (std::size_t i = 0; i < curve.ns.size(); ++i) {
    long n = curve.ns[i];
    if (n < 2) throw DomainError("envelope_check: n must be >= 2");
    double nn = static_cast<double>(n);
    double env;
    if (k.alpha > 0.0) {
      env = std::exp(k.eta * t) * (k.m1 + k.m2 * std::pow(t, 1.0 - k.alpha)) *
            std::log(nn) / std::pow(nn, 1.0 - k.alpha);
    } else {
      env = std::exp(k.eta * t) * (k.m1 + k.m2_tilde * t) * 2.0 *
            std::log(nn) * std::log(nn) / nn;
    }
    out.push_back(make_report(
        "envelope", {{"n", nn}, {"t", t}, {"alpha", k.alpha}},
        curve.errors[i], env));
  }
  return out;
}

std::vector<BoundCheckReport> lemma_bound_checks(
    const GeneratorSpec& a, const GeneratorSpec& b, const RateConstants& k,
    const std::vector<double>& taus, const std::vector<long>& ks) {
  if (a.dim() != b.dim())
    throw DimensionError("lemma_bound_checks: dimensions differ");
  GeneratorSpec h = GeneratorSpec::analyze(a.mat + b.mat);
  Matrix a_inv = resolvent(a, Complex(0.0, 0.0));
  std::vector<BoundCheckReport> out;

  for (double tau : taus) {
    if (!(tau >= 0.0)) throw DomainError("lemma_bound_checks: tau < 0");
    Matrix defect_ba =
        expm(b, tau) * expm(a, tau) - expm(h, tau);
    Matrix defect_ab =
        expm(a, tau) * expm(b, tau) - expm(h, tau);
    out.push_back(make_report(
        "product_defect_first_left", {{"tau", tau}},
        op_norm(a_inv * defect_ba, NormKind::p2), k.l1 * tau));
    out.push_back(make_report(
        "product_defect_first_right", {{"tau", tau}},
        op_norm(defect_ba * a_inv, NormKind::p2), k.l1 * tau));
    out.push_back(make_report(
        "product_defect_second_ba", {{"tau", tau}},
        op_norm(a_inv * defect_ba * a_inv, NormKind::p2), k.l2 * tau * tau));
    out.push_back(make_report(
        "product_defect_second_ab", {{"tau", tau}},
        op_norm(a_inv * defect_ab * a_inv, NormKind::p2), k.l2 * tau * tau));
  }

  for (double tau : taus) {
    if (tau == 0.0) continue;  // the power-growth bound divides by tau
    Matrix step = expm(b, tau) * expm(a, tau);
    for (long kk : ks) {
      if (kk < 1) throw DomainError("lemma_bound_checks: k must be >= 1");
      Matrix powed = matrix_power(step, kk);
      double lhs = op_norm(powed * a.mat, NormKind::p2);
      double rhs;
      if (k.alpha > 0.0) {
        rhs = k.l3 / std::pow(tau, k.alpha) +
              k.c_a_prime / (static_cast<double>(kk) * tau);
      } else {
        rhs = k.l3_tilde * (1.0 + std::log(static_cast<double>(kk))) +
              k.c_a_prime / (static_cast<double>(kk) * tau);
      }
      out.push_back(make_report("power_growth",
                                {{"tau", tau}, {"k", static_cast<double>(kk)}},
                                lhs, rhs));
    }
  }
  return out;
}

}  // namespace trotterlab
