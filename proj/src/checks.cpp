#include "trotterlab/checks.hpp"

#include <cmath>

#include "trotterlab/errors.hpp"

namespace trotterlab {

BoundCheckReport make_report(std::string check_id,
                             std::vector<std::pair<std::string, double>> params,
                             double lhs, double rhs) {
  BoundCheckReport r;
  r.check_id = std::move(check_id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.satisfied = lhs <= rhs + kBoundCheckTol * std::max(1.0, rhs);
  r.margin = rhs - lhs;
  return r;
}

namespace {

Matrix inverse_power(const GeneratorSpec& a, int k) {
  Matrix inv = resolvent(a, Complex(0.0, 0.0));  // A^{-1} with the usual guard
  Matrix out = Matrix::Identity(a.dim(), a.dim());
  for (int i = 0; i < k; ++i) out = out * inv;
  return out;
}

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

}  // namespace

BoundCheckReport taylor_remainder_check(const GeneratorSpec& a, int n,
                                        double t) {
  if (n < 0) throw DomainError("taylor_remainder_check: n must be >= 0");
  if (!(t >= 0.0)) throw DomainError("taylor_remainder_check: t must be >= 0");
  Eigen::Index d = a.dim();
  Matrix partial = Matrix::Zero(d, d);
  Matrix pow_term = Matrix::Identity(d, d);  // (-tA)^k / k!
  for (int k = 0; k <= n; ++k) {
    if (k > 0) pow_term = pow_term * ((-t / k) * a.mat);
    partial += pow_term;
  }
  Matrix lhs_mat = (expm(a, t) - partial) * inverse_power(a, n + 1);
  double lhs = op_norm(lhs_mat, NormKind::p2);
  double rhs =
      a.bound_constant * std::pow(t, n + 1) / factorial(n + 1);
  return make_report("taylor_remainder",
                     {{"n", static_cast<double>(n)}, {"t", t}}, lhs, rhs);
}

BoundCheckReport resolvent_expansion_check(const GeneratorSpec& a, int n) {
  if (n < 0) throw DomainError("resolvent_expansion_check: n must be >= 0");
  Eigen::Index d = a.dim();
  Matrix res = resolvent(a, Complex(-1.0, 0.0));  // (I + A)^{-1}
  Matrix inv_pow = inverse_power(a, n + 1);
  Matrix alt_sum = Matrix::Zero(d, d);
  Matrix pw = Matrix::Identity(d, d);  // (-A)^k
  for (int k = 0; k <= n; ++k) {
    if (k > 0) pw = pw * (-a.mat);
    alt_sum += pw;
  }
  double parity = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  Matrix residual = res * inv_pow - alt_sum * inv_pow - parity * res;
  double lhs = op_norm(residual, NormKind::p2);
  return make_report("resolvent_expansion", {{"n", static_cast<double>(n)}},
                     lhs, 1e-10);
}

BoundCheckReport euler_approx_check(const GeneratorSpec& a, double t) {
  if (!(t > 0.0)) throw DomainError("euler_approx_check: t must be > 0");
  Eigen::Index d = a.dim();
  Matrix euler = (Matrix::Identity(d, d) + t * a.mat);
  double cond = condition_estimate(euler);
  if (!(cond < kConditionLimit))
    throw SingularityError("euler_approx_check: I + tA numerically singular",
                           cond);
  Matrix euler_inv =
      Eigen::PartialPivLU<Matrix>(euler).solve(Matrix::Identity(d, d));
  Matrix lhs_mat = (euler_inv - expm(a, t)) * inverse_power(a, 2);
  double lhs = op_norm(lhs_mat, NormKind::p2) / (t * t);
  double rhs = 1.5 * a.bound_constant;
  return make_report("euler_resolvent", {{"t", t}}, lhs, rhs);
}

BoundCheckReport frac_resolvent_check(const GeneratorSpec& a, double alpha,
                                      double mu) {
  if (!(mu > 0.0)) throw DomainError("frac_resolvent_check: mu must be > 0");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw DomainError("frac_resolvent_check: alpha must lie in [0, 1]");
  double c = a.bound_constant;
  Matrix res = resolvent(a, Complex(-mu, 0.0));  // (A + mu)^{-1}
  double lhs, rhs;
  if (alpha == 0.0) {
    lhs = op_norm(res, NormKind::p2);
    rhs = c / mu;
  } else if (alpha == 1.0) {
    lhs = op_norm(a.mat * res, NormKind::p2);
    rhs = c;
  } else {
    lhs = op_norm(frac_power(a, alpha) * res, NormKind::p2);
    double c_frac =
        c * (1.0 + c) /
        (alpha * (1.0 - alpha) * std::fabs(std::tgamma(-alpha)));
    rhs = c_frac / std::pow(mu, 1.0 - alpha);
  }
  return make_report("frac_resolvent", {{"alpha", alpha}, {"mu", mu}}, lhs,
                     rhs);
}

std::vector<double> default_moment_grid() {
  std::vector<double> grid(200);
  double lo = std::log(1e-4);
  double hi = std::log(1e2);
  for (int i = 0; i < 200; ++i)
    grid[i] = std::exp(lo + (hi - lo) * i / 199.0);
  return grid;
}

std::vector<double> moment_grid_with_candidates(const GeneratorSpec& a,
                                                double alpha) {
  std::vector<double> grid = default_moment_grid();
  if (alpha > 0.0) {
    for (Complex lam : spectrum(a)) {
      if (lam.real() > 1e-14) grid.push_back(alpha / lam.real());
    }
  }
  return grid;
}

double holomorphic_moment(const GeneratorSpec& a, double alpha,
                          const std::vector<double>& t_grid) {
  if (!(alpha >= 0.0) || !(alpha < 3.0))
    throw DomainError("holomorphic_moment: alpha must lie in [0, 3)");
  if (t_grid.empty())
    throw DimensionError("holomorphic_moment: empty time grid");
  Matrix apow = (alpha < 2.0)
                    ? frac_power(a, alpha)
                    : frac_power(a, alpha - 1.0) * a.mat;  // alpha in [2, 3)
  double best = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw DomainError("holomorphic_moment: grid times must be > 0");
    double v = std::pow(t, alpha) * op_norm(apow * expm(a, t), NormKind::p2);
    best = std::max(best, v);
  }
  return best;
}

double sector_check(const GeneratorSpec& a) {
  if (!a.is_normal)
    throw UnsupportedInputError("sector_check: input not normal");
  if (!a.sector_semi_angle)
    throw UnsupportedInputError("sector_check: no sector information");
  return *a.sector_semi_angle;
}

}  // namespace trotterlab
