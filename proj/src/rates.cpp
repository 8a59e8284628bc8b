#include "trotterlab/rates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trotterlab/errors.hpp"

namespace trotterlab {

namespace {

void validate_curve(const ErrorCurve& curve) {
  if (curve.ns.size() != curve.errors.size())
    throw DimensionError("ErrorCurve: ns and errors differ in length");
  for (std::size_t i = 0; i < curve.ns.size(); ++i) {
    if (curve.ns[i] < 1) throw InvalidInputError("ErrorCurve: n must be >= 1");
    if (i > 0 && curve.ns[i] <= curve.ns[i - 1])
      throw InvalidInputError("ErrorCurve: ns must be strictly increasing");
    if (!(curve.errors[i] >= 0.0) || !std::isfinite(curve.errors[i]))
      throw InvalidInputError("ErrorCurve: errors must be finite and >= 0");
  }
}

}  // namespace

RateFit fit_rate(const ErrorCurve& curve, int logpow) {
  validate_curve(curve);
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < curve.ns.size(); ++i) {
    double e = curve.errors[i];
    long n = curve.ns[i];
    if (e <= kFitFloor) continue;  // round-off floor
    if (n < 2 && logpow != 0) continue;  // ln ln n undefined at n = 1
    double y = std::log(e);
    if (logpow != 0) y -= logpow * std::log(std::log(static_cast<double>(n)));
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(y);
  }
  int m = static_cast<int>(xs.size());
  if (m < 4)
    throw DegenerateFitError("fit_rate: fewer than 4 usable points");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double denom = m * sxx - sx * sx;
  if (denom <= 0.0)
    throw DegenerateFitError("fit_rate: degenerate abscissa spread");
  double slope = (m * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / m;

  double ss_res = 0, ss_tot = 0;
  double mean_y = sy / m;
  for (int i = 0; i < m; ++i) {
    double pred = intercept + slope * xs[i];
    ss_res += (ys[i] - pred) * (ys[i] - pred);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }

  RateFit fit;
  fit.gamma = -slope;
  fit.log_c = intercept;
  fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  fit.points_used = m;
  return fit;
}

std::string to_string(RateVerdict v) {
  switch (v) {
    case RateVerdict::big_o: return "O";
    case RateVerdict::small_o: return "o";
    case RateVerdict::theta: return "Theta";
    case RateVerdict::omega: return "omega";
    case RateVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

RateVerdict classify_rate(const ErrorCurve& curve,
                          const std::function<double(long)>& reference) {
  validate_curve(curve);
  std::size_t m = curve.ns.size();
  if (m < 6) throw PreconditionError("classify_rate: need at least 6 points");

  std::vector<double> r(m);
  for (std::size_t i = 0; i < m; ++i) {
    double f = reference(curve.ns[i]);
    if (!(f > 0.0) || !std::isfinite(f))
      throw InvalidInputError("classify_rate: reference must be positive");
    r[i] = curve.errors[i] / f;
  }

  const RateThresholds& th = kRateThresholds;

  bool omega = true;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    double doublings =
        std::log2(static_cast<double>(curve.ns[i + 1]) / curve.ns[i]);
    if (r[i] <= 0.0) { omega = false; break; }
    double per_doubling = std::pow(r[i + 1] / r[i], 1.0 / doublings);
    if (!(per_doubling >= th.omega_growth)) { omega = false; break; }
  }
  if (omega) return RateVerdict::omega;

  if (r.front() > 0.0 && r.back() < th.o_small_drop * r.front())
    return RateVerdict::small_o;

  std::size_t half = m / 2;
  double max_bottom = *std::max_element(r.begin(), r.begin() + half);
  double max_top = *std::max_element(r.begin() + half, r.end());
  double min_bottom = *std::min_element(r.begin(), r.begin() + half);
  double min_top = *std::min_element(r.begin() + half, r.end());

  bool big_o = max_top <= th.o_big_slack * max_bottom;
  if (big_o && min_top >= th.theta_floor * min_bottom)
    return RateVerdict::theta;
  if (big_o) return RateVerdict::big_o;
  return RateVerdict::inconclusive;
}

std::function<double(long)> parse_rate_model(const std::string& model) {
  if (model == "1")
    return [](long) { return 1.0; };
  if (model == "1/n")
    return [](long n) { return 1.0 / static_cast<double>(n); };
  if (model == "1/sqrt(n)")
    return [](long n) { return 1.0 / std::sqrt(static_cast<double>(n)); };
  auto power_tail = [&](std::size_t pos) {
    std::size_t idx = 0;
    double c = std::stod(model.substr(pos), &idx);
    if (pos + idx != model.size() || !(c > 0.0))
      throw InvalidInputError("rate model '" + model +
                              "' needs a positive decimal exponent");
    return c;
  };
  if (model.rfind("n^-", 0) == 0) {
    double c = power_tail(3);
    return [c](long n) { return std::pow(static_cast<double>(n), -c); };
  }
  if (model.rfind("log(n)/n^", 0) == 0) {
    double c = power_tail(9);
    return [c](long n) {
      double nn = static_cast<double>(n);
      return std::log(nn) / std::pow(nn, c);
    };
  }
  throw InvalidInputError(
      "unknown rate model '" + model +
      "' (want 1, 1/n, 1/sqrt(n), n^-c or log(n)/n^c)");
}

RateVerdict classify_rate(const ErrorCurve& curve, const std::string& model) {
  return classify_rate(curve, parse_rate_model(model));
}

}  // namespace trotterlab
