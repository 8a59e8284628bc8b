#include "trotterlab/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "trotterlab/errors.hpp"

namespace trotterlab {

namespace {

constexpr int kCoarseCut = 12;  // levels above this have width < any center
                                // spacing, so they never overlap each other

void validate_spec(const CantorSpec& spec) {
  if (spec.n_max < 1 || spec.n_max > 26)
    throw InvalidInputError("CantorSpec: n_max must lie in [1, 26]");
}

double half_width(int n) { return std::ldexp(1.0, -(2 * n + 2)); }

struct Run {
  double lo, hi;
};

// Merged disjoint runs of the coarse part (edge strips + odd centers of
// levels <= kCoarseCut), clipped later by the caller.
std::vector<Run> coarse_runs(int n_max) {
  std::vector<Run> iv;
  iv.push_back({0.0, half_width(1)});
  iv.push_back({1.0 - half_width(1), 1.0});
  int top = std::min(n_max, kCoarseCut);
  for (int n = 1; n <= top; ++n) {
    double w = half_width(n);
    double scale = std::ldexp(1.0, -n);
    for (long k = 1; k < (1L << n); k += 2) {
      double c = static_cast<double>(k) * scale;
      iv.push_back({c - w, c + w});
    }
  }
  std::sort(iv.begin(), iv.end(),
            [](const Run& x, const Run& y) { return x.lo < y.lo; });
  std::vector<Run> merged;
  for (const Run& r : iv) {
    if (!merged.empty() && r.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, r.hi);
    else
      merged.push_back(r);
  }
  return merged;
}

// Measure of level-n odd intervals inside the open gap (lo, hi). An
// interval is fully inside iff its center lies in [lo+w, hi-w]; those are
// counted arithmetically. A gap edge can clip at most the single interval
// whose center rounds to it (width < half the center spacing), handled
// explicitly with the same integer bounds so nothing is counted twice.
double fine_level_in_gap(double lo, double hi, int n) {
  if (!(hi > lo)) return 0.0;
  double w = half_width(n);
  double scale = std::ldexp(1.0, n);
  double klo_f = std::ceil((lo + w) * scale);
  double khi_f = std::floor((hi - w) * scale);
  long count = 0;
  if (khi_f >= klo_f) {
    long klo = static_cast<long>(klo_f);
    long khi = static_cast<long>(khi_f);
    if (klo % 2 == 0) ++klo;
    if (khi % 2 == 0) --khi;
    if (khi >= klo) count = (khi - klo) / 2 + 1;
  }
  double total = 2.0 * w * count;

  auto counted_full = [&](long k) {
    if (khi_f < klo_f) return false;
    return k >= static_cast<long>(klo_f) && k <= static_cast<long>(khi_f);
  };
  long seen_edge_k = -1;
  for (double edge : {lo, hi}) {
    double k_near_f = std::round(edge * scale);
    if (k_near_f < 1.0 || k_near_f >= scale) continue;
    long k_near = static_cast<long>(k_near_f);
    if (k_near % 2 == 0) continue;  // reduces to a coarser center, never clips
    if (k_near == seen_edge_k) continue;
    seen_edge_k = k_near;
    if (counted_full(k_near)) continue;
    double c = k_near_f / scale;
    double olo = std::max(c - w, lo);
    double ohi = std::min(c + w, hi);
    if (ohi > olo) total += ohi - olo;
  }
  return total;
}

}  // namespace

bool cantor_membership(double t, const CantorSpec& spec) {
  validate_spec(spec);
  if (!(t >= 0.0 && t <= 1.0))
    throw DomainError("cantor_membership: t must lie in [0, 1]");
  for (int n = 1; n <= spec.n_max; ++n) {
    double w = half_width(n);
    double scale = std::ldexp(1.0, n);
    double k = std::round(t * scale);
    double c = k / scale;
    if (k <= 0.0) {
      if (t > 0.0 && t < w) return false;  // left edge strip
    } else if (k >= scale) {
      if (t > 1.0 - w && t < 1.0) return false;  // right edge strip
    } else if (std::fabs(t - c) < w) {
      return false;
    }
  }
  return true;
}

MeasureResult cantor_open_measure(double a, double b, const CantorSpec& spec) {
  validate_spec(spec);
  if (!(a >= 0.0 && b <= 1.0 && a <= b))
    throw DomainError("cantor_open_measure: need 0 <= a <= b <= 1");

  std::vector<Run> runs = coarse_runs(spec.n_max);

  MeasureResult out;
  out.uncertainty = std::ldexp(1.0, -(spec.n_max + 1));

  double covered = 0.0;
  for (const Run& r : runs)
    covered += std::max(0.0, std::min(r.hi, b) - std::max(r.lo, a));
  out.value = covered;

  if (spec.n_max <= kCoarseCut) return out;

  // Free gaps of (a, b) not covered by the coarse runs; fine levels are
  // counted inside them (fine intervals never cross a coarse run without
  // the crossing being clipped here, and are pairwise disjoint).
  std::vector<Run> gaps;
  double cursor = a;
  for (const Run& r : runs) {
    if (r.hi <= a) continue;
    if (r.lo >= b) break;
    if (r.lo > cursor) gaps.push_back({cursor, std::min(r.lo, b)});
    cursor = std::max(cursor, r.hi);
    if (cursor >= b) break;
  }
  if (cursor < b) gaps.push_back({cursor, b});

  for (int n = kCoarseCut + 1; n <= spec.n_max; ++n)
    for (const Run& g : gaps) out.value += fine_level_in_gap(g.lo, g.hi, n);
  return out;
}

MeasureResult cantor_closed_integral(double a, double b,
                                     const CantorSpec& spec) {
  MeasureResult open = cantor_open_measure(a, b, spec);
  MeasureResult out;
  out.value = (b - a) - open.value;
  out.uncertainty = open.uncertainty;
  return out;
}

double cantor_eps(int n) {
  if (n < 1 || n > 14)
    throw ResolutionError("cantor_window: level must lie in [1, 14]");
  return 1.0 / (3.0 * std::ldexp(1.0, 2 * n + 2));
}

std::pair<double, double> cantor_window(int n) {
  double eps = cantor_eps(n);
  return {eps, 1.0 - eps};
}

}  // namespace trotterlab
