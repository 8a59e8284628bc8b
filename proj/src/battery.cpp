#include "trotterlab/battery.hpp"

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "trotterlab/errors.hpp"

namespace trotterlab {

namespace {

Eigen::MatrixXd gaussian_matrix(Eigen::Index dim, SplitMix64& rng) {
  Eigen::MatrixXd g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = rng.gaussian();
  return g;
}

}  // namespace

Matrix random_spd(Eigen::Index dim, SplitMix64& rng, double lo, double hi) {
  if (dim < 1) throw DimensionError("random_spd: dim must be >= 1");
  if (!(lo > 0.0 && lo <= hi))
    throw InvalidInputError("random_spd: need 0 < lo <= hi");
  Eigen::VectorXd lambda(dim);
  for (Eigen::Index i = 0; i < dim; ++i) lambda(i) = rng.log_uniform(lo, hi);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(dim, rng));
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd s = q * lambda.asDiagonal() * q.transpose();
  s = 0.5 * (s + s.transpose().eval());  // kill round-off asymmetry
  return s.cast<Complex>();
}

Matrix random_accretive(Eigen::Index dim, SplitMix64& rng, double sym_lo,
                        double sym_hi, double skew_scale) {
  Matrix sym = random_spd(dim, rng, sym_lo, sym_hi);
  Eigen::MatrixXd g = gaussian_matrix(dim, rng);
  Eigen::MatrixXd skew = 0.5 * skew_scale * (g - g.transpose().eval());
  return sym + skew.cast<Complex>();
}

GeneratorPair random_pair(Eigen::Index dim, SplitMix64& rng) {
  Matrix a = random_spd(dim, rng, 0.3, 1.5);
  Matrix b = random_accretive(dim, rng, 0.1, 0.8, 0.3);
  return {GeneratorSpec::analyze(a), GeneratorSpec::analyze(b)};
}

RateConstants measure_rate_constants(const GeneratorSpec& a,
                                     const GeneratorSpec& b, double alpha) {
  if (a.dim() != b.dim())
    throw DimensionError("measure_rate_constants: dimensions differ");
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw DomainError("measure_rate_constants: alpha must lie in [0, 1)");
  RateConstants k;
  k.alpha = alpha;
  k.eta = auto_shift_eta(a, b);
  Eigen::Index d = a.dim();
  Matrix id = Matrix::Identity(d, d);
  GeneratorSpec sa = GeneratorSpec::analyze(a.mat + k.eta * id);
  GeneratorSpec sh = GeneratorSpec::analyze(a.mat + b.mat + k.eta * id);

  Matrix inv = resolvent(sa, Complex(0.0, 0.0));
  k.a_prime = std::max(op_norm(b.mat * inv, NormKind::p2),
                       op_norm(inv * b.mat, NormKind::p2));
  k.b_norm = op_norm(b.mat, NormKind::p2);

  // ||T(0)|| = 1, which the grid (starting at t = 1e-4) narrowly misses.
  k.c_a = std::max(1.0, holomorphic_moment(sa, 0.0, default_moment_grid()));
  k.c_b = std::max(1.0, holomorphic_moment(b, 0.0, default_moment_grid()));
  k.c_h = std::max(1.0, holomorphic_moment(sh, 0.0, default_moment_grid()));
  k.c_a_prime =
      holomorphic_moment(sa, 1.0, moment_grid_with_candidates(sa, 1.0));
  k.c_h_prime =
      holomorphic_moment(sh, 1.0, moment_grid_with_candidates(sh, 1.0));

  if (alpha > 0.0) {
    Matrix inv_alpha = frac_power(GeneratorSpec::analyze(inv), alpha);
    k.d = std::max(op_norm(b.mat * inv_alpha, NormKind::p2),
                   op_norm(inv_alpha * b.mat, NormKind::p2));
    k.zeta_1_alpha = zeta_one_plus(alpha);
    double order = 1.0 + alpha;
    k.m_alpha =
        holomorphic_moment(sa, order, moment_grid_with_candidates(sa, order));
  } else {
    k.d = k.b_norm;  // (A + eta)^0 = I
    k.zeta_1_alpha = 0.0;
    k.m_alpha = 0.0;
  }
  return theorem_constants(k);
}

namespace {

void run_case_checks(const GeneratorPair& pair, int case_index,
                     std::uint64_t subseed,
                     std::vector<BoundCheckReport>& out) {
  GeneratorSpec h = GeneratorSpec::analyze(pair.a.mat + pair.b.mat);
  const GeneratorSpec* operands[3] = {&pair.a, &pair.b, &h};
  for (int which = 0; which < 3; ++which) {
    const GeneratorSpec& m = *operands[which];
    auto tag = [&](BoundCheckReport r) {
      r.params.emplace_back("case", static_cast<double>(case_index));
      r.params.emplace_back("operand", static_cast<double>(which));
      r.params.emplace_back("seed_hi", static_cast<double>(subseed >> 32));
      r.params.emplace_back("seed_lo",
                            static_cast<double>(subseed & 0xffffffffULL));
      out.push_back(std::move(r));
    };
    tag(taylor_remainder_check(m, 0, 0.5));
    tag(taylor_remainder_check(m, 1, 0.5));
    tag(taylor_remainder_check(m, 2, 0.5));
    tag(taylor_remainder_check(m, 1, 0.1));
    tag(resolvent_expansion_check(m, 1));
    tag(resolvent_expansion_check(m, 3));
    tag(euler_approx_check(m, 0.05));
    tag(euler_approx_check(m, 0.5));
    tag(frac_resolvent_check(m, 0.0, 1.0));
    tag(frac_resolvent_check(m, 0.5, 1.0));
    tag(frac_resolvent_check(m, 1.0, 1.0));
    tag(frac_resolvent_check(m, 0.5, 0.25));
  }
}

std::vector<std::uint64_t> case_seeds(int cases, std::uint64_t seed) {
  SplitMix64 root(seed);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(cases));
  for (auto& s : out) s = root.next_u64();
  return out;
}

void check_battery_args(int cases, Eigen::Index dim) {
  if (cases < 1) throw InvalidInputError("battery needs at least one case");
  if (dim < 1 || dim > 64)
    throw DimensionError("battery dimension must lie in [1, 64]");
}

}  // namespace

std::vector<BoundCheckReport> inequality_battery_serial(int cases,
                                                        Eigen::Index dim,
                                                        std::uint64_t seed) {
  check_battery_args(cases, dim);
  auto seeds = case_seeds(cases, seed);
  std::vector<BoundCheckReport> out;
  for (int i = 0; i < cases; ++i) {
    SplitMix64 rng(seeds[static_cast<std::size_t>(i)]);
    run_case_checks(random_pair(dim, rng), i, seeds[static_cast<std::size_t>(i)],
                    out);
  }
  return out;
}

std::vector<BoundCheckReport> inequality_battery(int cases, Eigen::Index dim,
                                                 std::uint64_t seed,
                                                 bool parallel) {
  if (!parallel) return inequality_battery_serial(cases, dim, seed);
  check_battery_args(cases, dim);
  auto seeds = case_seeds(cases, seed);
  std::vector<std::vector<BoundCheckReport>> slots(
      static_cast<std::size_t>(cases));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cases; ++i) {
    SplitMix64 rng(seeds[static_cast<std::size_t>(i)]);
    run_case_checks(random_pair(dim, rng), i, seeds[static_cast<std::size_t>(i)],
                    slots[static_cast<std::size_t>(i)]);
  }
  std::vector<BoundCheckReport> out;
  for (auto& slot : slots)
    for (auto& r : slot) out.push_back(std::move(r));
  return out;
}

}  // namespace trotterlab
