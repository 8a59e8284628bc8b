#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace trotterlab {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

enum class NormKind { p1, p2, pinf };

// A square matrix together with the structural facts the check batteries
// branch on. `analyze` fills the flags; constructing by hand is allowed for
// tests that want to lie about them.
struct GeneratorSpec {
  Matrix mat;
  bool is_accretive = false;           // Hermitian part PSD up to 1e-10
  bool is_normal = false;              // commutes with its adjoint up to 1e-12
  std::optional<double> sector_semi_angle;  // present only when is_normal
  double bound_constant = 1.0;         // C >= 1 with ||e^{-tA}|| <= C on t >= 0

  static GeneratorSpec analyze(const Matrix& m);

  Eigen::Index dim() const { return mat.rows(); }
};

// Tolerances used by GeneratorSpec::analyze.
inline constexpr double kAccretiveTol = 1e-10;
inline constexpr double kNormalTol = 1e-12;

// Condition-number ceiling above which solves are refused.
inline constexpr double kConditionLimit = 1e14;

// Throws InvalidInputError/DimensionError for non-square or non-finite input.
void require_square_finite(const Matrix& m, const char* who);

// Induced operator norm: max column sum (p1), largest singular value (p2),
// max row sum (pinf).
double op_norm(const Matrix& m, NormKind kind);

// e^{-tA} by scaling-and-squaring with a diagonal Pade approximant.
Matrix expm(const GeneratorSpec& a, double t);

// (A - zI)^{-1} via pivoted LU; refuses inputs with condition estimate
// beyond kConditionLimit (SingularityError carries the estimate).
Matrix resolvent(const GeneratorSpec& a, Complex z);

// Condition estimate (2-norm, via SVD) used by the resolvent guard; exposed
// for tests.
double condition_estimate(const Matrix& m);

// A^alpha for alpha in [0, 2), principal branch, via eigendecomposition.
// Hermitian inputs use the self-adjoint solver; general diagonalizable inputs
// use the complex solver with an eigenvector condition guard. For alpha >= 1
// the integer part is split off and composed with the fractional remainder.
Matrix frac_power(const GeneratorSpec& a, double alpha);

// Spectrum of A (unordered as produced by the solver, then sorted by real
// part then imaginary part for determinism).
std::vector<Complex> spectrum(const GeneratorSpec& a);

// A^alpha x for alpha in (0, 1) through the singular-integral representation
//   (1/Gamma(-alpha)) * integral_0^inf lambda^{-alpha-1} (e^{-lambda A} - I) x dlambda,
// with the signed (negative) Gamma(-alpha). Near zero the integrand is summed
// as a power series; the far tail is bounded analytically and extended until
// the remainder bound drops below tol/4. Serves as the independent oracle for
// frac_power. Requires a boundedly invertible A (spectrum away from 0).
Vector balakrishnan_quadrature(const GeneratorSpec& a, const Vector& x,
                               double alpha, double tol = 1e-8);

}  // namespace trotterlab
