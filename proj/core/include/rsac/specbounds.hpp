#pragma once

// Norm and eigenstructure layer for the growth-rate bounds on
// max_k |C_m(k)|: spectral and Frobenius norms of 3x3 matrices, the roots
// of x^3 + x^2 - 2x - 4, closed-form diagonalizations of MA, M and AM, and
// the norm inequalities that bound products of (MA)^j (MB)^k.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "rsac/autocorr.hpp"
#include "rsac/matrix.hpp"

namespace rsac {

/// Largest singular value: square root of the top eigenvalue of m^T m.
/// Throws NonFiniteInput on NaN/inf entries.
double spectral_norm(const RealMat3& m);
double spectral_norm(const IntMat3& m);

double frobenius_norm(const RealMat3& m);
/// Sum of squares accumulated exactly in 64-bit integers.
double frobenius_norm(const IntMat3& m);

struct SpectralConstants {
  double lambda;               // real root, 1.659...
  std::complex<double> nu;     // complex root with negative imaginary part
  std::complex<double> gamma;  // (lambda - conj(nu)) (lambda - nu) (conj(nu) - nu)
  // -2 Re(nu) (2 Re(nu) + |nu|^2 - 1) / gamma. Purely imaginary, since
  // gamma is; leading_coeff is the usable one.
  std::complex<double> a_coeff;
  // Coefficient of (-lambda)^{m-2} in C_m(l_m), read off the AM
  // diagonalization; real up to rounding.
  std::complex<double> leading_coeff;
};

/// Computed once (bisection on [1, 2] then quadratic deflation) and cached.
const SpectralConstants& eigen_constants();

/// (MA)^j (MB)^k in exact integers. Requires j, k >= 0 and j + k >= 1.
IntMat3 power_product(int j, int k);

/// (MB)^k = +/-(MB)^2 for k >= 2, so the exponent that matters is 1 or 2.
int reduced_mb_power(int k);

double power_product_norm(int j, int k);

struct BoundCase {
  std::string label;
  int j = 0;
  int k = 0;
  double norm = 0;
  double bound = 0;
  double margin = 0;  // bound - norm
  bool pass = false;
};

struct BoundReport {
  double tolerance = 0;
  std::vector<BoundCase> cases;
  bool pass() const noexcept;
  std::size_t failures() const noexcept;
  double min_margin() const noexcept;
};

/// Runs every norm inequality used for the upper bound:
///  * ||(MA)^j (MB)^k|| <= 0.970 lambda^{j+k} for 2 <= j <= 21, k in {1, 2}, and (1, 2)
///  * lambda^2 < ||MA MB|| <= 1.028 lambda^2
///  * ||(MA MB)^2|| <= lambda^4
///  * ||W / lambda||_F <= 0.970 at j = 22, W = (MA)^j (MB)^k / (-lambda)^j
/// Failures are recorded, never thrown. Cases are sorted by (label, j, k).
BoundReport verify_lemma4(double tolerance = 1e-9);

enum class DiagTarget { MA, M, AM };

const char* to_string(DiagTarget t) noexcept;

/// Max entrywise |X^j - P D^j P^{-1}| using the closed-form eigenvectors.
/// Requires 1 <= j <= 30.
double diagonalization_residual(DiagTarget target, int j);

/// First component of (AM)^{m-2} (-1, 1, 1), which equals C_m(nearest_third(m)).
/// Exact; 3 <= m <= 80.
std::int64_t lower_bound_value(int m);

/// First component of (AM)^{m-3} (-1, 1, -1), the alternative closed form for
/// the same quantity. Kept for the verification report; it disagrees with
/// the autocorrelation tables.
std::int64_t lower_bound_value_variant(int m);

/// max_{k != 0} |C_m(k)| / lambda^m.
double max_ratio(int m, int cap = kMaxOrder);
double max_ratio(const AutocorrTable& aperiodic);

/// 5 / lambda^4, the best possible constant in the upper bound (attained at m = 4).
double katz_constant();

struct RationalApproxDiagnostic {
  double nu_over_lambda;  // |nu / lambda|, expected <= 0.936
  double amplitude_k1;    // |(nu - lambda)(nu + lambda + 1)|
  double amplitude_k2;    // |(nu - lambda)(nu + lambda + 1 + 2 + nu lambda)|, expected <= 7.461
  double stationary;      // |2 Im(nu) (2 Re(nu) + |nu|^2 + 3)|, expected <= 4.416
  bool pass;
};

RationalApproxDiagnostic rational_approx_diagnostic();

}  // namespace rsac
