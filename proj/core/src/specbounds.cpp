#include "rsac/specbounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "rsac/cubic.hpp"
#include "rsac/error.hpp"

namespace rsac {

namespace {

using cd = std::complex<double>;
using CMat = std::array<std::array<cd, 3>, 3>;

CMat cmul(const CMat& x, const CMat& y) {
  CMat out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

CMat cdiag(cd a, cd b, cd c) {
  CMat out{};
  out[0][0] = a;
  out[1][1] = b;
  out[2][2] = c;
  return out;
}

CMat cscale(CMat x, cd s) {
  for (auto& row : x)
    for (auto& e : row) e *= s;
  return x;
}

// Rows of the MA inverse eigenvector matrix, before division by gamma.
CMat ma_inverse_unscaled(double lam, cd nu) {
  const cd nb = std::conj(nu);
  return {{{nu - nb, (nb - nu) * (nb + nu), (nb - nu) * (2.0 + nb * nu)},
           {lam - nu, (nu - lam) * (nu + lam), (nu - lam) * (2.0 + nu * lam)},
           {nb - lam, (lam - nb) * (lam + nb), (lam - nb) * (2.0 + lam * nb)}}};
}

CMat swap_first_columns(CMat x) {
  for (auto& row : x) std::swap(row[0], row[1]);
  return x;
}

}  // namespace

double spectral_norm(const RealMat3& m) {
  for (const auto& row : m.a)
    for (double e : row)
      if (!std::isfinite(e)) throw NonFiniteInput("spectral_norm: non-finite entry");
  const RealMat3 gram = m.transposed() * m;
  const double top = symmetric_eigenvalues(gram)[0];
  return std::sqrt(std::max(top, 0.0));
}

double spectral_norm(const IntMat3& m) { return spectral_norm(m.cast<double>()); }

double frobenius_norm(const RealMat3& m) {
  double acc = 0;
  for (const auto& row : m.a)
    for (double e : row) {
      if (!std::isfinite(e)) throw NonFiniteInput("frobenius_norm: non-finite entry");
      acc += e * e;
    }
  return std::sqrt(acc);
}

double frobenius_norm(const IntMat3& m) {
  std::int64_t acc = 0;
  for (const auto& row : m.a)
    for (std::int64_t e : row) acc = detail::checked_add(acc, detail::checked_mul(e, e));
  return std::sqrt(static_cast<double>(acc));
}

const SpectralConstants& eigen_constants() {
  static const SpectralConstants constants = [] {
    SpectralConstants c{};
    c.lambda = bisect_cubic(1.0, -2.0, -4.0, 1.0, 2.0);
    // Deflate: x^2 + (1 + lambda) x + 4 / lambda.
    const double p = 1.0 + c.lambda;
    const double q = 4.0 / c.lambda;
    const double disc = q - p * p / 4.0;
    c.nu = cd(-p / 2.0, -std::sqrt(disc));
    const cd nb = std::conj(c.nu);
    c.gamma = (c.lambda - nb) * (c.lambda - c.nu) * (nb - c.nu);
    const double re = c.nu.real();
    const double mod2 = std::norm(c.nu);
    c.a_coeff = -2.0 * re * (2.0 * re + mod2 - 1.0) / c.gamma;
    const CMat inv = swap_first_columns(ma_inverse_unscaled(c.lambda, c.nu));
    const cd proj = (-inv[0][0] + inv[0][1] + inv[0][2]) / c.gamma;
    c.leading_coeff = -c.lambda * proj;
    return c;
  }();
  return constants;
}

int reduced_mb_power(int k) {
  if (k < 0) throw std::invalid_argument("reduced_mb_power: negative exponent");
  return k <= 2 ? k : 2;
}

IntMat3 power_product(int j, int k) {
  if (j < 0 || k < 0 || j + k < 1) throw std::invalid_argument("power_product: need j, k >= 0, j + k >= 1");
  IntMat3 mb = power(kMB, static_cast<unsigned>(reduced_mb_power(k)));
  // (MB)^3 = -(MB)^2, so the sign alternates with k beyond 2.
  if (k > 2 && (k % 2) == 1) mb = mb * std::int64_t{-1};
  return power(kMA, static_cast<unsigned>(j)) * mb;
}

double power_product_norm(int j, int k) { return spectral_norm(power_product(j, k)); }

bool BoundReport::pass() const noexcept { return failures() == 0; }

std::size_t BoundReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const BoundCase& c) { return !c.pass; }));
}

double BoundReport::min_margin() const noexcept {
  double out = std::numeric_limits<double>::infinity();
  for (const auto& c : cases) out = std::min(out, c.margin);
  return out;
}

BoundReport verify_lemma4(double tolerance) {
  const double lam = eigen_constants().lambda;
  BoundReport report;
  report.tolerance = tolerance;
  auto add = [&](std::string label, int j, int k, double value, double bound, bool extra) {
    BoundCase c;
    c.label = std::move(label);
    c.j = j;
    c.k = k;
    c.norm = value;
    c.bound = bound;
    c.margin = bound - value;
    c.pass = c.margin >= -tolerance && extra;
    report.cases.push_back(std::move(c));
  };

  add("power", 1, 2, power_product_norm(1, 2), 0.970 * std::pow(lam, 3), true);
  for (int j = 2; j <= 21; ++j)
    for (int k = 1; k <= 2; ++k)
      add("power", j, k, power_product_norm(j, k), 0.970 * std::pow(lam, j + k), true);

  const double single = power_product_norm(1, 1);
  add("exception", 1, 1, single, 1.028 * lam * lam, single > lam * lam);

  const double squared = spectral_norm(power(kMA * kMB, 2));
  add("square", 2, 2, squared, std::pow(lam, 4), true);

  for (int k = 1; k <= 2; ++k) {
    const RealMat3 w = power_product(22, k).cast<double>() * (1.0 / std::pow(lam, 23));
    add("frobenius", 22, k, frobenius_norm(w), 0.970, true);
  }

  std::sort(report.cases.begin(), report.cases.end(), [](const BoundCase& a, const BoundCase& b) {
    return std::tie(a.label, a.j, a.k) < std::tie(b.label, b.j, b.k);
  });
  return report;
}

const char* to_string(DiagTarget t) noexcept {
  switch (t) {
    case DiagTarget::MA: return "MA";
    case DiagTarget::M: return "M";
    case DiagTarget::AM: return "AM";
  }
  return "?";
}

double diagonalization_residual(DiagTarget target, int j) {
  if (j < 1 || j > 30) throw std::invalid_argument("diagonalization_residual: j outside [1, 30]");
  const auto& c = eigen_constants();
  const double lam = c.lambda;
  const cd nu = c.nu;
  const cd nb = std::conj(nu);
  const cd inv_gamma = 1.0 / c.gamma;
  const CMat ma_inv = cscale(ma_inverse_unscaled(lam, nu), inv_gamma);

  CMat p{}, d{}, p_inv{};
  IntMat3 exact;
  switch (target) {
    case DiagTarget::MA: {
      p = {{{2.0 - lam * lam, 2.0 - nb * nb, 2.0 - nu * nu}, {-lam, -nb, -nu}, {1.0, 1.0, 1.0}}};
      const double sign = (j % 2) ? -1.0 : 1.0;
      d = cdiag(sign * std::pow(lam, j), sign * std::pow(nb, j), sign * std::pow(nu, j));
      p_inv = ma_inv;
      exact = power(kMA, static_cast<unsigned>(j));
      break;
    }
    case DiagTarget::M: {
      p = {{{lam, nu, nb}, {lam * lam - 2.0, nu * nu - 2.0, nb * nb - 2.0}, {1.0, 1.0, 1.0}}};
      d = cdiag(std::pow(lam, j), std::pow(nu, j), std::pow(nb, j));
      // This is the negated inverse, hence the -1/gamma scaling.
      const CMat neg_inverse{{{(nb - nu) * (nu + nb), nu - nb, (nu - nb) * (2.0 + nu * nb)},
                          {(lam - nb) * (lam + nb), nb - lam, (nb - lam) * (2.0 + lam * nb)},
                          {(nu - lam) * (lam + nu), lam - nu, (lam - nu) * (2.0 + lam * nu)}}};
      p_inv = cscale(neg_inverse, -inv_gamma);
      exact = power(kM, static_cast<unsigned>(j));
      break;
    }
    case DiagTarget::AM: {
      p = {{{-lam, -nb, -nu}, {2.0 - lam * lam, 2.0 - nb * nb, 2.0 - nu * nu}, {1.0, 1.0, 1.0}}};
      d = cdiag(std::pow(-lam, j), std::pow(-nb, j), std::pow(-nu, j));
      p_inv = swap_first_columns(ma_inv);
      exact = power(kAM, static_cast<unsigned>(j));
      break;
    }
  }
  const CMat rebuilt = cmul(cmul(p, d), p_inv);
  double worst = 0;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      worst = std::max(worst, std::abs(rebuilt[r][s] - cd(static_cast<double>(exact(r, s)), 0.0)));
  return worst;
}

std::int64_t lower_bound_value(int m) {
  check_order(m, 80, 3);
  return (power(kAM, static_cast<unsigned>(m - 2)) * IntVec3{{-1, 1, 1}})[0];
}

std::int64_t lower_bound_value_variant(int m) {
  check_order(m, 80, 3);
  return (power(kAM, static_cast<unsigned>(m - 3)) * IntVec3{{-1, 1, -1}})[0];
}

double max_ratio(const AutocorrTable& aperiodic) {
  if (aperiodic.kind() != CorrKind::aperiodic) throw std::invalid_argument("max_ratio: needs an aperiodic table");
  std::int64_t best = 0;
  for (std::int64_t k = 1; k <= aperiodic.length(); ++k) best = std::max(best, std::abs(aperiodic[k]));
  return static_cast<double>(best) / std::pow(eigen_constants().lambda, aperiodic.order());
}

double max_ratio(int m, int cap) { return max_ratio(aperiodic_table_fast(m, cap)); }

double katz_constant() { return 5.0 / std::pow(eigen_constants().lambda, 4); }

RationalApproxDiagnostic rational_approx_diagnostic() {
  const auto& c = eigen_constants();
  const double lam = c.lambda;
  const cd nu = c.nu;
  RationalApproxDiagnostic d{};
  d.nu_over_lambda = std::abs(nu / lam);
  d.amplitude_k1 = std::abs((nu - lam) * (nu + lam + 1.0));
  d.amplitude_k2 = std::abs((nu - lam) * (nu + lam + 1.0 + 2.0 + nu * lam));
  d.stationary = std::abs(2.0 * nu.imag() * (2.0 * nu.real() + std::norm(nu) + 3.0));
  d.pass = d.nu_over_lambda <= 0.936 && d.amplitude_k2 <= 7.461 && d.stationary <= 4.416;
  return d;
}

}  // namespace rsac
