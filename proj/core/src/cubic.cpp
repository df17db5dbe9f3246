#include "rsac/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rsac/error.hpp"

namespace rsac {

namespace {

double eval_cubic(double b, double c, double d, double x) { return ((x + b) * x + c) * x + d; }

}  // namespace

double bisect_cubic(double b, double c, double d, double lo, double hi) {
  double flo = eval_cubic(b, c, d, lo);
  const double fhi = eval_cubic(b, c, d, hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) throw Error("bisect_cubic: bracket has no sign change");
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = eval_cubic(b, c, d, mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::array<std::complex<double>, 3> solve_monic_cubic(double b, double c, double d) {
  if (!std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
    throw NonFiniteInput("cubic coefficients must be finite");
  // Cauchy bound: every root has modulus below 1 + max |coefficient|.
  const double bound = 1.0 + std::max({std::abs(b), std::abs(c), std::abs(d)});
  const double r = bisect_cubic(b, c, d, -bound, bound);
  // x^3 + b x^2 + c x + d = (x - r)(x^2 + p x + q)
  const double p = b + r;
  const double q = c + r * p;
  const double disc = p * p - 4.0 * q;
  std::complex<double> r1, r2;
  if (disc >= 0) {
    const double s = std::sqrt(disc);
    const double t = -0.5 * (p + std::copysign(s, p));
    if (t != 0.0) {
      r1 = t;
      r2 = q / t;
    } else {
      r1 = 0.0;
      r2 = 0.0;
    }
  } else {
    const double im = 0.5 * std::sqrt(-disc);
    r1 = {-0.5 * p, im};
    r2 = {-0.5 * p, -im};
  }
  return {std::complex<double>(r), r1, r2};
}

std::array<std::complex<double>, 3> eigenvalues(const RealMat3& m) {
  return solve_monic_cubic(-m.trace(), m.minor_sum(), -m.determinant());
}

std::array<double, 3> symmetric_eigenvalues(const RealMat3& s) {
  for (const auto& row : s.a)
    for (double x : row)
      if (!std::isfinite(x)) throw NonFiniteInput("matrix has non-finite entries");

  const double p1 = s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2);
  const double q = s.trace() / 3.0;
  std::array<double, 3> eig;
  if (p1 == 0.0) {
    eig = {s(0, 0), s(1, 1), s(2, 2)};
  } else {
    const double p2 = (s(0, 0) - q) * (s(0, 0) - q) + (s(1, 1) - q) * (s(1, 1) - q) +
                      (s(2, 2) - q) * (s(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    RealMat3 shifted = s;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= q;
    const double half_det = shifted.determinant() / (2.0 * p * p * p);
    const double phi = std::acos(std::clamp(half_det, -1.0, 1.0)) / 3.0;
    eig[0] = q + 2.0 * p * std::cos(phi);
    eig[2] = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    eig[1] = 3.0 * q - eig[0] - eig[2];
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());

  // Newton polish of simple roots; a step is kept only if it lowers |p(x)|.
  const double b = -s.trace();
  const double c = s.minor_sum();
  const double d = -s.determinant();
  for (double& x : eig) {
    for (int iter = 0; iter < 3; ++iter) {
      const double fx = eval_cubic(b, c, d, x);
      const double dfx = (3.0 * x + 2.0 * b) * x + c;
      if (fx == 0.0 || dfx == 0.0) break;
      const double next = x - fx / dfx;
      if (!std::isfinite(next) || std::abs(eval_cubic(b, c, d, next)) >= std::abs(fx)) break;
      x = next;
    }
  }
  if (!std::isfinite(eig[0]) || !std::isfinite(eig[2])) {
    // Fallback: bisection plus deflation on the characteristic cubic.
    auto roots = solve_monic_cubic(b, c, d);
    for (std::size_t i = 0; i < 3; ++i) eig[i] = roots[i].real();
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

RealVec3 null_vector(const RealMat3& m) {
  const RealVec3 rows[3] = {{{m(0, 0), m(0, 1), m(0, 2)}},
                            {{m(1, 0), m(1, 1), m(1, 2)}},
                            {{m(2, 0), m(2, 1), m(2, 2)}}};
  RealVec3 best{};
  double best_norm = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const RealVec3 cp = cross(rows[i], rows[j]);
      const double n = norm(cp);
      if (n > best_norm) {
        best_norm = n;
        best = cp;
      }
    }
  double scale = 0.0;
  int dominant = 0;
  for (int i = 0; i < 3; ++i)
    if (norm(rows[i]) > scale) {
      scale = norm(rows[i]);
      dominant = i;
    }
  if (best_norm > 1e-10 * std::max(1.0, scale * scale)) return best / best_norm;
  if (scale == 0.0) return {{1.0, 0.0, 0.0}};
  // Rank <= 1: any vector orthogonal to the dominant row.
  const RealVec3 r = rows[dominant];
  RealVec3 axis{{1.0, 0.0, 0.0}};
  if (std::abs(r[0]) > std::abs(r[1]) && std::abs(r[0]) > std::abs(r[2])) axis = {{0.0, 1.0, 0.0}};
  const RealVec3 v = cross(r, axis);
  return v / norm(v);
}

std::array<std::complex<double>, 3> eigenvector(const RealMat3& m, std::complex<double> mu) {
  using C = std::complex<double>;
  std::array<std::array<C, 3>, 3> rows;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rows[i][j] = m(i, j) - (i == j ? mu : C(0.0));
  auto ccross = [](const std::array<C, 3>& x, const std::array<C, 3>& y) {
    return std::array<C, 3>{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                            x[0] * y[1] - x[1] * y[0]};
  };
  auto cnorm = [](const std::array<C, 3>& x) {
    return std::sqrt(std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]));
  };
  std::array<C, 3> best{};
  double best_norm = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      auto cp = ccross(rows[i], rows[j]);
      const double n = cnorm(cp);
      if (n > best_norm) {
        best_norm = n;
        best = cp;
      }
    }
  if (best_norm == 0.0) throw DegenerateInput("eigenvector: eigenspace is not one-dimensional");
  for (auto& x : best) x /= best_norm;
  return best;
}

}  // namespace rsac
