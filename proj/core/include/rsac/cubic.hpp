#pragma once

// Root finding for monic cubics and small eigenproblems on 3x3 matrices.

#include <array>
#include <complex>

#include "rsac/matrix.hpp"

namespace rsac {

/// Bisection for a root of x^3 + b x^2 + c x + d in [lo, hi]; the
/// polynomial must change sign on the bracket. Runs until the bracket stops
/// shrinking in double precision.
double bisect_cubic(double b, double c, double d, double lo, double hi);

/// All three roots of x^3 + b x^2 + c x + d: one real root by bracketed
/// bisection, the remaining pair from the deflated quadratic. roots[0] is
/// the bisected real root.
std::array<std::complex<double>, 3> solve_monic_cubic(double b, double c, double d);

/// Roots of the characteristic polynomial det(xI - m).
std::array<std::complex<double>, 3> eigenvalues(const RealMat3& m);

/// Eigenvalues of a symmetric matrix, descending. Closed-form trigonometric
/// solution, polished by Newton steps on the characteristic polynomial.
std::array<double, 3> symmetric_eigenvalues(const RealMat3& s);

/// A unit vector spanning (approximately) the null space of m, taken from
/// the largest cross product of two rows. Falls back to a vector orthogonal
/// to the dominant row when m has rank <= 1.
RealVec3 null_vector(const RealMat3& m);

/// Unit eigenvector of m for the (possibly complex) eigenvalue mu.
std::array<std::complex<double>, 3> eigenvector(const RealMat3& m, std::complex<double> mu);

}  // namespace rsac
