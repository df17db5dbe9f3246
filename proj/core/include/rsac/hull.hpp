#pragma once

// Convex hulls of small 3D point sets, used for the invariant polytope.

#include <vector>

#include "rsac/matrix.hpp"

namespace rsac {

/// Half-space normal . x <= offset, with a unit normal.
struct Facet {
  RealVec3 normal;
  double offset = 0;
};

struct Polytope3 {
  std::vector<RealVec3> vertices;
  std::vector<Facet> facets;

  /// max over facets of normal . p - offset; <= 0 means inside.
  double violation(const RealVec3& p) const;
  /// Inside when every facet violation is <= tol * (1 + |offset|).
  bool contains(const RealVec3& p, double tol) const;
  /// Every vertex has its negative in the vertex list (within tol).
  bool balanced(double tol = 1e-12) const;
};

/// Incremental hull. Points within tol (scaled by the point cloud's extent)
/// of a face plane count as on it, so coplanar faces merge into one facet
/// and points interior to a face or edge are dropped from the vertex list.
/// Throws DegenerateInput on fewer than 4 points or coplanar input,
/// NonFiniteInput on NaN/inf coordinates.
Polytope3 convex_hull_3d(const std::vector<RealVec3>& points, double tol = 1e-10);

}  // namespace rsac
