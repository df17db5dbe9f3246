#include "rsac/hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "rsac/error.hpp"

namespace rsac {

namespace {

struct Face {
  std::array<std::size_t, 3> idx;
  RealVec3 normal;
  double offset;
  bool alive = true;
};

Face make_face(const std::vector<RealVec3>& pts, std::size_t a, std::size_t b, std::size_t c) {
  Face f{{a, b, c}, {}, 0, true};
  RealVec3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  const double len = norm(n);
  f.normal = len > 0 ? n / len : n;
  f.offset = dot(f.normal, pts[a]);
  return f;
}

double distance(const Face& f, const RealVec3& p) { return dot(f.normal, p) - f.offset; }

}  // namespace

double Polytope3::violation(const RealVec3& p) const {
  double worst = -INFINITY;
  for (const auto& f : facets) worst = std::max(worst, dot(f.normal, p) - f.offset);
  return worst;
}

bool Polytope3::contains(const RealVec3& p, double tol) const {
  return std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
    return dot(f.normal, p) - f.offset <= tol * (1.0 + std::abs(f.offset));
  });
}

bool Polytope3::balanced(double tol) const {
  return std::all_of(vertices.begin(), vertices.end(), [&](const RealVec3& v) {
    return std::any_of(vertices.begin(), vertices.end(),
                       [&](const RealVec3& w) { return norm(v + w) <= tol; });
  });
}

Polytope3 convex_hull_3d(const std::vector<RealVec3>& points, double tol) {
  if (points.size() < 4) throw DegenerateInput("convex_hull_3d: need at least 4 points");
  double extent = 0;
  for (const auto& p : points)
    for (int i = 0; i < 3; ++i) {
      if (!std::isfinite(p[i])) throw NonFiniteInput("convex_hull_3d: non-finite coordinate");
      extent = std::max(extent, std::abs(p[i]));
    }
  const double eps = tol * std::max(extent, 1.0);

  // Initial tetrahedron from extreme points.
  const std::size_t n = points.size();
  std::size_t i0 = 0, i1 = 0, i2 = 0, i3 = 0;
  double best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = norm(points[i] - points[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (best <= eps) throw DegenerateInput("convex_hull_3d: all points coincide");
  const RealVec3 axis = (points[i1] - points[i0]) / norm(points[i1] - points[i0]);
  best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = norm(cross(points[i] - points[i0], axis));
    if (d > best) best = d, i2 = i;
  }
  if (best <= eps) throw DegenerateInput("convex_hull_3d: points are collinear");
  Face base = make_face(points, i0, i1, i2);
  best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = std::abs(distance(base, points[i]));
    if (d > best) best = d, i3 = i;
  }
  if (best <= eps) throw DegenerateInput("convex_hull_3d: points are coplanar");

  std::vector<Face> faces;
  const RealVec3 centroid = (points[i0] + points[i1] + points[i2] + points[i3]) * 0.25;
  auto add_oriented = [&](std::size_t a, std::size_t b, std::size_t c) {
    Face f = make_face(points, a, b, c);
    if (distance(f, centroid) > 0) f = make_face(points, a, c, b);
    faces.push_back(f);
  };
  add_oriented(i0, i1, i2);
  add_oriented(i0, i1, i3);
  add_oriented(i0, i2, i3);
  add_oriented(i1, i2, i3);

  for (std::size_t p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < faces.size(); ++f)
      if (faces[f].alive && distance(faces[f], points[p]) > eps) visible.push_back(f);
    if (visible.empty()) continue;

    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t f : visible) {
      const auto& ix = faces[f].idx;
      for (int e = 0; e < 3; ++e) edges.insert({ix[e], ix[(e + 1) % 3]});
      faces[f].alive = false;
    }
    for (const auto& [a, b] : edges) {
      if (edges.count({b, a})) continue;
      faces.push_back(make_face(points, a, b, p));
    }
  }

  // Merge coplanar triangles into planes, and find which planes meet at
  // each vertex.
  Polytope3 out;
  std::map<std::size_t, std::vector<std::size_t>> planes_at;
  for (const auto& f : faces) {
    if (!f.alive) continue;
    std::size_t plane = out.facets.size();
    for (std::size_t k = 0; k < out.facets.size(); ++k) {
      const Facet& g = out.facets[k];
      if (dot(g.normal, f.normal) > 1.0 - 1e-9 && std::abs(g.offset - f.offset) <= eps) {
        plane = k;
        break;
      }
    }
    if (plane == out.facets.size()) out.facets.push_back({f.normal, f.offset});
    for (std::size_t v : f.idx) {
      auto& list = planes_at[v];
      if (std::find(list.begin(), list.end(), plane) == list.end()) list.push_back(plane);
    }
  }
  for (const auto& [v, list] : planes_at) {
    if (list.size() < 3) continue;
    const bool dup = std::any_of(out.vertices.begin(), out.vertices.end(),
                                 [&](const RealVec3& w) { return norm(w - points[v]) <= eps; });
    if (!dup) out.vertices.push_back(points[v]);
  }
  return out;
}

}  // namespace rsac
