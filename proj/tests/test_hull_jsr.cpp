#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsac/error.hpp"
#include "rsac/hull.hpp"
#include "rsac/jsr.hpp"
#include "rsac/specbounds.hpp"

using namespace rsac;

namespace {

std::vector<RealVec3> cube() {
  std::vector<RealVec3> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back({{double(x), double(y), double(z)}});
  return pts;
}

// Every point inside every facet, brute force.
double worst_violation(const Polytope3& p, const std::vector<RealVec3>& pts) {
  double worst = -INFINITY;
  for (const auto& q : pts)
    for (const auto& f : p.facets) worst = std::max(worst, dot(f.normal, q) - f.offset);
  return worst;
}

}  // namespace

TEST(Hull, Cube) {
  const auto h = convex_hull_3d(cube());
  EXPECT_EQ(h.vertices.size(), 8u);
  EXPECT_EQ(h.facets.size(), 6u);
  EXPECT_TRUE(h.balanced());
  for (const auto& f : h.facets) EXPECT_NEAR(f.offset, 1, 1e-12);
}

TEST(Hull, InteriorAndFacePointsPruned) {
  auto pts = cube();
  pts.push_back({{0, 0, 0}});
  pts.push_back({{0, 0, 1}});     // face centre
  pts.push_back({{1, 1, 0}});     // edge midpoint
  pts.push_back({{0.3, -0.2, 0.5}});
  const auto h = convex_hull_3d(pts);
  EXPECT_EQ(h.vertices.size(), 8u);
  EXPECT_EQ(h.facets.size(), 6u);
  EXPECT_LE(worst_violation(h, pts), 1e-10);
}

TEST(Hull, DegenerateInput) {
  EXPECT_THROW(convex_hull_3d({{{0, 0, 0}}, {{1, 0, 0}}, {{0, 1, 0}}}), DegenerateInput);
  EXPECT_THROW(convex_hull_3d({{{0, 0, 0}}, {{1, 0, 0}}, {{0, 1, 0}}, {{1, 1, 0}}}), DegenerateInput);
  EXPECT_THROW(convex_hull_3d({{{0, 0, 0}}, {{1, 0, 0}}, {{2, 0, 0}}, {{3, 0, 0}}}), DegenerateInput);
  EXPECT_THROW(convex_hull_3d({{{0, 0, 0}}, {{1, 0, 0}}, {{0, 1, 0}}, {{0, 0, NAN}}}), NonFiniteInput);
}

TEST(Hull, OrbitOfLowerBoundVector) {
  const double lam = eigen_constants().lambda;
  std::vector<RealVec3> pts;
  RealVec3 v{{-1, 1, 1}};
  for (int len = 0; len <= 4; ++len) {
    pts.push_back(v);
    pts.push_back(-v);
    v = kAM.cast<double>() * v * (1.0 / lam);
  }
  pts.push_back({{0, 0, 1}});
  pts.push_back({{0, 0, -1}});
  const auto h = convex_hull_3d(pts);
  EXPECT_LE(worst_violation(h, pts), 1e-10);
  for (const auto& q : h.vertices) EXPECT_NEAR(h.violation(q), 0, 1e-10);
}

TEST(Hull, RandomCloudsEncloseInputs) {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (int t = 0; t < 30; ++t) {
    std::vector<RealVec3> pts;
    const int n = 4 + t * 3;
    for (int i = 0; i < n; ++i) pts.push_back({{g(rng), g(rng), g(rng)}});
    const auto h = convex_hull_3d(pts);
    EXPECT_LE(worst_violation(h, pts), 1e-10);
    // Each reported vertex is an input point lying on the boundary.
    for (const auto& q : h.vertices) EXPECT_NEAR(h.violation(q), 0, 1e-9);
    // Vertex count obeys Euler for simplicial hulls: F = 2V - 4.
    EXPECT_EQ(h.facets.size(), 2 * h.vertices.size() - 4);
  }
}

TEST(Jsr, SpectralRadius) {
  const double lam = eigen_constants().lambda;
  EXPECT_NEAR(spectral_radius(kMA), lam, 1e-12);
  EXPECT_NEAR(spectral_radius(kMB), 1, 1e-12);
  EXPECT_NEAR(spectral_radius(RealMat3::identity()), 1, 1e-12);
  EXPECT_NEAR(std::max(spectral_radius(kMA), spectral_radius(kMB)), lam, 1e-12);
}

TEST(Jsr, Irreducibility) {
  EXPECT_TRUE(irreducibility_check().irreducible);
  const MatrixFamily ii{{"I", IntMat3::identity()}, {"I", IntMat3::identity()}};
  const auto r = irreducibility_check(ii);
  EXPECT_FALSE(r.irreducible);
  ASSERT_TRUE(r.witness.has_value());
  // A and B share the eigenvector e3 (A e3 = e3, B e3 = 0).
  const MatrixFamily ab{{"A", kA}, {"B", kB}};
  const auto s = irreducibility_check(ab);
  EXPECT_FALSE(s.irreducible);
  ASSERT_TRUE(s.witness.has_value());
  const RealVec3 w = *s.witness;
  EXPECT_NEAR(std::abs(w[2]), 1, 1e-9);
}

TEST(Jsr, InvariantPlaneViaTransposes) {
  // Upper block-triangular pair: the plane z = 0 is invariant, but the two
  // matrices share no eigenvector.
  const IntMat3 x{{{{0, 1, 1}, {-1, 0, 0}, {0, 0, 2}}}};
  const IntMat3 y{{{{1, 2, 0}, {3, 1, 0}, {0, 0, 1}}}};
  const MatrixFamily f{{"X", x}, {"Y", y}};
  const auto r = irreducibility_check(f);
  EXPECT_FALSE(r.irreducible);
  EXPECT_TRUE(r.witness_from_transposes);
}

TEST(Jsr, BracketDepthOne) {
  const double lam = eigen_constants().lambda;
  const auto b = bnb_bracket(1);
  EXPECT_NEAR(b.lower, lam, 1e-12);
  EXPECT_NEAR(b.upper, std::max(spectral_norm(kMA), spectral_norm(kMB)), 1e-12);
  ASSERT_EQ(b.witness.length(), 1u);
  EXPECT_EQ(b.witness.letters[0], 0u);
}

TEST(Jsr, BracketsTightenWithDepth) {
  const double lam = eigen_constants().lambda;
  double lower = 0, upper = INFINITY;
  for (int d = 1; d <= 12; ++d) {
    const auto b = bnb_bracket(d);
    EXPECT_LE(b.lower, lam + 1e-9);
    EXPECT_GE(b.upper, lam - 1e-9);
    EXPECT_GE(b.lower, lower - 1e-15);
    EXPECT_LE(b.upper, upper + 1e-15);
    lower = b.lower;
    upper = b.upper;
  }
  EXPECT_LE(bnb_bracket(8).upper / bnb_bracket(8).lower, 1.05);
  EXPECT_LE(bnb_bracket(12).upper / bnb_bracket(12).lower, 1.02);
  EXPECT_NEAR(bnb_bracket(8).upper / lam, 1.0407, 1e-4);
}

TEST(Jsr, PruningKeepsLevelMaxExact) {
  // Brute-force level maxima from the oracle, no pruning.
  const int depth = 9;
  const auto b = bnb_bracket(depth);
  std::vector<oracle::M3> layer{oracle::pow(oracle::kMA, 0)};
  for (int len = 1; len <= depth; ++len) {
    std::vector<oracle::M3> next;
    double best = 0;
    for (const auto& p : layer)
      for (const auto* x : {&oracle::kMA, &oracle::kMB}) {
        next.push_back(oracle::mul(p, *x));
        best = std::max(best, oracle::spectral_norm(oracle::to_real(next.back())));
      }
    EXPECT_NEAR(b.level_norm_max[len - 1], best, 1e-9 * best) << len;
    layer = std::move(next);
  }
  EXPECT_GT(b.pruned, 0u);
}

TEST(Jsr, ScaledNormTightensBracket) {
  const auto plain = bnb_bracket(8, 1.0);
  const auto scaled = bnb_bracket(8, 1.5);
  EXPECT_NEAR(plain.lower, scaled.lower, 1e-12);
  EXPECT_LT(scaled.upper, plain.upper);
  EXPECT_GE(scaled.upper, eigen_constants().lambda - 1e-9);
}

TEST(Jsr, BracketErrors) {
  EXPECT_THROW(bnb_bracket(0), std::invalid_argument);
  EXPECT_THROW(bnb_bracket(kMaxBnbDepth + 1), DepthCapExceeded);
  EXPECT_THROW(bnb_bracket(3, 0.0), std::invalid_argument);
  EXPECT_THROW(bnb_bracket(3, -1.0), std::invalid_argument);
}

TEST(Jsr, Deterministic) {
  const auto a = bnb_bracket(10);
  const auto b = bnb_bracket(10);
  EXPECT_EQ(a.lower, b.lower);
  EXPECT_EQ(a.upper, b.upper);
  EXPECT_EQ(a.witness.letters, b.witness.letters);
}

TEST(InvariantPolytope, CandidateMaSucceeds) {
  const auto r = invariant_polytope(10, 1e-8);
  ASSERT_TRUE(r.success);
  EXPECT_LE(r.rounds, 10);
  EXPECT_EQ(r.rounds, 8);
  EXPECT_EQ(r.polytope.vertices.size(), 26u);
  EXPECT_LE(r.max_violation, 1e-8);
  EXPECT_NEAR(r.scale, eigen_constants().lambda, 1e-12);
  EXPECT_TRUE(r.polytope.balanced(1e-12));
  // Independent containment certificate over every facet.
  const double lam = eigen_constants().lambda;
  for (const auto& v : r.polytope.vertices)
    for (const auto& x : {kMA, kMB}) {
      const RealVec3 img = x.cast<double>() * v * (1.0 / lam);
      for (const auto& f : r.polytope.facets) EXPECT_LE(dot(f.normal, img) - f.offset, 1e-8);
    }
  for (const auto& v : r.polytope.vertices) EXPECT_NEAR(r.polytope.violation(v), 0, 1e-10);
}

TEST(InvariantPolytope, UndersizedCandidateFails) {
  const auto family = ma_mb_family();
  const auto r = invariant_polytope(family, make_word(family, {1}), 10, 1e-8);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.rounds, 10);
  EXPECT_TRUE(r.escaping.has_value());
  EXPECT_GT(r.escaped_last_round, 0u);
}

TEST(ProductWord, LeftToRight) {
  const auto family = ma_mb_family();
  const auto w = make_word(family, {0, 1, 1, 0});
  EXPECT_EQ(w.product, kMA * kMB * kMB * kMA);
  EXPECT_EQ(w.names(family), (std::vector<std::string>{"MA", "MB", "MB", "MA"}));
  EXPECT_THROW(make_word(family, {2}), std::out_of_range);
}
