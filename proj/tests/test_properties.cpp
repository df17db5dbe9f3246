// Randomized invariants with fixed seeds.

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsac/autocorr.hpp"
#include "rsac/cubic.hpp"
#include "rsac/hull.hpp"
#include "rsac/jsr.hpp"
#include "rsac/matrec.hpp"
#include "rsac/sequence.hpp"
#include "rsac/specbounds.hpp"

using namespace rsac;

TEST(Property, PeriodicIsSumOfTwoAperiodic) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = static_cast<int>(rng() % 9);
    std::vector<std::int8_t> terms(std::size_t{1} << m);
    for (auto& t : terms) t = (rng() & 1) ? 1 : -1;
    terms[0] = 1;
    const BinarySeq s(m, terms);
    const auto ap = aperiodic_table_naive(s);
    const auto per = periodic_table_naive(s);
    for (std::int64_t k = 1; k < per.length(); ++k) EXPECT_EQ(per[k], ap[k] + ap[ap.length() - k]);
  }
}

TEST(Property, CorrelationSumIdentity) {
  // (sum a_i)^2 = C(0) + 2 sum_{k >= 1} C(k), i.e. |q(1)|^2.
  for (int m = 0; m <= 16; ++m) {
    const auto t = aperiodic_table_fast(m);
    std::int64_t acc = t[0];
    for (std::int64_t k = 1; k <= t.length(); ++k) acc += 2 * t[k];
    const auto q1 = shapiro_eval(m, 0.0);
    EXPECT_NEAR(static_cast<double>(acc), std::norm(q1), 1e-6) << m;
  }
}

TEST(Property, GeneralizedFamilyEvenShiftsVanish) {
  // The even-shift zeros hold for every sign pattern f, not just one.
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 9);
    std::vector<std::uint8_t> f(m);
    for (auto& b : f) b = rng() & 1;
    const auto s = generalized_sequence(m, f);
    const auto ap = aperiodic_table_naive(s);
    for (std::int64_t k = 2; k < ap.length(); k += 2) EXPECT_EQ(ap[k], 0) << m << ' ' << k;
  }
}

TEST(Property, RandomShiftsDecomposeAtLargeOrder) {
  std::mt19937_64 rng(99);
  for (int m : {16, 18, 20}) {
    const auto tm = aperiodic_table_fast(m);
    const auto tm1 = aperiodic_table_fast(m - 1);
    for (int t = 0; t < 300; ++t) {
      const std::int64_t k = static_cast<std::int64_t>(rng() % (std::uint64_t{1} << (m - 1))) * 2 + 1;
      const auto d = v_direct(k, tm, tm1);
      ASSERT_EQ(v_product(m, k), d);
      ASSERT_EQ(normal_form(m, k).reconstruct(), d);
    }
  }
}

TEST(Property, NormalFormLetterCountAndDelta) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const int m = 3 + static_cast<int>(rng() % 25);
    const std::int64_t k = static_cast<std::int64_t>(rng() % (std::uint64_t{1} << (m - 1))) * 2 + 1;
    const auto nf = normal_form(m, k);
    EXPECT_EQ(nf.letters.size(), static_cast<std::size_t>(m - 2));
    EXPECT_TRUE(nf.delta == 0 || nf.delta == 1);
    const auto label = interval_label(k, m);
    EXPECT_EQ(nf.delta, (label == Interval::s3 || label == Interval::s4) ? 1 : 0);
  }
}

TEST(Property, SymmetricEigenvaluesMatchTraceAndDeterminant) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 300; ++t) {
    RealMat3 a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = u(rng);
    const RealMat3 s = a.transposed() * a;
    const auto ev = symmetric_eigenvalues(s);
    EXPECT_GE(ev[0], ev[1]);
    EXPECT_GE(ev[1], ev[2]);
    EXPECT_NEAR(ev[0] + ev[1] + ev[2], s.trace(), 1e-9 * (1 + s.trace()));
    EXPECT_NEAR(ev[0] * ev[1] * ev[2], s.determinant(), 1e-7 * (1 + std::abs(ev[0] * ev[0] * ev[0])));
  }
}

TEST(Property, SpectralNormIsSubmultiplicative) {
  std::mt19937 rng(13);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::size_t> a, b;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i) a.push_back(rng() & 1);
    for (int i = 0; i < 1 + static_cast<int>(rng() % 8); ++i) b.push_back(rng() & 1);
    const auto fam = ma_mb_family();
    const auto wa = make_word(fam, a), wb = make_word(fam, b);
    EXPECT_LE(spectral_norm(wa.product * wb.product), spectral_norm(wa.product) * spectral_norm(wb.product) * (1 + 1e-12));
    EXPECT_LE(spectral_radius(wa.product), spectral_norm(wa.product) * (1 + 1e-12));
  }
}

TEST(Property, HullOfSymmetricCloudIsBalanced) {
  std::mt19937 rng(17);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    std::vector<RealVec3> pts;
    for (int i = 0; i < 12; ++i) {
      const RealVec3 p{{g(rng), g(rng), g(rng)}};
      pts.push_back(p);
      pts.push_back(-p);
    }
    const auto h = convex_hull_3d(pts);
    EXPECT_TRUE(h.balanced(1e-12));
    for (const auto& p : pts) EXPECT_TRUE(h.contains(p, 1e-10));
  }
}

TEST(Property, PolytopeBodyIsInvariantUnderWords) {
  const auto r = invariant_polytope();
  ASSERT_TRUE(r.success);
  const auto fam = ma_mb_family();
  std::mt19937 rng(23);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::size_t> letters;
    const int len = 1 + static_cast<int>(rng() % 10);
    for (int i = 0; i < len; ++i) letters.push_back(rng() & 1);
    const auto w = make_word(fam, letters);
    const RealMat3 scaled = w.product.cast<double>() * (1.0 / std::pow(r.scale, len));
    for (const auto& v : r.polytope.vertices) EXPECT_TRUE(r.polytope.contains(scaled * v, 1e-8));
  }
}
