#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rsac/autocorr.hpp"
#include "rsac/error.hpp"
#include "rsac/matrec.hpp"

using namespace rsac;

namespace {

IntMat3 from_oracle(const oracle::M3& m) {
  IntMat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m[i][j];
  return out;
}

}  // namespace

TEST(Matrices, Products) {
  EXPECT_EQ(kMA, from_oracle(oracle::kMA));
  EXPECT_EQ(kMB, from_oracle(oracle::kMB));
  EXPECT_EQ(kAM, from_oracle(oracle::kAM));
  EXPECT_EQ(kA * kA, IntMat3::identity());
  EXPECT_EQ(kS * kS, IntMat3::identity());
  for (int e = 0; e <= 20; ++e) EXPECT_EQ(power(kMA, e), from_oracle(oracle::pow(oracle::kMA, e))) << e;
}

TEST(Matrices, OverflowIsDetected) {
  IntMat3 big = IntMat3::identity() * (std::int64_t{1} << 40);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(MatrixRecurrence, IntervalLabels) {
  EXPECT_EQ(interval_label(1, 3), Interval::s1);
  EXPECT_EQ(interval_label(3, 3), Interval::s2);
  EXPECT_EQ(interval_label(5, 3), Interval::s3);
  EXPECT_EQ(interval_label(7, 3), Interval::s4);
  EXPECT_THROW(interval_label(4, 3), InvalidShift);
  EXPECT_THROW(interval_label(9, 3), InvalidShift);
  EXPECT_THROW(interval_label(1, 2), InvalidShift);
}

TEST(MatrixRecurrence, FactorMap) {
  EXPECT_EQ(t_factor(Interval::s1), kM * kB);
  EXPECT_EQ(t_factor(Interval::s2), kM);
  EXPECT_EQ(t_factor(Interval::s3), kA * kM);
  EXPECT_EQ(t_factor(Interval::s4), kA * kM * kB);
}

TEST(MatrixRecurrence, ShiftChainFolds) {
  const auto chain = shift_chain(11, 4);
  ASSERT_EQ(chain.links.size(), 2u);
  EXPECT_EQ(chain.links[0].shift, 11);
  EXPECT_EQ(chain.links[0].label, Interval::s3);
  EXPECT_EQ(chain.links[1].shift, 5);
  EXPECT_EQ(chain.links[1].label, Interval::s3);
  EXPECT_EQ(chain.base_shift(), 3);
}

TEST(MatrixRecurrence, ProductEqualsDirectExhaustive) {
  for (int m = 3; m <= 12; ++m) {
    const auto tm = aperiodic_table_fast(m);
    const auto tm1 = aperiodic_table_fast(m - 1);
    for (std::int64_t k = 1; k < tm.length(); k += 2) {
      const IntVec3 d = v_direct(k, tm, tm1);
      ASSERT_EQ(v_product(m, k), d) << m << ' ' << k;
      const auto nf = normal_form(m, k);
      ASSERT_EQ(nf.letters.size(), static_cast<std::size_t>(m - 2));
      ASSERT_EQ(nf.reconstruct(), d) << m << ' ' << k;
    }
  }
}

TEST(MatrixRecurrence, DirectAgainstOracleSequence) {
  const int m = 9;
  const auto seq = oracle::rs_doubling(m);
  const auto prev = oracle::rs_doubling(m - 1);
  for (std::int64_t k = 1; k < (1 << m); k += 2) {
    const auto chain = shift_chain(k, m);
    const std::int64_t k1 = chain.links.size() > 1 ? chain.links[1].shift : chain.base_shift();
    const IntVec3 expect{{oracle::aperiodic(seq, k), oracle::aperiodic(seq, (1 << m) - k), oracle::aperiodic(prev, k1)}};
    EXPECT_EQ(v_direct(m, k), expect) << k;
  }
}

TEST(MatrixRecurrence, InitialVector) {
  EXPECT_EQ(initial_vector(Interval::s1), kSeedVector);
  EXPECT_EQ(initial_vector(Interval::s4), kSeedVector);
  EXPECT_EQ(initial_vector(Interval::s2), kA * kSeedVector);
  EXPECT_EQ(initial_vector(Interval::s3), kA * kSeedVector);
}

TEST(MatrixRecurrence, RegroupingRules) {
  EXPECT_EQ(regroup(false, true), Letter::MA);
  EXPECT_EQ(regroup(true, false), Letter::MB);
  EXPECT_THROW(regroup(true, true), NormalFormError);
  EXPECT_THROW(regroup(false, false), NormalFormError);
}

TEST(MatrixRecurrence, AdjacentFactorPairs) {
  // Observed pairs along every chain are a subset of the allowed ones.
  for (int m = 4; m <= 12; ++m)
    for (std::int64_t k = 1; k < (std::int64_t{1} << m); k += 2) {
      const auto chain = shift_chain(k, m);
      for (std::size_t i = 0; i + 1 < chain.links.size(); ++i)
        ASSERT_TRUE(adjacent_pair_allowed(chain.links[i].label, chain.links[i + 1].label)) << m << ' ' << k;
    }
  int allowed = 0;
  for (auto u : {Interval::s1, Interval::s2, Interval::s3, Interval::s4})
    for (auto l : {Interval::s1, Interval::s2, Interval::s3, Interval::s4}) allowed += adjacent_pair_allowed(u, l);
  EXPECT_EQ(allowed, 8);
}

TEST(MatrixRecurrence, NearestThird) {
  EXPECT_EQ(nearest_third(3), 5);
  EXPECT_EQ(nearest_third(4), 11);
  EXPECT_EQ(nearest_third(5), 21);
  EXPECT_EQ(nearest_third(15), 21845);
  for (int m = 1; m <= 60; ++m) {
    const std::int64_t l = nearest_third(m);
    EXPECT_EQ(l % 2, 1);
    const std::int64_t twice = std::int64_t{1} << (m + 1);
    EXPECT_LE(std::abs(3 * l - twice), 1) << m;
  }
  EXPECT_TRUE(lemma6_check(60).pass());
}
