#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rsac/error.hpp"
#include "rsac/sequence.hpp"

using namespace rsac;

namespace {

std::vector<int> as_ints(const BinarySeq& s) { return {s.terms().begin(), s.terms().end()}; }

}  // namespace

TEST(Sequence, ShortSequences) {
  EXPECT_EQ(as_ints(rs_sequence(1)), (std::vector<int>{1, 1}));
  EXPECT_EQ(as_ints(rs_sequence(2)), (std::vector<int>{1, 1, 1, -1}));
  EXPECT_EQ(as_ints(rs_sequence(3)), (std::vector<int>{1, 1, 1, -1, 1, 1, -1, 1}));
  EXPECT_EQ(as_ints(rs_sequence(0)), (std::vector<int>{1}));
}

TEST(Sequence, TermCountsOverlappingPairs) {
  EXPECT_EQ(rs_term(0), 1);
  EXPECT_EQ(rs_term(3), -1);
  EXPECT_EQ(rs_term(7), 1);  // 111 holds two pairs
  EXPECT_EQ(rs_term(6), -1);
  for (std::uint64_t i = 0; i < 5000; ++i) EXPECT_EQ(rs_term(i), oracle::rs_term(i)) << i;
}

TEST(Sequence, MatchesDoublingConstruction) {
  for (int m = 0; m <= 14; ++m) EXPECT_EQ(as_ints(rs_sequence(m)), oracle::rs_doubling(m)) << m;
}

TEST(Sequence, PrefixProperty) {
  for (int m = 0; m < 14; ++m) {
    const auto a = as_ints(rs_sequence(m));
    const auto b = as_ints(rs_sequence(m + 1));
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin())) << m;
  }
}

TEST(Sequence, GeneralizedRecoversRudinShapiro) {
  const std::vector<std::uint8_t> f{0, 0, 1};
  EXPECT_EQ(generalized_sequence(3, f), rs_sequence(3));
  for (int m = 0; m <= 14; ++m) EXPECT_EQ(generalized_sequence(m, rudin_shapiro_pattern(m)), rs_sequence(m)) << m;
}

TEST(Sequence, GeneralizedAllZeroPattern) {
  // Unrolled by hand from the recurrence with f = 0.
  const std::vector<std::uint8_t> f{0, 0, 0};
  EXPECT_EQ(as_ints(generalized_sequence(3, f)), (std::vector<int>{1, 1, 1, -1, -1, -1, 1, -1}));
  const std::vector<std::uint8_t> none;
  EXPECT_EQ(as_ints(generalized_sequence(0, none)), (std::vector<int>{1}));
}

TEST(Sequence, PatternParsing) {
  EXPECT_EQ(parse_pattern("001"), (std::vector<std::uint8_t>{0, 0, 1}));
  EXPECT_THROW(parse_pattern("012"), Error);
  const std::vector<std::uint8_t> short_f{0};
  EXPECT_THROW(generalized_sequence(3, short_f), Error);
}

TEST(Sequence, OrderCap) {
  EXPECT_THROW(rs_sequence(31), OrderTooLarge);
  EXPECT_THROW(rs_sequence(-1), OrderTooLarge);
  EXPECT_THROW(rs_sequence(12, 10), OrderTooLarge);
}

TEST(Sequence, ConstructorValidation) {
  EXPECT_THROW(BinarySeq(2, {1, 1, 1}), Error);
  EXPECT_THROW(BinarySeq(1, {1, 0}), Error);
  EXPECT_THROW(BinarySeq(1, {-1, 1}), Error);
}

TEST(Sequence, Formats) {
  const auto s = rs_sequence(3);
  EXPECT_EQ(format_sequence(s, SeqFormat::signs), "+ + + - + + - +");
  EXPECT_EQ(format_sequence(s, SeqFormat::compact), "+++-++-+");
  EXPECT_EQ(format_sequence(rs_sequence(2), SeqFormat::ints), "1 1 1 -1");
}

TEST(ShapiroPolynomial, KnownValues) {
  EXPECT_NEAR(std::abs(shapiro_eval(1, 0.0) - std::complex<double>(2, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(shapiro_eval(2, 0.0) - std::complex<double>(2, 0)), 0, 1e-12);
  // Alternating sum of + + + - + + - +: 1 - 1 + 1 + 1 + 1 - 1 - 1 - 1.
  EXPECT_NEAR(std::abs(shapiro_eval(3, std::numbers::pi)), 0, 1e-12);
}

TEST(ShapiroPolynomial, TrivialBoundAndDirectSum) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> theta(0, 2 * std::numbers::pi);
  for (int m = 0; m <= 14; ++m) {
    const auto s = rs_sequence(m);
    for (int t = 0; t < 100; ++t) {
      const double th = theta(rng);
      const auto z = shapiro_eval(s, th);
      EXPECT_LE(std::abs(z), std::ldexp(1.0, m) * (1 + 1e-12));
      if (m <= 8) {
        std::complex<double> direct = 0;
        for (std::size_t j = 0; j < s.size(); ++j) direct += double(s[j]) * std::polar(1.0, th * double(j));
        EXPECT_NEAR(std::abs(z - direct), 0, 1e-9);
      }
    }
  }
}
