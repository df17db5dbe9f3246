#pragma once

// Merit factors, the sum-of-squares asymptotic, and the maximal-shift
// search behind the k*_m table.

#include <cstdint>
#include <utility>
#include <vector>

#include "rsac/autocorr.hpp"
#include "rsac/error.hpp"

namespace rsac {

/// num / den with both held exactly.
struct ExactRatio {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
};

/// sum_{k=1}^{2^m - 1} C_m(k)^2, exactly.
std::int64_t sidelobe_energy(const AutocorrTable& aperiodic);

/// 4^m / (2 sum C_m(k)^2). Requires m >= 1.
ExactRatio merit_factor_exact(int m, int cap = kMaxOrder);
double merit_factor(int m, int cap = kMaxOrder);
double merit_factor(const AutocorrTable& aperiodic);

/// n^2 / (||q_m||_4^4 - n^2) with the L4 norm from the trapezoid rule on N
/// equispaced points. Throws InsufficientQuadrature when N < 2^{m+2}.
double merit_factor_l4(int m, std::int64_t quadrature_points, int cap = kMaxOrder);

/// sum_{k=1}^{2^m} C_m(k)^2 / (4^m / 6), with 6 sum / 4^m as the exact form.
ExactRatio sum_squares_ratio_exact(int m, int cap = kMaxOrder);
double sum_squares_ratio(int m, int cap = kMaxOrder);

/// True when sum_squares_ratio * merit_factor is 3 as rationals.
bool merit_identity_exact(const ExactRatio& sum_squares, const ExactRatio& merit);

enum class MaxMode { absolute, signed_value };

struct MaxShiftRecord {
  int m = 0;
  std::int64_t k_star = 0;
  std::int64_t value = 0;
  bool unique = true;
  std::int64_t ell = 0;
  std::int64_t abs_gap = 0;
  double ratio = 0;  // k_star / ell
};

/// Scans k = 1..2^m - 1; ties go to the smallest k and clear `unique`.
MaxShiftRecord max_shift(const AutocorrTable& aperiodic, MaxMode mode = MaxMode::absolute);
MaxShiftRecord max_shift(int m, MaxMode mode = MaxMode::absolute, int cap = kMaxOrder);

/// Records for m = 3..m_max.
std::vector<MaxShiftRecord> conjecture_table(int m_max, MaxMode mode = MaxMode::absolute,
                                             int cap = kMaxOrder);

/// (m, 3 k*_m / 2^{m+1}) for m = 3..m_max.
std::vector<std::pair<int, double>> ratio_sequence(int m_max, int cap = kMaxOrder);

/// Orders m in [3, m_max] where k*_m equals nearest_third(m).
std::vector<int> exact_hits(const std::vector<MaxShiftRecord>& table);

}  // namespace rsac
