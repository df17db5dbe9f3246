#include "rsac/stats.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "rsac/matrec.hpp"
#include "rsac/sequence.hpp"

namespace rsac {

__extension__ using Int128 = __int128;

std::int64_t sidelobe_energy(const AutocorrTable& aperiodic) {
  if (aperiodic.kind() != CorrKind::aperiodic) throw std::invalid_argument("sidelobe_energy: needs an aperiodic table");
  std::int64_t sum = 0;
  for (std::int64_t k = 1; k < aperiodic.length(); ++k) sum += aperiodic[k] * aperiodic[k];
  return sum;
}

namespace {

ExactRatio merit_from(const AutocorrTable& t) {
  const std::int64_t n = t.length();
  return {n * n, 2 * sidelobe_energy(t)};
}

}  // namespace

ExactRatio merit_factor_exact(int m, int cap) {
  check_order(m, cap, 1);
  return merit_from(aperiodic_table_fast(m, cap));
}

double merit_factor(int m, int cap) { return merit_factor_exact(m, cap).value(); }

double merit_factor(const AutocorrTable& aperiodic) {
  check_order(aperiodic.order(), kMaxOrder, 1);
  return merit_from(aperiodic).value();
}

double merit_factor_l4(int m, std::int64_t quadrature_points, int cap) {
  check_order(m, cap, 1);
  const std::int64_t needed = std::int64_t{1} << (m + 2);
  if (quadrature_points < needed)
    throw InsufficientQuadrature("merit_factor_l4: need at least " + std::to_string(needed) +
                                 " quadrature points, got " + std::to_string(quadrature_points));
  const BinarySeq seq = rs_sequence(m, cap);
  // Trapezoid rule on a periodic integrand is the plain average.
  double acc = 0;
  for (std::int64_t j = 0; j < quadrature_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(quadrature_points);
    const double mod2 = std::norm(shapiro_eval(seq, theta));
    acc += mod2 * mod2;
  }
  const double l4 = acc / static_cast<double>(quadrature_points);
  const double n2 = std::ldexp(1.0, 2 * m);
  return n2 / (l4 - n2);
}

ExactRatio sum_squares_ratio_exact(int m, int cap) {
  check_order(m, cap, 1);
  const auto t = aperiodic_table_fast(m, cap);
  // The k = 2^m term is C_m(2^m) = 0, so the energy sum already covers it.
  const std::int64_t n = t.length();
  return {6 * sidelobe_energy(t), n * n};
}

double sum_squares_ratio(int m, int cap) { return sum_squares_ratio_exact(m, cap).value(); }

bool merit_identity_exact(const ExactRatio& sum_squares, const ExactRatio& merit) {
  const Int128 lhs = static_cast<Int128>(sum_squares.num) * merit.num;
  const Int128 rhs = static_cast<Int128>(3) * sum_squares.den * merit.den;
  return lhs == rhs;
}

MaxShiftRecord max_shift(const AutocorrTable& aperiodic, MaxMode mode) {
  if (aperiodic.kind() != CorrKind::aperiodic) throw std::invalid_argument("max_shift: needs an aperiodic table");
  if (aperiodic.order() < 1) throw std::invalid_argument("max_shift: needs m >= 1");
  MaxShiftRecord r;
  r.m = aperiodic.order();
  bool have = false;
  std::int64_t best = 0;
  for (std::int64_t k = 1; k < aperiodic.length(); ++k) {
    const std::int64_t c = aperiodic[k];
    const std::int64_t key = mode == MaxMode::absolute ? std::abs(c) : c;
    if (!have || key > best) {
      have = true;
      best = key;
      r.k_star = k;
      r.value = c;
      r.unique = true;
    } else if (key == best) {
      r.unique = false;
    }
  }
  r.ell = nearest_third(r.m);
  r.abs_gap = std::abs(r.k_star - r.ell);
  r.ratio = static_cast<double>(r.k_star) / static_cast<double>(r.ell);
  return r;
}

MaxShiftRecord max_shift(int m, MaxMode mode, int cap) {
  check_order(m, cap, 1);
  return max_shift(aperiodic_table_fast(m, cap), mode);
}

std::vector<MaxShiftRecord> conjecture_table(int m_max, MaxMode mode, int cap) {
  check_order(m_max, cap, 3);
  std::vector<MaxShiftRecord> out;
  for_each_aperiodic_table(
      m_max,
      [&](const AutocorrTable& t) {
        if (t.order() >= 3) out.push_back(max_shift(t, mode));
      },
      cap);
  return out;
}

std::vector<std::pair<int, double>> ratio_sequence(int m_max, int cap) {
  std::vector<std::pair<int, double>> out;
  for (const auto& r : conjecture_table(m_max, MaxMode::absolute, cap))
    out.emplace_back(r.m, 3.0 * static_cast<double>(r.k_star) / std::ldexp(1.0, r.m + 1));
  return out;
}

std::vector<int> exact_hits(const std::vector<MaxShiftRecord>& table) {
  std::vector<int> out;
  for (const auto& r : table)
    if (r.abs_gap == 0) out.push_back(r.m);
  return out;
}

}  // namespace rsac
