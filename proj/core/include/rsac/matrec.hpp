#pragma once

// Matrix recurrence for odd-shift autocorrelations.
//
// For odd k and m >= 3 the vector
//   v_m = (C_m(k), C_m(2^m - k), C_{m-1}(k_{m-1}))
// satisfies v_m = T v_{m-1}, where T depends only on which quarter of
// (0, 2^m) contains k. Unrolling gives v_m as a product of the factors
// MB | M | AM | AMB applied to (1,-1,1) or A(1,-1,1), and regrouping
// gives A^delta times a word over {MA, MB}.

#include <cstdint>
#include <string>
#include <vector>

#include "rsac/autocorr.hpp"
#include "rsac/matrix.hpp"

namespace rsac {

enum class Interval { s1 = 1, s2 = 2, s3 = 3, s4 = 4 };

const char* to_string(Interval label) noexcept;

/// The quarter n with (n-1) 2^{m-2} < k < n 2^{m-2}. Requires m >= 3 and odd
/// 1 <= k <= 2^m - 1; throws InvalidShift otherwise.
Interval interval_label(std::int64_t k, int m);

struct ChainLink {
  int level;
  std::int64_t shift;
  Interval label;
  friend bool operator==(const ChainLink&, const ChainLink&) = default;
};

struct ShiftChain {
  int order = 0;
  std::vector<ChainLink> links;  // levels m, m-1, ..., 3

  /// The level-2 shift that selects the initial vector.
  std::int64_t base_shift() const;
};

/// k_{i-1} = k_i when k_i <= 2^{i-1}, else 2^i - k_i, from level m down to 3.
ShiftChain shift_chain(std::int64_t k, int m);

/// The one-step factor: S1 -> MB, S2 -> M, S3 -> AM, S4 -> AMB.
IntMat3 t_factor(Interval label);

/// Reads (C_m(k), C_m(2^m - k), C_{m-1}(k_{m-1})) from aperiodic tables of
/// orders m and m-1.
IntVec3 v_direct(std::int64_t k, const AutocorrTable& order_m, const AutocorrTable& order_m1);
IntVec3 v_direct(int m, std::int64_t k);

/// v_2: (1,-1,1) when k_3 lies in S1 or S4, A(1,-1,1) otherwise.
IntVec3 initial_vector(Interval level3_label);

/// Product of t_factor along the shift chain applied to initial_vector.
IntVec3 v_product(int m, std::int64_t k);

enum class Letter { MA, MB };

const char* to_string(Letter letter) noexcept;
IntMat3 letter_matrix(Letter letter);

struct NormalForm {
  int order = 0;
  std::int64_t shift = 0;
  int delta = 0;                // power of the leading A
  std::vector<Letter> letters;  // leftmost factor first; m-2 letters

  /// A^delta * letters[0] * ... * letters[m-3] * (1,-1,1).
  IntVec3 reconstruct() const;
};

/// Regroups T_m ... T_3 A^c = A^{a_m} (M B^{b_m} A^{a_{m-1}}) ... (M B^{b_3} A^c).
/// Throws NormalFormError if a group is neither MA nor MB.
NormalForm normal_form(int m, std::int64_t k);

/// The letter a regrouped pair B^b A^a collapses to; throws NormalFormError
/// unless exactly one of b, a is set.
Letter regroup(bool b_power, bool a_power);

/// Nearest integer to 2^{m+1}/3 (always odd).
std::int64_t nearest_third(int m);

struct Lemma6Row {
  int m;
  std::int64_t lhs;
  std::int64_t rhs;
  bool pass;
};

struct Lemma6Report {
  std::vector<Lemma6Row> rows;
  bool pass() const noexcept;
};

/// Odd m:  floor(2^{m+1}/3) = 2^{m+1} - ceil(2^{m+2}/3).
/// Even m: ceil(2^{m+1}/3)  = 2^{m+1} - floor(2^{m+2}/3).
/// Exact integer arithmetic, 1 <= m <= m_max <= 60.
Lemma6Report lemma6_check(int m_max);

/// Seed-independent consequence of the chain: the pair (T_i, T_{i-1}) always
/// lies in {MBMB, MBM, MAM, MAMB, AMAM, AMAMB, AMBMB, AMBM}.
bool adjacent_pair_allowed(Interval upper, Interval lower) noexcept;

}  // namespace rsac
