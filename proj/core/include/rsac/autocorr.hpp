#pragma once

// Aperiodic and periodic autocorrelations of Rudin-Shapiro sequences.
//
// Two routes are provided: a direct O(n^2) summation usable on any +/-1
// array, and structural recurrences specific to Rudin-Shapiro sequences
// that fill the table for order m from the tables for m-1 and m-2 in O(2^m).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rsac/error.hpp"
#include "rsac/sequence.hpp"

namespace rsac {

enum class CorrKind { aperiodic, periodic };

const char* to_string(CorrKind kind) noexcept;

/// All autocorrelation values of one order. Aperiodic tables hold shifts
/// 0..2^m, periodic tables hold 0..2^m-1. Values fit in 32 bits because
/// |C| <= 2^m and m <= 30.
class AutocorrTable {
 public:
  AutocorrTable(int order, CorrKind kind, std::vector<std::int32_t> values);

  int order() const noexcept { return order_; }
  CorrKind kind() const noexcept { return kind_; }
  std::int64_t length() const noexcept { return std::int64_t{1} << order_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](std::int64_t k) const { return values_[static_cast<std::size_t>(k)]; }
  std::span<const std::int32_t> values() const noexcept { return values_; }

  friend bool operator==(const AutocorrTable&, const AutocorrTable&) = default;

 private:
  int order_;
  CorrKind kind_;
  std::vector<std::int32_t> values_;
};

/// sum_i s_i s_{i+k}, terms outside the array read as zero. Negative shifts
/// use C(-k) = C(k).
std::int64_t aperiodic_naive(std::span<const std::int8_t> s, std::int64_t k) noexcept;

/// sum_i s_i s_{(i+k) mod n}; k is reduced modulo n.
std::int64_t periodic_naive(std::span<const std::int8_t> s, std::int64_t k) noexcept;

AutocorrTable aperiodic_table_naive(const BinarySeq& seq);
AutocorrTable periodic_table_naive(const BinarySeq& seq);

/// Recurrence-built aperiodic table for the m-th Rudin-Shapiro sequence.
AutocorrTable aperiodic_table_fast(int m, int cap = kMaxOrder);

/// Calls `visit` with the aperiodic table of every order 0..m_max, in order,
/// building each level once. Only two earlier levels are kept alive.
void for_each_aperiodic_table(int m_max, const std::function<void(const AutocorrTable&)>& visit,
                              int cap = kMaxOrder);

/// Periodic table from the aperiodic table two orders down (m >= 3);
/// orders below 3 are summed directly.
AutocorrTable periodic_table(int m, int cap = kMaxOrder);
AutocorrTable periodic_table_from(const AutocorrTable& aperiodic_m_minus_2);

struct TableViolation {
  int order;
  CorrKind kind;
  std::int64_t shift;
  std::int64_t value;
};

struct EvenZeroReport {
  int m_max = 0;
  std::int64_t shifts_checked = 0;
  std::vector<TableViolation> violations;
  bool pass() const noexcept { return violations.empty(); }
};

/// Exhaustively confirms both tables vanish at even shifts 2 <= k < 2^m for
/// every m <= m_max.
EvenZeroReport verify_even_zero(int m_max, int cap = kMaxOrder);

/// CSV with header `k,value`, one row per shift, '\n' line endings.
void write_csv(std::ostream& os, const AutocorrTable& table);

/// `C_<m>.csv` or `P_<m>.csv`.
std::string csv_filename(const AutocorrTable& table);

}  // namespace rsac
