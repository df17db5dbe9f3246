#include "rsac/autocorr.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>

namespace rsac {

const char* to_string(CorrKind kind) noexcept {
  return kind == CorrKind::aperiodic ? "aperiodic" : "periodic";
}

AutocorrTable::AutocorrTable(int order, CorrKind kind, std::vector<std::int32_t> values)
    : order_(order), kind_(kind), values_(std::move(values)) {
  const std::size_t n = std::size_t{1} << order_;
  const std::size_t expected = kind_ == CorrKind::aperiodic ? n + 1 : n;
  if (values_.size() != expected) throw Error("autocorrelation table has wrong length");
}

std::int64_t aperiodic_naive(std::span<const std::int8_t> s, std::int64_t k) noexcept {
  const auto n = static_cast<std::int64_t>(s.size());
  k = std::llabs(k);
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i + k < n; ++i) acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(i + k)];
  return acc;
}

std::int64_t periodic_naive(std::span<const std::int8_t> s, std::int64_t k) noexcept {
  const auto n = static_cast<std::int64_t>(s.size());
  if (n == 0) return 0;
  k %= n;
  if (k < 0) k += n;
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t j = i + k;
    if (j >= n) j -= n;
    acc += s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
  }
  return acc;
}

AutocorrTable aperiodic_table_naive(const BinarySeq& seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  std::vector<std::int32_t> values(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k)
    values[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(aperiodic_naive(seq.terms(), k));
  return AutocorrTable(seq.order(), CorrKind::aperiodic, std::move(values));
}

AutocorrTable periodic_table_naive(const BinarySeq& seq) {
  const auto n = static_cast<std::int64_t>(seq.size());
  std::vector<std::int32_t> values(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k)
    values[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(periodic_naive(seq.terms(), k));
  return AutocorrTable(seq.order(), CorrKind::periodic, std::move(values));
}

namespace {

// Fills order m (>= 3) from orders m-1 and m-2. Even shifts are zero; odd
// shifts never sit on a quarter boundary, so each falls strictly inside
// one of the four quarters of [0, 2^m].
AutocorrTable next_level(const AutocorrTable& prev, const AutocorrTable& prev2) {
  const int m = prev.order() + 1;
  const std::int64_t n = std::int64_t{1} << m;
  const std::int64_t half = n / 2;
  const std::int64_t quarter = n / 4;
  std::vector<std::int32_t> values(static_cast<std::size_t>(n + 1), 0);
  values[0] = static_cast<std::int32_t>(n);
  const auto c1 = prev.values();
  const auto c2 = prev2.values();
  for (std::int64_t k = 1; k < n; k += 2) {
    std::int64_t v;
    if (k < quarter) {
      v = c1[static_cast<std::size_t>(half - k)];
    } else if (k < half) {
      v = c1[static_cast<std::size_t>(half - k)] + 2 * c2[static_cast<std::size_t>(half - k)];
    } else if (k < 3 * quarter) {
      v = -c1[static_cast<std::size_t>(k - half)] + 2 * c2[static_cast<std::size_t>(k - half)];
    } else {
      v = -c1[static_cast<std::size_t>(k - half)];
    }
    values[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(v);
  }
  return AutocorrTable(m, CorrKind::aperiodic, std::move(values));
}

}  // namespace

void for_each_aperiodic_table(int m_max, const std::function<void(const AutocorrTable&)>& visit,
                              int cap) {
  check_order(m_max, cap);
  std::optional<AutocorrTable> older;
  std::optional<AutocorrTable> newer;
  for (int m = 0; m <= m_max; ++m) {
    AutocorrTable current = m <= 2 ? aperiodic_table_naive(rs_sequence(m))
                                   : next_level(*newer, *older);
    visit(current);
    older = std::move(newer);
    newer = std::move(current);
  }
}

AutocorrTable aperiodic_table_fast(int m, int cap) {
  check_order(m, cap);
  std::optional<AutocorrTable> result;
  for_each_aperiodic_table(
      m, [&](const AutocorrTable& t) {
        if (t.order() == m) result = t;
      },
      cap);
  return std::move(*result);
}

AutocorrTable periodic_table_from(const AutocorrTable& c) {
  if (c.kind() != CorrKind::aperiodic) throw Error("periodic_table_from needs an aperiodic table");
  const int m = c.order() + 2;
  const std::int64_t n = std::int64_t{1} << m;
  const std::int64_t half = n / 2;
  const std::int64_t quarter = n / 4;
  std::vector<std::int32_t> values(static_cast<std::size_t>(n), 0);
  values[0] = static_cast<std::int32_t>(n);
  for (std::int64_t k = 1; k < n; k += 2) {
    if (k > quarter && k < 3 * quarter)
      values[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(4 * c[std::llabs(half - k)]);
  }
  return AutocorrTable(m, CorrKind::periodic, std::move(values));
}

AutocorrTable periodic_table(int m, int cap) {
  check_order(m, cap);
  if (m <= 2) return periodic_table_naive(rs_sequence(m));
  return periodic_table_from(aperiodic_table_fast(m - 2, cap));
}

EvenZeroReport verify_even_zero(int m_max, int cap) {
  check_order(m_max, cap);
  EvenZeroReport report;
  report.m_max = m_max;
  std::optional<AutocorrTable> two_down;
  std::optional<AutocorrTable> one_down;
  auto scan = [&](const AutocorrTable& t) {
    for (std::int64_t k = 2; k < t.length(); k += 2) {
      ++report.shifts_checked;
      if (t[k] != 0) report.violations.push_back({t.order(), t.kind(), k, t[k]});
    }
  };
  for_each_aperiodic_table(
      m_max,
      [&](const AutocorrTable& t) {
        scan(t);
        const int m = t.order();
        if (m <= 2)
          scan(periodic_table_naive(rs_sequence(m)));
        else
          scan(periodic_table_from(*two_down));
        two_down = std::move(one_down);
        one_down = t;
      },
      cap);
  return report;
}

void write_csv(std::ostream& os, const AutocorrTable& table) {
  os << "k,value\n";
  for (std::size_t k = 0; k < table.size(); ++k) os << k << ',' << table.values()[k] << '\n';
}

std::string csv_filename(const AutocorrTable& table) {
  return std::string(table.kind() == CorrKind::aperiodic ? "C_" : "P_") +
         std::to_string(table.order()) + ".csv";
}

}  // namespace rsac
