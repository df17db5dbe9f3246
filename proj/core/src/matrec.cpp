#include "rsac/matrec.hpp"

namespace rsac {

const char* to_string(Interval label) noexcept {
  switch (label) {
    case Interval::s1: return "S1";
    case Interval::s2: return "S2";
    case Interval::s3: return "S3";
    case Interval::s4: return "S4";
  }
  return "?";
}

const char* to_string(Letter letter) noexcept { return letter == Letter::MA ? "MA" : "MB"; }

IntMat3 letter_matrix(Letter letter) { return letter == Letter::MA ? kMA : kMB; }

Interval interval_label(std::int64_t k, int m) {
  if (m < 3 || m > 62) throw InvalidShift("interval_label needs 3 <= m <= 62");
  const std::int64_t n = std::int64_t{1} << m;
  if (k < 1 || k >= n) throw InvalidShift("shift " + std::to_string(k) + " outside (0, 2^m)");
  if (k % 2 == 0) throw InvalidShift("shift " + std::to_string(k) + " is even");
  return static_cast<Interval>(k / (n >> 2) + 1);
}

ShiftChain shift_chain(std::int64_t k, int m) {
  ShiftChain chain;
  chain.order = m;
  for (int level = m; level >= 3; --level) {
    const Interval label = interval_label(k, level);
    chain.links.push_back({level, k, label});
    const std::int64_t half = std::int64_t{1} << (level - 1);
    if (k > half) k = 2 * half - k;
  }
  return chain;
}

std::int64_t ShiftChain::base_shift() const {
  const ChainLink& last = links.back();
  return last.shift > 4 ? 8 - last.shift : last.shift;
}

IntMat3 t_factor(Interval label) {
  switch (label) {
    case Interval::s1: return kM * kB;
    case Interval::s2: return kM;
    case Interval::s3: return kA * kM;
    case Interval::s4: return kA * kM * kB;
  }
  throw InvalidShift("bad interval label");
}

IntVec3 v_direct(std::int64_t k, const AutocorrTable& cm, const AutocorrTable& cm1) {
  const int m = cm.order();
  if (cm1.order() != m - 1 || cm.kind() != CorrKind::aperiodic || cm1.kind() != CorrKind::aperiodic)
    throw Error("v_direct needs aperiodic tables of orders m and m-1");
  interval_label(k, m);
  const std::int64_t n = cm.length();
  const std::int64_t k_down = k <= n / 2 ? k : n - k;
  return {{cm[k], cm[n - k], cm1[k_down]}};
}

IntVec3 v_direct(int m, std::int64_t k) {
  check_order(m, kMaxOrder, 3);
  return v_direct(k, aperiodic_table_fast(m), aperiodic_table_fast(m - 1));
}

IntVec3 initial_vector(Interval level3_label) {
  if (level3_label == Interval::s2 || level3_label == Interval::s3) return kA * kSeedVector;
  return kSeedVector;
}

IntVec3 v_product(int m, std::int64_t k) {
  const ShiftChain chain = shift_chain(k, m);
  IntVec3 v = initial_vector(chain.links.back().label);
  for (auto it = chain.links.rbegin(); it != chain.links.rend(); ++it) v = t_factor(it->label) * v;
  return v;
}

Letter regroup(bool b_power, bool a_power) {
  if (b_power && !a_power) return Letter::MB;
  if (a_power && !b_power) return Letter::MA;
  throw NormalFormError(b_power ? "regrouped factor is MBA" : "regrouped factor is bare M");
}

NormalForm normal_form(int m, std::int64_t k) {
  const ShiftChain chain = shift_chain(k, m);
  auto has_a = [](Interval l) { return l == Interval::s3 || l == Interval::s4; };
  auto has_b = [](Interval l) { return l == Interval::s1 || l == Interval::s4; };

  NormalForm nf;
  nf.order = m;
  nf.shift = k;
  nf.delta = has_a(chain.links.front().label) ? 1 : 0;
  // Group i takes the B of level i and the A of level i-1 (or of the seed).
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const bool b = has_b(chain.links[i].label);
    const bool a = i + 1 < chain.links.size()
                       ? has_a(chain.links[i + 1].label)
                       : initial_vector(chain.links[i].label) != kSeedVector;
    nf.letters.push_back(regroup(b, a));
  }
  return nf;
}

IntVec3 NormalForm::reconstruct() const {
  IntVec3 v = kSeedVector;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) v = letter_matrix(*it) * v;
  if (delta % 2) v = kA * v;
  return v;
}

std::int64_t nearest_third(int m) {
  if (m < 1 || m > 60) throw InvalidShift("nearest_third needs 1 <= m <= 60");
  const std::int64_t x = std::int64_t{1} << (m + 1);
  return x % 3 == 2 ? x / 3 + 1 : x / 3;
}

bool Lemma6Report::pass() const noexcept {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

Lemma6Report lemma6_check(int m_max) {
  if (m_max > 60) throw InvalidShift("lemma6_check supports m_max <= 60");
  auto floor_div3 = [](std::int64_t x) { return x / 3; };
  auto ceil_div3 = [](std::int64_t x) { return (x + 2) / 3; };
  Lemma6Report report;
  for (int m = 1; m <= m_max; ++m) {
    const std::int64_t a = std::int64_t{1} << (m + 1);
    const std::int64_t b = std::int64_t{1} << (m + 2);
    Lemma6Row row{m, 0, 0, false};
    if (m % 2) {
      row.lhs = floor_div3(a);
      row.rhs = a - ceil_div3(b);
    } else {
      row.lhs = ceil_div3(a);
      row.rhs = a - floor_div3(b);
    }
    row.pass = row.lhs == row.rhs;
    report.rows.push_back(row);
  }
  return report;
}

bool adjacent_pair_allowed(Interval upper, Interval lower) noexcept {
  // The eight allowed pairs are exactly those where the upper factor carries
  // a trailing B or the lower one a leading A, but not both.
  const bool b = upper == Interval::s1 || upper == Interval::s4;
  const bool a = lower == Interval::s3 || lower == Interval::s4;
  return b != a;
}

}  // namespace rsac
