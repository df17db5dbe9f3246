#include "rsac/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <algorithm>

#include "rsac/autocorr.hpp"
#include "rsac/error.hpp"
#include "rsac/jsr.hpp"
#include "rsac/matrec.hpp"
#include "rsac/report.hpp"
#include "rsac/sequence.hpp"
#include "rsac/specbounds.hpp"

namespace rsac {

using nlohmann::json;

namespace {

// Keep reports readable when something goes badly wrong.
constexpr std::size_t kMaxListed = 20;

void note(json& list, json item) {
  if (list.size() < kMaxListed) list.push_back(std::move(item));
}

SuiteResult recurrences(int m_max) {
  check_order(m_max, 14, 3);
  json failures = json::array();
  std::int64_t checked = 0, failed = 0;
  for (int m = 0; m <= m_max; ++m) {
    const auto naive = aperiodic_table_naive(rs_sequence(m));
    if (!(aperiodic_table_fast(m) == naive)) {
      ++failed;
      note(failures, {{"m", m}, {"check", "fast table"}});
    }
    if (m < 3) continue;
    const auto prev = aperiodic_table_naive(rs_sequence(m - 1));
    const auto prev2 = aperiodic_table_naive(rs_sequence(m - 2));
    const std::int64_t h = std::int64_t{1} << (m - 1);
    for (std::int64_t k = 1; k < naive.length(); k += 2) {
      std::int64_t expect = 0;
      switch (interval_label(k, m)) {
        case Interval::s1: expect = prev[h - k]; break;
        case Interval::s2: expect = prev[h - k] + 2 * prev2[h - k]; break;
        case Interval::s3: expect = -prev[k - h] + 2 * prev2[k - h]; break;
        case Interval::s4: expect = -prev[k - h]; break;
      }
      ++checked;
      if (naive[k] != expect) {
        ++failed;
        note(failures, {{"m", m}, {"k", k}, {"value", naive[k]}, {"expected", expect}});
      }
    }
  }
  return {"recurrences", failed == 0,
          {{"suite", "recurrences"}, {"m_max", m_max}, {"shifts_checked", checked},
           {"failures", failed}, {"examples", failures}}};
}

SuiteResult theorem12(int m_max) {
  check_order(m_max, 14, 3);
  json failures = json::array();
  std::int64_t checked = 0, failed = 0;
  for (int m = 3; m <= m_max; ++m) {
    const auto seq = rs_sequence(m);
    const auto naive = periodic_table_naive(seq);
    const auto fast = periodic_table(m);
    const auto lower = aperiodic_table_naive(rs_sequence(m - 2));
    const std::int64_t h = std::int64_t{1} << (m - 1);
    for (std::int64_t k = 1; k < naive.length(); ++k) {
      std::int64_t formula = 0;
      if (k % 2 == 1) {
        const auto label = interval_label(k, m);
        if (label == Interval::s2 || label == Interval::s3) formula = 4 * lower[std::abs(h - k)];
      }
      ++checked;
      if (naive[k] != formula || fast[k] != formula) {
        ++failed;
        note(failures, {{"m", m}, {"k", k}, {"naive", naive[k]}, {"fast", fast[k]}, {"formula", formula}});
      }
    }
    if (naive[0] != naive.length() || fast[0] != naive.length()) {
      ++failed;
      note(failures, {{"m", m}, {"k", 0}});
    }
  }
  return {"theorem12", failed == 0,
          {{"suite", "theorem12"}, {"m_max", m_max}, {"shifts_checked", checked},
           {"failures", failed}, {"examples", failures}}};
}

SuiteResult decomposition(int m_max) {
  check_order(m_max, 20, 3);
  json failures = json::array();
  std::int64_t checked = 0, failed = 0, split_checked = 0;
  for (int m = 0; m <= m_max; ++m) {
    const auto ap = aperiodic_table_fast(m);
    const auto per = periodic_table(m);
    for (std::int64_t k = 0; k < ap.length(); ++k) {
      ++split_checked;
      const std::int64_t sum = k == 0 ? ap[0] : ap[k] + ap[ap.length() - k];
      if (per[k] != sum) {
        ++failed;
        note(failures, {{"m", m}, {"k", k}, {"check", "periodic split"}});
      }
    }
  }
  for (int m = 3; m <= m_max; ++m) {
    const auto t_m = aperiodic_table_fast(m);
    const auto t_m1 = aperiodic_table_fast(m - 1);
    for (std::int64_t k = 1; k < t_m.length(); k += 2) {
      ++checked;
      const IntVec3 direct = v_direct(k, t_m, t_m1);
      const IntVec3 product = v_product(m, k);
      IntVec3 regrouped{};
      bool ok = true;
      std::string why;
      try {
        regrouped = normal_form(m, k).reconstruct();
      } catch (const NormalFormError& e) {
        ok = false;
        why = e.what();
      }
      if (!ok || !(product == direct) || !(regrouped == direct)) {
        ++failed;
        note(failures, {{"m", m}, {"k", k}, {"direct", to_json(direct)}, {"product", to_json(product)},
                        {"normal_form", to_json(regrouped)}, {"error", why}});
      }
    }
  }
  return {"decomposition", failed == 0,
          {{"suite", "decomposition"}, {"m_max", m_max}, {"vectors_checked", checked},
           {"periodic_split_checked", split_checked}, {"failures", failed}, {"examples", failures}}};
}

SuiteResult lemma6(int m_max) {
  check_order(m_max, 60, 3);
  const auto rep = lemma6_check(m_max);
  json rows = json::array();
  for (const auto& r : rep.rows) rows.push_back({{"m", r.m}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});

  // Lower-bound closed form against the tables, where tables are affordable.
  const int table_max = std::min(m_max, 22);
  json lower = json::array();
  bool lower_ok = true;
  std::int64_t variant_mismatches = 0;
  for_each_aperiodic_table(table_max, [&](const AutocorrTable& t) {
    const int m = t.order();
    if (m < 3) return;
    const std::int64_t ell = nearest_third(m);
    const std::int64_t value = t[ell];
    const std::int64_t closed = lower_bound_value(m);
    const std::int64_t variant = lower_bound_value_variant(m);
    lower_ok = lower_ok && closed == value && value != 0;
    if (variant != value) ++variant_mismatches;
    lower.push_back({{"m", m}, {"ell", ell}, {"C", value}, {"closed_form", closed}, {"variant", variant}});
  });
  return {"lemma6", rep.pass() && lower_ok,
          {{"suite", "lemma6"}, {"m_max", m_max}, {"rows", rows}, {"lower_bound", lower},
           {"lower_bound_pass", lower_ok}, {"variant_mismatches", variant_mismatches}}};
}

SuiteResult lemma4() {
  const auto bounds = verify_lemma4();
  const double lam = eigen_constants().lambda;
  json diag = json::array();
  bool diag_ok = true;
  for (DiagTarget t : {DiagTarget::MA, DiagTarget::M, DiagTarget::AM}) {
    double worst = 0;
    for (int j = 1; j <= 30; ++j) worst = std::max(worst, diagonalization_residual(t, j) / std::pow(lam, j));
    diag_ok = diag_ok && worst <= 1e-6;
    diag.push_back({{"matrix", to_string(t)}, {"max_scaled_residual", round12(worst)}});
  }
  const auto approx = rational_approx_diagnostic();
  const IntMat3 mb2 = power(kMB, 2);
  bool mb_ok = true;
  for (unsigned k = 2; k <= 12; ++k) {
    const IntMat3 p = power(kMB, k);
    mb_ok = mb_ok && (p == mb2 || p == mb2 * std::int64_t{-1});
  }
  return {"lemma4", bounds.pass() && diag_ok && approx.pass && mb_ok,
          {{"suite", "lemma4"}, {"constants", to_json(eigen_constants())}, {"bounds", to_json(bounds)},
           {"diagonalization", diag}, {"rational_approx", to_json(approx)}, {"mb_power_sign_periodic", mb_ok}}};
}

SuiteResult remark1(int length) {
  check_order(length, 16, 1);
  const bool involution = kS * kS == IntMat3::identity() && kS.transposed() == kS;
  const auto family = ma_mb_family();
  double worst = 0;
  std::int64_t words = 0;
  std::vector<IntMat3> layer{IntMat3::identity()};
  for (int len = 1; len <= length; ++len) {
    std::vector<IntMat3> next;
    for (const auto& p : layer)
      for (const auto& nm : family) {
        const IntMat3 w = p * nm.value;
        const double a = spectral_norm(w);
        const double b = spectral_norm(kS * w * kS);
        worst = std::max(worst, std::abs(a - b) / std::max(a, 1.0));
        ++words;
        next.push_back(w);
      }
    layer = std::move(next);
  }
  std::ostringstream sma, smb;
  sma << kS * kMA * kS;
  smb << kS * kMB * kS;
  const bool ok = involution && worst <= 1e-12;
  return {"remark1", ok,
          {{"suite", "remark1"}, {"word_length", length}, {"words", words}, {"s_involution", involution},
           {"max_relative_norm_gap", round12(worst)}, {"S_MA_S", sma.str()}, {"S_MB_S", smb.str()}}};
}

SuiteResult lemma1(int m_max) {
  check_order(m_max, 24, 0);
  const auto rep = verify_even_zero(m_max);
  json bad = json::array();
  for (const auto& v : rep.violations)
    note(bad, {{"m", v.order}, {"kind", to_string(v.kind)}, {"k", v.shift}, {"value", v.value}});
  return {"lemma1", rep.pass(),
          {{"suite", "lemma1"}, {"m_max", m_max}, {"shifts_checked", rep.shifts_checked}, {"violations", bad}}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"recurrences", "lemma4", "theorem12", "decomposition",
                                              "lemma6", "remark1", "lemma1"};
  return names;
}

int default_suite_size(const std::string& name) {
  if (name == "recurrences" || name == "theorem12" || name == "decomposition") return 12;
  if (name == "lemma6") return 20;
  if (name == "remark1") return 10;
  if (name == "lemma1") return 14;
  if (name == "lemma4") return 0;
  throw std::invalid_argument("unknown suite: " + name);
}

SuiteResult run_suite(const std::string& name, int size) {
  if (size < 0) size = default_suite_size(name);
  if (name == "recurrences") return recurrences(size);
  if (name == "theorem12") return theorem12(size);
  if (name == "decomposition") return decomposition(size);
  if (name == "lemma6") return lemma6(size);
  if (name == "lemma4") return lemma4();
  if (name == "remark1") return remark1(size);
  if (name == "lemma1") return lemma1(size);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace rsac
