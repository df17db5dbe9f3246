#pragma once

// JSON and CSV renderings of the library's results. Floating-point values
// are rounded to 12 significant digits so runs diff cleanly.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsac/jsr.hpp"
#include "rsac/matrec.hpp"
#include "rsac/specbounds.hpp"
#include "rsac/stats.hpp"

namespace rsac {

/// Nearest double to the value printed with 12 significant digits.
double round12(double x);
/// printf("%.12g"); "inf"/"nan" for non-finite values.
std::string format12(double x);

nlohmann::json to_json(const IntVec3& v);
nlohmann::json to_json(const RealVec3& v);
nlohmann::json to_json(const ShiftChain& chain);
nlohmann::json to_json(const NormalForm& nf);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const SpectralConstants& c);
nlohmann::json to_json(const RationalApproxDiagnostic& d);
nlohmann::json to_json(const JsrBracket& bracket, const MatrixFamily& family);
nlohmann::json to_json(const InvariantPolytopeResult& result);
nlohmann::json to_json(const MaxShiftRecord& record);

/// Header `m,k_star,value,unique,ell,abs_gap,ratio`.
void write_table_csv(std::ostream& os, const std::vector<MaxShiftRecord>& rows);
/// Header `m,merit_factor,sum_squares_ratio`, m = 1..m_max.
void write_merit_csv(std::ostream& os, int m_max, int cap = kMaxOrder);
/// Header `k,abs_C`, k = 1..2^m - 1.
void write_plotdata_csv(std::ostream& os, const AutocorrTable& aperiodic);

}  // namespace rsac
