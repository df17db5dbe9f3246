#include "rsac/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace rsac {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

// JSON has no inf/nan; those become strings.
json real(double x) {
  if (!std::isfinite(x)) return format12(x);
  return round12(x);
}

json complex_json(std::complex<double> z) { return json{{"re", real(z.real())}, {"im", real(z.imag())}}; }

}  // namespace

json to_json(const IntVec3& v) { return json::array({v[0], v[1], v[2]}); }

json to_json(const RealVec3& v) { return json::array({real(v[0]), real(v[1]), real(v[2])}); }

json to_json(const ShiftChain& chain) {
  json links = json::array();
  for (const auto& l : chain.links)
    links.push_back({{"level", l.level}, {"shift", l.shift}, {"label", to_string(l.label)}});
  return {{"m", chain.order}, {"links", links}, {"base_shift", chain.base_shift()}};
}

json to_json(const NormalForm& nf) {
  json letters = json::array();
  for (auto l : nf.letters) letters.push_back(to_string(l));
  return {{"m", nf.order}, {"k", nf.shift}, {"delta", nf.delta}, {"letters", letters},
          {"v", to_json(nf.reconstruct())}};
}

json to_json(const BoundReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases)
    cases.push_back({{"case", c.label}, {"j", c.j}, {"k", c.k}, {"norm", real(c.norm)},
                     {"bound", real(c.bound)}, {"margin", real(c.margin)}, {"pass", c.pass}});
  return {{"tolerance", real(report.tolerance)}, {"pass", report.pass()},
          {"failures", report.failures()}, {"min_margin", real(report.min_margin())}, {"cases", cases}};
}

json to_json(const SpectralConstants& c) {
  return {{"lambda", real(c.lambda)}, {"nu", complex_json(c.nu)}, {"gamma", complex_json(c.gamma)},
          {"a_coeff", complex_json(c.a_coeff)}, {"leading_coeff", complex_json(c.leading_coeff)}};
}

json to_json(const RationalApproxDiagnostic& d) {
  return {{"nu_over_lambda", real(d.nu_over_lambda)}, {"amplitude_k1", real(d.amplitude_k1)},
          {"amplitude_k2", real(d.amplitude_k2)}, {"stationary", real(d.stationary)}, {"pass", d.pass}};
}

json to_json(const JsrBracket& bracket, const MatrixFamily& family) {
  return {{"depth", bracket.depth}, {"lower", real(bracket.lower)}, {"upper", real(bracket.upper)},
          {"witness", bracket.witness.names(family)}};
}

json to_json(const InvariantPolytopeResult& result) {
  json vertices = json::array();
  for (const auto& v : result.polytope.vertices) vertices.push_back(to_json(v));
  json out{{"success", result.success},
           {"vertices", vertices},
           {"vertex_count", result.polytope.vertices.size()},
           {"facet_count", result.polytope.facets.size()},
           {"rounds", result.rounds},
           {"scale", real(result.scale)},
           {"max_violation", real(result.max_violation)}};
  if (result.escaping) out["escaping"] = to_json(*result.escaping);
  return out;
}

json to_json(const MaxShiftRecord& r) {
  return {{"m", r.m}, {"k_star", r.k_star}, {"value", r.value}, {"unique", r.unique},
          {"ell", r.ell}, {"abs_gap", r.abs_gap}, {"ratio", real(r.ratio)}};
}

void write_table_csv(std::ostream& os, const std::vector<MaxShiftRecord>& rows) {
  os << "m,k_star,value,unique,ell,abs_gap,ratio\n";
  for (const auto& r : rows)
    os << r.m << ',' << r.k_star << ',' << r.value << ',' << (r.unique ? "true" : "false") << ','
       << r.ell << ',' << r.abs_gap << ',' << format12(r.ratio) << '\n';
}

void write_merit_csv(std::ostream& os, int m_max, int cap) {
  check_order(m_max, cap, 1);
  os << "m,merit_factor,sum_squares_ratio\n";
  for_each_aperiodic_table(
      m_max,
      [&](const AutocorrTable& t) {
        if (t.order() < 1) return;
        const std::int64_t n = t.length();
        const std::int64_t e = sidelobe_energy(t);
        const ExactRatio merit{n * n, 2 * e};
        const ExactRatio ssr{6 * e, n * n};
        os << t.order() << ',' << format12(merit.value()) << ',' << format12(ssr.value()) << '\n';
      },
      cap);
}

void write_plotdata_csv(std::ostream& os, const AutocorrTable& aperiodic) {
  os << "k,abs_C\n";
  for (std::int64_t k = 1; k < aperiodic.length(); ++k) os << k << ',' << std::abs(aperiodic[k]) << '\n';
}

}  // namespace rsac
