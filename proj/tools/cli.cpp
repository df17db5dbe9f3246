#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "rsac/autocorr.hpp"
#include "rsac/error.hpp"
#include "rsac/jsr.hpp"
#include "rsac/report.hpp"
#include "rsac/sequence.hpp"
#include "rsac/stats.hpp"
#include "rsac/verify.hpp"

namespace rsac::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int m = -1;
  int m_max = -1;
  std::string kind = "aperiodic";
  std::string method;
  std::string format;
  std::string pattern;
  std::string out;
  std::string suite;
  int depth = 8;
  int max_rounds = 10;
  double tol = 1e-8;
  double scale = 1.0;
  bool check = false;
  bool signed_max = false;
};

void emit(const std::string& text, const std::string& path, const std::string& default_name, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  fs::path target(path);
  if (fs::is_directory(target)) {
    if (default_name.empty()) throw UsageError("--out is a directory: " + path);
    target /= default_name;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file) throw UsageError("cannot open " + target.string());
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_gen(const Options& o, std::ostream& out) {
  SeqFormat fmt = SeqFormat::signs;
  if (o.format == "ints") fmt = SeqFormat::ints;
  else if (o.format == "compact") fmt = SeqFormat::compact;
  std::optional<BinarySeq> seq;
  if (o.pattern.empty()) {
    seq = rs_sequence(o.m);
  } else {
    std::vector<std::uint8_t> f;
    try {
      f = parse_pattern(o.pattern);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (static_cast<int>(f.size()) != o.m)
      throw UsageError("--f needs exactly m = " + std::to_string(o.m) + " bits");
    seq = generalized_sequence(o.m, f);
  }
  emit(format_sequence(*seq, fmt) + "\n", o.out, "", out);
  return kOk;
}

int cmd_autocorr(const Options& o, std::ostream& out, std::ostream& err) {
  const bool periodic = o.kind == "periodic";
  const bool naive = o.method == "naive";
  if (o.check && o.m > 12) throw UsageError("--check is limited to m <= 12");
  if (naive && o.m > 14) throw UsageError("--method naive is limited to m <= 14");
  check_order(o.m);

  auto build = [&](bool use_naive) {
    if (use_naive) {
      const auto seq = rs_sequence(o.m);
      return periodic ? periodic_table_naive(seq) : aperiodic_table_naive(seq);
    }
    return periodic ? periodic_table(o.m) : aperiodic_table_fast(o.m);
  };
  const AutocorrTable table = build(naive);

  int code = kOk;
  if (o.check) {
    const AutocorrTable other = build(!naive);
    if (!(other == table)) {
      err << "check failed: fast and naive tables differ for m=" << o.m << "\n";
      code = kCheckFailed;
    }
  }

  std::ostringstream text;
  if (o.format == "json") {
    json values(std::vector<std::int64_t>(table.values().begin(), table.values().end()));
    text << dump({{"m", o.m}, {"kind", to_string(table.kind())}, {"values", values}});
  } else {
    write_csv(text, table);
  }
  emit(text.str(), o.out, csv_filename(table), out);
  return code;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto result = run_suite(o.suite, o.m_max);
  json report = result.report;
  report["pass"] = result.pass;
  emit(dump(report), o.out, "verify_" + o.suite + ".json", out);
  if (!result.pass) err << "verify " << o.suite << ": FAILED\n";
  return result.pass ? kOk : kCheckFailed;
}

int cmd_jsr(const Options& o, std::ostream& out, std::ostream& err) {
  const auto family = ma_mb_family();
  if (o.method == "polytope") {
    const auto result = invariant_polytope(family, make_word(family, {0}), o.max_rounds, o.tol);
    emit(dump(to_json(result)), o.out, "polytope.json", out);
    if (!result.success) {
      err << "invariant polytope: vertices still escaping after " << result.rounds << " rounds\n";
      return kCheckFailed;
    }
    return kOk;
  }
  const auto bracket = bnb_bracket(family, o.depth, o.scale);
  emit(dump(to_json(bracket, family)), o.out, "bracket.json", out);
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto rows = conjecture_table(o.m_max, o.signed_max ? MaxMode::signed_value : MaxMode::absolute);
  std::ostringstream text;
  if (o.format == "json") {
    json list = json::array();
    for (const auto& r : rows) list.push_back(to_json(r));
    text << dump({{"mode", o.signed_max ? "signed" : "absolute"}, {"rows", list}, {"exact_hits", exact_hits(rows)}});
  } else {
    write_table_csv(text, rows);
  }
  emit(text.str(), o.out, "table.csv", out);
  return kOk;
}

int cmd_merit(const Options& o, std::ostream& out) {
  std::ostringstream text;
  write_merit_csv(text, o.m_max);
  emit(text.str(), o.out, "merit.csv", out);
  return kOk;
}

int cmd_plotdata(const Options& o, std::ostream& out) {
  check_order(o.m, kMaxOrder, 1);
  std::ostringstream text;
  write_plotdata_csv(text, aperiodic_table_fast(o.m));
  emit(text.str(), o.out, "plot_" + std::to_string(o.m) + ".csv", out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rudin-Shapiro autocorrelation tools", "rsac"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Print the m-th Rudin-Shapiro sequence (or a generalized one with --f)");
  gen->add_option("--m", o.m, "order")->required()->check(CLI::Range(0, kMaxOrder));
  gen->add_option("--f", o.pattern, "bit pattern f(0)..f(m-1)");
  gen->add_option("--format", o.format, "signs | ints | compact")
      ->check(CLI::IsMember({"signs", "ints", "compact"}));
  gen->add_option("--out", o.out, "output file");

  auto* autocorr = app.add_subcommand("autocorr", "Autocorrelation table as CSV");
  autocorr->add_option("--m", o.m, "order")->required()->check(CLI::Range(0, kMaxOrder));
  autocorr->add_option("--kind", o.kind, "aperiodic | periodic")
      ->check(CLI::IsMember({"aperiodic", "periodic"}));
  autocorr->add_option("--method", o.method, "fast | naive")->check(CLI::IsMember({"fast", "naive"}));
  autocorr->add_flag("--check", o.check, "also build the other method and compare (m <= 12)");
  autocorr->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  autocorr->add_option("--out", o.out, "output file or directory");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--m-max", o.m_max, "size bound (order, or word length for remark1)");
  verify->add_option("--out", o.out, "output file or directory");

  auto* jsr = app.add_subcommand("jsr", "Joint spectral radius of {MA, MB}");
  jsr->add_option("--method", o.method, "bnb | polytope")->check(CLI::IsMember({"bnb", "polytope"}));
  jsr->add_option("--depth", o.depth, "branch-and-bound depth")->check(CLI::Range(1, kMaxBnbDepth));
  jsr->add_option("--scale", o.scale, "norm scaling s in diag(1,1,s)")->check(CLI::PositiveNumber);
  jsr->add_option("--tol", o.tol, "polytope containment tolerance")->check(CLI::PositiveNumber);
  jsr->add_option("--max-rounds", o.max_rounds, "polytope round limit")->check(CLI::Range(1, 1000));
  jsr->add_option("--out", o.out, "output file or directory");

  auto* table = app.add_subcommand("table", "Maximal-shift table for m = 3..m_max");
  table->add_option("--m-max", o.m_max, "largest order")->check(CLI::Range(3, kMaxOrder));
  table->add_flag("--signed", o.signed_max, "maximize C_m(k) instead of |C_m(k)|");
  table->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", o.out, "output file or directory");

  auto* merit = app.add_subcommand("merit", "Merit factors for m = 1..m_max");
  merit->add_option("--m-max", o.m_max, "largest order")->check(CLI::Range(1, kMaxOrder));
  merit->add_option("--out", o.out, "output file or directory");

  auto* plot = app.add_subcommand("plotdata", "|C_m(k)| for k = 1..2^m - 1");
  plot->add_option("--m", o.m, "order")->required()->check(CLI::Range(1, kMaxOrder));
  plot->add_option("--out", o.out, "output file or directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*autocorr) return cmd_autocorr(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    if (*jsr) return cmd_jsr(o, out, err);
    if (*table) {
      if (o.m_max < 0) o.m_max = 16;
      return cmd_table(o, out);
    }
    if (*merit) {
      if (o.m_max < 0) o.m_max = 12;
      return cmd_merit(o, out);
    }
    if (*plot) return cmd_plotdata(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const OrderTooLarge& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace rsac::cli
