// Command-line front end: generate, solve, verify, exthom, dualize.
//
// Exit codes: 0 success, 1 data/validation/verification failure, 2 internal
// or I/O error. Every run prints a one-line JSON run report on stderr;
// payloads go to --out when given, stdout otherwise.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsa/exthom.hpp"
#include "lsa/io.hpp"
#include "lsa/verify.hpp"

namespace {

using lsa::json;

enum class Status { Ok, Violation, Error };

struct RunReport {
  std::string command;
  Status status = Status::Ok;
  std::vector<std::string> artifacts;
  json diagnostics = json::array();

  void diag(const std::string& severity, const std::string& kind, const std::string& message) {
    diagnostics.push_back({{"severity", severity}, {"kind", kind}, {"message", message}});
  }
  int fail(Status s, const std::string& kind, const std::string& message) {
    status = s;
    diag("error", kind, message);
    return s == Status::Violation ? 1 : 2;
  }
  int exit_code() const { return status == Status::Ok ? 0 : status == Status::Violation ? 1 : 2; }

  json to_json() const {
    const char* s = status == Status::Ok ? "ok" : status == Status::Violation ? "violation" : "error";
    return {{"command", command}, {"status", s}, {"artifacts", artifacts}, {"diagnostics", diagnostics}};
  }
};

bool is_data_error(lsa::ErrorKind kind) {
  switch (kind) {
    case lsa::ErrorKind::UnknownLabel:
    case lsa::ErrorKind::InvalidBlock:
    case lsa::ErrorKind::InvalidTable:
    case lsa::ErrorKind::ParseError:
    case lsa::ErrorKind::ShapeMismatch:
    case lsa::ErrorKind::SizeMismatch:
      return true;
    default:
      return false;
  }
}

void emit(const std::string& text, const std::string& out_path, RunReport& report) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  lsa::write_text_file(out_path, text);
  report.artifacts.push_back(out_path);
}

int cmd_generate(const std::string& type, int n, const std::string& out, RunReport& report) {
  if (type != "springer-a") return report.fail(Status::Violation, "UnknownType", "unknown block type " + type);
  std::vector<lsa::BlockData> blocks{lsa::build_springer_block_a(n)};
  emit(lsa::dataset_to_json(blocks).dump(2) + "\n", out, report);
  return 0;
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& format,
              std::optional<std::uint64_t> seed, RunReport& report) {
  const auto blocks = lsa::dataset_from_json(lsa::read_json_file(in));
  const auto violations = lsa::validate_dataset(blocks);
  if (!violations.empty()) {
    for (const auto& v : violations) report.diag("error", std::string(lsa::to_string(v.kind)), v.block + ": " + v.detail);
    report.status = Status::Violation;
    return 1;
  }
  std::vector<lsa::SolveResult> results;
  json out_json = json::array();
  for (const auto& block : blocks) {
    try {
      results.push_back(lsa::solve(block, {seed}));
    } catch (const lsa::Error& e) {
      return report.fail(Status::Error, std::string(lsa::to_string(e.kind())), e.what());
    }
    out_json.push_back(lsa::to_json(results.back(), block));
  }
  if (format == "csv") {
    report.diag("info", "LossyFormat", "CSV pretty-prints polynomials and cannot be read back exactly");
    emit(lsa::results_to_csv(results), out, report);
  } else {
    emit(out_json.dump(2) + "\n", out, report);
  }
  return 0;
}

int cmd_verify(int n_max, RunReport& report) {
  if (n_max < 1 || n_max > lsa::kVerifyMaxN)
    return report.fail(Status::Violation, "ResourceLimit",
                       "verify supports --n-max between 1 and " + std::to_string(lsa::kVerifyMaxN) +
                           "; tableau enumeration beyond that is not supported");
  json summary = json::array();
  for (int n = 1; n <= n_max; ++n) {
    const auto r = lsa::verify_springer(n);
    summary.push_back({{"n", n}, {"kostka_mismatches", r.mismatches}, {"order_independent", r.order_independent}});
    for (const auto& m : r.mismatches) report.diag("error", "KostkaMismatch", "n=" + std::to_string(n) + " " + m);
    if (!r.order_independent) report.diag("error", "OrderDependence", "n=" + std::to_string(n));
    if (!r.ok()) report.status = Status::Violation;
  }
  std::cout << summary.dump(2) << "\n";
  return report.exit_code();
}

// Accepts exact ids, plus "triv" (all values 1) and "sgn" (the id "1,...,1"
// of an S_n table).
std::string resolve_char(const lsa::CharTable& table, const std::string& name) {
  for (const auto& ch : table.irreducibles)
    if (ch.id == name) return name;
  if (name == "triv") {
    for (const auto& ch : table.irreducibles)
      if (std::all_of(ch.values.begin(), ch.values.end(), [](std::int64_t v) { return v == 1; })) return ch.id;
  }
  if (name == "sgn") {
    std::string ones = "1";
    for (int i = 1; i < table.rank(); ++i) ones += ",1";
    for (const auto& ch : table.irreducibles)
      if (ch.id == ones) return ones;
  }
  throw lsa::Error(lsa::ErrorKind::UnknownLabel, "no character \"" + name + "\" in table");
}

int cmd_exthom(const std::string& table_path, int sn, const std::string& chi, const std::string& psi, int max_k,
               const std::string& out, RunReport& report) {
  const lsa::CharTable table =
      table_path.empty() ? lsa::char_table_sn(sn) : lsa::char_table_from_json(lsa::read_json_file(table_path));
  if (const auto issues = lsa::validate_table(table); !issues.empty()) {
    for (const auto& i : issues) report.diag("error", "InvalidTable", i);
    report.status = Status::Violation;
    return 1;
  }
  const std::string c = resolve_char(table, chi);
  const std::string p = resolve_char(table, psi);
  const auto dims = lsa::graded_hom_dims(table, c, p, max_k);
  const json payload = {{"chi", c}, {"psi", p}, {"dims", lsa::to_json(dims)}, {"max_k", max_k}};
  emit(payload.dump() + "\n", out, report);
  return 0;
}

int cmd_dualize(const std::string& in, const std::string& out, RunReport& report) {
  json doc = lsa::read_json_file(in);
  if (doc.is_object()) doc = json::array({doc});
  json payload = json::array();
  for (const auto& entry : doc) {
    const lsa::BlockData skeleton = lsa::block_skeleton_from_result_json(entry);
    const lsa::SolveResult r = lsa::result_from_json(entry);
    payload.push_back({{"block", r.block}, {"order", r.order}, {"p_dual", lsa::to_json(lsa::dualize_p(r.p, skeleton))}});
  }
  emit(payload.dump(2) + "\n", out, report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lusztig–Shoji solver for block datasets on the nilpotent cone"};
  app.require_subcommand(1);

  std::string type;
  std::string in_path;
  std::string out_path;
  std::string format = "json";
  std::string table_path;
  std::string chi;
  std::string psi;
  int n = 0;
  int n_max = 0;
  int sn = 0;
  int max_k = 0;
  std::optional<std::uint64_t> seed;

  auto* generate = app.add_subcommand("generate", "Write a dataset for a generated block");
  generate->add_option("type", type, "Block type (springer-a)")->required();
  generate->add_option("--n", n, "Rank n of GL_n")->required()->check(CLI::Range(1, lsa::kSpringerBlockMaxN));
  generate->add_option("--out", out_path, "Output dataset file");

  auto* solve = app.add_subcommand("solve", "Solve every block of a dataset");
  solve->add_option("dataset", in_path, "Dataset JSON file")->required();
  solve->add_option("--out", out_path, "Output file");
  solve->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  solve->add_option("--order-seed", seed, "Seed for a random linear extension of the closure order");

  auto* verify = app.add_subcommand("verify", "Check GL_n Springer blocks against Kostka–Foulkes polynomials");
  verify->add_option("--n-max", n_max, "Largest n to check")->required();

  auto* exthom = app.add_subcommand("exthom", "Graded Hom dimensions between two characters");
  auto* table_opt = exthom->add_option("--table", table_path, "Character table JSON file");
  auto* sn_opt = exthom->add_option("--sn", sn, "Use the generated S_n table")->check(CLI::Range(1, 12));
  table_opt->excludes(sn_opt);
  exthom->add_option("--chi", chi, "Character id (or triv/sgn)")->required();
  exthom->add_option("--psi", psi, "Character id (or triv/sgn)")->required();
  exthom->add_option("--max-k", max_k, "Truncation degree k (cohomological degree 2k)")->required()->check(CLI::NonNegativeNumber);
  exthom->add_option("--out", out_path, "Output file");

  auto* dualize = app.add_subcommand("dualize", "Recompute dual polynomials from a result file");
  dualize->add_option("result", in_path, "Result JSON file from solve")->required();
  dualize->add_option("--out", out_path, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  RunReport report;
  int code = 0;
  try {
    if (*generate) {
      report.command = "generate";
      code = cmd_generate(type, n, out_path, report);
    } else if (*solve) {
      report.command = "solve";
      code = cmd_solve(in_path, out_path, format, seed, report);
    } else if (*verify) {
      report.command = "verify";
      code = cmd_verify(n_max, report);
    } else if (*exthom) {
      report.command = "exthom";
      if (table_path.empty() && sn == 0) {
        code = report.fail(Status::Violation, "MissingTable", "exthom needs --table or --sn");
      } else {
        code = cmd_exthom(table_path, sn, chi, psi, max_k, out_path, report);
      }
    } else if (*dualize) {
      report.command = "dualize";
      code = cmd_dualize(in_path, out_path, report);
    }
  } catch (const lsa::Error& e) {
    code = report.fail(is_data_error(e.kind()) ? Status::Violation : Status::Error, std::string(lsa::to_string(e.kind())),
                       e.what());
  } catch (const std::exception& e) {
    code = report.fail(Status::Error, "IOError", e.what());
  }
  std::cerr << report.to_json().dump() << "\n";
  return code;
}
