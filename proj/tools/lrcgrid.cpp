// lrcgrid: parameters, reference tables, encode/recover round trips and
// erasure simulations for grid locally recoverable codes.
//
// Exit codes: 0 success, 1 validation error, 2 I/O error,
//             3 table mismatch or partial repair.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrc/lrc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitMismatch = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    lrc::write_text_file(out_path, text);
}

int cmd_params(const std::string& spec_path, bool human, const std::string& gen_csv) {
  const lrc::CodeSpec spec = lrc::spec_from_json(lrc::load_json_file(spec_path));
  const lrc::CodeMetrics cm = lrc::compute_metrics(spec);
  if (human)
    std::cout << lrc::metrics_to_text(spec, cm);
  else
    std::cout << lrc::metrics_to_json(spec, cm).dump(2) << "\n";
  if (!gen_csv.empty()) lrc::write_text_file(gen_csv, lrc::generator_matrix_csv(spec));
  return kExitOk;
}

int cmd_tables(bool as_json) {
  bool ok = true;
  lrc::json out = lrc::json::array();
  for (const auto& table : lrc::reference_tables()) {
    const lrc::TableCheck check = lrc::check_reference_table(table);
    ok = ok && check.ok;
    if (as_json) {
      out.push_back({{"name", table.name}, {"ok", check.ok}, {"diffs", check.diffs}});
    } else {
      std::cout << check.text;
      for (const auto& d : check.diffs) std::cout << "MISMATCH " << d << "\n";
      std::cout << (check.ok ? "all cells match\n" : "table has mismatches\n") << "\n";
    }
  }
  if (as_json) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitMismatch;
}

int cmd_encode(const std::string& spec_path, const std::string& message_path,
               const std::string& out_path) {
  const lrc::CodeSpec spec = lrc::spec_from_json(lrc::load_json_file(spec_path));
  const auto message = lrc::parse_message(lrc::read_text_file(message_path), spec);
  emit(lrc::format_codeword(lrc::encode(spec, message)), out_path);
  return kExitOk;
}

int cmd_recover(const std::string& spec_path, const std::string& word_path,
                const std::string& out_path, const std::string& report_path) {
  const lrc::CodeSpec spec = lrc::spec_from_json(lrc::load_json_file(spec_path));
  lrc::ErasedWord word = lrc::parse_erased_word(lrc::read_text_file(word_path), spec);
  const lrc::RepairResult res = lrc::recover_all(spec, std::move(word));
  const lrc::json report = lrc::repair_report_to_json(res.report);
  if (report_path.empty())
    std::cout << report.dump(2) << "\n";
  else
    lrc::write_text_file(report_path, report.dump(2) + "\n");
  if (!out_path.empty()) lrc::write_text_file(out_path, lrc::format_erased_word(res.word));
  return res.report.complete ? kExitOk : kExitMismatch;
}

int cmd_local(const std::string& spec_path, std::size_t direction,
              const std::vector<std::uint32_t>& alpha_ranks, bool verbose) {
  const lrc::CodeSpec spec = lrc::spec_from_json(lrc::load_json_file(spec_path));
  std::vector<lrc::FieldElement> alpha;
  for (auto r : alpha_ranks) alpha.push_back(spec.field().element(r));
  lrc::json out = lrc::local_report_to_json(lrc::local_code(spec, direction, alpha));
  if (verbose) {
    // Extension elements as coefficient tuples, low to high.
    lrc::json coeffs = lrc::json::array();
    for (const auto& e : alpha) coeffs.push_back(e.coefficients());
    out["alpha_coefficients"] = coeffs;
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_simulate(const std::string& config_path, unsigned threads, bool human) {
  const lrc::json j = lrc::load_json_file(config_path);
  if (!j.contains("spec")) throw lrc::ValidationError("simulation config is missing \"spec\"");
  const lrc::CodeSpec spec = lrc::spec_from_json(j.at("spec"));
  const lrc::SimConfig cfg = lrc::sim_config_from_json(j);
  const lrc::SimReport rep = lrc::run_simulation(spec, cfg, threads);
  if (human)
    std::cout << lrc::sim_report_to_text(rep);
  else
    std::cout << lrc::sim_report_to_json(rep).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid locally recoverable codes: parameters, encoding, repair, simulation"};
  app.require_subcommand(1);

  std::string spec_path, aux_path, out_path, report_path, gen_csv;
  bool human = false, as_json = false, verbose = false;
  std::size_t direction = 0;
  std::vector<std::uint32_t> alpha_ranks;
  unsigned threads = 1;

  auto* params = app.add_subcommand("params", "compute code parameters from a spec file");
  params->add_option("spec", spec_path, "spec JSON file")->required();
  params->add_flag("--human", human, "aligned text instead of JSON");
  params->add_option("--gen-csv", gen_csv, "also export the generator matrix as CSV of ranks");

  auto* tables = app.add_subcommand("tables", "recompute the reference tables and diff them");
  tables->add_flag("--json", as_json, "machine-readable result");

  auto* encode = app.add_subcommand("encode", "encode a message file to a codeword");
  encode->add_option("spec", spec_path, "spec JSON file")->required();
  encode->add_option("message", aux_path, "message file (dimension-many ranks)")->required();
  encode->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* recover = app.add_subcommand("recover", "repair an erased word by peeling");
  recover->add_option("spec", spec_path, "spec JSON file")->required();
  recover->add_option("word", aux_path, "erased word file (ranks and ?)")->required();
  recover->add_option("-o,--output", out_path, "repaired word output file");
  recover->add_option("--report", report_path, "write the JSON report here instead of stdout");

  auto* local = app.add_subcommand("local", "analyze the code restricted to one axis line");
  local->add_option("spec", spec_path, "spec JSON file")->required();
  local->add_option("-i,--direction", direction, "axis direction (0-based)")->required();
  local->add_option("--alpha", alpha_ranks,
                    "transversal coordinates as ranks, one per other direction")
      ->required();
  local->add_flag("--verbose", verbose, "also print elements as coefficient tuples");

  auto* simulate = app.add_subcommand("simulate", "run a Monte-Carlo erasure/repair simulation");
  simulate->add_option("config", spec_path, "simulation config JSON file")->required();
  simulate->add_option("--threads", threads, "worker threads (default 1)");
  simulate->add_flag("--human", human, "text summary instead of JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (params->parsed()) return cmd_params(spec_path, human, gen_csv);
    if (tables->parsed()) return cmd_tables(as_json);
    if (encode->parsed()) return cmd_encode(spec_path, aux_path, out_path);
    if (recover->parsed()) return cmd_recover(spec_path, aux_path, out_path, report_path);
    if (local->parsed()) return cmd_local(spec_path, direction, alpha_ranks, verbose);
    if (simulate->parsed()) return cmd_simulate(spec_path, threads, human);
  } catch (const lrc::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const lrc::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
