// Copyright 2026 The tpar developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpar/bench.hpp"
#include "tpar/circuit.hpp"
#include "tpar/optimizer.hpp"
#include "tpar/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

json metrics_json(const tpar::Metrics& m) {
  return json{{"t_count", m.t_count},       {"t_depth", m.t_depth},
              {"cnot_count", m.cnot_count}, {"h_count", m.h_count},
              {"other_count", m.other_count}, {"total_depth", m.total_depth},
              {"qubits", m.qubits},         {"ancillae", m.ancillae}};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  out << text;
}

tpar::AncillaPolicy parse_policy(const std::string& text, const tpar::Circuit& c) {
  if (text == "unbounded") return tpar::AncillaPolicy::unbounded();
  if (text == "n") return tpar::AncillaPolicy::fixed(c.num_wires());
  try {
    std::size_t used = 0;
    int count = std::stoi(text, &used);
    if (used != text.size() || count < 0) throw std::invalid_argument(text);
    return tpar::AncillaPolicy::fixed(count);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--ancillae", "expected 0, a positive count, 'n' or 'unbounded'");
  }
}

std::vector<int> parse_sizes(const std::string& text) {
  // "3..10" or "3,5,7"
  std::vector<int> out;
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int run_single(const std::string& input_path, const std::string& output_path,
               const std::string& ancillae, const std::string& verify_mode, bool expand_only,
               bool stats, const std::string& stats_file, bool no_split) {
  tpar::Circuit circuit = tpar::parse_qc(read_input(input_path));

  if (expand_only) {
    write_output(output_path, tpar::write_qc(tpar::expand(circuit)));
    return 0;
  }

  tpar::OptimizeOptions options;
  options.ancillae = parse_policy(ancillae, circuit);
  options.split_parity = !no_split;
  tpar::OptimizeResult result = tpar::optimize(circuit, options);

  const int total_wires = std::max(circuit.num_wires(), result.circuit.num_wires());
  bool want_unitary = verify_mode == "unitary" || verify_mode == "both";
  bool want_summary = verify_mode == "summary" || verify_mode == "both" || verify_mode == "auto";
  if (verify_mode == "auto" && total_wires <= 10) want_unitary = true;
  if (want_unitary && total_wires > 10 && verify_mode != "auto")
    throw CLI::ValidationError("--verify", "unitary check needs <= 10 wires, circuit has " +
                                               std::to_string(total_wires));

  std::string verdict = "skipped";
  bool verified_ok = true;
  if (want_summary) {
    auto report = tpar::check_summary(circuit, result.circuit);
    verdict = std::string(to_string(report.verdict));
    verified_ok = report.ok();
    if (!report.ok())
      std::cerr << "verification (summary): " << verdict << " -- " << report.note << "\n";
  }
  if (want_unitary && verified_ok && total_wires <= 10) {
    auto report = tpar::check_unitary(circuit, result.circuit);
    verdict = std::string(to_string(report.verdict));
    verified_ok = report.ok();
    if (!report.ok())
      std::cerr << "verification (unitary): " << verdict << " -- " << report.note << " at input "
                << report.witness.value_or("?") << "\n";
  }

  write_output(output_path, tpar::write_qc(result.circuit));

  if (stats || !stats_file.empty()) {
    json doc{{"before", metrics_json(result.before)},
             {"after", metrics_json(result.after)},
             {"ancillae_policy", ancillae},
             {"verify", verdict}};
    if (!stats_file.empty()) {
      std::ofstream out(stats_file);
      out << doc.dump(2) << "\n";
    } else {
      std::cerr << doc.dump(2) << "\n";
    }
  }
  return verified_ok ? 0 : kExitVerifyFailed;
}

int run_bench(const std::string& family, const std::string& sizes, const std::string& ancillae,
              std::uint64_t modulus, const std::string& out_csv, const std::string& out_md) {
  std::vector<tpar::BenchSpec> specs;
  auto add_family = [&](tpar::BenchSpec::Family fam) {
    if (fam == tpar::BenchSpec::Family::fixture) {
      specs.push_back({fam, 0, 0});
      return;
    }
    for (int size : parse_sizes(sizes)) specs.push_back({fam, size, modulus});
  };
  if (family == "mct-barenco")
    add_family(tpar::BenchSpec::Family::mct_barenco);
  else if (family == "mct-nc")
    add_family(tpar::BenchSpec::Family::mct_nc);
  else if (family == "gf-mult")
    add_family(tpar::BenchSpec::Family::gf_mult);
  else if (family == "fixture")
    add_family(tpar::BenchSpec::Family::fixture);
  else if (family == "all") {
    for (auto fam : {tpar::BenchSpec::Family::mct_barenco, tpar::BenchSpec::Family::mct_nc,
                     tpar::BenchSpec::Family::gf_mult})
      add_family(fam);
    specs.push_back({tpar::BenchSpec::Family::fixture, 0, 0});
  } else {
    throw CLI::ValidationError("--family", "expected mct-barenco, mct-nc, gf-mult, fixture or all");
  }

  std::vector<tpar::BenchPolicy> policies;
  std::stringstream ss(ancillae);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "n")
      policies.push_back(tpar::BenchPolicy::n_wires());
    else if (item == "unbounded")
      policies.push_back(tpar::BenchPolicy::unbounded());
    else
      policies.push_back(tpar::BenchPolicy::fixed(std::stoi(item)));
  }

  tpar::BenchReport report = tpar::run_benchmarks(specs, policies);
  if (!out_md.empty()) {
    std::ofstream out(out_md);
    out << report.to_markdown();
  }
  write_output(out_csv, report.to_csv());

  for (const auto& row : report.rows)
    if (row.verify_verdict.rfind("equal", 0) != 0) return kExitVerifyFailed;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "T-gate optimizer for Clifford+T circuits: merges phases and"
      " parallelizes T-stages via matroid partitioning"};
  app.require_subcommand(0, 1);

  std::string input_path, output_path, ancillae = "0", verify_mode = "auto";
  std::string stats_file;
  bool stats = false, expand_only = false, no_split = false;
  app.add_option("input", input_path, "input .qc file ('-' for stdin)");
  app.add_option("-o,--output", output_path, "output .qc file (default stdout)");
  app.add_option("--ancillae", ancillae, "extra |0> wires: 0, a count, 'n' or 'unbounded'")
      ->capture_default_str();
  app.add_option("--verify", verify_mode,
                 "none, summary, unitary, both or auto (summary always,"
                 " unitary when <= 10 wires)")
      ->check(CLI::IsMember({"none", "summary", "unitary", "both", "auto"}))
      ->capture_default_str();
  app.add_flag("--expand", expand_only, "only expand Toffoli gates, then exit");
  app.add_flag("--stats", stats, "print a JSON metrics report to stderr");
  app.add_option("--stats-file", stats_file, "write the JSON metrics report to a file");
  app.add_flag("--no-split-parity", no_split,
               "partition Clifford and T phases together instead of separately");

  auto* bench = app.add_subcommand("bench", "generate, optimize and verify benchmark families");
  std::string family = "all", sizes = "3..6", bench_ancillae = "0,n,unbounded";
  std::string bench_out = "-", bench_md;
  std::string modulus_text;
  bench->add_option("--family", family, "mct-barenco, mct-nc, gf-mult, fixture or all")
      ->capture_default_str();
  bench->add_option("--k,--m", sizes, "sizes, e.g. 3..10 or 3,5,7")->capture_default_str();
  bench->add_option("--modulus", modulus_text, "gf-mult field polynomial, e.g. 0x13 for x^4+x+1");
  bench->add_option("--ancillae", bench_ancillae, "comma list of 0, counts, 'n', 'unbounded'")
      ->capture_default_str();
  bench->add_option("--out", bench_out, "CSV report path (default stdout)")->capture_default_str();
  bench->add_option("--md", bench_md, "also write a markdown report");

  if (argc <= 1) {
    std::cerr << app.help() << std::flush;
    return kExitUsage;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bench->parsed()) {
      std::uint64_t modulus = 0;
      if (!modulus_text.empty()) modulus = std::stoull(modulus_text, nullptr, 0);
      return run_bench(family, sizes, bench_ancillae, modulus, bench_out, bench_md);
    }
    if (input_path.empty()) {
      std::cerr << "error: no input file (use '-' for stdin)\n";
      return kExitUsage;
    }
    return run_single(input_path, output_path, ancillae, verify_mode, expand_only, stats,
                      stats_file, no_split);
  } catch (const tpar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
