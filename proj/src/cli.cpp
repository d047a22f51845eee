// Copyright 2026 The mctsynth Authors
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

#include "mctsynth/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mctsynth/circuit_io.hpp"
#include "mctsynth/cost.hpp"
#include "mctsynth/decomp.hpp"
#include "mctsynth/error.hpp"
#include "mctsynth/optimizer.hpp"
#include "mctsynth/simulate.hpp"

namespace mctsynth {

namespace {

// Usage or I/O problem that is not a library error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Circuit read_circuit(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_circuit(buf.str());
}

void write_circuit(const std::string& path, const Circuit& circuit) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << serialize_circuit(circuit);
  if (!out) throw UsageError("write to '" + path + "' failed");
}

std::string join(const std::vector<LineIndex>& lines) {
  if (lines.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lines[i]);
  }
  return s;
}

SynthesisResult run_strategy(
    const std::string& strategy, unsigned size, unsigned garbage) {
  if (strategy == "auto") return synthesize(size, garbage);
  if (size < 3) {
    throw UsageError("strategy '" + strategy + "' needs --size >= 3");
  }
  const unsigned m = size - 1;
  auto need = [&](unsigned g) {
    if (garbage < g) {
      throw UsageError(
          "strategy '" + strategy + "' needs --garbage >= " + std::to_string(g));
    }
  };
  if (strategy == "lemma71") return lemma71(m);
  if (strategy == "lemma72" || strategy == "lemma72-peres") {
    need(m >= 2 ? m - 2 : 0);
    return lemma72(
        m, 2 * m - 1,
        strategy == "lemma72" ? LadderVariant::Toffoli : LadderVariant::Peres);
  }
  if (strategy == "cor74" || strategy == "cor74-peres") {
    need(1);
    return corollary74(
        m, strategy == "cor74" ? LadderVariant::Toffoli : LadderVariant::Peres);
  }
  throw UsageError("unknown strategy '" + strategy + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Multi-controlled Toffoli synthesis, costing and verification",
               "mctsynth"};
  app.require_subcommand(1);

  unsigned synth_size = 0;
  unsigned synth_garbage = 0;
  std::string synth_strategy = "auto";
  bool synth_expand = false;
  std::string synth_out;
  auto* synth = app.add_subcommand("synth", "Synthesize an MCT network");
  synth->add_option("--size", synth_size, "Gate size (controls + 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  synth->add_option("--garbage", synth_garbage, "Extra-line budget");
  synth->add_option("--strategy", synth_strategy, "Construction")
      ->check(CLI::IsMember({"auto", "lemma71", "lemma72", "lemma72-peres",
                             "cor74", "cor74-peres"}));
  synth->add_flag("--expand", synth_expand, "Expand macros to elementary gates");
  synth->add_option("--out", synth_out, "Output circuit file");

  std::string verify_file;
  std::vector<LineIndex> verify_controls;
  LineIndex verify_target = 0;
  std::vector<LineIndex> verify_extra;
  auto* verify = app.add_subcommand("verify", "Check a circuit against MCT");
  verify->add_option("file", verify_file)->required();
  auto* controls_opt =
      verify->add_option("--controls", verify_controls)->delimiter(',');
  auto* target_opt = verify->add_option("--target", verify_target);
  auto* extra_opt = verify->add_option("--extra", verify_extra)->delimiter(',');

  std::string optimize_file;
  std::string optimize_out;
  auto* optimize = app.add_subcommand("optimize", "Cancel commuting CNOT pairs");
  optimize->add_option("file", optimize_file)->required();
  optimize->add_option("--out", optimize_out)->required();

  std::string expand_file;
  std::string expand_out;
  auto* expand_cmd = app.add_subcommand("expand", "Expand macro gates");
  expand_cmd->add_option("file", expand_file)->required();
  expand_cmd->add_option("--out", expand_out)->required();

  unsigned table_max = 10;
  bool table_csv = false;
  auto* table = app.add_subcommand("cost-table", "Print the cost table");
  table->add_option("--max-size", table_max)->required()->check(CLI::PositiveNumber);
  table->add_flag("--csv", table_csv);

  std::vector<std::string> argv_storage{"mctsynth"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*synth) {
      SynthesisResult r = run_strategy(synth_strategy, synth_size, synth_garbage);
      const Circuit circuit = synth_expand ? expand(r.circuit) : r.circuit;
      if (!synth_out.empty()) write_circuit(synth_out, circuit);
      out << "cost=" << r.cost << " garbage=" << r.garbage_reported
          << " lines=" << circuit.width() << " strategy=" << r.strategy << '\n';
      return kExitOk;
    }

    if (*verify) {
      const Circuit circuit = read_circuit(verify_file);
      std::vector<LineIndex> controls = verify_controls;
      LineIndex target = verify_target;
      std::vector<LineIndex> extra = verify_extra;
      if (controls_opt->count() == 0 || target_opt->count() == 0) {
        if (!circuit.roles()) {
          throw UsageError(
              "--controls and --target are required when the file has no "
              ".roles line");
        }
        if (controls_opt->count() == 0) {
          controls = lines_with_role(circuit, Role::Control);
        }
        if (target_opt->count() == 0) {
          target = lines_with_role(circuit, Role::Target).front();
        }
        if (extra_opt->count() == 0) {
          extra = lines_with_role(circuit, Role::Ancilla);
        }
      }
      const EquivalenceReport report = check_mct(circuit, controls, target, extra);
      const std::vector<LineIndex> non_restored(
          report.non_restored_lines.begin(), report.non_restored_lines.end());
      out << "verdict=" << to_string(report.verdict)
          << " max_deviation=" << std::setprecision(3) << report.max_deviation
          << " non_restored=" << join(non_restored)
          << " basis_preserving=" << (report.basis_preserving ? "true" : "false")
          << '\n';
      return report.verdict == Verdict::Fail ? kExitVerifyFailed : kExitOk;
    }

    if (*optimize) {
      const Circuit circuit = read_circuit(optimize_file);
      const Circuit result = cancel_pairs(circuit);
      write_circuit(optimize_out, result);
      out << "gates " << circuit.size() << " -> " << result.size() << '\n';
      return kExitOk;
    }

    if (*expand_cmd) {
      const Circuit circuit = read_circuit(expand_file);
      const Circuit result = expand(circuit);
      write_circuit(expand_out, result);
      out << "gates " << circuit.size() << " -> " << result.size()
          << " cost=" << circuit_cost(result) << '\n';
      return kExitOk;
    }

    if (*table) {
      const auto rows = cost_table(table_max);
      if (table_csv) {
        write_csv(out, rows);
      } else {
        write_table(out, rows);
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mctsynth
