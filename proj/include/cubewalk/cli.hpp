#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubewalk/pst_analyzer.hpp"
#include "cubewalk/spectral_engine.hpp"

namespace cubewalk::cli {

enum class ExitCode : int { Success = 0, Failure = 1, Usage = 2 };

enum class Command { Eigs, Pst, Simulate, Verify, Export, Table };
enum class Format { Text, Json, Dot };
enum class Indexing { OneBased, ZeroBased };

/// A claimed classification read back from `pst --json` output.
struct Claim {
  Index sigma;
  PstKind kind;
  std::vector<VertexPair> pairs;  // zero-based
};

struct JobSpec {
  Command command = Command::Pst;
  std::optional<WeightVector> weights;  // absent only for `table`
  double time = kTransferTime;
  Format format = Format::Text;
  Indexing indexing = Indexing::OneBased;
  std::vector<VertexPair> pairs;  // zero-based, for `simulate`
  std::string dot_path;           // empty: write DOT to stdout
  std::optional<Claim> claim;     // for `verify`
};

/// Parses a JSON job document {"d", "z", "time"?} plus any claim fields
/// ("sigma", "kind", "pairs", "indexing") emitted by `pst --json`.
JobSpec parse_job_json(const std::string& text);

/// Parses comma-separated weights such as "0,1,-7,-10".
WeightVector parse_weights_csv(const std::string& text);

ExitCode run(const JobSpec& spec, std::ostream& out, std::ostream& err);

struct TableRowReport {
  int id = 0;
  int dimension = 0;
  bool eigenvalues_match = false;
  bool pairs_match = false;
  /// Unset when the oracle was not run.
  std::optional<bool> oracle_passed;
  /// Largest claimed-pair fidelity on the 64-point grid inside (0, pi/2).
  double early_max_fidelity = 0.0;
  std::vector<std::string> diffs;

  bool passed() const { return eigenvalues_match && pairs_match && oracle_passed.value_or(true); }
};

std::vector<TableRowReport> run_table(bool with_oracle = true);

/// Full command-line entry point: argv[0] is the program name.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubewalk::cli
