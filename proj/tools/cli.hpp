#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/skein_eval.hpp"

namespace skeinlab::cli {

enum class Format { Human, Json, Csv };

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kResourceCap = 3 };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> pd;
  std::vector<std::string> files;
  int n = 2;
  int n_max = 2;
  Format format = Format::Human;
  int max_width = 0;  // 0 means EvalOptions::default_max_width()
  std::size_t max_states = std::size_t{1} << 20;
  int jobs = 0;  // 0 means all cores
  bool timings = false;

  /// Throws InputError on non-positive caps or conflicting inputs.
  void validate() const;
  EvalOptions eval_options() const;
};

/// Diagrams named by the input source: the inline PD, each file, or the
/// shipped fixtures when neither is given.
std::vector<LinkDiagram> resolve_inputs(const RunConfig& config);

/// Text file: one PD per non-blank line, optionally "name: PD", '#' starts a
/// comment. A file whose first character is '{' is read as a fixture file.
std::vector<LinkDiagram> read_input_file(const std::string& path);

int cmd_bracket(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_cjones(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_tail(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_adequacy(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Colored state decomposition of J~_n: alpha degree and lowest degree of
/// <Upsilon(s)> per state, and whether the states sum back to J~_n.
int cmd_states(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand and maps exceptions to exit codes.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs. Usage errors exit 2.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace skeinlab::cli
