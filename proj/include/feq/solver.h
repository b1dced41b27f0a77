#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace feq {

enum class SolverAnswer { Sat, Unsat, Unknown, Timeout };

std::string_view answer_name(SolverAnswer a);

/// Which query files a command accepts.
enum class SolverInput { Smt2, UnitEq };

/// An external command. The token {file} in argv is replaced by the query file;
/// without it the file is appended as the last argument.
struct SolverCommand {
  std::string name;
  std::vector<std::string> argv;
  SolverInput input = SolverInput::Smt2;
};

/// Output tokens mapped to answers. The first whitespace-separated token of the
/// output found in one of the lists decides.
struct AnswerTokens {
  std::vector<std::string> sat{"sat", "Satisfiable", "CounterSatisfiable"};
  std::vector<std::string> unsat{"unsat", "Unsatisfiable", "Theorem", "proved"};
  std::vector<std::string> unknown{"unknown", "GaveUp", "Unknown"};
};

struct SolverConfig {
  std::vector<SolverCommand> solvers;
  double timeout_seconds = 60;
  AnswerTokens tokens;

  bool has(SolverInput input) const;
  /// Throws Error when the timeout is not positive or a command is empty.
  void validate() const;
};

/// "NAME=CMD ARGS..." as given on the command line. Arguments split on
/// whitespace; single or double quotes group.
SolverCommand parse_solver_spec(std::string_view spec, SolverInput input = SolverInput::Smt2);

/// Key-value text, one `key = value` per line, `#` comments:
///   timeout = SECS
///   smt2.NAME = CMD ARGS...
///   uniteq.NAME = CMD ARGS...
///   answer.sat / answer.unsat / answer.unknown = TOKENS...
SolverConfig parse_solver_config(std::string_view text);
SolverConfig load_solver_config(const std::filesystem::path& path);

/// Locates an executable: names containing '/' are used as given, otherwise
/// the directories of FEQ_SOLVER_PATH are searched before those of PATH.
std::optional<std::filesystem::path> find_executable(const std::string& name);

SolverAnswer parse_answer(std::string_view output, const AnswerTokens& tokens);

struct SolveResult {
  SolverAnswer answer = SolverAnswer::Unknown;
  std::string solver;
  std::string diagnostic;
  double seconds = 0;
};

/// Writes text to a temporary file with the given extension, runs the command
/// on it and parses its combined stdout/stderr. Exceeding the timeout kills the
/// process group and yields Timeout; a missing binary or unrecognised output
/// yields Unknown with a diagnostic.
SolveResult external_solve(std::string_view text, std::string_view extension, const SolverCommand& command,
                           const SolverConfig& config);

}  // namespace feq
