#include "feq/solver.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "feq/error.h"

extern char** environ;

namespace feq {

std::string_view answer_name(SolverAnswer a) {
  switch (a) {
    case SolverAnswer::Sat: return "sat";
    case SolverAnswer::Unsat: return "unsat";
    case SolverAnswer::Unknown: return "unknown";
    case SolverAnswer::Timeout: return "timeout";
  }
  return "?";
}

bool SolverConfig::has(SolverInput input) const {
  return std::any_of(solvers.begin(), solvers.end(), [&](const SolverCommand& c) { return c.input == input; });
}

void SolverConfig::validate() const {
  if (!(timeout_seconds > 0)) throw Error("solver timeout must be positive");
  for (const auto& s : solvers) {
    if (s.argv.empty()) throw Error("solver '" + s.name + "' has an empty command");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  bool in_word = false;
  char quote = 0;
  for (char ch : text) {
    if (quote) {
      if (ch == quote) {
        quote = 0;
      } else {
        current += ch;
      }
    } else if (ch == '\'' || ch == '"') {
      quote = ch;
      in_word = true;
    } else if (ch == ' ' || ch == '\t') {
      if (in_word) out.push_back(std::move(current));
      current.clear();
      in_word = false;
    } else {
      current += ch;
      in_word = true;
    }
  }
  if (quote) throw Error("unterminated quote in solver command");
  if (in_word) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> path_dirs(const char* variable) {
  std::vector<std::string> out;
  const char* value = std::getenv(variable);
  if (value == nullptr) return out;
  std::stringstream in(value);
  std::string dir;
  while (std::getline(in, dir, ':')) {
    if (!dir.empty()) out.push_back(dir);
  }
  return out;
}

}  // namespace

SolverCommand parse_solver_spec(std::string_view spec, SolverInput input) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) throw Error("solver must be given as NAME=COMMAND");
  SolverCommand c;
  c.name = trim(spec.substr(0, eq));
  c.argv = split_words(spec.substr(eq + 1));
  c.input = input;
  if (c.argv.empty()) throw Error("solver '" + c.name + "' has an empty command");
  return c;
}

SolverConfig parse_solver_config(std::string_view text) {
  SolverConfig config;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("solver config line " + std::to_string(number) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    auto prefixed = [&](std::string_view prefix) { return key.rfind(prefix, 0) == 0 && key.size() > prefix.size(); };
    if (key == "timeout") {
      try {
        config.timeout_seconds = std::stod(value);
      } catch (const std::exception&) {
        throw Error("solver config line " + std::to_string(number) + ": bad timeout '" + value + "'");
      }
    } else if (prefixed("smt2.")) {
      config.solvers.push_back(parse_solver_spec(key.substr(5) + "=" + value, SolverInput::Smt2));
    } else if (prefixed("uniteq.")) {
      config.solvers.push_back(parse_solver_spec(key.substr(7) + "=" + value, SolverInput::UnitEq));
    } else if (key == "answer.sat") {
      config.tokens.sat = split_words(value);
    } else if (key == "answer.unsat") {
      config.tokens.unsat = split_words(value);
    } else if (key == "answer.unknown") {
      config.tokens.unknown = split_words(value);
    } else {
      throw Error("solver config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
  config.validate();
  return config;
}

SolverConfig load_solver_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_solver_config(buffer.str());
}

std::optional<std::filesystem::path> find_executable(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name.find('/') != std::string::npos) {
    if (::access(name.c_str(), X_OK) == 0) return std::filesystem::path(name);
    return std::nullopt;
  }
  std::vector<std::string> dirs = path_dirs("FEQ_SOLVER_PATH");
  for (auto& d : path_dirs("PATH")) dirs.push_back(std::move(d));
  for (const auto& d : dirs) {
    const std::filesystem::path candidate = std::filesystem::path(d) / name;
    std::error_code ec;
    if (std::filesystem::is_regular_file(candidate, ec) && ::access(candidate.c_str(), X_OK) == 0) return candidate;
  }
  return std::nullopt;
}

namespace {

std::optional<SolverAnswer> match_answer(std::string_view output, const AnswerTokens& tokens) {
  std::istringstream in{std::string(output)};
  std::string word;
  auto in_list = [&](const std::vector<std::string>& list) {
    return std::find(list.begin(), list.end(), word) != list.end();
  };
  while (in >> word) {
    if (in_list(tokens.unsat)) return SolverAnswer::Unsat;
    if (in_list(tokens.sat)) return SolverAnswer::Sat;
    if (in_list(tokens.unknown)) return SolverAnswer::Unknown;
  }
  return std::nullopt;
}

}  // namespace

SolverAnswer parse_answer(std::string_view output, const AnswerTokens& tokens) {
  return match_answer(output, tokens).value_or(SolverAnswer::Unknown);
}

namespace {

class TempFile {
 public:
  TempFile(std::string_view text, std::string_view extension) {
    std::string pattern = (std::filesystem::temp_directory_path() / "feq-XXXXXX").string();
    pattern += extension;
    std::vector<char> buffer(pattern.begin(), pattern.end());
    buffer.push_back('\0');
    const int fd = ::mkstemps(buffer.data(), static_cast<int>(extension.size()));
    if (fd < 0) throw Error("cannot create temporary query file");
    path_ = buffer.data();
    std::size_t written = 0;
    while (written < text.size()) {
      const ssize_t n = ::write(fd, text.data() + written, text.size() - written);
      if (n <= 0) {
        ::close(fd);
        throw Error("cannot write temporary query file");
      }
      written += static_cast<std::size_t>(n);
    }
    ::close(fd);
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path_, ec);
  }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

SolveResult external_solve(std::string_view text, std::string_view extension, const SolverCommand& command,
                           const SolverConfig& config) {
  using Clock = std::chrono::steady_clock;
  SolveResult result;
  result.solver = command.name;
  config.validate();
  if (command.argv.empty()) {
    result.diagnostic = "empty command";
    return result;
  }
  const auto executable = find_executable(command.argv.front());
  if (!executable) {
    result.diagnostic = "solver binary not found: " + command.argv.front();
    return result;
  }

  TempFile file(text, extension);
  std::vector<std::string> args = command.argv;
  bool placed = false;
  for (auto& a : args) {
    if (const auto pos = a.find("{file}"); pos != std::string::npos) {
      a.replace(pos, 6, file.path());
      placed = true;
    }
  }
  if (!placed) args.push_back(file.path());
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  argv.push_back(nullptr);

  int fds[2];
  if (::pipe2(fds, O_CLOEXEC) != 0) throw Error("cannot create pipe");
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 0, "/dev/null", O_RDONLY, 0);
  posix_spawn_file_actions_adddup2(&actions, fds[1], 1);
  posix_spawn_file_actions_adddup2(&actions, fds[1], 2);
  posix_spawnattr_t attr;
  posix_spawnattr_init(&attr);
  posix_spawnattr_setflags(&attr, POSIX_SPAWN_SETPGROUP);
  posix_spawnattr_setpgroup(&attr, 0);

  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(config.timeout_seconds));
  pid_t pid = 0;
  const int rc = ::posix_spawn(&pid, executable->c_str(), &actions, &attr, argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  posix_spawnattr_destroy(&attr);
  ::close(fds[1]);
  if (rc != 0) {
    ::close(fds[0]);
    result.diagnostic = "cannot launch " + executable->string();
    return result;
  }

  auto remaining_ms = [&] {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now()).count();
    return static_cast<int>(std::max<long long>(left, 0));
  };
  auto kill_group = [&] {
    ::kill(-pid, SIGKILL);
    ::waitpid(pid, nullptr, 0);
  };

  std::string output;
  bool timed_out = false;
  char buffer[4096];
  for (;;) {
    if (Clock::now() >= deadline) {
      timed_out = true;
      break;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    const int ready = ::poll(&pfd, 1, std::max(remaining_ms(), 1));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) continue;
    const ssize_t n = ::read(fds[0], buffer, sizeof buffer);
    if (n > 0) {
      output.append(buffer, static_cast<std::size_t>(n));
      continue;
    }
    if (n < 0 && errno == EINTR) continue;
    break;  // end of output
  }
  ::close(fds[0]);

  int status = 0;
  if (!timed_out) {
    for (;;) {
      const pid_t done = ::waitpid(pid, &status, WNOHANG);
      if (done == pid) break;
      if (Clock::now() >= deadline) {
        timed_out = true;
        break;
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(1));
    }
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (timed_out) {
    kill_group();
    result.answer = SolverAnswer::Timeout;
    result.diagnostic = "timeout after " + std::to_string(config.timeout_seconds) + " s";
    return result;
  }
  ::kill(-pid, SIGKILL);  // stray descendants

  const auto answer = match_answer(output, config.tokens);
  result.answer = answer.value_or(SolverAnswer::Unknown);
  if (!answer) {
    std::string head = output.substr(0, 200);
    std::replace(head.begin(), head.end(), '\n', ' ');
    result.diagnostic = "no answer in output";
    if (WIFEXITED(status) && WEXITSTATUS(status) != 0)
      result.diagnostic += " (exit status " + std::to_string(WEXITSTATUS(status)) + ")";
    if (!head.empty()) result.diagnostic += ": " + trim(head);
  }
  return result;
}

}  // namespace feq
