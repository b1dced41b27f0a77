#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "feq/emit.h"
#include "feq/problem.h"
#include "feq/qe.h"
#include "feq/solved.h"
#include "feq/solver.h"
#include "feq/template.h"

namespace feq {

enum class Mode { Eager, Lazy };
std::string_view mode_name(Mode m);

/// Shown as ✓, × and - in reports.
enum class TemplateStatus { Proven, Disproven, Unknown };

struct TemplateOutcome {
  TemplateKind kind = TemplateKind::Constant;
  TemplateStatus status = TemplateStatus::Unknown;
  /// Set once inlining, elimination and postprocessing ran for this template.
  std::optional<CoefficientConstraint> constraint;
  std::optional<SolvedForm> solved;
  /// NoSolvedForm reason when postprocessing failed.
  std::string failure;
  /// One instantiated solution per disjunct, with its internal check.
  std::vector<SolutionCandidate> solutions;
  std::vector<bool> checked;
  /// Answers of external solvers on verification or uniqueness queries.
  std::vector<SolveResult> external;
  double seconds = 0;
};

struct CandidateCheck {
  SolutionCandidate candidate;
  /// Internal polynomial identity check; empty outside the equational fragment.
  std::optional<bool> holds;
  std::optional<SolveResult> external;
};

struct PipelineReport {
  std::string problem;
  Mode requested = Mode::Lazy;
  Mode mode = Mode::Lazy;  // after degrading eager runs without solvers
  Fragment fragment;
  std::vector<TemplateOutcome> templates;
  /// Template whose solved form is the answer.
  std::optional<TemplateKind> selected;
  /// Template proven (eager) or uniqueness query unsat (lazy).
  bool verified = false;
  std::vector<CandidateCheck> checks;
  std::optional<SolveResult> prove;
  std::vector<std::string> emitted;
  double seconds = 0;

  const TemplateOutcome* outcome(TemplateKind k) const;
  /// Solved form of the selected template.
  const SolvedForm* solved_form() const;
  std::vector<SolutionCandidate> solutions() const;
};

struct RunOptions {
  Mode mode = Mode::Lazy;
  std::vector<TemplateKind> templates{template_order().begin(), template_order().end()};
  /// Keep going after the first nonempty solved form (lazy) or proven template (eager).
  bool all_templates = false;
  std::optional<std::filesystem::path> emit_dir;
  EmitOptions emit;
  SolverConfig solvers;
};

/// True iff every equation becomes the zero polynomial after f := s, with the
/// parameters of s kept symbolic. Throws UnsupportedFragment outside the
/// equational fragment.
bool check_solution(const Problem& p, const SolutionCandidate& s);

/// Verifies templates smallest-first with the configured solvers and solves the
/// first proven one. Without SMT solvers the run degrades to lazy mode.
PipelineReport run_eager(const Problem& p, const RunOptions& options);

/// Solves each template smallest-first, checks every disjunct and emits (and
/// dispatches, if configured) the uniqueness query. Stops at the first nonempty
/// solved form unless a solver refutes its uniqueness.
PipelineReport run_lazy(const Problem& p, const RunOptions& options);

PipelineReport run(const Problem& p, const RunOptions& options);

/// Runs problems on up to `jobs` threads; results keep the input order.
std::vector<PipelineReport> run_all(std::span<const Problem> problems, const RunOptions& options,
                                    unsigned jobs = 0);

/// "f(x) = x + b, b ∈ ℝ" style rendering.
std::string describe(const SolutionCandidate& s);

}  // namespace feq
