#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "feq/expr.h"
#include "feq/formula.h"

namespace feq {

enum class Domain { Real, Integer };

/// Universally closed identity lhs = rhs.
struct Equation {
  Expr lhs;
  Expr rhs;
  std::vector<std::string> vars;

  Formula to_formula() const;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// Kept verbatim: either a known marker such as "increasing" or raw SMT-LIB text.
struct SideCondition {
  std::string text;

  bool is_raw() const { return !text.empty() && text.front() == '('; }
  friend bool operator==(const SideCondition&, const SideCondition&) = default;
};

struct Parameter {
  std::string name;
  std::optional<Relation> relation;  // optional range constraint `name relation bound`
  Rational bound;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Handwritten solution f(var) = body; parameters occur in body as coefficient symbols.
struct SolutionCandidate {
  std::string var = "x";
  Expr body;
  std::vector<Parameter> params;

  /// f(var) = body with var universally quantified; parameters stay free.
  Formula identity() const;
  friend bool operator==(const SolutionCandidate&, const SolutionCandidate&) = default;
};

struct Problem {
  std::string name;
  Domain domain = Domain::Real;
  std::vector<Equation> equations;
  std::vector<SideCondition> side_conditions;
  std::vector<SolutionCandidate> solutions;

  /// Every variable quantified somewhere in the problem, sorted.
  std::vector<std::string> variables() const;
  /// Equations followed by side conditions, as closed formulas.
  std::vector<Formula> assertions() const;
  friend bool operator==(const Problem&, const Problem&) = default;
};

struct Fragment {
  bool equational = true;
  std::string reason;
};

/// Equational iff all assertions are equations over the reals. Division and
/// non-rational literals cannot reach a Problem; the parser rejects them.
Fragment classify_fragment(const Problem& p);

/// Known markers: increasing, decreasing, nondecreasing, nonincreasing.
bool is_known_side_condition(std::string_view marker);
Formula side_condition_formula(const SideCondition& condition);

Problem load_problem_file(const std::filesystem::path& path);

/// FEQ_CORPUS if set, otherwise the corpus directory of the source tree.
std::filesystem::path default_corpus_dir();

/// All *.feq files of the directory, sorted by problem name. Throws Error when
/// a file fails to parse or its name differs from the declared problem name.
std::vector<Problem> load_corpus(const std::filesystem::path& dir = default_corpus_dir());

const Problem* find_problem(std::span<const Problem> corpus, std::string_view name);

}  // namespace feq
