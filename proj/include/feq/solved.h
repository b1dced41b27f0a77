#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "feq/expr.h"
#include "feq/formula.h"
#include "feq/poly.h"
#include "feq/qe.h"

namespace feq {

/// c = v for a template coefficient c.
struct AssignmentAtom {
  std::string coefficient;
  Rational value;

  friend bool operator==(const AssignmentAtom&, const AssignmentAtom&) = default;
};

/// One disjunct of a solved form: assignment atoms plus coefficients left free.
struct Assignment {
  std::map<std::string, Rational> values;
  std::set<std::string> free;

  std::vector<AssignmentAtom> atoms() const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

/// Disjunction of assignments without duplicates; no disjuncts means false.
struct SolvedForm {
  std::vector<Assignment> disjuncts;

  bool is_bottom() const { return disjuncts.empty(); }
  /// Appends unless an identical disjunct is already present.
  void add(Assignment a);
  friend bool operator==(const SolvedForm&, const SolvedForm&) = default;
};

/// Working state of the postprocessor: pending formulas, collected equations
/// s = t, ordering literals, and the assignment built so far.
struct PostState {
  std::vector<Formula> pending;
  std::vector<std::pair<Expr, Expr>> equations;
  std::vector<Formula> others;
  Environment assignment;
};

struct StepOutcome {
  enum class Kind { Continue, Branch, Bottom };
  Kind kind = Kind::Continue;
  /// One state for Continue, one per root for Branch, none for Bottom.
  std::vector<PostState> states;
};

/// Converts a conjunction of quantifier-free formulas over coefficients into a
/// solved form equivalent to it. Coefficients that end up unassigned are free.
/// Throws NoSolvedForm when a formula or equation falls outside the handled shapes.
SolvedForm to_solved_form(std::span<const Formula> formulas, std::span<const std::string> coefficients);

/// Presents each constraint polynomial p as the equation
/// (non-constant part of p) = -(constant term of p).
std::vector<Formula> constraint_formulas(const CoefficientConstraint& c);
SolvedForm to_solved_form(const CoefficientConstraint& c, std::span<const std::string> coefficients);

/// Processes the head equation of state.equations, trying in order:
///  1. both sides evaluate: drop if equal, otherwise bottom;
///  2. the left side is an unassigned coefficient and the right side evaluates;
///  3. after evaluation s - t is a polynomial in a single unassigned coefficient
///     of degree at most two (covering s1 + c, s1 + c*s2 and c^2): solve it,
///     branching on multiple roots; a constant residue is dropped or yields bottom;
///  4. the head is c + s1*d = t and a later equation is c + d = t': solve the pair.
/// Throws NoSolvedForm when no case applies.
StepOutcome step_equation(PostState state);

/// Real roots of a univariate polynomial of degree 1 or 2, ordered by absolute
/// value with the positive root first. nullopt when the roots are irrational;
/// an empty list when there is no real root.
std::optional<std::vector<Rational>> solve_univariate(const Polynomial& p);

/// Evaluates the ordering literals once no equations remain. A literal with an
/// unassigned coefficient throws NoSolvedForm; a false literal yields bottom.
SolvedForm finalize(const PostState& state, std::span<const std::string> coefficients);

std::string to_string(const Assignment& a);
std::string to_string(const SolvedForm& s);

}  // namespace feq
