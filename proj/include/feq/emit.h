#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "feq/expr.h"
#include "feq/formula.h"
#include "feq/problem.h"
#include "feq/sexpr.h"
#include "feq/solved.h"
#include "feq/template.h"

namespace feq {

enum class QueryKind { Find, Prove, Check, TemplateVerification, Uniqueness };

std::string_view query_kind_name(QueryKind k);

/// An SMT-LIB2 script in logic AUFNIRA with f : Real -> Real and a single check-sat.
struct Smt2Query {
  QueryKind kind = QueryKind::Find;
  std::string problem;
  std::size_t index = 0;  // 1-based candidate number for Check
  TemplateKind tmpl = TemplateKind::Constant;  // TemplateVerification and Uniqueness
  Variant variant = Variant::First;  // TemplateVerification
  std::string logic = "AUFNIRA";
  std::vector<SExpr> commands;
  std::string text;

  /// "sat" for Find, "unsat" otherwise.
  std::string_view expected() const;
  std::string file_name() const;
};

struct EmitOptions {
  /// Substitute the candidate for f in check queries instead of asserting its identity.
  bool inline_check = false;
  /// Also write the sectioned unit-equality format next to the TPTP file.
  bool legacy_uniteq = false;
};

/// Expression and formula rendering. Rational literals are written as decimals,
/// e.g. 2.0, (- 3.0) and (/ 1.0 2.0); powers are expanded into products.
SExpr smt_term(const Expr& e);
SExpr smt_formula(const Formula& f);

Smt2Query emit_find(const Problem& p);
/// Assertions together with the negation of every bundled candidate identity.
Smt2Query emit_prove(const Problem& p);
/// Candidate identity (parameters as declared constants) together with the negated assertions.
Smt2Query emit_check(const Problem& p, std::size_t index, const EmitOptions& options = {});
Smt2Query emit_template_verification(const Problem& p, TemplateKind t, Variant variant);
/// Assertions with the negation of every identity induced by the solved
/// form under template t. nullopt for an empty solved form.
std::optional<Smt2Query> emit_uniqueness(const Problem& p, TemplateKind t, const SolvedForm& sf);

/// exists params . (bounds and forall x . f(x) = body)
Formula candidate_formula(const SolutionCandidate& s);
/// negated(disjunction of candidate_formula), shared by prove and uniqueness queries.
Formula none_of(const std::vector<SolutionCandidate>& candidates);

/// Universally quantified equation lhs = rhs over vars.
struct UnitEquation {
  std::string name;
  Expr lhs, rhs;
  std::vector<std::string> vars;
};

/// Unit-equality encoding over the sort R with 0, 1, d, +, -, * axiomatised as
/// a commutative ring with identity.
struct UnitEqTask {
  std::string problem;
  TemplateKind tmpl = TemplateKind::Constant;
  std::vector<UnitEquation> axioms;
  std::vector<UnitEquation> hypotheses;
  UnitEquation goal;

  /// TPTP CNF; the goal appears as a negated_conjecture disequation.
  std::string tptp() const;
  /// NAME/MODE/SORTS/SIGNATURE/ORDERING/VARIABLES/EQUATIONS/CONCLUSION sections.
  std::string legacy() const;
  std::string file_name() const;         // <problem>.<template>.p
  std::string legacy_file_name() const;  // <problem>.<template>.pr
};

/// Empty when eligible, otherwise the reason.
std::optional<std::string> uniteq_ineligibility(const Problem& p);
/// Throws NotUnitEquational when p is ineligible.
UnitEqTask emit_uniteq(const Problem& p, TemplateKind t);

/// Ring term rendering: integers as sums of ones, constants zero/one/d,
/// function symbols plus/times/neg/f. Variables render through var_name.
std::string ring_term(const Expr& e, const std::function<std::string(const std::string&)>& var_name);

}  // namespace feq
