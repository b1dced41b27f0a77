#pragma once

#include <functional>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "feq/expr.h"

namespace feq {

enum class Relation { Eq, Ne, Lt, Le, Gt, Ge };

const char* relation_symbol(Relation r);
Relation flip(Relation r);     // a < b  <=>  b > a
Relation negate(Relation r);   // not (a < b)  <=>  a >= b
bool holds(Relation r, const Rational& lhs, const Rational& rhs);

enum class FormulaKind { True, False, Atom, Not, And, Or, Implies, Forall, Exists, Raw };

/// First-order formula over expressions. Raw formulas carry verbatim SMT-LIB text.
class Formula {
 public:
  static Formula truth();
  static Formula falsity();
  static Formula atom(Relation rel, Expr lhs, Expr rhs);
  static Formula equation(Expr lhs, Expr rhs) { return atom(Relation::Eq, std::move(lhs), std::move(rhs)); }
  static Formula negation(Formula child);
  static Formula conjunction(std::vector<Formula> children);
  static Formula disjunction(std::vector<Formula> children);
  static Formula implication(Formula premise, Formula conclusion);
  /// An empty variable list yields the body itself.
  static Formula forall(std::vector<std::string> vars, Formula body);
  static Formula exists(std::vector<std::string> vars, Formula body);
  static Formula raw(std::string smt_text);

  FormulaKind kind() const;
  Relation relation() const;
  const Expr& lhs() const;
  const Expr& rhs() const;
  std::span<const Formula> children() const;
  const Formula& body() const;  // Not, Forall, Exists: the single child
  const std::vector<std::string>& vars() const;
  const std::string& raw_text() const;

  bool is(FormulaKind k) const { return kind() == k; }

  friend bool operator==(const Formula& lhs, const Formula& rhs);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Negation of f pushed through connectives and quantifiers down to the atoms.
/// Raw formulas are wrapped in Not.
Formula negated(const Formula& f);

/// Applies fn to both sides of every atom.
Formula map_terms(const Formula& f, const std::function<Expr(const Expr&)>& fn);

/// Rendering in the formula syntax accepted by parse_formula.
std::string to_string(const Formula& f);
std::ostream& operator<<(std::ostream& out, const Formula& f);

}  // namespace feq
