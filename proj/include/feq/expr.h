#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "feq/rational.h"

namespace feq {

enum class ExprKind { Constant, Variable, Coefficient, Sum, Product, Negation, Power, Apply };

/// Immutable term over rationals, problem variables, coefficient symbols and the
/// unary unknown function f. Subtraction is a sum with a negated summand.
///
/// Invariants: sums and products have at least two children, power exponents
/// are at least one, and an application has exactly one argument.
class Expr {
 public:
  /// The constant zero.
  Expr();

  static Expr constant(Rational value);
  static Expr variable(std::string name);
  static Expr coefficient(std::string name);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr negation(Expr child);
  static Expr power(Expr base, unsigned exponent);
  static Expr apply(Expr argument);

  ExprKind kind() const;
  const Rational& value() const;              // Constant
  const std::string& name() const;            // Variable, Coefficient
  std::span<const Expr> children() const;     // Sum, Product; single child otherwise
  const Expr& child() const;                  // Negation, Power, Apply
  unsigned exponent() const;                  // Power

  bool is(ExprKind k) const { return kind() == k; }
  bool is_symbol() const { return is(ExprKind::Variable) || is(ExprKind::Coefficient); }

  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Builders used for programmatic construction. They never flatten.
Expr operator+(const Expr& lhs, const Expr& rhs);
Expr operator-(const Expr& lhs, const Expr& rhs);
Expr operator*(const Expr& lhs, const Expr& rhs);
Expr operator-(const Expr& operand);

/// Sum of the terms, collapsing the zero- and one-element cases.
Expr make_sum(std::vector<Expr> terms);
/// Product of the factors, collapsing the zero- and one-element cases.
Expr make_product(std::vector<Expr> factors);

using Binding = std::map<std::string, Expr>;
using Environment = std::map<std::string, Rational>;

/// Simultaneous replacement of variable and coefficient nodes named in the binding.
Expr substitute(const Expr& e, const Binding& binding);

/// Exact value. Throws EvaluationIncomplete for a symbol missing from env and
/// NotInlined if an application of f is present.
Rational eval(const Expr& e, const Environment& env);

/// Replaces every application f(u) by body[parameter := u], innermost first.
Expr inline_function(const Expr& e, const std::string& parameter, const Expr& body);

bool contains_apply(const Expr& e);
std::size_t count_apply(const Expr& e);
std::set<std::string> variables_of(const Expr& e);
std::set<std::string> coefficients_of(const Expr& e);
std::set<std::string> symbols_of(const Expr& e);

/// Infix rendering in the problem language; parsing the output yields the same tree.
std::string to_string(const Expr& e);
std::ostream& operator<<(std::ostream& out, const Expr& e);

}  // namespace feq
