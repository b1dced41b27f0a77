#pragma once

#include <set>
#include <string>
#include <string_view>

#include "feq/expr.h"
#include "feq/formula.h"
#include "feq/problem.h"

namespace feq {

/// Parses one problem file. Throws SyntaxError, UnknownIdentifier,
/// UnboundVariable, or UnsupportedFragment (for division).
///
///   problem U3
///   domain Real
///   function f : Real -> Real
///   condition increasing
///   assert forall x y . f(x+y) = f(x) + y
///   solution f(x) = x + b  param b : Real
Problem parse_problem(std::string_view text);

/// Inverse of parse_problem up to layout and comments.
std::string print_problem(const Problem& p);

/// Identifiers listed in `variables` become variables, any other identifier a
/// coefficient symbol. `f(...)` is the unknown function.
Expr parse_expression(std::string_view text, const std::set<std::string>& variables = {});

/// Formula syntax with ASCII, Unicode or LaTeX connectives, e.g.
/// "-1+a = 0 /\ b >= 0", "b=0 ∨ −1+b = 0", "a = 1 \land b \geq 0".
/// Quantified identifiers become variables; all others coefficient symbols.
Formula parse_formula(std::string_view text);

}  // namespace feq
