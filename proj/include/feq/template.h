#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "feq/expr.h"
#include "feq/formula.h"
#include "feq/poly.h"
#include "feq/problem.h"
#include "feq/solved.h"

namespace feq {

enum class TemplateKind { Constant, MonomialLinear, Linear, MonomialQuadratic, Quadratic };
enum class Variant { First, Second };

/// Polynomial shape for f with named coefficients:
/// c | a*x | a*x + b | a*x^2 | a*x^2 + b*x + c.
struct Template {
  TemplateKind kind;
  std::vector<std::string> coefficients;

  Expr body(const Expr& argument) const;
};

const Template& get_template(TemplateKind kind);

/// Smallest class first: constant, monomial linear, monomial quadratic, linear, quadratic.
std::span<const TemplateKind> template_order();

/// Short names used on the command line and in file names.
std::string_view template_name(TemplateKind kind);
std::optional<TemplateKind> parse_template_name(std::string_view name);
/// Column headings: c, ax, ax+b, ax^2, ax^2+bx+c.
std::string_view template_shape(TemplateKind kind);
std::string_view variant_name(Variant v);

/// Replaces every f(u) by the template body at u (innermost first) and returns
/// lhs - rhs of each equation as a polynomial over the problem variables and
/// the template coefficients. Throws UnsupportedFragment outside the equational fragment.
std::vector<Polynomial> inline_template(const Problem& p, const Template& t);

/// The coefficient-free identity lhs = rhs in x characterising the class
/// through f(0), f(1) and f(-1).
std::pair<Expr, Expr> characteristic_identity(TemplateKind kind, const Expr& x);

/// First variant: exists coefficients . forall x . f(x) = body(x).
/// Second variant: the coefficient-free characterisation through f(0), f(1), f(-1).
Formula membership_formula(const Template& t, Variant variant);

/// Negation of membership_formula. The second variant is given in prenex form
/// with the witness x existentially bound.
Formula negated_membership(const Template& t, Variant variant);

/// Problem assertions together with the negated membership formula. An
/// unsatisfiable obligation shows that every solution fits the template.
struct VerificationObligation {
  std::string problem;
  TemplateKind kind;
  Variant variant;
  std::vector<Formula> assertions;

  Formula formula() const { return Formula::conjunction(assertions); }
};

VerificationObligation verification_obligation(const Problem& p, const Template& t, Variant variant);

/// The solution function described by one disjunct of a solved form; free
/// coefficients become unconstrained parameters.
SolutionCandidate instantiate(const Template& t, const Assignment& assignment);

/// True iff the candidate lies in the template class for every parameter value.
bool fits_template(const SolutionCandidate& s, TemplateKind kind);

}  // namespace feq
