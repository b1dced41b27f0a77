#include "feq/template.h"

#include <algorithm>
#include <array>

#include "feq/error.h"

namespace feq {

namespace {

Expr coef(const char* name) { return Expr::coefficient(name); }
Expr num(long n) { return Expr::constant(Rational(n)); }
Expr f(const Expr& argument) { return Expr::apply(argument); }

const std::array<Template, 5>& catalogue() {
  static const std::array<Template, 5> templates{{
      {TemplateKind::Constant, {"c"}},
      {TemplateKind::MonomialLinear, {"a"}},
      {TemplateKind::Linear, {"a", "b"}},
      {TemplateKind::MonomialQuadratic, {"a"}},
      {TemplateKind::Quadratic, {"a", "b", "c"}},
  }};
  return templates;
}

constexpr std::array<TemplateKind, 5> kOrder{TemplateKind::Constant, TemplateKind::MonomialLinear,
                                             TemplateKind::MonomialQuadratic, TemplateKind::Linear,
                                             TemplateKind::Quadratic};

}  // namespace

Expr Template::body(const Expr& argument) const {
  switch (kind) {
    case TemplateKind::Constant: return coef("c");
    case TemplateKind::MonomialLinear: return coef("a") * argument;
    case TemplateKind::Linear: return coef("a") * argument + coef("b");
    case TemplateKind::MonomialQuadratic: return coef("a") * Expr::power(argument, 2);
    case TemplateKind::Quadratic:
      return Expr::sum({coef("a") * Expr::power(argument, 2), coef("b") * argument, coef("c")});
  }
  return coef("c");
}

const Template& get_template(TemplateKind kind) { return catalogue()[static_cast<std::size_t>(kind)]; }

std::span<const TemplateKind> template_order() { return kOrder; }

std::string_view template_name(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::Constant: return "constant";
    case TemplateKind::MonomialLinear: return "mlinear";
    case TemplateKind::Linear: return "linear";
    case TemplateKind::MonomialQuadratic: return "mquad";
    case TemplateKind::Quadratic: return "quad";
  }
  return "?";
}

std::optional<TemplateKind> parse_template_name(std::string_view name) {
  for (TemplateKind k : kOrder) {
    if (template_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view template_shape(TemplateKind kind) {
  switch (kind) {
    case TemplateKind::Constant: return "c";
    case TemplateKind::MonomialLinear: return "ax";
    case TemplateKind::Linear: return "ax+b";
    case TemplateKind::MonomialQuadratic: return "ax^2";
    case TemplateKind::Quadratic: return "ax^2+bx+c";
  }
  return "?";
}

std::string_view variant_name(Variant v) { return v == Variant::First ? "first" : "second"; }

std::vector<Polynomial> inline_template(const Problem& p, const Template& t) {
  if (const Fragment fr = classify_fragment(p); !fr.equational) throw UnsupportedFragment(fr.reason);
  const std::string parameter = "#arg";
  const Expr body = t.body(Expr::variable(parameter));
  std::vector<Polynomial> out;
  for (const auto& eq : p.equations) {
    const Expr lhs = inline_function(eq.lhs, parameter, body);
    const Expr rhs = inline_function(eq.rhs, parameter, body);
    out.push_back(to_polynomial(lhs) - to_polynomial(rhs));
  }
  return out;
}

std::pair<Expr, Expr> characteristic_identity(TemplateKind kind, const Expr& x) {
  switch (kind) {
    case TemplateKind::Constant: return {f(x), f(num(0))};
    case TemplateKind::MonomialLinear: return {f(x), f(num(1)) * x};
    case TemplateKind::Linear: return {f(x), (f(num(1)) - f(num(0))) * x + f(num(0))};
    case TemplateKind::MonomialQuadratic: return {f(x), f(num(1)) * Expr::power(x, 2)};
    case TemplateKind::Quadratic: {
      const Expr f_minus_one = f(num(-1));
      return {num(2) * f(x),
              Expr::sum({(f(num(1)) + f_minus_one - num(2) * f(num(0))) * Expr::power(x, 2),
                         (f(num(1)) - f_minus_one) * x, num(2) * f(num(0))})};
    }
  }
  return {f(x), f(x)};
}

Formula membership_formula(const Template& t, Variant variant) {
  const Expr x = Expr::variable("x");
  if (variant == Variant::First)
    return Formula::exists(t.coefficients, Formula::forall({"x"}, Formula::equation(f(x), t.body(x))));
  auto [lhs, rhs] = characteristic_identity(t.kind, x);
  return Formula::forall({"x"}, Formula::equation(lhs, rhs));
}

Formula negated_membership(const Template& t, Variant variant) {
  if (variant == Variant::First) return Formula::negation(membership_formula(t, variant));
  auto [lhs, rhs] = characteristic_identity(t.kind, Expr::variable("x"));
  return Formula::exists({"x"}, Formula::atom(Relation::Ne, lhs, rhs));
}

VerificationObligation verification_obligation(const Problem& p, const Template& t, Variant variant) {
  VerificationObligation ob{p.name, t.kind, variant, p.assertions()};
  ob.assertions.push_back(negated_membership(t, variant));
  return ob;
}

SolutionCandidate instantiate(const Template& t, const Assignment& assignment) {
  SolutionCandidate s;
  s.var = "x";
  Binding binding;
  for (const auto& [name, value] : assignment.values) binding.emplace(name, Expr::constant(value));
  const Expr body = substitute(t.body(Expr::variable("x")), binding);
  s.body = to_expr(to_polynomial(body), {"x"});
  for (const auto& name : t.coefficients) {
    if (assignment.free.count(name)) s.params.push_back({name, std::nullopt, Rational()});
  }
  return s;
}

bool fits_template(const SolutionCandidate& s, TemplateKind kind) {
  std::vector<unsigned> allowed;
  switch (kind) {
    case TemplateKind::Constant: allowed = {0}; break;
    case TemplateKind::MonomialLinear: allowed = {1}; break;
    case TemplateKind::Linear: allowed = {0, 1}; break;
    case TemplateKind::MonomialQuadratic: allowed = {2}; break;
    case TemplateKind::Quadratic: allowed = {0, 1, 2}; break;
  }
  for (const auto& [m, c] : coefficients_wrt(to_polynomial(s.body), {s.var})) {
    if (std::find(allowed.begin(), allowed.end(), m.degree()) == allowed.end()) return false;
  }
  return true;
}

}  // namespace feq
