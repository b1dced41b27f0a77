#include "feq/template.h"

#include <gtest/gtest.h>

#include "../support/generators.h"
#include "feq/error.h"
#include "feq/parser.h"

namespace feq {
namespace {

const std::vector<Problem>& corpus() {
  static const std::vector<Problem> problems = load_corpus();
  return problems;
}
const Problem& problem(const char* name) { return *find_problem(corpus(), name); }
Polynomial P(const std::string& text) { return to_polynomial(parse_expression(text)); }

// Evaluates an expression with f interpreted numerically as the template body;
// independent of inline_function.
Rational eval_with(const Expr& e, const Environment& env, const Template& t) {
  switch (e.kind()) {
    case ExprKind::Apply: {
      Environment inner = env;
      inner["#"] = eval_with(e.child(), env, t);
      return eval(t.body(Expr::variable("#")), inner);
    }
    case ExprKind::Sum: {
      Rational s;
      for (const Expr& c : e.children()) s += eval_with(c, env, t);
      return s;
    }
    case ExprKind::Product: {
      Rational s(1);
      for (const Expr& c : e.children()) s *= eval_with(c, env, t);
      return s;
    }
    case ExprKind::Negation: return -eval_with(e.child(), env, t);
    case ExprKind::Power: return eval_with(e.child(), env, t).pow(e.exponent());
    default: return eval(e, env);
  }
}

TEST(Template, Catalogue) {
  EXPECT_EQ(get_template(TemplateKind::Constant).coefficients, (std::vector<std::string>{"c"}));
  EXPECT_EQ(get_template(TemplateKind::Linear).coefficients, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(get_template(TemplateKind::Quadratic).coefficients, (std::vector<std::string>{"a", "b", "c"}));
  const Expr x = Expr::variable("x");
  EXPECT_EQ(to_polynomial(get_template(TemplateKind::MonomialQuadratic).body(x)), P("a*x^2"));
  EXPECT_EQ(to_polynomial(get_template(TemplateKind::Quadratic).body(x)), P("a*x^2 + b*x + c"));
  const std::vector<TemplateKind> order(template_order().begin(), template_order().end());
  EXPECT_EQ(order, (std::vector<TemplateKind>{TemplateKind::Constant, TemplateKind::MonomialLinear,
                                              TemplateKind::MonomialQuadratic, TemplateKind::Linear,
                                              TemplateKind::Quadratic}));
  for (TemplateKind k : order) EXPECT_EQ(parse_template_name(template_name(k)), k);
  EXPECT_FALSE(parse_template_name("cubic").has_value());
}

TEST(Inline, Eq1Linear) {
  const auto inlined = inline_template(problem("Eq1"), get_template(TemplateKind::Linear));
  ASSERT_EQ(inlined.size(), 1u);
  EXPECT_EQ(inlined[0], P("a*x + a*y + b - 2*a*x*y - b*x - b*y"));
}

TEST(Inline, U24Constant) {
  const auto inlined = inline_template(problem("U24"), get_template(TemplateKind::Constant));
  EXPECT_EQ(inlined[0], P("c"));
}

TEST(Inline, C12Linear) {
  const auto inlined = inline_template(problem("C12"), get_template(TemplateKind::Linear));
  EXPECT_EQ(inlined[0], P("a*x^2 + a^2*y + a*b + b - y - a^2*x^2 - 2*a*b*x - b^2"));
}

TEST(Inline, RejectsUnsupportedFragment) {
  EXPECT_THROW(inline_template(problem("U2"), get_template(TemplateKind::Linear)), UnsupportedFragment);
}

TEST(Membership, SecondVariantIdentities) {
  const Formula linear = membership_formula(get_template(TemplateKind::Linear), Variant::Second);
  EXPECT_EQ(linear, parse_formula("forall x . f(x) = (f(1) - f(0))*x + f(0)"));
  const Formula mquad = membership_formula(get_template(TemplateKind::MonomialQuadratic), Variant::Second);
  EXPECT_EQ(mquad, parse_formula("forall x . f(x) = f(1)*x^2"));
  const Formula quad = membership_formula(get_template(TemplateKind::Quadratic), Variant::Second);
  EXPECT_EQ(quad, parse_formula("forall x . 2*f(x) = ((f(1) + f(-1)) - 2*f(0))*x^2 + (f(1) - f(-1))*x + 2*f(0)"));
  EXPECT_EQ(membership_formula(get_template(TemplateKind::Constant), Variant::Second),
            parse_formula("forall x . f(x) = f(0)"));
  EXPECT_EQ(membership_formula(get_template(TemplateKind::MonomialLinear), Variant::Second),
            parse_formula("forall x . f(x) = f(1)*x"));
}

TEST(Membership, FirstVariantIsExistential) {
  const Formula constant = membership_formula(get_template(TemplateKind::Constant), Variant::First);
  ASSERT_EQ(constant.kind(), FormulaKind::Exists);
  EXPECT_EQ(constant.vars(), (std::vector<std::string>{"c"}));
  EXPECT_EQ(constant.body(), Formula::forall({"x"}, Formula::equation(Expr::apply(Expr::variable("x")),
                                                                      Expr::coefficient("c"))));
}

TEST(Obligation, LinearFirstVariant) {
  const Problem& eq1 = problem("Eq1");
  const auto ob = verification_obligation(eq1, get_template(TemplateKind::Linear), Variant::First);
  ASSERT_EQ(ob.assertions.size(), 2u);
  EXPECT_EQ(ob.assertions[0], eq1.equations[0].to_formula());
  EXPECT_EQ(ob.assertions[1],
            Formula::negation(membership_formula(get_template(TemplateKind::Linear), Variant::First)));
}

TEST(Obligation, SecondVariantWitness) {
  const auto ob = verification_obligation(problem("U91"), get_template(TemplateKind::Linear), Variant::Second);
  EXPECT_EQ(ob.assertions.back(), parse_formula("exists x . f(x) != (f(1) - f(0))*x + f(0)"));
  const auto constant =
      verification_obligation(problem("U91"), get_template(TemplateKind::Constant), Variant::Second);
  EXPECT_EQ(constant.assertions.back(), parse_formula("exists x . f(x) != f(0)"));
}

// A smaller template's body satisfies the larger template's identity.
TEST(Membership, Subsumption) {
  const std::pair<TemplateKind, TemplateKind> pairs[] = {
      {TemplateKind::Constant, TemplateKind::Linear},         {TemplateKind::MonomialLinear, TemplateKind::Linear},
      {TemplateKind::Linear, TemplateKind::Quadratic},        {TemplateKind::MonomialQuadratic, TemplateKind::Quadratic},
      {TemplateKind::Constant, TemplateKind::Quadratic},
  };
  for (auto [small, large] : pairs) {
    const Template& t = get_template(small);
    const auto [lhs, rhs] = characteristic_identity(large, Expr::variable("x"));
    const Expr body = t.body(Expr::variable("#"));
    const Polynomial diff =
        to_polynomial(inline_function(lhs, "#", body)) - to_polynomial(inline_function(rhs, "#", body));
    EXPECT_TRUE(diff.is_zero()) << template_name(small) << " in " << template_name(large);
  }
  // Not the other way round.
  const auto [lhs, rhs] = characteristic_identity(TemplateKind::Constant, Expr::variable("x"));
  const Expr linear = get_template(TemplateKind::Linear).body(Expr::variable("#"));
  EXPECT_FALSE((to_polynomial(inline_function(lhs, "#", linear)) - to_polynomial(inline_function(rhs, "#", linear)))
                   .is_zero());
}

// The inlined polynomial vanishes exactly where the equation holds under f := body.
TEST(Inline, SoundAtRandomPoints) {
  testing::Gen g(31);
  for (const Problem& p : corpus()) {
    if (!classify_fragment(p).equational) continue;
    for (TemplateKind k : template_order()) {
      const Template& t = get_template(k);
      const auto inlined = inline_template(p, t);
      for (int i = 0; i < 100; ++i) {
        std::set<std::string> names(t.coefficients.begin(), t.coefficients.end());
        for (const auto& v : p.variables()) names.insert(v);
        const Environment env = g.environment(names);
        for (std::size_t e = 0; e < p.equations.size(); ++e) {
          const Rational direct = eval_with(p.equations[e].lhs, env, t) - eval_with(p.equations[e].rhs, env, t);
          ASSERT_EQ(inlined[e].eval(env), direct) << p.name << " " << template_name(k);
        }
      }
    }
  }
}

TEST(Instantiate, FreeCoefficientsBecomeParameters) {
  Assignment a;
  a.values = {{"a", Rational(1)}};
  a.free = {"b"};
  const SolutionCandidate s = instantiate(get_template(TemplateKind::Linear), a);
  EXPECT_EQ(to_polynomial(s.body), P("x + b"));
  ASSERT_EQ(s.params.size(), 1u);
  EXPECT_EQ(s.params[0].name, "b");
  EXPECT_TRUE(fits_template(s, TemplateKind::Linear));
  EXPECT_FALSE(fits_template(s, TemplateKind::MonomialLinear));
  EXPECT_TRUE(fits_template(s, TemplateKind::Quadratic));
}

TEST(Instantiate, CompleteAssignment) {
  Assignment a;
  a.values = {{"a", Rational(-1)}, {"b", Rational(0)}, {"c", Rational(3)}};
  const SolutionCandidate s = instantiate(get_template(TemplateKind::Quadratic), a);
  EXPECT_EQ(to_polynomial(s.body), P("-x^2 + 3"));
  EXPECT_TRUE(s.params.empty());
  EXPECT_FALSE(fits_template(s, TemplateKind::MonomialQuadratic));
}

}  // namespace
}  // namespace feq
