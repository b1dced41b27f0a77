#include "feq/solved.h"

#include <gtest/gtest.h>

#include "../support/generators.h"
#include "feq/error.h"
#include "feq/parser.h"

namespace feq {
namespace {

Polynomial P(const std::string& text) { return to_polynomial(parse_expression(text)); }
Formula F(const std::string& text) { return parse_formula(text); }

Assignment values(std::map<std::string, Rational> v, std::set<std::string> free = {}) {
  Assignment a;
  a.values = std::move(v);
  a.free = std::move(free);
  return a;
}

SolvedForm solve(std::vector<Formula> formulas, std::vector<std::string> coefficients) {
  return to_solved_form(formulas, coefficients);
}

const Rational one(1), zero(0);

TEST(SolvedForm, Eq1) {
  const CoefficientConstraint c{{P("a"), P("a - b"), P("b")}};
  const SolvedForm sf = to_solved_form(c, std::vector<std::string>{"a", "b"});
  EXPECT_EQ(sf, SolvedForm{{values({{"a", zero}, {"b", zero}})}});
  EXPECT_EQ(to_string(sf), "{a = 0, b = 0}");
}

TEST(SolvedForm, U3LeavesBFree) {
  const SolvedForm sf = to_solved_form(CoefficientConstraint{{P("a - 1")}}, std::vector<std::string>{"a", "b"});
  EXPECT_EQ(sf, SolvedForm{{values({{"a", one}}, {"b"})}});
  EXPECT_EQ(to_string(sf), "{a = 1, b ∈ ℝ}");
}

TEST(SolvedForm, U91Constraint) {
  const CoefficientConstraint c{{P("a - 1"), P("a^2 - a"), P("b^2 - b"), P("a*b - b")}};
  const SolvedForm sf = to_solved_form(c, std::vector<std::string>{"a", "b"});
  EXPECT_EQ(sf, (SolvedForm{{values({{"a", one}, {"b", zero}}), values({{"a", one}, {"b", one}})}}));
}

TEST(SolvedForm, U91TarskiFormula) {
  const Formula tarski = F("-1+a = 0 \\land b\\geq 0 \\land -1+b\\leq 0 \\land (b=0 \\lor -1+b = 0)");
  const SolvedForm sf = solve({tarski}, {"a", "b"});
  EXPECT_EQ(sf, (SolvedForm{{values({{"a", one}, {"b", zero}}), values({{"a", one}, {"b", one}})}}));
}

TEST(SolvedForm, TwoRootsBranch) {
  const SolvedForm sf = solve({F("a^2 = 1")}, {"a"});
  EXPECT_EQ(sf, (SolvedForm{{values({{"a", one}}), values({{"a", Rational(-1)}})}}));
}

TEST(SolvedForm, ContradictionIsBottom) {
  EXPECT_TRUE(solve({F("a = 1"), F("a = 2")}, {"a"}).is_bottom());
  EXPECT_TRUE(solve({F("a^2 = -1")}, {"a"}).is_bottom());
  EXPECT_TRUE(solve({F("a = 1"), F("a > 1")}, {"a"}).is_bottom());
  EXPECT_EQ(to_string(SolvedForm{}), "false");
}

TEST(SolvedForm, FailureCases) {
  EXPECT_THROW(solve({F("c^3 = 1")}, {"c"}), NoSolvedForm);
  EXPECT_THROW(solve({F("2*c + d = 2"), F("c + d = 1")}, {"c", "d"}), NoSolvedForm);
  EXPECT_THROW(solve({F("c^2 = 2")}, {"c"}), NoSolvedForm);
  EXPECT_THROW(solve({F("c != 1")}, {"c"}), NoSolvedForm);
  EXPECT_THROW(solve({F("c > 0")}, {"c"}), NoSolvedForm);
}

TEST(SolvedForm, LinearPair) {
  const SolvedForm sf = solve({F("c + 2*d = 5"), F("c + d = 3")}, {"c", "d"});
  EXPECT_EQ(sf, SolvedForm{{values({{"c", one}, {"d", Rational(2)}})}});
}

TEST(Step, CaseOneDropsTrueEquation) {
  PostState s;
  s.equations = {{parse_expression("1 + 1"), parse_expression("2")}};
  const StepOutcome o = step_equation(s);
  ASSERT_EQ(o.kind, StepOutcome::Kind::Continue);
  EXPECT_TRUE(o.states[0].equations.empty());
  s.equations = {{parse_expression("1"), parse_expression("2")}};
  EXPECT_EQ(step_equation(s).kind, StepOutcome::Kind::Bottom);
}

TEST(Step, CaseTwoAssigns) {
  PostState s;
  s.assignment = {{"a", Rational(3)}};
  s.equations = {{parse_expression("b"), parse_expression("a - 1")}};
  const StepOutcome o = step_equation(s);
  ASSERT_EQ(o.kind, StepOutcome::Kind::Continue);
  EXPECT_EQ(o.states[0].assignment.at("b"), Rational(2));
}

TEST(Step, CaseThreeBranches) {
  PostState s;
  s.equations = {{parse_expression("b^2 - b"), parse_expression("0")}};
  const StepOutcome o = step_equation(s);
  ASSERT_EQ(o.kind, StepOutcome::Kind::Branch);
  ASSERT_EQ(o.states.size(), 2u);
  EXPECT_EQ(o.states[0].assignment.at("b"), zero);
  EXPECT_EQ(o.states[1].assignment.at("b"), one);
}

TEST(Step, CaseThreeUsesAssignment) {
  PostState s;
  s.assignment = {{"a", Rational(2)}};
  s.equations = {{parse_expression("a*c + 1"), parse_expression("7")}};
  const StepOutcome o = step_equation(s);
  ASSERT_EQ(o.kind, StepOutcome::Kind::Continue);
  EXPECT_EQ(o.states[0].assignment.at("c"), Rational(3));
}

TEST(Step, NoCaseApplies) {
  PostState s;
  s.equations = {{parse_expression("c*d"), parse_expression("1")}};
  EXPECT_THROW(step_equation(s), NoSolvedForm);
}

TEST(Univariate, Roots) {
  EXPECT_EQ(solve_univariate(P("b^2 - b")), (std::vector<Rational>{zero, one}));
  EXPECT_EQ(solve_univariate(P("a^2 - 1")), (std::vector<Rational>{one, Rational(-1)}));
  EXPECT_EQ(solve_univariate(P("4*a^2 + 4*a + 1")), (std::vector<Rational>{Rational(-1, 2)}));
  EXPECT_EQ(solve_univariate(P("3*c + 2")), (std::vector<Rational>{Rational(-2, 3)}));
  EXPECT_EQ(solve_univariate(P("c^2 + 1")), std::vector<Rational>{});
  EXPECT_FALSE(solve_univariate(P("c^2 - 2")).has_value());
  EXPECT_THROW(solve_univariate(P("a*b")), std::invalid_argument);
}

TEST(Finalize, OrderingLiterals) {
  PostState s;
  s.assignment = {{"a", Rational(2)}};
  s.others = {F("a > 1")};
  EXPECT_EQ(finalize(s, std::vector<std::string>{"a", "b"}), SolvedForm{{values({{"a", Rational(2)}}, {"b"})}});
  s.others = {F("a <= 1")};
  EXPECT_TRUE(finalize(s, std::vector<std::string>{"a"}).is_bottom());
  s.others = {F("b <= 1")};
  EXPECT_THROW(finalize(s, std::vector<std::string>{"a", "b"}), NoSolvedForm);
}

// Every point of a grid over c, d is admitted by the solved form exactly when
// it satisfies the input constraint.
TEST(SolvedForm, AgreesWithBruteForce) {
  testing::Gen g(11);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const std::vector<Formula> parts = testing::solvable_constraint(g);
    SolvedForm sf;
    ASSERT_NO_THROW(sf = solve(parts, {"c", "d"})) << "case " << i;
    std::set<Rational> grid;
    for (long v = -3; v <= 3; ++v) grid.insert(Rational(v));
    for (const Assignment& a : sf.disjuncts) {
      for (const auto& [name, value] : a.values) grid.insert(value);
    }
    for (const Rational& c : grid) {
      for (const Rational& d : grid) {
        const Environment point{{"c", c}, {"d", d}};
        bool expected = true;
        for (const Formula& f : parts) expected = expected && testing::eval_formula(f, point);
        bool admitted = false;
        for (const Assignment& a : sf.disjuncts) admitted = admitted || testing::admits(a, point);
        ASSERT_EQ(admitted, expected) << "case " << i << " at c=" << c.to_string() << " d=" << d.to_string();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 200 * 49 - 1);
}

TEST(SolvedForm, Deterministic) {
  testing::Gen g(12);
  for (int i = 0; i < 50; ++i) {
    const auto parts = testing::solvable_constraint(g);
    EXPECT_EQ(solve(parts, {"c", "d"}), solve(parts, {"c", "d"}));
  }
}

}  // namespace
}  // namespace feq
