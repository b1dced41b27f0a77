#include "feq/emit.h"

#include <gtest/gtest.h>

#include <algorithm>

#include "feq/error.h"
#include "feq/parser.h"
#include "feq/runner.h"
#include "feq/sexpr.h"

namespace feq {
namespace {

const std::vector<Problem>& corpus() {
  static const std::vector<Problem> problems = load_corpus();
  return problems;
}
const Problem& problem(const char* name) { return *find_problem(corpus(), name); }

std::string squash(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\n' && ch != '\t') out += ch;
  }
  return out;
}

bool contains(const std::string& text, const std::string& fragment) {
  return squash(text).find(squash(fragment)) != std::string::npos;
}

std::vector<Smt2Query> all_queries(const Problem& p) {
  std::vector<Smt2Query> out{emit_find(p), emit_prove(p)};
  for (std::size_t i = 1; i <= p.solutions.size(); ++i) {
    out.push_back(emit_check(p, i));
    out.push_back(emit_check(p, i, EmitOptions{true, false}));
  }
  for (TemplateKind k : template_order()) {
    out.push_back(emit_template_verification(p, k, Variant::First));
    out.push_back(emit_template_verification(p, k, Variant::Second));
  }
  if (classify_fragment(p).equational) {
    RunOptions options;
    options.all_templates = true;
    for (const auto& o : run_lazy(p, options).templates) {
      if (o.solved) {
        if (auto q = emit_uniqueness(p, o.kind, *o.solved)) out.push_back(*q);
      }
    }
  }
  return out;
}

TEST(Emit, EveryQueryReparses) {
  for (const Problem& p : corpus()) {
    for (const Smt2Query& q : all_queries(p)) {
      std::vector<SExpr> parsed;
      ASSERT_NO_THROW(parsed = read_sexprs(q.text)) << q.file_name();
      EXPECT_EQ(parsed, q.commands) << q.file_name();
      ASSERT_GE(q.commands.size(), 4u);
      EXPECT_EQ(to_string(q.commands.front()), "(set-logic AUFNIRA)");
      EXPECT_EQ(to_string(q.commands.back()), "(check-sat)");
      EXPECT_EQ(std::count(q.text.begin(), q.text.end(), '\n'), static_cast<long>(q.commands.size()) + 1);
    }
  }
}

TEST(Emit, Eq1Queries) {
  const Problem& eq1 = problem("Eq1");
  const std::string spec = "(assert (forall ((x Real) (y Real)) (= (f (+ x y)) (+ (* x (f y)) (* y (f x))))))";
  const Smt2Query find = emit_find(eq1);
  EXPECT_TRUE(contains(find.text, spec));
  EXPECT_TRUE(contains(find.text, "(declare-fun f (Real) Real)"));
  EXPECT_EQ(find.expected(), "sat");
  EXPECT_EQ(find.file_name(), "Eq1.find.smt2");

  const Smt2Query prove = emit_prove(eq1);
  EXPECT_TRUE(contains(prove.text, spec));
  EXPECT_TRUE(contains(prove.text, "(assert (exists ((x Real)) (not (= (f x) 0.0))))"));
  EXPECT_EQ(prove.expected(), "unsat");

  const Smt2Query check = emit_check(eq1, 1);
  EXPECT_TRUE(contains(check.text, "(assert (forall ((x Real)) (= (f x) 0.0)))"));
  EXPECT_TRUE(contains(
      check.text, "(assert (exists ((x Real) (y Real)) (not (= (f (+ x y)) (+ (* x (f y)) (* y (f x)))))))"));
  EXPECT_EQ(check.file_name(), "Eq1.check1.smt2");
}

TEST(Emit, InlineCheckRemovesFunction) {
  const Smt2Query q = emit_check(problem("U3"), 1, EmitOptions{true, false});
  EXPECT_FALSE(contains(q.text, "(f x)"));
  EXPECT_TRUE(contains(q.text, "(declare-const b Real)"));
}

TEST(Emit, Literals) {
  EXPECT_EQ(to_string(smt_term(parse_expression("2"))), "2.0");
  EXPECT_EQ(to_string(smt_term(parse_expression("-3"))), "(- 3.0)");
  EXPECT_EQ(to_string(smt_term(parse_expression("1/2"))), "(/ 1.0 2.0)");
  EXPECT_EQ(to_string(smt_term(parse_expression("x^3", {"x"}))), "(* x x x)");
  EXPECT_EQ(to_string(smt_formula(parse_formula("forall x . f(x) != x"))),
            "(forall ((x Real)) (not (= (f x) x)))");
}

TEST(Emit, UniquenessIsProveForSolvedForm) {
  // With the solved form equal to the bundled solutions both queries assert the same.
  const Problem& eq1 = problem("Eq1");
  SolvedForm sf;
  Assignment a;
  a.values = {{"c", Rational(0)}};
  sf.add(a);
  const auto unique = emit_uniqueness(eq1, TemplateKind::Constant, sf);
  ASSERT_TRUE(unique);
  const Smt2Query prove = emit_prove(eq1);
  EXPECT_EQ(unique->commands, prove.commands);
  EXPECT_EQ(unique->file_name(), "Eq1.unique.smt2");
  EXPECT_FALSE(emit_uniqueness(eq1, TemplateKind::Constant, SolvedForm{}).has_value());
}

TEST(Emit, FreeParameterIsQuantified) {
  const Smt2Query q = emit_prove(problem("U3"));
  EXPECT_TRUE(contains(q.text, "(assert (forall ((b Real)) (exists ((x Real)) (not (= (f x) (+ x b))))))"));
}

TEST(Emit, TemplateVerification) {
  const Smt2Query first = emit_template_verification(problem("Eq1"), TemplateKind::Linear, Variant::First);
  EXPECT_EQ(first.file_name(), "Eq1.linear.first.tv.smt2");
  EXPECT_TRUE(contains(first.text,
                       "(assert (not (exists ((a Real) (b Real)) (forall ((x Real)) (= (f x) (+ (* a x) b))))))") ||
              contains(first.text, "(assert (forall ((a Real) (b Real)) (exists ((x Real)) (not (= (f x) (+ (* a x) b))))))"));
  const Smt2Query second = emit_template_verification(problem("C1"), TemplateKind::Quadratic, Variant::Second);
  EXPECT_EQ(second.file_name(), "C1.quad.second.tv.smt2");
  EXPECT_TRUE(contains(second.text, "(not (= (* 2.0 (f x))"));
}

TEST(Emit, Deterministic) {
  for (const Problem& p : corpus()) {
    const auto a = all_queries(p), b = all_queries(p);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].text, b[i].text);
  }
}

TEST(UnitEq, Eligibility) {
  EXPECT_FALSE(uniteq_ineligibility(problem("U25")).has_value());
  EXPECT_FALSE(uniteq_ineligibility(problem("U87")).has_value());
  ASSERT_TRUE(uniteq_ineligibility(problem("U2")).has_value());
  EXPECT_EQ(*uniteq_ineligibility(problem("U2")), "order side-condition");
  EXPECT_THROW(emit_uniteq(problem("U2"), TemplateKind::Linear), NotUnitEquational);
}

TEST(UnitEq, U25Encoding) {
  const UnitEqTask task = emit_uniteq(problem("U25"), TemplateKind::MonomialLinear);
  EXPECT_EQ(task.file_name(), "U25.mlinear.p");
  EXPECT_EQ(task.legacy_file_name(), "U25.mlinear.pr");
  EXPECT_EQ(task.axioms.size(), 8u);
  const std::string tptp = task.tptp();
  EXPECT_NE(tptp.find("cnf(hypothesis_1, hypothesis, f(plus(times(X,f(X)),f(Y))) = plus(Y,times(f(X),f(X))))."),
            std::string::npos);
  EXPECT_NE(tptp.find("cnf(goal, negated_conjecture, f(d) != times(f(one),d))."), std::string::npos);
  const std::string legacy = task.legacy();
  EXPECT_NE(legacy.find("CONCLUSION  f(d) = times(f(one),d)"), std::string::npos);
  EXPECT_NE(legacy.find("VARIABLES   x, y, z: R"), std::string::npos);
}

TEST(UnitEq, IntegerLiterals) {
  const auto name = [](const std::string& v) { return v; };
  EXPECT_EQ(ring_term(parse_expression("0"), name), "zero");
  EXPECT_EQ(ring_term(parse_expression("3"), name), "plus(plus(one,one),one)");
  EXPECT_EQ(ring_term(parse_expression("-1"), name), "neg(one)");
  EXPECT_EQ(ring_term(parse_expression("x - y", {"x", "y"}), name), "plus(x,neg(y))");
}

}  // namespace
}  // namespace feq
