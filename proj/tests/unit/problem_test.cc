#include "feq/problem.h"

#include <gtest/gtest.h>

#include <fstream>

#include "feq/error.h"
#include "feq/parser.h"
#include "feq/runner.h"

namespace feq {
namespace {

const Expr x = Expr::variable("x");
const Expr y = Expr::variable("y");
const Expr z = Expr::variable("z");
Expr f(const Expr& e) { return Expr::apply(e); }

const std::vector<Problem>& corpus() {
  static const std::vector<Problem> problems = load_corpus();
  return problems;
}

TEST(Corpus, BundlesTheNineProblems) {
  std::vector<std::string> names;
  for (const auto& p : corpus()) names.push_back(p.name);
  EXPECT_EQ(names, (std::vector<std::string>{"C1", "C12", "Eq1", "U2", "U24", "U25", "U3", "U87", "U91"}));
}

TEST(Corpus, U24) {
  const Problem* p = find_problem(corpus(), "U24");
  ASSERT_NE(p, nullptr);
  ASSERT_EQ(p->equations.size(), 1u);
  EXPECT_EQ(p->equations[0].lhs, f(x) + f(y));
  EXPECT_EQ(p->equations[0].rhs, f(f(x) * f(y)));
  ASSERT_EQ(p->solutions.size(), 1u);
  EXPECT_EQ(p->solutions[0].body, Expr::constant(0));
}

TEST(Corpus, U87) {
  const Problem* p = find_problem(corpus(), "U87");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->equations[0].lhs, f(Expr::sum({x, Expr::power(y, 2), z})));
  EXPECT_EQ(p->equations[0].rhs, Expr::sum({f(f(x)), y * f(y), f(z)}));
  ASSERT_EQ(p->solutions.size(), 2u);
  EXPECT_EQ(p->solutions[0].body, x);
  EXPECT_EQ(p->solutions[1].body, Expr::constant(0));
}

TEST(Corpus, U2IsOutsideTheEquationalFragment) {
  const Problem* p = find_problem(corpus(), "U2");
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(p->equations[0].lhs, f(x) + f(y));
  EXPECT_EQ(p->equations[0].rhs, f(x + y));
  const Fragment fr = classify_fragment(*p);
  EXPECT_FALSE(fr.equational);
  EXPECT_EQ(fr.reason, "order side-condition");
}

TEST(Corpus, EveryProblemRoundTripsAndItsSolutionsCheck) {
  for (const Problem& p : corpus()) {
    EXPECT_EQ(parse_problem(print_problem(p)), p) << p.name;
    if (!classify_fragment(p).equational) continue;
    for (const auto& s : p.solutions) EXPECT_TRUE(check_solution(p, s)) << p.name << ": " << describe(s);
  }
}

TEST(Fragment, Classification) {
  EXPECT_TRUE(classify_fragment(*find_problem(corpus(), "U91")).equational);
  const Problem half = parse_problem("problem H\nassert forall x. f(x) = 1/2*f(2*x)\n");
  EXPECT_TRUE(classify_fragment(half).equational);
  const Problem raw = parse_problem("problem R\ncondition (> (f 0.0) 0.0)\nassert forall x. f(x) = f(x)\n");
  EXPECT_EQ(classify_fragment(raw).reason, "non-equational side-condition");
  const Problem integers = parse_problem("problem I\ndomain Int\nfunction f : Int -> Int\nassert forall x. f(x) = x\n");
  EXPECT_EQ(classify_fragment(integers).reason, "integer domain");
}

TEST(SideCondition, MonotonicityFormula) {
  const Formula inc = side_condition_formula({"increasing"});
  EXPECT_EQ(inc, Formula::forall({"x", "y"}, Formula::implication(Formula::atom(Relation::Lt, x, y),
                                                                     Formula::atom(Relation::Lt, f(x), f(y)))));
  EXPECT_EQ(side_condition_formula({"(> (f 0.0) 0.0)"}).kind(), FormulaKind::Raw);
}

TEST(Corpus, FileNameMustMatchProblemName) {
  const auto dir = std::filesystem::temp_directory_path() / "feq-corpus-test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "A.feq") << "problem B\nassert forall x. f(x) = x\n";
  EXPECT_THROW(load_corpus(dir), Error);
  std::filesystem::remove_all(dir);
  EXPECT_THROW(load_corpus(dir), Error);
}

}  // namespace
}  // namespace feq
