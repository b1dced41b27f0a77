#include "feq/sexpr.h"

#include <gtest/gtest.h>

#include "feq/error.h"

namespace feq {
namespace {

TEST(SExpr, ReadsNestedLists) {
  const auto items = read_sexprs("(assert (forall ((x Real)) (= (f x) 0.0)))\n(check-sat)");
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[1], SExpr::list({"check-sat"}));
  EXPECT_EQ(to_string(items[0]), "(assert (forall ((x Real)) (= (f x) 0.0)))");
}

TEST(SExpr, CommentsStringsAndQuotedSymbols) {
  const auto items = read_sexprs("; header\n(echo \"a \"\"b\"\" ; c\") |odd ) name|");
  ASSERT_EQ(items.size(), 2u);
  EXPECT_EQ(items[0].items()[1].atom(), "\"a \"\"b\"\" ; c\"");
  EXPECT_EQ(items[1].atom(), "|odd ) name|");
}

TEST(SExpr, Unbalanced) {
  EXPECT_THROW(read_sexprs("(a (b)"), SyntaxError);
  EXPECT_THROW(read_sexprs("a)"), SyntaxError);
  EXPECT_THROW(read_sexprs("\"open"), SyntaxError);
}

TEST(SExpr, EmptyList) {
  const auto items = read_sexprs("()");
  ASSERT_EQ(items.size(), 1u);
  EXPECT_FALSE(items[0].is_atom());
  EXPECT_TRUE(items[0].items().empty());
  EXPECT_EQ(to_string(items[0]), "()");
}

}  // namespace
}  // namespace feq
