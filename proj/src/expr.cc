#include "feq/expr.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "feq/error.h"

namespace feq {

struct Expr::Node {
  ExprKind kind = ExprKind::Constant;
  Rational value;
  std::string name;
  std::vector<Expr> children;
  unsigned exponent = 0;
};

Expr::Expr() : Expr(constant(Rational(0))) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Constant;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Variable;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::coefficient(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Coefficient;
  n->name = std::move(name);
  return Expr(std::move(n));
}

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.size() < 2) throw std::invalid_argument("a sum needs at least two terms");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Sum;
  n->children = std::move(terms);
  return Expr(std::move(n));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("a product needs at least two factors");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Product;
  n->children = std::move(factors);
  return Expr(std::move(n));
}

Expr Expr::negation(Expr child) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Negation;
  n->children.push_back(std::move(child));
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, unsigned exponent) {
  if (exponent < 1) throw std::invalid_argument("power exponent must be positive");
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Power;
  n->children.push_back(std::move(base));
  n->exponent = exponent;
  return Expr(std::move(n));
}

Expr Expr::apply(Expr argument) {
  auto n = std::make_shared<Node>();
  n->kind = ExprKind::Apply;
  n->children.push_back(std::move(argument));
  return Expr(std::move(n));
}

ExprKind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }
std::span<const Expr> Expr::children() const { return node_->children; }
const Expr& Expr::child() const { return node_->children.front(); }
unsigned Expr::exponent() const { return node_->exponent; }

bool operator==(const Expr& lhs, const Expr& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  return a.kind == b.kind && a.value == b.value && a.name == b.name && a.exponent == b.exponent &&
         a.children == b.children;
}

Expr operator+(const Expr& lhs, const Expr& rhs) { return Expr::sum({lhs, rhs}); }
Expr operator-(const Expr& lhs, const Expr& rhs) { return Expr::sum({lhs, Expr::negation(rhs)}); }
Expr operator*(const Expr& lhs, const Expr& rhs) { return Expr::product({lhs, rhs}); }
Expr operator-(const Expr& operand) { return Expr::negation(operand); }

Expr make_sum(std::vector<Expr> terms) {
  if (terms.empty()) return Expr::constant(0);
  if (terms.size() == 1) return std::move(terms.front());
  return Expr::sum(std::move(terms));
}

Expr make_product(std::vector<Expr> factors) {
  if (factors.empty()) return Expr::constant(1);
  if (factors.size() == 1) return std::move(factors.front());
  return Expr::product(std::move(factors));
}

namespace {

template <typename F>
Expr rebuild(const Expr& e, F&& rewrite_child) {
  std::vector<Expr> kids;
  kids.reserve(e.children().size());
  for (const Expr& c : e.children()) kids.push_back(rewrite_child(c));
  switch (e.kind()) {
    case ExprKind::Sum: return Expr::sum(std::move(kids));
    case ExprKind::Product: return Expr::product(std::move(kids));
    case ExprKind::Negation: return Expr::negation(std::move(kids.front()));
    case ExprKind::Power: return Expr::power(std::move(kids.front()), e.exponent());
    case ExprKind::Apply: return Expr::apply(std::move(kids.front()));
    default: return e;
  }
}

template <typename F>
void visit(const Expr& e, F&& f) {
  f(e);
  if (e.is(ExprKind::Constant) || e.is_symbol()) return;
  for (const Expr& c : e.children()) visit(c, f);
}

}  // namespace

Expr substitute(const Expr& e, const Binding& binding) {
  if (e.is_symbol()) {
    const auto it = binding.find(e.name());
    return it == binding.end() ? e : it->second;
  }
  if (e.is(ExprKind::Constant)) return e;
  return rebuild(e, [&](const Expr& c) { return substitute(c, binding); });
}

Rational eval(const Expr& e, const Environment& env) {
  switch (e.kind()) {
    case ExprKind::Constant: return e.value();
    case ExprKind::Variable:
    case ExprKind::Coefficient: {
      const auto it = env.find(e.name());
      if (it == env.end()) throw EvaluationIncomplete(e.name());
      return it->second;
    }
    case ExprKind::Sum: {
      Rational total;
      for (const Expr& c : e.children()) total += eval(c, env);
      return total;
    }
    case ExprKind::Product: {
      Rational total(1);
      for (const Expr& c : e.children()) total *= eval(c, env);
      return total;
    }
    case ExprKind::Negation: return -eval(e.child(), env);
    case ExprKind::Power: return eval(e.child(), env).pow(e.exponent());
    case ExprKind::Apply: throw NotInlined();
  }
  throw std::logic_error("unreachable");
}

Expr inline_function(const Expr& e, const std::string& parameter, const Expr& body) {
  if (e.is(ExprKind::Constant) || e.is_symbol()) return e;
  if (e.is(ExprKind::Apply)) {
    const Expr argument = inline_function(e.child(), parameter, body);
    return substitute(body, {{parameter, argument}});
  }
  return rebuild(e, [&](const Expr& c) { return inline_function(c, parameter, body); });
}

bool contains_apply(const Expr& e) { return count_apply(e) > 0; }

std::size_t count_apply(const Expr& e) {
  std::size_t n = 0;
  visit(e, [&](const Expr& x) { n += x.is(ExprKind::Apply) ? 1 : 0; });
  return n;
}

std::set<std::string> variables_of(const Expr& e) {
  std::set<std::string> out;
  visit(e, [&](const Expr& x) {
    if (x.is(ExprKind::Variable)) out.insert(x.name());
  });
  return out;
}

std::set<std::string> coefficients_of(const Expr& e) {
  std::set<std::string> out;
  visit(e, [&](const Expr& x) {
    if (x.is(ExprKind::Coefficient)) out.insert(x.name());
  });
  return out;
}

std::set<std::string> symbols_of(const Expr& e) {
  std::set<std::string> out;
  visit(e, [&](const Expr& x) {
    if (x.is_symbol()) out.insert(x.name());
  });
  return out;
}

namespace {

// Binding strength: sums 1, products 2, unary minus 3, powers 4, atoms 5.
int precedence(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Sum: return 1;
    case ExprKind::Product: return 2;
    case ExprKind::Negation: return 3;
    case ExprKind::Power: return 4;
    case ExprKind::Constant:
      if (e.value().sign() < 0) return 3;
      return e.value().is_integer() ? 5 : 4;
    default: return 5;
  }
}

void print(std::string& out, const Expr& e, int context) {
  const bool parens = precedence(e) < context;
  if (parens) out += '(';
  switch (e.kind()) {
    case ExprKind::Constant: out += e.value().to_string(); break;
    case ExprKind::Variable:
    case ExprKind::Coefficient: out += e.name(); break;
    case ExprKind::Sum: {
      bool first = true;
      for (const Expr& c : e.children()) {
        if (!first && c.is(ExprKind::Negation)) {
          out += " - ";
          print(out, c.child(), 2);
        } else {
          if (!first) out += " + ";
          print(out, c, 2);
        }
        first = false;
      }
      break;
    }
    case ExprKind::Product: {
      bool first = true;
      for (const Expr& c : e.children()) {
        if (!first) out += '*';
        print(out, c, 3);
        first = false;
      }
      break;
    }
    case ExprKind::Negation:
      out += '-';
      // -(2) keeps the negation apart from the literal -2.
      print(out, e.child(), e.child().is(ExprKind::Constant) ? 6 : 4);
      break;
    case ExprKind::Power:
      print(out, e.child(), 5);
      out += '^';
      out += std::to_string(e.exponent());
      break;
    case ExprKind::Apply:
      out += "f(";
      print(out, e.child(), 0);
      out += ')';
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(out, e, 0);
  return out;
}

std::ostream& operator<<(std::ostream& out, const Expr& e) { return out << to_string(e); }

}  // namespace feq
