#include "feq/formula.h"

#include <stdexcept>
#include <utility>

namespace feq {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Ne: return "!=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
  }
  return "?";
}

Relation flip(Relation r) {
  switch (r) {
    case Relation::Lt: return Relation::Gt;
    case Relation::Le: return Relation::Ge;
    case Relation::Gt: return Relation::Lt;
    case Relation::Ge: return Relation::Le;
    default: return r;
  }
}

Relation negate(Relation r) {
  switch (r) {
    case Relation::Eq: return Relation::Ne;
    case Relation::Ne: return Relation::Eq;
    case Relation::Lt: return Relation::Ge;
    case Relation::Le: return Relation::Gt;
    case Relation::Gt: return Relation::Le;
    case Relation::Ge: return Relation::Lt;
  }
  return r;
}

bool holds(Relation r, const Rational& lhs, const Rational& rhs) {
  switch (r) {
    case Relation::Eq: return lhs == rhs;
    case Relation::Ne: return lhs != rhs;
    case Relation::Lt: return lhs < rhs;
    case Relation::Le: return lhs <= rhs;
    case Relation::Gt: return lhs > rhs;
    case Relation::Ge: return lhs >= rhs;
  }
  return false;
}

struct Formula::Node {
  FormulaKind kind = FormulaKind::True;
  Relation rel = Relation::Eq;
  Expr lhs, rhs;
  std::vector<Formula> children;
  std::vector<std::string> vars;
  std::string raw;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::truth() {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::True;
  return Formula(std::move(n));
}

Formula Formula::falsity() {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::False;
  return Formula(std::move(n));
}

Formula Formula::atom(Relation rel, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->rel = rel;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula child) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Not;
  n->children.push_back(std::move(child));
  return Formula(std::move(n));
}

Formula Formula::conjunction(std::vector<Formula> children) {
  if (children.empty()) return truth();
  if (children.size() == 1) return std::move(children.front());
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::And;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::disjunction(std::vector<Formula> children) {
  if (children.empty()) return falsity();
  if (children.size() == 1) return std::move(children.front());
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Or;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::implication(Formula premise, Formula conclusion) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Implies;
  n->children = {std::move(premise), std::move(conclusion)};
  return Formula(std::move(n));
}

Formula Formula::forall(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Forall;
  n->vars = std::move(vars);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::exists(std::vector<std::string> vars, Formula body) {
  if (vars.empty()) return body;
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Exists;
  n->vars = std::move(vars);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::raw(std::string smt_text) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Raw;
  n->raw = std::move(smt_text);
  return Formula(std::move(n));
}

FormulaKind Formula::kind() const { return node_->kind; }
Relation Formula::relation() const { return node_->rel; }
const Expr& Formula::lhs() const { return node_->lhs; }
const Expr& Formula::rhs() const { return node_->rhs; }
std::span<const Formula> Formula::children() const { return node_->children; }
const Formula& Formula::body() const { return node_->children.front(); }
const std::vector<std::string>& Formula::vars() const { return node_->vars; }
const std::string& Formula::raw_text() const { return node_->raw; }

bool operator==(const Formula& lhs, const Formula& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = *lhs.node_;
  const auto& b = *rhs.node_;
  return a.kind == b.kind && a.rel == b.rel && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.children == b.children && a.vars == b.vars && a.raw == b.raw;
}

namespace {

// 1: implication, 2: disjunction, 3: conjunction, 4: unary and atoms.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    case FormulaKind::Forall:
    case FormulaKind::Exists: return 0;
    default: return 4;
  }
}

void print(std::string& out, const Formula& f, int context) {
  const bool parens = precedence(f) < context;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::True: out += "true"; break;
    case FormulaKind::False: out += "false"; break;
    case FormulaKind::Atom:
      out += to_string(f.lhs());
      out += ' ';
      out += relation_symbol(f.relation());
      out += ' ';
      out += to_string(f.rhs());
      break;
    case FormulaKind::Not:
      out += "not ";
      print(out, f.body(), 4);
      break;
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* op = f.is(FormulaKind::And) ? " and " : " or ";
      bool first = true;
      for (const Formula& c : f.children()) {
        if (!first) out += op;
        print(out, c, precedence(f) + 1);
        first = false;
      }
      break;
    }
    case FormulaKind::Implies:
      print(out, f.children()[0], 2);
      out += " -> ";
      print(out, f.children()[1], 1);
      break;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out += f.is(FormulaKind::Forall) ? "forall" : "exists";
      for (const auto& v : f.vars()) {
        out += ' ';
        out += v;
      }
      out += " . ";
      print(out, f.body(), 0);
      break;
    case FormulaKind::Raw: out += f.raw_text(); break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula negated(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True: return Formula::falsity();
    case FormulaKind::False: return Formula::truth();
    case FormulaKind::Atom: return Formula::atom(negate(f.relation()), f.lhs(), f.rhs());
    case FormulaKind::Not: return f.body();
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> children;
      for (const Formula& c : f.children()) children.push_back(negated(c));
      return f.is(FormulaKind::And) ? Formula::disjunction(std::move(children))
                                    : Formula::conjunction(std::move(children));
    }
    case FormulaKind::Implies: return Formula::conjunction({f.children()[0], negated(f.children()[1])});
    case FormulaKind::Forall: return Formula::exists(f.vars(), negated(f.body()));
    case FormulaKind::Exists: return Formula::forall(f.vars(), negated(f.body()));
    case FormulaKind::Raw: return Formula::negation(f);
  }
  return Formula::negation(f);
}

Formula map_terms(const Formula& f, const std::function<Expr(const Expr&)>& fn) {
  std::vector<Formula> children;
  for (const Formula& c : f.children()) children.push_back(map_terms(c, fn));
  switch (f.kind()) {
    case FormulaKind::Atom: return Formula::atom(f.relation(), fn(f.lhs()), fn(f.rhs()));
    case FormulaKind::Not: return Formula::negation(children.front());
    case FormulaKind::And: return Formula::conjunction(std::move(children));
    case FormulaKind::Or: return Formula::disjunction(std::move(children));
    case FormulaKind::Implies: return Formula::implication(children[0], children[1]);
    case FormulaKind::Forall: return Formula::forall(f.vars(), children.front());
    case FormulaKind::Exists: return Formula::exists(f.vars(), children.front());
    default: return f;
  }
}

std::string to_string(const Formula& f) {
  std::string out;
  print(out, f, 0);
  return out;
}

std::ostream& operator<<(std::ostream& out, const Formula& f) { return out << to_string(f); }

}  // namespace feq
