#include "feq/emit.h"

#include <cctype>
#include <set>
#include <sstream>

#include "feq/error.h"

namespace feq {

std::string_view query_kind_name(QueryKind k) {
  switch (k) {
    case QueryKind::Find: return "find";
    case QueryKind::Prove: return "prove";
    case QueryKind::Check: return "check";
    case QueryKind::TemplateVerification: return "tv";
    case QueryKind::Uniqueness: return "unique";
  }
  return "?";
}

std::string_view Smt2Query::expected() const { return kind == QueryKind::Find ? "sat" : "unsat"; }

std::string Smt2Query::file_name() const {
  switch (kind) {
    case QueryKind::Check: return problem + ".check" + std::to_string(index) + ".smt2";
    case QueryKind::TemplateVerification:
      return problem + "." + std::string(template_name(tmpl)) + "." + std::string(variant_name(variant)) + ".tv.smt2";
    default: return problem + "." + std::string(query_kind_name(kind)) + ".smt2";
  }
}

namespace {

SExpr decimal(const mpz_class& n) { return SExpr(n.get_str() + ".0"); }

SExpr smt_rational(const Rational& r) {
  const Rational m = r.abs();
  SExpr magnitude = m.is_integer() ? decimal(m.numerator())
                                   : SExpr::list({"/", decimal(m.numerator()), decimal(m.denominator())});
  if (r.sign() < 0) return SExpr::list({"-", std::move(magnitude)});
  return magnitude;
}

SExpr nary(const char* op, std::span<const Expr> children) {
  std::vector<SExpr> items{SExpr(op)};
  for (const Expr& c : children) items.push_back(smt_term(c));
  return SExpr(std::move(items));
}

SExpr sorted_vars(const std::vector<std::string>& vars) {
  std::vector<SExpr> items;
  for (const auto& v : vars) items.push_back(SExpr::list({SExpr(v), "Real"}));
  return SExpr(std::move(items));
}

const char* smt_relation(Relation r) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Lt: return "<";
    case Relation::Le: return "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return ">=";
    case Relation::Ne: break;
  }
  return "=";
}

}  // namespace

SExpr smt_term(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Constant: return smt_rational(e.value());
    case ExprKind::Variable:
    case ExprKind::Coefficient: return SExpr(e.name());
    case ExprKind::Sum: return nary("+", e.children());
    case ExprKind::Product: return nary("*", e.children());
    case ExprKind::Negation: return SExpr::list({"-", smt_term(e.child())});
    case ExprKind::Power: {
      if (e.exponent() == 1) return smt_term(e.child());
      std::vector<SExpr> items{SExpr("*")};
      for (unsigned i = 0; i < e.exponent(); ++i) items.push_back(smt_term(e.child()));
      return SExpr(std::move(items));
    }
    case ExprKind::Apply: return SExpr::list({"f", smt_term(e.child())});
  }
  return SExpr("?");
}

SExpr smt_formula(const Formula& f) {
  std::vector<SExpr> items;
  switch (f.kind()) {
    case FormulaKind::True: return SExpr("true");
    case FormulaKind::False: return SExpr("false");
    case FormulaKind::Atom: {
      if (f.relation() == Relation::Ne)
        return SExpr::list({"not", SExpr::list({"=", smt_term(f.lhs()), smt_term(f.rhs())})});
      return SExpr::list({smt_relation(f.relation()), smt_term(f.lhs()), smt_term(f.rhs())});
    }
    case FormulaKind::Not: return SExpr::list({"not", smt_formula(f.body())});
    case FormulaKind::And:
    case FormulaKind::Or:
      items.push_back(SExpr(f.is(FormulaKind::And) ? "and" : "or"));
      for (const Formula& c : f.children()) items.push_back(smt_formula(c));
      return SExpr(std::move(items));
    case FormulaKind::Implies:
      return SExpr::list({"=>", smt_formula(f.children()[0]), smt_formula(f.children()[1])});
    case FormulaKind::Forall: return SExpr::list({"forall", sorted_vars(f.vars()), smt_formula(f.body())});
    case FormulaKind::Exists: return SExpr::list({"exists", sorted_vars(f.vars()), smt_formula(f.body())});
    case FormulaKind::Raw: {
      auto parsed = read_sexprs(f.raw_text());
      if (parsed.size() != 1) throw SyntaxError("side condition must be a single s-expression", 0, 0);
      return parsed.front();
    }
  }
  return SExpr("true");
}

namespace {

struct QueryBuilder {
  Smt2Query q;
  std::vector<SExpr> declarations;
  std::vector<SExpr> assertions;

  void declare_const(const std::string& name) {
    declarations.push_back(SExpr::list({"declare-const", SExpr(name), "Real"}));
  }
  void assert_formula(const Formula& f) { assertions.push_back(SExpr::list({"assert", smt_formula(f)})); }

  Smt2Query finish(const std::string& comment) {
    q.commands.push_back(SExpr::list({"set-logic", SExpr(q.logic)}));
    q.commands.push_back(SExpr::list({"set-info", ":status", SExpr(std::string(q.expected()))}));
    q.commands.push_back(SExpr::list({"declare-fun", "f", SExpr::list({"Real"}), "Real"}));
    for (auto& d : declarations) q.commands.push_back(std::move(d));
    for (auto& a : assertions) q.commands.push_back(std::move(a));
    q.commands.push_back(SExpr::list({"check-sat"}));
    std::ostringstream out;
    out << "; " << comment << "\n";
    for (const SExpr& c : q.commands) out << to_string(c) << "\n";
    q.text = out.str();
    return q;
  }
};

QueryBuilder builder(const Problem& p, QueryKind kind) {
  QueryBuilder b;
  b.q.kind = kind;
  b.q.problem = p.name;
  return b;
}

Formula parameter_bound(const Parameter& param) {
  return Formula::atom(*param.relation, Expr::coefficient(param.name), Expr::constant(param.bound));
}

std::string describe_candidate(const SolutionCandidate& s) {
  return "f(" + s.var + ") = " + to_string(s.body);
}

}  // namespace

Formula candidate_formula(const SolutionCandidate& s) {
  std::vector<Formula> parts;
  std::vector<std::string> names;
  for (const Parameter& param : s.params) {
    names.push_back(param.name);
    if (param.relation) parts.push_back(parameter_bound(param));
  }
  parts.push_back(s.identity());
  return Formula::exists(std::move(names), Formula::conjunction(std::move(parts)));
}

Formula none_of(const std::vector<SolutionCandidate>& candidates) {
  std::vector<Formula> options;
  for (const auto& s : candidates) options.push_back(candidate_formula(s));
  return negated(Formula::disjunction(std::move(options)));
}

Smt2Query emit_find(const Problem& p) {
  QueryBuilder b = builder(p, QueryKind::Find);
  for (const Formula& a : p.assertions()) b.assert_formula(a);
  return b.finish(p.name + ": are the assertions satisfiable");
}

Smt2Query emit_prove(const Problem& p) {
  QueryBuilder b = builder(p, QueryKind::Prove);
  for (const Formula& a : p.assertions()) b.assert_formula(a);
  b.assert_formula(none_of(p.solutions));
  return b.finish(p.name + ": are the proposed solutions the only ones");
}

Smt2Query emit_check(const Problem& p, std::size_t index, const EmitOptions& options) {
  if (index == 0 || index > p.solutions.size())
    throw Error(p.name + ": no solution candidate " + std::to_string(index));
  const SolutionCandidate& s = p.solutions[index - 1];
  QueryBuilder b = builder(p, QueryKind::Check);
  b.q.index = index;
  for (const Parameter& param : s.params) {
    b.declare_const(param.name);
    if (param.relation) b.assert_formula(parameter_bound(param));
  }
  const Formula spec = Formula::conjunction(p.assertions());
  if (options.inline_check) {
    b.assert_formula(
        negated(map_terms(spec, [&](const Expr& e) { return inline_function(e, s.var, s.body); })));
  } else {
    b.assert_formula(s.identity());
    b.assert_formula(negated(spec));
  }
  return b.finish(p.name + ": is " + describe_candidate(s) + " a solution");
}

Smt2Query emit_template_verification(const Problem& p, TemplateKind t, Variant variant) {
  QueryBuilder b = builder(p, QueryKind::TemplateVerification);
  b.q.tmpl = t;
  b.q.variant = variant;
  const VerificationObligation ob = verification_obligation(p, get_template(t), variant);
  for (const Formula& a : ob.assertions) b.assert_formula(a);
  return b.finish(p.name + ": is every solution of the form " + std::string(template_shape(t)) + " (" +
                  std::string(variant_name(variant)) + " variant)");
}

std::optional<Smt2Query> emit_uniqueness(const Problem& p, TemplateKind t, const SolvedForm& sf) {
  if (sf.is_bottom()) return std::nullopt;
  std::vector<SolutionCandidate> candidates;
  for (const Assignment& a : sf.disjuncts) candidates.push_back(instantiate(get_template(t), a));
  QueryBuilder b = builder(p, QueryKind::Uniqueness);
  b.q.tmpl = t;
  for (const Formula& a : p.assertions()) b.assert_formula(a);
  b.assert_formula(none_of(candidates));
  return b.finish(p.name + ": does " + to_string(sf) + " under " + std::string(template_shape(t)) +
                  " cover every solution");
}

// Unit equality.

std::string ring_term(const Expr& e, const std::function<std::string(const std::string&)>& var_name) {
  auto fold = [&](const char* op, std::span<const Expr> children) {
    std::string acc = ring_term(children[0], var_name);
    for (std::size_t i = 1; i < children.size(); ++i)
      acc = std::string(op) + "(" + acc + "," + ring_term(children[i], var_name) + ")";
    return acc;
  };
  switch (e.kind()) {
    case ExprKind::Constant: {
      const Rational& v = e.value();
      if (!v.is_integer()) throw NotUnitEquational("division");
      const mpz_class n = abs(v.numerator());
      std::string acc = n == 0 ? "zero" : "one";
      for (mpz_class i = 1; i < n; ++i) acc = "plus(" + acc + ",one)";
      return v.sign() < 0 ? "neg(" + acc + ")" : acc;
    }
    case ExprKind::Variable: return var_name(e.name());
    case ExprKind::Coefficient: return e.name();
    case ExprKind::Sum: return fold("plus", e.children());
    case ExprKind::Product: return fold("times", e.children());
    case ExprKind::Negation: return "neg(" + ring_term(e.child(), var_name) + ")";
    case ExprKind::Power: {
      std::string base = ring_term(e.child(), var_name);
      std::string acc = base;
      for (unsigned i = 1; i < e.exponent(); ++i) acc = "times(" + acc + "," + base + ")";
      return acc;
    }
    case ExprKind::Apply: return "f(" + ring_term(e.child(), var_name) + ")";
  }
  return "?";
}

namespace {

bool integer_literals_only(const Expr& e) {
  if (e.is(ExprKind::Constant)) return e.value().is_integer();
  for (const Expr& c : e.children()) {
    if (!integer_literals_only(c)) return false;
  }
  return true;
}

std::vector<UnitEquation> ring_axioms() {
  const Expr x = Expr::variable("x"), y = Expr::variable("y"), z = Expr::variable("z");
  const Expr zero = Expr::constant(0), one = Expr::constant(1);
  return {
      {"plus_commutative", x + y, y + x, {"x", "y"}},
      {"plus_associative", (x + y) + z, x + (y + z), {"x", "y", "z"}},
      {"plus_zero", x + zero, x, {"x"}},
      {"plus_inverse", x + (-x), zero, {"x"}},
      {"times_commutative", x * y, y * x, {"x", "y"}},
      {"times_associative", (x * y) * z, x * (y * z), {"x", "y", "z"}},
      {"times_one", x * one, x, {"x"}},
      {"distributivity", x * (y + z), x * y + x * z, {"x", "y", "z"}},
  };
}

const std::set<std::string>& signature_names() {
  static const std::set<std::string> names{"zero", "one", "d", "plus", "times", "neg", "f"};
  return names;
}

std::string tptp_var(const std::string& name) {
  if (std::isupper(static_cast<unsigned char>(name[0]))) return "V" + name;
  std::string out = name;
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

std::string legacy_var(const std::string& name) { return signature_names().count(name) ? name + "_v" : name; }

std::string render(const UnitEquation& eq, const std::function<std::string(const std::string&)>& var_name,
                   const char* relation) {
  return ring_term(eq.lhs, var_name) + " " + relation + " " + ring_term(eq.rhs, var_name);
}

}  // namespace

std::optional<std::string> uniteq_ineligibility(const Problem& p) {
  if (const Fragment fr = classify_fragment(p); !fr.equational) return fr.reason;
  for (const auto& eq : p.equations) {
    if (!integer_literals_only(eq.lhs) || !integer_literals_only(eq.rhs)) return "division";
  }
  return std::nullopt;
}

UnitEqTask emit_uniteq(const Problem& p, TemplateKind t) {
  if (auto reason = uniteq_ineligibility(p)) throw NotUnitEquational(*reason);
  UnitEqTask task;
  task.problem = p.name;
  task.tmpl = t;
  task.axioms = ring_axioms();
  for (std::size_t i = 0; i < p.equations.size(); ++i) {
    const Equation& eq = p.equations[i];
    task.hypotheses.push_back({"hypothesis_" + std::to_string(i + 1), eq.lhs, eq.rhs, eq.vars});
  }
  auto [lhs, rhs] = characteristic_identity(t, Expr::coefficient("d"));
  task.goal = {"goal", lhs, rhs, {}};
  return task;
}

std::string UnitEqTask::file_name() const { return problem + "." + std::string(template_name(tmpl)) + ".p"; }

std::string UnitEqTask::legacy_file_name() const {
  return problem + "." + std::string(template_name(tmpl)) + ".pr";
}

std::string UnitEqTask::tptp() const {
  std::ostringstream out;
  out << "% " << problem << ": every solution is of the form " << template_shape(tmpl) << "\n";
  for (const UnitEquation& a : axioms) out << "cnf(" << a.name << ", axiom, " << render(a, tptp_var, "=") << ").\n";
  for (const UnitEquation& h : hypotheses)
    out << "cnf(" << h.name << ", hypothesis, " << render(h, tptp_var, "=") << ").\n";
  out << "cnf(" << goal.name << ", negated_conjecture, " << render(goal, tptp_var, "!=") << ").\n";
  return out.str();
}

std::string UnitEqTask::legacy() const {
  std::set<std::string> vars;
  for (const auto* group : {&axioms, &hypotheses}) {
    for (const UnitEquation& eq : *group) {
      for (const auto& v : eq.vars) vars.insert(legacy_var(v));
    }
  }
  std::ostringstream out;
  out << "NAME        " << problem << "_" << template_name(tmpl) << "\n";
  out << "MODE        PROOF\n";
  out << "SORTS       R\n";
  out << "SIGNATURE   zero, one, d: -> R\n";
  out << "            neg, f: R -> R\n";
  out << "            plus, times: R R -> R\n";
  out << "ORDERING    LPO\n";
  out << "            f > times > plus > neg > d > one > zero\n";
  out << "VARIABLES   ";
  bool first = true;
  for (const auto& v : vars) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  out << ": R\n";
  first = true;
  for (const auto* group : {&axioms, &hypotheses}) {
    for (const UnitEquation& eq : *group) {
      out << (first ? "EQUATIONS   " : "            ") << render(eq, legacy_var, "=") << "\n";
      first = false;
    }
  }
  out << "CONCLUSION  " << render(goal, legacy_var, "=") << "\n";
  return out.str();
}

}  // namespace feq
