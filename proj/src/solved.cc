#include "feq/solved.h"

#include <algorithm>
#include <stdexcept>

#include "feq/error.h"

namespace feq {

std::vector<AssignmentAtom> Assignment::atoms() const {
  std::vector<AssignmentAtom> out;
  for (const auto& [c, v] : values) out.push_back({c, v});
  return out;
}

void SolvedForm::add(Assignment a) {
  if (std::find(disjuncts.begin(), disjuncts.end(), a) == disjuncts.end()) disjuncts.push_back(std::move(a));
}

namespace {

bool evaluable(const Expr& e, const Environment& env) {
  if (contains_apply(e)) return false;
  for (const auto& s : symbols_of(e)) {
    if (!env.count(s)) return false;
  }
  return true;
}

bool unassigned_coefficient(const Expr& e, const Environment& env) {
  return e.is(ExprKind::Coefficient) && !env.count(e.name());
}

std::string describe(const Expr& s, const Expr& t) { return to_string(s) + " = " + to_string(t); }

struct LinearHead {
  std::string c, d;
  Rational s1;
};

// c + s1*d with c, d distinct unassigned coefficients and s1 evaluable.
std::optional<LinearHead> match_linear_head(const Expr& s, const Environment& env) {
  if (!s.is(ExprKind::Sum) || s.children().size() != 2) return std::nullopt;
  const Expr& first = s.children()[0];
  const Expr& second = s.children()[1];
  if (!unassigned_coefficient(first, env)) return std::nullopt;
  if (unassigned_coefficient(second, env)) {
    if (second.name() == first.name()) return std::nullopt;
    return LinearHead{first.name(), second.name(), Rational(1)};
  }
  if (!second.is(ExprKind::Product)) return std::nullopt;
  std::optional<std::string> d;
  Rational s1(1);
  for (const Expr& factor : second.children()) {
    if (unassigned_coefficient(factor, env) && !d) {
      d = factor.name();
    } else if (evaluable(factor, env)) {
      s1 *= eval(factor, env);
    } else {
      return std::nullopt;
    }
  }
  if (!d || *d == first.name()) return std::nullopt;
  return LinearHead{first.name(), *d, s1};
}

bool matches_plain_pair(const Expr& s, const std::string& c, const std::string& d) {
  return s.is(ExprKind::Sum) && s.children().size() == 2 && s.children()[0].is(ExprKind::Coefficient) &&
         s.children()[0].name() == c && s.children()[1].is(ExprKind::Coefficient) && s.children()[1].name() == d;
}

StepOutcome bottom() { return {StepOutcome::Kind::Bottom, {}}; }

StepOutcome proceed(PostState state) {
  StepOutcome o{StepOutcome::Kind::Continue, {}};
  o.states.push_back(std::move(state));
  return o;
}

}  // namespace

std::optional<std::vector<Rational>> solve_univariate(const Polynomial& p) {
  const auto symbols = p.symbols();
  if (symbols.size() != 1) throw std::invalid_argument("solve_univariate needs exactly one symbol");
  const std::string& c = *symbols.begin();
  const unsigned degree = p.degree_in(c);
  const Rational a2 = p.coefficient_of(Monomial::symbol(c, 2));
  const Rational a1 = p.coefficient_of(Monomial::symbol(c, 1));
  const Rational a0 = p.constant_term();
  if (degree == 1) return std::vector<Rational>{-a0 / a1};
  if (degree != 2) throw std::invalid_argument("solve_univariate handles degree 1 and 2 only");
  const Rational discriminant = a1 * a1 - Rational(4) * a2 * a0;
  if (discriminant.sign() < 0) return std::vector<Rational>{};
  const auto root = discriminant.sqrt();
  if (!root) return std::nullopt;
  const Rational denominator = Rational(2) * a2;
  std::vector<Rational> roots{(-a1 + *root) / denominator};
  if (!root->is_zero()) roots.push_back((-a1 - *root) / denominator);
  std::sort(roots.begin(), roots.end(), [](const Rational& x, const Rational& y) {
    if (x.abs() != y.abs()) return x.abs() < y.abs();
    return x > y;
  });
  return roots;
}

StepOutcome step_equation(PostState state) {
  if (state.equations.empty()) throw std::invalid_argument("step_equation needs a pending equation");
  const auto [s, t] = state.equations.front();
  state.equations.erase(state.equations.begin());
  Environment& alpha = state.assignment;

  // Case 1.
  if (evaluable(s, alpha) && evaluable(t, alpha)) {
    if (eval(s, alpha) != eval(t, alpha)) return bottom();
    return proceed(std::move(state));
  }

  // Case 2.
  if (unassigned_coefficient(s, alpha) && evaluable(t, alpha)) {
    alpha.emplace(s.name(), eval(t, alpha));
    return proceed(std::move(state));
  }

  // Case 3, generalised to any residue that is univariate of degree <= 2.
  if (!contains_apply(s) && !contains_apply(t)) {
    const Polynomial residue = (to_polynomial(s) - to_polynomial(t)).partial_eval(alpha);
    if (residue.is_constant()) {
      if (!residue.is_zero()) return bottom();
      return proceed(std::move(state));
    }
    if (residue.symbols().size() == 1 && residue.degree() <= 2) {
      const std::string c = *residue.symbols().begin();
      const auto roots = solve_univariate(residue);
      if (!roots) throw NoSolvedForm("irrational root of " + describe(s, t));
      if (roots->empty()) return bottom();
      StepOutcome o{roots->size() == 1 ? StepOutcome::Kind::Continue : StepOutcome::Kind::Branch, {}};
      for (const Rational& v : *roots) {
        PostState branch = state;
        branch.assignment.emplace(c, v);
        o.states.push_back(std::move(branch));
      }
      return o;
    }
  }

  // Case 4: c + s1*d = t together with the first later c + d = t'.
  if (const auto head = match_linear_head(s, alpha); head && evaluable(t, alpha)) {
    for (auto it = state.equations.begin(); it != state.equations.end(); ++it) {
      if (!matches_plain_pair(it->first, head->c, head->d) || !evaluable(it->second, alpha)) continue;
      const Rational rhs = eval(t, alpha);
      const Rational rhs_pair = eval(it->second, alpha);
      state.equations.erase(it);
      const Rational slope = head->s1 - Rational(1);
      if (slope.is_zero()) {
        if (rhs != rhs_pair) return bottom();
        throw NoSolvedForm("underdetermined linear pair in " + describe(s, t));
      }
      const Rational d = (rhs - rhs_pair) / slope;
      alpha.emplace(head->d, d);
      alpha.emplace(head->c, rhs_pair - d);
      return proceed(std::move(state));
    }
  }

  throw NoSolvedForm("no case applies to " + describe(s, t));
}

SolvedForm finalize(const PostState& state, std::span<const std::string> coefficients) {
  if (!state.pending.empty() || !state.equations.empty())
    throw std::invalid_argument("finalize called with unprocessed formulas");
  for (const Formula& literal : state.others) {
    if (!evaluable(literal.lhs(), state.assignment) || !evaluable(literal.rhs(), state.assignment))
      throw NoSolvedForm("cannot evaluate " + to_string(literal));
  }
  for (const Formula& literal : state.others) {
    if (!holds(literal.relation(), eval(literal.lhs(), state.assignment), eval(literal.rhs(), state.assignment)))
      return {};
  }
  Assignment a;
  a.values = state.assignment;
  for (const auto& c : coefficients) {
    if (!a.values.count(c)) a.free.insert(c);
  }
  SolvedForm out;
  out.add(std::move(a));
  return out;
}

namespace {

void merge(SolvedForm& into, const SolvedForm& from) {
  for (const Assignment& a : from.disjuncts) into.add(a);
}

SolvedForm solve(PostState state, std::span<const std::string> coefficients) {
  while (!state.pending.empty()) {
    const Formula phi = state.pending.front();
    state.pending.erase(state.pending.begin());
    switch (phi.kind()) {
      case FormulaKind::And:
        state.pending.insert(state.pending.begin(), phi.children().begin(), phi.children().end());
        break;
      case FormulaKind::Or: {
        SolvedForm result;
        for (const Formula& disjunct : phi.children()) {
          PostState branch = state;
          branch.pending.insert(branch.pending.begin(), disjunct);
          merge(result, solve(std::move(branch), coefficients));
        }
        return result;
      }
      case FormulaKind::True: break;
      case FormulaKind::False: return {};
      case FormulaKind::Atom:
        if (phi.relation() == Relation::Eq) {
          state.equations.emplace_back(phi.lhs(), phi.rhs());
          break;
        }
        if (phi.relation() != Relation::Ne) {
          state.others.push_back(phi);
          break;
        }
        [[fallthrough]];
      default: throw NoSolvedForm("unsupported formula " + to_string(phi));
    }
  }
  while (!state.equations.empty()) {
    StepOutcome step = step_equation(std::move(state));
    switch (step.kind) {
      case StepOutcome::Kind::Bottom: return {};
      case StepOutcome::Kind::Branch: {
        SolvedForm result;
        for (PostState& branch : step.states) merge(result, solve(std::move(branch), coefficients));
        return result;
      }
      case StepOutcome::Kind::Continue: state = std::move(step.states.front()); break;
    }
  }
  return finalize(state, coefficients);
}

std::vector<std::string> coefficient_universe(std::span<const Formula> formulas,
                                              std::span<const std::string> coefficients) {
  std::vector<std::string> out(coefficients.begin(), coefficients.end());
  std::set<std::string> extra;
  std::vector<Formula> stack(formulas.begin(), formulas.end());
  while (!stack.empty()) {
    const Formula f = stack.back();
    stack.pop_back();
    if (f.is(FormulaKind::Atom)) {
      for (const auto& s : coefficients_of(f.lhs())) extra.insert(s);
      for (const auto& s : coefficients_of(f.rhs())) extra.insert(s);
    }
    for (const Formula& c : f.children()) stack.push_back(c);
  }
  for (const auto& s : extra) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  }
  return out;
}

}  // namespace

SolvedForm to_solved_form(std::span<const Formula> formulas, std::span<const std::string> coefficients) {
  const std::vector<std::string> universe = coefficient_universe(formulas, coefficients);
  PostState state;
  state.pending.assign(formulas.begin(), formulas.end());
  return solve(std::move(state), universe);
}

std::vector<Formula> constraint_formulas(const CoefficientConstraint& c) {
  std::vector<Formula> out;
  for (const Polynomial& p : c.equations) {
    const Rational constant = p.constant_term();
    const Polynomial rest = p - Polynomial::constant(constant);
    out.push_back(Formula::equation(to_expr(rest), Expr::constant(-constant)));
  }
  return out;
}

SolvedForm to_solved_form(const CoefficientConstraint& c, std::span<const std::string> coefficients) {
  const std::vector<Formula> formulas = constraint_formulas(c);
  return to_solved_form(formulas, coefficients);
}

std::string to_string(const Assignment& a) {
  std::string out = "{";
  // Atoms and free coefficients interleaved in name order.
  std::set<std::string> names;
  for (const auto& [c, v] : a.values) names.insert(c);
  names.insert(a.free.begin(), a.free.end());
  bool first = true;
  for (const auto& n : names) {
    if (!first) out += ", ";
    first = false;
    if (const auto it = a.values.find(n); it != a.values.end()) {
      out += n + " = " + it->second.to_string();
    } else {
      out += n + " ∈ ℝ";
    }
  }
  return out + "}";
}

std::string to_string(const SolvedForm& s) {
  if (s.is_bottom()) return "false";
  std::string out;
  for (const Assignment& a : s.disjuncts) {
    if (!out.empty()) out += " or ";
    out += to_string(a);
  }
  return out;
}

}  // namespace feq
