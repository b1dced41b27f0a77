#include "feq/poly.h"

#include <stdexcept>

#include "feq/error.h"

namespace feq {

Monomial::Monomial(const std::map<std::string, unsigned>& exponents) {
  for (const auto& [s, e] : exponents) {
    if (e > 0) exponents_.emplace(s, e);
  }
}

Monomial Monomial::symbol(const std::string& name, unsigned exponent) { return Monomial({{name, exponent}}); }

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [s, e] : exponents_) d += e;
  return d;
}

unsigned Monomial::degree_in(const std::string& symbol) const {
  const auto it = exponents_.find(symbol);
  return it == exponents_.end() ? 0 : it->second;
}

std::pair<Monomial, Monomial> Monomial::split(const std::set<std::string>& vars) const {
  Monomial inside, outside;
  for (const auto& [s, e] : exponents_) (vars.count(s) ? inside : outside).exponents_.emplace(s, e);
  return {inside, outside};
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial out = lhs;
  for (const auto& [s, e] : rhs.exponents_) out.exponents_[s] += e;
  return out;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  if (const auto c = lhs.degree() <=> rhs.degree(); c != 0) return c;
  auto a = lhs.exponents_.begin();
  auto b = rhs.exponents_.begin();
  while (a != lhs.exponents_.end() && b != rhs.exponents_.end()) {
    if (a->first < b->first) return std::strong_ordering::greater;
    if (b->first < a->first) return std::strong_ordering::less;
    if (const auto c = a->second <=> b->second; c != 0) return c;
    ++a;
    ++b;
  }
  if (a != lhs.exponents_.end()) return std::strong_ordering::greater;
  if (b != rhs.exponents_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : exponents_) {
    if (!out.empty()) out += '*';
    out += s;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial Polynomial::constant(const Rational& value) { return term(value, Monomial()); }

Polynomial Polynomial::symbol(const std::string& name) { return term(Rational(1), Monomial::symbol(name)); }

Polynomial Polynomial::term(const Rational& coefficient, const Monomial& monomial) {
  Polynomial p;
  p.add_term(monomial, coefficient);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_term() const { return coefficient_of(Monomial()); }

Rational Polynomial::coefficient_of(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned Polynomial::degree_in(const std::string& symbol) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(symbol));
  return d;
}

std::set<std::string> Polynomial::symbols() const {
  std::set<std::string> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [s, e] : m.exponents()) out.insert(s);
  }
  return out;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.begin();
}

Rational Polynomial::content() const {
  Rational g;
  for (const auto& [m, c] : terms_) g = rational_gcd(g, c);
  return g;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  Polynomial out;
  if (factor.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(Rational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::eval(const Environment& env) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [s, e] : m.exponents()) {
      const auto it = env.find(s);
      if (it == env.end()) throw EvaluationIncomplete(s);
      t *= it->second.pow(e);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::partial_eval(const Environment& env) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Rational coefficient = c;
    std::map<std::string, unsigned> rest;
    for (const auto& [s, e] : m.exponents()) {
      if (const auto it = env.find(s); it != env.end()) {
        coefficient *= it->second.pow(e);
      } else {
        rest.emplace(s, e);
      }
    }
    out.add_term(Monomial(rest), coefficient);
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

bool operator<(const Polynomial& lhs, const Polynomial& rhs) {
  auto a = lhs.terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != lhs.terms_.end() && b != rhs.terms_.end(); ++a, ++b) {
    if (const auto c = a->first <=> b->first; c != 0) return c < 0;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == lhs.terms_.end() && b != rhs.terms_.end();
}

Polynomial to_polynomial(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Constant: return Polynomial::constant(e.value());
    case ExprKind::Variable:
    case ExprKind::Coefficient: return Polynomial::symbol(e.name());
    case ExprKind::Sum: {
      Polynomial total;
      for (const Expr& c : e.children()) total += to_polynomial(c);
      return total;
    }
    case ExprKind::Product: {
      Polynomial total = Polynomial::constant(Rational(1));
      for (const Expr& c : e.children()) total = total * to_polynomial(c);
      return total;
    }
    case ExprKind::Negation: return -to_polynomial(e.child());
    case ExprKind::Power: return to_polynomial(e.child()).pow(e.exponent());
    case ExprKind::Apply: throw NotInlined();
  }
  throw std::logic_error("unreachable");
}

namespace {

Expr terms_to_expr(const std::vector<std::pair<Monomial, Rational>>& terms, const std::set<std::string>& variables) {
  std::vector<Expr> out;
  for (const auto& [m, c] : terms) {
    if (m.is_one() && out.empty()) {
      out.push_back(Expr::constant(c));  // a leading -1 prints as -1, not -(1)
      continue;
    }
    std::vector<Expr> factors;
    const Rational magnitude = c.abs();
    if (!magnitude.is_one() || m.is_one()) factors.push_back(Expr::constant(magnitude));
    for (const auto& [s, e] : m.exponents()) {
      Expr sym = variables.count(s) ? Expr::variable(s) : Expr::coefficient(s);
      factors.push_back(e == 1 ? sym : Expr::power(sym, e));
    }
    Expr t = make_product(std::move(factors));
    out.push_back(c.sign() < 0 ? Expr::negation(std::move(t)) : std::move(t));
  }
  return make_sum(std::move(out));
}

}  // namespace

Expr to_expr(const Polynomial& p, const std::set<std::string>& variables) {
  return terms_to_expr({p.terms().begin(), p.terms().end()}, variables);
}

std::string to_string_ascending(const Polynomial& p) {
  return to_string(terms_to_expr({p.terms().rbegin(), p.terms().rend()}, {}));
}

std::vector<std::pair<Monomial, Polynomial>> coefficients_wrt(const Polynomial& p,
                                                              const std::set<std::string>& vars) {
  std::map<Monomial, Polynomial, std::greater<>> grouped;
  for (const auto& [m, c] : p.terms()) {
    auto [inside, outside] = m.split(vars);
    grouped[inside] += Polynomial::term(c, outside);
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  for (auto& [m, q] : grouped) {
    if (!q.is_zero()) out.emplace_back(m, std::move(q));
  }
  return out;
}

std::string to_string(const Polynomial& p) { return to_string(to_expr(p)); }

std::ostream& operator<<(std::ostream& out, const Polynomial& p) { return out << to_string(p); }

}  // namespace feq
