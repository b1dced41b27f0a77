#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "feq/expr.h"
#include "feq/rational.h"

namespace feq {

/// Power product of symbols. Zero exponents are never stored, so the empty
/// monomial is the constant 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(const std::map<std::string, unsigned>& exponents);
  static Monomial symbol(const std::string& name, unsigned exponent = 1);

  const std::map<std::string, unsigned>& exponents() const { return exponents_; }
  unsigned degree() const;
  unsigned degree_in(const std::string& symbol) const;
  bool is_one() const { return exponents_.empty(); }

  /// (part over `vars`, remaining part).
  std::pair<Monomial, Monomial> split(const std::set<std::string>& vars) const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Graded lexicographic: total degree first, then exponents in symbol-name order.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

  std::string to_string() const;

 private:
  std::map<std::string, unsigned> exponents_;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in descending graded-lex order and zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, std::greater<>>;

  Polynomial() = default;
  static Polynomial constant(const Rational& value);
  static Polynomial symbol(const std::string& name);
  static Polynomial term(const Rational& coefficient, const Monomial& monomial);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient_of(const Monomial& m) const;
  unsigned degree() const;
  unsigned degree_in(const std::string& symbol) const;
  std::set<std::string> symbols() const;
  /// Highest term in graded-lex order; the polynomial must be nonzero.
  const std::pair<const Monomial, Rational>& leading_term() const;
  /// Positive gcd of all coefficients; zero for the zero polynomial.
  Rational content() const;

  Polynomial scaled(const Rational& factor) const;
  Polynomial pow(unsigned exponent) const;
  Rational eval(const Environment& env) const;
  /// Substitutes the symbols bound in env and keeps the others.
  Polynomial partial_eval(const Environment& env) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Lexicographic over the descending term lists; used only for deterministic ordering.
  friend bool operator<(const Polynomial& lhs, const Polynomial& rhs);

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Throws NotInlined when e still applies f.
Polynomial to_polynomial(const Expr& e);

/// Symbols in `variables` become variables, the rest coefficient symbols.
/// Negative terms are rendered as negated summands.
Expr to_expr(const Polynomial& p, const std::set<std::string>& variables = {});

/// For each monomial over `vars` occurring in p (descending), its coefficient
/// as a polynomial in the remaining symbols. p is identically zero over the
/// reals iff every returned coefficient is the zero polynomial.
std::vector<std::pair<Monomial, Polynomial>> coefficients_wrt(const Polynomial& p,
                                                              const std::set<std::string>& vars);

std::string to_string(const Polynomial& p);
/// Lowest-degree term first, e.g. "-1 + a".
std::string to_string_ascending(const Polynomial& p);
std::ostream& operator<<(std::ostream& out, const Polynomial& p);

}  // namespace feq
