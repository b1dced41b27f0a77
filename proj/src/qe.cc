#include "feq/qe.h"

#include <algorithm>
#include <tuple>

namespace feq {

CoefficientConstraint eliminate(std::span<const Polynomial> inlined, const std::set<std::string>& problem_vars) {
  CoefficientConstraint out;
  for (const Polynomial& p : inlined) {
    for (auto& [monomial, coefficient] : coefficients_wrt(p, problem_vars)) out.equations.push_back(coefficient);
  }
  return normalize_constraint(out);
}

Polynomial normalize_equation(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational content = p.content();
  if (p.leading_term().second.sign() < 0) content = -content;
  return p.scaled(Rational(1) / content);
}

CoefficientConstraint normalize_constraint(const CoefficientConstraint& c) {
  CoefficientConstraint out;
  for (const Polynomial& p : c.equations) {
    if (p.is_zero()) continue;
    out.equations.push_back(normalize_equation(p));
  }
  const auto key = [](const Polynomial& p) { return std::make_tuple(p.symbols().size(), p.degree()); };
  std::sort(out.equations.begin(), out.equations.end(), [&](const Polynomial& a, const Polynomial& b) {
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    return b < a;
  });
  out.equations.erase(std::unique(out.equations.begin(), out.equations.end()), out.equations.end());
  return out;
}

std::string to_string(const CoefficientConstraint& c) {
  if (c.equations.empty()) return "true";
  std::string out;
  for (const Polynomial& p : c.equations) {
    if (!out.empty()) out += " and ";
    out += to_string(p) + " = 0";
  }
  return out;
}

std::string to_string_ascending(const CoefficientConstraint& c) {
  if (c.equations.empty()) return "true";
  std::string out;
  for (const Polynomial& p : c.equations) {
    if (!out.empty()) out += " and ";
    out += to_string_ascending(p) + " = 0";
  }
  return out;
}

}  // namespace feq
