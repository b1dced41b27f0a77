#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "feq/poly.h"

namespace feq {

/// Conjunction of polynomial equations p = 0 over template coefficients only.
struct CoefficientConstraint {
  std::vector<Polynomial> equations;

  friend bool operator==(const CoefficientConstraint&, const CoefficientConstraint&) = default;
};

/// Eliminates the universally quantified problem variables from the inlined
/// identities. Over an infinite field a polynomial vanishes everywhere iff all
/// of its coefficients with respect to the quantified variables vanish, so the
/// result is the normalized union of those coefficients.
CoefficientConstraint eliminate(std::span<const Polynomial> inlined, const std::set<std::string>& problem_vars);

/// Divides each equation by its content with the sign chosen so the leading
/// graded-lex coefficient is positive.
Polynomial normalize_equation(const Polynomial& p);

/// Drops 0 = 0, normalizes each equation, removes duplicates, and sorts by
/// (number of symbols, degree, terms). Purely syntactic: no entailment.
CoefficientConstraint normalize_constraint(const CoefficientConstraint& c);

std::string to_string(const CoefficientConstraint& c);
/// Same constraint with constant terms first: "-1 + a = 0".
std::string to_string_ascending(const CoefficientConstraint& c);

}  // namespace feq
