#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace feq {

/// S-expression as used by SMT-LIB: an atom (symbol, numeral, keyword or
/// string literal, stored verbatim) or a list.
class SExpr {
 public:
  SExpr() = default;
  SExpr(std::string atom) : value_(std::move(atom)) {}  // NOLINT(google-explicit-constructor)
  SExpr(const char* atom) : value_(std::string(atom)) {}  // NOLINT(google-explicit-constructor)
  SExpr(std::vector<SExpr> list) : value_(std::move(list)) {}  // NOLINT(google-explicit-constructor)

  static SExpr list(std::initializer_list<SExpr> items) { return SExpr(std::vector<SExpr>(items)); }

  bool is_atom() const { return std::holds_alternative<std::string>(value_); }
  const std::string& atom() const { return std::get<std::string>(value_); }
  const std::vector<SExpr>& items() const { return std::get<std::vector<SExpr>>(value_); }
  std::vector<SExpr>& items() { return std::get<std::vector<SExpr>>(value_); }

  friend bool operator==(const SExpr&, const SExpr&) = default;

 private:
  std::variant<std::string, std::vector<SExpr>> value_ = std::vector<SExpr>{};
};

/// Reads every top-level s-expression; `;` starts a line comment. Throws
/// SyntaxError on unbalanced parentheses or unterminated literals.
std::vector<SExpr> read_sexprs(std::string_view text);

/// Single-line rendering with one space between list items.
std::string to_string(const SExpr& e);
std::ostream& operator<<(std::ostream& out, const SExpr& e);

}  // namespace feq
