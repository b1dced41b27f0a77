#include "feq/parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "feq/error.h"
#include "feq/sexpr.h"

namespace feq {
namespace {

enum class Tok { Ident, Number, Op, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

// Multi-byte spellings folded onto the ASCII operator set.
constexpr std::array<std::pair<std::string_view, std::string_view>, 30> kAliases{{
    {"\\land", "and"},     {"\\wedge", "and"}, {"\\lor", "or"},      {"\\vee", "or"},
    {"\\lnot", "not"},     {"\\neg", "not"},   {"\\geq", ">="},      {"\\ge", ">="},
    {"\\leq", "<="},       {"\\le", "<="},     {"\\neq", "!="},      {"\\ne", "!="},
    {"\\cdot", "*"},       {"\\forall", "forall"}, {"\\exists", "exists"},
    {"∧", "and"},     {"∨", "or"},   {"¬", "not"},    {"≥", ">="},
    {"≤", "<="},      {"≠", "!="},   {"−", "-"},      {"·", "*"},
    {"∀", "forall"},  {"∃", "exists"}, {"/\\", "and"},     {"\\/", "or"},
    {"&&", "and"},         {"||", "or"},       {"→", "->"},
}};

constexpr std::array<std::string_view, 18> kOperators{
    "->", "=>", "<=", ">=", "!=", "==", "+", "-", "*", "/", "^", "(", ")", "=", "<", ">", ".", ":"};

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    const std::size_t column = i + 1;
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), line, column});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j + 1 < text.size() && text[j] == '.' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      out.push_back({Tok::Number, std::string(text.substr(i, j - i)), line, column});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& [spelling, canonical] : kAliases) {
      if (text.substr(i, spelling.size()) != spelling) continue;
      // LaTeX commands must not run into a longer command name.
      const std::size_t end = i + spelling.size();
      if (spelling.front() == '\\' && std::isalpha(static_cast<unsigned char>(spelling.back())) &&
          end < text.size() && std::isalpha(static_cast<unsigned char>(text[end])))
        continue;
      const bool word = std::isalpha(static_cast<unsigned char>(canonical.front()));
      out.push_back({word ? Tok::Ident : Tok::Op, std::string(canonical), line, column});
      i = end;
      matched = true;
      break;
    }
    if (matched) continue;
    for (std::string_view op : kOperators) {
      if (text.substr(i, op.size()) == op) {
        std::string canonical(op);
        if (canonical == "==") canonical = "=";
        if (canonical == "=>") canonical = "->";
        out.push_back({Tok::Op, canonical, line, column});
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (ch == ',') {
      out.push_back({Tok::Op, ",", line, column});
      ++i;
      continue;
    }
    throw SyntaxError("unexpected character '" + std::string(1, ch) + "'", line, column);
  }
  out.push_back({Tok::End, "", line, text.size() + 1});
  return out;
}

bool is_word(const Token& t, std::string_view w) { return t.kind == Tok::Ident && t.text == w; }
bool is_op(const Token& t, std::string_view op) { return t.kind == Tok::Op && t.text == op; }

std::optional<Relation> relation_of(const Token& t) {
  if (t.kind != Tok::Op) return std::nullopt;
  if (t.text == "=") return Relation::Eq;
  if (t.text == "!=") return Relation::Ne;
  if (t.text == "<") return Relation::Lt;
  if (t.text == "<=") return Relation::Le;
  if (t.text == ">") return Relation::Gt;
  if (t.text == ">=") return Relation::Ge;
  return std::nullopt;
}

constexpr std::array<std::string_view, 9> kKeywords{
    "forall", "exists", "and", "or", "not", "true", "false", "param", "f"};

bool is_keyword(std::string_view name) {
  return std::find(kKeywords.begin(), kKeywords.end(), name) != kKeywords.end();
}

using Resolver = std::function<Expr(const Token&)>;

class TokenParser {
 public:
  TokenParser(std::vector<Token> tokens, Resolver resolve)
      : tokens_(std::move(tokens)), resolve_(std::move(resolve)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  Token next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }

  [[noreturn]] void fail(const std::string& message, const Token& at) const {
    throw SyntaxError(message + (at.kind == Tok::End ? " at end of input" : " near '" + at.text + "'"),
                      at.line, at.column);
  }

  void expect_op(std::string_view op) {
    if (!is_op(peek(), op)) fail("expected '" + std::string(op) + "'", peek());
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", peek());
  }

  std::string expect_ident(std::string_view what) {
    if (peek().kind != Tok::Ident) fail("expected " + std::string(what), peek());
    return next().text;
  }

  Expr expression() {
    std::vector<Expr> terms{term()};
    while (is_op(peek(), "+") || is_op(peek(), "-")) {
      const bool minus = next().text == "-";
      Expr t = term();
      terms.push_back(minus ? Expr::negation(std::move(t)) : std::move(t));
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
  }

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

  std::vector<std::string>& bound() { return bound_; }

  Formula formula() {
    if (is_word(peek(), "forall") || is_word(peek(), "exists")) return quantified();
    Formula premise = disjunction();
    if (is_op(peek(), "->")) {
      ++pos_;
      return Formula::implication(std::move(premise), formula());
    }
    return premise;
  }

  /// Parses `v1 v2 ... .` after a quantifier keyword.
  std::vector<std::string> binder_list() {
    std::vector<std::string> vars;
    while (peek().kind == Tok::Ident && !is_op(peek(), ".")) {
      const Token t = next();
      if (is_keyword(t.text)) fail("reserved word cannot be bound", t);
      if (std::find(vars.begin(), vars.end(), t.text) != vars.end()) fail("variable bound twice", t);
      vars.push_back(t.text);
    }
    if (vars.empty()) fail("expected a variable after quantifier", peek());
    expect_op(".");
    return vars;
  }

 private:
  Expr term() {
    std::vector<Expr> factors{unary()};
    while (is_op(peek(), "*") || is_op(peek(), "/")) {
      if (is_op(peek(), "/")) throw UnsupportedFragment("division");
      ++pos_;
      factors.push_back(unary());
    }
    return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
  }

  Expr unary() {
    if (is_op(peek(), "-")) {
      ++pos_;
      // A minus directly before a literal is part of it: -2 is a constant.
      if (peek().kind == Tok::Number) {
        Expr operand = power();
        if (operand.is(ExprKind::Constant)) return Expr::constant(-operand.value());
        return Expr::negation(std::move(operand));
      }
      return Expr::negation(unary());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (!is_op(peek(), "^")) return base;
    ++pos_;
    const Token e = next();
    if (e.kind != Tok::Number || e.text.find('.') != std::string::npos)
      fail("exponent must be a positive integer literal", e);
    const Rational n = Rational::parse(e.text);
    if (n.is_zero() || n > Rational(64)) fail("exponent must be between 1 and 64", e);
    return Expr::power(std::move(base), static_cast<unsigned>(n.numerator().get_ui()));
  }

  Expr atom() {
    const Token t = next();
    if (t.kind == Tok::Number) {
      Rational value = Rational::parse(t.text);
      if (is_op(peek(), "/")) {
        // Only integer/integer literals; any other quotient is division.
        if (peek(1).kind != Tok::Number || t.text.find('.') != std::string::npos ||
            peek(1).text.find('.') != std::string::npos)
          throw UnsupportedFragment("division");
        ++pos_;
        const Rational den = Rational::parse(next().text);
        if (den.is_zero()) fail("zero denominator in literal", t);
        value = value / den;
      }
      return Expr::constant(std::move(value));
    }
    if (is_op(t, "(")) {
      Expr inner = expression();
      expect_op(")");
      return inner;
    }
    if (t.kind == Tok::Ident) {
      if (is_op(peek(), "(")) {
        if (t.text != "f") throw UnknownIdentifier("unknown function '" + t.text + "'");
        ++pos_;
        Expr argument = expression();
        if (is_op(peek(), ",")) fail("f is unary", peek());
        expect_op(")");
        return Expr::apply(std::move(argument));
      }
      if (t.text == "f") throw UnknownIdentifier("f used without an argument");
      if (is_keyword(t.text)) fail("unexpected keyword", t);
      if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) return Expr::variable(t.text);
      return resolve_(t);
    }
    fail("expected an expression", t);
  }

  Formula quantified() {
    const bool universal = next().text == "forall";
    std::vector<std::string> vars = binder_list();
    const std::size_t depth = bound_.size();
    bound_.insert(bound_.end(), vars.begin(), vars.end());
    Formula body = formula();
    bound_.resize(depth);
    return universal ? Formula::forall(std::move(vars), std::move(body))
                     : Formula::exists(std::move(vars), std::move(body));
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (is_word(peek(), "or")) {
      ++pos_;
      parts.push_back(conjunction());
    }
    return Formula::disjunction(std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary_formula()};
    while (is_word(peek(), "and")) {
      ++pos_;
      parts.push_back(unary_formula());
    }
    return Formula::conjunction(std::move(parts));
  }

  Formula unary_formula() {
    if (is_word(peek(), "not")) {
      ++pos_;
      return Formula::negation(unary_formula());
    }
    if (is_word(peek(), "forall") || is_word(peek(), "exists")) return quantified();
    if (is_word(peek(), "true")) {
      ++pos_;
      return Formula::truth();
    }
    if (is_word(peek(), "false")) {
      ++pos_;
      return Formula::falsity();
    }
    if (is_op(peek(), "(")) {
      const std::size_t saved = pos_;
      try {
        return atom_formula();
      } catch (const SyntaxError&) {
        pos_ = saved;
      }
      ++pos_;
      Formula inner = formula();
      expect_op(")");
      return inner;
    }
    return atom_formula();
  }

  Formula atom_formula() {
    Expr lhs = expression();
    const auto rel = relation_of(peek());
    if (!rel) fail("expected a relation", peek());
    ++pos_;
    Expr rhs = expression();
    return Formula::atom(*rel, std::move(lhs), std::move(rhs));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Resolver resolve_;
  std::vector<std::string> bound_;
};

constexpr std::array<std::string_view, 4> kReservedVariables{"a", "b", "c", "d"};

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line : line.substr(0, hash));
}

Parameter parse_parameter(TokenParser& tp) {
  Parameter param;
  const Token name = tp.peek();
  param.name = tp.expect_ident("parameter name");
  if (is_keyword(param.name)) tp.fail("reserved word used as parameter", name);
  tp.expect_op(":");
  const Token type = tp.peek();
  if (tp.expect_ident("parameter type") != "Real") tp.fail("parameters must have type Real", type);
  if (const auto rel = relation_of(tp.peek()); rel && *rel != Relation::Eq && *rel != Relation::Ne) {
    tp.next();
    bool negative = false;
    if (is_op(tp.peek(), "-")) {
      tp.next();
      negative = true;
    }
    const Token num = tp.next();
    if (num.kind != Tok::Number) tp.fail("expected a numeric bound", num);
    Rational bound = Rational::parse(num.text);
    if (is_op(tp.peek(), "/")) {
      tp.next();
      const Token den = tp.next();
      if (den.kind != Tok::Number) tp.fail("expected a denominator", den);
      bound = bound / Rational::parse(den.text);
    }
    param.relation = *rel;
    param.bound = negative ? -bound : bound;
  }
  return param;
}

Domain parse_type(TokenParser& tp) {
  const Token t = tp.peek();
  const std::string name = tp.expect_ident("type");
  if (name == "Real") return Domain::Real;
  if (name == "Int") return Domain::Integer;
  tp.fail("unknown type", t);
}

Equation parse_assert(std::vector<Token> tokens) {
  TokenParser tp(std::move(tokens), [](const Token& t) -> Expr {
    throw UnboundVariable(std::to_string(t.line) + ":" + std::to_string(t.column) + ": variable '" +
                          t.text + "' is not bound by the quantifier");
  });
  Equation eq;
  if (is_word(tp.peek(), "forall")) {
    tp.next();
    eq.vars = tp.binder_list();
    for (const auto& v : eq.vars) {
      if (std::find(kReservedVariables.begin(), kReservedVariables.end(), v) != kReservedVariables.end())
        throw UnknownIdentifier("variable name '" + v + "' is reserved for template coefficients");
    }
    tp.bound() = eq.vars;
  }
  eq.lhs = tp.expression();
  if (!is_op(tp.peek(), "=")) {
    if (relation_of(tp.peek()))
      throw UnsupportedFragment("assertions must be equations; use a condition line for order constraints");
    tp.fail("expected '='", tp.peek());
  }
  tp.next();
  eq.rhs = tp.expression();
  tp.expect_end();
  return eq;
}

SolutionCandidate parse_solution(std::vector<Token> tokens) {
  // Parameters follow the body, so they are read first.
  const auto param_at = std::find_if(tokens.begin(), tokens.end(),
                                     [](const Token& t) { return is_word(t, "param"); });
  std::vector<Token> head(tokens.begin(), param_at);
  head.push_back({Tok::End, "", tokens.back().line, param_at == tokens.end() ? tokens.back().column : param_at->column});

  SolutionCandidate s;
  if (param_at != tokens.end()) {
    std::vector<Token> rest(param_at, tokens.end());
    TokenParser pp(std::move(rest), [](const Token& t) -> Expr { return Expr::variable(t.text); });
    while (is_word(pp.peek(), "param")) {
      pp.next();
      s.params.push_back(parse_parameter(pp));
      if (is_op(pp.peek(), ",")) pp.next();
    }
    pp.expect_end();
  }

  TokenParser tp(std::move(head), [&s](const Token& t) -> Expr {
    for (const auto& p : s.params) {
      if (p.name == t.text) return Expr::coefficient(t.text);
    }
    throw UnboundVariable(std::to_string(t.line) + ":" + std::to_string(t.column) + ": '" + t.text +
                          "' is neither the solution variable nor a declared parameter");
  });
  const Token f = tp.peek();
  if (tp.expect_ident("f") != "f") tp.fail("a solution must define f", f);
  tp.expect_op("(");
  s.var = tp.expect_ident("solution variable");
  tp.expect_op(")");
  tp.expect_op("=");
  for (const auto& p : s.params) {
    if (p.name == s.var) throw SyntaxError("parameter shadows the solution variable", f.line, f.column);
  }
  tp.bound() = {s.var};
  s.body = tp.expression();
  tp.expect_end();
  if (contains_apply(s.body)) throw SyntaxError("a solution body cannot mention f", f.line, f.column);
  return s;
}

std::string print_number(const Rational& r) { return r.to_string(); }

}  // namespace

Problem parse_problem(std::string_view text) {
  Problem p;
  bool have_name = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string line = strip_comment(raw);
    std::vector<Token> tokens = tokenize(line, line_no);
    if (tokens.front().kind == Tok::End) continue;
    const Token keyword = tokens.front();
    if (keyword.kind != Tok::Ident) throw SyntaxError("expected a directive", line_no, keyword.column);
    std::vector<Token> rest(tokens.begin() + 1, tokens.end());

    if (keyword.text == "problem") {
      if (have_name) throw SyntaxError("duplicate problem line", line_no, keyword.column);
      TokenParser tp(std::move(rest), nullptr);
      p.name = tp.expect_ident("problem name");
      tp.expect_end();
      have_name = true;
    } else if (!have_name) {
      throw SyntaxError("file must start with a problem line", line_no, keyword.column);
    } else if (keyword.text == "domain") {
      TokenParser tp(std::move(rest), nullptr);
      p.domain = parse_type(tp);
      tp.expect_end();
    } else if (keyword.text == "function") {
      TokenParser tp(std::move(rest), nullptr);
      const Token name = tp.peek();
      if (tp.expect_ident("function name") != "f")
        throw UnknownIdentifier("only a single unknown function named f is supported");
      tp.expect_op(":");
      const Domain from = parse_type(tp);
      tp.expect_op("->");
      const Domain to = parse_type(tp);
      tp.expect_end();
      if (from != to || from != p.domain)
        throw SyntaxError("function type must be D -> D for the problem domain D", line_no, name.column);
    } else if (keyword.text == "condition") {
      const std::string body = trim(std::string_view(line).substr(keyword.column - 1 + keyword.text.size()));
      if (body.empty()) throw SyntaxError("empty condition", line_no, keyword.column);
      if (body.front() == '(') {
        try {
          if (read_sexprs(body).size() != 1) throw SyntaxError("expected one s-expression", line_no, keyword.column);
        } catch (const SyntaxError& e) {
          throw SyntaxError(std::string("bad raw condition: ") + e.what(), line_no, keyword.column);
        }
      } else if (!is_known_side_condition(body)) {
        throw UnknownIdentifier("unknown side condition '" + body + "'");
      }
      p.side_conditions.push_back({body});
    } else if (keyword.text == "assert") {
      p.equations.push_back(parse_assert(std::move(rest)));
    } else if (keyword.text == "solution") {
      p.solutions.push_back(parse_solution(std::move(rest)));
    } else {
      throw SyntaxError("unknown directive '" + keyword.text + "'", line_no, keyword.column);
    }
  }
  if (!have_name) throw SyntaxError("missing problem line", 1, 1);
  if (p.equations.empty()) throw SyntaxError("a problem needs at least one assert line", line_no, 1);
  return p;
}

std::string print_problem(const Problem& p) {
  const std::string type = p.domain == Domain::Real ? "Real" : "Int";
  std::string out = "problem " + p.name + "\n";
  out += "domain " + type + "\n";
  out += "function f : " + type + " -> " + type + "\n";
  for (const auto& c : p.side_conditions) out += "condition " + c.text + "\n";
  for (const auto& eq : p.equations) {
    out += "assert ";
    if (!eq.vars.empty()) {
      out += "forall";
      for (const auto& v : eq.vars) out += " " + v;
      out += " . ";
    }
    out += to_string(eq.lhs) + " = " + to_string(eq.rhs) + "\n";
  }
  for (const auto& s : p.solutions) {
    out += "solution f(" + s.var + ") = " + to_string(s.body);
    for (const auto& param : s.params) {
      out += "  param " + param.name + " : Real";
      if (param.relation) out += std::string(" ") + relation_symbol(*param.relation) + " " + print_number(param.bound);
    }
    out += "\n";
  }
  return out;
}

Expr parse_expression(std::string_view text, const std::set<std::string>& variables) {
  TokenParser tp(tokenize(text, 1), [&variables](const Token& t) {
    return variables.count(t.text) ? Expr::variable(t.text) : Expr::coefficient(t.text);
  });
  Expr e = tp.expression();
  tp.expect_end();
  return e;
}

Formula parse_formula(std::string_view text) {
  // Newlines are plain whitespace here.
  std::string flat(text);
  std::replace(flat.begin(), flat.end(), '\n', ' ');
  TokenParser tp(tokenize(flat, 1), [](const Token& t) { return Expr::coefficient(t.text); });
  Formula f = tp.formula();
  tp.expect_end();
  return f;
}

}  // namespace feq
