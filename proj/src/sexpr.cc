#include "feq/sexpr.h"

#include <cctype>

#include "feq/error.h"

namespace feq {

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> all() {
    std::vector<SExpr> out;
    skip();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip();
    }
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    const std::size_t line = line_, column = column_;
    const char c = text_[pos_];
    if (c == ')') throw SyntaxError("unbalanced ')'", line, column);
    if (c == '(') {
      advance();
      std::vector<SExpr> items;
      skip();
      while (pos_ < text_.size() && text_[pos_] != ')') {
        items.push_back(read());
        skip();
      }
      if (pos_ >= text_.size()) throw SyntaxError("unclosed '('", line, column);
      advance();
      return SExpr(std::move(items));
    }
    const std::size_t begin = pos_;
    if (c == '"' || c == '|') {
      advance();
      while (pos_ < text_.size()) {
        if (text_[pos_] == c) {
          // SMT-LIB escapes a quote inside a string by doubling it.
          if (c == '"' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '"') {
            advance();
            advance();
            continue;
          }
          break;
        }
        advance();
      }
      if (pos_ >= text_.size()) throw SyntaxError("unterminated literal", line, column);
      advance();
      return SExpr(std::string(text_.substr(begin, pos_ - begin)));
    }
    while (pos_ < text_.size()) {
      const char d = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' || d == '"') break;
      advance();
    }
    return SExpr(std::string(text_.substr(begin, pos_ - begin)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void write(std::string& out, const SExpr& e) {
  if (e.is_atom()) {
    out += e.atom();
    return;
  }
  out += '(';
  bool first = true;
  for (const SExpr& item : e.items()) {
    if (!first) out += ' ';
    write(out, item);
    first = false;
  }
  out += ')';
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).all(); }

std::string to_string(const SExpr& e) {
  std::string out;
  write(out, e);
  return out;
}

std::ostream& operator<<(std::ostream& out, const SExpr& e) { return out << to_string(e); }

}  // namespace feq
