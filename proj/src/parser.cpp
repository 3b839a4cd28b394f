#include "commalg/parser.hpp"

#include <cctype>
#include <string>
#include <unordered_set>

#include "commalg/errors.hpp"

namespace commalg {

namespace {

enum class TokenKind { Ident, Number, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (pos_ >= src_.size()) return tok;

    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokenKind::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        tok.text.push_back(advance());
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        advance();
        advance();
        tok.kind = TokenKind::Symbol;
        tok.text = "->";
        return tok;
      }
      tok.kind = TokenKind::Number;
      tok.text.push_back(advance());
      while (pos_ < src_.size() &&
             (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '/')) {
        tok.text.push_back(advance());
      }
      return tok;
    }
    if (c == '{' || c == '}' || c == ':' || c == ',' || c == ';' || c == '[' ||
        c == ']' || c == '=') {
      tok.kind = TokenKind::Symbol;
      tok.text.push_back(advance());
      return tok;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     column_);
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { tok_ = lexer_.next(); }

  Quiver parse() {
    expect_keyword("quiver");
    const std::string name = expect_ident("quiver name");
    expect_symbol("{");

    expect_keyword("vertices");
    expect_symbol(":");
    std::vector<std::string> vertices;
    std::unordered_set<std::string> seen;
    for (;;) {
      const Token at = tok_;
      std::string v = expect_ident("vertex identifier");
      if (!seen.insert(v).second) {
        throw ParseError("duplicate vertex identifier '" + v + "'", at.line,
                         at.column);
      }
      vertices.push_back(std::move(v));
      if (!accept_symbol(",")) break;
    }
    expect_symbol(";");

    std::vector<Arrow> arrows;
    std::unordered_set<std::string> arrow_ids;
    while (!is_symbol("}")) {
      const Token at = tok_;
      Arrow a;
      a.id = expect_ident("arrow identifier");
      if (!arrow_ids.insert(a.id).second) {
        throw ParseError("duplicate arrow identifier '" + a.id + "'", at.line,
                         at.column);
      }
      a.label = a.id;
      expect_symbol(":");
      a.source = expect_vertex(vertices);
      expect_symbol("->");
      a.target = expect_vertex(vertices);
      if (accept_symbol("[")) {
        expect_keyword("weight");
        expect_symbol("=");
        const Token w = tok_;
        if (w.kind != TokenKind::Number) {
          throw ParseError("expected rational weight", w.line, w.column);
        }
        Scalar value;
        try {
          value = parse_rational(w.text);
        } catch (const ValidationError& e) {
          throw ParseError(e.what(), w.line, w.column);
        }
        if (Field::is_zero(value)) {
          throw ParseError("zero weight on arrow '" + a.id + "'", w.line,
                           w.column);
        }
        a.weight = value;
        tok_ = lexer_.next();
        expect_symbol("]");
      }
      expect_symbol(";");
      arrows.push_back(std::move(a));
    }
    expect_symbol("}");
    if (tok_.kind != TokenKind::End) {
      throw ParseError("trailing input after quiver body", tok_.line,
                       tok_.column);
    }
    return Quiver(name, std::move(vertices), std::move(arrows));
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found =
        tok_.kind == TokenKind::End ? "end of input" : "'" + tok_.text + "'";
    throw ParseError("expected " + expected + ", found " + found, tok_.line,
                     tok_.column);
  }

  bool is_symbol(const char* s) const {
    return tok_.kind == TokenKind::Symbol && tok_.text == s;
  }

  bool accept_symbol(const char* s) {
    if (!is_symbol(s)) return false;
    tok_ = lexer_.next();
    return true;
  }

  void expect_symbol(const char* s) {
    if (!accept_symbol(s)) fail(std::string("'") + s + "'");
  }

  void expect_keyword(const char* kw) {
    if (tok_.kind != TokenKind::Ident || tok_.text != kw) {
      fail(std::string("'") + kw + "'");
    }
    tok_ = lexer_.next();
  }

  std::string expect_ident(const char* what) {
    if (tok_.kind != TokenKind::Ident) fail(what);
    std::string s = std::move(tok_.text);
    tok_ = lexer_.next();
    return s;
  }

  VertexIndex expect_vertex(const std::vector<std::string>& vertices) {
    const Token at = tok_;
    const std::string id = expect_ident("vertex identifier");
    for (VertexIndex i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == id) return i;
    }
    throw ParseError("undeclared vertex '" + id + "'", at.line, at.column);
  }

  Lexer lexer_;
  Token tok_;
};

}  // namespace

Quiver parse_quiver(std::string_view text) { return Parser(text).parse(); }

}  // namespace commalg
