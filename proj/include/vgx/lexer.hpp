#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace vgx {

enum class TokenKind {
  Identifier,
  Keyword,
  Number,
  String,
  Char,
  Punct,
  Hole,  // template mode only: h0, h1, ... / hole0, hole1, ...
  Glob,  // template mode only: *name*
};

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t offset = 0;  // byte offset into the source
  int line = 1;            // 1-based
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t offset_, int line_, const std::string& expected_)
      : std::runtime_error("parse error at offset " + std::to_string(offset_) +
                           " (line " + std::to_string(line_) + "): expected " + expected_),
        offset(offset_),
        line(line_),
        expected(expected_) {}
  std::size_t offset;
  int line;
  std::string expected;
};

inline const std::unordered_set<std::string>& keyword_set() {
  static const std::unordered_set<std::string> kw = {
      "int",    "char",     "long",   "short",  "unsigned", "signed",  "float",
      "double", "void",     "const",  "static", "extern",   "volatile", "inline",
      "struct", "union",    "enum",   "if",     "else",     "for",     "while",
      "do",     "switch",   "case",   "default", "break",   "continue", "return",
      "sizeof", "register", "typedef"};
  return kw;
}

inline bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }

// True for h<k> / hole<k> names, which act as hole atoms in template mode.
inline bool is_hole_name(std::string_view s) {
  std::size_t i = 1;
  if (s.empty() || s[0] != 'h') return false;
  if (s.size() >= 4 && s.substr(0, 4) == "hole") i = 4;
  if (i >= s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!is_digit(s[k])) return false;
  return true;
}

inline int hole_index(std::string_view s) {
  std::size_t i = (s.size() >= 4 && s.substr(0, 4) == "hole") ? 4 : 1;
  return std::stoi(std::string(s.substr(i)));
}

// Maximal-munch lexer for the supported C subset. In template mode, *name*
// atoms lex as Glob tokens and h<k>/hole<k> identifiers as Hole tokens.
inline std::vector<Token> lex(std::string_view src, bool template_mode = false) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  const std::size_t n = src.size();
  bool at_line_start = true;

  auto push = [&](TokenKind k, std::size_t start, std::size_t end) {
    out.push_back(Token{k, std::string(src.substr(start, end - start)), start, line});
  };

  static const char* three_ops[] = {"<<=", ">>=", "..."};
  static const char* two_ops[] = {"==", "!=", "<=", ">=", "&&", "||", "<<", ">>", "+=",
                                  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "->", "++", "--"};

  while (i < n) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      ++i;
      at_line_start = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++i;
      continue;
    }
    if (c == '#' && at_line_start) throw ParseError(i, line, "no preprocessor directives");
    at_line_start = false;
    if (c == '/' && i + 1 < n && src[i + 1] == '/') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && src[i + 1] == '*') {
      std::size_t j = i + 2;
      while (j + 1 < n && !(src[j] == '*' && src[j + 1] == '/')) {
        if (src[j] == '\n') ++line;
        ++j;
      }
      if (j + 1 >= n) throw ParseError(i, line, "closing */");
      i = j + 2;
      continue;
    }
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < n && is_ident_char(src[j])) ++j;
      std::string_view word = src.substr(i, j - i);
      if (keyword_set().count(std::string(word))) {
        push(TokenKind::Keyword, i, j);
      } else if (template_mode && is_hole_name(word)) {
        push(TokenKind::Hole, i, j);
      } else {
        push(TokenKind::Identifier, i, j);
      }
      i = j;
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(src[i + 1]))) {
      std::size_t j = i;
      if (src[j] == '0' && j + 1 < n && (src[j + 1] == 'x' || src[j + 1] == 'X')) {
        j += 2;
        while (j < n && (is_digit(src[j]) || (src[j] >= 'a' && src[j] <= 'f') ||
                         (src[j] >= 'A' && src[j] <= 'F')))
          ++j;
      } else {
        while (j < n && is_digit(src[j])) ++j;
        if (j < n && src[j] == '.') {
          ++j;
          while (j < n && is_digit(src[j])) ++j;
        }
        if (j < n && (src[j] == 'e' || src[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
          if (k < n && is_digit(src[k])) {
            j = k;
            while (j < n && is_digit(src[j])) ++j;
          }
        }
      }
      while (j < n && (src[j] == 'u' || src[j] == 'U' || src[j] == 'l' || src[j] == 'L' ||
                       src[j] == 'f' || src[j] == 'F'))
        ++j;
      push(TokenKind::Number, i, j);
      i = j;
      continue;
    }
    if (c == '"' || c == '\'') {
      char quote = c;
      std::size_t j = i + 1;
      while (j < n && src[j] != quote) {
        if (src[j] == '\\' && j + 1 < n) ++j;
        if (src[j] == '\n') ++line;
        ++j;
      }
      if (j >= n) throw ParseError(i, line, std::string("closing ") + quote);
      push(quote == '"' ? TokenKind::String : TokenKind::Char, i, j + 1);
      i = j + 1;
      continue;
    }
    // template mode: *word* is a single glob atom
    if (template_mode && c == '*' && i + 1 < n && is_ident_start(src[i + 1])) {
      std::size_t j = i + 1;
      while (j < n && is_ident_char(src[j])) ++j;
      if (j < n && src[j] == '*') {
        push(TokenKind::Glob, i, j + 1);
        i = j + 1;
        continue;
      }
    }
    bool matched = false;
    for (const char* op : three_ops) {
      if (src.substr(i, 3) == op) {
        push(TokenKind::Punct, i, i + 3);
        i += 3;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const char* op : two_ops) {
      if (src.substr(i, 2) == op) {
        push(TokenKind::Punct, i, i + 2);
        i += 2;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    static const std::string singles = "+-*/%=<>!&|^~?:;,.(){}[]";
    if (singles.find(c) != std::string::npos) {
      push(TokenKind::Punct, i, i + 1);
      ++i;
      continue;
    }
    throw ParseError(i, line, "a token");
  }
  return out;
}

}  // namespace vgx
