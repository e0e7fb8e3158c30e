#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vgx/ast.hpp"
#include "vgx/lexer.hpp"

namespace vgx {

// Recursive-descent parser for a C99 statement/expression subset: declarations,
// assignments, calls, if/for/while/do/switch, return/break/continue, unary /
// binary / index / member expressions and casts. One function definition per
// input. Preprocessor directives are rejected by the lexer.
//
// Every source token becomes a terminal node, so the concatenated terminal
// lexemes of any subtree re-tokenize to the original token sequence. Braceless
// if/loop bodies are wrapped in an implicit compound_statement (one without
// brace terminals).
class Parser {
 public:
  Parser(std::vector<Token> tokens, bool template_mode)
      : toks_(std::move(tokens)), template_mode_(template_mode) {}

  AstNodePtr parse_function() {
    auto specs = parse_decl_specifiers();
    if (specs.empty()) fail("a type specifier");
    auto decl = parse_declarator();
    std::vector<AstNodePtr> kids;
    for (auto& s : specs) kids.push_back(std::move(s));
    kids.push_back(std::move(decl));
    kids.push_back(parse_compound());
    expect_end();
    return AstNode::interior(NodeKind::FunctionDefinition, std::move(kids));
  }

  AstNodePtr parse_single_statement() {
    auto s = parse_statement();
    expect_end();
    return s;
  }

  std::vector<AstNodePtr> parse_statement_list() {
    std::vector<AstNodePtr> out;
    while (!at_end()) out.push_back(parse_statement());
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool template_mode_;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token& peek(std::size_t ahead = 0) const {
    static Token eof{TokenKind::Punct, "", 0, 0};
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : eof;
  }
  bool peek_is(const char* text, std::size_t ahead = 0) const { return peek(ahead).text == text; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::size_t off = at_end() ? (toks_.empty() ? 0 : toks_.back().offset + toks_.back().text.size())
                               : peek().offset;
    int line = at_end() ? (toks_.empty() ? 1 : toks_.back().line) : peek().line;
    throw ParseError(off, line, expected);
  }

  Token take() {
    if (at_end()) fail("more input");
    return toks_[pos_++];
  }

  AstNodePtr take_terminal(NodeKind k) {
    Token t = take();
    auto n = AstNode::terminal(k, t);
    if (t.kind == TokenKind::Hole) n->hole_id = hole_index(t.text);
    return n;
  }

  AstNodePtr expect_punct(const char* text) {
    if (peek().kind != TokenKind::Punct || peek().text != text) fail(std::string("'") + text + "'");
    return take_terminal(NodeKind::Punct);
  }

  AstNodePtr expect_keyword(const char* text) {
    if (peek().kind != TokenKind::Keyword || peek().text != text) fail(std::string("'") + text + "'");
    return take_terminal(NodeKind::Keyword);
  }

  void expect_end() const {
    if (!at_end()) {
      throw ParseError(peek().offset, peek().line, "end of input");
    }
  }

  // --- types ---------------------------------------------------------------

  static bool is_primitive_type_word(const std::string& t) {
    return t == "int" || t == "char" || t == "long" || t == "short" || t == "unsigned" ||
           t == "signed" || t == "float" || t == "double" || t == "void";
  }
  static bool is_storage_word(const std::string& t) {
    return t == "static" || t == "extern" || t == "register" || t == "typedef";
  }
  static bool is_qualifier_word(const std::string& t) {
    return t == "const" || t == "volatile" || t == "inline";
  }

  bool at_type_keyword() const {
    return peek().kind == TokenKind::Keyword &&
           (is_primitive_type_word(peek().text) || is_storage_word(peek().text) ||
            is_qualifier_word(peek().text) || peek().text == "struct" || peek().text == "union" ||
            peek().text == "enum");
  }

  // specifiers: storage/qualifier/primitive keywords, struct names, or (when a
  // declaration has already been committed to) a leading type identifier/hole
  std::vector<AstNodePtr> parse_decl_specifiers() {
    std::vector<AstNodePtr> specs;
    for (;;) {
      const Token& t = peek();
      if (t.kind == TokenKind::Keyword) {
        if (is_storage_word(t.text)) {
          specs.push_back(take_terminal(NodeKind::StorageClassSpecifier));
          continue;
        }
        if (is_qualifier_word(t.text)) {
          specs.push_back(take_terminal(NodeKind::TypeQualifier));
          continue;
        }
        if (is_primitive_type_word(t.text)) {
          specs.push_back(take_terminal(NodeKind::PrimitiveType));
          continue;
        }
        if (t.text == "struct" || t.text == "union" || t.text == "enum") {
          std::vector<AstNodePtr> kids;
          kids.push_back(take_terminal(NodeKind::Keyword));
          if (peek().kind == TokenKind::Identifier)
            kids.push_back(take_terminal(NodeKind::Identifier));
          specs.push_back(AstNode::interior(NodeKind::StructSpecifier, std::move(kids)));
          continue;
        }
      }
      break;
    }
    // a lone identifier acts as a typedef name when nothing concrete was seen
    // yet and a declarator follows (int64_t x; / h0 h1 = h2;)
    if ((peek().kind == TokenKind::Identifier || peek().kind == TokenKind::Hole) &&
        looks_like_declarator_follows()) {
      if (!has_concrete_type(specs)) {
        specs.push_back(take_terminal(peek().kind == TokenKind::Hole ? NodeKind::Hole
                                                                     : NodeKind::TypeIdentifier));
      }
    }
    return specs;
  }

  static bool has_concrete_type(const std::vector<AstNodePtr>& specs) {
    for (const auto& s : specs) {
      if (s->kind == NodeKind::PrimitiveType || s->kind == NodeKind::TypeIdentifier ||
          s->kind == NodeKind::StructSpecifier || s->kind == NodeKind::Hole)
        return true;
    }
    return false;
  }

  bool looks_like_declarator_follows() const {
    std::size_t j = 1;
    while (peek(j).kind == TokenKind::Punct && peek(j).text == "*") ++j;
    return peek(j).kind == TokenKind::Identifier || peek(j).kind == TokenKind::Hole;
  }

  AstNodePtr parse_type_descriptor() {
    auto specs = parse_decl_specifiers();
    if (specs.empty()) fail("a type");
    std::vector<AstNodePtr> kids = std::move(specs);
    while (peek_is("*")) kids.push_back(expect_punct("*"));
    return AstNode::interior(NodeKind::TypeDescriptor, std::move(kids));
  }

  // --- declarators -----------------------------------------------------------

  AstNodePtr parse_declarator() {
    if (peek_is("*")) {
      std::vector<AstNodePtr> kids;
      kids.push_back(expect_punct("*"));
      kids.push_back(parse_declarator());
      return AstNode::interior(NodeKind::PointerDeclarator, std::move(kids));
    }
    AstNodePtr base;
    if (peek().kind == TokenKind::Identifier) {
      base = take_terminal(NodeKind::Identifier);
    } else if (template_mode_ && peek().kind == TokenKind::Hole) {
      base = take_terminal(NodeKind::Hole);
    } else {
      fail("a declarator name");
    }
    for (;;) {
      if (peek_is("(")) {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(base));
        kids.push_back(parse_parameter_list());
        base = AstNode::interior(NodeKind::FunctionDeclarator, std::move(kids));
      } else if (peek_is("[")) {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(base));
        kids.push_back(expect_punct("["));
        if (!peek_is("]")) kids.push_back(parse_assignment_expression());
        kids.push_back(expect_punct("]"));
        base = AstNode::interior(NodeKind::ArrayDeclarator, std::move(kids));
      } else {
        break;
      }
    }
    return base;
  }

  AstNodePtr parse_parameter_list() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_punct("("));
    if (!peek_is(")")) {
      for (;;) {
        if (peek_is("...")) {
          kids.push_back(take_terminal(NodeKind::Punct));
        } else {
          kids.push_back(parse_parameter_declaration());
        }
        if (peek_is(",")) {
          kids.push_back(expect_punct(","));
          continue;
        }
        break;
      }
    }
    kids.push_back(expect_punct(")"));
    return AstNode::interior(NodeKind::ParameterList, std::move(kids));
  }

  AstNodePtr parse_parameter_declaration() {
    auto specs = parse_decl_specifiers();
    if (specs.empty()) fail("a parameter type");
    std::vector<AstNodePtr> kids = std::move(specs);
    while (peek_is("*") &&
           !(peek(1).kind == TokenKind::Identifier || peek(1).kind == TokenKind::Hole ||
             peek_is("*", 1))) {
      kids.push_back(expect_punct("*"));  // abstract pointer parameter
    }
    if (peek().kind == TokenKind::Identifier || peek().kind == TokenKind::Hole || peek_is("*")) {
      kids.push_back(parse_declarator());
    }
    return AstNode::interior(NodeKind::ParameterDeclaration, std::move(kids));
  }

  // --- statements ------------------------------------------------------------

  AstNodePtr parse_statement() {
    const Token& t = peek();
    if (t.kind == TokenKind::Punct) {
      if (t.text == "{") return parse_compound();
      if (t.text == ";") {
        std::vector<AstNodePtr> kids;
        kids.push_back(expect_punct(";"));
        return AstNode::interior(NodeKind::EmptyStatement, std::move(kids));
      }
    }
    if (t.kind == TokenKind::Keyword) {
      const std::string& kw = t.text;
      if (kw == "if") return parse_if();
      if (kw == "while") return parse_while();
      if (kw == "do") return parse_do();
      if (kw == "for") return parse_for();
      if (kw == "switch") return parse_switch();
      if (kw == "case" || kw == "default") return parse_case();
      if (kw == "return") {
        std::vector<AstNodePtr> kids;
        kids.push_back(take_terminal(NodeKind::Keyword));
        if (!peek_is(";")) kids.push_back(parse_expression());
        kids.push_back(expect_punct(";"));
        return AstNode::interior(NodeKind::ReturnStatement, std::move(kids));
      }
      if (kw == "break" || kw == "continue") {
        NodeKind nk = kw == "break" ? NodeKind::BreakStatement : NodeKind::ContinueStatement;
        std::vector<AstNodePtr> kids;
        kids.push_back(take_terminal(NodeKind::Keyword));
        kids.push_back(expect_punct(";"));
        return AstNode::interior(nk, std::move(kids));
      }
      if (at_type_keyword()) return parse_declaration();
      fail("a statement");
    }
    if (starts_declaration()) return parse_declaration();
    return parse_expression_statement();
  }

  // identifier-led declarations: IDENT '*'* IDENT followed by ; = , [
  bool starts_declaration() const {
    if (at_type_keyword()) return true;
    if (peek().kind != TokenKind::Identifier && peek().kind != TokenKind::Hole) return false;
    std::size_t j = 1;
    while (peek(j).kind == TokenKind::Punct && peek(j).text == "*") ++j;
    if (peek(j).kind != TokenKind::Identifier && peek(j).kind != TokenKind::Hole) return false;
    const Token& after = peek(j + 1);
    return after.kind == TokenKind::Punct &&
           (after.text == ";" || after.text == "=" || after.text == "," || after.text == "[");
  }

  AstNodePtr parse_declaration() {
    auto specs = parse_decl_specifiers();
    if (specs.empty()) fail("a type specifier");
    std::vector<AstNodePtr> kids = std::move(specs);
    for (;;) {
      auto decl = parse_declarator();
      if (peek_is("=")) {
        std::vector<AstNodePtr> init;
        init.push_back(std::move(decl));
        init.push_back(expect_punct("="));
        init.push_back(parse_assignment_expression());
        kids.push_back(AstNode::interior(NodeKind::InitDeclarator, std::move(init)));
      } else {
        kids.push_back(std::move(decl));
      }
      if (peek_is(",")) {
        kids.push_back(expect_punct(","));
        continue;
      }
      break;
    }
    kids.push_back(expect_punct(";"));
    return AstNode::interior(NodeKind::Declaration, std::move(kids));
  }

  AstNodePtr parse_compound() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_punct("{"));
    while (!peek_is("}")) {
      if (at_end()) fail("'}'");
      kids.push_back(parse_statement());
    }
    kids.push_back(expect_punct("}"));
    return AstNode::interior(NodeKind::CompoundStatement, std::move(kids));
  }

  // bodies of if/else/loops are normalized to compound_statement
  AstNodePtr parse_body() {
    if (peek_is("{")) return parse_compound();
    std::vector<AstNodePtr> kids;
    kids.push_back(parse_statement());
    return AstNode::interior(NodeKind::CompoundStatement, std::move(kids));
  }

  AstNodePtr parse_if() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_keyword("if"));
    kids.push_back(expect_punct("("));
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(")"));
    kids.push_back(parse_body());
    if (peek().kind == TokenKind::Keyword && peek().text == "else") {
      kids.push_back(take_terminal(NodeKind::Keyword));
      kids.push_back(parse_body());
    }
    return AstNode::interior(NodeKind::IfStatement, std::move(kids));
  }

  AstNodePtr parse_while() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_keyword("while"));
    kids.push_back(expect_punct("("));
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(")"));
    kids.push_back(parse_body());
    return AstNode::interior(NodeKind::WhileStatement, std::move(kids));
  }

  AstNodePtr parse_do() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_keyword("do"));
    kids.push_back(parse_body());
    kids.push_back(expect_keyword("while"));
    kids.push_back(expect_punct("("));
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(")"));
    kids.push_back(expect_punct(";"));
    return AstNode::interior(NodeKind::DoStatement, std::move(kids));
  }

  AstNodePtr parse_for() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_keyword("for"));
    kids.push_back(expect_punct("("));
    if (peek_is(";")) {
      std::vector<AstNodePtr> e;
      e.push_back(expect_punct(";"));
      kids.push_back(AstNode::interior(NodeKind::EmptyStatement, std::move(e)));
    } else if (starts_declaration() || at_type_keyword()) {
      kids.push_back(parse_declaration());
    } else {
      std::vector<AstNodePtr> e;
      e.push_back(parse_expression());
      e.push_back(expect_punct(";"));
      kids.push_back(AstNode::interior(NodeKind::ExpressionStatement, std::move(e)));
    }
    if (!peek_is(";")) kids.push_back(parse_expression());
    kids.push_back(expect_punct(";"));
    if (!peek_is(")")) kids.push_back(parse_expression());
    kids.push_back(expect_punct(")"));
    kids.push_back(parse_body());
    return AstNode::interior(NodeKind::ForStatement, std::move(kids));
  }

  AstNodePtr parse_switch() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_keyword("switch"));
    kids.push_back(expect_punct("("));
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(")"));
    kids.push_back(parse_compound());
    return AstNode::interior(NodeKind::SwitchStatement, std::move(kids));
  }

  AstNodePtr parse_case() {
    std::vector<AstNodePtr> kids;
    if (peek().text == "case") {
      kids.push_back(expect_keyword("case"));
      kids.push_back(parse_conditional_expression());
    } else {
      kids.push_back(expect_keyword("default"));
    }
    kids.push_back(expect_punct(":"));
    return AstNode::interior(NodeKind::CaseStatement, std::move(kids));
  }

  AstNodePtr parse_expression_statement() {
    std::vector<AstNodePtr> kids;
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(";"));
    return AstNode::interior(NodeKind::ExpressionStatement, std::move(kids));
  }

  // --- expressions -----------------------------------------------------------

  AstNodePtr parse_expression() {
    auto first = parse_assignment_expression();
    if (!peek_is(",")) return first;
    std::vector<AstNodePtr> kids;
    kids.push_back(std::move(first));
    while (peek_is(",")) {
      kids.push_back(expect_punct(","));
      kids.push_back(parse_assignment_expression());
    }
    return AstNode::interior(NodeKind::CommaExpression, std::move(kids));
  }

  static bool is_assign_op(const Token& t) {
    return t.kind == TokenKind::Punct &&
           (t.text == "=" || t.text == "+=" || t.text == "-=" || t.text == "*=" ||
            t.text == "/=" || t.text == "%=" || t.text == "&=" || t.text == "|=" ||
            t.text == "^=" || t.text == "<<=" || t.text == ">>=");
  }

  AstNodePtr parse_assignment_expression() {
    auto lhs = parse_conditional_expression();
    if (is_assign_op(peek())) {
      std::vector<AstNodePtr> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(take_terminal(NodeKind::Punct));
      kids.push_back(parse_assignment_expression());
      return AstNode::interior(NodeKind::AssignmentExpression, std::move(kids));
    }
    return lhs;
  }

  AstNodePtr parse_conditional_expression() {
    auto cond = parse_binary_expression(0);
    if (!peek_is("?")) return cond;
    std::vector<AstNodePtr> kids;
    kids.push_back(std::move(cond));
    kids.push_back(expect_punct("?"));
    kids.push_back(parse_expression());
    kids.push_back(expect_punct(":"));
    kids.push_back(parse_assignment_expression());
    return AstNode::interior(NodeKind::ConditionalExpression, std::move(kids));
  }

  // precedence table, low to high
  int binary_precedence(const Token& t) const {
    if (t.kind != TokenKind::Punct) return -1;
    const std::string& s = t.text;
    if (s == "||") return 0;
    if (s == "&&") return 1;
    if (s == "|") return 2;
    if (s == "^") return 3;
    if (s == "&") return 4;
    if (s == "==" || s == "!=") return 5;
    if (s == "<" || s == ">" || s == "<=" || s == ">=") return 6;
    if (s == "<<" || s == ">>") return 7;
    if (s == "+" || s == "-") return 8;
    if (s == "*" || s == "/" || s == "%") return 9;
    return -1;
  }

  AstNodePtr parse_binary_expression(int min_prec) {
    auto lhs = parse_unary_expression();
    for (;;) {
      int prec = binary_precedence(peek());
      if (prec < min_prec) break;
      std::vector<AstNodePtr> kids;
      kids.push_back(std::move(lhs));
      kids.push_back(take_terminal(NodeKind::Punct));
      kids.push_back(parse_binary_expression(prec + 1));
      lhs = AstNode::interior(NodeKind::BinaryExpression, std::move(kids));
    }
    return lhs;
  }

  bool at_cast() const {
    if (!peek_is("(")) return false;
    const Token& t1 = peek(1);
    return t1.kind == TokenKind::Keyword &&
           (is_primitive_type_word(t1.text) || is_qualifier_word(t1.text) || t1.text == "struct" ||
            t1.text == "union" || t1.text == "enum");
  }

  AstNodePtr parse_unary_expression() {
    const Token& t = peek();
    if (t.kind == TokenKind::Punct &&
        (t.text == "!" || t.text == "~" || t.text == "+" || t.text == "-" || t.text == "*" ||
         t.text == "&")) {
      std::vector<AstNodePtr> kids;
      kids.push_back(take_terminal(NodeKind::Punct));
      kids.push_back(parse_unary_expression());
      return AstNode::interior(NodeKind::UnaryExpression, std::move(kids));
    }
    if (t.kind == TokenKind::Punct && (t.text == "++" || t.text == "--")) {
      std::vector<AstNodePtr> kids;
      kids.push_back(take_terminal(NodeKind::Punct));
      kids.push_back(parse_unary_expression());
      return AstNode::interior(NodeKind::UpdateExpression, std::move(kids));
    }
    if (t.kind == TokenKind::Keyword && t.text == "sizeof") {
      std::vector<AstNodePtr> kids;
      kids.push_back(take_terminal(NodeKind::Keyword));
      if (peek_is("(") && at_type_at(1)) {
        kids.push_back(expect_punct("("));
        kids.push_back(parse_type_descriptor());
        kids.push_back(expect_punct(")"));
      } else {
        kids.push_back(parse_unary_expression());
      }
      return AstNode::interior(NodeKind::SizeofExpression, std::move(kids));
    }
    if (at_cast()) {
      std::vector<AstNodePtr> kids;
      kids.push_back(expect_punct("("));
      kids.push_back(parse_type_descriptor());
      kids.push_back(expect_punct(")"));
      kids.push_back(parse_unary_expression());
      return AstNode::interior(NodeKind::CastExpression, std::move(kids));
    }
    return parse_postfix_expression();
  }

  bool at_type_at(std::size_t ahead) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Keyword &&
           (is_primitive_type_word(t.text) || is_qualifier_word(t.text) || t.text == "struct" ||
            t.text == "union" || t.text == "enum");
  }

  AstNodePtr parse_postfix_expression() {
    auto expr = parse_primary_expression();
    for (;;) {
      const Token& t = peek();
      if (t.kind != TokenKind::Punct) break;
      if (t.text == "(") {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(expr));
        kids.push_back(parse_argument_list());
        expr = AstNode::interior(NodeKind::CallExpression, std::move(kids));
      } else if (t.text == "[") {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(expr));
        kids.push_back(expect_punct("["));
        kids.push_back(parse_expression());
        kids.push_back(expect_punct("]"));
        expr = AstNode::interior(NodeKind::SubscriptExpression, std::move(kids));
      } else if (t.text == "." || t.text == "->") {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(expr));
        kids.push_back(take_terminal(NodeKind::Punct));
        if (peek().kind != TokenKind::Identifier) fail("a field name");
        kids.push_back(take_terminal(NodeKind::Identifier));
        expr = AstNode::interior(NodeKind::FieldExpression, std::move(kids));
      } else if (t.text == "++" || t.text == "--") {
        std::vector<AstNodePtr> kids;
        kids.push_back(std::move(expr));
        kids.push_back(take_terminal(NodeKind::Punct));
        expr = AstNode::interior(NodeKind::UpdateExpression, std::move(kids));
      } else {
        break;
      }
    }
    return expr;
  }

  AstNodePtr parse_argument_list() {
    std::vector<AstNodePtr> kids;
    kids.push_back(expect_punct("("));
    if (!peek_is(")")) {
      for (;;) {
        kids.push_back(parse_assignment_expression());
        if (peek_is(",")) {
          kids.push_back(expect_punct(","));
          continue;
        }
        break;
      }
    }
    kids.push_back(expect_punct(")"));
    return AstNode::interior(NodeKind::ArgumentList, std::move(kids));
  }

  AstNodePtr parse_primary_expression() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Identifier: return take_terminal(NodeKind::Identifier);
      case TokenKind::Number: return take_terminal(NodeKind::Number);
      case TokenKind::String: return take_terminal(NodeKind::String);
      case TokenKind::Char: return take_terminal(NodeKind::Char);
      case TokenKind::Hole:
        if (template_mode_) return take_terminal(NodeKind::Hole);
        break;
      case TokenKind::Glob:
        if (template_mode_) return take_terminal(NodeKind::Glob);
        break;
      case TokenKind::Punct:
        if (t.text == "(") {
          std::vector<AstNodePtr> kids;
          kids.push_back(expect_punct("("));
          kids.push_back(parse_expression());
          kids.push_back(expect_punct(")"));
          return AstNode::interior(NodeKind::ParenthesizedExpression, std::move(kids));
        }
        break;
      default: break;
    }
    fail("an expression");
  }
};

// Parses one function definition.
inline Ast parse(std::string_view text) {
  Ast ast;
  ast.text = std::string(text);
  Parser p(lex(text, /*template_mode=*/false), false);
  ast.root = p.parse_function();
  return ast;
}

// Parses a single statement (used for donor statements and template texts).
inline AstNodePtr parse_statement_text(std::string_view text, bool template_mode = false) {
  Parser p(lex(text, template_mode), template_mode);
  return p.parse_single_statement();
}

}  // namespace vgx
