#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "vgx/lexer.hpp"

namespace vgx {

enum class NodeKind {
  // terminals
  Identifier,
  Number,
  String,
  Char,
  Keyword,
  Punct,
  Hole,     // template terminal: matches any complete subtree
  Glob,     // template terminal: affix-wildcard identifier constraint
  ArgSpan,  // synthetic subtree a sole-argument hole binds to
  // types / declarators
  PrimitiveType,
  TypeIdentifier,
  StructSpecifier,
  StorageClassSpecifier,
  TypeQualifier,
  TypeDescriptor,
  PointerDeclarator,
  ArrayDeclarator,
  FunctionDeclarator,
  InitDeclarator,
  ParameterList,
  ParameterDeclaration,
  // statements
  FunctionDefinition,
  Declaration,
  CompoundStatement,
  ExpressionStatement,
  IfStatement,
  WhileStatement,
  DoStatement,
  ForStatement,
  SwitchStatement,
  CaseStatement,
  BreakStatement,
  ContinueStatement,
  ReturnStatement,
  EmptyStatement,
  // expressions
  BinaryExpression,
  UnaryExpression,
  UpdateExpression,
  AssignmentExpression,
  ConditionalExpression,
  CastExpression,
  CallExpression,
  ArgumentList,
  SubscriptExpression,
  FieldExpression,
  ParenthesizedExpression,
  CommaExpression,
  SizeofExpression,
};

inline const char* kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Identifier: return "identifier";
    case NodeKind::Number: return "number_literal";
    case NodeKind::String: return "string_literal";
    case NodeKind::Char: return "char_literal";
    case NodeKind::Keyword: return "keyword";
    case NodeKind::Punct: return "punct";
    case NodeKind::Hole: return "hole";
    case NodeKind::Glob: return "glob";
    case NodeKind::ArgSpan: return "arg_span";
    case NodeKind::PrimitiveType: return "primitive_type";
    case NodeKind::TypeIdentifier: return "type_identifier";
    case NodeKind::StructSpecifier: return "struct_specifier";
    case NodeKind::StorageClassSpecifier: return "storage_class_specifier";
    case NodeKind::TypeQualifier: return "type_qualifier";
    case NodeKind::TypeDescriptor: return "type_descriptor";
    case NodeKind::PointerDeclarator: return "pointer_declarator";
    case NodeKind::ArrayDeclarator: return "array_declarator";
    case NodeKind::FunctionDeclarator: return "function_declarator";
    case NodeKind::InitDeclarator: return "init_declarator";
    case NodeKind::ParameterList: return "parameter_list";
    case NodeKind::ParameterDeclaration: return "parameter_declaration";
    case NodeKind::FunctionDefinition: return "function_definition";
    case NodeKind::Declaration: return "declaration";
    case NodeKind::CompoundStatement: return "compound_statement";
    case NodeKind::ExpressionStatement: return "expression_statement";
    case NodeKind::IfStatement: return "if_statement";
    case NodeKind::WhileStatement: return "while_statement";
    case NodeKind::DoStatement: return "do_statement";
    case NodeKind::ForStatement: return "for_statement";
    case NodeKind::SwitchStatement: return "switch_statement";
    case NodeKind::CaseStatement: return "case_statement";
    case NodeKind::BreakStatement: return "break_statement";
    case NodeKind::ContinueStatement: return "continue_statement";
    case NodeKind::ReturnStatement: return "return_statement";
    case NodeKind::EmptyStatement: return "empty_statement";
    case NodeKind::BinaryExpression: return "binary_expression";
    case NodeKind::UnaryExpression: return "unary_expression";
    case NodeKind::UpdateExpression: return "update_expression";
    case NodeKind::AssignmentExpression: return "assignment_expression";
    case NodeKind::ConditionalExpression: return "conditional_expression";
    case NodeKind::CastExpression: return "cast_expression";
    case NodeKind::CallExpression: return "call_expression";
    case NodeKind::ArgumentList: return "argument_list";
    case NodeKind::SubscriptExpression: return "subscript_expression";
    case NodeKind::FieldExpression: return "field_expression";
    case NodeKind::ParenthesizedExpression: return "parenthesized_expression";
    case NodeKind::CommaExpression: return "comma_expression";
    case NodeKind::SizeofExpression: return "sizeof_expression";
  }
  return "?";
}

struct AstNode;
using AstNodePtr = std::unique_ptr<AstNode>;

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open byte range
};

struct AstNode {
  NodeKind kind;
  std::string value;  // terminal lexeme; empty for interior nodes
  std::vector<AstNodePtr> children;
  Span span;
  int line = 0;      // 1-based line of the first token
  int hole_id = -1;  // for Hole terminals

  bool is_terminal() const { return children.empty(); }

  static AstNodePtr terminal(NodeKind k, const Token& t) {
    auto n = std::make_unique<AstNode>();
    n->kind = k;
    n->value = t.text;
    n->span = Span{t.offset, t.offset + t.text.size()};
    n->line = t.line;
    return n;
  }

  static AstNodePtr interior(NodeKind k, std::vector<AstNodePtr> kids) {
    auto n = std::make_unique<AstNode>();
    n->kind = k;
    n->children = std::move(kids);
    if (!n->children.empty()) {
      n->span = Span{n->children.front()->span.begin, n->children.back()->span.end};
      n->line = n->children.front()->line;
    }
    return n;
  }

  AstNodePtr clone() const {
    auto n = std::make_unique<AstNode>();
    n->kind = kind;
    n->value = value;
    n->span = span;
    n->line = line;
    n->hole_id = hole_id;
    n->children.reserve(children.size());
    for (const auto& c : children) n->children.push_back(c->clone());
    return n;
  }
};

struct Ast {
  AstNodePtr root;
  std::string text;  // the source the spans index into
};

inline bool is_statement_kind(NodeKind k) {
  switch (k) {
    case NodeKind::Declaration:
    case NodeKind::CompoundStatement:
    case NodeKind::ExpressionStatement:
    case NodeKind::IfStatement:
    case NodeKind::WhileStatement:
    case NodeKind::DoStatement:
    case NodeKind::ForStatement:
    case NodeKind::SwitchStatement:
    case NodeKind::CaseStatement:
    case NodeKind::BreakStatement:
    case NodeKind::ContinueStatement:
    case NodeKind::ReturnStatement:
    case NodeKind::EmptyStatement:
      return true;
    default:
      return false;
  }
}

inline void visit_preorder(const AstNode& n, const std::function<void(const AstNode&)>& fn) {
  fn(n);
  for (const auto& c : n.children) visit_preorder(*c, fn);
}

inline void collect_terminals(const AstNode& n, std::vector<const AstNode*>& out) {
  if (n.is_terminal()) {
    out.push_back(&n);
    return;
  }
  for (const auto& c : n.children) collect_terminals(*c, out);
}

inline std::vector<std::string> terminal_lexemes(const AstNode& n) {
  std::vector<const AstNode*> ts;
  collect_terminals(n, ts);
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const AstNode* t : ts) out.push_back(t->value);
  return out;
}

inline std::size_t node_count(const AstNode& n) {
  std::size_t c = 1;
  for (const auto& k : n.children) c += node_count(*k);
  return c;
}

// Structural equality: kind, value, and children; spans/lines ignored.
inline bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.kind != b.kind || a.value != b.value || a.hole_id != b.hole_id) return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

// Token sequence of a subtree joined with single spaces. Whitespace-insensitive
// comparison key for statements and templates.
inline std::string token_string(const AstNode& n) {
  std::vector<const AstNode*> ts;
  collect_terminals(n, ts);
  std::string out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) out.push_back(' ');
    out += ts[i]->value;
  }
  return out;
}

}  // namespace vgx
