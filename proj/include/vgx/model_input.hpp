#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "vgx/ast.hpp"
#include "vgx/parser.hpp"
#include "vgx/source.hpp"

namespace vgx {

// Pre-order node-type sequence keeping only nodes above the expression level
// (function, compound, declaration and statement nodes).
struct LinearizedAst {
  std::vector<std::string> tokens;
};

inline bool keeps_in_linearization(NodeKind k) {
  return k == NodeKind::FunctionDefinition || is_statement_kind(k);
}

inline LinearizedAst linearize(const Ast& ast) {
  LinearizedAst out;
  visit_preorder(*ast.root, [&](const AstNode& n) {
    if (keeps_in_linearization(n.kind)) out.tokens.emplace_back(kind_name(n.kind));
  });
  return out;
}

struct VariableOccurrence {
  int token_index = -1;  // index into ModelInput::code_tokens
  int var_id = -1;       // variable identity, shared by same-named occurrences
  std::string name;
  int line = 0;
  std::size_t offset = 0;
};

inline constexpr const char* kSepToken = "[SEP]";

// The dual Code [SEP] AST model input plus variable-occurrence annotations.
struct ModelInput {
  std::vector<Token> code_tokens;
  std::string sep = kSepToken;
  std::vector<std::string> ast_tokens;
  std::unordered_map<int, int> var_occurrences;  // token index -> var id
  std::vector<VariableOccurrence> occurrences;   // sorted by token index

  std::size_t sequence_length() const { return code_tokens.size() + 1 + ast_tokens.size(); }
};

namespace detail {

// Collects identifier terminals bound as variables: declared names, parameters
// and lvalue/rvalue uses. Function names, field names after . / -> and type
// names are excluded.
struct VarCollector {
  std::vector<const AstNode*> vars;

  void walk(const AstNode& n) {
    switch (n.kind) {
      case NodeKind::TypeDescriptor:
      case NodeKind::StructSpecifier:
        return;  // type positions are never variables
      case NodeKind::FunctionDefinition: {
        for (const auto& c : n.children) {
          if (c->kind == NodeKind::FunctionDeclarator || c->kind == NodeKind::PointerDeclarator) {
            walk_function_declarator(*c);
          }
          if (c->kind == NodeKind::CompoundStatement) walk(*c);
        }
        return;
      }
      case NodeKind::Declaration: {
        for (const auto& c : n.children) {
          if (c->kind == NodeKind::Identifier || c->kind == NodeKind::PointerDeclarator ||
              c->kind == NodeKind::ArrayDeclarator || c->kind == NodeKind::InitDeclarator) {
            walk_declarator(*c);
          }
        }
        return;
      }
      case NodeKind::CallExpression: {
        // callee: a bare identifier is a function name; anything else may
        // contain variables (function pointers etc.)
        if (!n.children.empty() && n.children[0]->kind != NodeKind::Identifier)
          walk(*n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i) walk(*n.children[i]);
        return;
      }
      case NodeKind::FieldExpression: {
        if (!n.children.empty()) walk(*n.children[0]);  // base only; field name excluded
        return;
      }
      case NodeKind::Identifier:
        vars.push_back(&n);
        return;
      default:
        for (const auto& c : n.children) walk(*c);
        return;
    }
  }

  void walk_function_declarator(const AstNode& n) {
    // skip the function name, collect parameter names
    if (n.kind == NodeKind::PointerDeclarator) {
      for (const auto& c : n.children) walk_function_declarator(*c);
      return;
    }
    if (n.kind == NodeKind::FunctionDeclarator) {
      for (const auto& c : n.children) {
        if (c->kind == NodeKind::ParameterList) walk(*c);
      }
    }
  }

  void walk_declarator(const AstNode& n) {
    switch (n.kind) {
      case NodeKind::Identifier:
        vars.push_back(&n);
        return;
      case NodeKind::InitDeclarator:
        // declarator, '=', initializer
        walk_declarator(*n.children[0]);
        for (std::size_t i = 2; i < n.children.size(); ++i) walk(*n.children[i]);
        return;
      case NodeKind::PointerDeclarator:
        for (const auto& c : n.children)
          if (c->kind != NodeKind::Punct) walk_declarator(*c);
        return;
      case NodeKind::ArrayDeclarator:
        walk_declarator(*n.children[0]);
        for (std::size_t i = 1; i < n.children.size(); ++i)
          if (n.children[i]->kind != NodeKind::Punct) walk(*n.children[i]);
        return;
      default:
        return;
    }
  }
};

}  // namespace detail

// Builds the Code [SEP] AST input with per-token variable identities.
inline ModelInput assemble_input(const SourceUnit& unit, const Ast& ast) {
  ModelInput input;
  input.code_tokens = lex(unit.text);
  input.ast_tokens = linearize(ast).tokens;

  detail::VarCollector vc;
  vc.walk(*ast.root);

  // map terminal byte offsets to token indices
  std::unordered_map<std::size_t, int> index_by_offset;
  for (std::size_t i = 0; i < input.code_tokens.size(); ++i)
    index_by_offset[input.code_tokens[i].offset] = static_cast<int>(i);

  std::unordered_map<std::string, int> id_by_name;
  std::vector<VariableOccurrence> occ;
  for (const AstNode* v : vc.vars) {
    auto it = index_by_offset.find(v->span.begin);
    if (it == index_by_offset.end()) continue;
    auto [name_it, inserted] =
        id_by_name.emplace(v->value, static_cast<int>(id_by_name.size()));
    (void)inserted;
    VariableOccurrence o;
    o.token_index = it->second;
    o.var_id = name_it->second;
    o.name = v->value;
    o.line = v->line;
    o.offset = v->span.begin;
    occ.push_back(o);
  }
  std::sort(occ.begin(), occ.end(),
            [](const VariableOccurrence& a, const VariableOccurrence& b) {
              return a.token_index < b.token_index;
            });
  for (const auto& o : occ) input.var_occurrences[o.token_index] = o.var_id;
  input.occurrences = std::move(occ);
  return input;
}

}  // namespace vgx
