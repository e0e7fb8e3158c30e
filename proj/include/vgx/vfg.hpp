#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "vgx/ast.hpp"
#include "vgx/model_input.hpp"

namespace vgx {

enum class FlowReason { Assign, DefUse, CallArg };

inline const char* flow_reason_name(FlowReason r) {
  switch (r) {
    case FlowReason::Assign: return "assign";
    case FlowReason::DefUse: return "defuse";
    case FlowReason::CallArg: return "callarg";
  }
  return "?";
}

struct VfgEdge {
  int src = -1;  // token index of the source occurrence
  int dst = -1;
  FlowReason reason = FlowReason::Assign;

  bool operator<(const VfgEdge& o) const {
    if (src != o.src) return src < o.src;
    if (dst != o.dst) return dst < o.dst;
    return static_cast<int>(reason) < static_cast<int>(o.reason);
  }
  bool operator==(const VfgEdge& o) const {
    return src == o.src && dst == o.dst && reason == o.reason;
  }
};

// Multi-edge directed graph over variable occurrences. Parallel edges with
// distinct flow reasons are kept.
struct ValueFlowGraph {
  std::vector<VariableOccurrence> nodes;  // sorted by token index
  std::vector<VfgEdge> edges;             // sorted, deduplicated

  const VariableOccurrence* node_by_token(int token_index) const {
    for (const auto& n : nodes)
      if (n.token_index == token_index) return &n;
    return nullptr;
  }

  // first occurrence of `name` on `line`
  const VariableOccurrence* find(const std::string& name, int line) const {
    for (const auto& n : nodes)
      if (n.name == name && n.line == line) return &n;
    return nullptr;
  }

  std::unordered_map<int, std::vector<int>> predecessors() const {
    std::unordered_map<int, std::vector<int>> pred;
    for (const auto& e : edges) pred[e.dst].push_back(e.src);
    return pred;
  }
  std::unordered_map<int, std::vector<int>> successors() const {
    std::unordered_map<int, std::vector<int>> succ;
    for (const auto& e : edges) succ[e.src].push_back(e.dst);
    return succ;
  }
};

struct VfgSubgraph {
  enum class Kind { Absolute, Relative };
  Kind kind = Kind::Absolute;
  std::vector<VariableOccurrence> nodes;
  std::vector<VfgEdge> edges;  // induced
  VariableOccurrence anchor;
  std::optional<VariableOccurrence> target;

  bool contains(int token_index) const {
    for (const auto& n : nodes)
      if (n.token_index == token_index) return true;
    return false;
  }
};

namespace detail {

// environment: variable id -> currently live defining occurrences
using FlowEnv = std::unordered_map<int, std::set<int>>;

inline FlowEnv union_env(const FlowEnv& a, const FlowEnv& b) {
  FlowEnv out = a;
  for (const auto& [var, defs] : b) out[var].insert(defs.begin(), defs.end());
  return out;
}

struct VfgBuilder {
  const ModelInput& input;
  std::set<VfgEdge> edges;
  std::unordered_map<std::size_t, const VariableOccurrence*> occ_by_offset;

  explicit VfgBuilder(const ModelInput& in) : input(in) {
    for (const auto& o : input.occurrences) occ_by_offset[o.offset] = &o;
  }

  const VariableOccurrence* occurrence_of(const AstNode& n) const {
    if (n.kind != NodeKind::Identifier) return nullptr;
    auto it = occ_by_offset.find(n.span.begin);
    return it == occ_by_offset.end() ? nullptr : it->second;
  }

  void add_edge(int src, int dst, FlowReason r) {
    if (src == dst) return;
    edges.insert(VfgEdge{src, dst, r});
  }

  // Evaluates an expression: records def->use edges for every variable read and
  // returns the read occurrences (value sources of the expression).
  std::vector<const VariableOccurrence*> eval(const AstNode& n, FlowEnv& env) {
    std::vector<const VariableOccurrence*> reads;
    eval_into(n, env, reads);
    return reads;
  }

  void read_occurrence(const VariableOccurrence& o, FlowEnv& env,
                       std::vector<const VariableOccurrence*>& reads) {
    auto it = env.find(o.var_id);
    if (it != env.end()) {
      for (int def_tok : it->second) add_edge(def_tok, o.token_index, FlowReason::DefUse);
    }
    reads.push_back(&o);
  }

  void eval_into(const AstNode& n, FlowEnv& env, std::vector<const VariableOccurrence*>& reads) {
    switch (n.kind) {
      case NodeKind::Identifier: {
        if (const VariableOccurrence* o = occurrence_of(n)) read_occurrence(*o, env, reads);
        return;
      }
      case NodeKind::AssignmentExpression: {
        eval_assignment(n, env, reads);
        return;
      }
      case NodeKind::UpdateExpression: {
        // x++ reads then redefines x
        for (const auto& c : n.children) eval_into(*c, env, reads);
        if (const AstNode* base = written_identifier(n)) {
          if (const VariableOccurrence* w = occurrence_of(*base)) {
            env[w->var_id] = {w->token_index};
          }
        }
        return;
      }
      case NodeKind::CallExpression: {
        // callee (bare identifier) carries no occurrence; arguments are reads
        for (const auto& c : n.children) eval_into(*c, env, reads);
        return;
      }
      case NodeKind::TypeDescriptor:
        return;
      default: {
        for (const auto& c : n.children) eval_into(*c, env, reads);
        return;
      }
    }
  }

  // leftmost written identifier of an lvalue: a[i] and *p define a and p
  static const AstNode* written_identifier(const AstNode& lhs) {
    switch (lhs.kind) {
      case NodeKind::Identifier: return &lhs;
      case NodeKind::SubscriptExpression:
      case NodeKind::FieldExpression:
        return written_identifier(*lhs.children[0]);
      case NodeKind::ParenthesizedExpression:
        return written_identifier(*lhs.children[1]);
      case NodeKind::UnaryExpression:  // *p = ...
        return written_identifier(*lhs.children[1]);
      case NodeKind::UpdateExpression:
        return written_identifier(*lhs.children[0]);
      case NodeKind::CastExpression:
        return written_identifier(*lhs.children.back());
      default: return nullptr;
    }
  }

  static const AstNode* strip_wrappers(const AstNode& n) {
    if (n.kind == NodeKind::ParenthesizedExpression) return strip_wrappers(*n.children[1]);
    if (n.kind == NodeKind::CastExpression) return strip_wrappers(*n.children.back());
    return &n;
  }

  void connect_write(const AstNode& lhs_node, const AstNode* rhs,
                     const std::vector<const VariableOccurrence*>& rhs_reads, FlowEnv& env,
                     std::vector<const VariableOccurrence*>& reads, bool compound_op) {
    const AstNode* wid = written_identifier(lhs_node);
    const VariableOccurrence* w = wid ? occurrence_of(*wid) : nullptr;

    // lvalue sub-expressions other than the written identifier are reads
    if (wid) {
      visit_preorder(lhs_node, [&](const AstNode& sub) {
        if (&sub == wid || sub.kind != NodeKind::Identifier) return;
        if (const VariableOccurrence* o = occurrence_of(sub)) read_occurrence(*o, env, reads);
      });
    }
    if (!w) {
      // unknown write target: evaluate lhs as plain reads
      std::vector<const VariableOccurrence*> tmp;
      eval_into(lhs_node, env, tmp);
      reads.insert(reads.end(), tmp.begin(), tmp.end());
      return;
    }
    if (compound_op) read_occurrence(*w, env, reads);

    for (const VariableOccurrence* r : rhs_reads)
      add_edge(r->token_index, w->token_index, FlowReason::Assign);

    // value assigned from a call: argument occurrences flow into the lvalue
    if (rhs) {
      const AstNode* core = strip_wrappers(*rhs);
      if (core->kind == NodeKind::CallExpression) {
        for (std::size_t i = 1; i < core->children.size(); ++i) {
          visit_preorder(*core->children[i], [&](const AstNode& sub) {
            if (sub.kind != NodeKind::Identifier) return;
            if (const VariableOccurrence* o = occurrence_of(sub))
              add_edge(o->token_index, w->token_index, FlowReason::CallArg);
          });
        }
      }
    }
    env[w->var_id] = {w->token_index};
    reads.push_back(w);  // the assignment's value flows out through the target
  }

  void eval_assignment(const AstNode& n, FlowEnv& env,
                       std::vector<const VariableOccurrence*>& reads) {
    const AstNode& lhs = *n.children[0];
    const std::string& op = n.children[1]->value;
    const AstNode& rhs = *n.children[2];
    auto rhs_reads = eval(rhs, env);
    reads.insert(reads.end(), rhs_reads.begin(), rhs_reads.end());
    connect_write(lhs, &rhs, rhs_reads, env, reads, op != "=");
  }

  void walk_declaration(const AstNode& n, FlowEnv& env) {
    for (const auto& c : n.children) {
      if (c->kind == NodeKind::InitDeclarator) {
        const AstNode& declarator = *c->children[0];
        const AstNode& init = *c->children[2];
        auto init_reads = eval(init, env);
        std::vector<const VariableOccurrence*> sink;
        connect_write(declarator, &init, init_reads, env, sink, false);
      } else if (c->kind == NodeKind::Identifier || c->kind == NodeKind::PointerDeclarator ||
                 c->kind == NodeKind::ArrayDeclarator) {
        const AstNode* wid = written_identifier_decl(*c);
        if (const VariableOccurrence* w = wid ? occurrence_of(*wid) : nullptr)
          env[w->var_id] = {w->token_index};
        // array sizes are reads
        visit_preorder(*c, [&](const AstNode& sub) {
          if (&sub == wid || sub.kind != NodeKind::Identifier) return;
          if (const VariableOccurrence* o = occurrence_of(sub)) {
            std::vector<const VariableOccurrence*> tmp;
            read_occurrence(*o, env, tmp);
          }
        });
      }
    }
  }

  static const AstNode* written_identifier_decl(const AstNode& d) {
    switch (d.kind) {
      case NodeKind::Identifier: return &d;
      case NodeKind::PointerDeclarator: return written_identifier_decl(*d.children.back());
      case NodeKind::ArrayDeclarator: return written_identifier_decl(*d.children[0]);
      case NodeKind::InitDeclarator: return written_identifier_decl(*d.children[0]);
      default: return nullptr;
    }
  }

  void walk_statement(const AstNode& n, FlowEnv& env) {
    switch (n.kind) {
      case NodeKind::CompoundStatement:
        for (const auto& c : n.children)
          if (is_statement_kind(c->kind)) walk_statement(*c, env);
        return;
      case NodeKind::Declaration:
        walk_declaration(n, env);
        return;
      case NodeKind::ExpressionStatement:
        if (!n.children.empty()) eval(*n.children[0], env);
        return;
      case NodeKind::IfStatement: {
        if (const AstNode* cond = condition_of(n)) eval(*cond, env);
        FlowEnv then_env = env;
        walk_statement(*then_body(n), then_env);
        const AstNode* eb = else_body(n);
        if (eb) {
          FlowEnv else_env = env;
          walk_statement(*eb, else_env);
          env = union_env(then_env, else_env);
        } else {
          env = union_env(then_env, env);
        }
        return;
      }
      case NodeKind::WhileStatement:
      case NodeKind::DoStatement:
      case NodeKind::ForStatement:
        walk_loop(n, env);
        return;
      case NodeKind::SwitchStatement: {
        if (const AstNode* cond = condition_of(n)) eval(*cond, env);
        FlowEnv body_env = env;
        walk_statement(*n.children.back(), body_env);
        env = union_env(env, body_env);
        return;
      }
      case NodeKind::ReturnStatement:
        for (const auto& c : n.children)
          if (!c->is_terminal() || c->kind == NodeKind::Identifier) eval(*c, env);
        return;
      case NodeKind::CaseStatement:
        for (const auto& c : n.children)
          if (!c->is_terminal()) eval(*c, env);
        return;
      default:
        return;
    }
  }

  // two lexical passes over the loop so definitions in the body reach uses on
  // the next iteration (back edges)
  void walk_loop(const AstNode& n, FlowEnv& env) {
    const AstNode* init = nullptr;
    std::vector<const AstNode*> header_exprs;
    const AstNode* body = nullptr;
    if (n.kind == NodeKind::ForStatement) {
      for (const auto& c : n.children) {
        if (is_statement_kind(c->kind) && !init) {
          init = c.get();
        } else if (is_statement_kind(c->kind)) {
          body = c.get();
        } else if (!c->is_terminal() || c->kind == NodeKind::Identifier) {
          header_exprs.push_back(c.get());
        }
      }
      if (init) walk_statement(*init, env);
    } else {
      for (const auto& c : n.children) {
        if (is_statement_kind(c->kind)) body = c.get();
        else if (!c->is_terminal() || c->kind == NodeKind::Identifier)
          header_exprs.push_back(c.get());
      }
    }
    FlowEnv pre = env;
    for (int pass = 0; pass < 2; ++pass) {
      FlowEnv iter = env;
      if (n.kind == NodeKind::DoStatement) {
        if (body) walk_statement(*body, iter);
        for (const AstNode* e : header_exprs) eval(*e, iter);
      } else {
        for (const AstNode* e : header_exprs) eval(*e, iter);
        if (body) walk_statement(*body, iter);
      }
      env = union_env(pre, iter);
    }
  }

  static const AstNode* condition_of(const AstNode& n) {
    for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
      if (n.children[i]->kind == NodeKind::Punct && n.children[i]->value == "(")
        return n.children[i + 1].get();
    }
    return nullptr;
  }
  static const AstNode* then_body(const AstNode& n) {
    for (const auto& c : n.children)
      if (is_statement_kind(c->kind)) return c.get();
    return nullptr;
  }
  static const AstNode* else_body(const AstNode& n) {
    bool seen_else = false;
    for (const auto& c : n.children) {
      if (c->is_terminal() && c->value == "else") {
        seen_else = true;
        continue;
      }
      if (seen_else && is_statement_kind(c->kind)) return c.get();
    }
    return nullptr;
  }
};

}  // namespace detail

inline ValueFlowGraph build_vfg(const Ast& ast, const ModelInput& input) {
  detail::VfgBuilder builder(input);
  detail::FlowEnv env;

  // parameter occurrences precede the body and act as definitions
  const AstNode* body = nullptr;
  for (const auto& c : ast.root->children)
    if (c->kind == NodeKind::CompoundStatement) body = c.get();
  std::size_t body_begin = body ? body->span.begin : 0;
  for (const auto& o : input.occurrences) {
    if (o.offset < body_begin) env[o.var_id] = {o.token_index};
  }
  if (body) builder.walk_statement(*body, env);

  ValueFlowGraph g;
  g.nodes = input.occurrences;
  g.edges.assign(builder.edges.begin(), builder.edges.end());
  return g;
}

namespace detail {

inline std::set<int> reverse_reachable(const ValueFlowGraph& g, int anchor_tok) {
  auto pred = g.predecessors();
  std::set<int> seen{anchor_tok};
  std::vector<int> queue{anchor_tok};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    auto it = pred.find(cur);
    if (it == pred.end()) continue;
    for (int p : it->second) {
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

inline std::set<int> forward_reachable(const ValueFlowGraph& g, int start_tok) {
  auto succ = g.successors();
  std::set<int> seen{start_tok};
  std::vector<int> queue{start_tok};
  while (!queue.empty()) {
    int cur = queue.back();
    queue.pop_back();
    auto it = succ.find(cur);
    if (it == succ.end()) continue;
    for (int s : it->second) {
      if (seen.insert(s).second) queue.push_back(s);
    }
  }
  return seen;
}

inline VfgSubgraph induced(const ValueFlowGraph& g, const std::set<int>& keep) {
  VfgSubgraph sg;
  for (const auto& n : g.nodes)
    if (keep.count(n.token_index)) sg.nodes.push_back(n);
  for (const auto& e : g.edges)
    if (keep.count(e.src) && keep.count(e.dst)) sg.edges.push_back(e);
  return sg;
}

}  // namespace detail

// All occurrences whose value can reach the anchor (reverse-reachable closure).
inline VfgSubgraph absolute_subgraph(const ValueFlowGraph& vfg, const VariableOccurrence& anchor) {
  auto keep = detail::reverse_reachable(vfg, anchor.token_index);
  VfgSubgraph sg = detail::induced(vfg, keep);
  sg.kind = VfgSubgraph::Kind::Absolute;
  sg.anchor = anchor;
  return sg;
}

// Occurrences on reverse paths from anchor that reach target; absent when the
// target's value cannot reach the anchor.
inline std::optional<VfgSubgraph> relative_subgraph(const ValueFlowGraph& vfg,
                                                    const VariableOccurrence& anchor,
                                                    const VariableOccurrence& target) {
  auto ancestors = detail::reverse_reachable(vfg, anchor.token_index);
  if (!ancestors.count(target.token_index)) return std::nullopt;
  auto descendants = detail::forward_reachable(vfg, target.token_index);
  std::set<int> keep;
  for (int t : ancestors)
    if (descendants.count(t)) keep.insert(t);
  VfgSubgraph sg = detail::induced(vfg, keep);
  sg.kind = VfgSubgraph::Kind::Relative;
  sg.anchor = anchor;
  sg.target = target;
  return sg;
}

// DOT export for inspection.
inline std::string to_dot(const ValueFlowGraph& g) {
  std::ostringstream os;
  os << "digraph vfg {\n";
  for (const auto& n : g.nodes) {
    os << "  n" << n.token_index << " [label=\"" << n.name << "@" << n.line << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << flow_reason_name(e.reason)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace vgx
