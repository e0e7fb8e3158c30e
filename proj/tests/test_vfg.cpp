#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "vgx/parser.hpp"
#include "vgx/rng.hpp"
#include "vgx/vfg.hpp"

using namespace vgx;

namespace {

struct Built {
  Ast ast;
  ModelInput input;
  ValueFlowGraph vfg;
};

Built build(const std::string& code) {
  Built b;
  b.ast = parse(code);
  SourceUnit unit{"p", "f.c", "f", code};
  b.input = assemble_input(unit, b.ast);
  b.vfg = build_vfg(b.ast, b.input);
  return b;
}

bool has_edge(const ValueFlowGraph& g, const VariableOccurrence& src,
              const VariableOccurrence& dst) {
  return std::any_of(g.edges.begin(), g.edges.end(), [&](const VfgEdge& e) {
    return e.src == src.token_index && e.dst == dst.token_index;
  });
}

std::set<std::pair<std::string, int>> node_set(const VfgSubgraph& sg) {
  std::set<std::pair<std::string, int>> out;
  for (const auto& n : sg.nodes) out.insert({n.name, n.line});
  return out;
}

// brute-force oracle: enumerate all simple paths target ~> anchor and collect
// the nodes lying on any of them
struct PathOracle {
  const ValueFlowGraph& g;
  std::set<int> on_path;
  std::vector<int> cur;
  int anchor;

  PathOracle(const ValueFlowGraph& g_, int anchor_) : g(g_), anchor(anchor_) {}

  void dfs(int node, std::set<int>& visiting) {
    cur.push_back(node);
    if (node == anchor) {
      for (int n : cur) on_path.insert(n);
    } else {
      visiting.insert(node);
      for (const auto& e : g.edges) {
        if (e.src == node && !visiting.count(e.dst)) dfs(e.dst, visiting);
      }
      visiting.erase(node);
    }
    cur.pop_back();
  }
};

std::set<int> oracle_relative_nodes(const ValueFlowGraph& g, int anchor, int target) {
  PathOracle o(g, anchor);
  std::set<int> visiting;
  o.dfs(target, visiting);
  return o.on_path;
}

std::set<int> oracle_absolute_nodes(const ValueFlowGraph& g, int anchor) {
  // reverse BFS written against the edge list directly
  std::set<int> seen{anchor};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.edges) {
      if (seen.count(e.dst) && !seen.count(e.src)) {
        seen.insert(e.src);
        grew = true;
      }
    }
  }
  return seen;
}

ValueFlowGraph random_graph(Rng& rng, int max_nodes) {
  ValueFlowGraph g;
  int n = static_cast<int>(rng.next_range(1, max_nodes));
  for (int i = 0; i < n; ++i) {
    VariableOccurrence o;
    o.token_index = i;
    o.var_id = i;
    o.name = "v" + std::to_string(i);
    o.line = i + 1;
    g.nodes.push_back(o);
  }
  int edges = static_cast<int>(rng.next_range(0, n * 2));
  std::set<VfgEdge> es;
  for (int i = 0; i < edges; ++i) {
    VfgEdge e;
    e.src = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    e.dst = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (e.src == e.dst) continue;
    e.reason = FlowReason::DefUse;
    es.insert(e);
  }
  g.edges.assign(es.begin(), es.end());
  return g;
}

}  // namespace

TEST_CASE("c=a+b creates operand-to-result edges") {
  Built b = build("void f(int a, int b, int c){c=a+b;}");
  const auto* a = b.vfg.find("a", 1);
  const auto* bb = b.vfg.find("b", 1);
  const auto* c2 = b.vfg.find("c", 1);
  REQUIRE((a && bb && c2));
  // the written occurrence of c is the one inside the body
  const VariableOccurrence* c_written = nullptr;
  for (const auto& n : b.vfg.nodes)
    if (n.name == "c" && n.token_index > c2->token_index) c_written = &n;
  REQUIRE(c_written != nullptr);
  CHECK(has_edge(b.vfg, *a, *c_written));
  CHECK(has_edge(b.vfg, *bb, *c_written));
}

TEST_CASE("def-use chain through a declaration") {
  Built b = build("void f(int y){int x=1; y=x;}");
  std::vector<const VariableOccurrence*> xs;
  for (const auto& n : b.vfg.nodes)
    if (n.name == "x") xs.push_back(&n);
  REQUIRE(xs.size() == 2);
  CHECK(has_edge(b.vfg, *xs[0], *xs[1]));  // x(def) -> x(use)
  const VariableOccurrence* y_written = nullptr;
  for (const auto& n : b.vfg.nodes)
    if (n.name == "y" && n.line == 1 && n.token_index > xs[0]->token_index) y_written = &n;
  REQUIRE(y_written != nullptr);
  CHECK(has_edge(b.vfg, *xs[1], *y_written));  // x(use) -> y
}

TEST_CASE("bounds-check example: password flows from line 1 to line 9") {
  Built b = build(fixtures::kBoundsCheckFn);
  const auto* def = b.vfg.find("password", 1);
  const auto* use = b.vfg.find("password", 9);
  REQUIRE((def && use));
  CHECK(has_edge(b.vfg, *def, *use));
}

TEST_CASE("function with no variables yields the empty graph") {
  Built b = build("void f(){return;}");
  CHECK(b.vfg.nodes.empty());
  CHECK(b.vfg.edges.empty());
}

TEST_CASE("absolute subgraph of an isolated occurrence is itself") {
  Built b = build("void f(int lone){ }");
  const auto* lone = b.vfg.find("lone", 1);
  REQUIRE(lone != nullptr);
  VfgSubgraph sg = absolute_subgraph(b.vfg, *lone);
  CHECK(sg.nodes.size() == 1);
  CHECK(sg.edges.empty());
  CHECK(sg.kind == VfgSubgraph::Kind::Absolute);
}

TEST_CASE("bounds-check example: absolute subgraph of password@9") {
  Built b = build(fixtures::kBoundsCheckFn);
  const auto* anchor = b.vfg.find("password", 9);
  REQUIRE(anchor != nullptr);
  VfgSubgraph sg = absolute_subgraph(b.vfg, *anchor);
  CHECK(node_set(sg) ==
        std::set<std::pair<std::string, int>>{{"password", 9}, {"password", 1}});
}

TEST_CASE("bounds-check example: relative subgraph of (buf@5, BUFSIZE@3)") {
  Built b = build(fixtures::kBoundsCheckFn);
  const auto* anchor = b.vfg.find("buf", 5);
  const auto* target = b.vfg.find("BUFSIZE", 3);
  REQUIRE((anchor && target));
  auto sg = relative_subgraph(b.vfg, *anchor, *target);
  REQUIRE(sg.has_value());
  CHECK(node_set(*sg) ==
        std::set<std::pair<std::string, int>>{{"buf", 5}, {"buf", 3}, {"BUFSIZE", 3}});
}

TEST_CASE("relative subgraph with anchor == target is the anchor alone") {
  Built b = build("void f(int a){a = a + 1;}");
  const auto* anchor = b.vfg.find("a", 1);
  REQUIRE(anchor != nullptr);
  auto sg = relative_subgraph(b.vfg, *anchor, *anchor);
  REQUIRE(sg.has_value());
  CHECK(sg->nodes.size() == 1);
  CHECK(sg->nodes[0].token_index == anchor->token_index);
}

TEST_CASE("relative subgraph absent across disjoint components") {
  Built b = build("void f(int a, int b){int x = a; int y = b;}");
  const auto* x = b.vfg.find("x", 1);
  const auto* bvar = b.vfg.find("b", 1);
  REQUIRE((x && bvar));
  CHECK_FALSE(relative_subgraph(b.vfg, *x, *bvar).has_value());
}

TEST_CASE("fuzzed graphs match brute-force reachability and path enumeration") {
  Rng rng(20240811);
  int relative_present = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    ValueFlowGraph g = random_graph(rng, 8);
    int n = static_cast<int>(g.nodes.size());
    int anchor = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    VfgSubgraph abs = absolute_subgraph(g, g.nodes[static_cast<std::size_t>(anchor)]);
    std::set<int> abs_set;
    for (const auto& nd : abs.nodes) abs_set.insert(nd.token_index);
    REQUIRE(abs_set == oracle_absolute_nodes(g, anchor));

    int target = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    auto rel = relative_subgraph(g, g.nodes[static_cast<std::size_t>(anchor)],
                                 g.nodes[static_cast<std::size_t>(target)]);
    std::set<int> oracle = oracle_relative_nodes(g, anchor, target);
    if (rel.has_value()) {
      ++relative_present;
      std::set<int> rel_set;
      for (const auto& nd : rel->nodes) rel_set.insert(nd.token_index);
      REQUIRE(rel_set == oracle);
      // relative nodes are a subset of the absolute closure
      for (int t : rel_set) CHECK(abs_set.count(t) == 1);
    } else {
      REQUIRE(oracle.empty());
    }
  }
  CHECK(relative_present > 50);  // the fuzz actually exercised present cases
}

TEST_CASE("absolute subgraph over an edgeless graph has exactly one node") {
  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    ValueFlowGraph g = random_graph(rng, 6);
    g.edges.clear();
    for (const auto& n : g.nodes) {
      CHECK(absolute_subgraph(g, n).nodes.size() == 1);
    }
  }
}

TEST_CASE("vfg is insensitive to whitespace-only edits") {
  std::string compact = "int f(int a){int b=a;return b;}";
  std::string spaced = "int f( int a )\n{\n  int b = a ;\n  return b ;\n}";
  Built c = build(compact);
  Built s = build(spaced);
  REQUIRE(c.vfg.nodes.size() == s.vfg.nodes.size());
  REQUIRE(c.vfg.edges.size() == s.vfg.edges.size());
  for (std::size_t i = 0; i < c.vfg.nodes.size(); ++i) {
    CHECK(c.vfg.nodes[i].name == s.vfg.nodes[i].name);
    CHECK(c.vfg.nodes[i].var_id == s.vfg.nodes[i].var_id);
  }
}

TEST_CASE("loops close cycles in the vfg") {
  Built b = build("void f(int x){ while (x) { x = x + 1; } }");
  // some edge from a later occurrence back to an earlier one must exist
  bool has_back_edge = false;
  for (const auto& e : b.vfg.edges) has_back_edge |= e.src > e.dst;
  CHECK(has_back_edge);
  // traversal over the cyclic graph terminates
  for (const auto& n : b.vfg.nodes) (void)absolute_subgraph(b.vfg, n);
}

TEST_CASE("dot export names occurrences and reasons") {
  Built b = build("void f(int a){int c = a;}");
  std::string dot = to_dot(b.vfg);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("a@1") != std::string::npos);
  CHECK(dot.find("assign") != std::string::npos);
}
