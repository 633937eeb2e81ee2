#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "psquery/suffix_tree.hpp"
#include "support.hpp"

using namespace psquery;
using namespace psquery::testing;

namespace {

std::vector<Symbol> child_symbols(const SuffixTree& tree, NodeId id) {
  std::vector<Symbol> out;
  for (const Edge& edge : tree.node(id).children) out.push_back(edge.first);
  return out;
}

}  // namespace

TEST_CASE("barbarian tree has the expected root fan-out and [3,9] edges") {
  const SuffixTree tree = SuffixTree::build(Text("barbarian"));
  CHECK(child_symbols(tree, tree.root()) == std::vector<Symbol>{'a', 'b', 'i', 'n', 'r', kTerminal});

  int barian_edges = 0;
  for (std::size_t id = 0; id < tree.node_count(); ++id) {
    for (const Edge& edge : tree.node(static_cast<NodeId>(id)).children) {
      if (edge.label == IndexPair{3, 9}) {
        ++barian_edges;
        CHECK(tree.text().materialize({edge.label.s, edge.label.e}) == "barian$");
      }
    }
  }
  CHECK(barian_edges == 3);
}

TEST_CASE("empty text gives a root and one terminal leaf") {
  const SuffixTree tree = SuffixTree::build(Text(""));
  CHECK(tree.node_count() == 2);
  CHECK(tree.leaf_count() == 1);
  REQUIRE(tree.node(tree.root()).children.size() == 1);
  const Edge& edge = tree.node(tree.root()).children.front();
  CHECK(edge.first == kTerminal);
  CHECK(edge.label == IndexPair{0, 0});
}

TEST_CASE("aaa: positions not ending in the terminal match the 3 unique substrings") {
  const SuffixTree tree = SuffixTree::build(Text("aaa"));
  std::set<std::string> plain;
  for (const std::string& s : spelled_positions(tree)) {
    if (s.back() != '$') plain.insert(s);
  }
  CHECK(plain == std::set<std::string>{"a", "aa", "aaa"});
}

TEST_CASE("locate") {
  const SuffixTree tree = SuffixTree::build(Text("barbarian"));
  const NodeId bar_node = tree.find_child(tree.root(), 'b')->dest;

  SUBCASE("ba sits on the root b-edge") {
    const auto locus = tree.locate("ba");
    REQUIRE(locus);
    CHECK(locus->label == IndexPair{0, 2});
    CHECK(locus->edge_depth == 0);
    CHECK(locus->matched_len == 2);
    CHECK(locus->dest == bar_node);
    CHECK(tree.node(locus->dest).depth == 3);
  }
  SUBCASE("rb sits on a leaf edge below r") {
    const auto locus = tree.locate("rb");
    REQUIRE(locus);
    CHECK(locus->label == IndexPair{3, 9});
    CHECK(locus->edge_depth == 1);
    CHECK(tree.node(locus->dest).is_leaf());
  }
  SUBCASE("absent strings") {
    CHECK_FALSE(tree.locate("xyz"));
    CHECK_FALSE(tree.locate("barbariann"));
    CHECK_FALSE(tree.locate("ab"));
  }
  SUBCASE("empty string is the root locus") {
    const auto locus = tree.locate("");
    REQUIRE(locus);
    CHECK(locus->is_root());
    CHECK(locus->dest == tree.root());
  }
  SUBCASE("the whole text ends mid leaf edge") {
    const auto locus = tree.locate("barbarian");
    REQUIRE(locus);
    CHECK(locus->label == IndexPair{3, 9});
    CHECK(locus->matched_len == 6);
  }
}

TEST_CASE("binary bytes, including NUL and 0xff, are ordinary symbols") {
  const std::string bytes{'\0', '\xff', '\0', '$'};
  const SuffixTree tree = SuffixTree::build(Text(bytes));
  CHECK(tree.locate(std::string{'\0', '\xff'}));
  CHECK(tree.locate("$"));  // a literal dollar byte, not the terminal
  CHECK_FALSE(tree.locate(std::string{'\xff', '\xff'}));
  CHECK(child_symbols(tree, tree.root()).back() == kTerminal);
}

TEST_CASE("property: positions are in bijection with substrings of T$") {
  std::mt19937_64 rng(7);
  for (const int alphabet : kAlphabets) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::string text = random_string(rng, random_len(rng, 200), alphabet);
      const SuffixTree tree = SuffixTree::build(Text(text));
      const std::vector<std::string> spelled = spelled_positions(tree);
      const std::set<std::string> unique(spelled.begin(), spelled.end());
      CAPTURE(text);
      REQUIRE(unique.size() == spelled.size());
      REQUIRE(unique == substrings_with_terminal(text));
    }
  }
}

TEST_CASE("property: depths, branching and linear size") {
  std::mt19937_64 rng(11);
  for (const int alphabet : kAlphabets) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::string text = random_string(rng, random_len(rng, 200), alphabet);
      const SuffixTree tree = SuffixTree::build(Text(text));
      const auto n = static_cast<std::size_t>(tree.text().effective_len());
      CAPTURE(text);
      CHECK(tree.node_count() <= 2 * n);
      CHECK(tree.edge_count() <= 2 * n);
      CHECK(tree.leaf_count() == n);

      // Recompute depth as the summed label length along each root path.
      std::vector<std::pair<NodeId, std::int64_t>> stack{{tree.root(), 0}};
      while (!stack.empty()) {
        const auto [id, depth] = stack.back();
        stack.pop_back();
        const Node& node = tree.node(id);
        REQUIRE(node.depth == depth);
        if (id != tree.root()) REQUIRE((node.is_leaf() || node.children.size() >= 2));
        REQUIRE(std::is_sorted(node.children.begin(), node.children.end(),
                               [](const Edge& x, const Edge& y) { return x.first < y.first; }));
        for (const Edge& edge : node.children) {
          REQUIRE(0 <= edge.label.s);
          REQUIRE(edge.label.s <= edge.label.e);
          REQUIRE(edge.label.e <= static_cast<std::int64_t>(n) - 1);
          REQUIRE(edge.first == tree.text().symbol(edge.label.s));
          stack.emplace_back(edge.dest, depth + edge.label.e - edge.label.s + 1);
        }
      }

      // Ids are a depth-first preorder, smallest symbol first.
      std::vector<NodeId> order{tree.root()};
      NodeId expected = 0;
      while (!order.empty()) {
        const NodeId id = order.back();
        order.pop_back();
        REQUIRE(id == expected++);
        const auto& children = tree.node(id).children;
        for (auto it = children.rbegin(); it != children.rend(); ++it) order.push_back(it->dest);
      }
      CHECK(expected == static_cast<NodeId>(tree.node_count()));
    }
  }
}

TEST_CASE("property: locate succeeds iff the query is a substring") {
  std::mt19937_64 rng(13);
  for (const int alphabet : kAlphabets) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::string text = random_string(rng, random_len(rng, 200), alphabet);
      const SuffixTree tree = SuffixTree::build(Text(text));
      for (int q = 0; q < 50; ++q) {
        std::string p = random_query(rng, text, 12, alphabet);
        if (!p.empty() && (rng() % 3 == 0)) {
          // Perturb one symbol, possibly leaving the alphabet.
          p[rng() % p.size()] = static_cast<char>('a' + rng() % static_cast<unsigned>(alphabet + 1));
        }
        CAPTURE(text);
        CAPTURE(p);
        const auto locus = tree.locate(p);
        REQUIRE(locus.has_value() == (text.find(p) != std::string::npos));
        if (locus && !p.empty()) {
          // The located edge really spells p at the matched offset.
          const std::int64_t a = locus->label.s - locus->edge_depth;
          REQUIRE(tree.text().materialize({a, locus->label.s + locus->matched_len - 1}) == p);
        }
      }
    }
  }
}

TEST_CASE("export_dot") {
  SUBCASE("barbarian labels carry index pair and string") {
    const std::string dot = SuffixTree::build(Text("barbarian")).export_dot();
    CHECK(dot.find("[label=\"[3,9] barian$\"]") != std::string::npos);
    CHECK(dot.starts_with("digraph suffix_tree {"));
  }
  SUBCASE("empty text has exactly one edge") {
    const std::string dot = SuffixTree::build(Text("")).export_dot();
    std::size_t arrows = 0;
    for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; pos += 2) ++arrows;
    CHECK(arrows == 1);
    CHECK(dot.find("[0,0] $") != std::string::npos);
  }
  SUBCASE("aa matches a naive compressed trie") {
    const SuffixTree tree = SuffixTree::build(Text("aa"));
    const auto expected = naive_compressed_edges("aa");
    CHECK(tree_edges(tree) == expected);
    CHECK(expected == std::set<std::pair<std::string, std::string>>{
                          {"", "a"}, {"", "$"}, {"a", "a$"}, {"a", "$"}});
    const std::string dot = tree.export_dot();
    CHECK(dot ==
          "digraph suffix_tree {\n"
          "  node [shape=circle, label=\"\"];\n"
          "  n0;\n"
          "  n0 -> n1 [label=\"[0,0] a\"];\n"
          "  n0 -> n4 [label=\"[2,2] $\"];\n"
          "  n1;\n"
          "  n1 -> n2 [label=\"[1,2] a$\"];\n"
          "  n1 -> n3 [label=\"[2,2] $\"];\n"
          "  n2 [shape=point];\n"
          "  n3 [shape=point];\n"
          "  n4 [shape=point];\n"
          "}\n");
  }
  SUBCASE("random texts match the naive compressed trie") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const std::string text = random_string(rng, random_len(rng, 40), 1 + static_cast<int>(rng() % 3));
      CAPTURE(text);
      CHECK(tree_edges(SuffixTree::build(Text(text))) == naive_compressed_edges(text));
    }
  }
  SUBCASE("control bytes are escaped") {
    const std::string dot = SuffixTree::build(Text(std::string("a\n\"", 3))).export_dot();
    CHECK(dot.find("\\\\x0a") != std::string::npos);
    CHECK(dot.find("\\\"") != std::string::npos);
  }
}

TEST_CASE("unary text of 200k symbols builds without deep recursion") {
  const SuffixTree tree = SuffixTree::build(Text(std::string(200000, 'a')));
  CHECK(tree.leaf_count() == 200001);
  CHECK(tree.locate(std::string(200000, 'a')));
  CHECK_FALSE(tree.locate(std::string(200001, 'a')));
}
