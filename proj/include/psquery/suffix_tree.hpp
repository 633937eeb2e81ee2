#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psquery/text.hpp"

namespace psquery {

using NodeId = std::int32_t;

/// Inclusive label range [s, e] of an edge, i.e. T_s..T_e.
struct IndexPair {
  std::int64_t s = 0;
  std::int64_t e = 0;

  std::int64_t length() const { return e - s + 1; }
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct Edge {
  Symbol first = 0;  // T_s, the key in the parent's child list
  IndexPair label;
  NodeId dest = 0;
};

/// An edge is identified by its source node and the first symbol of its label.
struct EdgeRef {
  NodeId source = 0;
  Symbol first = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

struct Node {
  std::int64_t depth = 0;
  std::span<const Edge> children;  // sorted by `first`, ascending; owned by the tree

  // Annotations written by the query engines.
  std::int64_t eval = 0;
  std::vector<std::int32_t> prefix_ids;

  bool is_leaf() const { return children.empty(); }
};

/// Where a query string ends in the tree.
///
/// For a non-empty string p this is edge(p): the unique edge whose associated
/// strings contain p. The empty string maps to the root locus (no edge,
/// dest = root).
struct Locus {
  std::optional<EdgeRef> edge;
  std::int64_t edge_depth = 0;  // depth of the edge's source node
  IndexPair label;
  std::int64_t matched_len = 0;  // symbols of `label` consumed by p
  NodeId dest = 0;

  bool is_root() const { return !edge.has_value(); }
};

/// Suffix tree of T$ with index-pair edge labels, built by Ukkonen's algorithm.
///
/// The tree owns a copy of its text and one flat edge array that the nodes'
/// child spans point into, so it is move-only. After construction the
/// topology is immutable; only Node::eval and Node::prefix_ids may be rewritten.
class SuffixTree {
 public:
  static SuffixTree build(Text text);

  SuffixTree(SuffixTree&&) noexcept = default;
  SuffixTree& operator=(SuffixTree&&) noexcept = default;
  SuffixTree(const SuffixTree&) = delete;
  SuffixTree& operator=(const SuffixTree&) = delete;

  const Text& text() const { return text_; }

  /// Node ids follow a depth-first preorder with children visited in
  /// ascending symbol order, so the root is 0 and every parent precedes its
  /// children.
  NodeId root() const { return 0; }

  const Node& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  Node& node(NodeId id) { return nodes_[static_cast<std::size_t>(id)]; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return nodes_.size() - 1; }
  std::size_t leaf_count() const;

  /// Child edge of `id` whose label starts with `first`, or nullptr.
  const Edge* find_child(NodeId id, Symbol first) const;
  const Edge& edge(EdgeRef ref) const;

  /// Walks p from the root. Returns nullopt iff p is not a substring of T.
  std::optional<Locus> locate(std::string_view p) const;

  /// Graphviz rendering; children in ascending symbol order, labels as
  /// "[s,e] string" with the terminal shown as '$'.
  std::string export_dot() const;

  void clear_annotations();

 private:
  explicit SuffixTree(Text text) : text_(std::move(text)) {}

  Text text_;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;  // grouped by source node, sources in preorder
};

}  // namespace psquery
