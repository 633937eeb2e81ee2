#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "psquery/occurrence_index.hpp"
#include "psquery/suffix_tree.hpp"

namespace psquery {

/// Multiple prefixes, one suffix.
struct CountQuery {
  std::vector<std::string> prefixes;
  std::string suffix;
};

struct CountAnswer {
  std::vector<std::int64_t> counts;  // counts[i] pairs with prefixes[i]
  friend bool operator==(const CountAnswer&, const CountAnswer&) = default;
};

/// The strings associated with an edge of depth `depth`: (s - depth, s, e).
inline Segment edge_segment(IndexPair label, std::int64_t depth) {
  return Segment{label.s - depth, label.s, label.e};
}

/// The strings on edge(p) that are at least as long as p.
inline Segment set1_segment(const Locus& locus, std::int64_t prefix_len) {
  const std::int64_t a = locus.label.s - locus.edge_depth;
  return Segment{a, std::max(locus.label.s, prefix_len + a - 1), locus.label.e};
}

/// Number of strings associated with the edge that end with S.
std::int64_t evaluate_edge(const OccurrenceIndex& idx, IndexPair label, std::int64_t depth);

/// Writes into every node's `eval` the summed value of all edges below it.
/// Single sweep over the nodes in reverse preorder; no recursion.
void evaluate_nodes(SuffixTree& tree, const OccurrenceIndex& idx);

/// #(unique substrings of T with prefix p and suffix S). Needs evaluate_nodes
/// to have run against the same index. The empty prefix yields root.eval.
std::int64_t count_one(const SuffixTree& tree, const OccurrenceIndex& idx, std::string_view p);

/// Build, index, evaluate, then answer each prefix.
CountAnswer count_all(const Text& text, const CountQuery& query);

}  // namespace psquery
