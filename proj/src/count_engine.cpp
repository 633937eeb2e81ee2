#include "psquery/count_engine.hpp"

namespace psquery {

std::int64_t evaluate_edge(const OccurrenceIndex& idx, IndexPair label, std::int64_t depth) {
  return idx.evaluate_segment(edge_segment(label, depth));
}

void evaluate_nodes(SuffixTree& tree, const OccurrenceIndex& idx) {
  // Ids are in preorder, so a reverse sweep sees every child before its parent.
  for (auto id = static_cast<NodeId>(tree.node_count()); id-- > 0;) {
    Node& node = tree.node(id);
    std::int64_t eval = 0;
    for (const Edge& edge : node.children) eval += evaluate_edge(idx, edge.label, node.depth) + tree.node(edge.dest).eval;
    node.eval = eval;
  }
}

std::int64_t count_one(const SuffixTree& tree, const OccurrenceIndex& idx, std::string_view p) {
  const auto locus = tree.locate(p);
  if (!locus) return 0;
  if (locus->is_root()) return tree.node(tree.root()).eval;
  const auto prefix_len = static_cast<std::int64_t>(p.size());
  return idx.evaluate_segment(set1_segment(*locus, prefix_len)) + tree.node(locus->dest).eval;
}

CountAnswer count_all(const Text& text, const CountQuery& query) {
  SuffixTree tree = SuffixTree::build(text);
  const OccurrenceIndex idx = OccurrenceIndex::build(tree.text(), query.suffix);
  evaluate_nodes(tree, idx);

  CountAnswer answer;
  answer.counts.reserve(query.prefixes.size());
  for (const std::string& p : query.prefixes) answer.counts.push_back(count_one(tree, idx, p));
  return answer;
}

}  // namespace psquery
