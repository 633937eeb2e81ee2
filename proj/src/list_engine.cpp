#include "psquery/list_engine.hpp"

#include <algorithm>

namespace psquery {

std::optional<Set1> get_set1(const SuffixTree& tree, std::string_view p) {
  const auto locus = tree.locate(p);
  if (!locus) return std::nullopt;
  if (locus->is_root()) return Set1{std::nullopt, tree.root()};
  return Set1{set1_segment(*locus, static_cast<std::int64_t>(p.size())), locus->dest};
}

void sweep_set2(const SuffixTree& tree, const OccurrenceIndex& idx, NodeId start,
                std::vector<std::int32_t>& id_stack, std::vector<std::vector<SubstringRef>>& lists,
                ListStats* stats) {
  struct Frame {
    NodeId node;
    std::size_t next_child;
  };

  std::vector<SubstringRef> edge_so;
  std::vector<Frame> stack;

  auto enter = [&](NodeId id) {
    const auto& ids = tree.node(id).prefix_ids;
    id_stack.insert(id_stack.end(), ids.begin(), ids.end());
    if (stats) stats->max_id_stack_depth = std::max(stats->max_id_stack_depth, id_stack.size());
    stack.push_back({id, 0});
  };

  enter(start);
  while (!stack.empty()) {
    Frame& top = stack.back();
    const Node& current = tree.node(top.node);

    if (top.next_child == current.children.size()) {
      id_stack.resize(id_stack.size() - current.prefix_ids.size());
      stack.pop_back();
      continue;
    }

    const Edge& edge = current.children[top.next_child++];
    if (!id_stack.empty()) {
      edge_so.clear();
      if (stats) ++stats->set2_get_so_calls;
      get_so(idx, edge_segment(edge.label, current.depth),
             [&](SubstringRef ref) { edge_so.push_back(ref); }, stats);
      if (!edge_so.empty()) {
        for (const std::int32_t i : id_stack) {
          auto& out = lists[static_cast<std::size_t>(i)];
          out.insert(out.end(), edge_so.begin(), edge_so.end());
        }
      }
    }
    // Leaves have nothing below them.
    if (!tree.node(edge.dest).is_leaf()) enter(edge.dest);
  }
}

ListAnswer list_with(SuffixTree& tree, const OccurrenceIndex& idx, const std::vector<std::string>& prefixes,
                     ListStats* stats) {
  ListAnswer answer;
  answer.lists.resize(prefixes.size());

  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    const auto set1 = get_set1(tree, prefixes[i]);
    if (!set1) continue;
    if (set1->segment) {
      auto& out = answer.lists[i];
      get_so(idx, *set1->segment, [&](SubstringRef ref) { out.push_back(ref); }, stats);
    }
    tree.node(set1->dest).prefix_ids.push_back(static_cast<std::int32_t>(i));
  }

  std::vector<std::int32_t> id_stack;
  sweep_set2(tree, idx, tree.root(), id_stack, answer.lists, stats);

  for (std::size_t id = 0; id < tree.node_count(); ++id) tree.node(static_cast<NodeId>(id)).prefix_ids.clear();
  return answer;
}

ListAnswer list_all(const Text& text, const std::vector<std::string>& prefixes, std::string_view suffix,
                    ListStats* stats) {
  if (prefixes.empty()) return {};
  SuffixTree tree = SuffixTree::build(text);
  const OccurrenceIndex idx = OccurrenceIndex::build(tree.text(), suffix);
  return list_with(tree, idx, prefixes, stats);
}

}  // namespace psquery
