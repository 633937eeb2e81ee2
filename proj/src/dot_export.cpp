#include <cstdio>
#include <vector>

#include "psquery/suffix_tree.hpp"

namespace psquery {

namespace {

void append_escaped(std::string& out, std::string_view raw) {
  for (const char c : raw) {
    const auto byte = static_cast<unsigned char>(c);
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (byte < 0x20 || byte >= 0x7f) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\\\x%02x", byte);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
}

}  // namespace

std::string SuffixTree::export_dot() const {
  // Preorder numbering so the output does not depend on arena layout.
  std::vector<int> order(node_count(), -1);
  int next_id = 0;

  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    order[static_cast<std::size_t>(id)] = next_id++;
    const auto& children = node(id).children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(it->dest);
  }

  std::string out = "digraph suffix_tree {\n  node [shape=circle, label=\"\"];\n";
  stack.assign(1, root());
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const int from = order[static_cast<std::size_t>(id)];
    out += "  n" + std::to_string(from);
    if (node(id).is_leaf()) out += " [shape=point]";
    out += ";\n";

    const auto& children = node(id).children;
    for (const Edge& edge : children) {
      out += "  n" + std::to_string(from) + " -> n" +
             std::to_string(order[static_cast<std::size_t>(edge.dest)]) + " [label=\"[" +
             std::to_string(edge.label.s) + "," + std::to_string(edge.label.e) + "] ";
      append_escaped(out, text_.materialize(SubstringRef{edge.label.s, edge.label.e}));
      out += "\"];\n";
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(it->dest);
  }
  out += "}\n";
  return out;
}

}  // namespace psquery
