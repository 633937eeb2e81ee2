#include "psquery/suffix_tree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace psquery {

std::string Text::materialize(SubstringRef ref) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(ref.length(), 0)));
  for (std::int64_t i = ref.start; i <= ref.end; ++i) {
    out.push_back(i < size() ? bytes_[static_cast<std::size_t>(i)] : '$');
  }
  return out;
}

Text Text::reversed() const { return Text(reverse_bytes(bytes_)); }

std::string reverse_bytes(std::string_view s) { return std::string(s.rbegin(), s.rend()); }

namespace {

constexpr std::int32_t kOpenEnd = std::numeric_limits<std::int32_t>::max();

// Ukkonen's online construction over the symbols of T$.
//
// The walk is bound by random memory access, so the builder keeps one compact
// 20-byte record per node that doubles as the node's incoming edge: reaching an
// edge also reaches its destination's child list and suffix link. Siblings
// form a list sorted by first symbol. Node::children is filled at the end.
class UkkonenBuilder {
 public:
  UkkonenBuilder(const Text& text, std::vector<Node>& nodes, std::vector<Edge>& edges)
      : text_(text), nodes_(nodes), out_edges_(edges) {}

  void run() {
    const std::int64_t n = text_.effective_len();
    // NodeId is 32-bit and a tree has up to 2n nodes.
    if (n > std::numeric_limits<NodeId>::max() / 2) throw std::length_error("text too long for a suffix tree");
    records_.reserve(static_cast<std::size_t>(2 * n));
    new_node(0, 0);  // root; its label is unused

    for (std::int64_t i = 0; i < n; ++i) extend(i);
    emit(n);
  }

 private:
  struct Record {
    std::int32_t s;     // incoming label [s, e]
    std::int32_t e;     // kOpenEnd on leaves
    std::int32_t next;  // sibling with the next larger first symbol, or -1
    std::int32_t head;  // smallest-symbol child, or -1
    NodeId link;        // suffix link; construction scaffolding only
  };

  Record& at(NodeId id) { return records_[static_cast<std::size_t>(id)]; }
  Symbol first_of(NodeId id) const { return text_.symbol(records_[static_cast<std::size_t>(id)].s); }

  NodeId new_node(std::int64_t s, std::int32_t e) {
    records_.push_back(Record{static_cast<std::int32_t>(s), e, -1, -1, 0});
    return static_cast<NodeId>(records_.size() - 1);
  }

  // The link slot (parent head or sibling next) that holds the child of `id`
  // starting with `first`, or the slot where such a child would be inserted.
  std::int32_t* child_slot(NodeId id, Symbol first) {
    std::int32_t* slot = &at(id).head;
    while (*slot != -1 && first_of(*slot) < first) slot = &at(*slot).next;
    return slot;
  }

  void add_leaf(NodeId parent, std::int64_t i) {
    const NodeId leaf = new_node(i, kOpenEnd);  // may reallocate; look up the slot afterwards
    std::int32_t* slot = child_slot(parent, text_.symbol(i));
    at(leaf).next = *slot;
    *slot = leaf;
  }

  std::int64_t edge_length(const Record& r) const {
    const std::int64_t end = r.e == kOpenEnd ? leaf_end_ : r.e;
    return end - r.s + 1;
  }

  void extend(std::int64_t i) {
    leaf_end_ = i;
    ++remainder_;
    NodeId pending_link = -1;
    const Symbol current = text_.symbol(i);

    while (remainder_ > 0) {
      if (active_length_ == 0) active_edge_ = i;
      const Symbol first = text_.symbol(active_edge_);
      const NodeId child = *child_slot(active_node_, first);

      if (child == -1 || first_of(child) != first) {
        add_leaf(active_node_, i);
        if (pending_link != -1) {
          at(pending_link).link = active_node_;
          pending_link = -1;
        }
      } else {
        const std::int64_t len = edge_length(at(child));
        if (active_length_ >= len) {
          // Skip/count: hop to the edge's destination and retry.
          active_edge_ += len;
          active_length_ -= len;
          active_node_ = child;
          continue;
        }
        if (text_.symbol(at(child).s + active_length_) == current) {
          if (pending_link != -1 && active_node_ != 0) at(pending_link).link = active_node_;
          ++active_length_;
          break;
        }

        // Split: `mid` takes over the upper part of child's label and child's
        // place among its siblings; child keeps its identity below mid.
        const std::int64_t split = at(child).s + active_length_;
        const NodeId mid = new_node(at(child).s, static_cast<std::int32_t>(split - 1));
        std::int32_t* slot = child_slot(active_node_, first);
        at(mid).next = at(child).next;
        *slot = mid;
        at(child).s = static_cast<std::int32_t>(split);
        at(child).next = -1;
        at(mid).head = child;
        add_leaf(mid, i);

        if (pending_link != -1) at(pending_link).link = mid;
        pending_link = mid;
      }

      --remainder_;
      if (active_node_ == 0 && active_length_ > 0) {
        --active_length_;
        active_edge_ = i - remainder_ + 1;
      } else if (active_node_ != 0) {
        active_node_ = at(active_node_).link;
      }
    }
  }

  // Renumbers nodes in depth-first preorder, so later traversals walk memory in
  // order, and lays each node's child edges out contiguously.
  void emit(std::int64_t n) {
    nodes_.clear();
    nodes_.resize(records_.size());
    out_edges_.clear();
    out_edges_.reserve(records_.size() - 1);  // reserved up front: spans stay valid
    struct Pending {
      NodeId id;            // builder numbering
      std::size_t in_edge;  // position of the parent edge in out_edges_
    };
    std::vector<Pending> stack{{0, 0}};
    NodeId next_id = 0;
    while (!stack.empty()) {
      const Pending top = stack.back();
      stack.pop_back();
      const NodeId out = next_id++;
      if (out != 0) out_edges_[top.in_edge].dest = out;

      const std::size_t base = out_edges_.size();
      for (NodeId c = at(top.id).head; c != -1; c = at(c).next) {
        const Record& r = at(c);
        out_edges_.push_back(Edge{first_of(c), IndexPair{r.s, r.e == kOpenEnd ? n - 1 : r.e}, c});
      }
      nodes_[static_cast<std::size_t>(out)].children =
          std::span<const Edge>(out_edges_.data() + base, out_edges_.size() - base);
      for (std::size_t c = out_edges_.size(); c-- > base;) stack.push_back({out_edges_[c].dest, c});
    }
  }

  const Text& text_;
  std::vector<Node>& nodes_;
  std::vector<Edge>& out_edges_;
  std::vector<Record> records_;

  NodeId active_node_ = 0;
  std::int64_t active_edge_ = 0;
  std::int64_t active_length_ = 0;
  std::int64_t remainder_ = 0;
  std::int64_t leaf_end_ = -1;
};

}  // namespace

SuffixTree SuffixTree::build(Text text) {
  SuffixTree tree(std::move(text));
  UkkonenBuilder(tree.text_, tree.nodes_, tree.edges_).run();

  // Depths top-down. Nodes are numbered in preorder, so parents come first.
  for (Node& node : tree.nodes_) {
    for (const Edge& edge : node.children) tree.node(edge.dest).depth = node.depth + edge.label.length();
  }
  return tree;
}

std::size_t SuffixTree::leaf_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf(); }));
}

const Edge* SuffixTree::find_child(NodeId id, Symbol first) const {
  const auto& children = node(id).children;
  auto it = std::lower_bound(children.begin(), children.end(), first,
                             [](const Edge& edge, Symbol key) { return edge.first < key; });
  return (it != children.end() && it->first == first) ? &*it : nullptr;
}

const Edge& SuffixTree::edge(EdgeRef ref) const { return *find_child(ref.source, ref.first); }

std::optional<Locus> SuffixTree::locate(std::string_view p) const {
  if (p.empty()) return Locus{std::nullopt, 0, IndexPair{}, 0, root()};

  NodeId current = root();
  std::size_t pos = 0;
  while (true) {
    const Edge* edge = find_child(current, symbol_of(p[pos]));
    if (edge == nullptr) return std::nullopt;

    std::int64_t k = 0;
    const std::int64_t len = edge->label.length();
    while (pos < p.size() && k < len) {
      if (text_.symbol(edge->label.s + k) != symbol_of(p[pos])) return std::nullopt;
      ++pos;
      ++k;
    }
    if (pos == p.size()) {
      return Locus{EdgeRef{current, edge->first}, node(current).depth, edge->label, k, edge->dest};
    }
    current = edge->dest;
  }
}

void SuffixTree::clear_annotations() {
  for (Node& node : nodes_) {
    node.eval = 0;
    node.prefix_ids.clear();
  }
}

}  // namespace psquery
