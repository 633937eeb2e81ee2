#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psquery/count_engine.hpp"
#include "psquery/occurrence_index.hpp"
#include "psquery/suffix_tree.hpp"

namespace psquery {

struct ListAnswer {
  std::vector<std::vector<SubstringRef>> lists;  // lists[i] pairs with the i-th query string
};

/// Instrumentation counters for one listing run.
struct ListStats {
  std::int64_t get_so_calls = 0;
  std::int64_t get_so_loop_checks = 0;  // evaluations of the enumeration loop condition
  std::int64_t set2_get_so_calls = 0;
  std::int64_t emitted = 0;  // refs produced by get_so, before fan-out
  std::size_t max_id_stack_depth = 0;
};

/// Emits (a, i) for every string T_a..T_i of `seg` that ends with S, in
/// increasing i. O(#emitted + 1).
template <typename Sink>
void get_so(const OccurrenceIndex& idx, const Segment& seg, Sink&& sink, ListStats* stats = nullptr) {
  if (stats) ++stats->get_so_calls;
  std::int64_t i = std::max(seg.s, seg.a + idx.suffix_len() - 1);
  if (i >= idx.effective_len()) return;
  if (idx.so()[static_cast<std::size_t>(i)] == 0) i = idx.next_so()[static_cast<std::size_t>(i)];
  while (true) {
    if (stats) ++stats->get_so_loop_checks;
    if (i > seg.e || i == -1) break;
    sink(SubstringRef{seg.a, i});
    if (stats) ++stats->emitted;
    i = idx.next_so()[static_cast<std::size_t>(i)];
  }
}

/// p.Set_1 as a segment, plus dest(edge(p)).
struct Set1 {
  std::optional<Segment> segment;  // empty for the empty prefix
  NodeId dest = 0;
};

/// nullopt iff p is not a substring of T. The empty prefix has no edge; its
/// Set_1 is empty and its Set_2 is the whole tree.
std::optional<Set1> get_set1(const SuffixTree& tree, std::string_view p);

/// Depth-first sweep from `start` appending p_i.Set_2 ∩ ans_i to lists[i].
/// Expects prefix_ids registered and `id_stack` empty; leaves it empty.
void sweep_set2(const SuffixTree& tree, const OccurrenceIndex& idx, NodeId start,
                std::vector<std::int32_t>& id_stack, std::vector<std::vector<SubstringRef>>& lists,
                ListStats* stats = nullptr);

/// Listing on a prebuilt tree and index. Uses and then clears prefix_ids.
ListAnswer list_with(SuffixTree& tree, const OccurrenceIndex& idx, const std::vector<std::string>& prefixes,
                     ListStats* stats = nullptr);

/// Multiple prefixes, one suffix listing.
ListAnswer list_all(const Text& text, const std::vector<std::string>& prefixes, std::string_view suffix,
                    ListStats* stats = nullptr);

}  // namespace psquery
