#pragma once

// Test-only helpers: random generators and brute-force views of a suffix tree
// that avoid the library's own depth bookkeeping.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "psquery/suffix_tree.hpp"
#include "psquery/text.hpp"

namespace psquery::testing {

inline constexpr int kAlphabets[] = {1, 2, 4, 26};

inline std::string random_string(std::mt19937_64& rng, std::size_t len, int alphabet) {
  std::uniform_int_distribution<int> pick(0, alphabet - 1);
  std::string s(len, 'a');
  for (char& c : s) c = static_cast<char>('a' + pick(rng));
  return s;
}

inline std::size_t random_len(std::mt19937_64& rng, std::size_t max_len) {
  return std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
}

/// A query string that is a substring of `text` about half the time.
inline std::string random_query(std::mt19937_64& rng, const std::string& text, std::size_t max_len, int alphabet) {
  const std::size_t len = random_len(rng, max_len);
  if (!text.empty() && len <= text.size() && (rng() & 1)) {
    const std::size_t start = std::uniform_int_distribution<std::size_t>(0, text.size() - len)(rng);
    return text.substr(start, len);
  }
  return random_string(rng, len, alphabet);
}

/// Every substring of T$ (terminal rendered as '$'), including ones ending in '$'.
inline std::set<std::string> substrings_with_terminal(const std::string& text) {
  const std::string full = text + '$';
  std::set<std::string> out;
  for (std::size_t s = 0; s < full.size(); ++s) {
    for (std::size_t len = 1; s + len <= full.size(); ++len) out.insert(full.substr(s, len));
  }
  return out;
}

/// Spells every position of the tree by concatenating edge labels from the
/// root. Returns one entry per position (duplicates would break the bijection).
inline std::vector<std::string> spelled_positions(const SuffixTree& tree) {
  std::vector<std::string> out;
  std::vector<std::pair<NodeId, std::string>> stack{{tree.root(), ""}};
  while (!stack.empty()) {
    auto [id, path] = stack.back();
    stack.pop_back();
    for (const Edge& edge : tree.node(id).children) {
      const std::string label = tree.text().materialize(SubstringRef{edge.label.s, edge.label.e});
      for (std::size_t k = 1; k <= label.size(); ++k) out.push_back(path + label.substr(0, k));
      stack.emplace_back(edge.dest, path + label);
    }
  }
  return out;
}

/// Every edge as (string at its source, label string), from the library tree.
inline std::set<std::pair<std::string, std::string>> tree_edges(const SuffixTree& tree) {
  std::set<std::pair<std::string, std::string>> out;
  std::vector<std::pair<NodeId, std::string>> stack{{tree.root(), ""}};
  while (!stack.empty()) {
    auto [id, path] = stack.back();
    stack.pop_back();
    for (const Edge& edge : tree.node(id).children) {
      const std::string label = tree.text().materialize(SubstringRef{edge.label.s, edge.label.e});
      out.emplace(path, label);
      stack.emplace_back(edge.dest, path + label);
    }
  }
  return out;
}

/// Same view built the slow way: insert all suffixes of T$ into an
/// uncompressed trie, then merge unary chains.
inline std::set<std::pair<std::string, std::string>> naive_compressed_edges(const std::string& text) {
  struct TrieNode {
    std::map<char, int> next;
  };
  const std::string full = text + '$';
  std::vector<TrieNode> trie(1);
  for (std::size_t s = 0; s < full.size(); ++s) {
    int cur = 0;
    for (std::size_t i = s; i < full.size(); ++i) {
      auto it = trie[static_cast<std::size_t>(cur)].next.find(full[i]);
      if (it == trie[static_cast<std::size_t>(cur)].next.end()) {
        trie.emplace_back();
        const int fresh = static_cast<int>(trie.size() - 1);
        trie[static_cast<std::size_t>(cur)].next.emplace(full[i], fresh);
        cur = fresh;
      } else {
        cur = it->second;
      }
    }
  }

  std::set<std::pair<std::string, std::string>> out;
  std::vector<std::pair<int, std::string>> stack{{0, ""}};
  while (!stack.empty()) {
    auto [id, path] = stack.back();
    stack.pop_back();
    for (const auto& [c, child] : trie[static_cast<std::size_t>(id)].next) {
      std::string label(1, c);
      int cur = child;
      while (trie[static_cast<std::size_t>(cur)].next.size() == 1) {
        const auto& [c2, only] = *trie[static_cast<std::size_t>(cur)].next.begin();
        label.push_back(c2);
        cur = only;
      }
      out.emplace(path, label);
      stack.emplace_back(cur, path + label);
    }
  }
  return out;
}

/// Materializes refs; returns the set and reports whether any string repeated.
inline std::set<std::string> materialize_all(const Text& text, const std::vector<SubstringRef>& refs,
                                             bool* had_duplicate = nullptr) {
  std::set<std::string> out;
  bool dup = false;
  for (const SubstringRef& ref : refs) {
    if (!out.insert(text.materialize(ref)).second) dup = true;
  }
  if (had_duplicate) *had_duplicate = dup;
  return out;
}

}  // namespace psquery::testing
