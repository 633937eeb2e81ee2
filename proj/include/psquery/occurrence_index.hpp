#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <vector>

#include "psquery/text.hpp"

namespace psquery {

/// The string set {T_a..T_i | s <= i <= e}.
struct Segment {
  std::int64_t a = 0;
  std::int64_t s = 0;
  std::int64_t e = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// so[i] = 1 iff an occurrence of `pattern` ends at i (terminal index excluded).
/// An empty pattern marks every non-terminal index.
std::vector<std::uint8_t> build_so(const Text& text, std::string_view pattern);

/// Running totals of `so`.
std::vector<std::int64_t> build_cso(const std::vector<std::uint8_t>& so);

/// Smallest j > i with so[j] = 1, else -1. One descending pass.
std::vector<std::int64_t> build_next_so(const std::vector<std::uint8_t>& so);

/// Occurrence arrays for one (T, S) pair. Immutable once built.
class OccurrenceIndex {
 public:
  static OccurrenceIndex build(const Text& text, std::string_view suffix);

  const std::vector<std::uint8_t>& so() const { return so_; }
  const std::vector<std::int64_t>& cso() const { return cso_; }
  const std::vector<std::int64_t>& next_so() const { return next_so_; }

  std::int64_t suffix_len() const { return suffix_len_; }
  std::int64_t effective_len() const { return static_cast<std::int64_t>(so_.size()); }

  /// Sum of so[s..e]; 0 for an empty range (s > e).
  std::int64_t count_so(std::int64_t s, std::int64_t e) const {
    if (s > e) return 0;
    return s == 0 ? cso_[static_cast<std::size_t>(e)]
                  : cso_[static_cast<std::size_t>(e)] - cso_[static_cast<std::size_t>(s - 1)];
  }

  /// Number of strings in `seg` that end with S.
  std::int64_t evaluate_segment(const Segment& seg) const {
    return count_so(std::max(seg.s, suffix_len_ + seg.a - 1), seg.e);
  }

 private:
  std::vector<std::uint8_t> so_;
  std::vector<std::int64_t> cso_;
  std::vector<std::int64_t> next_so_;
  std::int64_t suffix_len_ = 0;
};

}  // namespace psquery
