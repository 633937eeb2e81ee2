#include "psquery/occurrence_index.hpp"

namespace psquery {

namespace {

// Knuth-Morris-Pratt failure function: fail[k] is the length of the longest
// proper border of pattern[0..k].
std::vector<std::size_t> failure_function(std::string_view pattern) {
  std::vector<std::size_t> fail(pattern.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k - 1];
    if (pattern[i] == pattern[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

}  // namespace

std::vector<std::uint8_t> build_so(const Text& text, std::string_view pattern) {
  const auto n = static_cast<std::size_t>(text.effective_len());
  std::vector<std::uint8_t> so(n, 0);
  const std::string_view bytes = text.bytes();

  if (pattern.empty()) {
    for (std::size_t i = 0; i + 1 < n; ++i) so[i] = 1;
    return so;
  }

  const auto fail = failure_function(pattern);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    while (matched > 0 && bytes[i] != pattern[matched]) matched = fail[matched - 1];
    if (bytes[i] == pattern[matched]) ++matched;
    if (matched == pattern.size()) {
      so[i] = 1;
      matched = fail[matched - 1];
    }
  }
  return so;
}

std::vector<std::int64_t> build_cso(const std::vector<std::uint8_t>& so) {
  std::vector<std::int64_t> cso(so.size());
  std::int64_t total = 0;
  for (std::size_t i = 0; i < so.size(); ++i) {
    total += so[i];
    cso[i] = total;
  }
  return cso;
}

std::vector<std::int64_t> build_next_so(const std::vector<std::uint8_t>& so) {
  std::vector<std::int64_t> next(so.size());
  std::int64_t j = -1;
  for (std::size_t i = so.size(); i-- > 0;) {
    next[i] = j;
    if (so[i] == 1) j = static_cast<std::int64_t>(i);
  }
  return next;
}

OccurrenceIndex OccurrenceIndex::build(const Text& text, std::string_view suffix) {
  OccurrenceIndex idx;
  idx.so_ = build_so(text, suffix);
  idx.cso_ = build_cso(idx.so_);
  idx.next_so_ = build_next_so(idx.so_);
  idx.suffix_len_ = static_cast<std::int64_t>(suffix.size());
  return idx;
}

}  // namespace psquery
