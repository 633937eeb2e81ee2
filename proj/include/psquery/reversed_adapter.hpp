#pragma once

#include <string>
#include <vector>

#include "psquery/count_engine.hpp"
#include "psquery/list_engine.hpp"

namespace psquery {

/// One prefix, multiple suffixes.
struct ReversedQuery {
  std::string prefix;
  std::vector<std::string> suffixes;
};

/// Solved as the multi-prefix problem on reverse(T) with prefixes reverse(s_i)
/// and suffix reverse(P). A prefix longer than T short-circuits to zeros.
CountAnswer count_all_reversed(const Text& text, const ReversedQuery& query);

/// Same reduction for listing. Refs are mapped back to coordinates of the
/// original text: [a, b] in reverse(T) becomes [n-1-b, n-1-a], n = |T|.
ListAnswer list_all_reversed(const Text& text, const ReversedQuery& query);

/// Maps a ref of reverse(T) onto T, where n = |T|.
inline SubstringRef unreverse(SubstringRef ref, std::int64_t n) {
  return SubstringRef{n - 1 - ref.end, n - 1 - ref.start};
}

}  // namespace psquery
