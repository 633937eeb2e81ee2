#include "psquery/reversed_adapter.hpp"

#include <algorithm>
#include <iterator>

namespace psquery {

namespace {

std::vector<std::string> reverse_all(const std::vector<std::string>& strings) {
  std::vector<std::string> out;
  out.reserve(strings.size());
  std::transform(strings.begin(), strings.end(), std::back_inserter(out),
                 [](const std::string& s) { return reverse_bytes(s); });
  return out;
}

}  // namespace

CountAnswer count_all_reversed(const Text& text, const ReversedQuery& query) {
  if (static_cast<std::int64_t>(query.prefix.size()) > text.size()) {
    return CountAnswer{std::vector<std::int64_t>(query.suffixes.size(), 0)};
  }
  return count_all(text.reversed(), CountQuery{reverse_all(query.suffixes), reverse_bytes(query.prefix)});
}

ListAnswer list_all_reversed(const Text& text, const ReversedQuery& query) {
  if (static_cast<std::int64_t>(query.prefix.size()) > text.size()) {
    ListAnswer empty;
    empty.lists.resize(query.suffixes.size());
    return empty;
  }

  ListAnswer answer = list_all(text.reversed(), reverse_all(query.suffixes), reverse_bytes(query.prefix));
  const std::int64_t n = text.size();
  for (auto& list : answer.lists) {
    for (auto& ref : list) ref = unreverse(ref, n);
  }
  return answer;
}

}  // namespace psquery
