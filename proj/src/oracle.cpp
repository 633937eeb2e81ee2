#include "psquery/oracle.hpp"

#include <stdexcept>

namespace psquery::oracle {

SubstringSet unique_substrings(std::string_view text, std::size_t bound) {
  if (text.size() > bound) {
    throw std::invalid_argument("oracle: text of length " + std::to_string(text.size()) +
                                " exceeds bound " + std::to_string(bound));
  }
  SubstringSet out;
  for (std::size_t s = 0; s < text.size(); ++s) {
    for (std::size_t len = 1; s + len <= text.size(); ++len) out.emplace(text.substr(s, len));
  }
  return out;
}

SubstringSet answer(std::string_view text, std::string_view prefix, std::string_view suffix, std::size_t bound) {
  SubstringSet out;
  for (const std::string& x : unique_substrings(text, bound)) {
    if (x.starts_with(prefix) && x.ends_with(suffix)) out.insert(x);
  }
  return out;
}

}  // namespace psquery::oracle
