#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>

namespace psquery::oracle {

/// Largest text the brute-force routines accept.
inline constexpr std::size_t kDefaultBound = 512;

using SubstringSet = std::set<std::string>;

/// Every non-empty substring of `text`, deduplicated. Cubic; throws
/// std::invalid_argument when |text| exceeds `bound`.
SubstringSet unique_substrings(std::string_view text, std::size_t bound = kDefaultBound);

/// Unique substrings of `text` starting with `prefix` and ending with `suffix`.
SubstringSet answer(std::string_view text, std::string_view prefix, std::string_view suffix,
                    std::size_t bound = kDefaultBound);

}  // namespace psquery::oracle
