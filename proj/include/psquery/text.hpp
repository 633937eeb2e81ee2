#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace psquery {

/// A symbol of T$: a raw byte value in [0, 255], or kTerminal.
using Symbol = std::int32_t;

/// Out-of-band end marker. No byte compares equal to it.
inline constexpr Symbol kTerminal = 256;

/// Inclusive index range [start, end] naming one substring of a text.
struct SubstringRef {
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - start + 1; }
  friend auto operator<=>(const SubstringRef&, const SubstringRef&) = default;
};

/// Input bytes plus a virtual terminal at index size().
///
/// Every index used by the tree and the occurrence arrays lives in
/// [0, effective_len() - 1]; the last one is always the terminal.
class Text {
 public:
  Text() = default;
  explicit Text(std::string bytes) : bytes_(std::move(bytes)) {}

  std::string_view bytes() const { return bytes_; }
  std::int64_t size() const { return static_cast<std::int64_t>(bytes_.size()); }
  std::int64_t effective_len() const { return size() + 1; }

  Symbol symbol(std::int64_t i) const {
    return i < size() ? static_cast<Symbol>(static_cast<unsigned char>(bytes_[i])) : kTerminal;
  }

  /// Copies T_start..T_end. The terminal, if covered, is rendered as '$'.
  std::string materialize(SubstringRef ref) const;

  Text reversed() const;

 private:
  std::string bytes_;
};

inline Symbol symbol_of(char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); }

std::string reverse_bytes(std::string_view s);

}  // namespace psquery
