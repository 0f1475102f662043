#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ptm {

/// Finite binary string. Rendered as ASCII '0'/'1'; the empty string is "-".
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses "0101" or "-" (empty). Throws ParseError on anything else.
  static BitString parse(std::string_view text);
  static BitString zeros(std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
  void pop_back() { bits_.pop_back(); }
  void append(const BitString& other);
  BitString concat(const BitString& other) const;
  BitString prefix(std::size_t n) const;
  BitString with(bool b) const;

  /// True iff *this is a (not necessarily proper) prefix of other.
  bool is_prefix_of(const BitString& other) const;

  std::string str() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  bool operator==(const BitString&) const = default;
  /// Plain lexicographic order ("0" < "00" < "1").
  std::strong_ordering operator<=>(const BitString& other) const;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Length-lexicographic order: shorter strings first, then lexicographic.
struct ShortLex {
  bool operator()(const BitString& a, const BitString& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// All strings of length exactly n in lexicographic order.
std::vector<BitString> all_strings(std::size_t n);
/// All strings of length <= n in short-lex order (2^(n+1) - 1 strings).
std::vector<BitString> all_strings_up_to(std::size_t n);

}  // namespace ptm

template <>
struct std::hash<ptm::BitString> {
  std::size_t operator()(const ptm::BitString& s) const noexcept;
};
