#include "ptm/bitstring.hpp"

#include <algorithm>

#include "ptm/errors.hpp"

namespace ptm {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

BitString BitString::parse(std::string_view text) {
  BitString s;
  if (text == "-") return s;
  if (text.empty()) throw ParseError("empty bit string (write '-' for the empty string)");
  s.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ParseError("invalid bit string: " + std::string(text));
    s.bits_.push_back(c == '1');
  }
  return s;
}

BitString BitString::zeros(std::size_t n) {
  return BitString(std::vector<std::uint8_t>(n, 0));
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::concat(const BitString& other) const {
  BitString r = *this;
  r.append(other);
  return r;
}

BitString BitString::prefix(std::size_t n) const {
  n = std::min(n, bits_.size());
  return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + n));
}

BitString BitString::with(bool b) const {
  BitString r = *this;
  r.push_back(b);
  return r;
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::string BitString::str() const {
  if (bits_.empty()) return "-";
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

std::strong_ordering BitString::operator<=>(const BitString& other) const {
  return std::lexicographical_compare_three_way(bits_.begin(), bits_.end(), other.bits_.begin(),
                                                other.bits_.end());
}

std::vector<BitString> all_strings(std::size_t n) {
  std::vector<BitString> out{BitString{}};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<BitString> next;
    next.reserve(out.size() * 2);
    for (const auto& s : out) {
      next.push_back(s.with(false));
      next.push_back(s.with(true));
    }
    out = std::move(next);
  }
  return out;
}

std::vector<BitString> all_strings_up_to(std::size_t n) {
  std::vector<BitString> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = all_strings(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace ptm

std::size_t std::hash<ptm::BitString>::operator()(const ptm::BitString& s) const noexcept {
  // FNV-1a over the bits, length mixed in.
  std::size_t h = 1469598103934665603ull ^ s.size();
  for (auto b : s.bits()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}
