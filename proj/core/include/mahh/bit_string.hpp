#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mahh/rng.hpp"

namespace mahh {

/// Fixed-length bit string with a cached one-count.
///
/// The one-count is updated on every flip, so level queries are O(1).
class BitString {
 public:
  /// All-zero string of length n (n >= 1).
  explicit BitString(std::size_t n);

  /// Parses a string of '0'/'1' characters, e.g. "111110".
  static BitString parse(std::string_view text);
  static BitString all_ones(std::size_t n);
  static BitString uniform(std::size_t n, Rng& rng);
  /// Uniform among all strings of length n with exactly `level` one-bits.
  static BitString with_level(std::size_t n, std::size_t level, Rng& rng);

  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t one_count() const noexcept { return ones_; }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  void flip(std::size_t i);

  std::string to_string() const;

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.bits_ == b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t ones_ = 0;
};

std::size_t hamming_distance(const BitString& a, const BitString& b);

}  // namespace mahh
