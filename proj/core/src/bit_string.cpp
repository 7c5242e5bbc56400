#include "mahh/bit_string.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace mahh {

BitString::BitString(std::size_t n) : bits_(n, 0) {
  if (n == 0) {
    throw std::invalid_argument("BitString: length must be positive");
  }
}

BitString BitString::parse(std::string_view text) {
  BitString x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      x.flip(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitString: unexpected character '" +
                                  std::string(1, text[i]) + "'");
    }
  }
  return x;
}

BitString BitString::all_ones(std::size_t n) {
  BitString x(n);
  std::fill(x.bits_.begin(), x.bits_.end(), 1);
  x.ones_ = n;
  return x;
}

BitString BitString::uniform(std::size_t n, Rng& rng) {
  BitString x(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rng() >> 63) {
      x.flip(i);
    }
  }
  return x;
}

BitString BitString::with_level(std::size_t n, std::size_t level, Rng& rng) {
  if (level > n) {
    throw std::invalid_argument("BitString::with_level: level exceeds length");
  }
  // Partial Fisher-Yates: the first `level` slots of a random permutation.
  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  BitString x(n);
  for (std::size_t i = 0; i < level; ++i) {
    const std::size_t j = i + uniform_index(rng, n - i);
    std::swap(positions[i], positions[j]);
    x.flip(positions[i]);
  }
  return x;
}

void BitString::flip(std::size_t i) {
  if (bits_[i]) {
    bits_[i] = 0;
    --ones_;
  } else {
    bits_[i] = 1;
    ++ones_;
  }
}

std::string BitString::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

std::size_t hamming_distance(const BitString& a, const BitString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    distance += a[i] != b[i];
  }
  return distance;
}

}  // namespace mahh
