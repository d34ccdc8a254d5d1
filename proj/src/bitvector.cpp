#include "diffset/bitvector.hpp"

#include <algorithm>

namespace diffset {

BitVector::BitVector(std::size_t size, bool value)
    : words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0), size_(size) {
  trim();
}

void BitVector::trim() {
  if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t BitVector::count_range(std::size_t begin, std::size_t end) const {
  end = std::min(end, size_);
  if (begin >= end) return 0;
  std::size_t bw = begin >> 6, ew = (end - 1) >> 6;
  std::uint64_t first_mask = ~std::uint64_t{0} << (begin & 63);
  std::uint64_t last_mask = ((end & 63) == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (end & 63)) - 1);
  if (bw == ew) return static_cast<std::size_t>(std::popcount(words_[bw] & first_mask & last_mask));
  std::size_t total = static_cast<std::size_t>(std::popcount(words_[bw] & first_mask));
  for (std::size_t w = bw + 1; w < ew; ++w) total += static_cast<std::size_t>(std::popcount(words_[w]));
  total += static_cast<std::size_t>(std::popcount(words_[ew] & last_mask));
  return total;
}

void BitVector::or_shifted(const BitVector& src, std::size_t offset) {
  if (offset >= size_) return;
  const std::size_t word_shift = offset >> 6;
  const unsigned bit_shift = offset & 63;
  const auto& s = src.words_;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t dst = i + word_shift;
    if (dst >= words_.size()) break;
    if (bit_shift == 0) {
      words_[dst] |= s[i];
    } else {
      words_[dst] |= s[i] << bit_shift;
      if (dst + 1 < words_.size()) words_[dst + 1] |= s[i] >> (64 - bit_shift);
    }
  }
  trim();
}

void BitVector::and_with(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
}

void BitVector::or_with(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  trim();
}

void BitVector::andnot_with(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i) words_[i] &= ~other.words_[i];
}

void BitVector::flip_all() {
  for (auto& w : words_) w = ~w;
  trim();
}

BitVector BitVector::slice(std::size_t offset, std::size_t len) const {
  BitVector out(len);
  if (offset >= size_) return out;
  const std::size_t word_shift = offset >> 6;
  const unsigned bit_shift = offset & 63;
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    std::size_t src = i + word_shift;
    if (src >= words_.size()) break;
    std::uint64_t w = words_[src] >> bit_shift;
    if (bit_shift != 0 && src + 1 < words_.size()) w |= words_[src + 1] << (64 - bit_shift);
    out.words_[i] = w;
  }
  out.trim();
  return out;
}

BitVector BitVector::reversed() const {
  BitVector out(size_);
  for_each_set([&](std::size_t i) { out.set(size_ - 1 - i); });
  return out;
}

std::optional<std::size_t> BitVector::find_next(std::size_t from) const {
  if (from >= size_) return std::nullopt;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word) {
      std::size_t pos = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
      return pos < size_ ? std::optional<std::size_t>(pos) : std::nullopt;
    }
    if (++w >= words_.size()) return std::nullopt;
    word = words_[w];
  }
}

}  // namespace diffset
