#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace diffset {

// Fixed-length dense bit array. Bits past size() in the last word are kept zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  // Number of set bits in [begin, end).
  std::size_t count_range(std::size_t begin, std::size_t end) const;

  // this[offset + i] |= src[i] for every i with offset + i < size().
  void or_shifted(const BitVector& src, std::size_t offset);

  void and_with(const BitVector& other);
  void or_with(const BitVector& other);
  void andnot_with(const BitVector& other);
  void flip_all();

  // Bits [offset, offset + len) as a new vector; positions past size() read as zero.
  BitVector slice(std::size_t offset, std::size_t len) const;
  // Bit i of the result is bit size()-1-i of this.
  BitVector reversed() const;

  std::optional<std::size_t> find_first() const { return find_next(0); }
  // First set bit at position >= from.
  std::optional<std::size_t> find_next(std::size_t from) const;

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }
  void trim();

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace diffset
