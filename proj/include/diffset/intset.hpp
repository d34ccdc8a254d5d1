#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diffset/bitvector.hpp"

namespace diffset {

// Closed integer interval [lo, hi], never empty.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  Window() = default;
  // Throws InputError when lo > hi.
  Window(std::int64_t lo, std::int64_t hi);

  std::int64_t length() const { return hi - lo + 1; }
  bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
  bool contains(const Window& w) const { return lo <= w.lo && w.hi <= hi; }

  friend bool operator==(const Window&, const Window&) = default;
};

// A set of integers materialized on a window, one bit per window position.
// Values are immutable once built; every operation returns a new set.
class IntSet {
 public:
  explicit IntSet(Window window);
  // Bit i encodes window.lo + i; bits.size() must equal window.length().
  IntSet(Window window, BitVector bits);

  // Members may repeat; a member outside the window is an InputError.
  static IntSet from_members(std::span<const std::int64_t> members, Window window);
  static IntSet full(Window window);
  template <class Pred>
  static IntSet from_predicate(Window window, Pred&& pred) {
    BitVector bits(static_cast<std::size_t>(window.length()));
    for (std::int64_t x = window.lo; x <= window.hi; ++x)
      if (pred(x)) bits.set(static_cast<std::size_t>(x - window.lo));
    return IntSet(window, std::move(bits));
  }

  const Window& window() const { return window_; }
  std::int64_t lo() const { return window_.lo; }
  std::int64_t hi() const { return window_.hi; }
  std::int64_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  // False for any x outside the window.
  bool contains(std::int64_t x) const {
    return window_.contains(x) && bits_.test(static_cast<std::size_t>(x - window_.lo));
  }

  std::vector<std::int64_t> members() const;
  std::optional<std::int64_t> first() const;
  std::optional<std::int64_t> last() const;
  // Least member >= x, if any.
  std::optional<std::int64_t> next_member(std::int64_t x) const;

  const BitVector& bits() const { return bits_; }
  // Recomputes the cardinality from the bits.
  std::int64_t recount() const { return static_cast<std::int64_t>(bits_.count()); }

  template <class F>
  void for_each(F&& f) const {
    bits_.for_each_set([&](std::size_t i) { f(window_.lo + static_cast<std::int64_t>(i)); });
  }

  friend bool operator==(const IntSet& a, const IntSet& b) {
    return a.window_ == b.window_ && a.bits_ == b.bits_;
  }

 private:
  Window window_;
  BitVector bits_;
  std::int64_t count_ = 0;
};

// Same members, ignoring the windows.
bool same_members(const IntSet& a, const IntSet& b);
// Every member of a is a member of b.
bool is_subset(const IntSet& a, const IntSet& b);

// A + t on window [lo + t, hi + t].
IntSet shift_set(const IntSet& a, std::int64_t t);
// Re-anchors the window at new_lo (a shift by new_lo - lo).
IntSet rebase(const IntSet& a, std::int64_t new_lo);

// A - B on [A.lo - B.hi, A.hi - B.lo]; accumulates shifted copies of the sparser side.
IntSet difference_set(const IntSet& a, const IntSet& b);
// A + B on [A.lo + B.lo, A.hi + B.hi].
IntSet sumset(const IntSet& a, const IntSet& b);
// Delta set A - A.
IntSet delta_set(const IntSet& a);

// {h*b : b in B} on the scaled window; h == 0 is an InputError.
IntSet dilate(const IntSet& b, std::int64_t h);
// {x : h*x in B}. For h != 0 the window is {x : h*x in B.window}; when that range holds no
// integer the result is the empty set on the one-point window [ceil(lo/h), ceil(lo/h)].
// For h == 0 the result lives on `zero_window` (default B.window) and is full iff 0 in B.
IntSet quotient(const IntSet& b, std::int64_t h, std::optional<Window> zero_window = std::nullopt);

// Result on the intersection of the windows; disjoint windows give the empty set on a.window().
IntSet intersect(const IntSet& a, const IntSet& b);
// Result on the hull of the windows.
IntSet unite(const IntSet& a, const IntSet& b);
// w \ A on window w.
IntSet complement_in(const IntSet& a, Window w);
// A ∩ w on window w (members of A outside w are dropped; positions of w outside A.window are empty).
IntSet restrict_to(const IntSet& a, Window w);

}  // namespace diffset
