#include "diffset/intset.hpp"

#include <algorithm>
#include <string>

#include "diffset/errors.hpp"

namespace diffset {

namespace {

std::size_t idx(std::int64_t v) { return static_cast<std::size_t>(v); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

Window::Window(std::int64_t lo_, std::int64_t hi_) : lo(lo_), hi(hi_) {
  if (lo > hi)
    throw InputError("empty window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

IntSet::IntSet(Window window) : window_(window), bits_(idx(window.length())) {}

IntSet::IntSet(Window window, BitVector bits) : window_(window), bits_(std::move(bits)) {
  if (bits_.size() != idx(window_.length())) throw InputError("bit vector length does not match window");
  bits_.trim();
  count_ = static_cast<std::int64_t>(bits_.count());
}

IntSet IntSet::from_members(std::span<const std::int64_t> members, Window window) {
  BitVector bits(idx(window.length()));
  for (auto m : members) {
    if (!window.contains(m))
      throw InputError("member " + std::to_string(m) + " outside window [" + std::to_string(window.lo) +
                       ", " + std::to_string(window.hi) + "]");
    bits.set(idx(m - window.lo));
  }
  return IntSet(window, std::move(bits));
}

IntSet IntSet::full(Window window) { return IntSet(window, BitVector(idx(window.length()), true)); }

std::vector<std::int64_t> IntSet::members() const {
  std::vector<std::int64_t> out;
  out.reserve(idx(count_));
  for_each([&](std::int64_t x) { out.push_back(x); });
  return out;
}

std::optional<std::int64_t> IntSet::first() const {
  auto p = bits_.find_first();
  if (!p) return std::nullopt;
  return window_.lo + static_cast<std::int64_t>(*p);
}

std::optional<std::int64_t> IntSet::last() const {
  for (std::size_t w = bits_.words().size(); w-- > 0;) {
    if (auto word = bits_.words()[w]) return window_.lo + static_cast<std::int64_t>(w * 64 + 63 - std::countl_zero(word));
  }
  return std::nullopt;
}

std::optional<std::int64_t> IntSet::next_member(std::int64_t x) const {
  if (x > window_.hi) return std::nullopt;
  x = std::max(x, window_.lo);
  auto p = bits_.find_next(idx(x - window_.lo));
  if (!p) return std::nullopt;
  return window_.lo + static_cast<std::int64_t>(*p);
}

bool same_members(const IntSet& a, const IntSet& b) {
  if (a.count() != b.count()) return false;
  bool same = true;
  a.for_each([&](std::int64_t x) { same = same && b.contains(x); });
  return same;
}

bool is_subset(const IntSet& a, const IntSet& b) {
  bool ok = true;
  a.for_each([&](std::int64_t x) { ok = ok && b.contains(x); });
  return ok;
}

IntSet shift_set(const IntSet& a, std::int64_t t) {
  return IntSet(Window(a.lo() + t, a.hi() + t), a.bits());
}

IntSet rebase(const IntSet& a, std::int64_t new_lo) { return shift_set(a, new_lo - a.lo()); }

IntSet difference_set(const IntSet& a, const IntSet& b) {
  Window w(a.lo() - b.hi(), a.hi() - b.lo());
  BitVector out(idx(w.length()));
  // Position of a - b is (a - A.lo) + (B.hi - b).
  if (b.count() <= a.count()) {
    b.for_each([&](std::int64_t y) { out.or_shifted(a.bits(), idx(b.hi() - y)); });
  } else {
    BitVector rb = b.bits().reversed();
    a.for_each([&](std::int64_t x) { out.or_shifted(rb, idx(x - a.lo())); });
  }
  return IntSet(w, std::move(out));
}

IntSet sumset(const IntSet& a, const IntSet& b) {
  Window w(a.lo() + b.lo(), a.hi() + b.hi());
  BitVector out(idx(w.length()));
  if (b.count() <= a.count()) {
    b.for_each([&](std::int64_t y) { out.or_shifted(a.bits(), idx(y - b.lo())); });
  } else {
    a.for_each([&](std::int64_t x) { out.or_shifted(b.bits(), idx(x - a.lo())); });
  }
  return IntSet(w, std::move(out));
}

IntSet delta_set(const IntSet& a) { return difference_set(a, a); }

IntSet dilate(const IntSet& b, std::int64_t h) {
  if (h == 0) throw InputError("dilation factor must be nonzero");
  Window w = h > 0 ? Window(h * b.lo(), h * b.hi()) : Window(h * b.hi(), h * b.lo());
  BitVector out(idx(w.length()));
  b.for_each([&](std::int64_t x) { out.set(idx(h * x - w.lo)); });
  return IntSet(w, std::move(out));
}

IntSet quotient(const IntSet& b, std::int64_t h, std::optional<Window> zero_window) {
  if (h == 0) {
    Window w = zero_window.value_or(b.window());
    return b.contains(0) ? IntSet::full(w) : IntSet(w);
  }
  std::int64_t lo = h > 0 ? ceil_div(b.lo(), h) : ceil_div(b.hi(), h);
  std::int64_t hi = h > 0 ? floor_div(b.hi(), h) : floor_div(b.lo(), h);
  if (lo > hi) return IntSet(Window(lo, lo));
  Window w(lo, hi);
  return IntSet::from_predicate(w, [&](std::int64_t x) { return b.contains(h * x); });
}

IntSet intersect(const IntSet& a, const IntSet& b) {
  std::int64_t lo = std::max(a.lo(), b.lo()), hi = std::min(a.hi(), b.hi());
  if (lo > hi) return IntSet(a.window());
  Window w(lo, hi);
  BitVector out = a.bits().slice(idx(lo - a.lo()), idx(w.length()));
  out.and_with(b.bits().slice(idx(lo - b.lo()), idx(w.length())));
  return IntSet(w, std::move(out));
}

IntSet unite(const IntSet& a, const IntSet& b) {
  Window w(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
  BitVector out(idx(w.length()));
  out.or_shifted(a.bits(), idx(a.lo() - w.lo));
  out.or_shifted(b.bits(), idx(b.lo() - w.lo));
  return IntSet(w, std::move(out));
}

IntSet restrict_to(const IntSet& a, Window w) {
  BitVector out(idx(w.length()));
  std::int64_t lo = std::max(a.lo(), w.lo), hi = std::min(a.hi(), w.hi);
  if (lo <= hi) {
    BitVector part = a.bits().slice(idx(lo - a.lo()), idx(hi - lo + 1));
    out.or_shifted(part, idx(lo - w.lo));
  }
  return IntSet(w, std::move(out));
}

IntSet complement_in(const IntSet& a, Window w) {
  BitVector out = restrict_to(a, w).bits();
  out.flip_all();
  return IntSet(w, std::move(out));
}

}  // namespace diffset
