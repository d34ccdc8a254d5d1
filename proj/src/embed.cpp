#include "diffset/embed.hpp"

#include <algorithm>
#include <string>

#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

Pattern::Pattern(std::vector<std::int64_t> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw InputError("a pattern needs at least one element");
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

namespace {

void check_fits(const Pattern& f, const IntSet& y, Window srange) {
  if (srange.lo + f.min() < y.lo() || srange.hi + f.max() > y.hi())
    throw InputError("shift range [" + std::to_string(srange.lo) + ", " + std::to_string(srange.hi) +
                     "] plus the pattern leaves the target window [" + std::to_string(y.lo()) + ", " +
                     std::to_string(y.hi()) + "]");
}

}  // namespace

IntSet embedding_shifts(const Pattern& f, const IntSet& y, Window srange) {
  const auto len = static_cast<std::size_t>(srange.length());
  BitVector acc(len, true);
  for (auto x : f.elems()) {
    // Bit i of the slice is membership of srange.lo + i + x.
    std::int64_t start = srange.lo + x - y.lo();
    BitVector part(len);
    if (start >= 0) {
      part = y.bits().slice(static_cast<std::size_t>(start), len);
    } else if (-start < static_cast<std::int64_t>(len)) {
      part.or_shifted(y.bits(), static_cast<std::size_t>(-start));
    }
    acc.and_with(part);
  }
  return IntSet(srange, std::move(acc));
}

std::optional<EmbedWitness> embed_witness(const Pattern& f, const IntSet& y, Window srange) {
  check_fits(f, y, srange);
  auto shifts = embedding_shifts(f, y, srange);
  if (auto t = shifts.first()) return EmbedWitness{*t, f};
  return std::nullopt;
}

IntSet shift_set_of(const Pattern& f, const IntSet& y, Window srange) {
  check_fits(f, y, srange);
  return embedding_shifts(f, y, srange);
}

DensityEstimate dense_embed_est(const Pattern& f, const IntSet& y, Window srange, std::int64_t n) {
  return upper_banach_est(shift_set_of(f, y, srange), n);
}

bool embeds_at(const Pattern& f, const IntSet& y, std::int64_t t) {
  return std::all_of(f.elems().begin(), f.elems().end(), [&](std::int64_t x) { return y.contains(t + x); });
}

EmbeddabilityReport window_embeddable(const IntSet& x, const IntSet& y, std::int64_t m, Window srange) {
  if (m < 1) throw InputError("trace length m must be >= 1");
  auto starts = x.members();
  std::vector<char> ok(starts.size(), 0);
  parallel_for(0, static_cast<std::int64_t>(starts.size()), [&](std::int64_t i) {
    std::int64_t a = starts[static_cast<std::size_t>(i)];
    std::vector<std::int64_t> trace;
    for (auto e = x.next_member(a); e && *e < a + m; e = x.next_member(*e + 1)) trace.push_back(*e);
    Pattern f(std::move(trace));
    ok[static_cast<std::size_t>(i)] = embedding_shifts(f, y, srange).empty() ? 0 : 1;
  });
  EmbeddabilityReport rep;
  rep.traces_checked = starts.size();
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (!ok[i]) {
      rep.ok = false;
      std::vector<std::int64_t> trace;
      for (auto e = x.next_member(starts[i]); e && *e < starts[i] + m; e = x.next_member(*e + 1))
        trace.push_back(*e);
      rep.failing_config = Pattern(std::move(trace));
      break;
    }
  }
  return rep;
}

std::optional<std::pair<std::int64_t, std::int64_t>> find_ap(const IntSet& a, std::int64_t k) {
  if (k < 2) throw InputError("progression length k must be >= 2");
  auto elems = a.members();
  for (auto start : elems) {
    const std::int64_t max_d = (a.hi() - start) / (k - 1);
    for (std::int64_t d = 1; d <= max_d; ++d) {
      bool all = true;
      for (std::int64_t j = 1; j < k && all; ++j) all = a.contains(start + j * d);
      if (all) return std::make_pair(start, d);
    }
  }
  return std::nullopt;
}

DensityEstimate ap_shift_density(const IntSet& y, std::int64_t d, std::int64_t k, std::int64_t n) {
  if (k < 1 || d < 1) throw InputError("progression needs k >= 1 and d >= 1");
  std::vector<std::int64_t> elems;
  for (std::int64_t j = 0; j < k; ++j) elems.push_back(j * d);
  Pattern f(std::move(elems));
  if (y.hi() - f.max() < y.lo()) throw InputError("progression longer than the window");
  return dense_embed_est(f, y, Window(y.lo(), y.hi() - f.max()), n);
}

}  // namespace diffset
