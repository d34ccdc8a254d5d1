#include "diffset/density.hpp"

#include <string>

#include "diffset/errors.hpp"

namespace diffset {

std::string to_string(DensityKind kind) {
  switch (kind) {
    case DensityKind::upper_banach: return "upper_banach";
    case DensityKind::lower_banach: return "lower_banach";
    case DensityKind::upper_asymptotic: return "upper_asymptotic";
    case DensityKind::lower_asymptotic: return "lower_asymptotic";
    case DensityKind::schnirelmann: return "schnirelmann";
  }
  return "unknown";
}

bool DensityEstimate::exceeds(const Rational& eps) const { return value() > eps; }

namespace {

void check_length(const IntSet& a, std::int64_t n) {
  if (n < 1 || n > a.window().length())
    throw InputError("sub-window length " + std::to_string(n) + " outside [1, " +
                     std::to_string(a.window().length()) + "]");
}

void check_anchored(const IntSet& a) {
  if (a.lo() != 1)
    throw InputError("asymptotic and Schnirelmann estimates need a window starting at 1 (got " +
                     std::to_string(a.lo()) + "); rebase first");
}

// Prefix counts p[i] = |A ∩ [1, i]| for i in [0, m].
std::vector<std::int64_t> prefix_counts(const IntSet& a, std::int64_t m) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(m) + 1, 0);
  for (std::int64_t i = 1; i <= m; ++i)
    p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] + (a.contains(i) ? 1 : 0);
  return p;
}

template <bool Upper>
DensityEstimate prefix_extremum(const IntSet& a, std::int64_t m, std::int64_t from, DensityKind kind) {
  auto p = prefix_counts(a, m);
  DensityEstimate best{kind, p[static_cast<std::size_t>(from)], from, m, from};
  for (std::int64_t i = from + 1; i <= m; ++i) {
    std::int64_t h = p[static_cast<std::size_t>(i)];
    bool better = Upper ? fraction_greater(h, i, best.hits, best.den)
                        : fraction_greater(best.hits, best.den, h, i);
    if (better) best = {kind, h, i, m, i};
  }
  return best;
}

}  // namespace

std::vector<std::int64_t> window_counts(const IntSet& a, std::int64_t n) {
  check_length(a, n);
  const auto len = a.window().length();
  std::vector<std::int64_t> out(static_cast<std::size_t>(len - n + 1));
  const auto& bits = a.bits();
  std::int64_t c = static_cast<std::int64_t>(bits.count_range(0, static_cast<std::size_t>(n)));
  out[0] = c;
  for (std::int64_t i = 1; i + n <= len; ++i) {
    c += bits.test(static_cast<std::size_t>(i + n - 1)) ? 1 : 0;
    c -= bits.test(static_cast<std::size_t>(i - 1)) ? 1 : 0;
    out[static_cast<std::size_t>(i)] = c;
  }
  return out;
}

DensityEstimate upper_banach_est(const IntSet& a, std::int64_t n) {
  auto counts = window_counts(a, n);
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[best]) best = i;
  return {DensityKind::upper_banach, counts[best], n, n, a.lo() - 1 + static_cast<std::int64_t>(best)};
}

DensityEstimate lower_banach_est(const IntSet& a, std::int64_t n) {
  auto counts = window_counts(a, n);
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] < counts[best]) best = i;
  return {DensityKind::lower_banach, counts[best], n, n, a.lo() - 1 + static_cast<std::int64_t>(best)};
}

DensityEstimate upper_asymptotic_est(const IntSet& a, std::int64_t m, std::optional<std::int64_t> from) {
  check_anchored(a);
  check_length(a, m);
  std::int64_t f = from.value_or((m + 1) / 2);
  if (f < 1 || f > m) throw InputError("asymptotic proxy range start outside [1, m]");
  return prefix_extremum<true>(a, m, f, DensityKind::upper_asymptotic);
}

DensityEstimate lower_asymptotic_est(const IntSet& a, std::int64_t m, std::optional<std::int64_t> from) {
  check_anchored(a);
  check_length(a, m);
  std::int64_t f = from.value_or((m + 1) / 2);
  if (f < 1 || f > m) throw InputError("asymptotic proxy range start outside [1, m]");
  return prefix_extremum<false>(a, m, f, DensityKind::lower_asymptotic);
}

DensityEstimate schnirelmann_est(const IntSet& a, std::int64_t n) {
  check_anchored(a);
  check_length(a, n);
  return prefix_extremum<false>(a, n, 1, DensityKind::schnirelmann);
}

std::optional<std::int64_t> thick_witness(const IntSet& a, std::int64_t length) {
  if (length < 1) throw InputError("interval length must be >= 1");
  std::int64_t run = 0;
  for (std::int64_t x = a.lo(); x <= a.hi(); ++x) {
    run = a.contains(x) ? run + 1 : 0;
    if (run == length) return x - length + 1;
  }
  return std::nullopt;
}

std::int64_t syndetic_gap(const IntSet& a) {
  if (a.count() < 2) throw InputError("syndetic gap needs at least two members");
  std::int64_t gap = 0;
  std::optional<std::int64_t> prev;
  a.for_each([&](std::int64_t x) {
    if (prev) gap = std::max(gap, x - *prev);
    prev = x;
  });
  return gap;
}

std::optional<Window> piecewise_syndetic_witness(const IntSet& a, std::int64_t g, std::int64_t length) {
  if (g < 1 || length < 1) throw InputError("gap bound and length must be >= 1");
  std::optional<std::int64_t> last;
  std::int64_t run = 0;
  for (std::int64_t y = a.lo(); y <= a.hi(); ++y) {
    if (a.contains(y)) last = y;
    bool covered = last && y - *last < g;
    run = covered ? run + 1 : 0;
    if (run == length) return Window(y - length + 1, y);
  }
  return std::nullopt;
}

}  // namespace diffset
