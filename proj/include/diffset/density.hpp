#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

enum class DensityKind { upper_banach, lower_banach, upper_asymptotic, lower_asymptotic, schnirelmann };

std::string to_string(DensityKind kind);

// An exact finite-window density value hits/den.
//
// Banach kinds: den == n and [at+1, at+n] is the extremal sub-window (least offset).
// Asymptotic and Schnirelmann kinds: n is the horizon, at == den is the extremal prefix
// length i, and the value is |A ∩ [1, i]| / i.
struct DensityEstimate {
  DensityKind kind = DensityKind::upper_banach;
  std::int64_t hits = 0;
  std::int64_t den = 1;
  std::int64_t n = 1;
  std::int64_t at = 0;

  Rational value() const { return Rational(hits, den); }
  bool exceeds(const Rational& eps) const;
};

// Counts |A ∩ [x+1, x+n]| for every x with the sub-window inside A's window, in order of x
// starting at A.lo - 1. Throws InputError unless 1 <= n <= window length.
std::vector<std::int64_t> window_counts(const IntSet& a, std::int64_t n);

DensityEstimate upper_banach_est(const IntSet& a, std::int64_t n);
DensityEstimate lower_banach_est(const IntSet& a, std::int64_t n);

// Finite limsup/liminf proxies: extremum of |A ∩ [1, i]| / i over i in [from, m], where
// `from` defaults to ceil(m/2). A's window must start at 1.
DensityEstimate upper_asymptotic_est(const IntSet& a, std::int64_t m,
                                     std::optional<std::int64_t> from = std::nullopt);
DensityEstimate lower_asymptotic_est(const IntSet& a, std::int64_t m,
                                     std::optional<std::int64_t> from = std::nullopt);

// min over 1 <= i <= n of |A ∩ [1, i]| / i; A's window must start at 1.
DensityEstimate schnirelmann_est(const IntSet& a, std::int64_t n);

// Least x with [x, x+L-1] ⊆ A.
std::optional<std::int64_t> thick_witness(const IntSet& a, std::int64_t length);

// Largest difference between consecutive members. Gaps to the window boundary are not
// counted, since truncation creates them. Needs at least two members.
std::int64_t syndetic_gap(const IntSet& a);

// Least length-L interval I inside A's window with I ⊆ A + [0, g-1], i.e. every point of I
// has a member of A at distance < g at or before it.
std::optional<Window> piecewise_syndetic_witness(const IntSet& a, std::int64_t g, std::int64_t length);

}  // namespace diffset
