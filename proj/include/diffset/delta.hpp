#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffset/density.hpp"
#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace diffset {

// Finite epsilon-Delta set: t is a member iff the density estimate of A ∩ (A - t) is
// strictly greater than eps.
struct EpsDeltaResult {
  DensityKind kind = DensityKind::upper_banach;
  Rational eps;
  std::int64_t n = 0;
  Window trange;
  IntSet members{Window(0, 0)};
  std::vector<DensityEstimate> per_t;  // index t - trange.lo

  const DensityEstimate& estimate(std::int64_t t) const {
    return per_t.at(static_cast<std::size_t>(t - trange.lo));
  }
  Rational value(std::int64_t t) const { return estimate(t).value(); }
};

// A ∩ (A - t) on the intersection of the windows of A and A - t.
IntSet shift_intersection(const IntSet& a, std::int64_t t);

// Estimator of BD(A ∩ (A - t)) at sub-window length n. Requires n + |t| <= window length.
DensityEstimate shift_intersection_banach(const IntSet& a, std::int64_t t, std::int64_t n);

// Every t in trange must satisfy n + |t| <= window length; otherwise InputError naming t.
EpsDeltaResult eps_delta_banach(const IntSet& a, const Rational& eps, std::int64_t n, Window trange);

// Upper-asymptotic variant; A's window must start at 1 and m + |t| <= window length.
EpsDeltaResult eps_delta_upper(const IntSet& a, const Rational& eps, std::int64_t m, Window trange);

struct DeltaSyndeticReport {
  EpsDeltaResult delta0;
  std::int64_t gap = 0;
  std::int64_t bound = 0;
  bool violation = false;
};

// Computes the eps = 0 Delta set over trange and flags a syndetic gap larger than g.
DeltaSyndeticReport delta_syndetic_check(const IntSet& a, std::int64_t n, std::int64_t g, Window trange);

// Least nonzero d (by |d|, then positive first) with d in Δ(A) ∩ Δ(B), if any.
std::optional<std::int64_t> common_nonzero_difference(const IntSet& a, const IntSet& b);

}  // namespace diffset
