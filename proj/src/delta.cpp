#include "diffset/delta.hpp"

#include <cstdlib>
#include <string>

#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

namespace {

void check_shift_safe(const IntSet& a, std::int64_t n, Window trange) {
  const std::int64_t len = a.window().length();
  for (std::int64_t t : {trange.lo, trange.hi}) {
    if (n + std::llabs(t) > len)
      throw InputError("shift t=" + std::to_string(t) + " is not shift-safe: n + |t| = " +
                       std::to_string(n + std::llabs(t)) + " exceeds window length " + std::to_string(len));
  }
  if (n < 1) throw InputError("sub-window length must be >= 1");
}

IntSet upper_intersection(const IntSet& a, std::int64_t t) {
  // A ∩ (A - t) = (A ∩ (A + t)) - t and upper density is translation invariant, so use |t|: the
  // negative-t intersection would otherwise start |t| past the anchor and lose its prefix.
  const std::int64_t s = std::llabs(t);
  return restrict_to(shift_intersection(a, s), Window(1, a.hi() - s));
}

template <class Estimator>
EpsDeltaResult eps_delta(const IntSet& a, const Rational& eps, std::int64_t n, Window trange,
                         DensityKind kind, Estimator&& est) {
  if (eps < 0) throw InputError("eps must be >= 0");
  check_shift_safe(a, n, trange);
  EpsDeltaResult r;
  r.kind = kind;
  r.eps = eps;
  r.n = n;
  r.trange = trange;
  r.per_t.resize(static_cast<std::size_t>(trange.length()));
  parallel_for(trange.lo, trange.hi + 1, [&](std::int64_t t) {
    r.per_t[static_cast<std::size_t>(t - trange.lo)] = est(t);
  });
  const std::int64_t en = numerator_i64(eps), ed = denominator_i64(eps);
  BitVector bits(static_cast<std::size_t>(trange.length()));
  for (std::size_t i = 0; i < r.per_t.size(); ++i)
    if (fraction_greater(r.per_t[i].hits, r.per_t[i].den, en, ed)) bits.set(i);
  r.members = IntSet(trange, std::move(bits));
  return r;
}

}  // namespace

IntSet shift_intersection(const IntSet& a, std::int64_t t) { return intersect(a, shift_set(a, -t)); }

DensityEstimate shift_intersection_banach(const IntSet& a, std::int64_t t, std::int64_t n) {
  check_shift_safe(a, n, Window(t, t));
  return upper_banach_est(shift_intersection(a, t), n);
}

EpsDeltaResult eps_delta_banach(const IntSet& a, const Rational& eps, std::int64_t n, Window trange) {
  return eps_delta(a, eps, n, trange, DensityKind::upper_banach,
                   [&](std::int64_t t) { return upper_banach_est(shift_intersection(a, t), n); });
}

EpsDeltaResult eps_delta_upper(const IntSet& a, const Rational& eps, std::int64_t m, Window trange) {
  if (a.lo() != 1) throw InputError("upper-density Delta set needs a window starting at 1");
  return eps_delta(a, eps, m, trange, DensityKind::upper_asymptotic,
                   [&](std::int64_t t) { return upper_asymptotic_est(upper_intersection(a, t), m); });
}

DeltaSyndeticReport delta_syndetic_check(const IntSet& a, std::int64_t n, std::int64_t g, Window trange) {
  if (upper_banach_est(a, n).hits == 0) throw InputError("Delta syndeticity check needs a set of positive density");
  DeltaSyndeticReport rep;
  rep.delta0 = eps_delta_banach(a, Rational(0), n, trange);
  rep.gap = syndetic_gap(rep.delta0.members);
  rep.bound = g;
  rep.violation = rep.gap > g;
  return rep;
}

std::optional<std::int64_t> common_nonzero_difference(const IntSet& a, const IntSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  IntSet da = delta_set(a), db = delta_set(b);
  const std::int64_t reach = std::min(da.hi(), db.hi());
  for (std::int64_t d = 1; d <= reach; ++d) {
    if (da.contains(d) && db.contains(d)) return d;
    if (da.contains(-d) && db.contains(-d)) return -d;
  }
  return std::nullopt;
}

}  // namespace diffset
