#include "diffset/cover.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

#include "diffset/delta.hpp"
#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

namespace {

void check_unit_window(const IntSet& c, std::int64_t n_total, const char* what) {
  if (c.count() > 0 && (*c.first() < 1 || *c.last() > n_total))
    throw InputError(std::string(what) + ": members must lie in [1, " + std::to_string(n_total) + "]");
}

std::vector<std::int64_t> pairwise_overlaps(std::span<const IntSet> family) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) out.push_back(intersect(family[i], family[j]).count());
  return out;
}

}  // namespace

CsFamilyResult cs_family_inequality(std::span<const IntSet> family, std::int64_t n_total) {
  if (n_total < 1) throw InputError("N must be >= 1");
  BigInt sum = 0, pair_sum = 0;
  for (const auto& c : family) {
    check_unit_window(c, n_total, "Cauchy-Schwarz family");
    sum += c.count();
  }
  for (auto v : pairwise_overlaps(family)) pair_sum += v;
  CsFamilyResult r;
  r.lhs = sum * sum;
  r.rhs = BigInt(n_total) * (sum + 2 * pair_sum);
  r.holds = r.lhs <= r.rhs;
  return r;
}

Rational guaranteed_overlap(std::span<const IntSet> family, std::int64_t n_total) {
  const auto k = static_cast<std::int64_t>(family.size());
  if (k < 2) throw InputError("guaranteed overlap needs at least two sets");
  std::int64_t min_count = family[0].count(), sum = 0;
  for (const auto& c : family) {
    check_unit_window(c, n_total, "overlap family");
    min_count = std::min(min_count, c.count());
    sum += c.count();
  }
  Rational gbar(min_count, n_total);
  return (Rational(k * k) * gbar * gbar - Rational(sum, n_total)) / Rational(k * (k - 1));
}

Rational max_pairwise_overlap(std::span<const IntSet> family, std::int64_t n_total) {
  auto ov = pairwise_overlaps(family);
  if (ov.empty()) throw InputError("pairwise overlap needs at least two sets");
  return Rational(*std::max_element(ov.begin(), ov.end()), n_total);
}

OverlapTable::OverlapTable(const IntSet& c) : c_(&c), n_(c.hi()) {
  if (c.lo() != 1) throw InputError("cover set must live on a window [1, N]");
  cache_.assign(static_cast<std::size_t>(2 * n_ - 1), -1);
}

std::int64_t OverlapTable::operator()(std::int64_t t) const {
  if (t <= -n_ || t >= n_) return 0;
  auto& slot = cache_[static_cast<std::size_t>(t + n_ - 1)];
  if (slot < 0) {
    // Bit i of the slice is membership of (i + 1) + |t|.
    const auto len = static_cast<std::size_t>(n_ - std::llabs(t));
    BitVector lo_part = c_->bits().slice(0, len);
    BitVector hi_part = c_->bits().slice(static_cast<std::size_t>(std::llabs(t)), len);
    lo_part.and_with(hi_part);
    slot = static_cast<std::int64_t>(lo_part.count());
  }
  return slot;
}

std::vector<std::int64_t> greedy_order(std::span<const std::int64_t> xs) {
  std::vector<std::int64_t> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
    auto aa = std::llabs(a), bb = std::llabs(b);
    if (aa != bb) return aa < bb;
    return a > b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoverCertificate greedy_shift_cover(const IntSet& c, std::span<const std::int64_t> candidates,
                                    const Rational& eps, std::int64_t mandated_x) {
  OverlapTable overlap(c);
  const std::int64_t n_total = overlap.n_total();
  CoverCertificate cert;
  cert.eps = eps;
  cert.set_count = c.count();
  cert.n_total = n_total;
  const Rational gamma = cert.gamma_hat();
  if (eps < 0) throw InputError("eps must be >= 0");
  if (eps >= gamma * gamma)
    throw InfeasibleError("cover bound undefined: eps = " + to_string(eps) + " >= gamma^2 = " +
                          to_string(gamma * gamma));
  cert.candidates = greedy_order(candidates);
  if (std::find(cert.candidates.begin(), cert.candidates.end(), mandated_x) == cert.candidates.end())
    throw InputError("mandated shift " + std::to_string(mandated_x) + " is not a candidate");
  cert.k_bound = floor_i64((gamma - eps) / (gamma * gamma - eps));
  std::int64_t max_abs = 0;
  for (auto x : cert.candidates) max_abs = std::max<std::int64_t>(max_abs, std::llabs(x));
  cert.margin = Rational(max_abs, n_total);
  const Rational edge_gamma = gamma - cert.margin;
  if (edge_gamma > 0 && eps < edge_gamma * edge_gamma)
    cert.k_bound_edge = floor_i64((edge_gamma - eps) / (edge_gamma * edge_gamma - eps));

  // t ∈ D̂_eps(C) iff overlap(t) > eps N.
  const std::int64_t en = numerator_i64(eps), ed = denominator_i64(eps);
  auto in_dhat = [&](std::int64_t t) { return fraction_greater(overlap(t), n_total, en, ed); };

  const std::size_t m = cert.candidates.size();
  std::vector<char> covered(m, 0);
  cert.cover_shift.assign(m, 0);
  auto add_shift = [&](std::int64_t f) {
    cert.shifts.push_back(f);
    for (std::size_t i = 0; i < m; ++i) {
      if (!covered[i] && in_dhat(cert.candidates[i] - f)) {
        covered[i] = 1;
        cert.cover_shift[i] = f;
      }
    }
  };
  add_shift(mandated_x);
  for (std::size_t next = 0;;) {
    while (next < m && covered[next]) ++next;
    if (next == m) break;
    add_shift(cert.candidates[next]);
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!covered[i]) cert.uncovered.push_back(cert.candidates[i]);
  cert.covered = cert.uncovered.empty();
  return cert;
}

std::vector<std::string> check_cover(const IntSet& c, const CoverCertificate& cert) {
  std::vector<std::string> bad;
  auto members = c.members();
  // Straight recount, no bit kernels.
  auto overlap = [&](std::int64_t t) {
    std::int64_t k = 0;
    for (auto x : members) k += c.contains(x + t) ? 1 : 0;
    return k;
  };
  if (c.count() != cert.set_count) bad.push_back("set cardinality differs from certificate");
  if (c.hi() != cert.n_total || c.lo() != 1) bad.push_back("set window is not [1, N]");
  std::set<std::int64_t> seen;
  for (auto f : cert.shifts)
    if (!seen.insert(f).second) bad.push_back("duplicate shift " + std::to_string(f));
  for (auto f : cert.shifts)
    if (std::find(cert.candidates.begin(), cert.candidates.end(), f) == cert.candidates.end())
      bad.push_back("shift " + std::to_string(f) + " is not a candidate");
  const Rational thresh = cert.eps * cert.n_total;
  std::vector<std::int64_t> uncovered;
  for (std::size_t i = 0; i < cert.candidates.size(); ++i) {
    std::int64_t x = cert.candidates[i];
    bool any = false;
    for (auto f : cert.shifts) {
      if (Rational(overlap(x - f)) > thresh) {
        any = true;
        break;
      }
    }
    if (!any) uncovered.push_back(x);
  }
  if (uncovered != cert.uncovered) bad.push_back("uncovered candidate list does not match recount");
  if (cert.covered != uncovered.empty()) bad.push_back("covered flag does not match recount");
  // Shifts picked after the first are pairwise outside each other's D̂ translate.
  for (std::size_t j = 1; j < cert.shifts.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (Rational(overlap(cert.shifts[j] - cert.shifts[i])) > thresh)
        bad.push_back("shift " + std::to_string(cert.shifts[j]) + " was already covered by " +
                      std::to_string(cert.shifts[i]));
  if (cert.k_bound_edge && static_cast<std::int64_t>(cert.shifts.size()) > *cert.k_bound_edge)
    bad.push_back("|F| = " + std::to_string(cert.shifts.size()) + " exceeds the edge-corrected bound " +
                  std::to_string(*cert.k_bound_edge));
  return bad;
}

IntSet materialize_dhat(const IntSet& c, const Rational& eps, Window shifts) {
  OverlapTable overlap(c);
  const std::int64_t en = numerator_i64(eps), ed = denominator_i64(eps);
  return IntSet::from_predicate(shifts, [&](std::int64_t t) {
    return fraction_greater(overlap(t), overlap.n_total(), en, ed);
  });
}

DeltaCoverResult delta_cover(const IntSet& a, std::span<const std::int64_t> candidates, const Rational& eps,
                          std::int64_t n, std::int64_t mandated_x) {
  DeltaCoverResult r;
  r.alpha = upper_banach_est(a, n);
  r.omega = r.alpha.at;
  IntSet c = rebase(restrict_to(a, Window(r.omega + 1, r.omega + n)), 1);
  r.cover = greedy_shift_cover(c, candidates, eps, mandated_x);
  for (auto& v : check_cover(c, r.cover)) r.violations.push_back("cover: " + v);

  std::set<std::int64_t> used;
  for (std::size_t i = 0; i < r.cover.candidates.size(); ++i) {
    if (std::find(r.cover.uncovered.begin(), r.cover.uncovered.end(), r.cover.candidates[i]) !=
        r.cover.uncovered.end())
      continue;
    used.insert(r.cover.candidates[i] - r.cover.cover_shift[i]);
  }
  r.checked_t.assign(used.begin(), used.end());
  std::int64_t max_abs = 0;
  for (auto t : r.checked_t) max_abs = std::max<std::int64_t>(max_abs, std::llabs(t));
  if (n + max_abs > a.window().length())
    throw InputError("used shift |t| = " + std::to_string(max_abs) + " is not shift-safe at n = " +
                     std::to_string(n) + "; use a longer window or a smaller n");
  std::vector<char> ok(r.checked_t.size(), 0);
  parallel_for(0, static_cast<std::int64_t>(r.checked_t.size()), [&](std::int64_t i) {
    auto t = r.checked_t[static_cast<std::size_t>(i)];
    ok[static_cast<std::size_t>(i)] = shift_intersection_banach(a, t, n).exceeds(eps) ? 1 : 0;
  });
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) {
      r.failed_t.push_back(r.checked_t[i]);
      r.violations.push_back("used shift t = " + std::to_string(r.checked_t[i]) +
                             " lies in D_eps(C) but not in the Delta_eps estimate of A");
    }
  }
  return r;
}

CoverDensityReport cover_density_verify(const IntSet& a, std::span<const std::int64_t> shifts, CoverMode mode,
                           Window test_range, std::int64_t n, std::optional<std::int64_t> length) {
  if (shifts.empty()) throw InputError("cover density check needs a nonempty shift set");
  std::vector<std::int64_t> f(shifts.begin(), shifts.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  CoverDensityReport rep;
  rep.mode = mode;
  rep.k = static_cast<std::int64_t>(f.size());
  rep.n = n;
  const std::int64_t span = f.back() - f.front();

  if (mode == CoverMode::full_cover) {
    rep.premise_holds = true;
    for (std::int64_t y = test_range.lo; y <= test_range.hi && rep.premise_holds; ++y)
      rep.premise_holds = std::any_of(f.begin(), f.end(), [&](std::int64_t s) { return a.contains(y - s); });
    rep.slack = Rational(rep.k * span, n);
    rep.bound = Rational(1, rep.k) - rep.slack;
    if (!rep.premise_holds) {
      rep.holds = true;
      return rep;
    }
    Window region(test_range.lo - f.front(), test_range.hi - f.front());
    if (n < 1 || n > region.length()) throw InputError("cover density window length n outside the tested range");
    rep.region = region;
    rep.estimate = lower_banach_est(restrict_to(a, region), n);
    rep.holds = rep.estimate->value() >= rep.bound;
    return rep;
  }

  const std::int64_t len = length.value_or(n);
  if (n < 1 || n > len) throw InputError("thick-cover density check needs 1 <= n <= interval length");
  IntSet fset = IntSet::from_members(f, Window(f.front(), f.back()));
  IntSet covered = restrict_to(sumset(a, fset), test_range);
  rep.slack = Rational(0);
  rep.bound = Rational(1, rep.k);
  auto start = thick_witness(covered, len);
  rep.premise_holds = start.has_value();
  if (!rep.premise_holds) {
    rep.holds = true;
    return rep;
  }
  Window region(*start - f.back(), *start + len - 1 - f.front());
  rep.region = region;
  rep.estimate = upper_banach_est(restrict_to(a, region), n);
  rep.holds = rep.estimate->value() >= rep.bound;
  return rep;
}

QuotientCoverReport quotient_cover(const IntSet& a, std::int64_t h, const Rational& eps, std::int64_t n,
                                   Window x_base, std::optional<std::int64_t> density_n) {
  QuotientCoverReport rep;
  rep.h = h;
  rep.range = x_base;
  std::vector<std::int64_t> base;
  for (std::int64_t x = x_base.lo; x <= x_base.hi; ++x) base.push_back(x);
  const std::int64_t x0 = greedy_order(base).front();

  if (h == 0) {
    // Δ̂_eps(A)/0 is everything once 0 ∈ Δ̂_eps(A), i.e. once the best window beats eps.
    bool zero_in = upper_banach_est(a, n).exceeds(eps);
    rep.shifts = {x0};
    rep.quotient_set = zero_in ? IntSet::full(x_base) : IntSet(x_base);
    rep.covered = zero_in;
    if (!zero_in) rep.uncovered = base;
    return rep;
  }

  std::vector<std::int64_t> xs;
  xs.reserve(base.size());
  for (auto x : base) xs.push_back(h * x);
  rep.base = delta_cover(a, xs, eps, n, h * x0);
  for (auto& v : rep.base->violations) rep.violations.push_back(v);
  for (auto s : rep.base->cover.shifts) rep.shifts.push_back(s / h);

  auto [fmin, fmax] = std::minmax_element(rep.shifts.begin(), rep.shifts.end());
  Window qwin(x_base.lo - *fmax, x_base.hi - *fmin);
  Window trange = h > 0 ? Window(h * qwin.lo, h * qwin.hi) : Window(h * qwin.hi, h * qwin.lo);
  EpsDeltaResult delta = eps_delta_banach(a, eps, n, trange);
  rep.quotient_set = quotient(delta.members, h);
  rep.quotient_set = restrict_to(rep.quotient_set, qwin);
  for (auto y : base) {
    bool any = std::any_of(rep.shifts.begin(), rep.shifts.end(),
                           [&](std::int64_t f) { return rep.quotient_set.contains(y - f); });
    if (!any) rep.uncovered.push_back(y);
  }
  rep.covered = rep.uncovered.empty();
  if (rep.base->cover.covered && !rep.covered)
    rep.violations.push_back("greedy cover reported full coverage but the quotient cover misses points");
  if (rep.covered) {
    std::int64_t pn = density_n.value_or(std::max<std::int64_t>(1, x_base.length() / 2));
    rep.density_check = cover_density_verify(rep.quotient_set, rep.shifts, CoverMode::full_cover, x_base, pn);
    if (!rep.density_check->holds) rep.violations.push_back("lower-density bound 1/|F| failed on the quotient cover");
  }
  return rep;
}

}  // namespace diffset
