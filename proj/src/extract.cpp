#include "diffset/extract.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "diffset/delta.hpp"
#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

namespace {

// Bits [pos, pos + len) of v packed into the low bits; len <= 64, out-of-range bits are zero.
std::uint64_t bits_at(const BitVector& v, std::size_t pos, std::size_t len) {
  const auto& w = v.words();
  const std::size_t wi = pos >> 6, sh = pos & 63;
  std::uint64_t lo = wi < w.size() ? w[wi] >> sh : 0;
  if (sh != 0 && wi + 1 < w.size()) lo |= w[wi + 1] << (64 - sh);
  return len >= 64 ? lo : lo & ((std::uint64_t{1} << len) - 1);
}

// popcount(big[off, off + small.size()) & small)
std::int64_t and_count_at(const BitVector& big, std::size_t off, const BitVector& small) {
  std::int64_t k = 0;
  const auto& sw = small.words();
  for (std::size_t i = 0; i < sw.size(); ++i) k += std::popcount(bits_at(big, off + 64 * i, 64) & sw[i]);
  return k;
}

void require_unit_window(const IntSet& c, const char* what) {
  if (c.lo() != 1) throw InputError(std::string(what) + " must live on a window [1, N]");
}

std::vector<std::int64_t> prefix_counts(const IntSet& c) {
  std::vector<std::int64_t> pc(static_cast<std::size_t>(c.hi()) + 1, 0);
  for (std::int64_t i = 1; i <= c.hi(); ++i) pc[static_cast<std::size_t>(i)] = pc[static_cast<std::size_t>(i - 1)] + (c.contains(i) ? 1 : 0);
  return pc;
}

std::vector<std::int64_t> key_elements(std::uint64_t key) {
  std::vector<std::int64_t> out;
  for (int i = 0; i < 64; ++i)
    if ((key >> i) & 1u) out.push_back(i + 1);
  return out;
}

void check_gamma(const Rational& gamma) {
  if (gamma <= 0 || gamma > 1) throw InputError("gamma must satisfy 0 < gamma <= 1, got " + to_string(gamma));
}

BlockWalk walk_on(const IntSet& c, const IntSet& region, const std::vector<std::int64_t>& pc, std::int64_t n,
                  const Rational& gamma) {
  BlockWalk bw;
  const std::int64_t big_n = c.hi();
  bw.gamma_n = gamma_floor(gamma, n);
  bw.bound = (Rational(c.count(), big_n) - bw.gamma_n - Rational(n, big_n)) / (1 - bw.gamma_n);
  const std::int64_t gn = numerator_i64(gamma), gd = denominator_i64(gamma);
  for (std::int64_t theta = 0; theta <= big_n - n; ++bw.steps) {
    if (region.contains(theta)) {
      ++bw.visits;
      ++theta;
      continue;
    }
    std::int64_t i = 1;
    while (i <= n) {
      std::int64_t cnt = pc[static_cast<std::size_t>(theta + i)] - pc[static_cast<std::size_t>(theta)];
      if (!fraction_greater_equal(cnt, i, gn, gd)) break;
      ++i;
    }
    if (i > n) throw std::logic_error("block walk: position outside the region has no failing prefix");
    theta += i;
  }
  bw.holds = Rational(bw.visits) > bw.bound * big_n;
  return bw;
}

// ((A - B) ∩ r) on window r.
IntSet difference_on(const IntSet& a, const IntSet& b, Window r) {
  const auto len = static_cast<std::size_t>(r.length());
  BitVector acc(len);
  b.for_each([&](std::int64_t y) {
    std::int64_t v0 = r.lo + y;  // A-value read at position 0
    if (v0 > a.hi() || v0 + r.length() - 1 < a.lo()) return;
    if (v0 >= a.lo()) {
      acc.or_with(a.bits().slice(static_cast<std::size_t>(v0 - a.lo()), len));
    } else {
      auto s = static_cast<std::size_t>(a.lo() - v0);
      acc.or_shifted(a.bits().slice(0, len - s), s);
    }
  });
  return IntSet(r, std::move(acc));
}

std::vector<std::int64_t> interval_members(Window x) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(x.length()));
  for (std::int64_t v = x.lo; v <= x.hi; ++v) out.push_back(v);
  return out;
}

std::vector<std::int64_t> used_shifts(const CoverCertificate& cert) {
  std::set<std::int64_t> used;
  std::set<std::int64_t> unc(cert.uncovered.begin(), cert.uncovered.end());
  for (std::size_t i = 0; i < cert.candidates.size(); ++i)
    if (!unc.count(cert.candidates[i])) used.insert(cert.candidates[i] - cert.cover_shift[i]);
  return {used.begin(), used.end()};
}

}  // namespace

PigeonholeWitness pigeonhole_shift(const IntSet& c, const IntSet& d) {
  require_unit_window(c, "C");
  require_unit_window(d, "D");
  PigeonholeWitness w;
  w.n_total = c.hi();
  w.nu = d.hi();
  std::vector<std::int64_t> hits(static_cast<std::size_t>(w.n_total));
  parallel_for(
      1, w.n_total + 1,
      [&](std::int64_t x) {
        // d in (C - x) iff C holds d + x, at bit index d + x - 1.
        hits[static_cast<std::size_t>(x - 1)] = and_count_at(c.bits(), static_cast<std::size_t>(x), d.bits());
      },
      256);
  auto best = std::max_element(hits.begin(), hits.end());
  w.xbar = 1 + (best - hits.begin());
  w.hits = *best;
  w.ratio = Rational(w.hits, w.nu);
  w.bound = Rational(c.count(), w.n_total) * Rational(d.count(), w.nu) - Rational(d.count(), w.n_total);
  if (w.ratio < w.bound) throw std::logic_error("pigeonhole shift below its guaranteed bound");
  return w;
}

Rational gamma_floor(const Rational& gamma, std::int64_t n) {
  check_gamma(gamma);
  if (n < 1) throw InputError("n must be >= 1");
  const __int128 gn = numerator_i64(gamma), gd = denominator_i64(gamma);
  Rational best(0);
  for (std::int64_t i = 1; i <= n; ++i) {
    __int128 j = (gn * i + gd - 1) / gd - 1;  // ceil(γ i) - 1
    j = std::clamp<__int128>(j, 0, i);
    Rational cand(static_cast<std::int64_t>(j), i);
    if (cand > best) best = cand;
  }
  return best;
}

IntSet gamma_region(const IntSet& c, std::int64_t n, const Rational& gamma) {
  require_unit_window(c, "C");
  const std::int64_t big_n = c.hi();
  if (n < 1 || n >= big_n) throw InputError("gamma region needs 1 <= n < N");
  Window w(0, big_n - n);
  if (gamma > 1) return IntSet(w);
  if (gamma <= 0) return IntSet::full(w);
  auto pc = prefix_counts(c);
  const std::int64_t gn = numerator_i64(gamma), gd = denominator_i64(gamma);
  std::vector<char> in(static_cast<std::size_t>(w.length()), 0);
  parallel_for(
      0, w.length(),
      [&](std::int64_t theta) {
        for (std::int64_t i = 1; i <= n; ++i) {
          std::int64_t cnt = pc[static_cast<std::size_t>(theta + i)] - pc[static_cast<std::size_t>(theta)];
          if (!fraction_greater_equal(cnt, i, gn, gd)) return;
        }
        in[static_cast<std::size_t>(theta)] = 1;
      },
      1024);
  return IntSet::from_predicate(w, [&](std::int64_t t) { return in[static_cast<std::size_t>(t)] != 0; });
}

BlockWalk block_walk_bound(const IntSet& c, std::int64_t n, const Rational& gamma) {
  check_gamma(gamma);
  IntSet region = gamma_region(c, n, gamma);
  return walk_on(c, region, prefix_counts(c), n, gamma);
}

ExtractionCertificate trace_extract(const IntSet& c, std::int64_t n, const Rational& gamma, std::int64_t n_cap) {
  require_unit_window(c, "C");
  check_gamma(gamma);
  if (n_cap > 63) throw InputError("trace length cap must be <= 63");
  if (n < 1 || n > n_cap) throw InputError("trace length n must lie in [1, " + std::to_string(n_cap) + "]");
  const std::int64_t big_n = c.hi();
  if (n >= big_n) throw InputError("trace length n must be smaller than N");

  ExtractionCertificate cert;
  cert.n_total = big_n;
  cert.n = n;
  cert.gamma = gamma;
  IntSet region = gamma_region(c, n, gamma);
  cert.gamma_size = region.count();
  if (region.empty())
    throw InfeasibleError("no offset has every prefix of density >= " + to_string(gamma) +
                          "; lower gamma or n");
  cert.walk = walk_on(c, region, prefix_counts(c), n, gamma);
  cert.gamma_n = cert.walk.gamma_n;

  std::vector<std::uint64_t> keys(static_cast<std::size_t>(big_n - n + 1));
  parallel_for(
      0, big_n - n + 1,
      [&](std::int64_t theta) {
        keys[static_cast<std::size_t>(theta)] =
            bits_at(c.bits(), static_cast<std::size_t>(theta), static_cast<std::size_t>(n));
      },
      4096);
  std::unordered_map<std::uint64_t, std::int64_t> freq;
  region.for_each([&](std::int64_t theta) { ++freq[keys[static_cast<std::size_t>(theta)]]; });
  cert.class_count = static_cast<std::int64_t>(freq.size());

  std::uint64_t best_key = 0;
  std::int64_t best_count = -1;
  std::vector<std::int64_t> best_elems;
  for (const auto& [key, cnt] : freq) {
    if (cnt < best_count) continue;
    auto elems = key_elements(key);
    if (cnt > best_count || elems < best_elems) {
      best_key = key;
      best_count = cnt;
      best_elems = std::move(elems);
    }
  }
  cert.e_prefix = Pattern(best_elems);
  cert.theta = IntSet::from_predicate(region.window(), [&](std::int64_t theta) {
    return region.contains(theta) && keys[static_cast<std::size_t>(theta)] == best_key;
  });
  cert.theta_bound = Rational(cert.gamma_size) / Rational(BigInt(1) << n);
  return cert;
}

Rational prefix_schnirelmann(const Pattern& e, std::int64_t n) {
  Rational best(1);
  std::size_t k = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    while (k < e.size() && e.elems()[k] <= i) ++k;
    best = std::min(best, Rational(static_cast<std::int64_t>(k), i));
  }
  return best;
}

std::vector<std::string> verify_extraction(const IntSet& c, const ExtractionCertificate& cert) {
  std::vector<std::string> bad;
  const std::int64_t big_n = cert.n_total, n = cert.n;
  if (c.lo() != 1 || c.hi() != big_n) {
    bad.push_back("set window is not [1, N]");
    return bad;
  }
  for (auto e : cert.e_prefix.elems())
    if (e < 1 || e > n) bad.push_back("pattern element " + std::to_string(e) + " outside [1, n]");

  // Prefix density of E, straight from the element list.
  for (std::int64_t i = 1; i <= n; ++i) {
    std::int64_t k = 0;
    for (auto e : cert.e_prefix.elems()) k += e <= i ? 1 : 0;
    if (Rational(k) < cert.gamma * i) bad.push_back("prefix density below gamma at i = " + std::to_string(i));
  }

  Rational gn(0);
  for (std::int64_t i = 1; i <= n; ++i)
    for (std::int64_t j = 0; j <= i; ++j)
      if (Rational(j, i) < cert.gamma && Rational(j, i) > gn) gn = Rational(j, i);
  if (gn != cert.gamma_n) bad.push_back("gamma_n differs from the grid maximum");

  auto trace_matches = [&](std::int64_t theta) {
    for (std::int64_t i = 1; i <= n; ++i) {
      bool in_e = std::binary_search(cert.e_prefix.elems().begin(), cert.e_prefix.elems().end(), i);
      if (c.contains(theta + i) != in_e) return false;
    }
    return true;
  };
  auto in_region = [&](std::int64_t theta) {
    std::int64_t k = 0;
    for (std::int64_t i = 1; i <= n; ++i) {
      k += c.contains(theta + i) ? 1 : 0;
      if (Rational(k) < cert.gamma * i) return false;
    }
    return true;
  };

  std::int64_t region_size = 0;
  for (std::int64_t theta = 0; theta <= big_n - n; ++theta) region_size += in_region(theta) ? 1 : 0;
  if (region_size != cert.gamma_size) bad.push_back("region size differs from recount");

  if (cert.theta.window() != Window(0, big_n - n)) bad.push_back("offset set has the wrong window");
  std::int64_t theta_count = 0;
  bool theta_ok = true;
  cert.theta.for_each([&](std::int64_t theta) {
    ++theta_count;
    if (theta_ok && !trace_matches(theta)) {
      theta_ok = false;
      bad.push_back("trace at offset " + std::to_string(theta) + " differs from the pattern");
    }
  });
  if (Rational(theta_count) < cert.theta_bound) bad.push_back("offset class smaller than |region| / 2^n");
  if (cert.theta_bound != Rational(cert.gamma_size) / Rational(BigInt(1) << n))
    bad.push_back("offset class bound miscomputed");

  // Walk again with membership tests only.
  std::int64_t visits = 0;
  for (std::int64_t theta = 0; theta <= big_n - n;) {
    if (in_region(theta)) {
      ++visits;
      ++theta;
      continue;
    }
    std::int64_t k = 0, i = 1;
    for (; i <= n; ++i) {
      k += c.contains(theta + i) ? 1 : 0;
      if (Rational(k) < cert.gamma * i) break;
    }
    theta += i;
  }
  Rational bound = (Rational(c.count(), big_n) - gn - Rational(n, big_n)) / (1 - gn);
  if (visits != cert.walk.visits) bad.push_back("walk visit count differs from recount");
  if (bound != cert.walk.bound) bad.push_back("walk bound miscomputed");
  if (!(Rational(visits) > bound * big_n)) bad.push_back("walk visits do not exceed bound * N");
  if (visits > region_size) bad.push_back("walk visits exceed the region size");
  return bad;
}

DenseExtractResult dense_extract(const IntSet& a, std::int64_t n, const Rational& slack, std::optional<std::int64_t> n_window,
                          std::int64_t n_cap) {
  if (slack < 0) throw InputError("slack must be >= 0");
  const std::int64_t nw = n_window.value_or(a.window().length());
  DenseExtractResult r;
  r.slack = slack;
  r.alpha = upper_banach_est(a, nw);
  r.omega = r.alpha.at;
  if (r.alpha.value() <= slack)
    throw InfeasibleError("best window density " + to_string(r.alpha.value()) + " does not exceed slack " +
                          to_string(slack));
  IntSet c = rebase(restrict_to(a, Window(r.omega + 1, r.omega + nw)), 1);
  r.cert = trace_extract(c, n, r.alpha.value() - slack, n_cap);
  for (auto& v : verify_extraction(c, r.cert)) r.violations.push_back("extraction: " + v);
  r.sigma_hat = prefix_schnirelmann(r.cert.e_prefix, n);

  const auto& e = r.cert.e_prefix.elems();
  const std::int64_t span_len = nw - n + 1;
  r.dense_checks.resize(e.size());
  for (std::size_t j = 1; j <= e.size(); ++j) {
    Pattern f(std::vector<std::int64_t>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(j)));
    Window srange(a.lo() - f.min(), a.hi() - f.max());
    IntSet ss = shift_set_of(f, a, srange);
    DenseCheck& dc = r.dense_checks[j - 1];
    dc.prefix_len = j;
    dc.estimate = upper_banach_est(ss, span_len);
    r.cert.theta.for_each([&](std::int64_t theta) { dc.contained += ss.contains(r.omega + theta) ? 1 : 0; });
    dc.holds = dc.contained == r.cert.theta.count() && dc.estimate.hits >= r.cert.theta.count();
    if (!dc.holds)
      r.violations.push_back("prefix of length " + std::to_string(j) + " does not embed densely at the certified offsets");
  }
  return r;
}

PipelineResult pair_pipeline(const IntSet& a, const IntSet& b, const PipelineParams& p) {
  PipelineResult r;
  r.params = p;
  const std::int64_t big_n = p.n_total, nu = p.nu;
  if (big_n < 1 || nu < 1) throw InputError("N and nu must be >= 1");
  if (Rational(nu) > p.max_nu_ratio * big_n)
    throw InputError("nu = " + std::to_string(nu) + " exceeds " + to_string(p.max_nu_ratio) + " of N");
  if (p.slack < 0) throw InputError("slack must be >= 0");
  if (a.window().length() < big_n) throw InputError("A's window is shorter than N");
  if (b.window().length() < nu) throw InputError("B's window is shorter than nu");

  r.alpha = upper_banach_est(a, big_n);
  r.omega = r.alpha.at;
  r.beta = upper_banach_est(b, nu);
  r.xi = r.beta.at;
  IntSet c = rebase(restrict_to(a, Window(r.omega + 1, r.omega + big_n)), 1);
  IntSet d = rebase(restrict_to(b, Window(r.xi + 1, r.xi + nu)), 1);
  r.pigeon = pigeonhole_shift(c, d);
  const std::int64_t zeta = r.pigeon.xbar;
  r.w = intersect(restrict_to(shift_set(c, -zeta), Window(1, nu)), d);
  r.w_ratio = Rational(r.w.count(), nu);
  const Rational ab = r.alpha.value() * r.beta.value();
  r.w_bound = ab - Rational(nu, big_n);
  if (r.w.count() != r.pigeon.hits) r.violations.push_back("material size differs from the pigeonhole count");
  if (r.w_ratio < r.w_bound) r.violations.push_back("material density below alpha*beta - nu/N");

  r.gamma = ab - p.slack - Rational(nu, big_n);
  if (r.gamma <= 0)
    throw InfeasibleError("extraction threshold alpha*beta - slack - nu/N = " + to_string(r.gamma) + " is not positive");
  r.cert = trace_extract(r.w, p.n, r.gamma, p.n_cap);
  for (auto& v : verify_extraction(r.w, r.cert)) r.violations.push_back("extraction: " + v);
  r.sigma_hat = prefix_schnirelmann(r.cert.e_prefix, p.n);

  r.t_j = r.omega + zeta - r.xi;
  r.j = Window(r.xi, r.xi + nu - 1);
  r.eps_achieved = Rational(r.cert.theta.count(), nu);

  IntSet inter = intersect(shift_set(a, -r.t_j), b);
  const auto& e = r.cert.e_prefix.elems();
  IntSet common = IntSet::from_predicate(r.j, [&](std::int64_t y) {
    return std::all_of(e.begin(), e.end(), [&](std::int64_t x) { return inter.contains(y + x); });
  });
  r.part2_count = common.count();
  bool contained = true;
  r.cert.theta.for_each([&](std::int64_t theta) {
    if (!common.contains(r.xi + theta)) contained = false;
  });
  if (!contained) r.violations.push_back("certified offsets are not contained in the common shifted intersection");
  if (r.part2_count < r.cert.theta.count()) r.violations.push_back("common intersection smaller than the offset class");

  bool embeds_a = true, embeds_b = true;
  r.cert.theta.for_each([&](std::int64_t theta) {
    embeds_a = embeds_a && embeds_at(r.cert.e_prefix, a, r.omega + zeta + theta);
    embeds_b = embeds_b && embeds_at(r.cert.e_prefix, b, r.xi + theta);
  });
  if (!embeds_a) r.violations.push_back("pattern does not embed into A at a certified offset");
  if (!embeds_b) r.violations.push_back("pattern does not embed into B at a certified offset");
  return r;
}

RuzsaChainResult ruzsa_chain(const std::vector<IntSet>& sets, const PipelineParams& p, const Rational& eps,
                             std::size_t sample) {
  if (sets.empty()) throw InputError("chain needs at least one set");
  if (eps < 0) throw InputError("eps must be >= 0");
  RuzsaChainResult r;
  r.eps = eps;
  const std::int64_t nu = p.nu;
  try {
    r.first = dense_extract(sets[0], p.n, p.slack, nu, p.n_cap);
  } catch (const InfeasibleError& ex) {
    throw InfeasibleError("stage 1: " + std::string(ex.what()));
  }
  for (auto& v : r.first->violations) r.violations.push_back("stage 1: " + v);
  r.alphas.push_back(r.first->alpha.value());
  r.offsets.push_back(r.first->omega);
  r.w = rebase(restrict_to(sets[0], Window(r.first->omega + 1, r.first->omega + nu)), 1);

  for (std::size_t k = 1; k < sets.size(); ++k) {
    PipelineResult st;
    try {
      st = pair_pipeline(sets[k], r.w, p);
    } catch (const InfeasibleError& ex) {
      throw InfeasibleError("stage " + std::to_string(k + 1) + ": " + ex.what());
    }
    for (auto& v : st.violations) r.violations.push_back("stage " + std::to_string(k + 1) + ": " + v);
    for (auto& off : r.offsets) off += st.xi;
    r.offsets.push_back(st.omega + st.pigeon.xbar);
    r.alphas.push_back(st.alpha.value());
    r.w = st.w;
    r.stages.push_back(std::move(st));
  }

  const auto kk = static_cast<std::int64_t>(sets.size());
  r.product = 1;
  for (const auto& x : r.alphas) r.product *= x;
  r.target = r.product - Rational((kk - 1) * nu, p.n_total) - p.slack;
  r.sigma_hat = prefix_schnirelmann(r.cert().e_prefix, p.n);
  if (r.sigma_hat < r.target) r.violations.push_back("final prefix density below the product target");

  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool ok = true;
    r.w.for_each([&](std::int64_t x) { ok = ok && sets[i].contains(x + r.offsets[i]); });
    if (!ok) r.violations.push_back("material does not sit inside set " + std::to_string(i + 1) + " at its offset");
  }

  OverlapTable overlap(r.w);
  const std::int64_t en = numerator_i64(eps), ed = denominator_i64(eps);
  std::vector<std::int64_t> ts;
  for (std::int64_t t = 0; t < nu; ++t) {
    ts.push_back(t);
    if (t) ts.push_back(-t);
  }
  for (auto t : ts) {
    if (r.spot_checks.size() >= sample) break;
    if (!fraction_greater(overlap(t), nu, en, ed)) continue;
    ChainSpotCheck sc;
    sc.t = t;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (nu + std::llabs(t) > sets[i].window().length()) {
        sc.member.push_back(std::nullopt);
        continue;
      }
      bool in = shift_intersection_banach(sets[i], t, nu).exceeds(eps);
      sc.member.push_back(in);
      if (!in)
        r.violations.push_back("t = " + std::to_string(t) + " is in the material's Delta set but not in set " +
                               std::to_string(i + 1) + "'s");
    }
    r.spot_checks.push_back(std::move(sc));
  }
  return r;
}

JinCoverResult jin_cover(const IntSet& a, const IntSet& b, Window x, const PipelineParams& p,
                         std::size_t baseline_limit) {
  JinCoverResult r;
  r.pipeline = pair_pipeline(a, b, p);
  for (auto& v : r.pipeline.violations) r.violations.push_back("pipeline: " + v);
  const IntSet& w = r.pipeline.w;
  auto cands = interval_members(x);
  r.cover = greedy_shift_cover(w, cands, Rational(0), greedy_order(cands).front());
  for (auto& v : check_cover(w, r.cover)) r.violations.push_back("cover: " + v);
  r.size_bound = floor_i64(1 / (r.pipeline.alpha.value() * r.pipeline.beta.value()));

  const std::int64_t tj = r.pipeline.t_j;
  r.test_range = Window(x.lo + tj, x.hi + tj);
  const auto& f = r.cover.shifts;
  std::int64_t reach = r.test_range.length();
  for (auto s : f) reach = std::max<std::int64_t>(reach, std::llabs(s));
  IntSet diff = difference_on(a, b, Window(r.test_range.lo - reach, r.test_range.hi + reach));

  r.covered = IntSet::from_predicate(r.test_range, [&](std::int64_t y) {
    return std::any_of(f.begin(), f.end(), [&](std::int64_t s) { return diff.contains(y - s); });
  });
  r.full = r.covered.count() == r.test_range.length();
  if (r.cover.covered && !r.full)
    r.violations.push_back("shifted candidates are not covered by (A - B) + F");

  std::int64_t run = 0, best = 0, best_end = r.test_range.lo - 1;
  for (std::int64_t y = r.test_range.lo; y <= r.test_range.hi; ++y) {
    run = r.covered.contains(y) ? run + 1 : 0;
    if (run > best) {
      best = run;
      best_end = y;
    }
  }
  r.longest_length = best;
  r.longest_run = best > 0 ? Window(best_end - best + 1, best_end) : Window(r.test_range.lo, r.test_range.lo);

  // Baseline: greedy maximum marginal coverage over shifts s in [-reach, reach].
  const auto tlen = static_cast<std::size_t>(r.test_range.length());
  BitVector uncovered(tlen, true);
  std::vector<std::int64_t> svals;
  for (std::int64_t s = 0; s <= reach; ++s) {
    svals.push_back(s);
    if (s) svals.push_back(-s);
  }
  while (r.baseline.size() < baseline_limit && uncovered.count() > 0) {
    std::vector<std::int64_t> gain(svals.size());
    parallel_for(
        0, static_cast<std::int64_t>(svals.size()),
        [&](std::int64_t i) {
          // y in test_range covered by s iff y - s in diff; diff bit index y - s - diff.lo.
          auto off = static_cast<std::size_t>(r.test_range.lo - svals[static_cast<std::size_t>(i)] - diff.lo());
          BitVector sl = diff.bits().slice(off, tlen);
          sl.and_with(uncovered);
          gain[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(sl.count());
        },
        16);
    auto it = std::max_element(gain.begin(), gain.end());
    if (*it == 0) break;
    std::int64_t s = svals[static_cast<std::size_t>(it - gain.begin())];
    r.baseline.push_back(s);
    BitVector sl = diff.bits().slice(static_cast<std::size_t>(r.test_range.lo - s - diff.lo()), tlen);
    uncovered.andnot_with(sl);
  }
  r.baseline_full = uncovered.count() == 0;

  if (r.full) {
    r.density_check = cover_density_verify(diff, f, CoverMode::full_cover, r.test_range,
                             std::max<std::int64_t>(1, r.test_range.length() / 2));
    if (!r.density_check->holds) r.violations.push_back("lower-density bound 1/|F| failed on A - B");
  }
  return r;
}

IntersectCoverResult intersect_delta_cover(const IntSet& a, const IntSet& b, const Rational& eps, Window x,
                                           const PipelineParams& p) {
  if (eps < 0) throw InputError("eps must be >= 0");
  IntersectCoverResult r;
  r.pipeline = pair_pipeline(a, b, p);
  for (auto& v : r.pipeline.violations) r.violations.push_back("pipeline: " + v);
  r.alpha_beta = r.pipeline.alpha.value() * r.pipeline.beta.value();
  if (eps >= r.alpha_beta * r.alpha_beta)
    throw InfeasibleError("eps = " + to_string(eps) + " >= (alpha*beta)^2 = " + to_string(r.alpha_beta * r.alpha_beta));
  r.size_bound = floor_i64((r.alpha_beta - eps) / (r.alpha_beta * r.alpha_beta - eps));

  const IntSet& w = r.pipeline.w;
  const std::int64_t nu = p.nu;
  auto cands = interval_members(x);
  r.cover = greedy_shift_cover(w, cands, eps, greedy_order(cands).front());
  for (auto& v : check_cover(w, r.cover)) r.violations.push_back("cover: " + v);

  r.checked_t = used_shifts(r.cover);
  for (auto t : r.checked_t)
    if (nu + std::llabs(t) > std::min(a.window().length(), b.window().length()))
      throw InputError("used shift t = " + std::to_string(t) + " is not shift-safe at length nu");
  std::vector<char> ok_a(r.checked_t.size()), ok_b(r.checked_t.size());
  parallel_for(0, static_cast<std::int64_t>(r.checked_t.size()), [&](std::int64_t i) {
    auto t = r.checked_t[static_cast<std::size_t>(i)];
    ok_a[static_cast<std::size_t>(i)] = shift_intersection_banach(a, t, nu).exceeds(eps);
    ok_b[static_cast<std::size_t>(i)] = shift_intersection_banach(b, t, nu).exceeds(eps);
  });
  for (std::size_t i = 0; i < r.checked_t.size(); ++i) {
    if (!ok_a[i]) r.failed_a.push_back(r.checked_t[i]);
    if (!ok_b[i]) r.failed_b.push_back(r.checked_t[i]);
  }
  for (auto t : r.failed_a) r.violations.push_back("used shift t = " + std::to_string(t) + " not in the Delta set of A");
  for (auto t : r.failed_b) r.violations.push_back("used shift t = " + std::to_string(t) + " not in the Delta set of B");

  if (r.cover.covered) {
    auto [fmin, fmax] = std::minmax_element(r.cover.shifts.begin(), r.cover.shifts.end());
    IntSet dhat = materialize_dhat(w, eps, Window(x.lo - *fmax, x.hi - *fmin));
    r.density_check = cover_density_verify(dhat, r.cover.shifts, CoverMode::full_cover, x,
                             std::max<std::int64_t>(1, x.length() / 2));
    if (!r.density_check->holds) r.violations.push_back("lower-density bound 1/|F| failed on the Delta cover");
  }
  return r;
}

}  // namespace diffset
