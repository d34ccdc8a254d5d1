#include "diffset/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"

namespace diffset {

namespace {

std::int64_t pos_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Longest sub-interval of w containing no member of bad; least start on ties.
Window longest_clean(const IntSet& bad, Window w, std::int64_t& length) {
  std::int64_t best_lo = w.lo, best_len = 0, prev = w.lo - 1;
  auto consider = [&](std::int64_t next_bad) {
    std::int64_t len = next_bad - prev - 1;
    if (len > best_len) {
      best_len = len;
      best_lo = prev + 1;
    }
    prev = next_bad;
  };
  bad.for_each(consider);
  consider(w.hi + 1);
  length = best_len;
  return best_len > 0 ? Window(best_lo, best_lo + best_len - 1) : Window(w.lo, w.lo);
}

}  // namespace

void validate(const BohrSpec& spec) {
  if (spec.freqs.empty()) throw InputError("a Bohr set needs at least one frequency");
  for (const auto& r : spec.freqs)
    if (r < 0 || r >= 1) throw InputError("frequency " + to_string(r) + " outside [0, 1)");
  if (spec.eps <= 0) throw InputError("Bohr radius must be > 0");
}

IntSet bohr_generate(const BohrSpec& spec, Window window) {
  validate(spec);
  const __int128 en = numerator_i64(spec.eps), ed = denominator_i64(spec.eps);
  std::vector<std::pair<std::int64_t, std::int64_t>> pq;
  for (const auto& r : spec.freqs) pq.emplace_back(numerator_i64(r), denominator_i64(r));
  return IntSet::from_predicate(window, [&](std::int64_t x) {
    for (auto [p, q] : pq) {
      std::int64_t m = static_cast<std::int64_t>((static_cast<__int128>(pos_mod(x - spec.shift, q)) * p) % q);
      __int128 dist = std::min(m, q - m);  // ||p x / q|| = dist / q
      if (!(dist * ed < en * q)) return false;
    }
    return true;
  });
}

BohrContainment bohr_contained(const IntSet& s, const IntSet& a, Window interval) {
  if (!s.window().contains(interval) || !a.window().contains(interval))
    throw InputError("containment interval must lie inside both windows");
  BohrContainment out;
  for (std::int64_t x = interval.lo; x <= interval.hi; ++x) {
    if (s.contains(x) && !a.contains(x)) {
      out.ok = false;
      if (out.violations.size() < 10) out.violations.push_back(x);
    }
  }
  return out;
}

std::vector<FreqScore> suggest_freq_scores(const IntSet& d, std::size_t k_max, const FreqOptions& opt) {
  if (k_max < 1) throw InputError("k_max must be >= 1");
  if (opt.q_max < 2) throw InputError("q_max must be >= 2");
  std::vector<FreqScore> all;
  const auto members = d.members();
  for (std::int64_t q = 2; q <= opt.q_max; ++q) {
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(q), 0);
    for (auto x : members) ++cnt[static_cast<std::size_t>(pos_mod(x, q))];
    for (std::int64_t p = 1; 2 * p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      std::complex<double> s = 0;
      for (std::int64_t r = 0; r < q; ++r)
        s += static_cast<double>(cnt[static_cast<std::size_t>(r)]) *
             std::polar(1.0, 2 * std::numbers::pi * static_cast<double>((p * r) % q) / static_cast<double>(q));
      FreqScore fs;
      fs.freq = Rational(p, q);
      fs.magnitude = std::abs(s);
      fs.quantized = std::llround(fs.magnitude * 1e6);
      if (Rational(fs.quantized, 1000000) > opt.threshold * d.count()) all.push_back(fs);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const FreqScore& a, const FreqScore& b) {
    if (a.quantized != b.quantized) return a.quantized > b.quantized;
    auto qa = denominator_i64(a.freq), qb = denominator_i64(b.freq);
    if (qa != qb) return qa < qb;
    return a.freq < b.freq;
  });
  if (all.size() > k_max) all.resize(k_max);
  return all;
}

std::vector<Rational> suggest_freqs(const IntSet& d, std::size_t k_max, const FreqOptions& opt) {
  std::vector<Rational> out;
  for (auto& s : suggest_freq_scores(d, k_max, opt)) out.push_back(s.freq);
  return out;
}

std::vector<Rational> default_eps_grid() {
  return {Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5), Rational(3, 20),
          Rational(1, 8), Rational(1, 10), Rational(1, 20)};
}

std::optional<BohrWitness> piecewise_bohr_search(const IntSet& d, std::size_t k_max, std::vector<Rational> eps_grid,
                                                 std::int64_t min_length, const BohrSearchOptions& opt) {
  if (k_max < 1) throw InputError("k_max must be >= 1");
  if (eps_grid.empty()) eps_grid = default_eps_grid();
  for (const auto& e : eps_grid)
    if (e <= 0) throw InputError("eps grid values must be > 0");
  std::sort(eps_grid.begin(), eps_grid.end(), std::greater<>());
  eps_grid.erase(std::unique(eps_grid.begin(), eps_grid.end()), eps_grid.end());

  auto freqs = suggest_freqs(d, std::max(opt.suggest_count, k_max), opt.freq);
  if (freqs.empty()) freqs.push_back(Rational(0));

  // Frequency subsets by size, then lexicographic in rank order.
  std::vector<std::vector<std::size_t>> subsets;
  const std::size_t m = freqs.size();
  for (std::size_t size = 1; size <= std::min(k_max, m); ++size) {
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      subsets.push_back(idx);
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  struct Candidate {
    BohrSpec spec;
  };
  std::vector<Candidate> cands;
  for (const auto& sub : subsets) {
    std::int64_t l = 1;
    BohrSpec base;
    for (auto i : sub) {
      base.freqs.push_back(freqs[i]);
      l = std::lcm(l, denominator_i64(freqs[i]));
      l = std::min<std::int64_t>(l, opt.max_shift);
    }
    const std::int64_t shifts = std::min<std::int64_t>(l, opt.max_shift);
    for (const auto& e : eps_grid)
      for (std::int64_t s = 0; s < shifts; ++s) {
        Candidate c{base};
        c.spec.eps = e;
        c.spec.shift = s;
        cands.push_back(std::move(c));
      }
  }

  std::vector<std::int64_t> lengths(cands.size());
  std::vector<Window> intervals(cands.size());
  parallel_for(0, static_cast<std::int64_t>(cands.size()), [&](std::int64_t i) {
    auto k = static_cast<std::size_t>(i);
    IntSet s = bohr_generate(cands[k].spec, d.window());
    BitVector bad = s.bits();
    bad.andnot_with(d.bits());
    intervals[k] = longest_clean(IntSet(d.window(), std::move(bad)), d.window(), lengths[k]);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.size(); ++i)
    if (lengths[i] > lengths[best]) best = i;
  if (cands.empty() || lengths[best] < std::max<std::int64_t>(min_length, 1)) return std::nullopt;

  BohrWitness w;
  w.spec = cands[best].spec;
  w.interval = intervals[best];
  w.candidates_checked = static_cast<std::int64_t>(cands.size());
  IntSet s = bohr_generate(w.spec, w.interval);
  IntSet di = restrict_to(d, w.interval);
  w.coverage = di.count() > 0 ? Rational(s.count(), di.count()) : Rational(0);
  return w;
}

}  // namespace diffset
