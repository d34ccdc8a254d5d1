#pragma once
// Naive reference implementations: std::set membership and direct loops, no bit kernels.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "diffset/intset.hpp"
#include "diffset/rational.hpp"

namespace oracle {

using diffset::IntSet;
using diffset::Rational;
using diffset::Window;
using Set = std::set<std::int64_t>;

inline Set members(const IntSet& s) {
  auto m = s.members();
  return Set(m.begin(), m.end());
}

inline Set differences(const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(x - y);
  return out;
}

inline Set sums(const Set& a, const Set& b) {
  Set out;
  for (auto x : a)
    for (auto y : b) out.insert(x + y);
  return out;
}

inline std::int64_t count_in(const IntSet& s, std::int64_t from, std::int64_t to) {
  std::int64_t c = 0;
  for (auto x = from; x <= to; ++x) c += s.contains(x);
  return c;
}

// max / min over windows [x+1, x+n] inside the set's window.
inline Rational upper_banach(const IntSet& s, std::int64_t n) {
  std::int64_t best = -1;
  for (auto x = s.lo() - 1; x + n <= s.hi(); ++x) best = std::max(best, count_in(s, x + 1, x + n));
  return Rational(best, n);
}

inline Rational lower_banach(const IntSet& s, std::int64_t n) {
  std::int64_t best = n + 1;
  for (auto x = s.lo() - 1; x + n <= s.hi(); ++x) best = std::min(best, count_in(s, x + 1, x + n));
  return Rational(best, n);
}

inline Rational schnirelmann(const IntSet& s, std::int64_t n) {
  Rational best(1);
  for (std::int64_t i = 1; i <= n; ++i) best = std::min(best, Rational(count_in(s, 1, i), i));
  return best;
}

// Banach estimate of A ∩ (A - t) over the shift-safe windows: both [x+1, x+n] and its +t copy
// must lie in A's window.
inline Rational shift_banach(const IntSet& a, std::int64_t t, std::int64_t n) {
  std::int64_t lo = std::max(a.lo(), a.lo() - t), hi = std::min(a.hi(), a.hi() - t);
  std::int64_t best = -1;
  for (auto x = lo - 1; x + n <= hi; ++x) {
    std::int64_t c = 0;
    for (auto y = x + 1; y <= x + n; ++y) c += a.contains(y) && a.contains(y + t);
    best = std::max(best, c);
  }
  return Rational(best, n);
}

inline IntSet random_set(std::mt19937_64& rng, Window w, double p) {
  std::bernoulli_distribution coin(p);
  return IntSet::from_predicate(w, [&](std::int64_t) { return coin(rng); });
}

inline IntSet residues(Window w, std::int64_t m, std::vector<std::int64_t> classes) {
  return IntSet::from_predicate(w, [&](std::int64_t x) {
    auto r = ((x % m) + m) % m;
    return std::find(classes.begin(), classes.end(), r) != classes.end();
  });
}

}  // namespace oracle
