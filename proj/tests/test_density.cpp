#include <doctest.h>

#include "diffset/density.hpp"
#include "diffset/errors.hpp"
#include "diffset/gen.hpp"
#include "oracle.hpp"

using namespace diffset;

namespace {
IntSet evens(Window w) {
  return IntSet::from_predicate(w, [](std::int64_t x) { return x % 2 == 0; });
}
}  // namespace

TEST_CASE("Banach estimates on examples") {
  CHECK(upper_banach_est(evens(Window(0, 999)), 10).value() == Rational(1, 2));
  auto r = oracle::residues(Window(0, 999), 10, {0, 1, 2});
  CHECK(upper_banach_est(r, 10).value() == Rational(3, 10));
  CHECK(lower_banach_est(r, 10).value() == Rational(3, 10));
  auto full = IntSet::full(Window(-5, 40));
  CHECK(upper_banach_est(full, 7).value() == 1);
  CHECK(lower_banach_est(full, 7).value() == 1);
  CHECK(lower_banach_est(IntSet(Window(0, 9)), 3).value() == 0);
  CHECK_THROWS_AS(upper_banach_est(full, 0), InputError);
  CHECK_THROWS_AS(upper_banach_est(full, 47), InputError);
}

TEST_CASE("asymptotic and Schnirelmann estimates") {
  auto ev = evens(Window(1, 1000));
  auto up = upper_asymptotic_est(ev, 1000);
  auto lo = lower_asymptotic_est(ev, 1000);
  CHECK(up.value() >= Rational(1, 2));
  CHECK(up.value() <= Rational(1, 2) + Rational(1, 1000));
  CHECK(lo.value() <= Rational(1, 2));
  CHECK(lo.value() >= Rational(1, 2) - Rational(1, 1000));
  auto full = IntSet::full(Window(1, 50));
  CHECK(upper_asymptotic_est(full, 50).value() == 1);
  CHECK(lower_asymptotic_est(full, 50).value() == 1);

  auto odds = IntSet::from_predicate(Window(1, 100), [](std::int64_t x) { return x % 2 != 0; });
  auto s = schnirelmann_est(odds, 100);
  CHECK(s.value() == Rational(1, 2));
  CHECK(s.at % 2 == 0);
  CHECK(schnirelmann_est(ev, 100).value() == 0);
  CHECK(schnirelmann_est(full, 50).value() == 1);
  CHECK_THROWS_AS(schnirelmann_est(evens(Window(0, 10)), 5), InputError);

  // First half of the window only: the proxy range is the tail, so both estimates are direct ratios.
  auto half = IntSet::from_predicate(Window(1, 200), [](std::int64_t x) { return x <= 100; });
  Rational best(0);
  for (std::int64_t i = 100; i <= 200; ++i) best = std::max(best, Rational(oracle::count_in(half, 1, i), i));
  CHECK(upper_asymptotic_est(half, 200).value() == best);
}

TEST_CASE("classifiers") {
  auto full = IntSet::full(Window(3, 40));
  CHECK(thick_witness(full, 38) == 3);
  CHECK_FALSE(thick_witness(evens(Window(0, 100)), 2).has_value());

  auto blocks = gen_blocks(Window(0, 2000), 10, 2, 1);  // [10k², 10k² + k - 1]
  auto blk = IntSet::from_predicate(Window(0, 2000), [](std::int64_t x) {
    for (std::int64_t k = 1; k <= 14; ++k)
      if (x >= 10 * k * k && x <= 10 * k * k + k - 1) return true;
    return false;
  });
  CHECK(blocks == blk);
  CHECK(thick_witness(blk, 5) == 250);

  CHECK(syndetic_gap(oracle::residues(Window(0, 100), 7, {0})) == 7);
  CHECK(syndetic_gap(full) == 1);
  CHECK(syndetic_gap(oracle::residues(Window(0, 100), 4, {0})) == 4);
  CHECK_THROWS_AS(syndetic_gap(IntSet::from_members(std::vector<std::int64_t>{3}, Window(0, 5))), InputError);

  auto ev = evens(Window(0, 1000));
  auto w = piecewise_syndetic_witness(ev, 2, 100);
  REQUIRE(w.has_value());
  CHECK(w->lo == 0);
  CHECK_FALSE(piecewise_syndetic_witness(ev, 1, 4).has_value());

  auto bern = gen_bernoulli(Window(0, 10000), Rational(3, 10), 7);
  std::int64_t g = syndetic_gap(bern);
  auto m = bern.members();
  std::int64_t gmax = 0;
  for (std::size_t i = 1; i < m.size(); ++i) gmax = std::max(gmax, m[i] - m[i - 1]);
  CHECK(g == gmax);
}

TEST_CASE("random estimates agree with the window-scan oracle") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t len = std::uniform_int_distribution<std::int64_t>(1, 300)(rng);
    std::int64_t lo = trial % 3 == 0 ? 1 : std::uniform_int_distribution<std::int64_t>(-100, 100)(rng);
    auto a = oracle::random_set(rng, Window(lo, lo + len - 1), std::uniform_real_distribution<double>(0, 1)(rng));
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, len)(rng);
    auto up = upper_banach_est(a, n);
    auto dn = lower_banach_est(a, n);
    CHECK(up.value() == oracle::upper_banach(a, n));
    CHECK(dn.value() == oracle::lower_banach(a, n));
    CHECK(oracle::count_in(a, up.at + 1, up.at + n) == up.hits);
    CHECK(a.window().contains(Window(up.at + 1, up.at + n)));
    CHECK(a.window().contains(Window(dn.at + 1, dn.at + n)));
    CHECK(dn.value() <= up.value());
    if (lo == 1) {
      auto s = schnirelmann_est(a, n);
      CHECK(s.value() == oracle::schnirelmann(a, n));
      CHECK(s.den <= n);
      auto ua = upper_asymptotic_est(a, n);
      auto la = lower_asymptotic_est(a, n);
      CHECK(la.value() <= ua.value());
      CHECK(ua.value() == Rational(oracle::count_in(a, 1, ua.den), ua.den));
    }
    auto counts = window_counts(a, n);
    for (std::size_t i = 0; i < counts.size(); i += 17)
      CHECK(counts[i] == oracle::count_in(a, a.lo() + static_cast<std::int64_t>(i), a.lo() + static_cast<std::int64_t>(i) + n - 1));
  }
}
