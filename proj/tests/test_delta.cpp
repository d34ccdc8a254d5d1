#include <doctest.h>

#include "diffset/delta.hpp"
#include "diffset/errors.hpp"
#include "diffset/gen.hpp"
#include "oracle.hpp"

using namespace diffset;

TEST_CASE("eps-Delta Banach examples") {
  auto a = oracle::residues(Window(0, 4999), 5, {0, 1});
  auto r = eps_delta_banach(a, Rational(1, 4), 500, Window(-100, 100));
  for (std::int64_t t = -100; t <= 100; ++t) CHECK(r.members.contains(t) == (t % 5 == 0));
  auto r2 = eps_delta_banach(a, Rational(1, 10), 500, Window(-100, 100));
  for (std::int64_t t = -100; t <= 100; ++t) {
    auto m = ((t % 5) + 5) % 5;
    CHECK(r2.members.contains(t) == (m == 0 || m == 1 || m == 4));
  }
  CHECK(r.value(0) == Rational(2, 5));
  CHECK(r.value(1) == Rational(1, 5));
  CHECK(r2.value(2) == 0);
}

TEST_CASE("boundary equality excludes membership") {
  auto a = oracle::residues(Window(0, 999), 5, {0, 1});
  auto r = eps_delta_banach(a, Rational(1, 5), 100, Window(-5, 5));
  CHECK(r.value(1) == Rational(1, 5));
  CHECK_FALSE(r.members.contains(1));
  CHECK(r.members.contains(0));
}

TEST_CASE("shift-safety is enforced") {
  auto a = IntSet::full(Window(0, 99));
  CHECK_THROWS_AS(eps_delta_banach(a, Rational(0), 50, Window(-51, 0)), InputError);
  CHECK_NOTHROW(eps_delta_banach(a, Rational(0), 50, Window(-50, 50)));
  CHECK_THROWS_AS(eps_delta_banach(a, Rational(-1), 50, Window(0, 0)), InputError);
  auto full = eps_delta_banach(a, Rational(0), 50, Window(-50, 50));
  CHECK(full.members.count() == 101);
}

TEST_CASE("upper-density variant") {
  auto ev = IntSet::from_predicate(Window(1, 10000), [](std::int64_t x) { return x % 2 == 0; });
  auto r = eps_delta_upper(ev, Rational(1, 4), 5000, Window(-50, 50));
  for (std::int64_t t = -50; t <= 50; ++t) CHECK(r.members.contains(t) == (t % 2 == 0));
  CHECK(eps_delta_upper(ev, Rational(1), 5000, Window(-50, 50)).members.count() == 0);
  auto full = IntSet::full(Window(1, 1000));
  CHECK(eps_delta_upper(full, Rational(0), 500, Window(-500, 500)).members.count() == 1001);
  CHECK_THROWS_AS(eps_delta_upper(oracle::residues(Window(0, 100), 2, {0}), Rational(0), 10, Window(0, 0)),
                  InputError);
  // Both estimators are exact on periodic input: the upper variant is contained in the Banach one.
  auto a = oracle::residues(Window(1, 3000), 6, {0, 1, 3});
  auto up = eps_delta_upper(a, Rational(1, 7), 2000, Window(-40, 40));
  auto bd = eps_delta_banach(a, Rational(1, 7), 600, Window(-40, 40));
  CHECK(is_subset(up.members, bd.members));
}

TEST_CASE("Delta syndetic check") {
  auto m4 = oracle::residues(Window(0, 999), 4, {0});
  auto rep = delta_syndetic_check(m4, 100, 4, Window(-200, 200));
  CHECK(rep.gap == 4);
  CHECK_FALSE(rep.violation);
  auto full = delta_syndetic_check(IntSet::full(Window(0, 499)), 50, 1, Window(-100, 100));
  CHECK(full.gap == 1);
  auto b = gen_bernoulli(Window(0, 10000), Rational(3, 10), 7);
  auto br = delta_syndetic_check(b, 1000, 3, Window(-300, 300));
  auto m = br.delta0.members.members();
  std::int64_t g = 0;
  for (std::size_t i = 1; i < m.size(); ++i) g = std::max(g, m[i] - m[i - 1]);
  CHECK(br.gap == g);
  CHECK_FALSE(br.violation);
  CHECK_THROWS_AS(delta_syndetic_check(IntSet(Window(0, 99)), 10, 1, Window(0, 5)), InputError);
}

TEST_CASE("random eps-Delta agrees with the oracle and is monotone") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::int64_t len = std::uniform_int_distribution<std::int64_t>(30, 160)(rng);
    std::int64_t lo = std::uniform_int_distribution<std::int64_t>(-50, 50)(rng);
    auto a = oracle::random_set(rng, Window(lo, lo + len - 1), std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, len / 2)(rng);
    std::int64_t reach = len - n;
    Window tr(-reach, reach);
    Rational e1(std::uniform_int_distribution<int>(0, 5)(rng), 10);
    Rational e2 = e1 + Rational(1, 10);
    auto r1 = eps_delta_banach(a, e1, n, tr);
    auto r2 = eps_delta_banach(a, e2, n, tr);
    CHECK(is_subset(r2.members, r1.members));
    auto delta = delta_set(a);
    for (std::int64_t t = tr.lo; t <= tr.hi; ++t) {
      CHECK(r1.value(t) == oracle::shift_banach(a, t, n));
      CHECK(r1.members.contains(t) == (r1.value(t) > e1));
      if (r1.members.contains(t)) CHECK(delta.contains(t));
      // A ∩ (A - t) and A ∩ (A + t) are translates over a symmetric window scan
      CHECK(r1.value(t) == r1.value(-t));
    }
    if (upper_banach_est(a, n).value() > e1) CHECK(r1.members.contains(0));
  }
}

TEST_CASE("common nonzero difference") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = oracle::random_set(rng, Window(0, 199), 0.05 + 0.002 * trial);
    std::int64_t c = a.count();
    if (c < 7) continue;
    // Pigeonhole: k translates a + b_i inside [0, 199 + s] with k·|A| > 200 + s must collide.
    std::int64_t k = 2;
    std::vector<std::int64_t> pts;
    for (;; ++k) {
      pts.clear();
      for (std::int64_t i = 0; i < k; ++i) pts.push_back(i * 5 + (i * i) % 3);
      if (k * c > 200 + pts.back()) break;
    }
    auto b = IntSet::from_members(pts, Window(0, pts.back()));
    auto d = common_nonzero_difference(a, b);
    REQUIRE(d.has_value());
    auto da = oracle::differences(oracle::members(a), oracle::members(a));
    auto db = oracle::differences(oracle::members(b), oracle::members(b));
    CHECK(*d != 0);
    CHECK(da.count(*d) == 1);
    CHECK(db.count(*d) == 1);
    for (std::int64_t e = 1; e < std::llabs(*d); ++e) {
      CHECK_FALSE((da.count(e) && db.count(e)));
      CHECK_FALSE((da.count(-e) && db.count(-e)));
    }
  }
  CHECK_FALSE(common_nonzero_difference(IntSet(Window(0, 3)), IntSet::full(Window(0, 3))).has_value());
}
