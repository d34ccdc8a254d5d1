#include <doctest.h>

#include "diffset/cover.hpp"
#include "diffset/delta.hpp"
#include "diffset/errors.hpp"
#include "oracle.hpp"

using namespace diffset;

namespace {

using V = std::vector<std::int64_t>;

IntSet on(Window w, V m) { return IntSet::from_members(m, w); }

// |C ∩ (C - t)| for C on [1, N], by direct lookup.
std::int64_t overlap(const IntSet& c, std::int64_t t) {
  std::int64_t k = 0;
  c.for_each([&](std::int64_t y) { k += c.contains(y + t); });
  return k;
}

bool in_dhat(const IntSet& c, std::int64_t t, const Rational& eps) {
  return Rational(overlap(c, t)) > eps * c.window().length();
}

// Greedy as a plain loop over the candidate order used by the library.
V naive_greedy(const IntSet& c, const V& order, const Rational& eps, std::int64_t mandated) {
  V f{mandated};
  for (;;) {
    std::optional<std::int64_t> next;
    for (auto x : order) {
      bool cov = false;
      for (auto s : f) cov = cov || in_dhat(c, x - s, eps);
      if (!cov) {
        next = x;
        break;
      }
    }
    if (!next) return f;
    f.push_back(*next);
  }
}

}  // namespace

TEST_CASE("Cauchy-Schwarz family inequality") {
  std::vector<IntSet> fam{on(Window(1, 3), {1, 2}), on(Window(1, 3), {2, 3})};
  auto r = cs_family_inequality(fam, 3);
  CHECK(r.lhs == 16);
  CHECK(r.rhs == 18);
  CHECK(r.holds);
  std::vector<IntSet> eq{IntSet::full(Window(1, 2)), IntSet::full(Window(1, 2))};
  auto e = cs_family_inequality(eq, 2);
  CHECK(e.lhs == 16);
  CHECK(e.rhs == 16);
  CHECK(e.holds);
  std::vector<IntSet> empty{IntSet(Window(1, 5))};
  auto z = cs_family_inequality(empty, 5);
  CHECK(z.lhs == 0);
  CHECK(z.rhs == 0);
}

TEST_CASE("guaranteed overlap") {
  std::vector<IntSet> full{IntSet::full(Window(1, 7)), IntSet::full(Window(1, 7))};
  CHECK(guaranteed_overlap(full, 7) == 1);
  CHECK(max_pairwise_overlap(full, 7) == 1);
  // Disjoint halves: (k²γ̄² - Σc_i)/(k(k-1)) = (4·1/4 - 1)/2 = 0.
  std::vector<IntSet> halves{on(Window(1, 4), {1, 2}), on(Window(1, 4), {3, 4})};
  CHECK(guaranteed_overlap(halves, 4) == 0);
  CHECK(max_pairwise_overlap(halves, 4) == 0);
  std::vector<IntSet> one{IntSet::full(Window(1, 3))};
  CHECK_THROWS_AS(guaranteed_overlap(one, 3), InputError);
}

TEST_CASE("random families: inequality and overlap bound against pairwise counts") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 300; ++trial) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 200)(rng);
    int k = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<IntSet> fam;
    for (int i = 0; i < k; ++i)
      fam.push_back(oracle::random_set(rng, Window(1, n), std::uniform_real_distribution<double>(0, 1)(rng)));
    BigInt sum = 0, pairs = 0;
    std::int64_t best = 0;
    for (int i = 0; i < k; ++i) {
      sum += fam[static_cast<std::size_t>(i)].count();
      for (int j = i + 1; j < k; ++j) {
        std::int64_t c = 0;
        for (std::int64_t x = 1; x <= n; ++x) c += fam[static_cast<std::size_t>(i)].contains(x) && fam[static_cast<std::size_t>(j)].contains(x);
        pairs += c;
        best = std::max(best, c);
      }
    }
    auto r = cs_family_inequality(fam, n);
    CHECK(r.lhs == sum * sum);
    CHECK(r.rhs == BigInt(n) * (sum + 2 * pairs));
    CHECK(r.holds);
    CHECK(max_pairwise_overlap(fam, n) == Rational(best, n));
    CHECK(guaranteed_overlap(fam, n) <= Rational(best, n));
  }
}

TEST_CASE("greedy cover on residues {0,1} mod 5") {
  auto c = oracle::residues(Window(1, 100000), 5, {0, 1});
  V xs;
  for (std::int64_t x = -500; x <= 500; ++x) xs.push_back(x);
  auto cert = greedy_shift_cover(c, xs, Rational(0), 0);
  CHECK(cert.shifts == V{0, 2});
  CHECK(cert.k_bound == 2);
  CHECK(cert.covered);
  CHECK(cert.uncovered.empty());
  CHECK(check_cover(c, cert).empty());
  CHECK(cert.margin == Rational(500, 100000));
  REQUIRE(cert.k_bound_edge.has_value());
  CHECK(static_cast<std::int64_t>(cert.shifts.size()) <= *cert.k_bound_edge);
}

TEST_CASE("greedy cover trivial cases and errors") {
  auto full = IntSet::full(Window(1, 200));
  V xs{-30, -3, 0, 7, 40};
  auto cert = greedy_shift_cover(full, xs, Rational(1, 2), 7);
  CHECK(cert.shifts == V{7});
  CHECK(cert.covered);
  auto single = greedy_shift_cover(oracle::residues(Window(1, 300), 3, {0}), V{4}, Rational(0), 4);
  CHECK(single.shifts == V{4});
  CHECK(single.covered);
  auto c = oracle::residues(Window(1, 1000), 5, {0, 1});
  CHECK_THROWS_AS(greedy_shift_cover(c, xs, Rational(4, 25), 0), InfeasibleError);
  CHECK_THROWS_AS(greedy_shift_cover(c, xs, Rational(0), 1), InputError);
}

TEST_CASE("tampered certificates are rejected") {
  auto c = oracle::residues(Window(1, 2000), 5, {0, 1});
  V xs;
  for (std::int64_t x = -20; x <= 20; ++x) xs.push_back(x);
  auto cert = greedy_shift_cover(c, xs, Rational(0), 0);
  REQUIRE(check_cover(c, cert).empty());
  auto dup = cert;
  dup.shifts.push_back(0);
  CHECK_FALSE(check_cover(c, dup).empty());
  auto lie = cert;
  lie.shifts.pop_back();
  CHECK_FALSE(check_cover(c, lie).empty());
  auto flag = cert;
  flag.covered = false;
  CHECK_FALSE(check_cover(c, flag).empty());
}

TEST_CASE("random greedy covers match the naive procedure") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    std::int64_t n = std::uniform_int_distribution<std::int64_t>(50, 400)(rng);
    auto c = oracle::random_set(rng, Window(1, n), std::uniform_real_distribution<double>(0.3, 0.9)(rng));
    Rational g(c.count(), n);
    Rational eps = g * g * Rational(std::uniform_int_distribution<int>(0, 9)(rng), 10);
    std::int64_t r = std::uniform_int_distribution<std::int64_t>(1, n / 4)(rng);
    V xs;
    for (std::int64_t x = -r; x <= r; ++x) xs.push_back(x);
    auto order = greedy_order(xs);
    CHECK(order.front() == 0);
    if (c.count() == 0 || eps >= g * g) continue;
    auto cert = greedy_shift_cover(c, xs, eps, 0);
    CHECK(cert.shifts == naive_greedy(c, order, eps, 0));
    CHECK(cert.shifts.size() <= xs.size());
    CHECK(cert.covered);
    CHECK(check_cover(c, cert).empty());
    if (cert.k_bound_edge) CHECK(static_cast<std::int64_t>(cert.shifts.size()) <= *cert.k_bound_edge);

    auto dh = materialize_dhat(c, eps, Window(-r, r));
    for (std::int64_t t = -r; t <= r; ++t) CHECK(dh.contains(t) == in_dhat(c, t, eps));
  }
}

TEST_CASE("delta_cover on periodic sets") {
  auto a = oracle::residues(Window(0, 100000), 5, {0, 1});
  V xs;
  for (std::int64_t x = -500; x <= 500; ++x) xs.push_back(x);
  auto r = delta_cover(a, xs, Rational(0), 50000, 0);
  CHECK(r.cover.shifts.size() <= 2);
  CHECK(r.cover.covered);
  CHECK(r.failed_t.empty());
  CHECK(r.violations.empty());

  // γ̂ = 3/5, eps just below 3/25: bound is floor((3/5 - eps)/(9/25 - eps)).
  auto b = oracle::residues(Window(0, 20000), 5, {0, 1, 2});
  Rational eps(119, 1000);
  V small;
  for (std::int64_t x = -50; x <= 50; ++x) small.push_back(x);
  auto rb = delta_cover(b, small, eps, 10000, 0);
  CHECK(rb.cover.k_bound == floor_i64((Rational(3, 5) - eps) / (Rational(9, 25) - eps)));
  CHECK(static_cast<std::int64_t>(rb.cover.shifts.size()) <= rb.cover.k_bound);
  CHECK(rb.violations.empty());
  CHECK_THROWS_AS(delta_cover(b, small, Rational(9, 25), 10000, 0), InfeasibleError);
}

TEST_CASE("quotient cover") {
  auto a = oracle::residues(Window(0, 20000), 5, {0, 1});
  auto q1 = quotient_cover(a, 1, Rational(0), 10000, Window(-100, 100));
  V xs;
  for (std::int64_t x = -100; x <= 100; ++x) xs.push_back(x);
  auto t = delta_cover(a, xs, Rational(0), 10000, 0);
  CHECK(q1.shifts == t.cover.shifts);
  CHECK(q1.covered);

  auto z = quotient_cover(a, 0, Rational(0), 10000, Window(-10, 10));
  CHECK(z.covered);
  CHECK(z.quotient_set.count() == z.quotient_set.window().length());

  auto m4 = oracle::residues(Window(0, 20000), 4, {0});
  auto q2 = quotient_cover(m4, 2, Rational(0), 10000, Window(-50, 50));
  CHECK(q2.covered);
  CHECK(q2.violations.empty());
  REQUIRE(q2.base.has_value());
  CHECK(static_cast<std::int64_t>(q2.shifts.size()) <= q2.base->cover.k_bound);
  for (std::int64_t x = q2.quotient_set.lo(); x <= q2.quotient_set.hi(); ++x)
    CHECK(q2.quotient_set.contains(x) == (x % 2 == 0));
}

TEST_CASE("lower density from covers") {
  auto m3 = oracle::residues(Window(0, 3000), 3, {0});
  auto r = cover_density_verify(m3, V{0, 1, 2}, CoverMode::full_cover, Window(100, 2900), 300);
  CHECK(r.premise_holds);
  CHECK(r.holds);
  REQUIRE(r.estimate.has_value());
  CHECK(r.estimate->value() == Rational(1, 3));

  auto full = IntSet::full(Window(0, 500));
  auto f = cover_density_verify(full, V{0}, CoverMode::full_cover, Window(0, 500), 100);
  CHECK(f.holds);
  CHECK(f.estimate->value() == 1);

  // Δ̂₀ of residues {0,1} mod 5 is {0,1,4} mod 5; with F = {0,2} the sum is everything.
  auto d0 = oracle::residues(Window(-2000, 2000), 5, {0, 1, 4});
  auto p = cover_density_verify(d0, V{0, 2}, CoverMode::full_cover, Window(-1500, 1500), 500);
  CHECK(p.premise_holds);
  CHECK(p.holds);
  CHECK(p.estimate->value() >= Rational(1, 2));

  auto gap = cover_density_verify(oracle::residues(Window(0, 600), 4, {0}), V{0, 1}, CoverMode::full_cover,
                           Window(100, 500), 100);
  CHECK_FALSE(gap.premise_holds);
  CHECK(gap.holds);

  auto thick = cover_density_verify(m3, V{0, 1, 2}, CoverMode::thick_cover, Window(0, 3000), 60, 200);
  CHECK(thick.premise_holds);
  CHECK(thick.holds);
}
