#include <doctest.h>

#include <sstream>

#include "diffset/errors.hpp"
#include "diffset/intset.hpp"
#include "diffset/setio.hpp"
#include "oracle.hpp"

using namespace diffset;

namespace {
IntSet make(std::vector<std::int64_t> m, Window w) { return IntSet::from_members(m, w); }
std::vector<std::int64_t> v(const IntSet& s) { return s.members(); }
using V = std::vector<std::int64_t>;
}  // namespace

TEST_CASE("make_set deduplicates and validates") {
  auto s = make({1, 2, 2, 3}, Window(0, 10));
  CHECK(v(s) == V{1, 2, 3});
  CHECK(s.count() == 3);
  CHECK(make({}, Window(0, 10)).count() == 0);
  CHECK_THROWS_AS(make({0, 5}, Window(0, 4)), InputError);
  CHECK_THROWS_AS(Window(3, 2), InputError);
}

TEST_CASE("shift_set") {
  auto s = shift_set(make({1, 3}, Window(0, 4)), 2);
  CHECK(s.window() == Window(2, 6));
  CHECK(v(s) == V{3, 5});
  auto a = make({4, 9}, Window(0, 10));
  CHECK(shift_set(a, 0) == a);
  auto z = shift_set(make({0}, Window(0, 0)), -7);
  CHECK(z.window() == Window(-7, -7));
  CHECK(v(z) == V{-7});
}

TEST_CASE("difference_set examples") {
  auto a = make({0, 3, 6}, Window(0, 6));
  CHECK(v(difference_set(a, a)) == V{-6, -3, 0, 3, 6});
  CHECK(v(difference_set(make({5}, Window(5, 5)), make({2}, Window(2, 2)))) == V{3});

  auto ev = IntSet::from_predicate(Window(0, 20), [](std::int64_t x) { return x % 2 == 0; });
  auto od = IntSet::from_predicate(Window(0, 20), [](std::int64_t x) { return x % 2 != 0; });
  auto d = difference_set(ev, od);
  CHECK(d.window() == Window(-20, 20));
  V odd;
  for (std::int64_t x = -19; x <= 19; x += 2) odd.push_back(x);
  CHECK(v(d) == odd);

  auto m3 = oracle::residues(Window(0, 99), 3, {0});
  V mult;
  for (std::int64_t x = -99; x <= 99; x += 3) mult.push_back(x);
  CHECK(v(delta_set(m3)) == mult);
  CHECK(v(delta_set(make({7}, Window(0, 10)))) == V{0});
  CHECK(delta_set(IntSet(Window(0, 10))).count() == 0);
}

TEST_CASE("sumset examples") {
  CHECK(v(sumset(make({0, 1}, Window(0, 1)), make({0, 10}, Window(0, 10)))) == V{0, 1, 10, 11});
  CHECK(v(sumset(make({1, 2}, Window(1, 2)), make({1, 2}, Window(1, 2)))) == V{2, 3, 4});
  auto a = make({2, 7, 8}, Window(0, 9));
  CHECK(same_members(sumset(a, make({0}, Window(0, 0))), a));
}

TEST_CASE("dilate and quotient") {
  CHECK(v(dilate(make({1, 2, 3}, Window(1, 3)), 2)) == V{2, 4, 6});
  auto b = make({1, 4}, Window(0, 5));
  CHECK(dilate(b, 1) == b);
  CHECK(v(dilate(make({-1, 1}, Window(-1, 1)), -3)) == V{-3, 3});
  CHECK_THROWS_AS(dilate(b, 0), InputError);

  CHECK(v(quotient(make({0, 2, 4, 5}, Window(0, 5)), 2)) == V{0, 1, 2});
  auto z = quotient(make({0, 3}, Window(-2, 5)), 0);
  CHECK(z.count() == z.window().length());
  CHECK(quotient(make({1, 3}, Window(0, 4)), 2).count() == 0);
  CHECK(quotient(make({1, 3}, Window(1, 4)), 0).count() == 0);
}

TEST_CASE("boolean operations") {
  auto ev = IntSet::from_predicate(Window(0, 9), [](std::int64_t x) { return x % 2 == 0; });
  auto c = complement_in(ev, Window(0, 9));
  CHECK(v(c) == V{1, 3, 5, 7, 9});
  CHECK(intersect(ev, ev) == ev);
  auto e = IntSet(Window(3, 4));
  CHECK(same_members(unite(e, ev), ev));
  CHECK(is_subset(make({2, 4}, Window(0, 9)), ev));
  CHECK_FALSE(is_subset(make({3}, Window(0, 9)), ev));
}

TEST_CASE("random binary operations agree with the naive oracle") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> lo_d(-150, 150), len_d(1, 140);
  std::uniform_real_distribution<double> p_d(0.0, 0.6);
  for (int trial = 0; trial < 300; ++trial) {
    auto lo1 = lo_d(rng), lo2 = lo_d(rng);
    Window wa(lo1, lo1 + len_d(rng) - 1), wb(lo2, lo2 + len_d(rng) - 1);
    auto a = oracle::random_set(rng, wa, p_d(rng));
    auto b = oracle::random_set(rng, wb, p_d(rng));
    auto ma = oracle::members(a), mb = oracle::members(b);

    auto d = difference_set(a, b);
    CHECK(d.window() == Window(wa.lo - wb.hi, wa.hi - wb.lo));
    CHECK(oracle::members(d) == oracle::differences(ma, mb));
    CHECK(d.count() == d.recount());

    auto s = sumset(a, b);
    CHECK(s.window() == Window(wa.lo + wb.lo, wa.hi + wb.hi));
    CHECK(oracle::members(s) == oracle::sums(ma, mb));

    // x in A - B iff (B + x) meets A
    for (std::int64_t x = d.lo(); x <= d.hi(); x += 7)
      CHECK(d.contains(x) == (intersect(shift_set(b, x), a).count() > 0));

    auto dl = delta_set(a);
    for (std::int64_t x = dl.lo(); x <= dl.hi(); ++x) CHECK(dl.contains(x) == dl.contains(-x));

    std::int64_t h = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
    if (h != 0) {
      CHECK(quotient(dilate(b, h), h) == b);
      auto q = quotient(a, h);
      for (std::int64_t x = q.lo(); x <= q.hi(); ++x) CHECK(q.contains(x) == a.contains(h * x));
    }

    auto u = unite(a, b);
    auto i = intersect(a, b);
    for (std::int64_t x = std::min(wa.lo, wb.lo); x <= std::max(wa.hi, wb.hi); ++x) {
      CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
      CHECK(i.contains(x) == (a.contains(x) && b.contains(x)));
    }
    CHECK(u.count() == u.recount());
    CHECK(i.count() == i.recount());

    std::int64_t rlo = lo_d(rng);
    Window r(rlo, rlo + len_d(rng));
    auto rs = restrict_to(a, r);
    auto cs = complement_in(a, r);
    for (std::int64_t x = r.lo; x <= r.hi; ++x) {
      CHECK(rs.contains(x) == a.contains(x));
      CHECK(cs.contains(x) == !a.contains(x));
    }
  }
}

TEST_CASE("set file formats round-trip") {
  std::mt19937_64 rng(7);
  auto a = oracle::random_set(rng, Window(-40, 200), 0.3);
  std::stringstream bits;
  write_bits(bits, a);
  CHECK(parse_bits(bits) == a);

  std::stringstream list;
  write_list(list, a);
  auto back = parse_list(list, a.window());
  CHECK(back == a);

  std::stringstream txt("# comment\n5\n\n-2\n5\n");
  auto p = parse_list(txt);
  CHECK(p.window() == Window(-2, 5));
  CHECK(v(p) == V{-2, 5});

  std::stringstream bad("lo=3\n01x1\n");
  CHECK_THROWS_AS(parse_bits(bad), InputError);
  std::stringstream bad2("1\nfoo\n");
  CHECK_THROWS_AS(parse_list(bad2), InputError);
  CHECK_THROWS_AS(read_set_file("/nonexistent/file"), InputError);
}
