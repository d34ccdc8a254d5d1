#include <doctest.h>

#include "diffset/errors.hpp"
#include "diffset/gen.hpp"
#include "diffset/parallel.hpp"
#include "diffset/serialize.hpp"
#include "oracle.hpp"

using namespace diffset;

namespace {
using V = std::vector<std::int64_t>;
}

TEST_CASE("SplitMix64 reference vector") {
  SplitMix64 g(1234567);
  const std::uint64_t expect[] = {6457827717110365317ull, 3203168211198807973ull, 9817491932198370423ull,
                                  4593380528125082431ull, 16408922859458223821ull};
  for (auto e : expect) CHECK(g.next() == e);
  // Counter mode: draw x is the (x+1)-th output of a generator seeded with seed.
  SplitMix64 h(99);
  for (std::int64_t x = 0; x < 10; ++x) CHECK(h.next() == hash_draw(99, x));
}

TEST_CASE("deterministic kinds") {
  CHECK(gen_residues(Window(0, 9), 2, {0}).members() == V{0, 2, 4, 6, 8});
  CHECK(gen_residues(Window(-6, 6), 3, {1}).members() == V{-5, -2, 1, 4});
  CHECK_THROWS_AS(gen_residues(Window(0, 9), 0, {0}), InputError);

  auto ap = gen_ap_union(Window(-10, 20), {ApSpec{3, 5, 3}, ApSpec{0, 7, std::nullopt}});
  CHECK(ap.members() == V{-7, 0, 3, 7, 8, 13, 14});

  auto blk = gen_blocks(Window(0, 200), 1, 3, 1);
  for (std::int64_t x = 0; x <= 200; ++x) {
    bool in = false;
    for (std::int64_t k = 1; k * k * k <= 200; ++k) in = in || (x >= k * k * k && x < k * k * k + k);
    CHECK(blk.contains(x) == in);
  }
}

TEST_CASE("Bernoulli draws follow the documented threshold") {
  Rational p(3, 10);
  auto b = gen_bernoulli(Window(-500, 500), p, 5);
  for (std::int64_t x = -500; x <= 500; ++x) {
    unsigned __int128 u = hash_draw(5, x) >> 11;
    bool in = u * 10 < static_cast<unsigned __int128>(3) << 53;
    CHECK(b.contains(x) == in);
  }
  CHECK(gen_bernoulli(Window(0, 99), Rational(0), 1).count() == 0);
  CHECK(gen_bernoulli(Window(0, 99), Rational(1), 1).count() == 100);
  CHECK_THROWS_AS(gen_bernoulli(Window(0, 9), Rational(3, 2), 1), InputError);

  // Output is independent of the thread count.
  auto before = thread_count();
  set_thread_count(1);
  auto one = gen_bernoulli(Window(0, 200000), Rational(1, 2), 77);
  set_thread_count(4);
  auto four = gen_bernoulli(Window(0, 200000), Rational(1, 2), 77);
  set_thread_count(before);
  CHECK(one == four);
}

TEST_CASE("thick triple is certified") {
  auto t = gen_thick_triple(Window(-200000, 200000), 50, 4);
  CHECK(verify_thick_triple(t, 50).empty());
  for (std::int64_t len : {1, 10, 50}) {
    CHECK(thick_witness(t.a, len).has_value());
    CHECK(thick_witness(complement_in(t.a, t.a.window()), len).has_value());
    CHECK(thick_witness(t.b, len).has_value());
    CHECK(thick_witness(t.c, len).has_value());
  }
  auto d = difference_set(t.a, t.b);
  d.for_each([&](std::int64_t x) { CHECK(t.c.contains(x)); });
  CHECK_THROWS(gen_thick_triple(Window(-100, 100), 50, 4));
}

TEST_CASE("chains inside a thick set") {
  auto w = Window(0, 1000000);
  auto t = gen_blocks(w, 1, 3, 1);
  auto b = chain_in_thick(t, 4, 0, w);
  CHECK(b.count() == 4);
  CHECK(verify_chain(b, t).empty());
  auto m = b.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) CHECK(t.contains(m[j] - m[i]));

  auto t2 = gen_blocks(w, 1, 2, 1);
  auto b5 = chain_in_thick(t2, 5, 0, w);
  CHECK(b5.count() == 5);
  CHECK(verify_chain(b5, t2).empty());
  auto m5 = b5.members();
  for (std::size_t i = 0; i < m5.size(); ++i)
    for (std::size_t j = i + 1; j < m5.size(); ++j) CHECK(t2.contains(m5[j] - m5[i]));

  CHECK_THROWS_AS(chain_in_thick(gen_blocks(Window(0, 100), 1, 3, 1), 6, 0, Window(0, 100)), InfeasibleError);
}

TEST_CASE("golden vectors for every kind") {
  struct Golden {
    const char* spec;
    std::int64_t count;
    const char* fingerprint;
  };
  const Golden cases[] = {
      {R"({"kind":"bernoulli","window":[0,9999],"seed":1,"p":"1/2"})", 5164, "e6ed3a5c448fd169"},
      {R"({"kind":"bernoulli","window":[-5000,5000],"seed":42,"p":"3/10"})", 3026, "6839dcb0dc999ab5"},
      {R"({"kind":"residues","window":[0,999],"modulus":5,"classes":[0,1]})", 400, "bf042d9083077ef7"},
      {R"({"kind":"ap_union","window":[-100,100],"aps":[[0,7],{"a":3,"d":11,"len":5}]})", 33, "256c396b2a71db15"},
      {R"({"kind":"blocks","window":[0,100000]})", 1081, "8159ac24a283ce6a"},
      {R"({"kind":"thick_triple","window":[-200000,200000],"scale":40})", 2413, "48ec37d6c17a480e48ec37d6c17a480ee30a406f8dd08613"},
      {R"({"kind":"chain_in_thick","window":[0,1000000],"count":4,"t":{"kind":"blocks","window":[0,1000000]}})", 4, "fec161c8412b3af3"},
  };
  for (const auto& g : cases) {
    CAPTURE(g.spec);
    auto res = generate(gen_spec_from_json(Json::parse(g.spec)));
    CHECK(res.violations.empty());
    std::string fp;
    std::int64_t count = 0;
    for (const auto& s : res.sets) {
      fp += fingerprint(s);
      count += s.count();
    }
    CHECK(count == g.count);
    CHECK(fp == g.fingerprint);
    auto again = generate(gen_spec_from_json(Json::parse(g.spec)));
    CHECK(again.sets == res.sets);
  }
}

TEST_CASE("spec parsing errors") {
  CHECK_THROWS_AS(gen_spec_from_json(Json::parse(R"({"kind":"nope","window":[0,1]})")), InputError);
  CHECK_THROWS_AS(gen_spec_from_json(Json::parse(R"({"kind":"bernoulli","window":[0]})")), InputError);
  CHECK_THROWS_AS(gen_spec_from_json(Json::parse(R"({"kind":"residues","window":[0,9]})")), InputError);
  CHECK_THROWS_AS(gen_spec_from_json(Json::parse(R"([1,2])")), InputError);
}
