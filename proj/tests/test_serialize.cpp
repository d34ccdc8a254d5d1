#include <doctest.h>

#include "diffset/errors.hpp"
#include "diffset/serialize.hpp"
#include "oracle.hpp"

using namespace diffset;

TEST_CASE("rationals travel as p/q strings") {
  CHECK(rat(Rational(3, 6)) == "1/2");
  CHECK(rat(Rational(4)) == "4/1");
  CHECK(rat(Rational(-2, 3)) == "-2/3");
  for (auto s : {"0", "7/3", "-5/11", "100/1"}) CHECK(rat_from(Json(s)) == parse_rational(s));
  CHECK(rat_from(Json(5)) == 5);
  CHECK_THROWS_AS(rat_from(Json("1/0")), InputError);
  CHECK_THROWS_AS(rat_from(Json("abc")), InputError);
  CHECK_THROWS_AS(rat_from(Json(0.5)), InputError);
}

TEST_CASE("set summaries") {
  auto s = IntSet::from_members(std::vector<std::int64_t>{-3, 4, 9}, Window(-5, 10));
  auto j = to_json(s);
  CHECK(j["window"] == Json::array({-5, 10}));
  CHECK(j["count"] == 3);
  CHECK(j["members"] == Json::array({-3, 4, 9}));
  CHECK(j["fingerprint"] == fingerprint(s));
  CHECK_FALSE(to_json(s, 2).contains("members"));
  auto t = IntSet::from_members(std::vector<std::int64_t>{-3, 4}, Window(-5, 10));
  CHECK(fingerprint(s) != fingerprint(t));
  CHECK(fingerprint(s) != fingerprint(IntSet::from_members(std::vector<std::int64_t>{-3, 4, 9}, Window(-5, 11))));
}

TEST_CASE("generator specs round-trip") {
  auto text = R"({"kind":"ap_union","window":[-10,10],"seed":3,"aps":[[1,4],{"a":0,"d":3,"len":2}]})";
  auto spec = gen_spec_from_json(Json::parse(text));
  auto back = gen_spec_from_json(to_json(spec));
  CHECK(back.kind == spec.kind);
  CHECK(back.window == spec.window);
  CHECK(back.seed == spec.seed);
  REQUIRE(back.aps.size() == 2);
  CHECK(back.aps[1].len == std::optional<std::int64_t>(2));
  CHECK_FALSE(back.aps[0].len.has_value());
  auto nested = gen_spec_from_json(Json::parse(
      R"({"kind":"chain_in_thick","window":[0,1000],"count":3,"t":{"kind":"blocks","window":[0,1000],"exp":2}})"));
  auto nb = gen_spec_from_json(to_json(nested));
  REQUIRE(nb.t_spec);
  CHECK(nb.t_spec->block_exp == 2);
}

TEST_CASE("timing is stripped at any depth") {
  Json j = {{"a", 1}, {"timing", {{"seconds", 2.5}}}, {"b", Json::array({Json{{"timing", 1}, {"c", 2}}})}};
  auto s = strip_timing(j);
  CHECK_FALSE(s.contains("timing"));
  CHECK_FALSE(s["b"][0].contains("timing"));
  CHECK(s["b"][0]["c"] == 2);
}

TEST_CASE("estimates serialize exactly") {
  auto a = oracle::residues(Window(0, 99), 3, {0});
  auto e = to_json(upper_banach_est(a, 10));
  CHECK(e["value"] == "2/5");
  CHECK(e["kind"] == "upper_banach");
  CHECK(e["n"] == 10);
}
