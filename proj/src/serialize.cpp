#include "diffset/serialize.hpp"

#include <cstdio>

#include "diffset/errors.hpp"

namespace diffset {

namespace {

template <class T>
Json list(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

Json rat_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

Json strings(const std::vector<std::string>& v) { return list(v); }

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

Json opt_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::string mode_name(CoverMode m) { return m == CoverMode::full_cover ? "full_cover" : "thick_cover"; }

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

}  // namespace

Json rat(const Rational& r) { return to_string(r); }

Rational rat_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw InputError("expected a rational as a \"p/q\" string");
}

Json to_json(const Window& w) { return Json::array({w.lo, w.hi}); }

std::string fingerprint(const IntSet& s) {
  // FNV-1a over the window and the bit words.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  feed(static_cast<std::uint64_t>(s.lo()));
  feed(static_cast<std::uint64_t>(s.hi()));
  for (auto w : s.bits().words()) feed(w);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const IntSet& s, std::size_t member_cap) {
  Json j;
  j["window"] = to_json(s.window());
  j["count"] = s.count();
  j["fingerprint"] = fingerprint(s);
  if (static_cast<std::size_t>(s.count()) <= member_cap) j["members"] = list(s.members());
  return j;
}

Json to_json(const DensityEstimate& e) {
  Json j;
  j["kind"] = to_string(e.kind);
  j["value"] = rat(e.value());
  j["hits"] = e.hits;
  j["den"] = e.den;
  j["n"] = e.n;
  j["at"] = e.at;
  return j;
}

Json to_json(const EpsDeltaResult& r, bool per_t) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["eps"] = rat(r.eps);
  j["n"] = r.n;
  j["trange"] = to_json(r.trange);
  j["members"] = to_json(r.members);
  if (per_t) {
    Json a = Json::array();
    for (std::int64_t t = r.trange.lo; t <= r.trange.hi; ++t) {
      const auto& e = r.estimate(t);
      a.push_back({{"t", t}, {"value", rat(e.value())}, {"hits", e.hits}, {"den", e.den}, {"at", e.at}});
    }
    j["per_t"] = a;
  }
  return j;
}

Json to_json(const Pattern& p) { return list(p.elems()); }

Json to_json(const EmbeddabilityReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["traces_checked"] = r.traces_checked;
  j["failing_config"] = opt(r.failing_config);
  return j;
}

Json to_json(const CoverCertificate& c) {
  Json j;
  j["shifts"] = list(c.shifts);
  j["size"] = c.shifts.size();
  j["eps"] = rat(c.eps);
  j["set_count"] = c.set_count;
  j["n_total"] = c.n_total;
  j["gamma_hat"] = rat(c.gamma_hat());
  j["k_bound"] = c.k_bound;
  j["margin"] = rat(c.margin);
  j["k_bound_edge"] = opt_int(c.k_bound_edge);
  j["covered"] = c.covered;
  j["candidates"] = c.candidates.size();
  j["uncovered"] = list(c.uncovered);
  return j;
}

Json to_json(const DeltaCoverResult& r) {
  Json j;
  j["alpha"] = to_json(r.alpha);
  j["omega"] = r.omega;
  j["cover"] = to_json(r.cover);
  j["checked_t"] = list(r.checked_t);
  j["failed_t"] = list(r.failed_t);
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const CoverDensityReport& r) {
  Json j;
  j["mode"] = mode_name(r.mode);
  j["premise_holds"] = r.premise_holds;
  j["k"] = r.k;
  j["n"] = r.n;
  j["slack"] = rat(r.slack);
  j["bound"] = rat(r.bound);
  j["estimate"] = opt(r.estimate);
  j["region"] = opt(r.region);
  j["holds"] = r.holds;
  return j;
}

Json to_json(const QuotientCoverReport& r) {
  Json j;
  j["h"] = r.h;
  j["range"] = to_json(r.range);
  j["base"] = opt(r.base);
  j["shifts"] = list(r.shifts);
  j["quotient_set"] = to_json(r.quotient_set);
  j["covered"] = r.covered;
  j["uncovered"] = list(r.uncovered);
  j["density_check"] = opt(r.density_check);
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const PigeonholeWitness& w) {
  Json j;
  j["xbar"] = w.xbar;
  j["hits"] = w.hits;
  j["n_total"] = w.n_total;
  j["nu"] = w.nu;
  j["ratio"] = rat(w.ratio);
  j["bound"] = rat(w.bound);
  return j;
}

Json to_json(const BlockWalk& w) {
  Json j;
  j["gamma_n"] = rat(w.gamma_n);
  j["bound"] = rat(w.bound);
  j["visits"] = w.visits;
  j["steps"] = w.steps;
  j["holds"] = w.holds;
  return j;
}

Json to_json(const ExtractionCertificate& c) {
  Json j;
  j["n_total"] = c.n_total;
  j["n"] = c.n;
  j["gamma"] = rat(c.gamma);
  j["gamma_n"] = rat(c.gamma_n);
  j["e_prefix"] = to_json(c.e_prefix);
  j["gamma_size"] = c.gamma_size;
  j["class_count"] = c.class_count;
  j["theta"] = to_json(c.theta, 1u << 16);
  j["theta_bound"] = rat(c.theta_bound);
  j["walk"] = to_json(c.walk);
  return j;
}

Json to_json(const DenseExtractResult& r) {
  Json j;
  j["alpha"] = to_json(r.alpha);
  j["omega"] = r.omega;
  j["slack"] = rat(r.slack);
  j["sigma_hat"] = rat(r.sigma_hat);
  j["certificate"] = to_json(r.cert);
  Json dc = Json::array();
  for (const auto& d : r.dense_checks)
    dc.push_back({{"prefix_len", d.prefix_len},
                  {"estimate", to_json(d.estimate)},
                  {"contained", d.contained},
                  {"holds", d.holds}});
  j["dense_checks"] = dc;
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const PipelineParams& p) {
  Json j;
  j["N"] = p.n_total;
  j["nu"] = p.nu;
  j["n"] = p.n;
  j["slack"] = rat(p.slack);
  j["max_nu_ratio"] = rat(p.max_nu_ratio);
  j["n_cap"] = p.n_cap;
  return j;
}

Json to_json(const PipelineResult& r) {
  Json j;
  j["params"] = to_json(r.params);
  j["alpha"] = to_json(r.alpha);
  j["beta"] = to_json(r.beta);
  j["omega"] = r.omega;
  j["xi"] = r.xi;
  j["pigeonhole"] = to_json(r.pigeon);
  j["material"] = to_json(r.w, 0);
  j["material_ratio"] = rat(r.w_ratio);
  j["material_bound"] = rat(r.w_bound);
  j["gamma"] = rat(r.gamma);
  j["sigma_hat"] = rat(r.sigma_hat);
  j["certificate"] = to_json(r.cert);
  j["t_J"] = r.t_j;
  j["J"] = to_json(r.j);
  j["eps_achieved"] = rat(r.eps_achieved);
  j["part2_count"] = r.part2_count;
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const RuzsaChainResult& r) {
  Json j;
  j["first"] = opt(r.first);
  Json st = Json::array();
  for (const auto& s : r.stages) st.push_back(to_json(s));
  j["stages"] = st;
  j["alphas"] = rat_list(r.alphas);
  j["product"] = rat(r.product);
  j["target"] = rat(r.target);
  j["sigma_hat"] = rat(r.sigma_hat);
  j["e_prefix"] = to_json(r.cert().e_prefix);
  j["material"] = to_json(r.w, 0);
  j["offsets"] = list(r.offsets);
  j["eps"] = rat(r.eps);
  Json sc = Json::array();
  for (const auto& s : r.spot_checks) {
    Json m = Json::array();
    for (const auto& b : s.member) m.push_back(b ? Json(*b) : Json(nullptr));
    sc.push_back({{"t", s.t}, {"member", m}});
  }
  j["spot_checks"] = sc;
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const JinCoverResult& r) {
  Json j;
  j["pipeline"] = to_json(r.pipeline);
  j["cover"] = to_json(r.cover);
  j["size_bound"] = r.size_bound;
  j["test_range"] = to_json(r.test_range);
  j["covered"] = to_json(r.covered, 0);
  j["full"] = r.full;
  j["longest_run"] = to_json(r.longest_run);
  j["longest_length"] = r.longest_length;
  j["baseline"] = list(r.baseline);
  j["baseline_full"] = r.baseline_full;
  j["density_check"] = opt(r.density_check);
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const IntersectCoverResult& r) {
  Json j;
  j["pipeline"] = to_json(r.pipeline);
  j["cover"] = to_json(r.cover);
  j["alpha_beta"] = rat(r.alpha_beta);
  j["size_bound"] = opt_int(r.size_bound);
  j["checked_t"] = list(r.checked_t);
  j["failed_a"] = list(r.failed_a);
  j["failed_b"] = list(r.failed_b);
  j["density_check"] = opt(r.density_check);
  j["violations"] = strings(r.violations);
  return j;
}

Json to_json(const BohrSpec& s) {
  Json j;
  j["freqs"] = rat_list(s.freqs);
  j["eps"] = rat(s.eps);
  j["shift"] = s.shift;
  return j;
}

Json to_json(const BohrWitness& w) {
  Json j;
  j["spec"] = to_json(w.spec);
  j["interval"] = to_json(w.interval);
  j["coverage"] = rat(w.coverage);
  j["candidates_checked"] = w.candidates_checked;
  return j;
}

Json to_json(const GenSpec& s) {
  Json j;
  j["kind"] = to_string(s.kind);
  j["window"] = to_json(s.window);
  j["seed"] = s.seed;
  switch (s.kind) {
    case GenKind::bernoulli:
      j["p"] = rat(s.p);
      break;
    case GenKind::residues:
      j["modulus"] = s.modulus;
      j["classes"] = list(s.classes);
      break;
    case GenKind::ap_union: {
      Json a = Json::array();
      for (const auto& ap : s.aps) {
        Json e = {{"a", ap.a}, {"d", ap.d}};
        if (ap.len) e["len"] = *ap.len;
        a.push_back(e);
      }
      j["aps"] = a;
      break;
    }
    case GenKind::blocks:
      j["coef"] = s.block_coef;
      j["exp"] = s.block_exp;
      j["len_coef"] = s.block_len_coef;
      break;
    case GenKind::thick_triple:
      j["scale"] = s.scale;
      j["levels"] = s.levels;
      break;
    case GenKind::chain_in_thick:
      j["t"] = s.t_spec ? to_json(*s.t_spec) : Json(nullptr);
      j["count"] = s.count;
      j["start"] = s.start;
      break;
  }
  return j;
}

GenSpec gen_spec_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw InputError("generator spec must be a JSON object");
    GenSpec s;
    s.kind = parse_gen_kind(j.at("kind").get<std::string>());
    const auto& w = j.at("window");
    if (!w.is_array() || w.size() != 2) throw InputError("window must be [lo, hi]");
    s.window = Window(w[0].get<std::int64_t>(), w[1].get<std::int64_t>());
    s.seed = get_or<std::uint64_t>(j, "seed", 0);
    switch (s.kind) {
      case GenKind::bernoulli:
        s.p = rat_from(j.at("p"));
        break;
      case GenKind::residues:
        s.modulus = j.at("modulus").get<std::int64_t>();
        s.classes = j.at("classes").get<std::vector<std::int64_t>>();
        break;
      case GenKind::ap_union:
        for (const auto& e : j.at("aps")) {
          ApSpec ap;
          if (e.is_array()) {
            ap.a = e.at(0).get<std::int64_t>();
            ap.d = e.at(1).get<std::int64_t>();
            if (e.size() > 2) ap.len = e.at(2).get<std::int64_t>();
          } else {
            ap.a = e.at("a").get<std::int64_t>();
            ap.d = e.at("d").get<std::int64_t>();
            if (e.contains("len")) ap.len = e.at("len").get<std::int64_t>();
          }
          s.aps.push_back(ap);
        }
        break;
      case GenKind::blocks:
        s.block_coef = get_or<std::int64_t>(j, "coef", 1);
        s.block_exp = get_or<std::int64_t>(j, "exp", 3);
        s.block_len_coef = get_or<std::int64_t>(j, "len_coef", 1);
        break;
      case GenKind::thick_triple:
        s.scale = j.at("scale").get<std::int64_t>();
        s.levels = get_or<std::int64_t>(j, "levels", 4);
        break;
      case GenKind::chain_in_thick:
        s.t_spec = std::make_shared<GenSpec>(gen_spec_from_json(j.at("t")));
        s.count = j.at("count").get<std::int64_t>();
        s.start = get_or<std::int64_t>(j, "start", 0);
        break;
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("malformed generator spec: ") + ex.what());
  }
}

Json strip_timing(const Json& j) {
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "timing") out[it.key()] = strip_timing(it.value());
    return out;
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& v : j) out.push_back(strip_timing(v));
    return out;
  }
  return j;
}

}  // namespace diffset
