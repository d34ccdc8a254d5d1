#include "diffset/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "diffset/parallel.hpp"

namespace diffset {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t next() { return g_.next(); }
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational density() {
    static const Rational choices[] = {Rational(0), Rational(1, 20), Rational(1, 5),
                                       Rational(1, 2), Rational(4, 5), Rational(1)};
    return choices[next() % 6];
  }

 private:
  SplitMix64 g_;
};

Json strings(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

void expect(CriterionResult& r, bool cond, const std::string& what) {
  if (!cond) r.failures.push_back(what);
}

void absorb(CriterionResult& r, const std::vector<std::string>& violations, const std::string& where) {
  for (const auto& v : violations) r.failures.push_back(where + ": " + v);
}

// ---- 1 ----
void c1(CriterionResult& r, const AcceptanceOptions& opt) {
  Rng rng(opt.seed ^ 0x01);
  std::int64_t bad = 0, oracle_checks = 0;
  std::uint64_t checksum = 0;
  Rational min_slack(1);
  for (std::int64_t trial = 0; trial < opt.random_trials; ++trial) {
    const std::int64_t big_n = rng.uniform(1, 4096), nu = rng.uniform(1, 256);
    const Rational pc = rng.density(), pd = rng.density();
    IntSet c = gen_bernoulli(Window(1, big_n), pc, rng.next());
    IntSet d = gen_bernoulli(Window(1, nu), pd, rng.next());
    PigeonholeWitness w;
    try {
      w = pigeonhole_shift(c, d);
    } catch (const std::logic_error&) {
      ++bad;
      continue;
    }
    checksum = checksum * 1000003u + static_cast<std::uint64_t>(w.xbar * 4099 + w.hits);
    if (w.ratio < w.bound) ++bad;
    min_slack = std::min(min_slack, Rational(w.ratio - w.bound));
    if (trial % 100 == 0) {
      // Direct recount of the argmax.
      ++oracle_checks;
      std::int64_t best = -1, best_x = 0;
      for (std::int64_t x = 1; x <= big_n; ++x) {
        std::int64_t k = 0;
        for (std::int64_t y = 1; y <= nu; ++y) k += (d.contains(y) && c.contains(y + x)) ? 1 : 0;
        if (k > best) {
          best = k;
          best_x = x;
        }
      }
      if (best != w.hits || best_x != w.xbar) ++bad;
    }
  }
  expect(r, bad == 0, std::to_string(bad) + " trials broke the pigeonhole bound or its recount");
  r.details = {{"trials", opt.random_trials}, {"violations", bad}, {"oracle_checks", oracle_checks},
               {"min_slack", rat(min_slack)}, {"checksum", checksum}};
}

// ---- 2 ----
void c2(CriterionResult& r, const AcceptanceOptions& opt) {
  Rng rng(opt.seed ^ 0x02);
  std::int64_t bad_cs = 0, bad_overlap = 0;
  std::uint64_t checksum = 0;
  for (std::int64_t trial = 0; trial < opt.random_trials; ++trial) {
    const std::int64_t k = rng.uniform(2, 12), big_n = rng.uniform(1, 4096);
    std::vector<IntSet> fam;
    for (std::int64_t i = 0; i < k; ++i) fam.push_back(gen_bernoulli(Window(1, big_n), rng.density(), rng.next()));
    auto cs = cs_family_inequality(fam, big_n);
    if (!cs.holds) ++bad_cs;
    Rational g = guaranteed_overlap(fam, big_n), mx = max_pairwise_overlap(fam, big_n);
    if (g > mx) ++bad_overlap;
    checksum = checksum * 1000003u + static_cast<std::uint64_t>(numerator_i64(mx) * 7 + denominator_i64(mx));
  }
  expect(r, bad_cs == 0, std::to_string(bad_cs) + " families broke the Cauchy-Schwarz inequality");
  expect(r, bad_overlap == 0, std::to_string(bad_overlap) + " families had overlap below the guaranteed bound");
  r.details = {{"trials", opt.random_trials}, {"cs_violations", bad_cs}, {"overlap_violations", bad_overlap},
               {"checksum", checksum}};
}

// ---- 3 ----
void c3(CriterionResult& r, AcceptanceContext& ctx) {
  Json cases = Json::array();
  auto one = [&](std::int64_t m, std::vector<std::int64_t> classes, std::size_t max_f) {
    IntSet a = gen_residues(Window(0, 100000), m, classes);
    auto rep = quotient_cover(a, 1, Rational(0), 50000, Window(-500, 500));
    const std::string tag = "residues mod " + std::to_string(m);
    absorb(r, rep.violations, tag);
    expect(r, rep.covered, tag + ": cover is not full");
    expect(r, rep.shifts.size() <= max_f, tag + ": |F| = " + std::to_string(rep.shifts.size()) + " > " + std::to_string(max_f));
    Json j = {{"set", tag},
              {"shifts", rep.shifts},
              {"k_bound", rep.base->cover.k_bound},
              {"k_bound_edge", rep.base->cover.k_bound_edge ? Json(*rep.base->cover.k_bound_edge) : Json(nullptr)},
              {"covered", rep.covered},
              {"checked_t", rep.base->checked_t.size()}};
    cases.push_back(j);
    ctx.cover_density_reports.push_back({{"source", "criterion 3, " + tag},
                                         {"covered", rep.covered},
                                         {"report", rep.density_check ? to_json(*rep.density_check) : Json(nullptr)}});
  };
  one(5, {0, 1}, 2);
  one(4, {0}, 4);
  ctx.have3 = true;
  r.details = {{"cases", cases}};
}

// ---- 4 ----
void c4(CriterionResult& r) {
  IntSet a = gen_residues(Window(0, 100000), 5, {0, 1, 2});
  const std::int64_t n = 50000;
  Rational alpha = upper_banach_est(a, n).value();
  Rational delta = alpha - Rational(1, 2);
  Rational floor_value = delta + 2 * delta * delta;
  auto res = eps_delta_banach(a, Rational(0), n, Window(-1000, 1000));
  Rational lowest(1);
  std::int64_t below = 0;
  for (std::int64_t t = -1000; t <= 1000; ++t) {
    Rational v = res.value(t);
    lowest = std::min(lowest, v);
    if (v < Rational(12, 100)) ++below;
  }
  expect(r, alpha == Rational(3, 5), "best window density is " + to_string(alpha) + ", expected 3/5");
  expect(r, floor_value == Rational(12, 100), "delta + 2 delta^2 = " + to_string(floor_value));
  expect(r, below == 0, std::to_string(below) + " shifts fell below 12/100");
  r.details = {{"alpha", rat(alpha)}, {"delta", rat(delta)}, {"floor", rat(floor_value)},
               {"observed_min", rat(lowest)}, {"below", below}};
}

// ---- 5 ----
void c5(CriterionResult& r) {
  const std::int64_t big_n = 100000, n = 12;
  IntSet c = gen_bernoulli(Window(1, big_n), Rational(1, 2), 11);
  auto cert = trace_extract(c, n, Rational(9, 20));
  absorb(r, verify_extraction(c, cert), "certificate");
  expect(r, prefix_schnirelmann(cert.e_prefix, n) >= cert.gamma, "pattern prefix density below gamma");
  expect(r, cert.theta.count() * (std::int64_t{1} << n) >= cert.gamma_size, "offset class below |region| / 2^n");
  expect(r, Rational(cert.gamma_size) > cert.walk.bound * big_n, "|region| / N does not exceed the walk bound");
  expect(r, cert.walk.holds, "walk visit count does not exceed the bound");
  r.details = to_json(cert);
  r.details.erase("theta");
  r.details["theta_count"] = cert.theta.count();
  r.details["theta_fingerprint"] = fingerprint(cert.theta);
}

// ---- 6 ----
void c6(CriterionResult& r) {
  IntSet a = gen_residues(Window(0, 100000), 2, {0});
  IntSet b = gen_residues(Window(0, 100000), 3, {0});
  PipelineParams p;
  p.n_total = 100000;
  p.nu = 1000;
  p.n = 12;
  auto res = pair_pipeline(a, b, p);
  absorb(r, res.violations, "pipeline");
  Rational target = Rational(1, 6) - Rational(1, 50) - Rational(p.nu, p.n_total);
  expect(r, res.sigma_hat >= target, "prefix density " + to_string(res.sigma_hat) + " below " + to_string(target));
  r.details = to_json(res);
  r.details["target"] = rat(target);
}

// ---- 7 ----
void c7(CriterionResult& r, const AcceptanceOptions& opt, AcceptanceContext& ctx) {
  Json runs = Json::array();
  auto record = [&](const std::string& tag, const JinCoverResult& res, std::size_t max_f) {
    absorb(r, res.violations, tag);
    expect(r, res.cover.shifts.size() <= max_f,
           tag + ": |F| = " + std::to_string(res.cover.shifts.size()) + " > " + std::to_string(max_f));
    runs.push_back({{"set", tag},
                    {"shifts", res.cover.shifts},
                    {"size_bound", res.size_bound},
                    {"test_range", to_json(res.test_range)},
                    {"full", res.full},
                    {"longest_length", res.longest_length},
                    {"baseline", res.baseline},
                    {"t_J", res.pipeline.t_j}});
    ctx.cover_density_reports.push_back({{"source", "criterion 7, " + tag},
                                         {"covered", res.full},
                                         {"report", res.density_check ? to_json(*res.density_check) : Json(nullptr)}});
  };
  {
    IntSet a = gen_residues(Window(0, 100000), 3, {0});
    PipelineParams p;
    p.n_total = 100000;
    p.nu = 1000;
    p.n = 12;
    auto res = jin_cover(a, a, Window(-500, 500), p);
    record("residues 0 mod 3", res, 9);
    expect(r, res.full, "residues 0 mod 3: (A - B) + F misses part of the tested range");
  }
  for (auto s : opt.jin_seeds) {
    IntSet a = gen_bernoulli(Window(0, 500000), Rational(3, 10), 1000 + s);
    IntSet b = gen_bernoulli(Window(0, 500000), Rational(3, 10), 2000 + s);
    PipelineParams p;
    p.n_total = 500000;
    p.nu = 5000;
    p.n = 10;
    auto res = jin_cover(a, b, Window(-1000, 1000), p);
    const std::string tag = "bernoulli seed " + std::to_string(s);
    record(tag, res, 11);
    expect(r, res.longest_length >= 1000, tag + ": covered run of length " + std::to_string(res.longest_length));
  }
  ctx.have7 = true;
  r.details = {{"runs", runs}};
}

// ---- 8 ----
void c8(CriterionResult& r, AcceptanceContext& ctx) {
  IntSet a = gen_residues(Window(0, 100000), 2, {0});
  IntSet b = gen_residues(Window(0, 100000), 3, {0});
  PipelineParams p;
  p.n_total = 100000;
  p.nu = 1200;
  p.n = 12;
  auto res = intersect_delta_cover(a, b, Rational(0), Window(-100, 100), p);
  absorb(r, res.violations, "cover");
  expect(r, res.cover.covered, "cover is not full");
  expect(r, res.cover.shifts.size() <= 6, "|F| = " + std::to_string(res.cover.shifts.size()) + " > 6");
  expect(r, res.failed_a.empty() && res.failed_b.empty(), "a used shift failed re-verification");
  ctx.cover_density_reports.push_back({{"source", "criterion 8"},
                                       {"covered", res.cover.covered},
                                       {"report", res.density_check ? to_json(*res.density_check) : Json(nullptr)}});
  ctx.have8 = true;
  r.details = {{"shifts", res.cover.shifts},
               {"alpha_beta", rat(res.alpha_beta)},
               {"size_bound", res.size_bound ? Json(*res.size_bound) : Json(nullptr)},
               {"checked_t", res.checked_t},
               {"covered", res.cover.covered}};
}

// ---- 9 ----
void c9(CriterionResult& r, const AcceptanceOptions& opt, AcceptanceContext& ctx) {
  if (!ctx.have3 || !ctx.have7 || !ctx.have8) {
    AcceptanceContext fresh;
    CriterionResult scratch;
    c3(scratch, fresh);
    c7(scratch, opt, fresh);
    c8(scratch, fresh);
    ctx = std::move(fresh);
  }
  std::int64_t checked = 0;
  for (const auto& e : ctx.cover_density_reports) {
    if (!e["covered"].get<bool>()) continue;
    ++checked;
    const auto& rep = e["report"];
    expect(r, !rep.is_null() && rep["holds"].get<bool>(),
           e["source"].get<std::string>() + ": lower density below 1/|F| minus slack");
  }
  expect(r, checked > 0, "no full cover was produced");
  r.details = {{"checked", checked}, {"reports", ctx.cover_density_reports}};
}

// ---- 10 ----
struct Planted {
  IntSet y{Window(0, 0)};
  Window srange;
};

// Y = noise ∪ every window X ∩ [lo + j m, lo + j m + 2m) copied to a fresh random offset.
Planted plant(const IntSet& x, std::int64_t m, Rng& rng) {
  const std::int64_t len = x.window().length();
  const std::int64_t chunks = (len + m - 1) / m;
  const std::int64_t stride = 3 * m;
  const std::int64_t ylen = (chunks + 2) * stride + m;
  Window yw(0, ylen - 1);
  IntSet noise = gen_bernoulli(yw, Rational(1, 10), rng.next());
  BitVector bits = noise.bits();
  for (std::int64_t j = 0; j < chunks; ++j) {
    const std::int64_t from = x.lo() + j * m;
    const std::int64_t dest = (j + 1) * stride + rng.uniform(0, m / 2);
    for (std::int64_t v = from; v < from + 2 * m; ++v)
      if (x.contains(v)) bits.set(static_cast<std::size_t>(dest + (v - from)));
  }
  Planted p;
  p.y = IntSet(yw, std::move(bits));
  p.srange = Window(yw.lo - x.hi(), yw.hi - x.lo());
  return p;
}

std::vector<std::int64_t> trace_at(const IntSet& x, std::int64_t a, std::int64_t len) {
  std::vector<std::int64_t> out;
  for (auto e = x.next_member(a); e && *e < a + len; e = x.next_member(*e + 1)) out.push_back(*e);
  return out;
}

std::int64_t pick(const std::vector<std::int64_t>& v, Rng& rng) {
  return v[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
}

void c10(CriterionResult& r, const AcceptanceOptions& opt) {
  Rng rng(opt.seed ^ 0x10);
  const std::int64_t trials = opt.embed_trials;
  std::map<std::string, std::int64_t> fails, premise;
  auto random_x = [&](std::int64_t len, Rational p) { return gen_bernoulli(Window(0, len - 1), p, rng.next()); };
  auto dens = [&] { return Rational(rng.uniform(2, 8), 10); };

  for (std::int64_t i = 0; i < trials; ++i) {
    // Progressions survive embedding.
    const std::int64_t k = rng.uniform(3, 5), d = rng.uniform(1, 6);
    const std::int64_t m = rng.uniform((k - 1) * d + 1, 40);
    IntSet x0 = random_x(200, Rational(1, 5));
    const std::int64_t s0 = rng.uniform(0, 200 - 1 - (k - 1) * d);
    std::vector<std::int64_t> ap;
    for (std::int64_t j = 0; j < k; ++j) ap.push_back(s0 + j * d);
    IntSet x = unite(x0, IntSet::from_members(ap, x0.window()));
    auto pl = plant(x, m, rng);
    if (!window_embeddable(x, pl.y, m, pl.srange).ok) ++premise["ap"];
    bool has = find_ap(pl.y, k).has_value() &&
               !embedding_shifts(Pattern(ap), pl.y, pl.srange).empty();
    if (!find_ap(x, k) || !has) ++fails["ap"];
  }
  for (std::int64_t i = 0; i < trials; ++i) {
    // Window counts cannot drop.
    const std::int64_t m = rng.uniform(1, 40);
    IntSet x = random_x(240, dens());
    auto pl = plant(x, m, rng);
    if (!window_embeddable(x, pl.y, m, pl.srange).ok) ++premise["count"];
    if (upper_banach_est(pl.y, m).hits < upper_banach_est(x, m).hits) ++fails["count"];
  }
  for (std::int64_t i = 0; i < trials; ++i) {
    // Transitivity.
    const std::int64_t m = rng.uniform(2, 24);
    IntSet x = random_x(120, dens());
    auto p1 = plant(x, m, rng);
    auto p2 = plant(p1.y, m, rng);
    if (!window_embeddable(x, p1.y, m, p1.srange).ok || !window_embeddable(p1.y, p2.y, m, p2.srange).ok)
      ++premise["transitivity"];
    Window s3(p1.srange.lo + p2.srange.lo, p1.srange.hi + p2.srange.hi);
    if (!window_embeddable(x, p2.y, m, s3).ok) ++fails["transitivity"];
  }
  for (std::int64_t i = 0; i < trials; ++i) {
    // Delta sets grow.
    const std::int64_t m = rng.uniform(2, 40);
    IntSet x = random_x(240, dens());
    auto pl = plant(x, m, rng);
    if (!window_embeddable(x, pl.y, m, pl.srange).ok) ++premise["delta"];
    IntSet dx = restrict_to(delta_set(x), Window(-(m - 1), m - 1));
    IntSet dy = delta_set(pl.y);
    if (!is_subset(dx, dy)) ++fails["delta"];
  }
  for (std::int64_t i = 0; i < trials; ++i) {
    // Differences of embedded traces.
    const std::int64_t m = rng.uniform(2, 24);
    IntSet x = random_x(120, dens()), xp = random_x(120, dens());
    auto py = plant(x, m, rng), pyp = plant(xp, m, rng);
    if (!window_embeddable(x, py.y, m, py.srange).ok || !window_embeddable(xp, pyp.y, m, pyp.srange).ok)
      ++premise["difference"];
    auto f = trace_at(x, pick(x.members(), rng), m);
    auto fp = trace_at(xp, pick(xp.members(), rng), m);
    auto t = embedding_shifts(Pattern(f), py.y, py.srange).first();
    auto tp = embedding_shifts(Pattern(fp), pyp.y, pyp.srange).first();
    if (!t || !tp) {
      ++fails["difference"];
      continue;
    }
    std::vector<std::int64_t> g;
    for (std::int64_t j = rng.uniform(1, 3); j > 0; --j) g.push_back(pick(f, rng) - pick(fp, rng));
    IntSet dy = difference_set(py.y, pyp.y);
    Window range(dy.lo() - 200, dy.hi() + 200);
    if (!embedding_shifts(Pattern(g), dy, range).contains(*t - *tp)) ++fails["difference"];
  }
  for (std::int64_t i = 0; i < trials; ++i) {
    // Intersections of translates.
    const std::int64_t m = rng.uniform(8, 32);
    IntSet x = random_x(200, Rational(rng.uniform(5, 9), 10));
    std::vector<std::int64_t> g{0};
    for (std::int64_t j = rng.uniform(0, 2); j > 0; --j) g.push_back(rng.uniform(1, m / 4));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    auto pl = plant(x, m, rng);
    if (!window_embeddable(x, pl.y, m, pl.srange).ok) ++premise["intersection"];
    IntSet ix = x, iy = pl.y;
    for (auto s : g) {
      ix = intersect(ix, shift_set(x, -s));
      iy = intersect(iy, shift_set(pl.y, -s));
    }
    const std::int64_t mm = m - g.back();
    if (!window_embeddable(ix, iy, mm, pl.srange).ok) ++fails["intersection"];
    if (ix.empty()) continue;
    auto f = trace_at(ix, pick(ix.members(), rng), mm);
    std::vector<std::int64_t> fg;
    for (auto a : f)
      for (auto s : g) fg.push_back(a + s);
    auto w = embedding_shifts(Pattern(fg), pl.y, pl.srange).first();
    bool ok = w.has_value();
    if (w)
      for (auto a : f) ok = ok && iy.contains(*w + a);
    if (!ok) ++fails["intersection"];
  }
  Json per = Json::object();
  for (const char* name : {"ap", "count", "transitivity", "delta", "difference", "intersection"}) {
    per[name] = {{"instances", trials}, {"premise_failures", premise[name]}, {"violations", fails[name]}};
    expect(r, premise[name] == 0, std::string(name) + ": construction did not satisfy the premise");
    expect(r, fails[name] == 0, std::string(name) + ": " + std::to_string(fails[name]) + " violations");
  }
  r.details = per;
}

// ---- 11 ----
void c11(CriterionResult& r) {
  IntSet a = gen_residues(Window(0, 700), 7, {0, 1});
  IntSet d = difference_set(a, a);
  auto w = piecewise_bohr_search(d, 2, {}, 100);
  if (!w) {
    r.failures.push_back("no witness found");
    return;
  }
  IntSet s = bohr_generate(w->spec, d.window());
  IntSet expected = gen_residues(d.window(), 7, {0, 1, 6});
  auto cont = bohr_contained(s, d, w->interval);
  expect(r, w->spec.freqs == std::vector<Rational>{Rational(1, 7)}, "witness frequencies are not [1/7]");
  expect(r, s == expected, "generated set differs from {0, 1, 6} mod 7");
  expect(r, w->interval == d.window(), "witness interval is not the full range");
  expect(r, cont.ok, "generated set is not contained in A - B");
  r.details = {{"witness", to_json(*w)}, {"difference_window", to_json(d.window())}, {"contained", cont.ok}};
}

}  // namespace

std::vector<std::pair<int, std::string>> criterion_names() {
  return {{1, "pigeonhole shift bound on random pairs"},
          {2, "finite Cauchy-Schwarz and guaranteed overlap on random families"},
          {3, "greedy shift-cover size on periodic sets"},
          {4, "shift-intersection floor delta + 2 delta^2"},
          {5, "extraction certificate on a random set"},
          {6, "pipeline prefix density and common-shift containment"},
          {7, "difference-set cover size and covered range"},
          {8, "cover by intersected Delta sets"},
          {9, "lower density from full covers"},
          {10, "embeddability property suite"},
          {11, "Bohr witness for a periodic difference set"},
          {12, "reports invariant under thread count"}};
}

CriterionResult run_criterion(int id, const AcceptanceOptions& opt, AcceptanceContext& ctx) {
  CriterionResult r;
  r.id = id;
  for (auto& [i, n] : criterion_names())
    if (i == id) r.name = n;
  auto t0 = std::chrono::steady_clock::now();
  try {
    switch (id) {
      case 1: c1(r, opt); break;
      case 2: c2(r, opt); break;
      case 3: c3(r, ctx); break;
      case 4: c4(r); break;
      case 5: c5(r); break;
      case 6: c6(r); break;
      case 7: c7(r, opt, ctx); break;
      case 8: c8(r, ctx); break;
      case 9: c9(r, opt, ctx); break;
      case 10: c10(r, opt); break;
      case 11: c11(r); break;
      case 12: return run_determinism(opt);
      default: r.failures.push_back("unknown criterion"); break;
    }
  } catch (const std::exception& ex) {
    r.failures.push_back(std::string("exception: ") + ex.what());
  }
  r.passed = r.failures.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_criteria(const AcceptanceOptions& opt, const std::vector<int>& ids) {
  AcceptanceContext ctx;
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, opt, ctx));
  return out;
}

CriterionResult run_determinism(const AcceptanceOptions& opt) {
  CriterionResult r;
  r.id = 12;
  r.name = criterion_names().back().second;
  auto t0 = std::chrono::steady_clock::now();
  const std::size_t saved = thread_count();
  const std::size_t many = std::max<std::size_t>(std::thread::hardware_concurrency(), 4);
  std::vector<int> ids{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  auto collect = [&](std::size_t threads) {
    set_thread_count(threads);
    Json all = Json::array();
    for (auto& c : run_criteria(opt, ids)) all.push_back(strip_timing(to_json(c)));
    return all;
  };
  Json one, multi;
  try {
    one = collect(1);
    multi = collect(many);
  } catch (...) {
    set_thread_count(saved);
    throw;
  }
  set_thread_count(saved);
  Json diffs = Json::array();
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (one[i] != multi[i]) {
      diffs.push_back(ids[i]);
      r.failures.push_back("criterion " + std::to_string(ids[i]) + " report differs between 1 and " +
                           std::to_string(many) + " threads");
    }
  r.details = {{"threads", {1, many}}, {"differing", diffs}};
  r.passed = r.failures.empty();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["failures"] = strings(r.failures);
  j["details"] = r.details;
  j["timing"] = {{"seconds", r.seconds}};
  return j;
}

std::string summary_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
  std::string line = "criterion " + std::to_string(r.id) + " " + (r.passed ? "PASS" : "FAIL") + " " + r.name + buf;
  for (const auto& f : r.failures) line += "\n    " + f;
  return line;
}

}  // namespace diffset
