// diffset: command-line front end. Every subcommand prints one JSON report (or CSV with --csv).
// Exit codes: 0 ok, 2 bad input, 3 violated certificate, 4 infeasible parameters.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "diffset/acceptance.hpp"
#include "diffset/errors.hpp"
#include "diffset/parallel.hpp"
#include "diffset/serialize.hpp"
#include "diffset/setio.hpp"

using namespace diffset;

namespace {

struct Common {
  std::string out;
  bool csv = false;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json parameters = Json::object();
  Json results = Json::object();
  Json certificates = Json::object();
  std::vector<std::string> violations;
  Json seed = nullptr;
  // Rows for --csv; the first row is the header.
  std::vector<std::vector<std::string>> table;
};

Window parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos) throw InputError("expected a range lo..hi, got '" + s + "'");
  try {
    return Window(std::stoll(s.substr(0, pos)), std::stoll(s.substr(pos + 2)));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("malformed range '" + s + "'");
  }
}

// "lo..hi" or a comma-separated list.
std::vector<std::int64_t> parse_points(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.find("..") != std::string::npos) {
    Window w = parse_range(s);
    for (std::int64_t x = w.lo; x <= w.hi; ++x) out.push_back(x);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
      throw InputError("malformed integer '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty point list");
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Json set_input(const std::string& path, const IntSet& s) {
  return {{"path", path}, {"window", to_json(s.window())}, {"count", s.count()}, {"fingerprint", fingerprint(s)}};
}

void add_violations(Report& r, const std::vector<std::string>& v) {
  r.violations.insert(r.violations.end(), v.begin(), v.end());
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::vector<std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.push_back({prefix, j.is_string() ? j.get<std::string>() : j.dump()});
  }
}

void emit(const Report& r, const Common& c, double seconds) {
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw InputError("cannot write '" + c.out + "'");
  }
  std::ostream& os = c.out.empty() ? std::cout : file;
  if (c.csv) {
    auto rows = r.table;
    if (rows.empty()) {
      rows.push_back({"key", "value"});
      flatten(r.results, "", rows);
    }
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << '\n';
    }
    return;
  }
  Json j;
  j["command"] = r.command;
  j["version"] = version_string;
  j["inputs"] = r.inputs;
  j["parameters"] = r.parameters;
  j["results"] = r.results;
  j["certificates"] = r.certificates;
  j["violations"] = r.violations;
  j["timing"] = {{"seconds", seconds}, {"threads", thread_count()}};
  j["seed"] = r.seed;
  os << j.dump(2) << '\n';
}

// ---- subcommands ----

struct GenArgs {
  std::string spec, out, format = "list";
};

void run_gen(const GenArgs& a, Report& r) {
  Json spec_json;
  std::string text = a.spec;
  if (text.empty() || text.front() != '{') {
    std::ifstream in(text);
    if (!in) throw InputError("cannot read spec '" + text + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    spec_json = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("spec is not valid JSON: ") + ex.what());
  }
  GenSpec spec = gen_spec_from_json(spec_json);
  SetFormat fmt = a.format == "bits" ? SetFormat::bits : SetFormat::list;
  if (a.format != "bits" && a.format != "list") throw InputError("format must be list or bits");
  r.inputs["spec"] = to_json(spec);
  r.seed = spec.seed;
  GenResult g = generate(spec);
  Json sets = Json::array();
  for (std::size_t i = 0; i < g.sets.size(); ++i) {
    std::string path = g.sets.size() == 1 ? a.out : a.out + "." + g.names[i];
    write_set_file(path, g.sets[i], fmt);
    sets.push_back({{"name", g.names[i]}, {"path", path}, {"set", to_json(g.sets[i], 0)}});
  }
  r.results["sets"] = sets;
  add_violations(r, g.violations);
}

struct AnalyzeArgs {
  std::string set;
  std::vector<std::int64_t> ns;
  std::int64_t length = 0, gap = 0;
};

void run_analyze(const AnalyzeArgs& a, Report& r) {
  IntSet s = read_set_file(a.set);
  r.inputs["set"] = set_input(a.set, s);
  auto ns = a.ns;
  if (ns.empty()) ns.push_back(std::min<std::int64_t>(1000, s.window().length()));
  r.parameters["n"] = ns;
  Json per_n = Json::array();
  for (auto n : ns) {
    Json e;
    e["n"] = n;
    e["upper_banach"] = to_json(upper_banach_est(s, n));
    e["lower_banach"] = to_json(lower_banach_est(s, n));
    if (s.lo() == 1 && n <= s.hi()) {
      e["upper_asymptotic"] = to_json(upper_asymptotic_est(s, n));
      e["lower_asymptotic"] = to_json(lower_asymptotic_est(s, n));
      e["schnirelmann"] = to_json(schnirelmann_est(s, n));
    }
    per_n.push_back(e);
  }
  r.results["densities"] = per_n;

  Json cls;
  std::int64_t run = 0, best = 0;
  s.window();
  for (std::int64_t x = s.lo(); x <= s.hi(); ++x) {
    run = s.contains(x) ? run + 1 : 0;
    best = std::max(best, run);
  }
  cls["longest_run"] = best;
  if (a.length > 0) {
    auto t = thick_witness(s, a.length);
    cls["thick_witness"] = t ? Json(*t) : Json(nullptr);
  }
  cls["syndetic_gap"] = s.count() >= 2 ? Json(syndetic_gap(s)) : Json(nullptr);
  if (a.gap > 0 && a.length > 0) {
    auto w = piecewise_syndetic_witness(s, a.gap, a.length);
    cls["piecewise_syndetic_witness"] = w ? to_json(*w) : Json(nullptr);
  }
  r.results["classifiers"] = cls;

  r.table.push_back({"offset", "count"});
  auto counts = window_counts(s, ns.front());
  for (std::size_t i = 0; i < counts.size(); ++i)
    r.table.push_back({std::to_string(s.lo() - 1 + static_cast<std::int64_t>(i)), std::to_string(counts[i])});
}

struct DeltaArgs {
  std::string set, eps = "0", trange;
  std::int64_t n = 0;
  bool upper = false;
};

void run_delta(const DeltaArgs& a, Report& r) {
  IntSet s = read_set_file(a.set);
  r.inputs["set"] = set_input(a.set, s);
  Rational eps = parse_rational(a.eps);
  Window tr = parse_range(a.trange);
  r.parameters = {{"eps", rat(eps)}, {"n", a.n}, {"trange", to_json(tr)}, {"upper", a.upper}};
  EpsDeltaResult res = a.upper ? eps_delta_upper(s, eps, a.n, tr) : eps_delta_banach(s, eps, a.n, tr);
  r.results = to_json(res, true);
  r.table.push_back({"t", "value", "hits", "den", "at", "member"});
  for (std::int64_t t = tr.lo; t <= tr.hi; ++t) {
    const auto& e = res.estimate(t);
    r.table.push_back({std::to_string(t), to_string(e.value()), std::to_string(e.hits), std::to_string(e.den),
                       std::to_string(e.at), res.members.contains(t) ? "1" : "0"});
  }
}

struct EmbedArgs {
  std::string x, y, srange;
  std::int64_t m = 0, n = 0;
  bool dense = false;
};

void run_embed(const EmbedArgs& a, Report& r) {
  IntSet x = read_set_file(a.x), y = read_set_file(a.y);
  r.inputs["x"] = set_input(a.x, x);
  r.inputs["y"] = set_input(a.y, y);
  Window sr = a.srange.empty() ? Window(y.lo() - x.hi(), y.hi() - x.lo()) : parse_range(a.srange);
  r.parameters = {{"m", a.m}, {"srange", to_json(sr)}, {"dense", a.dense}, {"n", a.n}};
  auto rep = window_embeddable(x, y, a.m, sr);
  r.results["embeddable"] = to_json(rep);
  if (a.dense) {
    if (a.n < 1) throw InputError("--dense needs --n >= 1");
    Json traces = Json::array();
    std::optional<Rational> worst;
    std::size_t shown = 0;
    x.for_each([&](std::int64_t start) {
      if (shown >= 256) return;
      std::vector<std::int64_t> t;
      for (auto e = x.next_member(start); e && *e < start + a.m; e = x.next_member(*e + 1)) t.push_back(*e);
      Pattern f(t);
      Window fit(y.lo() - f.min(), y.hi() - f.max());
      if (fit.lo > fit.hi || a.n > fit.hi - fit.lo + 1) return;
      auto est = dense_embed_est(f, y, Window(fit.lo, fit.hi), a.n);
      if (!worst || est.value() < *worst) worst = est.value();
      traces.push_back({{"trace", to_json(f)}, {"estimate", to_json(est)}});
      ++shown;
    });
    r.results["dense"] = {{"traces", traces}, {"min_density", worst ? rat(*worst) : Json(nullptr)}};
  }
}

struct CoverArgs {
  std::string set, eps = "0", x;
  std::int64_t n = 0, h = 1;
  bool quotient = false;
  std::optional<std::int64_t> mandated;
};

void run_cover(const CoverArgs& a, Report& r) {
  IntSet s = read_set_file(a.set);
  r.inputs["set"] = set_input(a.set, s);
  Rational eps = parse_rational(a.eps);
  r.parameters = {{"eps", rat(eps)}, {"x", a.x}, {"n", a.n}};
  if (a.quotient) {
    Window xb = parse_range(a.x);
    r.parameters["h"] = a.h;
    auto rep = quotient_cover(s, a.h, eps, a.n, xb);
    r.results = {{"shifts", rep.shifts}, {"covered", rep.covered}, {"uncovered", rep.uncovered},
                 {"quotient_set", to_json(rep.quotient_set)}};
    r.certificates["quotient_cover"] = to_json(rep);
    add_violations(r, rep.violations);
    return;
  }
  auto xs = parse_points(a.x);
  std::int64_t mandated = a.mandated.value_or(greedy_order(xs).front());
  r.parameters["mandated_x"] = mandated;
  auto res = delta_cover(s, xs, eps, a.n, mandated);
  r.results = {{"shifts", res.cover.shifts}, {"size", res.cover.shifts.size()}, {"k_bound", res.cover.k_bound},
               {"covered", res.cover.covered}, {"uncovered", res.cover.uncovered}};
  r.certificates["cover"] = to_json(res);
  add_violations(r, res.violations);
  r.table.push_back({"x", "covered", "shift", "t"});
  std::vector<std::int64_t> unc = res.cover.uncovered;
  for (std::size_t i = 0; i < res.cover.candidates.size(); ++i) {
    std::int64_t x = res.cover.candidates[i];
    bool cov = std::find(unc.begin(), unc.end(), x) == unc.end();
    r.table.push_back({std::to_string(x), cov ? "1" : "0", cov ? std::to_string(res.cover.cover_shift[i]) : "",
                       cov ? std::to_string(x - res.cover.cover_shift[i]) : ""});
  }
}

struct ExtractArgs {
  std::string set, slack = "1/50";
  std::int64_t n = 0, window_n = 0, cap = default_trace_cap;
};

void run_extract(const ExtractArgs& a, Report& r) {
  IntSet s = read_set_file(a.set);
  r.inputs["set"] = set_input(a.set, s);
  Rational slack = parse_rational(a.slack);
  std::optional<std::int64_t> nw;
  if (a.window_n > 0) nw = a.window_n;
  r.parameters = {{"n", a.n}, {"slack", rat(slack)}, {"window_n", nw ? Json(*nw) : Json(nullptr)}, {"cap", a.cap}};
  auto res = dense_extract(s, a.n, slack, nw, a.cap);
  r.results = {{"e_prefix", to_json(res.cert.e_prefix)}, {"sigma_hat", rat(res.sigma_hat)},
               {"gamma", rat(res.cert.gamma)}, {"theta_count", res.cert.theta.count()}};
  r.certificates["extraction"] = to_json(res);
  add_violations(r, res.violations);
  r.table.push_back({"theta"});
  res.cert.theta.for_each([&](std::int64_t t) { r.table.push_back({std::to_string(t)}); });
}

struct PipelineArgs {
  std::string a, b, slack = "1/50", eps = "0", x, max_ratio = "1/10";
  std::vector<std::string> chain;
  std::int64_t big_n = 0, nu = 0, n = 0, cap = default_trace_cap;
  bool jin = false, intersect = false;
};

void run_pipeline(const PipelineArgs& a, Report& r) {
  PipelineParams p;
  p.n_total = a.big_n;
  p.nu = a.nu;
  p.n = a.n;
  p.slack = parse_rational(a.slack);
  p.max_nu_ratio = parse_rational(a.max_ratio);
  p.n_cap = a.cap;
  r.parameters = to_json(p);
  const int modes = (!a.chain.empty()) + a.jin + a.intersect;
  if (modes > 1) throw InputError("--chain, --jin and --intersect are mutually exclusive");
  auto default_x = [&] {
    std::int64_t h = std::max<std::int64_t>(1, std::min<std::int64_t>(1000, a.nu / 2));
    return Window(-h, h);
  };

  if (!a.chain.empty()) {
    std::vector<IntSet> sets;
    Json ins = Json::array();
    for (const auto& path : a.chain) {
      sets.push_back(read_set_file(path));
      ins.push_back(set_input(path, sets.back()));
    }
    r.inputs["chain"] = ins;
    Rational eps = parse_rational(a.eps);
    r.parameters["eps"] = rat(eps);
    auto res = ruzsa_chain(sets, p, eps);
    r.results = {{"e_prefix", to_json(res.cert().e_prefix)}, {"sigma_hat", rat(res.sigma_hat)},
                 {"product", rat(res.product)}, {"target", rat(res.target)}};
    r.certificates["chain"] = to_json(res);
    add_violations(r, res.violations);
    return;
  }

  if (a.a.empty() || a.b.empty()) throw InputError("--a and --b are required");
  IntSet sa = read_set_file(a.a), sb = read_set_file(a.b);
  r.inputs["a"] = set_input(a.a, sa);
  r.inputs["b"] = set_input(a.b, sb);
  if (a.jin) {
    Window x = a.x.empty() ? default_x() : parse_range(a.x);
    r.parameters["x"] = to_json(x);
    auto res = jin_cover(sa, sb, x, p);
    r.results = {{"shifts", res.cover.shifts}, {"size", res.cover.shifts.size()}, {"size_bound", res.size_bound},
                 {"test_range", to_json(res.test_range)}, {"full", res.full},
                 {"longest_run", to_json(res.longest_run)}, {"longest_length", res.longest_length},
                 {"baseline", res.baseline}};
    r.certificates["jin"] = to_json(res);
    add_violations(r, res.violations);
    return;
  }
  if (a.intersect) {
    Window x = a.x.empty() ? default_x() : parse_range(a.x);
    Rational eps = parse_rational(a.eps);
    r.parameters["x"] = to_json(x);
    r.parameters["eps"] = rat(eps);
    auto res = intersect_delta_cover(sa, sb, eps, x, p);
    r.results = {{"shifts", res.cover.shifts}, {"size", res.cover.shifts.size()},
                 {"size_bound", res.size_bound ? Json(*res.size_bound) : Json(nullptr)},
                 {"covered", res.cover.covered}, {"checked_t", res.checked_t}};
    r.certificates["intersect"] = to_json(res);
    add_violations(r, res.violations);
    return;
  }
  auto res = pair_pipeline(sa, sb, p);
  r.results = {{"e_prefix", to_json(res.cert.e_prefix)}, {"sigma_hat", rat(res.sigma_hat)},
               {"gamma", rat(res.gamma)}, {"t_J", res.t_j}, {"J", to_json(res.j)},
               {"eps_achieved", rat(res.eps_achieved)}};
  r.certificates["pipeline"] = to_json(res);
  add_violations(r, res.violations);
}

struct BohrArgs {
  std::string d, freqs, eps = "1/4", eps_grid, interval;
  std::int64_t shift = 0, kmax = 2, lmin = 1, qmax = 32;
  bool search = false;
};

void run_bohr(const BohrArgs& a, Report& r) {
  IntSet d = read_set_file(a.d);
  r.inputs["d"] = set_input(a.d, d);
  r.parameters = {{"kmax", a.kmax}, {"qmax", a.qmax}};
  if (a.kmax < 1) throw InputError("--kmax must be >= 1");
  FreqOptions fo;
  fo.q_max = a.qmax;
  Json sug = Json::array();
  for (auto& s : suggest_freq_scores(d, static_cast<std::size_t>(a.kmax), fo))
    sug.push_back({{"freq", rat(s.freq)}, {"magnitude", s.quantized}});
  r.results["suggested"] = sug;

  if (!a.freqs.empty()) {
    BohrSpec spec{parse_rationals(a.freqs), parse_rational(a.eps), a.shift};
    Window iv = a.interval.empty() ? d.window() : parse_range(a.interval);
    IntSet s = bohr_generate(spec, d.window());
    auto c = bohr_contained(s, d, iv);
    r.parameters["spec"] = to_json(spec);
    r.results["generated"] = to_json(s);
    r.results["contained"] = {{"interval", to_json(iv)}, {"ok", c.ok}, {"counterexamples", c.violations}};
  }
  if (a.search) {
    BohrSearchOptions so;
    so.freq = fo;
    std::vector<Rational> grid = a.eps_grid.empty() ? std::vector<Rational>{} : parse_rationals(a.eps_grid);
    r.parameters["lmin"] = a.lmin;
    auto w = piecewise_bohr_search(d, static_cast<std::size_t>(a.kmax), grid, a.lmin, so);
    if (w) {
      IntSet s = bohr_generate(w->spec, w->interval);
      auto c = bohr_contained(s, d, w->interval);
      r.results["witness"] = to_json(*w);
      r.certificates["witness_check"] = {{"ok", c.ok}, {"counterexamples", c.violations}};
      if (!c.ok) r.violations.push_back("search witness is not contained in D");
    } else {
      r.results["witness"] = nullptr;
    }
  }
}

struct SelftestArgs {
  std::int64_t trials = 0, embed_trials = 0;
  std::uint64_t seed = 0;
  bool seed_given = false, determinism = false;
  std::vector<int> criteria;
};

void run_selftest(const SelftestArgs& a, Report& r) {
  AcceptanceOptions opt;
  if (a.trials > 0) {
    opt.random_trials = a.trials;
    opt.embed_trials = std::min<std::int64_t>(a.trials, 200);
  }
  if (a.embed_trials > 0) opt.embed_trials = a.embed_trials;
  if (a.seed_given) opt.seed = a.seed;
  r.seed = opt.seed;
  r.parameters = {{"random_trials", opt.random_trials}, {"embed_trials", opt.embed_trials}};
  std::vector<int> ids = a.criteria;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  if (a.determinism && std::find(ids.begin(), ids.end(), 12) == ids.end()) ids.push_back(12);
  std::vector<int> plain;
  for (int id : ids) {
    if (id < 1 || id > 12) throw InputError("criteria are numbered 1..12");
    if (id != 12) plain.push_back(id);
  }
  auto results = run_criteria(opt, plain);
  if (std::find(ids.begin(), ids.end(), 12) != ids.end()) results.push_back(run_determinism(opt));
  Json crit = Json::array();
  for (const auto& c : results) {
    std::cerr << summary_line(c) << '\n';
    crit.push_back(to_json(c));
    for (const auto& f : c.failures) r.violations.push_back("criterion " + std::to_string(c.id) + ": " + f);
  }
  r.results["criteria"] = crit;
  r.table.push_back({"criterion", "passed", "seconds", "name"});
  for (const auto& c : results)
    r.table.push_back({std::to_string(c.id), c.passed ? "1" : "0", std::to_string(c.seconds), "\"" + c.name + "\""});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-window workbench for difference sets, Delta sets and their covers"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub, bool out = true) {
    if (out) sub->add_option("--out", common.out, "Write the report here instead of stdout");
    sub->add_flag("--csv", common.csv, "Emit a flat CSV table");
  };

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate a set file from a JSON spec");
  gen->add_option("--spec", ga.spec, "Inline JSON or path to a JSON file")->required();
  gen->add_option("--out", ga.out, "Set file to write (multi-set kinds append .A, .B, ...)")->required();
  gen->add_option("--format", ga.format, "list or bits");
  gen->add_flag("--csv", common.csv);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Density estimates and classifiers");
  analyze->add_option("--set", aa.set)->required();
  analyze->add_option("--n", aa.ns, "Window length (repeatable)");
  analyze->add_option("--L", aa.length, "Interval length for thick / piecewise syndetic checks");
  analyze->add_option("--g", aa.gap, "Gap bound for the piecewise syndetic check");
  add_common(analyze);

  DeltaArgs da;
  auto* delta = app.add_subcommand("delta", "eps-Delta set over a range of shifts");
  delta->add_option("--set", da.set)->required();
  delta->add_option("--eps", da.eps, "Rational p/q");
  delta->add_option("--n", da.n)->required();
  delta->add_option("--trange", da.trange, "lo..hi")->required();
  delta->add_flag("--upper", da.upper, "Use the upper asymptotic estimator");
  add_common(delta);

  EmbedArgs ea;
  auto* embed = app.add_subcommand("embed", "Trace embeddability of X into Y");
  embed->add_option("--x", ea.x)->required();
  embed->add_option("--y", ea.y)->required();
  embed->add_option("--m", ea.m)->required();
  embed->add_option("--srange", ea.srange, "lo..hi");
  embed->add_flag("--dense", ea.dense);
  embed->add_option("--n", ea.n);
  add_common(embed);

  CoverArgs ca;
  std::int64_t h_value = 0;
  std::int64_t mandated = 0;
  auto* cover = app.add_subcommand("cover", "Greedy shift cover by the eps-Delta set");
  cover->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  cover->add_option("--set", ca.set)->required();
  cover->add_option("--eps", ca.eps);
  cover->add_option("--x", ca.x, "lo..hi or a comma list")->required();
  cover->add_option("--n", ca.n)->required();
  auto* h_opt = cover->add_option("--h", h_value, "Cover the quotient by h instead");
  auto* m_opt = cover->add_option("--mandated", mandated, "First shift of F");
  add_common(cover);

  ExtractArgs xa;
  auto* extract = app.add_subcommand("extract", "Prefix-dense pattern extraction");
  extract->add_option("--set", xa.set)->required();
  extract->add_option("--n", xa.n)->required();
  extract->add_option("--slack", xa.slack);
  extract->add_option("--window-n", xa.window_n, "Length of the best window (default: whole set)");
  extract->add_option("--cap", xa.cap);
  add_common(extract);

  PipelineArgs pa;
  auto* pipeline = app.add_subcommand("pipeline", "Two-set pipeline and its covers");
  pipeline->add_option("--a", pa.a);
  pipeline->add_option("--b", pa.b);
  pipeline->add_option("--N", pa.big_n)->required();
  pipeline->add_option("--nu", pa.nu)->required();
  pipeline->add_option("--n", pa.n)->required();
  pipeline->add_option("--slack", pa.slack);
  pipeline->add_option("--max-ratio", pa.max_ratio, "Largest allowed nu/N");
  pipeline->add_option("--cap", pa.cap);
  pipeline->add_option("--chain", pa.chain, "Fold the pipeline over these sets");
  pipeline->add_flag("--jin", pa.jin, "Cover an interval by (A - B) + F");
  pipeline->add_flag("--intersect", pa.intersect, "Cover by the intersected eps-Delta sets");
  pipeline->add_option("--eps", pa.eps);
  pipeline->add_option("--x", pa.x, "lo..hi");
  add_common(pipeline);

  BohrArgs ba;
  auto* bohr = app.add_subcommand("bohr", "Bohr sets and piecewise Bohr witnesses");
  bohr->add_option("--d", ba.d)->required();
  bohr->add_option("--freqs", ba.freqs, "Comma list of p/q");
  bohr->add_option("--eps", ba.eps);
  bohr->add_option("--shift", ba.shift);
  bohr->add_option("--interval", ba.interval, "lo..hi");
  bohr->add_flag("--search", ba.search);
  bohr->add_option("--kmax", ba.kmax);
  bohr->add_option("--Lmin", ba.lmin);
  bohr->add_option("--qmax", ba.qmax);
  bohr->add_option("--eps-grid", ba.eps_grid, "Comma list of p/q");
  add_common(bohr);

  SelftestArgs sa;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--trials", sa.trials);
  selftest->add_option("--embed-trials", sa.embed_trials);
  auto* seed_opt = selftest->add_option("--seed", sa.seed);
  selftest->add_option("--criteria", sa.criteria, "Subset of 1..12");
  selftest->add_flag("--determinism", sa.determinism, "Also run the thread-count comparison");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Report report;
  auto t0 = std::chrono::steady_clock::now();
  try {
    CLI::App* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    if (sub == gen) run_gen(ga, report);
    else if (sub == analyze) run_analyze(aa, report);
    else if (sub == delta) run_delta(da, report);
    else if (sub == embed) run_embed(ea, report);
    else if (sub == cover) {
      if (h_opt->count()) {
        ca.quotient = true;
        ca.h = h_value;
      }
      if (m_opt->count()) ca.mandated = mandated;
      run_cover(ca, report);
    } else if (sub == extract) run_extract(xa, report);
    else if (sub == pipeline) run_pipeline(pa, report);
    else if (sub == bohr) run_bohr(ba, report);
    else if (sub == selftest) {
      sa.seed_given = seed_opt->count() > 0;
      run_selftest(sa, report);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(report, common, secs);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
  return report.violations.empty() ? 0 : 3;
}
