// Copyright 2026 The reglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// reglab command-line tool. Each subcommand prints a JSON report on stdout
// (or writes it with -o); `construct` emits a graph file instead.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reglab/constructions.hpp"
#include "reglab/embedding.hpp"
#include "reglab/errors.hpp"
#include "reglab/graph_io.hpp"
#include "reglab/hamiltonicity.hpp"
#include "reglab/regularity.hpp"
#include "reglab/robust_expansion.hpp"
#include "reglab/shifted_walks.hpp"
#include "reglab/szemeredi.hpp"

using json = nlohmann::json;
using namespace reglab;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string graph_path;
  std::optional<AnyGraph> graph;  // preloaded by self-tests
  std::string family, left, right, set, clusters, word, kind = "dirac", mode, dir = "out";
  std::string pattern, h, sigma, successor, counts, slots, avoid, inner_eps, packing = "perfect";
  std::string eps = "1/4", d = "0", nu = "1/10", tau = "1/5", eta = "0", p = "1/2";
  int n = 0, r = 0, m = 0, a = 0, b = 0, k0 = 2, s = 1, x = 0, y = 0, tmax = -1, nmax = 7, trials = 0;
  int over = -1, under = -1, inner_k0 = 0;
  std::optional<std::uint64_t> seed;
  std::optional<int> cap;
  bool sampled = false, timing = false, selftest = false;
  std::string expect, out, pure_out, r_out;
};

struct Report {
  json j = json::object();
  std::string graph_text;  // construct only
};

std::string qstr(const Rational& r) { return r.str(); }
std::string qstr(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rat(json& params, const char* key, const std::string& text) {
  Rational v = Rational::parse(text);
  params[key] = qstr(v);
  return v;
}

AnyGraph load(const Args& a) {
  if (a.graph) return *a.graph;
  if (a.graph_path.empty()) throw UsageError("a graph file is required");
  return read_graph_file(a.graph_path);
}

const Graph& need_graph(const AnyGraph& g) {
  if (auto* p = std::get_if<Graph>(&g)) return *p;
  throw UsageError("this command needs an undirected graph");
}

const Digraph& need_digraph(const AnyGraph& g) {
  if (auto* p = std::get_if<Digraph>(&g)) return *p;
  throw UsageError("this command needs a digraph");
}

int order(const AnyGraph& g) {
  return std::visit([](const auto& x) { return x.n(); }, g);
}

json sets_json(const std::vector<VertexSet>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(format_vertex_set(s));
  return out;
}

json pairs_json(const std::vector<std::pair<int, int>>& v) {
  json out = json::array();
  for (auto [i, j] : v) out.push_back(json::array({i, j}));
  return out;
}

const char* witness_kind(WitnessKind k) {
  switch (k) {
    case WitnessKind::Deviation: return "deviation";
    case WitnessKind::LowDensity: return "low-density";
    case WitnessKind::LowDegree: return "low-degree";
  }
  return "?";
}

void put_verdict(Report& rep, const RegularityVerdict& v) {
  rep.j["verdict"] = v.holds ? "holds" : "fails";
  rep.j["result"] = {{"checked_pairs", v.checked_pairs}, {"exhaustive", v.exhaustive}};
  if (v.witness) {
    rep.j["witness"] = {{"x", format_vertex_set(v.witness->x)},
                        {"y", format_vertex_set(v.witness->y)},
                        {"value", qstr(v.witness->deviation)},
                        {"kind", witness_kind(v.witness->kind)}};
  }
}

json partition_json(const Partition& p) {
  json j = {{"classes", sets_json(p.classes)}};
  if (p.exceptional) j["exceptional"] = *p.exceptional;
  return j;
}

// Named patterns: K<n>, C<n>, P<n> (path on n vertices), K<a>,<b>, petersen.
Graph named_graph(const std::string& name) {
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used == s.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("unknown pattern '" + name + "'");
  };
  if (name == "petersen") return petersen_graph();
  if (name.size() < 2) throw UsageError("unknown pattern '" + name + "'");
  std::string rest = name.substr(1);
  switch (name[0]) {
    case 'K': {
      auto comma = rest.find(',');
      if (comma != std::string::npos) return complete_bipartite(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
      return complete_graph(num(rest));
    }
    case 'C': return cycle_graph(num(rest));
    case 'P': return path_graph(num(rest));
  }
  throw UsageError("unknown pattern '" + name + "'");
}

Graph pattern_graph(const Args& a, json& params) {
  if (!a.h.empty()) {
    params["shape"] = a.h;
    return named_graph(a.h);
  }
  if (!a.pattern.empty()) {
    params["pattern"] = a.pattern;
    return need_graph(read_graph_file(a.pattern));
  }
  throw UsageError("a pattern is required (--shape or --pattern)");
}

std::uint64_t seed_of(const Args& a, Report& rep) {
  std::uint64_t s = a.seed.value_or(0);
  rep.j["seed"] = s;
  return s;
}

int cap_of(const Args& a, json& params, int dflt) {
  int c = a.cap.value_or(dflt);
  params["cap"] = c;
  return c;
}

// ---------------------------------------------------------------- commands

Report cmd_construct(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  P["family"] = a.family;
  auto need = [&](const char* key, int v) {
    P[key] = v;
    return v;
  };
  auto prob = [&]() { return rat(P, "p", a.p).to_double(); };
  AnyGraph g;
  const std::string& f = a.family;
  if (f == "turan") g = turan_graph(need("n", a.n), need("r", a.r));
  else if (f == "chvatal") g = chvatal_extremal(need("n", a.n), need("r", a.r));
  else if (f == "regular-tournament") g = regular_tournament(need("m", a.m));
  else if (f == "haggkvist") g = haggkvist_graph(need("m", a.m));
  else if (f == "antidirected") g = antidirected_counterexample(need("m", a.m));
  else if (f == "c6-sharpness") g = c6_sharpness_graph(need("n", a.n));
  else if (f == "random-graph") g = random_graph(need("n", a.n), prob(), seed_of(a, rep));
  else if (f == "random-digraph") g = random_digraph(need("n", a.n), prob(), seed_of(a, rep));
  else if (f == "random-bipartite") g = random_bipartite(need("a", a.a), need("b", a.b), prob(), seed_of(a, rep));
  else if (f == "random-tournament") g = random_tournament(need("n", a.n), seed_of(a, rep));
  else if (f == "complete") g = complete_graph(need("n", a.n));
  else if (f == "cycle") g = cycle_graph(need("n", a.n));
  else if (f == "path") g = path_graph(need("n", a.n));
  else if (f == "complete-bipartite") g = complete_bipartite(need("a", a.a), need("b", a.b));
  else if (f == "petersen") g = petersen_graph();
  else if (f == "complete-digraph") g = complete_digraph(need("n", a.n));
  else if (f == "directed-cycle") g = directed_cycle(need("n", a.n));
  else if (f == "blow-up") g = blow_up(need_graph(load(a)), need("s", a.s));
  else throw UsageError("unknown family '" + f + "'");

  rep.graph_text = std::visit([](const auto& x) { return format_graph(x); }, g);
  json res = {{"n", order(g)}};
  if (auto* gg = std::get_if<Graph>(&g)) {
    res["edges"] = gg->edge_count();
    res["min_degree"] = gg->n() ? gg->min_degree() : 0;
  } else {
    const auto& d = std::get<Digraph>(g);
    res["edges"] = d.edge_count();
    res["min_semidegree"] = d.n() ? d.min_semidegree() : 0;
  }
  rep.j["verdict"] = "ok";
  rep.j["result"] = res;
  return rep;
}

Report cmd_density(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  int n = order(g);
  VertexSet A = parse_vertex_set(a.left, n), B = parse_vertex_set(a.right, n);
  P["left"] = format_vertex_set(A);
  P["right"] = format_vertex_set(B);
  Rational dv = std::visit([&](const auto& x) { return density(x, A, B); }, g);
  long e = std::visit([&](const auto& x) { return edges_between(x, A, B); }, g);
  rep.j["verdict"] = "ok";
  rep.j["result"] = {{"density", qstr(dv)}, {"edges", e}};
  return rep;
}

Report check_common(const Args& a, bool super) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  int n = order(g);
  CheckOptions opt;
  opt.cap = cap_of(a, P, 14);
  opt.sampled = a.sampled;
  P["sampled"] = a.sampled;
  if (a.sampled) {
    opt.seed = seed_of(a, rep);
    opt.trials = a.trials > 0 ? a.trials : 200;
    P["trials"] = opt.trials;
  }
  Rational eps = rat(P, "eps", a.eps);
  Rational d = rat(P, "d", a.d);
  RegularityVerdict v;
  if (a.left.empty() && a.right.empty()) {
    const Digraph& D = need_digraph(g);
    v = super ? check_digraph_superregular(D, eps, d, opt) : check_digraph_regular(D, eps, d, opt);
  } else {
    PairSpec spec{parse_vertex_set(a.left, n), parse_vertex_set(a.right, n), eps, d};
    P["left"] = format_vertex_set(spec.a);
    P["right"] = format_vertex_set(spec.b);
    v = std::visit(
        [&](const auto& x) { return super ? check_pair_superregular(x, spec, opt) : check_pair_regular(x, spec, opt); },
        g);
  }
  put_verdict(rep, v);
  return rep;
}

Report cmd_check_regular(const Args& a) { return check_common(a, false); }
Report cmd_check_superregular(const Args& a) { return check_common(a, true); }

PartitionOptions partition_options(const Args& a, Report& rep) {
  json& P = rep.j["parameters"];
  PartitionOptions opt;
  opt.cap = cap_of(a, P, 14);
  opt.seed = seed_of(a, rep);
  opt.trials = a.trials > 0 ? a.trials : 200;
  P["trials"] = opt.trials;
  return opt;
}

Report cmd_partition(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  Rational eps = rat(P, "eps", a.eps);
  P["k0"] = a.k0;
  PartitionOptions opt = partition_options(a, rep);
  RegularityRun run = std::visit([&](const auto& x) { return regularity_partition(x, eps, a.k0, opt); }, g);
  json trace = json::array();
  for (const auto& e : run.energy_trace) trace.push_back(qstr(e));
  rep.j["verdict"] = run.increments_ok ? "holds" : "fails";
  rep.j["result"] = {{"partition", partition_json(run.partition)},
                     {"iterations", run.iterations},
                     {"iteration_cap", run.iteration_cap},
                     {"irregular_pairs", pairs_json(run.irregular_pairs)},
                     {"exact", run.exact}};
  rep.j["audit"] = {{"energy_trace", trace},
                    {"increment_threshold", qstr(run.increment_threshold)},
                    {"increments_ok", run.increments_ok}};
  return rep;
}

json degree_audit_json(const DegreeFormAudit& au) {
  return {{"exceptional_small", au.exceptional_small}, {"equal_sizes", au.equal_sizes},
          {"degree_loss", au.degree_loss},             {"clusters_empty", au.clusters_empty},
          {"pairs_regular", au.pairs_regular},         {"pairs_exact", au.pairs_exact},
          {"worst_vertex", au.worst_vertex},           {"worst_loss", au.worst_loss},
          {"failing_pairs", pairs_json(au.failing_pairs)}};
}

template <typename G>
DegreeForm<G> run_degree_form(const G& g, const Args& a, Report& rep, Rational& eps, Rational& d) {
  json& P = rep.j["parameters"];
  eps = rat(P, "eps", a.eps);
  d = rat(P, "d", a.d);
  P["k0"] = a.k0;
  DegreeFormOptions opt;
  opt.partition = partition_options(a, rep);
  if (!a.inner_eps.empty()) opt.inner_eps = rat(P, "inner_eps", a.inner_eps);
  if (a.inner_k0 > 0) {
    opt.inner_k0 = a.inner_k0;
    P["inner_k0"] = a.inner_k0;
  }
  return degree_form(g, eps, d, a.k0, opt);
}

template <typename G>
void put_degree_form(Report& rep, const DegreeForm<G>& df, const Args& a) {
  rep.j["verdict"] = df.audit.all() ? "holds" : "fails";
  rep.j["audit"] = degree_audit_json(df.audit);
  rep.j["result"] = {{"partition", partition_json(df.partition)},
                     {"cluster_size", df.cluster_size},
                     {"inner_eps", qstr(df.inner_eps)},
                     {"inner_k0", df.inner_k0},
                     {"evicted_red", df.evicted_red},
                     {"evicted_marked", df.evicted_marked},
                     {"pure_edges", df.pure.edge_count()}};
  if (!a.pure_out.empty()) write_text_file(a.pure_out, format_graph(df.pure));
}

Report cmd_degree_form(const Args& a) {
  Report rep;
  AnyGraph g = load(a);
  Rational eps, d;
  if (auto* gg = std::get_if<Graph>(&g)) put_degree_form(rep, run_degree_form(*gg, a, rep, eps, d), a);
  else put_degree_form(rep, run_degree_form(std::get<Digraph>(g), a, rep, eps, d), a);
  return rep;
}

Report cmd_reduce(const Args& a) {
  Report rep;
  AnyGraph g = load(a);
  Rational eps, d;
  auto finish = [&](const auto& df, const auto& red) {
    rep.j["audit"] = degree_audit_json(df.audit);
    rep.j["result"] = {{"partition", partition_json(df.partition)},
                       {"clusters", red.r.n()},
                       {"edges", pairs_json(red.r.edges())},
                       {"cluster_of", red.cluster_of},
                       {"exact", red.exact}};
    if (!a.r_out.empty()) write_text_file(a.r_out, format_graph(red.r));
  };
  if (auto* gg = std::get_if<Graph>(&g)) {
    auto df = run_degree_form(*gg, a, rep, eps, d);
    auto red = reduced_graph(df.pure, df.partition, eps, d, partition_options(a, rep));
    finish(df, red);
    MindegAudit md = mindeg_audit(*gg, red);
    rep.j["audit"]["mindeg"] = {{"applicable", md.applicable}, {"holds", md.holds}, {"c", qstr(md.c)},
                                {"min_degree_r", md.min_degree_r}};
    rep.j["verdict"] = (df.audit.all() && (!md.applicable || md.holds)) ? "holds" : "fails";
  } else {
    auto df = run_degree_form(std::get<Digraph>(g), a, rep, eps, d);
    auto red = reduced_graph(df.pure, df.partition, eps, d, partition_options(a, rep));
    finish(df, red);
    rep.j["verdict"] = df.audit.all() ? "holds" : "fails";
  }
  return rep;
}

Report cmd_certify(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  auto kind = parse_kind(a.kind);
  if (!kind) throw UsageError("unknown certificate kind '" + a.kind + "'");
  P["kind"] = a.kind;
  Certificate c;
  if (auto* gg = std::get_if<Graph>(&g)) {
    c = certify(*gg, *kind);
  } else {
    c = certify(std::get<Digraph>(g), *kind, rat(P, "eta", a.eta));
  }
  rep.j["verdict"] = c.satisfied ? "holds" : "fails";
  rep.j["result"] = {{"detail", c.detail}};
  if (c.failing_index) rep.j["witness"] = {{"failing_index", *c.failing_index}};
  return rep;
}

Report cmd_hamilton(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  int cap = cap_of(a, P, 20);
  auto h = std::visit([&](const auto& x) { return hamilton_oracle(x, cap); }, g);
  rep.j["verdict"] = h ? "found" : "none";
  if (h) rep.j["witness"] = {{"cycle", h->order}};
  return rep;
}

const char* status_name(OrientedStatus s) {
  switch (s) {
    case OrientedStatus::Found: return "found";
    case OrientedStatus::None: return "none";
    case OrientedStatus::Impossible: return "impossible";
  }
  return "?";
}

std::string word_of(const Args& a, int n, json& P) {
  std::string w = a.word == "alternating" || a.word.empty() ? alternating_word(n) : a.word;
  P["word"] = w;
  return w;
}

Report cmd_oriented_hamilton(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph D = need_digraph(load(a));
  int cap = cap_of(a, P, 16);
  std::string w = word_of(a, D.n(), P);
  OrientedResult r = oriented_hamilton_oracle(D, w, cap);
  rep.j["verdict"] = status_name(r.status);
  if (r.status == OrientedStatus::Found) rep.j["witness"] = {{"cycle", r.order}, {"rotation", r.rotation}};
  rep.j["result"] = {{"neutral_pairs_word", neutral_pairs_cycle(w)}};
  return rep;
}

Report cmd_oriented_path(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph D = need_digraph(load(a));
  int cap = cap_of(a, P, 16);
  P["x"] = a.x;
  P["y"] = a.y;
  if (a.word.empty()) throw UsageError("--word is required");
  P["word"] = a.word;
  auto path = find_oriented_path(D, a.x, a.y, a.word, cap);
  rep.j["verdict"] = path ? "found" : "none";
  if (path) rep.j["witness"] = {{"path", *path}};
  return rep;
}

Report cmd_matching(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Graph g = need_graph(load(a));
  VertexSet A = parse_vertex_set(a.left, g.n()), B = parse_vertex_set(a.right, g.n());
  if (A.intersects(B)) throw UsageError("--left and --right overlap");
  P["left"] = format_vertex_set(A);
  P["right"] = format_vertex_set(B);
  std::vector<int> am = A.members(), bm = B.members(), bindex(g.n(), -1);
  for (std::size_t i = 0; i < bm.size(); ++i) bindex[bm[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < am.size(); ++i)
    for (int v : g.neighbours(am[i]).members())
      if (bindex[v] >= 0) edges.emplace_back(static_cast<int>(i), bindex[v]);
  MatchingResult m = bipartite_matching(static_cast<int>(am.size()), static_cast<int>(bm.size()), edges);
  json pairs = json::array();
  for (std::size_t i = 0; i < am.size(); ++i)
    if (m.match_a[i] >= 0) pairs.push_back(json::array({am[i], bm[m.match_a[i]]}));
  rep.j["verdict"] = m.saturating ? "found" : "none";
  rep.j["result"] = {{"size", m.size}, {"matching", pairs}};
  if (m.violator) {
    VertexSet s(g.n());
    for (int i : *m.violator) s.insert(am[i]);
    rep.j["witness"] = {{"hall_violator", format_vertex_set(s)}};
  }
  return rep;
}

Report cmd_one_factor(const Args& a) {
  Report rep;
  const Digraph D = need_digraph(load(a));
  OneFactorResult r = one_factor(D);
  rep.j["verdict"] = r.factor ? "found" : "none";
  if (r.factor) rep.j["witness"] = {{"cycles", r.factor->cycles}};
  if (r.violator) rep.j["witness"] = {{"hall_violator", *r.violator}};
  return rep;
}

Report cmd_rotation_hamilton(const Args& a) {
  Report rep;
  const Digraph D = need_digraph(load(a));
  RotationResult r = rotation_extension_hamilton(D);
  rep.j["verdict"] = r.cycle ? "found" : "none";
  rep.j["result"] = {{"closures", r.closures}, {"case1", r.case1}, {"case2", r.case2}};
  if (r.cycle) {
    rep.j["witness"] = {{"cycle", r.cycle->order}};
    rep.j["audit"] = {{"is_hamilton_cycle", is_hamilton_cycle(D, r.cycle->order)}};
  } else {
    rep.j["result"]["failed_step"] = r.failed_step;
  }
  return rep;
}

Report cmd_expander(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph D = need_digraph(load(a));
  ExpansionSpec spec;
  spec.nu = rat(P, "nu", a.nu);
  spec.tau = rat(P, "tau", a.tau);
  std::string mode = a.mode.empty() ? "out" : a.mode;
  if (mode == "out") spec.mode = ExpansionMode::Out;
  else if (mode == "in") spec.mode = ExpansionMode::In;
  else if (mode == "di") spec.mode = ExpansionMode::Di;
  else throw UsageError("--mode must be out, in or di");
  P["mode"] = mode;
  ExpanderOptions opt;
  opt.cap = cap_of(a, P, 18);
  opt.sampled = a.sampled;
  P["sampled"] = a.sampled;
  if (a.sampled) {
    opt.seed = seed_of(a, rep);
    opt.trials = a.trials > 0 ? a.trials : 2000;
    P["trials"] = opt.trials;
  }
  ExpansionVerdict v = check_expander(D, spec, opt);
  rep.j["verdict"] = v.holds ? "holds" : "fails";
  rep.j["result"] = {{"checked", v.checked}, {"exhaustive", v.exhaustive}};
  if (v.violator)
    rep.j["witness"] = {{"violator", format_vertex_set(*v.violator)},
                        {"direction", v.direction == Direction::Out ? "out" : "in"}};
  return rep;
}

Report cmd_rn(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph D = need_digraph(load(a));
  VertexSet S = parse_vertex_set(a.set, D.n());
  P["set"] = format_vertex_set(S);
  Rational nu = rat(P, "nu", a.nu);
  if (a.dir != "out" && a.dir != "in") throw UsageError("--dir must be out or in");
  P["dir"] = a.dir;
  VertexSet rn = robust_neighbourhood(D, S, nu, a.dir == "out" ? Direction::Out : Direction::In);
  rep.j["verdict"] = "ok";
  rep.j["result"] = {{"neighbourhood", format_vertex_set(rn)}, {"size", rn.size()}};
  return rep;
}

FactorContext factor_context(const Args& a, const Digraph& R, json& P) {
  if (a.successor.empty()) return context_from_one_factor(R);
  std::vector<int> succ = parse_int_list(a.successor);
  P["successor"] = succ;
  return make_context(R, succ);
}

Report cmd_shifted_walk(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph R = need_digraph(load(a));
  FactorContext ctx = factor_context(a, R, P);
  VertexSet avoid = parse_vertex_set(a.avoid, R.n());
  P["a"] = a.a;
  P["b"] = a.b;
  P["avoid"] = format_vertex_set(avoid);
  int tmax = a.tmax >= 0 ? a.tmax : R.n();
  P["tmax"] = tmax;
  auto w = find_shifted_walk(ctx, a.a, a.b, avoid, tmax);
  rep.j["verdict"] = w ? "found" : "none";
  rep.j["result"] = {{"factor_cycles", ctx.cycle_count}};
  if (w) {
    WalkAudit au = audit_shifted_walk(ctx, *w, a.a, a.b, avoid);
    rep.j["witness"] = {{"entries", w->entries}, {"exits", w->exits}, {"walk", expand_walk(ctx, *w)}};
    rep.j["audit"] = {{"hops_are_edges", au.hops_are_edges},       {"exits_are_predecessors", au.exits_are_predecessors},
                      {"unique_entries", au.unique_entries},       {"unique_exits", au.unique_exits},
                      {"avoids_internally", au.avoids_internally}, {"equal_visits", au.equal_visits}};
  }
  return rep;
}

Report cmd_skewed_traverse(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph R = need_digraph(load(a));
  FactorContext ctx = factor_context(a, R, P);
  P["a"] = a.a;
  P["b"] = a.b;
  auto t = find_skewed_traverse(ctx, a.a, a.b);
  rep.j["verdict"] = t ? "found" : "none";
  if (t) {
    rep.j["witness"] = {{"edges", pairs_json(t->edges)}, {"length", t->length()}};
    rep.j["audit"] = {{"traverse_ok", audit_skewed_traverse(ctx, *t, a.a, a.b)}};
  }
  return rep;
}

json step_json(const RebalanceStep& s) {
  json j = {{"over", s.over}, {"under", s.under}, {"after", s.after.a}, {"consumed", s.consumed}};
  if (s.traverse) j["traverse"] = pairs_json(s.traverse->edges);
  if (!s.replacement.empty()) {
    j["replacement"] = s.replacement;
    j["copies_replaced"] = s.copies_replaced;
  }
  return j;
}

Report cmd_rebalance(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Digraph R = need_digraph(load(a));
  FactorContext ctx = factor_context(a, R, P);
  ClusterAssignment as;
  for (int v : parse_int_list(a.counts)) as.a.push_back(v);
  for (int v : parse_int_list(a.slots)) as.neutral_slots.push_back(v);
  as.m = a.m;
  P["counts"] = as.a;
  P["slots"] = as.neutral_slots;
  P["m"] = as.m;
  std::string mode = a.mode.empty() ? "traverse" : a.mode;
  if (mode != "traverse" && mode != "walk") throw UsageError("--mode must be traverse or walk");
  P["mode"] = mode;
  RebalanceMode rm = mode == "walk" ? RebalanceMode::Walk : RebalanceMode::Traverse;
  json steps = json::array();
  ClusterAssignment final_state = as;
  if (a.over >= 0 || a.under >= 0) {
    P["over"] = a.over;
    P["under"] = a.under;
    RebalanceStep s = rebalance(as, ctx, a.over, a.under, rm);
    steps.push_back(step_json(s));
    final_state = s.after;
  } else {
    for (const auto& s : balance(as, ctx, rm)) {
      steps.push_back(step_json(s));
      final_state = s.after;
    }
  }
  rep.j["verdict"] = final_state.balanced() ? "holds" : "fails";
  rep.j["result"] = {{"steps", steps}, {"final", final_state.a}};
  return rep;
}

Report cmd_ex_number(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  Graph h = pattern_graph(a, P);
  P["n"] = a.n;
  int cap = cap_of(a, P, 8);
  ExtremalResult r = extremal_number(a.n, h, cap);
  rep.j["verdict"] = "ok";
  rep.j["result"] = {{"value", r.value}, {"extremal_count", r.extremal_count}};
  rep.j["witness"] = {{"edges", pairs_json(r.witness.edges())}};
  return rep;
}

Report cmd_ramsey(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  Graph h = pattern_graph(a, P);
  P["nmax"] = a.nmax;
  RamseyResult r = ramsey_oracle(h, a.nmax);
  rep.j["verdict"] = r.value ? "found" : "none";
  rep.j["result"] = {{"largest_avoiding", r.largest_avoiding}};
  if (r.value) rep.j["result"]["value"] = *r.value;
  rep.j["witness"] = {{"n", r.certificate.n()}, {"colour_class", pairs_json(r.certificate.edges())}};
  return rep;
}

Report cmd_packing(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Graph g = need_graph(load(a));
  Graph f = pattern_graph(a, P);
  if (a.packing != "perfect" && a.packing != "maximum") throw UsageError("--packing must be perfect or maximum");
  P["packing"] = a.packing;
  int cap = cap_of(a, P, 18);
  PackingResult r = packing_oracle(g, f, a.packing == "perfect" ? PackingMode::Perfect : PackingMode::Maximum, cap);
  json copies = json::array();
  for (const auto& e : r.copies) copies.push_back(e.map);
  rep.j["verdict"] = r.perfect ? "found" : "none";
  rep.j["result"] = {{"copies", r.copies.size()}};
  rep.j["witness"] = {{"copies", copies}};
  return rep;
}

Report cmd_embed(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  const Graph g = need_graph(load(a));
  Graph h = pattern_graph(a, P);
  Rational eps = rat(P, "eps", a.eps);
  Rational d = rat(P, "d", a.d);
  Partition part;
  Graph pure = g;
  if (!a.clusters.empty()) {
    std::string text = a.clusters;
    std::size_t start = 0;
    VertexSet used(g.n());
    while (start <= text.size()) {
      auto semi = text.find(';', start);
      std::string item = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
      VertexSet c = parse_vertex_set(item, g.n());
      if (!c.empty()) {
        part.classes.push_back(c);
        used |= c;
      }
      if (semi == std::string::npos) break;
      start = semi + 1;
    }
    std::vector<int> bal;
    for (int i = 0; i < part.size(); ++i) bal.push_back(i);
    part.balancing = bal;
    VertexSet rest(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (!used.contains(v)) rest.insert(v);
    part.classes.push_back(rest);
    part.exceptional = part.size() - 1;
    part.validate(g.n());
    P["clusters"] = sets_json(std::vector<VertexSet>(part.classes.begin(), part.classes.end() - 1));
  } else {
    Rational e2, d2;
    auto df = run_degree_form(g, a, rep, e2, d2);
    part = df.partition;
    pure = df.pure;
  }
  ReducedGraph<Graph> red = reduced_graph(pure, part, eps, d, partition_options(a, rep));
  std::vector<int> sigma = parse_int_list(a.sigma);
  P["sigma"] = sigma;
  P["s"] = a.s;
  GreedyResult r = greedy_embed(h, pure, part, red, sigma, a.s);
  rep.j["verdict"] = r.embedding ? "found" : "none";
  rep.j["result"] = {{"candidate_sizes", r.candidate_sizes}, {"reduced_edges", pairs_json(red.r.edges())}};
  rep.j["audit"] = {{"counting_bound_held", r.counting_bound_held}};
  if (r.embedding) rep.j["witness"] = {{"map", r.embedding->map}};
  else rep.j["witness"] = {{"failed_step", r.failed_step}};
  return rep;
}

Report cmd_oracle_embed(const Args& a) {
  Report rep;
  json& P = rep.j["parameters"];
  AnyGraph g = load(a);
  int cap = cap_of(a, P, 10);
  std::optional<Embedding> e;
  if (auto* gg = std::get_if<Graph>(&g)) {
    e = subgraph_oracle(pattern_graph(a, P), *gg, cap);
  } else {
    if (a.pattern.empty()) throw UsageError("a digraph host needs a --pattern digraph file");
    P["pattern"] = a.pattern;
    e = subgraph_oracle(need_digraph(read_graph_file(a.pattern)), std::get<Digraph>(g), cap);
  }
  rep.j["verdict"] = e ? "found" : "none";
  if (e) rep.j["witness"] = {{"map", e->map}};
  return rep;
}

// --------------------------------------------------------------- self-tests

struct Fixture {
  Args args;
  std::string expect;
  std::function<bool(const json&)> extra;  // optional further check
};

Args with_graph(AnyGraph g) {
  Args a;
  a.graph = std::move(g);
  return a;
}

std::map<std::string, Fixture> fixtures() {
  std::map<std::string, Fixture> f;
  {
    Args a;
    a.family = "haggkvist";
    a.m = 3;
    f["construct"] = {a, "ok", [](const json& j) {
                        return j["result"]["n"] == 15 && j["result"]["min_semidegree"] == 5;
                      }};
  }
  Graph chv = chvatal_extremal(8, 3);
  {
    Args a = with_graph(chv);
    a.left = "0-2";
    a.right = "5-7";
    f["density"] = {a, "ok", [](const json& j) { return j["result"]["density"] == "1/1"; }};
  }
  {
    Args a = with_graph(chv);
    a.left = "0-2";
    a.right = "5-7";
    a.eps = "1/4";
    f["check-regular"] = {a, "holds", nullptr};
    a.d = "1/2";
    f["check-superregular"] = {a, "holds", nullptr};
  }
  {
    Args a = with_graph(complete_graph(12));
    a.eps = "1/4";
    a.k0 = 2;
    f["partition"] = {a, "holds", [](const json& j) { return j["result"]["iterations"] == 0; }};
    a.d = "1/10";
    f["degree-form"] = {a, "holds", nullptr};
    f["reduce"] = {a, "holds", nullptr};
  }
  {
    Args a = with_graph(chv);
    a.kind = "chvatal";
    f["certify"] = {a, "fails", [](const json& j) { return j["witness"]["failing_index"] == 3; }};
    f["hamilton"] = {with_graph(chv), "none", nullptr};
  }
  {
    Args a = with_graph(antidirected_counterexample(1));
    a.word = "alternating";
    f["oriented-hamilton"] = {a, "none", nullptr};
  }
  {
    Args a = with_graph(complete_digraph(4));
    a.x = 0;
    a.y = 3;
    a.word = "fbf";
    f["oriented-path"] = {a, "found", nullptr};
  }
  {
    Args a = with_graph(complete_bipartite(3, 3));
    a.left = "0-2";
    a.right = "3-5";
    f["matching"] = {a, "found", nullptr};
  }
  f["one-factor"] = {with_graph(haggkvist_graph(3)), "none", nullptr};
  f["rotation-hamilton"] = {with_graph(complete_digraph(6)), "found", nullptr};
  {
    Args a = with_graph(complete_digraph(10));
    a.nu = "1/10";
    a.tau = "1/5";
    a.mode = "out";
    f["expander"] = {a, "holds", nullptr};
    Args b = with_graph(directed_cycle(8));
    b.set = "0-3";
    b.nu = "1/8";
    f["rn"] = {b, "ok", [](const json& j) { return j["result"]["neighbourhood"] == "1-4"; }};
  }
  {
    Args a = with_graph(complete_digraph(5));
    a.successor = "1,2,3,4,0";
    a.a = 1;
    a.b = 3;
    f["shifted-walk"] = {a, "found", nullptr};
    f["skewed-traverse"] = {a, "found", nullptr};
    Args b = with_graph(complete_digraph(5));
    b.successor = "1,2,3,4,0";
    b.counts = "11,10,9,10,10";
    b.slots = "5,5,5,5,5";
    b.m = 10;
    f["rebalance"] = {b, "holds", nullptr};
  }
  {
    Args a;
    a.h = "K3";
    a.n = 6;
    f["ex-number"] = {a, "ok", [](const json& j) { return j["result"]["value"] == 9; }};
    Args b;
    b.h = "K3";
    f["ramsey"] = {b, "found", [](const json& j) {
                     return j["result"]["value"] == 6 && j["witness"]["n"] == 5;
                   }};
  }
  {
    Args a = with_graph(c6_sharpness_graph(12));
    a.h = "C6";
    f["packing"] = {a, "none", nullptr};
  }
  {
    Args a = with_graph(blow_up(complete_graph(3), 10));
    a.h = "K3";
    a.clusters = "0-9;10-19;20-29";
    a.eps = "1/50";
    a.d = "1/2";
    a.sigma = "0,1,2";
    a.s = 1;
    f["embed"] = {a, "found", nullptr};
    Args b = with_graph(cycle_graph(5));
    b.h = "K3";
    f["oracle-embed"] = {b, "none", nullptr};
  }
  return f;
}

using Handler = Report (*)(const Args&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h = {
      {"construct", cmd_construct},
      {"density", cmd_density},
      {"check-regular", cmd_check_regular},
      {"check-superregular", cmd_check_superregular},
      {"partition", cmd_partition},
      {"degree-form", cmd_degree_form},
      {"reduce", cmd_reduce},
      {"certify", cmd_certify},
      {"hamilton", cmd_hamilton},
      {"oriented-hamilton", cmd_oriented_hamilton},
      {"oriented-path", cmd_oriented_path},
      {"matching", cmd_matching},
      {"one-factor", cmd_one_factor},
      {"rotation-hamilton", cmd_rotation_hamilton},
      {"expander", cmd_expander},
      {"rn", cmd_rn},
      {"shifted-walk", cmd_shifted_walk},
      {"skewed-traverse", cmd_skewed_traverse},
      {"rebalance", cmd_rebalance},
      {"ex-number", cmd_ex_number},
      {"ramsey", cmd_ramsey},
      {"packing", cmd_packing},
      {"embed", cmd_embed},
      {"oracle-embed", cmd_oracle_embed},
  };
  return h;
}

int run_selftest(const std::string& name, Handler h) {
  auto all = fixtures();
  auto it = all.find(name);
  if (it == all.end()) {
    std::cerr << "no self-test for " << name << "\n";
    return 1;
  }
  Report rep = h(it->second.args);
  bool ok = rep.j.value("verdict", "") == it->second.expect;
  if (ok && it->second.extra) ok = it->second.extra(rep.j);
  json out = {{"command", name}, {"selftest", ok ? "pass" : "fail"}, {"verdict", rep.j["verdict"]}};
  std::cout << out.dump(2) << "\n";
  return ok ? 0 : 1;
}

void add_options(CLI::App* sub, Args& a, const std::string& name) {
  if (name == "construct") sub->add_option("family", a.family, "graph family");
  else sub->add_option("file", a.graph_path, "graph file");
  sub->add_option("--graph", a.graph_path, "graph file");
  sub->add_option("--seed", a.seed, "random seed");
  sub->add_option("--cap", a.cap, "exhaustive-search cap");
  sub->add_option("--expect", a.expect, "expected verdict")->check(CLI::IsMember({"holds", "fails", "found", "none"}));
  sub->add_flag("--selftest", a.selftest, "run the built-in fixture");
  sub->add_flag("--timing", a.timing, "include runtime_ms in the report");
  sub->add_option("-o,--output", a.out, name == "construct" ? "graph output file" : "report output file");

  auto opt = [&](const char* flag, auto& target, const char* help) { sub->add_option(flag, target, help); };
  if (name == "construct") {
    opt("--n", a.n, "order");
    opt("--r", a.r, "family parameter r");
    opt("--m", a.m, "family parameter m");
    opt("--a", a.a, "first side size");
    opt("--b", a.b, "second side size");
    opt("--p", a.p, "edge probability");
    opt("--s", a.s, "blow-up factor");
  }
  if (name == "density" || name == "check-regular" || name == "check-superregular" || name == "matching") {
    opt("--left", a.left, "vertex set A");
    opt("--right", a.right, "vertex set B");
  }
  if (name == "check-regular" || name == "check-superregular" || name == "expander") {
    sub->add_flag("--sampled", a.sampled, "sample subsets instead of enumerating");
    opt("--trials", a.trials, "sample count");
  }
  if (name == "check-regular" || name == "check-superregular" || name == "partition" || name == "degree-form" ||
      name == "reduce" || name == "embed")
    opt("--eps", a.eps, "epsilon");
  if (name == "check-regular" || name == "check-superregular" || name == "degree-form" || name == "reduce" ||
      name == "embed")
    opt("--d", a.d, "density threshold");
  if (name == "partition" || name == "degree-form" || name == "reduce" || name == "embed") {
    opt("--k0", a.k0, "minimum cluster count");
    opt("--trials", a.trials, "samples per large pair");
  }
  if (name == "degree-form" || name == "reduce" || name == "embed") {
    opt("--inner-eps", a.inner_eps, "inner regularity epsilon");
    opt("--inner-k0", a.inner_k0, "inner minimum cluster count");
  }
  if (name == "degree-form") opt("--pure-out", a.pure_out, "write the pure graph");
  if (name == "reduce") opt("--r-out", a.r_out, "write the reduced graph");
  if (name == "certify") {
    opt("--kind", a.kind, "dirac, posa, chvatal, ghouila-houri, nash-williams or robdegseq");
    opt("--eta", a.eta, "eta for robdegseq");
  }
  if (name == "oriented-hamilton" || name == "oriented-path") opt("--word", a.word, "direction word over f,b");
  if (name == "oriented-path") {
    opt("--x", a.x, "start vertex");
    opt("--y", a.y, "end vertex");
  }
  if (name == "expander" || name == "rn") opt("--nu", a.nu, "nu");
  if (name == "expander") {
    opt("--tau", a.tau, "tau");
    opt("--mode", a.mode, "out, in or di");
  }
  if (name == "rn") {
    opt("--set", a.set, "vertex set S");
    opt("--dir", a.dir, "out or in");
  }
  if (name == "shifted-walk" || name == "skewed-traverse" || name == "rebalance")
    opt("--successor", a.successor, "1-factor successor list");
  if (name == "shifted-walk" || name == "skewed-traverse") {
    opt("--a", a.a, "start cluster");
    opt("--b", a.b, "end cluster");
  }
  if (name == "shifted-walk") {
    opt("--avoid", a.avoid, "clusters to avoid internally");
    opt("--tmax", a.tmax, "maximum number of cycle traversals");
  }
  if (name == "rebalance") {
    opt("--counts", a.counts, "vertices assigned per cluster");
    opt("--slots", a.slots, "neutral slots per cluster");
    opt("--m", a.m, "target per cluster");
    opt("--mode", a.mode, "traverse or walk");
    opt("--over", a.over, "overloaded cluster (single step)");
    opt("--under", a.under, "underloaded cluster (single step)");
  }
  if (name == "ex-number" || name == "ramsey" || name == "packing" || name == "embed" || name == "oracle-embed") {
    opt("--shape", a.h, "named pattern: K<n>, C<n>, P<n>, K<a>,<b> or petersen");
    opt("--pattern", a.pattern, "pattern graph file");
  }
  if (name == "ex-number") opt("--n", a.n, "host order");
  if (name == "ramsey") opt("--nmax", a.nmax, "largest order searched");
  if (name == "packing") opt("--packing", a.packing, "perfect or maximum");
  if (name == "embed") {
    opt("--clusters", a.clusters, "clusters separated by ';'");
    opt("--sigma", a.sigma, "cluster of each pattern vertex");
    opt("--s", a.s, "per-cluster load bound");
  }
}

std::optional<int> threads_from_env() {
  const char* env = std::getenv("REG_LAB_THREADS");
  if (!env) return std::nullopt;
  std::string s(env);
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("REG_LAB_THREADS must be a positive integer");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reglab: regularity, embedding and Hamiltonicity experiments"};
  app.require_subcommand(1);
  Args args;
  std::vector<std::pair<CLI::App*, Handler>> subs;
  for (const auto& [name, h] : handlers()) {
    CLI::App* sub = app.add_subcommand(name, name);
    add_options(sub, args, name);
    subs.emplace_back(sub, h);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = nullptr;
  Handler handler = nullptr;
  for (auto [sub, h] : subs)
    if (sub->parsed()) {
      chosen = sub;
      handler = h;
    }
  const std::string name = chosen->get_name();

  try {
    std::optional<int> threads = threads_from_env();
    if (args.selftest) return run_selftest(name, handler);

    auto t0 = std::chrono::steady_clock::now();
    Report rep = handler(args);
    auto t1 = std::chrono::steady_clock::now();
    rep.j["command"] = name;
    if (!rep.j.contains("parameters")) rep.j["parameters"] = json::object();
    if (!args.graph_path.empty()) rep.j["parameters"]["graph"] = args.graph_path;
    if (threads) rep.j["parameters"]["threads"] = *threads;
    if (args.timing)
      rep.j["runtime_ms"] = std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (name == "construct") {
      if (args.out.empty()) {
        std::cout << rep.graph_text;
      } else {
        write_text_file(args.out, rep.graph_text);
        std::cout << rep.j.dump(2) << "\n";
      }
    } else {
      std::string text = rep.j.dump(2) + "\n";
      if (args.out.empty()) std::cout << text;
      else write_text_file(args.out, text);
    }
    if (!args.expect.empty() && rep.j.value("verdict", "") != args.expect) return 1;
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
