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


#include "reglab/szemeredi.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <type_traits>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

template <typename G>
constexpr bool kDirected = std::is_same_v<G, Digraph>;

const VertexSet& outs(const Graph& g, int v) { return g.neighbours(v); }
const VertexSet& outs(const Digraph& g, int v) { return g.out(v); }
const VertexSet& ins(const Graph& g, int v) { return g.neighbours(v); }
const VertexSet& ins(const Digraph& g, int v) { return g.in(v); }

mpq_class to_mpq(const Rational& r) {
  mpq_class q(mpz_class(static_cast<long>(r.num())), mpz_class(static_cast<long>(r.den())));
  q.canonicalize();
  return q;
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix(mix(mix(base ^ mix(a)) ^ mix(b + 1)) ^ mix(c + 2));
}

CheckOptions pair_options(const PartitionOptions& opt, int sa, int sb, std::uint64_t seed) {
  CheckOptions co;
  co.cap = opt.cap;
  co.trials = opt.trials;
  co.sampled = std::max(sa, sb) > opt.cap;
  co.seed = seed;
  return co;
}

std::vector<int> class_of(const Partition& p, int n) {
  std::vector<int> cls(n, -1);
  for (int i = 0; i < p.size(); ++i) p.classes[i].for_each([&](int v) { cls[v] = i; });
  return cls;
}

template <typename G>
EnergyReport energy_impl(const G& g, const Partition& p) {
  const int n = g.n();
  p.validate(n);
  const int k = p.size();
  std::vector<int> cls = class_of(p, n);
  std::vector<std::vector<long>> e(k, std::vector<long>(k, 0));
  for (int u = 0; u < n; ++u) outs(g, u).for_each([&](int v) { ++e[cls[u]][cls[v]]; });

  EnergyReport rep;
  rep.class_count = k;
  rep.densities.assign(k, std::vector<Rational>(k, Rational(0)));
  std::map<long, mpz_class> by_den;
  for (int i = 0; i < k; ++i) {
    long si = p.classes[i].size();
    if (si == 0) continue;
    for (int j = 0; j < k; ++j) {
      long sj = p.classes[j].size();
      if (sj == 0) continue;
      rep.densities[i][j] = Rational(e[i][j], si * sj);
      if (e[i][j] == 0) continue;
      mpz_class sq(e[i][j]);
      by_den[si * sj] += sq * sq;
    }
  }
  rep.value = 0;
  for (auto& [den, num] : by_den) {
    mpq_class term(num, mpz_class(den));
    term.canonicalize();
    rep.value += term;
  }
  return rep;
}

Partition balance_unchecked(const Partition& p, const Rational& eps, int n) {
  int parts = 0;
  for (const auto& c : p.classes)
    if (!c.empty()) ++parts;
  if (parts == 0) throw DomainError("empty partition");
  Rational tr(eps.num() * n, eps.den() * parts);
  int t = static_cast<int>(std::max<std::int64_t>(1, tr.ceil()));
  Partition q;
  std::vector<int> bal;
  for (const auto& c : p.classes) {
    std::vector<int> mem = c.members();
    for (std::size_t s = 0; s < mem.size(); s += t) {
      std::size_t e = std::min(mem.size(), s + t);
      q.classes.emplace_back(n, std::vector<int>(mem.begin() + s, mem.begin() + e));
      if (static_cast<int>(e - s) == t) bal.push_back(q.size() - 1);
    }
  }
  if (!bal.empty()) q.balancing = bal;
  return q;
}

template <typename G>
WitnessRefinement refine_impl(const G& g, const Partition& p, const std::vector<PairWitness>& ws,
                              const Rational& eps, bool check) {
  const int n = g.n();
  p.validate(n);
  const int k = p.size();
  if (check) {
    if (eps <= Rational(0) || eps >= Rational(1)) throw DomainError("epsilon outside (0,1)");
    std::set<std::pair<int, int>> seen;
    for (const auto& w : ws) {
      if (w.i < 0 || w.j < 0 || w.i >= k || w.j >= k || w.i == w.j)
        throw PreconditionError("invalid witness: bad class indices");
      const VertexSet& ci = p.classes[w.i];
      const VertexSet& cj = p.classes[w.j];
      if (w.x.universe() != n || w.y.universe() != n || w.x.empty() || w.y.empty() || !w.x.subset_of(ci) ||
          !w.y.subset_of(cj))
        throw PreconditionError("invalid witness: sets not inside their classes");
      if (!eps.le_count(w.x.size(), ci.size()) || !eps.le_count(w.y.size(), cj.size()))
        throw PreconditionError("invalid witness: sets too small");
      if (abs(density(g, w.x, w.y) - density(g, ci, cj)) < eps)
        throw PreconditionError("invalid witness: deviation below epsilon");
      std::pair<int, int> key = kDirected<G> ? std::make_pair(w.i, w.j) : std::make_pair(std::min(w.i, w.j), std::max(w.i, w.j));
      if (!seen.insert(key).second) throw PreconditionError("invalid witness: repeated pair");
    }
  }

  std::vector<std::vector<const VertexSet*>> cuts(k);
  for (const auto& w : ws) {
    cuts[w.i].push_back(&w.x);
    cuts[w.j].push_back(&w.y);
  }
  WitnessRefinement out;
  for (int c = 0; c < k; ++c) {
    if (cuts[c].empty()) {
      out.refined.classes.push_back(p.classes[c]);
      continue;
    }
    std::map<std::vector<std::uint64_t>, int> atom_of;
    std::vector<VertexSet> atoms;
    p.classes[c].for_each([&](int v) {
      std::vector<std::uint64_t> sig((cuts[c].size() + 63) / 64, 0);
      for (std::size_t s = 0; s < cuts[c].size(); ++s)
        if (cuts[c][s]->contains(v)) sig[s >> 6] |= std::uint64_t{1} << (s & 63);
      auto [it, fresh] = atom_of.emplace(sig, static_cast<int>(atoms.size()));
      if (fresh) atoms.emplace_back(n);
      atoms[it->second].insert(v);
    });
    for (auto& a : atoms) out.refined.classes.push_back(std::move(a));
  }

  out.energy_before = energy_impl(g, p).value;
  out.energy_after = energy_impl(g, out.refined).value;
  out.gain = out.energy_after - out.energy_before;
  out.bound = 0;
  for (const auto& w : ws) {
    Rational dev = density(g, w.x, w.y) - density(g, p.classes[w.i], p.classes[w.j]);
    out.bound += mpq_class(static_cast<long>(w.x.size()) * w.y.size()) * to_mpq(dev * dev);
  }
  out.bound_holds = out.gain >= out.bound;
  return out;
}

struct GoodChoice {
  std::vector<int> classes;
  std::vector<std::pair<int, int>> irregular;  // in terms of partition class indices
};

template <typename G>
RegularityRun partition_impl(const G& g, const Rational& eps, int k0, const PartitionOptions& opt) {
  const int n = g.n();
  if (n < 1) throw Infeasible("empty graph");
  if (eps <= Rational(0) || eps > Rational(1, 2)) throw Infeasible("epsilon outside (0,1/2]");
  if (k0 < 1 || k0 > n) throw Infeasible("k0 outside [1,n]");
  if (eps.lt_count(n % k0, n)) throw Infeasible("n mod k0 exceeds eps n");

  RegularityRun run;
  run.seed = opt.seed;
  mpq_class e5 = to_mpq(eps);
  e5 = e5 * e5 * e5 * e5 * e5;
  mpz_class cap_z = mpz_class(4 * e5.get_den()) / e5.get_num();
  run.iteration_cap = cap_z.fits_slong_p() ? cap_z.get_si() : LONG_MAX;
  run.increment_threshold = e5 * n * n / 4;

  Partition p = equal_partition(n, k0);
  run.energy_trace.push_back(energy_impl(g, p).value);

  for (long it = 0;; ++it) {
    const int k = p.size();
    std::map<std::pair<int, int>, RegularityWitness> bad;
    std::vector<std::vector<char>> exact(k, std::vector<char>(k, 1));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j || (!kDirected<G> && j < i)) continue;
        const VertexSet& a = p.classes[i];
        const VertexSet& b = p.classes[j];
        CheckOptions co = pair_options(opt, a.size(), b.size(), derive_seed(opt.seed, it, i, j));
        RegularityVerdict v = check_pair_regular(g, PairSpec{a, b, eps, Rational(0)}, co);
        exact[i][j] = v.exhaustive;
        if (!v.holds) bad.emplace(std::make_pair(i, j), *v.witness);
      }
    }

    std::map<int, std::vector<int>> by_size;
    for (int i = 0; i < k; ++i) by_size[p.classes[i].size()].push_back(i);
    std::vector<std::pair<long, int>> cands;  // (-coverage, size)
    for (auto& [s, idx] : by_size) {
      long cover = static_cast<long>(s) * idx.size();
      if ((Rational(1) - eps).le_count(cover, n)) cands.emplace_back(-cover, s);
    }
    std::sort(cands.begin(), cands.end());
    std::optional<GoodChoice> good;
    for (auto [negcover, s] : cands) {
      const auto& idx = by_size[s];
      std::vector<char> in(k, 0);
      for (int i : idx) in[i] = 1;
      GoodChoice ch{idx, {}};
      for (auto& [key, w] : bad)
        if (in[key.first] && in[key.second]) ch.irregular.push_back(key);
      long c = static_cast<long>(idx.size());
      if (!eps.lt_count(static_cast<long>(ch.irregular.size()), c * c)) {
        good = std::move(ch);
        break;
      }
    }

    if (good) {
      run.raw = p;
      run.iterations = static_cast<int>(it);
      std::vector<int> pos(k, -1);
      Partition out;
      VertexSet v0(n);
      for (int i : good->classes) {
        pos[i] = out.size();
        out.classes.push_back(p.classes[i]);
      }
      for (int i = 0; i < k; ++i)
        if (pos[i] < 0) v0 |= p.classes[i];
      std::vector<int> bal(out.size());
      for (int i = 0; i < out.size(); ++i) bal[i] = i;
      out.balancing = bal;
      out.exceptional = out.size();
      out.classes.push_back(v0);
      for (auto [i, j] : good->irregular) run.irregular_pairs.emplace_back(pos[i], pos[j]);
      for (int i : good->classes)
        for (int j : good->classes)
          if (i != j && (kDirected<G> || i < j) && !exact[i][j]) run.exact = false;
      run.partition = std::move(out);
      return run;
    }
    if (it >= run.iteration_cap) throw Infeasible("iteration cap reached without a good partition");

    std::vector<PairWitness> ws;
    for (auto& [key, w] : bad) ws.push_back(PairWitness{key.first, key.second, w.x, w.y});
    WitnessRefinement wr = refine_impl(g, p, ws, eps, false);
    p = balance_unchecked(wr.refined, eps, n);
    mpq_class e = energy_impl(g, p).value;
    if (e - run.energy_trace.back() < run.increment_threshold) run.increments_ok = false;
    run.energy_trace.push_back(e);
  }
}

// Least k >= start with n mod k <= eps n; k = n always qualifies.
int inner_cluster_count(int n, int start, const Rational& eps) {
  int k = std::clamp(start, 1, n);
  while (k < n && eps.lt_count(n % k, n)) ++k;
  return k;
}

template <typename G>
long count_inside(const G& g, const VertexSet& s) {
  long c = 0;
  s.for_each([&](int v) { c += outs(g, v).intersection_size(s); });
  return kDirected<G> ? c : c / 2;
}

template <typename G>
DegreeFormAudit audit_impl(const G& g, const G& pure, const Partition& p, const Rational& eps, const Rational& d,
                           int k0, const PartitionOptions& opt) {
  const int n = g.n();
  if (pure.n() != n) throw DomainError("pure graph has a different order");
  p.validate(n);
  DegreeFormAudit a;
  std::vector<int> cl = p.cluster_indices();
  int v0 = p.exceptional ? p.classes[*p.exceptional].size() : 0;
  const int k = static_cast<int>(cl.size());
  a.exceptional_small = !eps.lt_count(v0, n) && k >= k0;

  a.equal_sizes = k >= 1;
  for (int i : cl)
    if (p.classes[i].size() != p.classes[cl[0]].size()) a.equal_sizes = false;

  Rational lim = d + eps;
  a.degree_loss = true;
  for (int v = 0; v < n; ++v) {
    if (!outs(pure, v).subset_of(outs(g, v))) {
      a.degree_loss = false;
      a.worst_vertex = v;
      break;
    }
    int loss = outs(g, v).size() - outs(pure, v).size();
    if constexpr (kDirected<G>) loss = std::max(loss, ins(g, v).size() - ins(pure, v).size());
    if (loss > a.worst_loss || a.worst_vertex < 0) {
      a.worst_loss = loss;
      a.worst_vertex = v;
    }
    if (lim.le_count(loss, n)) a.degree_loss = false;
  }

  a.clusters_empty = true;
  for (int i : cl)
    if (count_inside(pure, p.classes[i]) != 0) a.clusters_empty = false;

  a.pairs_regular = true;
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x == y || (!kDirected<G> && y < x)) continue;
      const VertexSet& vi = p.classes[cl[x]];
      const VertexSet& vj = p.classes[cl[y]];
      if (edges_between(pure, vi, vj) == 0) continue;
      bool ok = density(pure, vi, vj) > d;
      if (ok) {
        CheckOptions co = pair_options(opt, vi.size(), vj.size(), derive_seed(opt.seed, 0xa0d17, x, y));
        RegularityVerdict v = check_pair_regular(pure, PairSpec{vi, vj, eps, Rational(0)}, co);
        if (!v.exhaustive) a.pairs_exact = false;
        ok = v.holds;
      }
      if (!ok) {
        a.pairs_regular = false;
        a.failing_pairs.emplace_back(x, y);
      }
    }
  }
  return a;
}

template <typename G>
void remove_arc(G& g, int u, int v) {
  if (g.has_edge(u, v)) g.remove_edge(u, v);
}

template <typename G>
DegreeForm<G> degree_form_impl(const G& g, const Rational& eps, const Rational& d, int k0,
                               const DegreeFormOptions& opt) {
  const int n = g.n();
  if (eps <= Rational(0) || eps >= Rational(1)) throw DomainError("epsilon outside (0,1)");
  if (d <= Rational(0) || d >= Rational(1)) throw DomainError("d outside (0,1)");
  if (k0 < 1) throw DomainError("k0 must be positive");

  DegreeForm<G> out;
  out.inner_eps = opt.inner_eps ? *opt.inner_eps : std::min({eps / Rational(40), d / Rational(10), eps * eps * d});
  const Rational& ep = out.inner_eps;
  int start = opt.inner_k0 ? *opt.inner_k0 : std::max<int>(k0, static_cast<int>((Rational(10) / eps).ceil()));
  out.inner_k0 = inner_cluster_count(n, start, ep);
  out.inner = partition_impl(g, ep, out.inner_k0, opt.partition);

  const Partition& ip = out.inner.partition;
  const int k = ip.size() - 1;
  const int m = ip.classes[0].size();
  std::vector<VertexSet> cluster(ip.classes.begin(), ip.classes.begin() + k);
  VertexSet v0 = ip.classes[k];
  G pure = g;
  Rational tenth(eps.num(), eps.den() * 10);  // eps/10, compared against counts over n

  auto evict = [&](const std::vector<int>& cnt) {
    int moved = 0;
    for (int v = 0; v < n; ++v) {
      if (v0.contains(v) || !tenth.le_count(cnt[v], n)) continue;
      for (auto& c : cluster) c.erase(v);
      v0.insert(v);
      ++moved;
    }
    return moved;
  };
  // Arcs from a to b (both directions for graphs are the same edge).
  auto pair_edges = [&](const VertexSet& a, const VertexSet& b, auto&& f) {
    a.for_each([&](int u) { (outs(g, u) & b).for_each([&](int v) { f(u, v); }); });
  };

  // Step 1: edges of irregular pairs.
  std::vector<int> red(n, 0);
  for (auto [i, j] : out.inner.irregular_pairs)
    pair_edges(cluster[i], cluster[j], [&](int u, int v) { ++red[u], ++red[v]; });
  out.evicted_red = evict(red);
  for (auto [i, j] : out.inner.irregular_pairs)
    pair_edges(cluster[i], cluster[j], [&](int u, int v) { remove_arc(pure, u, v); });

  // Step 2: low-density pairs and the marking of excess neighbourhoods.
  Rational keep_r = (d + ep + ep) * Rational(m);
  const int keep = static_cast<int>(keep_r.floor());
  std::vector<std::pair<int, int>> blue;
  std::set<std::pair<int, int>> marked;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j || (!kDirected<G> && j < i)) continue;
      if (cluster[i].empty() || cluster[j].empty()) continue;
      if (density(g, cluster[i], cluster[j]) > d + ep) continue;
      blue.emplace_back(i, j);
      auto mark_side = [&](const VertexSet& side, const VertexSet& other, bool outward) {
        side.for_each([&](int x) {
          VertexSet nb = (outward ? outs(pure, x) : ins(pure, x)) & other;
          if (!keep_r.lt_count(nb.size(), 1)) return;
          std::vector<int> mem = nb.members();
          for (std::size_t t = keep; t < mem.size(); ++t) {
            auto e = outward ? std::make_pair(x, mem[t]) : std::make_pair(mem[t], x);
            if (!kDirected<G> && e.first > e.second) std::swap(e.first, e.second);
            marked.insert(e);
          }
        });
      };
      mark_side(cluster[i], cluster[j], true);
      mark_side(cluster[j], cluster[i], false);
    }
  }
  std::vector<int> mark_count(n, 0);
  for (auto [u, v] : marked) ++mark_count[u], ++mark_count[v];

  // Step 3.
  out.evicted_marked = evict(mark_count);
  for (auto [i, j] : blue)
    pair_edges(cluster[i], cluster[j], [&](int u, int v) { remove_arc(pure, u, v); });

  // Step 4.
  for (const auto& c : cluster)
    c.for_each([&](int u) { (outs(g, u) & c).for_each([&](int v) { remove_arc(pure, u, v); }); });

  // Step 5: equal subclusters of size ceil(eps n / (4k)).
  const int s = static_cast<int>(std::max<std::int64_t>(1, Rational(eps.num() * n, eps.den() * 4 * k).ceil()));
  Partition res;
  for (const auto& c : cluster) {
    std::vector<int> mem = c.members();
    std::size_t full = mem.size() / s * s;
    for (std::size_t t = 0; t < full; t += s)
      res.classes.emplace_back(n, std::vector<int>(mem.begin() + t, mem.begin() + t + s));
    for (std::size_t t = full; t < mem.size(); ++t) v0.insert(mem[t]);
  }
  std::vector<int> bal(res.size());
  for (int i = 0; i < res.size(); ++i) bal[i] = i;
  res.balancing = bal;
  res.exceptional = res.size();
  res.classes.push_back(v0);

  out.cluster_size = s;
  out.audit = audit_impl(g, pure, res, eps, d, k0, opt.partition);
  out.pure = std::move(pure);
  out.partition = std::move(res);
  return out;
}

template <typename G>
ReducedGraph<G> reduced_impl(const G& pure, const Partition& p, const Rational& eps, const Rational& d,
                             const PartitionOptions& opt) {
  const int n = pure.n();
  try {
    p.validate(n);
  } catch (const DomainError& e) {
    throw PreconditionError(std::string("mismatched partition: ") + e.what());
  }
  std::vector<int> cl = p.cluster_indices();
  if (cl.empty()) throw PreconditionError("mismatched partition: no clusters");
  const int k = static_cast<int>(cl.size());
  ReducedGraph<G> out{G(k), eps, d, pure, cl, true};
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < k; ++y) {
      if (x == y || (!kDirected<G> && y < x)) continue;
      const VertexSet& vi = p.classes[cl[x]];
      const VertexSet& vj = p.classes[cl[y]];
      Rational dens = density(pure, vi, vj);
      if (kDirected<G> ? dens < d : dens <= d) continue;
      CheckOptions co = pair_options(opt, vi.size(), vj.size(), derive_seed(opt.seed, 0x7ed, x, y));
      RegularityVerdict v = check_pair_regular(pure, PairSpec{vi, vj, eps, Rational(0)}, co);
      if (!v.exhaustive) out.exact = false;
      if (v.holds) out.r.add_edge(x, y);
    }
  }
  return out;
}

}  // namespace

std::vector<int> Partition::cluster_indices() const {
  if (balancing) return *balancing;
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (!exceptional || *exceptional != i) out.push_back(i);
  return out;
}

void Partition::validate(int n) const {
  VertexSet seen(n);
  int total = 0;
  for (int i = 0; i < size(); ++i) {
    const VertexSet& c = classes[i];
    if (c.universe() != n) throw DomainError("partition class over wrong universe");
    if (c.empty() && !(exceptional && *exceptional == i)) throw DomainError("empty partition class");
    if (c.intersects(seen)) throw DomainError("partition classes overlap");
    seen |= c;
    total += c.size();
  }
  if (total != n) throw DomainError("partition does not cover every vertex");
  if (exceptional && (*exceptional < 0 || *exceptional >= size())) throw DomainError("bad exceptional index");
  if (balancing) {
    for (int i : *balancing) {
      if (i < 0 || i >= size() || (exceptional && *exceptional == i)) throw DomainError("bad balancing index");
      if (classes[i].size() != classes[(*balancing)[0]].size()) throw DomainError("balancing classes differ in size");
    }
  }
}

Partition singleton_partition(int n) {
  Partition p;
  for (int v = 0; v < n; ++v) p.classes.emplace_back(n, std::vector<int>{v});
  return p;
}

Partition single_class_partition(int n) {
  Partition p;
  p.classes.push_back(VertexSet::full(n));
  return p;
}

Partition equal_partition(int n, int k) {
  if (k < 1 || k > n) throw DomainError("class count outside [1,n]");
  const int q = n / k;
  Partition p;
  for (int i = 0; i < k; ++i) p.classes.push_back(VertexSet::range(n, i * q, i * q + q - 1));
  if (n % k) p.classes.push_back(VertexSet::range(n, k * q, n - 1));
  std::vector<int> bal(k);
  for (int i = 0; i < k; ++i) bal[i] = i;
  p.balancing = bal;
  return p;
}

EnergyReport energy(const Graph& g, const Partition& p) { return energy_impl(g, p); }
EnergyReport energy(const Digraph& g, const Partition& p) { return energy_impl(g, p); }

Partition balance_refine(const Partition& p, const Rational& eps, int n) {
  if (eps <= Rational(0) || eps >= Rational(1)) throw PreconditionError("epsilon outside (0,1)");
  p.validate(n);
  int parts = 0;
  for (const auto& c : p.classes)
    if (!c.empty()) ++parts;
  if (parts < 1 || eps.lt_count(parts, n)) throw PreconditionError("need 1 <= |P| <= eps n");
  return balance_unchecked(p, eps, n);
}

WitnessRefinement witness_refine(const Graph& g, const Partition& p, const std::vector<PairWitness>& witnesses,
                                 const Rational& eps) {
  return refine_impl(g, p, witnesses, eps, true);
}
WitnessRefinement witness_refine(const Digraph& g, const Partition& p, const std::vector<PairWitness>& witnesses,
                                 const Rational& eps) {
  return refine_impl(g, p, witnesses, eps, true);
}

RegularityRun regularity_partition(const Graph& g, const Rational& eps, int k0, const PartitionOptions& opt) {
  return partition_impl(g, eps, k0, opt);
}
RegularityRun regularity_partition(const Digraph& g, const Rational& eps, int k0, const PartitionOptions& opt) {
  return partition_impl(g, eps, k0, opt);
}

DegreeForm<Graph> degree_form(const Graph& g, const Rational& eps, const Rational& d, int k0,
                              const DegreeFormOptions& opt) {
  return degree_form_impl(g, eps, d, k0, opt);
}
DegreeForm<Digraph> degree_form(const Digraph& g, const Rational& eps, const Rational& d, int k0,
                                const DegreeFormOptions& opt) {
  return degree_form_impl(g, eps, d, k0, opt);
}

DegreeFormAudit audit_degree_form(const Graph& g, const Graph& pure, const Partition& p, const Rational& eps,
                                  const Rational& d, int k0, const PartitionOptions& opt) {
  return audit_impl(g, pure, p, eps, d, k0, opt);
}
DegreeFormAudit audit_degree_form(const Digraph& g, const Digraph& pure, const Partition& p, const Rational& eps,
                                  const Rational& d, int k0, const PartitionOptions& opt) {
  return audit_impl(g, pure, p, eps, d, k0, opt);
}

ReducedGraph<Graph> reduced_graph(const Graph& pure, const Partition& p, const Rational& eps, const Rational& d,
                                  const PartitionOptions& opt) {
  return reduced_impl(pure, p, eps, d, opt);
}
ReducedGraph<Digraph> reduced_graph(const Digraph& pure, const Partition& p, const Rational& eps, const Rational& d,
                                    const PartitionOptions& opt) {
  return reduced_impl(pure, p, eps, d, opt);
}

MindegAudit mindeg_audit(const Graph& g, const ReducedGraph<Graph>& r) {
  MindegAudit a;
  a.c = Rational(g.min_degree(), g.n());
  a.applicable = r.eps * Rational(2) <= r.d && r.d * Rational(2) <= a.c;
  a.min_degree_r = r.r.n() ? r.r.min_degree() : 0;
  a.holds = (a.c - r.d * Rational(2)).le_count(a.min_degree_r, r.r.n());
  return a;
}

Superregularized superregularize_path(const Graph& pure, const Partition& p,
                                      const std::vector<std::pair<int, int>>& edges, const Rational& eps,
                                      const Rational& d, const PartitionOptions& opt) {
  const int n = pure.n();
  p.validate(n);
  std::vector<int> cl = p.cluster_indices();
  const int k = static_cast<int>(cl.size());
  if (k == 0) throw PreconditionError("no clusters");
  const int m = p.classes[cl[0]].size();
  for (int i : cl)
    if (p.classes[i].size() != m) throw PreconditionError("clusters differ in size");
  if (eps <= Rational(0) || eps >= Rational(1)) throw DomainError("epsilon outside (0,1)");

  std::vector<int> deg(k, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= k || j >= k || i == j) throw PreconditionError("edge outside the cluster range");
    if (!seen.insert({std::min(i, j), std::max(i, j)}).second) throw PreconditionError("repeated edge");
    ++deg[i], ++deg[j];
  }
  Superregularized out;
  out.max_degree = edges.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  if (out.max_degree > 4) throw PreconditionError("maximum degree above 4");

  for (auto [i, j] : edges) {
    const VertexSet& a = p.classes[cl[i]];
    const VertexSet& b = p.classes[cl[j]];
    if (density(pure, a, b) <= d) throw PreconditionError("selected pair has density <= d");
    CheckOptions co = pair_options(opt, m, m, derive_seed(opt.seed, 0x5e9, i, j));
    if (!check_pair_regular(pure, PairSpec{a, b, eps, Rational(0)}, co).holds)
      throw PreconditionError("selected pair is not eps-regular");
  }

  const int r = static_cast<int>((Rational(2 * out.max_degree) * eps * Rational(m)).floor());
  if (r >= m) throw PreconditionError("removal budget empties the clusters");
  std::vector<VertexSet> low(k, VertexSet(n));
  for (auto [i, j] : edges) {
    const VertexSet& a = p.classes[cl[i]];
    const VertexSet& b = p.classes[cl[j]];
    low[i] |= low_degree_vertices(pure, PairSpec{a, b, eps, d}, b);
    low[j] |= low_degree_vertices(pure, PairSpec{b, a, eps, d}, a);
  }
  out.moved = VertexSet(n);
  for (int i = 0; i < k; ++i) {
    if (low[i].size() > r) throw PreconditionError("too many low-degree vertices in a cluster");
    VertexSet sub = p.classes[cl[i]] - low[i];
    std::vector<int> mem = sub.members();
    for (int t = static_cast<int>(mem.size()) - 1, extra = r - low[i].size(); extra > 0; --t, --extra)
      sub.erase(mem[t]);
    out.moved |= p.classes[cl[i]] - sub;
    out.subclusters.push_back(std::move(sub));
  }
  out.size = m - r;

  out.audit_eps = std::min(eps * Rational(2), Rational(1));
  out.audit_d = d - Rational(2 * out.max_degree + 1) * eps;
  out.audit_holds = true;
  for (auto [i, j] : edges) {
    CheckOptions co = pair_options(opt, out.size, out.size, derive_seed(opt.seed, 0x5a0, i, j));
    RegularityVerdict v = check_pair_superregular(
        pure, PairSpec{out.subclusters[i], out.subclusters[j], out.audit_eps, out.audit_d}, co);
    if (!v.exhaustive) out.audit_exact = false;
    if (!v.holds) {
      out.audit_holds = false;
      out.failing_edges.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace reglab
