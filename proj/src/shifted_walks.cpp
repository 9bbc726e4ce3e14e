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


#include "reglab/shifted_walks.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reglab/errors.hpp"
#include "reglab/hamiltonicity.hpp"

namespace reglab {

namespace {

void check_cluster(const FactorContext& ctx, int v) {
  if (v < 0 || v >= ctx.r.n()) throw DomainError("cluster index out of range");
}

void require_hamiltonian(const FactorContext& ctx) {
  if (!ctx.hamiltonian()) throw PreconditionError("F is not a single cycle");
}

}  // namespace

FactorContext make_context(const Digraph& r, const std::vector<int>& succ) {
  const int k = r.n();
  if (static_cast<int>(succ.size()) != k) throw PreconditionError("successor map has the wrong length");
  FactorContext ctx;
  ctx.r = r;
  ctx.succ = succ;
  ctx.pred.assign(k, -1);
  for (int u = 0; u < k; ++u) {
    int v = succ[u];
    if (v < 0 || v >= k || ctx.pred[v] >= 0) throw PreconditionError("successor map is not a permutation");
    if (!r.has_edge(u, v)) throw PreconditionError("F uses a non-edge of R");
    ctx.pred[v] = u;
  }
  ctx.cycle_of.assign(k, -1);
  for (int v = 0; v < k; ++v) {
    if (ctx.cycle_of[v] >= 0) continue;
    for (int u = v; ctx.cycle_of[u] < 0; u = succ[u]) ctx.cycle_of[u] = ctx.cycle_count;
    ++ctx.cycle_count;
  }
  return ctx;
}

FactorContext context_from_one_factor(const Digraph& r) {
  OneFactorResult f = one_factor(r);
  if (!f.factor) throw Infeasible("reduced digraph has no 1-factor");
  return make_context(r, f.factor->successor);
}

std::optional<ShiftedWalk> find_shifted_walk(const FactorContext& ctx, int a, int b, const VertexSet& avoid,
                                             int t_max) {
  const int k = ctx.r.n();
  check_cluster(ctx, a);
  check_cluster(ctx, b);
  if (avoid.universe() != k) throw DomainError("avoid set over wrong universe");
  if (a == b) return ShiftedWalk{{a}, {}};
  std::vector<int> dist(k, -1), parent(k, -1);
  std::deque<int> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    const int x = q.front();
    q.pop_front();
    if (dist[x] >= t_max) continue;
    std::optional<ShiftedWalk> found;
    ctx.r.out(ctx.pred[x]).for_each([&](int y) {
      if (found) return;
      if (y == b) {
        ShiftedWalk w;
        for (int u = x; u >= 0; u = parent[u]) w.entries.push_back(u);
        std::reverse(w.entries.begin(), w.entries.end());
        for (int u : w.entries) w.exits.push_back(ctx.pred[u]);
        w.entries.push_back(b);
        found = std::move(w);
        return;
      }
      if (dist[y] >= 0 || avoid.contains(y) || avoid.contains(ctx.pred[y])) return;
      dist[y] = dist[x] + 1;
      parent[y] = x;
      q.push_back(y);
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::vector<int> expand_walk(const FactorContext& ctx, const ShiftedWalk& w) {
  std::vector<int> seq;
  for (std::size_t i = 0; i < w.exits.size(); ++i) {
    int x = w.entries[i];
    seq.push_back(x);
    for (int u = ctx.succ[x]; u != x; u = ctx.succ[u]) seq.push_back(u);
  }
  seq.push_back(w.entries.back());
  return seq;
}

WalkAudit audit_shifted_walk(const FactorContext& ctx, const ShiftedWalk& w, int a, int b, const VertexSet& avoid) {
  WalkAudit au;
  const int t = w.cycles_traversed();
  if (w.entries.size() != w.exits.size() + 1 || w.entries.front() != a || w.entries.back() != b) return au;
  au.exits_are_predecessors = au.hops_are_edges = true;
  for (int i = 0; i < t; ++i) {
    if (w.exits[i] != ctx.pred[w.entries[i]]) au.exits_are_predecessors = false;
    if (!ctx.r.has_edge(w.exits[i], w.entries[i + 1])) au.hops_are_edges = false;
  }
  std::vector<int> e(w.entries.begin() + 1, w.entries.end()), x = w.exits;
  std::sort(e.begin(), e.end());
  std::sort(x.begin(), x.end());
  au.unique_entries = std::adjacent_find(e.begin(), e.end()) == e.end();
  au.unique_exits = std::adjacent_find(x.begin(), x.end()) == x.end();
  au.avoids_internally = true;
  for (int i = 1; i < t; ++i)
    if (avoid.contains(w.entries[i]) || avoid.contains(w.exits[i])) au.avoids_internally = false;
  std::vector<int> seq = expand_walk(ctx, w);
  seq.pop_back();
  std::vector<long> visits(ctx.r.n(), 0);
  for (int v : seq) ++visits[v];
  au.equal_visits = true;
  for (int v = 0; v < ctx.r.n(); ++v) {
    bool touched = false;
    for (int u : seq) touched |= ctx.cycle_of[u] == ctx.cycle_of[v];
    if (touched && visits[v] != visits[ctx.succ[v]]) au.equal_visits = false;
  }
  return au;
}

std::optional<SkewedTraverse> find_skewed_traverse(const FactorContext& ctx, int a, int b) {
  require_hamiltonian(ctx);
  check_cluster(ctx, a);
  check_cluster(ctx, b);
  const int k = ctx.r.n();
  std::vector<int> via(k, -1), from(k, -1);
  std::vector<char> seen(k, 0);
  std::deque<int> q{a};
  seen[a] = 1;
  while (!q.empty()) {
    const int s = q.front();
    q.pop_front();
    std::optional<SkewedTraverse> found;
    ctx.r.out(s).for_each([&](int y) {
      if (found) return;
      if (y == b) {
        SkewedTraverse t;
        t.edges.emplace_back(s, b);
        for (int u = s; u != a; u = from[u]) t.edges.emplace_back(from[u], via[u]);
        std::reverse(t.edges.begin(), t.edges.end());
        found = std::move(t);
        return;
      }
      const int nxt = ctx.pred[y];
      if (seen[nxt]) return;
      seen[nxt] = 1;
      from[nxt] = s;
      via[nxt] = y;
      q.push_back(nxt);
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool audit_skewed_traverse(const FactorContext& ctx, const SkewedTraverse& t, int a, int b) {
  if (t.edges.empty() || t.edges.front().first != a || t.edges.back().second != b) return false;
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (!ctx.r.has_edge(t.edges[i].first, t.edges[i].second)) return false;
    if (i + 1 < t.edges.size() && t.edges[i + 1].first != ctx.pred[t.edges[i].second]) return false;
  }
  return true;
}

std::vector<int> walk_from_traverse(const FactorContext& ctx, const SkewedTraverse& t) {
  std::vector<int> seq{t.edges.front().first};
  for (std::size_t i = 0; i + 1 < t.edges.size(); ++i) {
    int y = t.edges[i].second;
    seq.push_back(y);
    for (int u = ctx.succ[y]; u != y; u = ctx.succ[u]) seq.push_back(u);
  }
  seq.push_back(t.edges.back().second);
  return seq;
}

bool ClusterAssignment::balanced() const {
  return std::all_of(a.begin(), a.end(), [&](long x) { return x == m; });
}

RebalanceStep rebalance(const ClusterAssignment& assign, const FactorContext& ctx, int over, int under,
                        RebalanceMode mode) {
  const int k = ctx.r.n();
  if (static_cast<int>(assign.a.size()) != k || static_cast<int>(assign.neutral_slots.size()) != k)
    throw PreconditionError("assignment does not match the reduced digraph");
  check_cluster(ctx, over);
  check_cluster(ctx, under);
  if (assign.a[over] <= assign.m || assign.a[under] >= assign.m)
    throw PreconditionError("need a(over) > m and a(under) < m");
  require_hamiltonian(ctx);
  RebalanceStep step;
  step.over = over;
  step.under = under;
  step.after = assign;
  const int start = ctx.pred[over];
  if (mode == RebalanceMode::Traverse) {
    auto t = find_skewed_traverse(ctx, start, under);
    if (!t) throw Infeasible("no skewed traverse");
    for (auto [s, y] : t->edges) {
      if (step.after.neutral_slots[s] < 1) throw Infeasible("insufficient neutral slots");
      --step.after.neutral_slots[s];
      step.consumed.push_back(s);
    }
    step.traverse = std::move(t);
  } else {
    auto t1 = find_skewed_traverse(ctx, start, under);
    auto t2 = find_skewed_traverse(ctx, under, ctx.succ[over]);
    if (!t1 || !t2) throw Infeasible("no shifted walk");
    std::vector<int> seq = walk_from_traverse(ctx, *t1);
    std::vector<int> w2 = walk_from_traverse(ctx, *t2);
    seq.insert(seq.end(), w2.begin() + 1, w2.end());
    for (int u = ctx.succ[over], left = k - 2; left > 0; --left) {
      u = ctx.succ[u];
      seq.push_back(u);
    }
    step.copies_replaced = static_cast<int>((seq.size() - 1) / k);
    step.replacement = std::move(seq);
  }
  --step.after.a[over];
  ++step.after.a[under];
  return step;
}

std::vector<RebalanceStep> balance(const ClusterAssignment& assign, const FactorContext& ctx, RebalanceMode mode) {
  const long k = static_cast<long>(assign.a.size());
  if (std::accumulate(assign.a.begin(), assign.a.end(), 0L) != assign.m * k)
    throw PreconditionError("total assignment differs from m k");
  std::vector<RebalanceStep> steps;
  ClusterAssignment cur = assign;
  while (!cur.balanced()) {
    int over = static_cast<int>(std::find_if(cur.a.begin(), cur.a.end(), [&](long x) { return x > cur.m; }) -
                                cur.a.begin());
    int under = static_cast<int>(std::find_if(cur.a.begin(), cur.a.end(), [&](long x) { return x < cur.m; }) -
                                 cur.a.begin());
    steps.push_back(rebalance(cur, ctx, over, under, mode));
    cur = steps.back().after;
  }
  return steps;
}

}  // namespace reglab
