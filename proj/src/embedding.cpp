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


#include "reglab/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

#include "reglab/enumerate.hpp"
#include "reglab/errors.hpp"

namespace reglab {

namespace {

const VertexSet& outs(const Graph& g, int v) { return g.neighbours(v); }
const VertexSet& outs(const Digraph& g, int v) { return g.out(v); }
const VertexSet& ins(const Graph& g, int v) { return g.neighbours(v); }
const VertexSet& ins(const Digraph& g, int v) { return g.in(v); }
int total_degree(const Graph& g, int v) { return g.degree(v); }
int total_degree(const Digraph& g, int v) { return g.out_degree(v) + g.in_degree(v); }

mpq_class to_mpq(const Rational& r) {
  mpq_class q(mpz_class(static_cast<long>(r.num())), mpz_class(static_cast<long>(r.den())));
  q.canonicalize();
  return q;
}

// Embedding order: each next vertex has the most already placed neighbours.
template <typename G>
std::vector<int> embedding_order(const G& h, int first) {
  const int k = h.n();
  std::vector<int> order;
  std::vector<char> placed(k, 0);
  std::vector<int> links(k, 0);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    if (step == 0 && first >= 0) {
      best = first;
    } else {
      for (int u = 0; u < k; ++u) {
        if (placed[u]) continue;
        if (best < 0 || links[u] > links[best] ||
            (links[u] == links[best] && total_degree(h, u) > total_degree(h, best)))
          best = u;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    (outs(h, best) | ins(h, best)).for_each([&](int w) { ++links[w]; });
  }
  return order;
}

// Calls f(map) for every embedding of h into g[allowed] with pin.first ->
// pin.second (if pin.first >= 0); stops when f returns true.
template <typename G>
bool for_each_embedding(const G& h, const G& g, const VertexSet& allowed, std::pair<int, int> pin,
                        const std::function<bool(const std::vector<int>&)>& f) {
  const int k = h.n();
  std::vector<int> order = embedding_order(h, pin.first);
  std::vector<int> map(k, -1);
  VertexSet used(g.n());
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return f(map);
    const int u = order[i];
    VertexSet cand = allowed - used;
    if (i == 0 && pin.first >= 0) {
      if (!cand.contains(pin.second)) return false;
      cand = VertexSet(g.n(), {pin.second});
    }
    outs(h, u).for_each([&](int w) {
      if (map[w] >= 0) cand &= ins(g, map[w]);
    });
    ins(h, u).for_each([&](int w) {
      if (map[w] >= 0) cand &= outs(g, map[w]);
    });
    const int od = outs(h, u).size(), id = ins(h, u).size();
    bool stop = false;
    cand.for_each([&](int v) {
      if (stop || outs(g, v).size() < od || ins(g, v).size() < id) return;
      map[u] = v;
      used.insert(v);
      stop = rec(i + 1);
      used.erase(v);
      map[u] = -1;
    });
    return stop;
  };
  return rec(0);
}

template <typename G>
std::optional<Embedding> oracle_impl(const G& h, const G& g, int cap) {
  if (h.n() > cap) throw CapExceeded("pattern above cap " + std::to_string(cap));
  if (h.n() > g.n()) return std::nullopt;
  if (h.edge_count() > g.edge_count()) return std::nullopt;
  std::optional<Embedding> out;
  for_each_embedding(h, g, VertexSet::full(g.n()), {-1, -1}, [&](const std::vector<int>& m) {
    out = Embedding{m, {}};
    return true;
  });
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (!left.empty()) {
    VertexSet comp(g.n()), frontier(g.n(), {left.first()});
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet nxt(g.n());
      frontier.for_each([&](int v) { nxt |= g.neighbours(v); });
      frontier = (nxt & within) - comp;
    }
    left -= comp;
    out.push_back(comp);
  }
  return out;
}

// Distinct copies of f in g[allowed] that contain v.
std::vector<std::vector<int>> copies_through(const Graph& g, const Graph& f, const VertexSet& allowed, int v) {
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<std::vector<int>> out;
  for (int a = 0; a < f.n(); ++a) {
    for_each_embedding(f, g, allowed, {a, v}, [&](const std::vector<int>& m) {
      std::vector<std::pair<int, int>> key;
      for (auto [x, y] : f.edges()) key.emplace_back(std::min(m[x], m[y]), std::max(m[x], m[y]));
      std::sort(key.begin(), key.end());
      if (f.edge_count() == 0) {
        std::vector<int> s = m;
        std::sort(s.begin(), s.end());
        for (int x : s) key.emplace_back(x, x);
      }
      if (seen.insert(key).second) out.push_back(m);
      return false;
    });
  }
  return out;
}

VertexSet image(int n, const std::vector<int>& m) { return VertexSet(n, m); }

}  // namespace

Graph blow_up(const Graph& r, int s) {
  if (s < 1) throw DomainError("blow-up factor must be positive");
  Graph out(r.n() * s);
  for (auto [u, v] : r.edges())
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b) out.add_edge(u * s + a, v * s + b);
  return out;
}

GreedyResult greedy_embed(const Graph& h, const Graph& g, const Partition& p, const ReducedGraph<Graph>& r,
                          const std::vector<int>& sigma, int s) {
  const int hn = h.n();
  const int k = r.r.n();
  if (s < 1) throw PreconditionError("s must be positive");
  if (static_cast<int>(sigma.size()) != hn) throw PreconditionError("sigma must map every vertex of H");
  if (static_cast<int>(r.cluster_of.size()) != k) throw PreconditionError("reduced graph does not match partition");
  p.validate(g.n());
  std::vector<int> cl = p.cluster_indices();
  if (cl != r.cluster_of) throw PreconditionError("reduced graph does not match partition");
  const int m = p.classes[cl[0]].size();
  for (int c : cl)
    if (p.classes[c].size() != m) throw PreconditionError("clusters differ in size");

  const int delta = hn ? h.max_degree() : 0;
  const mpq_class d = to_mpq(r.d), eps = to_mpq(r.eps);
  mpq_class dd = 1, de = 1;
  for (int i = 0; i < delta; ++i) dd *= d, de *= d - eps;
  if (mpq_class(m) * dd < mpq_class(2 * s)) throw PreconditionError("need m >= 2s/d^Delta");
  if (de - delta * eps < dd / 2) throw PreconditionError("need (d-eps)^Delta - Delta eps >= d^Delta/2");
  std::vector<int> load(k, 0);
  for (int u = 0; u < hn; ++u) {
    if (sigma[u] < 0 || sigma[u] >= k) throw PreconditionError("sigma outside the clusters");
    if (++load[sigma[u]] > s) throw PreconditionError("more than s vertices of H in one cluster");
  }
  for (auto [u, v] : h.edges())
    if (!r.r.has_edge(sigma[u], sigma[v])) throw PreconditionError("sigma does not respect R");

  GreedyResult res;
  const mpq_class floor_size = mpq_class(s) + delta * eps * m;
  std::vector<VertexSet> y;
  for (int u = 0; u < hn; ++u) y.push_back(p.classes[cl[sigma[u]]]);
  std::vector<int> map(hn, -1);
  VertexSet used(g.n());
  const mpq_class keep = d - eps;
  for (int j = 0; j < hn; ++j) {
    const int sz = y[j].size();
    res.candidate_sizes.push_back(sz);
    if (mpq_class(sz) < floor_size) res.counting_bound_held = false;
    std::vector<int> later;
    h.neighbours(j).for_each([&](int w) {
      if (w > j) later.push_back(w);
    });
    int chosen = -1;
    (y[j] - used).for_each([&](int v) {
      if (chosen >= 0) return;
      for (int w : later)
        if (mpq_class(y[w].intersection_size(g.neighbours(v))) < keep * y[w].size()) return;
      chosen = v;
    });
    if (chosen < 0) {
      res.failed_step = j;
      return res;
    }
    map[j] = chosen;
    used.insert(chosen);
    for (int w : later) y[w] &= g.neighbours(chosen);
  }
  res.embedding = Embedding{map, res.candidate_sizes};
  return res;
}

std::optional<Embedding> subgraph_oracle(const Graph& h, const Graph& g, int cap) { return oracle_impl(h, g, cap); }
std::optional<Embedding> subgraph_oracle(const Digraph& h, const Digraph& g, int cap) {
  return oracle_impl(h, g, cap);
}

bool contains_subgraph(const Graph& g, const Graph& h) { return oracle_impl(h, g, std::max(h.n(), 1)).has_value(); }

ExtremalResult extremal_number(int n, const Graph& h, int cap) {
  if (n > cap) throw CapExceeded("extremal search above cap " + std::to_string(cap));
  if (n < 0) throw DomainError("negative order");
  if (h.edge_count() == 0 && h.n() <= n) throw DomainError("every graph on n vertices contains H");
  auto levels = enumerate_graphs(n, [&](const Graph& g) { return !contains_subgraph(g, h); }, cap);
  ExtremalResult out;
  out.value = static_cast<long>(levels.size()) - 1;
  out.witness = levels.back().front();
  out.extremal_count = static_cast<int>(levels.back().size());
  return out;
}

RamseyResult ramsey_oracle(const Graph& h, int n_max) {
  if (n_max > 8) throw CapExceeded("Ramsey search above n = 8");
  RamseyResult out;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<Graph> avoid;
    for (const auto& level : enumerate_graphs(n, {}, 8)) {
      for (const Graph& g : level) {
        if (!contains_subgraph(g, h) && !contains_subgraph(complement(g), h)) {
          avoid = g;
          break;
        }
      }
      if (avoid) break;
    }
    if (!avoid) {
      out.value = n;
      return out;
    }
    out.largest_avoiding = n;
    out.certificate = *avoid;
  }
  return out;
}

PackingResult packing_oracle(const Graph& g, const Graph& f, PackingMode mode, int cap) {
  const int n = g.n(), k = f.n();
  if (n > cap) throw CapExceeded("packing search above cap " + std::to_string(cap));
  if (k < 1) throw DomainError("empty pattern");
  if (n > 64) throw CapExceeded("packing search needs at most 64 vertices");
  PackingResult out;
  const bool connected_f = is_connected(f);

  if (mode == PackingMode::Perfect) {
    if (n % k != 0) throw PreconditionError("|F| does not divide |G|");
    std::unordered_set<std::uint64_t> failed;
    std::vector<std::vector<int>> stack;
    std::function<bool(const VertexSet&)> rec = [&](const VertexSet& left) -> bool {
      if (left.empty()) return true;
      if (failed.count(left.low_word())) return false;
      if (connected_f)
        for (const auto& c : components(g, left))
          if (c.size() % k != 0) {
            failed.insert(left.low_word());
            return false;
          }
      for (auto& m : copies_through(g, f, left, left.first())) {
        stack.push_back(m);
        if (rec(left - image(n, m))) return true;
        stack.pop_back();
      }
      failed.insert(left.low_word());
      return false;
    };
    out.perfect = rec(VertexSet::full(n));
    if (out.perfect)
      for (auto& m : stack) out.copies.push_back(Embedding{m, {}});
    return out;
  }

  std::unordered_map<std::uint64_t, std::pair<int, std::vector<int>>> memo;
  std::function<int(const VertexSet&)> best = [&](const VertexSet& left) -> int {
    if (left.size() < k) return 0;
    auto it = memo.find(left.low_word());
    if (it != memo.end()) return it->second.first;
    const int v = left.first();
    VertexSet rest = left;
    rest.erase(v);
    int val = best(rest);
    std::vector<int> choice;
    for (auto& m : copies_through(g, f, left, v)) {
      int c = 1 + best(left - image(n, m));
      if (c > val) val = c, choice = m;
    }
    memo[left.low_word()] = {val, choice};
    return val;
  };
  best(VertexSet::full(n));
  VertexSet left = VertexSet::full(n);
  while (left.size() >= k) {
    const auto& entry = memo[left.low_word()];
    if (entry.first == 0) break;
    if (entry.second.empty()) {
      left.erase(left.first());
      continue;
    }
    out.copies.push_back(Embedding{entry.second, {}});
    left -= image(n, entry.second);
  }
  out.perfect = static_cast<int>(out.copies.size()) * k == n;
  return out;
}

int chromatic_number(const Graph& h) {
  const int n = h.n();
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> colour(n, -1);
  std::function<bool(int, int, int)> rec = [&](int i, int k, int used) -> bool {
    if (i == n) return true;
    const int u = order[i];
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      bool ok = true;
      h.neighbours(u).for_each([&](int w) {
        if (colour[w] == c) ok = false;
      });
      if (!ok) continue;
      colour[u] = c;
      if (rec(i + 1, k, std::max(used, c + 1))) return true;
      colour[u] = -1;
    }
    return false;
  };
  for (int k = 1;; ++k) {
    std::fill(colour.begin(), colour.end(), -1);
    if (rec(0, k, 0)) return k;
  }
}

int greedy_colour_bound(const Graph& h) { return h.n() ? h.max_degree() + 1 : 0; }

}  // namespace reglab
