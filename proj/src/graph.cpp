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

#include "reglab/graph.hpp"

#include <algorithm>
#include <string>

#include "reglab/errors.hpp"

namespace reglab {

namespace {
int g_vertex_cap = 4096;

void check_size(int n) {
  if (n < 0) throw DomainError("negative vertex count");
  if (n > g_vertex_cap)
    throw CapExceeded("graph order " + std::to_string(n) + " exceeds cap " + std::to_string(g_vertex_cap));
}

void check_pair_sets(const VertexSet& a, const VertexSet& b, int n) {
  if (a.universe() != n || b.universe() != n) throw DomainError("vertex set over wrong universe");
  if (a.empty() || b.empty()) throw DomainError("density of an empty set");
  if (a.intersects(b)) throw DomainError("density of overlapping sets");
}
}  // namespace

int vertex_cap() { return g_vertex_cap; }
void set_vertex_cap(int cap) { g_vertex_cap = cap; }

Graph::Graph(int n) : n_(n) {
  check_size(n);
  adj_.assign(n, VertexSet(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
  if (u == v) throw DomainError("self-loop");
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

long Graph::edge_count() const {
  long s = 0;
  for (const auto& row : adj_) s += row.size();
  return s / 2;
}

int Graph::min_degree() const {
  int m = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Digraph::Digraph(int n) : n_(n) {
  check_size(n);
  out_.assign(n, VertexSet(n));
  in_.assign(n, VertexSet(n));
}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n) {
  for (auto [u, v] : arcs) add_edge(u, v);
}

void Digraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw DomainError("vertex out of range");
  if (u == v) throw DomainError("self-loop");
}

void Digraph::add_edge(int u, int v) {
  check_pair(u, v);
  out_[u].insert(v);
  in_[v].insert(u);
}

void Digraph::remove_edge(int u, int v) {
  check_pair(u, v);
  out_[u].erase(v);
  in_[v].erase(u);
}

long Digraph::edge_count() const {
  long s = 0;
  for (const auto& row : out_) s += row.size();
  return s;
}

int Digraph::min_out_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, out_degree(v));
  return n_ == 0 ? 0 : m;
}

int Digraph::min_in_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, in_degree(v));
  return n_ == 0 ? 0 : m;
}

int Digraph::min_semidegree() const { return std::min(min_out_degree(), min_in_degree()); }

bool Digraph::is_oriented() const {
  for (int v = 0; v < n_; ++v)
    if (out_[v].intersects(in_[v])) return false;
  return true;
}

bool Digraph::is_tournament() const {
  if (!is_oriented()) return false;
  for (int v = 0; v < n_; ++v)
    if (out_degree(v) + in_degree(v) != n_ - 1) return false;
  return true;
}

Digraph Digraph::reverse() const {
  Digraph r(n_);
  for (auto [u, v] : edges()) r.add_edge(v, u);
  return r;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) out_[u].for_each([&](int v) { out.emplace_back(u, v); });
  return out;
}

Digraph as_digraph(const Graph& g) {
  Digraph d(g.n());
  for (auto [u, v] : g.edges()) {
    d.add_edge(u, v);
    d.add_edge(v, u);
  }
  return d;
}

long edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long e = 0;
  a.for_each([&](int v) { e += g.neighbours(v).intersection_size(b); });
  return e;
}

long edges_between(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  long e = 0;
  a.for_each([&](int v) { e += g.out(v).intersection_size(b); });
  return e;
}

Rational density(const Graph& g, const VertexSet& a, const VertexSet& b) {
  check_pair_sets(a, b, g.n());
  return Rational(edges_between(g, a, b), static_cast<std::int64_t>(a.size()) * b.size());
}

Rational density(const Digraph& g, const VertexSet& a, const VertexSet& b) {
  check_pair_sets(a, b, g.n());
  return Rational(edges_between(g, a, b), static_cast<std::int64_t>(a.size()) * b.size());
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.n());
  for (int v = 0; v < g.n(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::pair<std::vector<int>, std::vector<int>> degree_sequences(const Digraph& g) {
  std::vector<int> o(g.n()), i(g.n());
  for (int v = 0; v < g.n(); ++v) {
    o[v] = g.out_degree(v);
    i[v] = g.in_degree(v);
  }
  std::sort(o.begin(), o.end());
  std::sort(i.begin(), i.end());
  return {o, i};
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Digraph complement(const Digraph& g) {
  Digraph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < g.n(); ++v)
      if (u != v && !g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Induced<Graph> induced(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("induced subgraph on empty set");
  auto labels = s.members();
  Graph h(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (g.has_edge(labels[i], labels[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(labels)};
}

Induced<Digraph> induced(const Digraph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("induced subgraph on empty set");
  auto labels = s.members();
  Digraph h(static_cast<int>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (i != j && g.has_edge(labels[i], labels[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return {std::move(h), std::move(labels)};
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Digraph relabel(const Digraph& g, const std::vector<int>& perm) {
  Digraph h(g.n());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph u(g.n() + h.n());
  for (auto [a, b] : g.edges()) u.add_edge(a, b);
  for (auto [a, b] : h.edges()) u.add_edge(a + g.n(), b + g.n());
  return u;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  VertexSet seen(g.n());
  std::vector<int> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbours(v).for_each([&](int w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return seen.size() == g.n();
}

namespace {
int reach_count(const Digraph& g, bool forward) {
  VertexSet seen(g.n());
  std::vector<int> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    (forward ? g.out(v) : g.in(v)).for_each([&](int w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    });
  }
  return seen.size();
}
}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.n() == 0) return true;
  return reach_count(g, true) == g.n() && reach_count(g, false) == g.n();
}

}  // namespace reglab
