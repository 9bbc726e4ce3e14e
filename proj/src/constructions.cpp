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

#include "reglab/constructions.hpp"

#include <random>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

// Uniform double in [0,1) from the top 53 bits, identical on every platform.
struct Coin {
  explicit Coin(std::uint64_t seed) : rng(seed) {}
  bool flip(double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }
  std::mt19937_64 rng;
};

void check_p(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability outside [0,1]");
}

// Orient the complete bipartite graph between two blocks by index parity.
void orient_by_parity(Digraph& g, int b0, int nb, int d0, int nd) {
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nd; ++j) {
      if ((i + j) % 2 == 0)
        g.add_edge(b0 + i, d0 + j);
      else
        g.add_edge(d0 + j, b0 + i);
    }
}

void add_rotational(Digraph& g, int first, int m) {
  for (int i = 0; i < m; ++i)
    for (int s = 1; s <= (m - 1) / 2; ++s) g.add_edge(first + i, first + (i + s) % m);
}

void all_arcs(Digraph& g, int from0, int from1, int to0, int to1) {
  for (int u = from0; u < from1; ++u)
    for (int v = to0; v < to1; ++v) g.add_edge(u, v);
}

}  // namespace

std::vector<int> turan_class_sizes(int n, int r) {
  if (r < 2) throw DomainError("Turan graph needs r >= 2");
  if (n < 0) throw DomainError("negative order");
  int k = r - 1;
  std::vector<int> sizes(k, n / k);
  for (int i = 0; i < n % k; ++i) ++sizes[i];
  return sizes;
}

Graph turan_graph(int n, int r) { return complete_multipartite(turan_class_sizes(n, r)); }

long turan_count(int n, int r) {
  auto sizes = turan_class_sizes(n, r);
  long total = static_cast<long>(n) * (n - 1) / 2;
  for (int s : sizes) total -= static_cast<long>(s) * (s - 1) / 2;
  return total;
}

Graph chvatal_extremal(int n, int r) {
  if (r < 1 || 2 * r >= n) throw DomainError("chvatal_extremal needs 1 <= r < n/2");
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((i >= r + 1 && j >= r + 1) || (i <= r && j >= n - r + 1)) g.add_edge(i - 1, j - 1);
  return g;
}

Digraph regular_tournament(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("regular tournament needs odd m");
  Digraph g(m);
  add_rotational(g, 0, m);
  return g;
}

FourParts haggkvist_parts(int m) {
  if (m < 1 || m % 2 == 0) throw DomainError("haggkvist_graph needs odd m");
  return {0, m, 2 * m + 2, 3 * m + 2, 4 * m + 3};
}

Digraph haggkvist_graph(int m) {
  auto p = haggkvist_parts(m);
  Digraph g(p.end);
  add_rotational(g, p.a_begin, m);
  add_rotational(g, p.c_begin, m);
  all_arcs(g, p.a_begin, p.b_begin, p.b_begin, p.c_begin);
  all_arcs(g, p.b_begin, p.c_begin, p.c_begin, p.d_begin);
  all_arcs(g, p.c_begin, p.d_begin, p.d_begin, p.end);
  all_arcs(g, p.d_begin, p.end, p.a_begin, p.b_begin);
  orient_by_parity(g, p.b_begin, p.c_begin - p.b_begin, p.d_begin, p.end - p.d_begin);
  return g;
}

FourParts antidirected_parts(int m) {
  if (m < 1) throw DomainError("antidirected_counterexample needs m >= 1");
  int s = 2 * m + 1;
  return {0, s, 2 * s, 3 * s, 4 * s};
}

Digraph antidirected_counterexample(int m) {
  auto p = antidirected_parts(m);
  int s = 2 * m + 1;
  Digraph g(p.end);
  add_rotational(g, p.a_begin, s);
  add_rotational(g, p.c_begin, s);
  all_arcs(g, p.a_begin, p.b_begin, p.b_begin, p.c_begin);
  all_arcs(g, p.b_begin, p.c_begin, p.c_begin, p.d_begin);
  all_arcs(g, p.c_begin, p.d_begin, p.d_begin, p.end);
  all_arcs(g, p.d_begin, p.end, p.a_begin, p.b_begin);
  orient_by_parity(g, p.b_begin, s, p.d_begin, s);
  return g;
}

Graph c6_sharpness_graph(int n) {
  if (n <= 0 || n % 6 != 0) throw DomainError("c6_sharpness_graph needs 6 | n");
  return disjoint_union(complete_graph(n / 2 + 1), complete_graph(n / 2 - 1));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  check_p(p);
  Coin coin(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin.flip(p)) g.add_edge(u, v);
  return g;
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  check_p(p);
  Coin coin(seed);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin.flip(p)) g.add_edge(u, v);
  return g;
}

Graph random_bipartite(int a, int b, double p, std::uint64_t seed) {
  check_p(p);
  Coin coin(seed);
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (coin.flip(p)) g.add_edge(u, a + v);
  return g;
}

Digraph random_tournament(int n, std::uint64_t seed) {
  Coin coin(seed);
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (coin.flip(0.5))
        g.add_edge(u, v);
      else
        g.add_edge(v, u);
    }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw DomainError("negative part size");
    n += parts[i];
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

Digraph complete_digraph(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.add_edge(u, v);
  return g;
}

Digraph directed_cycle(int n) {
  if (n < 2) throw DomainError("directed cycle needs n >= 2");
  Digraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

}  // namespace reglab
