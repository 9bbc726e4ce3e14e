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


#include "reglab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix matrix_of(const Graph& g) {
  Matrix a(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

Matrix matrix_of(const Digraph& g) {
  Matrix a(g.n(), std::vector<char>(g.n(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = 1;
  return a;
}

using Cells = std::vector<std::vector<int>>;

// Split cells by neighbour counts into every cell until stable. Subcells are
// ordered by their signature so the result is isomorphism invariant.
void refine(const Matrix& a, Cells& cells) {
  const int n = static_cast<int>(a.size());
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<int> cell_of(n);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(2 * cells.size(), 0);
        for (int w = 0; w < n; ++w) {
          if (a[v][w]) ++sig[2 * cell_of[w]];
          if (a[w][v]) ++sig[2 * cell_of[w] + 1];
        }
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, vs] : groups) next.push_back(std::move(vs));
    }
    cells = std::move(next);
  }
}

std::vector<std::uint8_t> code_of(const Matrix& a, const std::vector<int>& order) {
  const int n = static_cast<int>(a.size());
  std::vector<std::uint8_t> code(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) code[i * n + j] = a[order[i]][order[j]];
  return code;
}

void search(const Matrix& a, Cells cells, CanonicalForm& best, bool& have) {
  refine(a, cells);
  auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (it == cells.end()) {
    std::vector<int> order;
    for (const auto& c : cells) order.push_back(c[0]);
    auto code = code_of(a, order);
    if (!have || code < best.code) {
      best = CanonicalForm{std::move(code), std::move(order)};
      have = true;
    }
    return;
  }
  const std::size_t pos = it - cells.begin();
  for (int v : cells[pos]) {
    Cells next(cells.begin(), cells.begin() + pos);
    next.push_back({v});
    std::vector<int> rest;
    for (int w : cells[pos])
      if (w != v) rest.push_back(w);
    next.push_back(rest);
    next.insert(next.end(), cells.begin() + pos + 1, cells.end());
    search(a, std::move(next), best, have);
  }
}

CanonicalForm canon(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  CanonicalForm best;
  if (n == 0) return best;
  Cells cells(1);
  for (int v = 0; v < n; ++v) cells[0].push_back(v);
  bool have = false;
  search(a, cells, best, have);
  return best;
}

Graph from_code_graph(const std::vector<std::uint8_t>& code, int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (code[i * n + j]) g.add_edge(i, j);
  return g;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return canon(matrix_of(g)); }
CanonicalForm canonical_form(const Digraph& g) { return canon(matrix_of(g)); }

Graph canonical_graph(const Graph& g) { return from_code_graph(canonical_form(g).code, g.n()); }

bool isomorphic(const Graph& g, const Graph& h) {
  return g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g).code == canonical_form(h).code;
}
bool isomorphic(const Digraph& g, const Digraph& h) {
  return g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g).code == canonical_form(h).code;
}

std::vector<std::vector<Graph>> enumerate_graphs(int n, const std::function<bool(const Graph&)>& keep, int cap) {
  if (n < 0) throw DomainError("negative order");
  if (n > cap) throw CapExceeded("graph enumeration above cap " + std::to_string(cap));
  std::vector<std::vector<Graph>> levels;
  Graph empty(n);
  if (keep && !keep(empty)) return levels;
  levels.push_back({empty});
  while (true) {
    std::map<std::vector<std::uint8_t>, Graph> next;
    for (const Graph& g : levels.back()) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          auto code = canonical_form(h).code;
          if (next.count(code)) continue;
          Graph c = from_code_graph(code, n);
          if (keep && !keep(c)) {
            next.emplace(std::move(code), Graph());
            continue;
          }
          next.emplace(std::move(code), std::move(c));
        }
      }
    }
    std::vector<Graph> level;
    for (auto& [code, g] : next)
      if (g.n() == n && n > 0) level.push_back(std::move(g));
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<Digraph> enumerate_tournaments(int n, int cap) {
  if (n < 1) throw DomainError("tournaments need at least one vertex");
  if (n > cap) throw CapExceeded("tournament enumeration above cap " + std::to_string(cap));
  std::vector<Digraph> cur{Digraph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<std::vector<std::uint8_t>, Digraph> next;
    for (const Digraph& t : cur) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        Digraph d(k);
        for (auto [u, v] : t.edges()) d.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u) {
          if ((mask >> u) & 1u)
            d.add_edge(k - 1, u);
          else
            d.add_edge(u, k - 1);
        }
        CanonicalForm cf = canonical_form(d);
        if (next.count(cf.code)) continue;
        Digraph c(k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            if (cf.code[i * k + j]) c.add_edge(i, j);
        next.emplace(std::move(cf.code), std::move(c));
      }
    }
    cur.clear();
    for (auto& [code, d] : next) cur.push_back(std::move(d));
  }
  return cur;
}

}  // namespace reglab
