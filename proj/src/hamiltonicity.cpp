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


#include "reglab/hamiltonicity.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_set>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

const VertexSet& outs(const Graph& g, int v) { return g.neighbours(v); }
const VertexSet& outs(const Digraph& g, int v) { return g.out(v); }
const VertexSet& ins(const Digraph& g, int v) { return g.in(v); }

// Visited-set/end states already known to lead nowhere.
class DeadStates {
 public:
  explicit DeadStates(int n) : n_(n) {
    if (n <= 22) dense_.assign(static_cast<std::size_t>(n) << n, false);
  }
  bool contains(std::uint64_t mask, int v) const {
    if (!dense_.empty()) return dense_[mask * n_ + v];
    return sparse_.count(mask * 64 + v) > 0;
  }
  void insert(std::uint64_t mask, int v) {
    if (!dense_.empty())
      dense_[mask * n_ + v] = true;
    else
      sparse_.insert(mask * 64 + v);
  }

 private:
  int n_;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

template <typename G>
std::optional<HamCycle> ham_impl(const G& g, int cap, int min_n) {
  const int n = g.n();
  if (n > cap) throw CapExceeded("Hamilton search above cap " + std::to_string(cap));
  if (n > 40) throw CapExceeded("Hamilton search needs at most 40 vertices");
  if (n < min_n) return std::nullopt;
  DeadStates dead(n);
  std::vector<int> path{0};
  VertexSet left = VertexSet::full(n);
  left.erase(0);
  std::uint64_t mask = 1;
  std::function<bool(int)> dfs = [&](int cur) -> bool {
    if (static_cast<int>(path.size()) == n) return g.has_edge(cur, 0);
    if (dead.contains(mask, cur)) return false;
    bool viable = true;
    VertexSet heads = left, tails = left;
    heads.insert(0);
    tails.insert(cur);
    left.for_each([&](int w) {
      if (!viable) return;
      if constexpr (std::is_same_v<G, Graph>) {
        VertexSet ends = left;
        ends.insert(0);
        ends.insert(cur);
        if (g.neighbours(w).intersection_size(ends) < 2) viable = false;
      } else {
        if (!outs(g, w).intersects(heads) || !ins(g, w).intersects(tails)) viable = false;
      }
    });
    if (viable) {
      bool found = false;
      (outs(g, cur) & left).for_each([&](int v) {
        if (found) return;
        path.push_back(v);
        left.erase(v);
        mask |= std::uint64_t{1} << v;
        found = dfs(v);
        if (found) return;
        mask &= ~(std::uint64_t{1} << v);
        left.insert(v);
        path.pop_back();
      });
      if (found) return true;
    }
    dead.insert(mask, cur);
    return false;
  };
  if (!dfs(0)) return std::nullopt;
  return HamCycle{path};
}

bool check_word(const std::string& word) {
  return std::all_of(word.begin(), word.end(), [](char c) { return c == 'f' || c == 'b'; });
}

bool letter_ok(const Digraph& g, char letter, int a, int b) {
  return letter == 'f' ? g.has_edge(a, b) : g.has_edge(b, a);
}

}  // namespace

const char* kind_name(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Dirac: return "dirac";
    case CertificateKind::Posa: return "posa";
    case CertificateKind::Chvatal: return "chvatal";
    case CertificateKind::GhouilaHouri: return "ghouila-houri";
    case CertificateKind::NashWilliamsStyle: return "nash-williams";
    case CertificateKind::RobDegSeq: return "robdegseq";
  }
  return "?";
}

std::optional<CertificateKind> parse_kind(const std::string& name) {
  for (auto k : {CertificateKind::Dirac, CertificateKind::Posa, CertificateKind::Chvatal,
                 CertificateKind::GhouilaHouri, CertificateKind::NashWilliamsStyle, CertificateKind::RobDegSeq})
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

Certificate certify(const Graph& g, CertificateKind kind) {
  const int n = g.n();
  Certificate c{kind, true, std::nullopt, ""};
  if (kind != CertificateKind::Dirac && kind != CertificateKind::Posa && kind != CertificateKind::Chvatal)
    throw PreconditionError(std::string(kind_name(kind)) + " applies to digraphs");
  if (n < 3) throw PreconditionError("certificates need n >= 3");
  std::vector<int> d = degree_sequence(g);
  auto at = [&](int i) { return d[i - 1]; };
  auto fail = [&](int i, std::string why) {
    c.satisfied = false;
    c.failing_index = i;
    c.detail = std::move(why);
  };
  switch (kind) {
    case CertificateKind::Dirac:
      if (2 * at(1) < n) fail(1, "d_1 < n/2");
      break;
    case CertificateKind::Posa:
      for (int i = 1; 2 * i < n - 1; ++i)
        if (at(i) < i + 1) {
          fail(i, "d_i < i+1");
          break;
        }
      break;
    default:
      for (int i = 1; 2 * i < n; ++i)
        if (at(i) < i + 1 && at(n - i) < n - i) {
          fail(i, "d_i < i+1 and d_{n-i} < n-i");
          break;
        }
  }
  return c;
}

Certificate certify(const Digraph& g, CertificateKind kind, const Rational& eta) {
  const int n = g.n();
  Certificate c{kind, true, std::nullopt, ""};
  if (kind != CertificateKind::GhouilaHouri && kind != CertificateKind::NashWilliamsStyle &&
      kind != CertificateKind::RobDegSeq)
    throw PreconditionError(std::string(kind_name(kind)) + " applies to graphs");
  if (n < 3) throw PreconditionError("certificates need n >= 3");
  auto [dout, din] = degree_sequences(g);
  auto fail = [&](int i, std::string why) {
    c.satisfied = false;
    c.failing_index = i;
    c.detail = std::move(why);
  };
  if (kind == CertificateKind::GhouilaHouri) {
    if (2 * g.min_semidegree() < n) fail(1, "delta0 < n/2");
    return c;
  }
  if (kind == CertificateKind::NashWilliamsStyle) {
    if (!is_strongly_connected(g)) {
      c.satisfied = false;
      c.detail = "not strongly connected";
      return c;
    }
    for (int i = 1; 2 * i < n; ++i) {
      if (dout[i - 1] < i + 1 && din[n - i - 1] < n - i) {
        fail(i, "(i) d+_i < i+1 and d-_{n-i} < n-i");
        break;
      }
      if (din[i - 1] < i + 1 && dout[n - i - 1] < n - i) {
        fail(i, "(ii) d-_i < i+1 and d+_{n-i} < n-i");
        break;
      }
    }
    return c;
  }
  if (eta < Rational(0) || eta >= Rational(1)) throw DomainError("eta outside [0,1)");
  const Rational en = eta * Rational(n);
  for (int i = 1; 2 * i < n; ++i) {
    const Rational need = Rational(i) + en;
    const std::int64_t j = (Rational(n - i) - en).floor();
    auto alt = [&](const std::vector<int>& seq) { return j >= 1 && seq[j - 1] >= n - i; };
    if (Rational(dout[i - 1]) < need && !alt(din)) {
      fail(i, "(i) d+_i < i + eta n and d-_{n-i-eta n} < n-i");
      break;
    }
    if (Rational(din[i - 1]) < need && !alt(dout)) {
      fail(i, "(ii) d-_i < i + eta n and d+_{n-i-eta n} < n-i");
      break;
    }
  }
  return c;
}

std::optional<HamCycle> hamilton_oracle(const Graph& g, int cap) { return ham_impl(g, cap, 3); }
std::optional<HamCycle> hamilton_oracle(const Digraph& g, int cap) { return ham_impl(g, cap, 2); }

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  if (n < 3 || static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n])) return false;
  return true;
}

bool is_hamilton_cycle(const Digraph& g, const std::vector<int>& order) {
  const int n = g.n();
  if (n < 2 || static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n])) return false;
  return true;
}

bool matches_pattern(const Digraph& g, const std::vector<int>& order, const std::string& word) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n || static_cast<int>(word.size()) != n || n < 3) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!letter_ok(g, word[i], order[i], order[(i + 1) % n])) return false;
  return true;
}

std::string alternating_word(int n) {
  std::string w(n, 'f');
  for (int i = 1; i < n; i += 2) w[i] = 'b';
  return w;
}

OrientedResult oriented_hamilton_oracle(const Digraph& g, const std::string& word, int cap) {
  const int n = g.n();
  if (n > cap || n > 30) throw CapExceeded("oriented Hamilton search above cap " + std::to_string(cap));
  if (static_cast<int>(word.size()) != n || !check_word(word))
    throw PreconditionError("word must have one f/b letter per vertex");
  OrientedResult res;
  bool alternating = n > 0;
  for (int i = 0; i + 1 < n; ++i)
    if (word[i] == word[i + 1]) alternating = false;
  if (alternating && n % 2 == 1) {
    res.status = OrientedStatus::Impossible;
    return res;
  }
  if (n < 3) return res;

  std::set<std::string> tried;
  std::vector<std::uint32_t> reach(std::size_t{1} << n);
  for (int r = 0; r < n; ++r) {
    std::string w = word.substr(r) + word.substr(0, r);
    if (!tried.insert(w).second) continue;
    std::fill(reach.begin(), reach.end(), 0);
    reach[1] = 1;
    for (std::uint32_t mask = 1; mask < reach.size(); mask += 2) {
      std::uint32_t lasts = reach[mask];
      if (!lasts) continue;
      const int pos = std::popcount(mask) - 1;
      if (pos == n - 1) continue;
      for (std::uint32_t ls = lasts; ls; ls &= ls - 1) {
        int u = std::countr_zero(ls);
        const VertexSet& nb = w[pos] == 'f' ? g.out(u) : g.in(u);
        std::uint32_t cand = static_cast<std::uint32_t>(nb.low_word()) & ~mask;
        for (std::uint32_t cs = cand; cs; cs &= cs - 1) {
          int v = std::countr_zero(cs);
          reach[mask | (1u << v)] |= 1u << v;
        }
      }
    }
    const std::uint32_t full = static_cast<std::uint32_t>(reach.size() - 1);
    int last = -1;
    for (std::uint32_t ls = reach[full]; ls && last < 0; ls &= ls - 1) {
      int v = std::countr_zero(ls);
      if (letter_ok(g, w[n - 1], v, 0)) last = v;
    }
    if (last < 0) continue;
    std::vector<int> order(n);
    std::uint32_t mask = full;
    for (int pos = n - 1; pos >= 1; --pos) {
      order[pos] = last;
      mask &= ~(1u << last);
      int prev = -1;
      for (std::uint32_t ls = reach[mask]; ls && prev < 0; ls &= ls - 1) {
        int u = std::countr_zero(ls);
        if (letter_ok(g, w[pos - 1], u, last)) prev = u;
      }
      last = prev;
    }
    order[0] = 0;
    res.status = OrientedStatus::Found;
    res.order = order;
    res.rotation = r;
    return res;
  }
  return res;
}

NeutralCount neutral_pairs(const Digraph& g) {
  NeutralCount out;
  for (int y = 0; y < g.n(); ++y) {
    long d = (g.in(y) - g.out(y)).size();
    if ((g.in(y) & g.out(y)).size() > 0) out.has_two_cycles = true;
    out.count += d * (d - 1) / 2;
  }
  return out;
}

int neutral_pairs_cycle(const std::string& word) {
  if (!check_word(word)) throw PreconditionError("word letters must be f or b");
  const int n = static_cast<int>(word.size());
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (word[i] == 'f' && word[(i + 1) % n] == 'b') ++c;
  return c;
}

std::optional<std::vector<int>> find_oriented_path(const Digraph& g, int x, int y, const std::string& word,
                                                   int cap) {
  const int n = g.n();
  if (n > cap || n > 60) throw CapExceeded("oriented path search above cap " + std::to_string(cap));
  if (x < 0 || y < 0 || x >= n || y >= n || x == y) throw PreconditionError("need distinct endpoints in range");
  const int k = static_cast<int>(word.size());
  if (k < 1 || k > n - 1 || !check_word(word)) throw PreconditionError("word length must lie in [1, n-1]");
  std::vector<int> path{x};
  std::uint64_t mask = std::uint64_t{1} << x;
  std::unordered_set<std::uint64_t> dead;
  std::function<bool(int)> dfs = [&](int cur) -> bool {
    const int i = static_cast<int>(path.size()) - 1;
    if (i == k) return cur == y;
    const std::uint64_t key = mask * 64 + cur;
    if (dead.count(key)) return false;
    const VertexSet& nb = word[i] == 'f' ? g.out(cur) : g.in(cur);
    bool found = false;
    nb.for_each([&](int v) {
      if (found || ((mask >> v) & 1u)) return;
      if ((i + 1 == k) != (v == y)) return;
      path.push_back(v);
      mask |= std::uint64_t{1} << v;
      found = dfs(v);
      if (found) return;
      mask &= ~(std::uint64_t{1} << v);
      path.pop_back();
    });
    if (!found) dead.insert(key);
    return found;
  };
  if (!dfs(x)) return std::nullopt;
  return path;
}

MatchingResult bipartite_matching(int na, int nb, const std::vector<std::pair<int, int>>& edges) {
  if (na < 0 || nb < 0) throw DomainError("negative side size");
  std::vector<std::vector<int>> adj(na);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= na || b < 0 || b >= nb) throw DomainError("matching edge out of range");
    adj[a].push_back(b);
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  MatchingResult res;
  res.match_a.assign(na, -1);
  res.match_b.assign(nb, -1);
  std::vector<int> dist(na);
  const int inf = na + nb + 5;
  auto bfs = [&]() {
    std::deque<int> q;
    bool found = false;
    for (int a = 0; a < na; ++a) {
      dist[a] = res.match_a[a] < 0 ? 0 : inf;
      if (dist[a] == 0) q.push_back(a);
    }
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b : adj[a]) {
        int a2 = res.match_b[b];
        if (a2 < 0) {
          found = true;
        } else if (dist[a2] == inf) {
          dist[a2] = dist[a] + 1;
          q.push_back(a2);
        }
      }
    }
    return found;
  };
  std::function<bool(int)> dfs = [&](int a) -> bool {
    for (int b : adj[a]) {
      int a2 = res.match_b[b];
      if (a2 < 0 || (dist[a2] == dist[a] + 1 && dfs(a2))) {
        res.match_a[a] = b;
        res.match_b[b] = a;
        return true;
      }
    }
    dist[a] = inf;
    return false;
  };
  while (bfs())
    for (int a = 0; a < na; ++a)
      if (res.match_a[a] < 0 && dfs(a)) ++res.size;
  res.saturating = res.size == na;
  if (!res.saturating) {
    int root = static_cast<int>(std::find(res.match_a.begin(), res.match_a.end(), -1) - res.match_a.begin());
    std::vector<char> seen_a(na, 0), seen_b(nb, 0);
    std::deque<int> q{root};
    seen_a[root] = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b : adj[a]) {
        if (seen_b[b]) continue;
        seen_b[b] = 1;
        int a2 = res.match_b[b];
        if (a2 >= 0 && !seen_a[a2]) {
          seen_a[a2] = 1;
          q.push_back(a2);
        }
      }
    }
    std::vector<int> s;
    for (int a = 0; a < na; ++a)
      if (seen_a[a]) s.push_back(a);
    res.violator = s;
  }
  return res;
}

OneFactorResult one_factor(const Digraph& g) {
  const int n = g.n();
  MatchingResult m = bipartite_matching(n, n, g.edges());
  OneFactorResult res;
  if (!m.saturating) {
    res.violator = m.violator;
    return res;
  }
  OneFactor f;
  f.successor = m.match_a;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<int> cyc;
    for (int u = v; !seen[u]; u = f.successor[u]) {
      seen[u] = 1;
      cyc.push_back(u);
    }
    f.cycles.push_back(cyc);
  }
  res.factor = f;
  return res;
}

namespace {

// Close a path whose end vertices have all their relevant neighbours on it.
std::optional<std::vector<int>> close_path(const Digraph& g, const std::vector<int>& u, RotationResult& stats) {
  const int k = static_cast<int>(u.size()) - 1;
  if (k >= 1 && g.has_edge(u[k], u[0])) return u;
  auto seg = [&](std::vector<int>& out, int from, int to) {
    for (int t = from; t <= to; ++t) out.push_back(u[t]);
  };
  // Case 1: u_k -> u_a, u_b -> u_0 and u_{a-1} -> u_{b+1} with 1 <= a <= b < k.
  for (int a = 1; a < k; ++a) {
    if (!g.has_edge(u[k], u[a])) continue;
    for (int b = a; b < k; ++b) {
      if (!g.has_edge(u[b], u[0]) || !g.has_edge(u[a - 1], u[b + 1])) continue;
      std::vector<int> c;
      seg(c, 0, a - 1);
      seg(c, b + 1, k);
      seg(c, a, b);
      ++stats.case1;
      return c;
    }
  }
  // Case 2: u_p -> u_0, u_k -> u_q, u_i -> u_{p+1}, u_{q-1} -> u_j and
  // u_{j-1} -> u_{i+1} with i < p, p + 2 <= q < j <= k.
  for (int p = 1; p < k; ++p) {
    if (!g.has_edge(u[p], u[0])) continue;
    for (int q = p + 2; q < k; ++q) {
      if (!g.has_edge(u[k], u[q])) continue;
      for (int i = 0; i < p; ++i) {
        if (!g.has_edge(u[i], u[p + 1])) continue;
        for (int j = q + 1; j <= k; ++j) {
          if (!g.has_edge(u[q - 1], u[j]) || !g.has_edge(u[j - 1], u[i + 1])) continue;
          std::vector<int> c;
          seg(c, 0, i);
          seg(c, p + 1, q - 1);
          seg(c, j, k);
          seg(c, q, j - 1);
          seg(c, i + 1, p);
          ++stats.case2;
          return c;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RotationResult rotation_extension_hamilton(const Digraph& g) {
  const int n = g.n();
  RotationResult res;
  OneFactorResult f = one_factor(g);
  if (!f.factor || n < 2) {
    res.failed_step = "one-factor";
    return res;
  }
  const OneFactor& factor = *f.factor;
  // Cycle of the factor read from v around to v's predecessor.
  auto around = [&](int v) {
    std::vector<int> out{v};
    for (int u = factor.successor[v]; u != v; u = factor.successor[u]) out.push_back(u);
    return out;
  };

  std::vector<int> path = factor.cycles[0];
  VertexSet on(n, path);
  while (true) {
    for (bool grew = true; grew;) {
      grew = false;
      VertexSet ext = g.out(path.back()) - on;
      if (!ext.empty()) {
        for (int v : around(ext.first())) path.push_back(v), on.insert(v);
        grew = true;
        continue;
      }
      ext = g.in(path.front()) - on;
      if (!ext.empty()) {
        std::vector<int> cyc = around(factor.successor[ext.first()]);
        for (int v : path) cyc.push_back(v);
        path = std::move(cyc);
        for (int v : path) on.insert(v);
        grew = true;
      }
    }
    auto closed = close_path(g, path, res);
    if (!closed) {
      res.failed_step = "close";
      return res;
    }
    ++res.closures;
    std::vector<int> c = std::move(*closed);
    if (static_cast<int>(c.size()) == n) {
      res.cycle = HamCycle{c};
      return res;
    }
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(c.size()); ++i) pos[c[i]] = i;
    const int len = static_cast<int>(c.size());
    bool absorbed = false;
    on.complement().for_each([&](int x) {
      if (absorbed) return;
      VertexSet to = g.out(x) & on;
      VertexSet from = g.in(x) & on;
      if (!to.empty()) {
        // x+ C_x x y C y-
        int y = to.first();
        path = around(factor.successor[x]);
        for (int t = 0; t < len; ++t) path.push_back(c[(pos[y] + t) % len]);
      } else if (!from.empty()) {
        // y+ C y x C_x x-
        int y = from.first();
        path.clear();
        for (int t = 1; t <= len; ++t) path.push_back(c[(pos[y] + t) % len]);
        for (int v : around(x)) path.push_back(v);
      } else {
        return;
      }
      absorbed = true;
    });
    if (!absorbed) {
      res.failed_step = "absorb";
      return res;
    }
    on = VertexSet(n, path);
  }
}

}  // namespace reglab
