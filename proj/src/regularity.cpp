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

#include "reglab/regularity.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>
#include <vector>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

// Dense 0/1 matrix between two ordered vertex lists.
struct Bip {
  std::vector<int> arow;
  std::vector<int> bcol;
  std::vector<std::vector<char>> m;  // m[i][j] = edge arow[i] -> bcol[j]
  int na() const { return static_cast<int>(arow.size()); }
  int nb() const { return static_cast<int>(bcol.size()); }
};

template <typename G>
bool arc(const G& g, int u, int v) {
  return g.has_edge(u, v);
}

template <typename G>
Bip make_bip(const G& g, const std::vector<int>& a, const std::vector<int>& b) {
  Bip out{a, b, {}};
  out.m.assign(a.size(), std::vector<char>(b.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out.m[i][j] = (a[i] != b[j] && arc(g, a[i], b[j])) ? 1 : 0;
  return out;
}

// e(X,Y) with |X| = x and |Y| = y violates the property being checked.
struct Target {
  bool deviation = true;  // else "density <= d"
  Rational ref;           // reference density or d
  Rational eps;

  bool violated(std::int64_t e, std::int64_t x, std::int64_t y) const {
    __int128 xy = static_cast<__int128>(x) * y;
    if (deviation) {
      __int128 diff = static_cast<__int128>(e) * ref.den() - static_cast<__int128>(ref.num()) * xy;
      if (diff < 0) diff = -diff;
      return diff * eps.den() >= static_cast<__int128>(eps.num()) * ref.den() * xy;
    }
    return static_cast<__int128>(e) * ref.den() <= static_cast<__int128>(ref.num()) * xy;
  }

  Rational value(std::int64_t e, std::int64_t x, std::int64_t y) const {
    Rational dens(e, x * y);
    return deviation ? abs(dens - ref) : dens;
  }
};

int min_size(const Rational& eps, int total) {
  std::int64_t t = (eps * Rational(total)).ceil();
  return static_cast<int>(std::max<std::int64_t>(1, t));
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

struct Hit {
  std::vector<int> xs;  // indices into arow
  std::vector<int> ys;  // indices into bcol
  std::int64_t e = 0;
};

std::optional<Hit> exhaustive_scan(const Bip& bip, int xmin, int ymin, const Target& tgt, std::uint64_t& checked) {
  const int na = bip.na(), nb = bip.nb();
  std::vector<std::uint64_t> col(nb, 0);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i)
      if (bip.m[i][j]) col[j] |= std::uint64_t{1} << i;
  std::uint64_t per_x = 0;
  for (int y = ymin; y <= nb; ++y) per_x += binom(nb, y);

  std::vector<int> c(nb), sorted(nb);
  std::vector<std::int64_t> pre(nb + 1);
  const std::uint64_t xend = std::uint64_t{1} << na;
  for (std::uint64_t xm = 1; xm < xend; ++xm) {
    int x = std::popcount(xm);
    if (x < xmin) continue;
    for (int j = 0; j < nb; ++j) c[j] = std::popcount(col[j] & xm);
    sorted = c;
    std::sort(sorted.begin(), sorted.end());
    pre[0] = 0;
    for (int j = 0; j < nb; ++j) pre[j + 1] = pre[j] + sorted[j];
    bool any = false;
    for (int y = ymin; y <= nb && !any; ++y) {
      std::int64_t lo = pre[y], hi = pre[nb] - pre[nb - y];
      any = tgt.violated(lo, x, y) || tgt.violated(hi, x, y);
    }
    if (!any) {
      checked += per_x;
      continue;
    }
    const std::uint64_t yend = std::uint64_t{1} << nb;
    for (std::uint64_t ym = 1; ym < yend; ++ym) {
      int y = std::popcount(ym);
      if (y < ymin) continue;
      ++checked;
      std::int64_t e = 0;
      for (std::uint64_t bits = ym; bits; bits &= bits - 1) e += c[std::countr_zero(bits)];
      if (tgt.violated(e, x, y)) {
        Hit h;
        for (int i = 0; i < na; ++i)
          if ((xm >> i) & 1u) h.xs.push_back(i);
        for (int j = 0; j < nb; ++j)
          if ((ym >> j) & 1u) h.ys.push_back(j);
        h.e = e;
        return h;
      }
    }
  }
  return std::nullopt;
}

// Alternating best-response search from seeded starts. Finds witnesses, never
// certifies their absence.
std::optional<Hit> sampled_scan(const Bip& bip, int xmin, int ymin, const Target& tgt, const CheckOptions& opt,
                                std::uint64_t& checked) {
  const int na = bip.na(), nb = bip.nb();
  std::mt19937_64 rng(opt.seed);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  std::vector<int> ca(na), cb(nb);
  auto best = [](const std::vector<int>& score, int k, bool top) {
    std::vector<int> idx(score.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::stable_sort(idx.begin(), idx.end(), [&](int p, int q) { return top ? score[p] > score[q] : score[p] < score[q]; });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
  };
  for (int t = 0; t < opt.trials; ++t) {
    bool top = tgt.deviation ? (t % 2 == 0) : false;
    int x = pick(xmin, na), y = pick(ymin, nb);
    std::vector<int> perm(na);
    for (int i = 0; i < na; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> xs(perm.begin(), perm.begin() + x), ys;
    std::sort(xs.begin(), xs.end());
    for (int round = 0; round < 4; ++round) {
      std::fill(cb.begin(), cb.end(), 0);
      for (int i : xs)
        for (int j = 0; j < nb; ++j) cb[j] += bip.m[i][j];
      ys = best(cb, y, top);
      std::fill(ca.begin(), ca.end(), 0);
      for (int i = 0; i < na; ++i)
        for (int j : ys) ca[i] += bip.m[i][j];
      std::int64_t e = 0;
      for (int i : xs) e += ca[i];
      ++checked;
      if (tgt.violated(e, x, y)) return Hit{xs, ys, e};
      xs = best(ca, x, top);
      e = 0;
      for (int i : xs) e += ca[i];
      ++checked;
      if (tgt.violated(e, x, y)) return Hit{xs, ys, e};
    }
  }
  return std::nullopt;
}

RegularityVerdict run_scan(const Bip& bip, int universe, const Rational& eps, const Target& tgt,
                           const CheckOptions& opt) {
  RegularityVerdict v;
  const int xmin = min_size(eps, bip.na()), ymin = min_size(eps, bip.nb());
  std::optional<Hit> hit;
  bool exact = bip.na() <= opt.cap && bip.nb() <= opt.cap;
  if (exact && (bip.na() > 62 || bip.nb() > 62)) exact = false;
  if (exact) {
    hit = exhaustive_scan(bip, xmin, ymin, tgt, v.checked_pairs);
  } else {
    if (!opt.sampled)
      throw CapExceeded("pair sides " + std::to_string(bip.na()) + "x" + std::to_string(bip.nb()) +
                        " exceed exhaustive cap " + std::to_string(opt.cap));
    v.exhaustive = false;
    hit = sampled_scan(bip, xmin, ymin, tgt, opt, v.checked_pairs);
  }
  if (hit) {
    RegularityWitness w{VertexSet(universe), VertexSet(universe), tgt.value(hit->e, hit->xs.size(), hit->ys.size()),
                        tgt.deviation ? WitnessKind::Deviation : WitnessKind::LowDensity};
    for (int i : hit->xs) w.x.insert(bip.arow[i]);
    for (int j : hit->ys) w.y.insert(bip.bcol[j]);
    v.holds = false;
    v.witness = std::move(w);
  }
  return v;
}

template <typename G>
void validate(const G& g, const PairSpec& spec) {
  if (spec.a.universe() != g.n() || spec.b.universe() != g.n()) throw DomainError("pair sets over wrong universe");
  if (spec.a.empty() || spec.b.empty()) throw DomainError("empty side in pair");
  if (spec.a.intersects(spec.b)) throw DomainError("pair sides overlap");
  if (spec.epsilon <= Rational(0) || spec.epsilon > Rational(1)) throw DomainError("epsilon outside (0,1]");
}

template <typename G>
RegularityVerdict pair_regular(const G& g, const PairSpec& spec, const CheckOptions& opt) {
  validate(g, spec);
  Bip bip = make_bip(g, spec.a.members(), spec.b.members());
  Target tgt{true, density(g, spec.a, spec.b), spec.epsilon};
  return run_scan(bip, g.n(), spec.epsilon, tgt, opt);
}

template <typename G>
int deg_into(const G& g, int v, const VertexSet& s, bool outward) {
  if constexpr (std::is_same_v<G, Graph>) {
    (void)outward;
    return g.neighbours(v).intersection_size(s);
  } else {
    return (outward ? g.out(v) : g.in(v)).intersection_size(s);
  }
}

template <typename G>
RegularityVerdict pair_superregular(const G& g, const PairSpec& spec, const CheckOptions& opt) {
  validate(g, spec);
  const int na = spec.a.size(), nb = spec.b.size();
  std::optional<RegularityWitness> deg_fail;
  auto degree_check = [&](const VertexSet& side, const VertexSet& other, bool outward, bool singleton_is_x) {
    side.for_each([&](int v) {
      if (deg_fail) return;
      int dg = deg_into(g, v, other, outward);
      if (!spec.d.lt_count(dg, other.size())) {
        VertexSet single(g.n(), {v});
        deg_fail = singleton_is_x
                       ? RegularityWitness{single, other, Rational(dg, other.size()), WitnessKind::LowDegree}
                       : RegularityWitness{other, single, Rational(dg, other.size()), WitnessKind::LowDegree};
      }
    });
  };
  degree_check(spec.a, spec.b, true, true);
  if (!deg_fail) degree_check(spec.b, spec.a, false, false);
  if (deg_fail) {
    RegularityVerdict v;
    v.holds = false;
    v.witness = std::move(deg_fail);
    v.checked_pairs = 0;
    v.exhaustive = na <= opt.cap && nb <= opt.cap;
    return v;
  }
  Bip bip = make_bip(g, spec.a.members(), spec.b.members());
  Target tgt{false, spec.d, spec.epsilon};
  return run_scan(bip, g.n(), spec.epsilon, tgt, opt);
}

template <typename G>
VertexSet low_degree(const G& g, const PairSpec& spec, const VertexSet& y) {
  validate(g, spec);
  if (!y.subset_of(spec.b)) throw DomainError("Y is not a subset of B");
  if (!spec.epsilon.le_count(y.size(), spec.b.size())) throw DomainError("Y smaller than eps|B|");
  Rational thr = spec.d - spec.epsilon;
  VertexSet out(g.n());
  spec.a.for_each([&](int a) {
    int dg = deg_into(g, a, y, true);
    // dg <= thr * |Y|
    if (!thr.lt_count(dg, y.size())) out.insert(a);
  });
  return out;
}

}  // namespace

RegularityVerdict check_pair_regular(const Graph& g, const PairSpec& spec, const CheckOptions& opt) {
  return pair_regular(g, spec, opt);
}
RegularityVerdict check_pair_regular(const Digraph& g, const PairSpec& spec, const CheckOptions& opt) {
  return pair_regular(g, spec, opt);
}
RegularityVerdict check_pair_superregular(const Graph& g, const PairSpec& spec, const CheckOptions& opt) {
  return pair_superregular(g, spec, opt);
}
RegularityVerdict check_pair_superregular(const Digraph& g, const PairSpec& spec, const CheckOptions& opt) {
  return pair_superregular(g, spec, opt);
}

RegularityVerdict check_digraph_regular(const Digraph& g, const Rational& eps, const Rational& d,
                                        const CheckOptions& opt) {
  if (eps <= Rational(0) || eps > Rational(1)) throw DomainError("epsilon outside (0,1]");
  if (g.n() == 0) throw DomainError("empty digraph");
  std::vector<int> all(g.n());
  for (int v = 0; v < g.n(); ++v) all[v] = v;
  Bip bip = make_bip(g, all, all);
  Target tgt{true, d, eps};
  return run_scan(bip, g.n(), eps, tgt, opt);
}

RegularityVerdict check_digraph_superregular(const Digraph& g, const Rational& eps, const Rational& d,
                                             const CheckOptions& opt) {
  if (g.n() == 0) throw DomainError("empty digraph");
  for (int v = 0; v < g.n(); ++v) {
    int dg = std::min(g.out_degree(v), g.in_degree(v));
    if (!d.le_count(dg, g.n())) {
      RegularityVerdict out;
      out.holds = false;
      VertexSet single(g.n(), {v});
      out.witness = RegularityWitness{single, single, Rational(dg, g.n()), WitnessKind::LowDegree};
      out.exhaustive = g.n() <= opt.cap;
      return out;
    }
  }
  return check_digraph_regular(g, eps, d, opt);
}

VertexSet low_degree_vertices(const Graph& g, const PairSpec& spec, const VertexSet& y) {
  return low_degree(g, spec, y);
}
VertexSet low_degree_vertices(const Digraph& g, const PairSpec& spec, const VertexSet& y) {
  return low_degree(g, spec, y);
}

}  // namespace reglab
