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


#include "reglab/robust_expansion.hpp"

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "reglab/errors.hpp"

namespace reglab {

namespace {

void validate(const ExpansionSpec& spec) {
  if (spec.nu <= Rational(0) || spec.nu >= Rational(1)) throw DomainError("nu outside (0,1)");
  if (spec.tau <= Rational(0) || spec.tau >= Rational(1)) throw DomainError("tau outside (0,1)");
  if (spec.nu > spec.tau) throw DomainError("need nu <= tau");
}

bool qualifies(int size, int n, const Rational& tau) {
  const __int128 lhs = static_cast<__int128>(size) * tau.den();
  return lhs > static_cast<__int128>(tau.num()) * n && lhs < static_cast<__int128>(tau.den() - tau.num()) * n;
}

}  // namespace

VertexSet robust_neighbourhood(const Digraph& g, const VertexSet& s, const Rational& nu, Direction dir) {
  const int n = g.n();
  if (s.universe() != n) throw DomainError("set over wrong universe");
  if (s.empty()) throw DomainError("empty set");
  VertexSet out(n);
  for (int x = 0; x < n; ++x) {
    const VertexSet& nb = dir == Direction::Out ? g.in(x) : g.out(x);
    if (nu.le_count(nb.intersection_size(s), n)) out.insert(x);
  }
  return out;
}

bool violates(const Digraph& g, const VertexSet& s, const ExpansionSpec& spec, Direction dir) {
  const int n = g.n();
  int rn = robust_neighbourhood(g, s, spec.nu, dir).size();
  return !spec.nu.le_count(rn - s.size(), n);
}

ExpansionVerdict check_expander(const Digraph& g, const ExpansionSpec& spec, const ExpanderOptions& opt) {
  validate(spec);
  const int n = g.n();
  ExpansionVerdict v;
  std::vector<Direction> dirs;
  if (spec.mode != ExpansionMode::In) dirs.push_back(Direction::Out);
  if (spec.mode != ExpansionMode::Out) dirs.push_back(Direction::In);

  if (opt.sampled) {
    v.exhaustive = false;
    std::vector<int> sizes;
    for (int s = 1; s < n; ++s)
      if (qualifies(s, n, spec.tau)) sizes.push_back(s);
    if (sizes.empty()) return v;
    std::mt19937_64 rng(opt.seed);
    std::vector<int> perm(n);
    for (int t = 0; t < opt.trials; ++t) {
      for (int i = 0; i < n; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      int size = sizes[rng() % sizes.size()];
      VertexSet s(n, std::vector<int>(perm.begin(), perm.begin() + size));
      ++v.checked;
      for (Direction d : dirs) {
        if (violates(g, s, spec, d)) {
          v.holds = false;
          v.violator = s;
          v.direction = d;
          return v;
        }
      }
    }
    return v;
  }

  if (n > opt.cap || n > 62) throw CapExceeded("expander scan above cap " + std::to_string(opt.cap));
  const int thr = static_cast<int>((spec.nu * Rational(n)).ceil());
  std::vector<std::uint64_t> in_mask(n), out_mask(n);
  for (int x = 0; x < n; ++x) {
    in_mask[x] = g.in(x).low_word();
    out_mask[x] = g.out(x).low_word();
  }
  std::vector<char> ok_size(n + 1, 0);
  for (int s = 0; s <= n; ++s) ok_size[s] = qualifies(s, n, spec.tau);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const int size = std::popcount(mask);
    if (!ok_size[size]) continue;
    ++v.checked;
    for (Direction d : dirs) {
      const auto& nb = d == Direction::Out ? in_mask : out_mask;
      int rn = 0;
      for (int x = 0; x < n; ++x) rn += std::popcount(nb[x] & mask) >= thr;
      if (!spec.nu.le_count(rn - size, n)) {
        v.holds = false;
        v.violator = VertexSet::from_mask(n, mask);
        v.direction = d;
        return v;
      }
    }
  }
  return v;
}

Certificate robdegseq_condition(const Digraph& g, const Rational& eta) {
  if (eta <= Rational(0) || eta >= Rational(1)) throw DomainError("eta outside (0,1)");
  return certify(g, CertificateKind::RobDegSeq, eta);
}

}  // namespace reglab
