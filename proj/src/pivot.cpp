#include "mbe/pivot.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbe {

namespace {

std::vector<VertexRef> targets_for(const BipartiteGraph& g, const Branch& b, VertexRef pivot,
                                   bool pivot_in_c) {
  std::vector<VertexRef> targets;
  if (pivot_in_c) targets.push_back(pivot);
  const Side os = opposite(pivot.side);
  for (uint32_t u : non_neighbors_in(g, pivot, b.at(os).c)) targets.push_back({os, u});
  return targets;
}

}  // namespace

std::vector<uint32_t> non_neighbors_in(const BipartiteGraph& g, VertexRef v,
                                       const std::vector<uint32_t>& pool) {
  auto nbrs = g.neighbors(v);
  std::vector<uint32_t> out;
  size_t j = 0;
  for (uint32_t u : pool) {
    while (j < nbrs.size() && nbrs[j] < u) ++j;
    if (j < nbrs.size() && nbrs[j] == u)
      ++j;
    else
      out.push_back(u);
  }
  return out;
}

PivotDecision pivot_basic(const BipartiteGraph& g, const Branch& b) {
  if (b.c_empty()) throw std::logic_error("pivot_basic: branch has no candidates");

  // Tie order: complement degree, Left before Right, C before X, index.
  bool found = false;
  uint32_t best_cd = 0;
  VertexRef best{Side::Left, 0};
  bool best_in_c = false;
  auto consider = [&](uint32_t cd, VertexRef v, bool in_c) {
    auto key = std::tuple(cd, v.side, !in_c, v.index);
    if (!found || key < std::tuple(best_cd, best.side, !best_in_c, best.index)) {
      found = true;
      best_cd = cd;
      best = v;
      best_in_c = in_c;
    }
  };
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = b.at(s);
    for (size_t i = 0; i < side.c.size(); ++i) consider(side.c_cd[i], {s, side.c[i]}, true);
    for (size_t i = 0; i < side.x.size(); ++i) consider(side.x_cd[i], {s, side.x[i]}, false);
  }

  PivotDecision d{best, best_in_c, targets_for(g, b, best, best_in_c)};
  if (d.targets.empty())
    throw std::logic_error("pivot_basic: pivot yields no targets (P2 should have fired)");
  return d;
}

Partition compute_partition(const Branch& b) {
  Partition p;
  auto fill = [&](const BranchSide& side, std::vector<uint32_t>& out) {
    for (size_t i = 0; i < side.c.size(); ++i)
      if (side.c_cdx[i] == 0 && side.c_cd[i] <= 2) out.push_back(side.c[i]);
  };
  fill(b.at(Side::Left), p.c_prime_left);
  fill(b.at(Side::Right), p.c_prime_right);
  return p;
}

std::vector<VertexRef> candidate_pivots(const BipartiteGraph& g, const Branch& b,
                                        const Partition& p, Workspace& ws) {
  std::vector<VertexRef> out;

  // A vertex of C' qualifies under (C2) iff it misses more vertices in the
  // opposite C than in the opposite C'; cd against C' is counted by marking
  // C' and walking the adjacency list once.
  for (Side s : {Side::Left, Side::Right}) {
    const auto& side = b.at(s);
    const auto& prime = s == Side::Left ? p.c_prime_left : p.c_prime_right;
    const auto& their_prime = s == Side::Left ? p.c_prime_right : p.c_prime_left;
    auto& mark = ws.marks(opposite(s));

    for (uint32_t v : their_prime) mark[v] = 1;
    size_t pi = 0;
    for (size_t i = 0; i < side.c.size(); ++i) {
      const uint32_t v = side.c[i];
      const bool in_prime = pi < prime.size() && prime[pi] == v;
      if (!in_prime) {
        out.push_back({s, v});  // (C1), C \ C'
        continue;
      }
      ++pi;
      if (side.c_cd[i] > 0) {
        uint32_t nbrs_in_prime = 0;
        for (uint32_t w : g.neighbors(s, v)) nbrs_in_prime += mark[w];
        const uint32_t cd_prime = static_cast<uint32_t>(their_prime.size()) - nbrs_in_prime;
        if (side.c_cd[i] > cd_prime) out.push_back({s, v});  // (C2)
      }
    }
    for (uint32_t v : side.x) out.push_back({s, v});  // (C1), X
    for (uint32_t v : their_prime) mark[v] = 0;
  }

  std::sort(out.begin(), out.end(), [&](VertexRef a, VertexRef c) {
    auto in_c = [&](VertexRef v) {
      const auto& list = b.at(v.side).c;
      return std::binary_search(list.begin(), list.end(), v.index);
    };
    return std::tuple(a.side, !in_c(a), a.index) < std::tuple(c.side, !in_c(c), c.index);
  });
  return out;
}

std::optional<PivotDecision> pivot_partitioned(const BipartiteGraph& g, const Branch& b,
                                               Workspace& ws) {
  const Partition p = compute_partition(b);
  const auto candidates = candidate_pivots(g, b, p, ws);
  if (candidates.empty()) return std::nullopt;

  auto cd_of = [&](VertexRef v, bool& in_c) {
    const auto& side = b.at(v.side);
    auto it = std::lower_bound(side.c.begin(), side.c.end(), v.index);
    if (it != side.c.end() && *it == v.index) {
      in_c = true;
      return side.c_cd[static_cast<size_t>(it - side.c.begin())];
    }
    in_c = false;
    auto xt = std::lower_bound(side.x.begin(), side.x.end(), v.index);
    return side.x_cd[static_cast<size_t>(xt - side.x.begin())];
  };

  // Tie order: complement degree, X before C, Left before Right, index.
  bool found = false;
  uint32_t best_cd = 0;
  VertexRef best{Side::Left, 0};
  bool best_in_c = false;
  for (VertexRef v : candidates) {
    bool in_c = false;
    const uint32_t cd = cd_of(v, in_c);
    auto key = std::tuple(cd, in_c, v.side, v.index);
    if (!found || key < std::tuple(best_cd, best_in_c, best.side, best.index)) {
      found = true;
      best_cd = cd;
      best = v;
      best_in_c = in_c;
    }
  }

  return PivotDecision{best, best_in_c, targets_for(g, b, best, best_in_c)};
}

}  // namespace mbe
