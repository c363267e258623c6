#include "mbe/branch.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbe {

namespace {

constexpr uint8_t kInC = 1;
constexpr uint8_t kInX = 2;

bool sorted_contains(const std::vector<uint32_t>& v, uint32_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

// Recomputes every cached counter of `b` by walking adjacency lists against
// scratch marks of the opposite side's C and X.
void rebuild_counters(const BipartiteGraph& g, Branch& b, Workspace& ws) {
  for (Side s : {Side::Left, Side::Right}) {
    const Side os = opposite(s);
    auto& mine = b.at(s);
    const auto& theirs = b.at(os);
    auto& mark = ws.marks(os);

    for (uint32_t v : theirs.c) mark[v] = kInC;
    for (uint32_t v : theirs.x) mark[v] = kInX;

    const auto c_total = static_cast<uint32_t>(theirs.c.size());
    const auto x_total = static_cast<uint32_t>(theirs.x.size());
    mine.c_cd.resize(mine.c.size());
    mine.c_cdx.resize(mine.c.size());
    mine.x_cd.resize(mine.x.size());
    for (size_t i = 0; i < mine.c.size(); ++i) {
      uint32_t in_c = 0, in_x = 0;
      for (uint32_t w : g.neighbors(s, mine.c[i])) {
        in_c += mark[w] == kInC;
        in_x += mark[w] == kInX;
      }
      mine.c_cd[i] = c_total - in_c;
      mine.c_cdx[i] = x_total - in_x;
    }
    for (size_t i = 0; i < mine.x.size(); ++i) {
      uint32_t in_c = 0;
      for (uint32_t w : g.neighbors(s, mine.x[i])) in_c += mark[w] == kInC;
      mine.x_cd[i] = c_total - in_c;
    }

    for (uint32_t v : theirs.c) mark[v] = 0;
    for (uint32_t v : theirs.x) mark[v] = 0;
  }
}

void require_sorted_unique(const std::vector<uint32_t>& v, const char* what) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) throw std::logic_error(std::string("branch list not sorted: ") + what);
}

// Keeps the elements of sorted `items` that are neighbors of v, i.e. present
// in v's sorted adjacency list.
std::vector<uint32_t> keep_neighbors(const BipartiteGraph& g, VertexRef v,
                                     const std::vector<uint32_t>& items) {
  auto nbrs = g.neighbors(v);
  std::vector<uint32_t> out;
  out.reserve(items.size());
  size_t i = 0, j = 0;
  while (i < items.size() && j < nbrs.size()) {
    if (items[i] < nbrs[j]) {
      ++i;
    } else if (items[i] > nbrs[j]) {
      ++j;
    } else {
      out.push_back(items[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

void Workspace::ensure(const BipartiteGraph& g) {
  for (Side s : {Side::Left, Side::Right})
    if (marks_[side_index(s)].size() < g.count(s))
      marks_[side_index(s)].assign(g.count(s), 0);
}

Branch make_root(const BipartiteGraph& g, Workspace& ws) {
  ws.ensure(g);
  Branch b;
  for (Side s : {Side::Left, Side::Right}) {
    auto& c = b.at(s).c;
    for (uint32_t v = 0; v < g.count(s); ++v)
      if (g.degree(s, v) > 0) c.push_back(v);  // isolated vertices can never join a biclique
  }
  rebuild_counters(g, b, ws);
  return b;
}

Branch make_branch(const BipartiteGraph& g, std::vector<uint32_t> s_left,
                   std::vector<uint32_t> s_right, std::vector<uint32_t> c_left,
                   std::vector<uint32_t> c_right, std::vector<uint32_t> x_left,
                   std::vector<uint32_t> x_right, Workspace& ws) {
  ws.ensure(g);
  Branch b;
  b.at(Side::Left).s = std::move(s_left);
  b.at(Side::Right).s = std::move(s_right);
  b.at(Side::Left).c = std::move(c_left);
  b.at(Side::Right).c = std::move(c_right);
  b.at(Side::Left).x = std::move(x_left);
  b.at(Side::Right).x = std::move(x_right);
  rebuild_counters(g, b, ws);
  check_branch_invariants(g, b);
  return b;
}

Branch expand(const BipartiteGraph& g, const Branch& b, VertexRef v,
              std::span<const VertexRef> preceding, Workspace& ws) {
  ws.ensure(g);
  const Side vs = v.side;
  const Side os = opposite(vs);
  if (!sorted_contains(b.at(vs).c, v.index))
    throw std::logic_error("expand: vertex is not a candidate of this branch");

  std::array<std::vector<uint32_t>, 2> pre;
  for (VertexRef p : preceding) {
    if (!sorted_contains(b.at(p.side).c, p.index))
      throw std::logic_error("expand: preceding vertex is not a candidate of this branch");
    pre[side_index(p.side)].push_back(p.index);
  }
  for (auto& list : pre) std::sort(list.begin(), list.end());

  Branch child;
  auto& same = child.at(vs);
  auto& other = child.at(os);

  same.s = b.at(vs).s;
  same.s.insert(std::upper_bound(same.s.begin(), same.s.end(), v.index), v.index);
  other.s = b.at(os).s;

  // C loses v and the preceding targets on v's side; the opposite side keeps
  // only v's neighbors (and drops preceding targets there too).
  const auto& pre_same = pre[side_index(vs)];
  const auto& pre_other = pre[side_index(os)];
  same.c.reserve(b.at(vs).c.size());
  for (uint32_t u : b.at(vs).c)
    if (u != v.index && !sorted_contains(pre_same, u)) same.c.push_back(u);
  {
    std::vector<uint32_t> kept;
    kept.reserve(b.at(os).c.size());
    for (uint32_t u : b.at(os).c)
      if (!sorted_contains(pre_other, u)) kept.push_back(u);
    other.c = keep_neighbors(g, v, kept);
  }

  // X gains the preceding targets; everything on v's opposite side that is
  // not a neighbor of v can no longer witness non-maximality and is dropped.
  same.x.resize(b.at(vs).x.size() + pre_same.size());
  std::merge(b.at(vs).x.begin(), b.at(vs).x.end(), pre_same.begin(), pre_same.end(),
             same.x.begin());
  {
    std::vector<uint32_t> merged(b.at(os).x.size() + pre_other.size());
    std::merge(b.at(os).x.begin(), b.at(os).x.end(), pre_other.begin(), pre_other.end(),
               merged.begin());
    other.x = keep_neighbors(g, v, merged);
  }

  rebuild_counters(g, child, ws);
  return child;
}

TerminalKind classify_terminal(const Branch& b, AlgoTier tier) {
  if (tier == AlgoTier::Basic) {
    if (!b.c_empty()) return TerminalKind::NotTerminal;
    return b.x_empty() ? TerminalKind::TrivialMaximal : TerminalKind::TrivialDead;
  }
  // bps/ips: terminate as soon as X is empty and no candidate has more than
  // two non-neighbors across C (C empty and X empty is the degenerate case).
  if (!b.x_empty()) return b.c_empty() ? TerminalKind::TrivialDead : TerminalKind::NotTerminal;
  for (const auto& side : b.side)
    for (uint32_t cd : side.c_cd)
      if (cd > 2) return TerminalKind::NotTerminal;
  return TerminalKind::BiplexBatch;
}

bool prune_p1(const Branch& b, SizeConstraints k) {
  const auto& l = b.at(Side::Left);
  const auto& r = b.at(Side::Right);
  return l.s.size() + l.c.size() < k.tau_l || r.s.size() + r.c.size() < k.tau_r;
}

bool prune_p2(const Branch& b) {
  for (const auto& side : b.side)
    for (uint32_t cd : side.x_cd)
      if (cd == 0) return true;
  return false;
}

void check_branch_invariants(const BipartiteGraph& g, const Branch& b) {
  for (Side s : {Side::Left, Side::Right}) {
    const auto& mine = b.at(s);
    require_sorted_unique(mine.s, "s");
    require_sorted_unique(mine.c, "c");
    require_sorted_unique(mine.x, "x");
    for (uint32_t v : mine.s)
      if (sorted_contains(mine.c, v) || sorted_contains(mine.x, v))
        throw std::logic_error("branch sets are not disjoint");
    for (uint32_t v : mine.c)
      if (sorted_contains(mine.x, v)) throw std::logic_error("branch sets are not disjoint");
    if (mine.c_cd.size() != mine.c.size() || mine.c_cdx.size() != mine.c.size() ||
        mine.x_cd.size() != mine.x.size())
      throw std::logic_error("counter vectors out of step with vertex lists");
  }

  const auto& sl = b.at(Side::Left).s;
  const auto& sr = b.at(Side::Right).s;
  for (uint32_t u : sl)
    for (uint32_t v : sr)
      if (!g.adjacent(Side::Left, u, v)) throw std::logic_error("S does not induce a biclique");

  for (Side s : {Side::Left, Side::Right}) {
    const auto& mine = b.at(s);
    const auto& their_s = b.at(opposite(s)).s;
    for (uint32_t v : mine.c)
      for (uint32_t u : their_s)
        if (!g.adjacent(s, v, u)) throw std::logic_error("candidate not adjacent to all of S");
    for (uint32_t v : mine.x)
      for (uint32_t u : their_s)
        if (!g.adjacent(s, v, u)) throw std::logic_error("excluded vertex not adjacent to all of S");
  }

  // Counters against slow per-pair recomputation.
  for (Side s : {Side::Left, Side::Right}) {
    const auto& mine = b.at(s);
    const auto& theirs = b.at(opposite(s));
    auto count_missing = [&](uint32_t v, const std::vector<uint32_t>& pool) {
      uint32_t misses = 0;
      for (uint32_t u : pool) misses += !g.adjacent(s, v, u);
      return misses;
    };
    for (size_t i = 0; i < mine.c.size(); ++i) {
      if (mine.c_cd[i] != count_missing(mine.c[i], theirs.c))
        throw std::logic_error("stale candidate counter (vs C)");
      if (mine.c_cdx[i] != count_missing(mine.c[i], theirs.x))
        throw std::logic_error("stale candidate counter (vs X)");
    }
    for (size_t i = 0; i < mine.x.size(); ++i)
      if (mine.x_cd[i] != count_missing(mine.x[i], theirs.c))
        throw std::logic_error("stale exclusion counter (vs C)");
  }
}

}  // namespace mbe
