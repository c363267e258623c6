#include "mbe/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mbe {

namespace {

// mt19937_64 gives a portable bit stream; the mappings below avoid the
// implementation-defined std distributions so seeded output is stable
// across standard libraries.
class StableRng {
 public:
  explicit StableRng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  double next_double() {  // uniform in [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  uint32_t next_below(uint32_t bound) {  // uniform in [0, bound)
    return static_cast<uint32_t>(next_u64() % bound);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (uint32_t i = static_cast<uint32_t>(v.size()); i > 1; --i)
      std::swap(v[i - 1], v[next_below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace

BipartiteGraph BipartiteGraph::from_edges(uint32_t left_count, uint32_t right_count,
                                          std::vector<std::pair<uint32_t, uint32_t>> edges) {
  BipartiteGraph g;
  g.adj_[0].resize(left_count);
  g.adj_[1].resize(right_count);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [u, v] : edges) {
    if (u >= left_count || v >= right_count)
      throw std::invalid_argument("edge endpoint out of range");
    g.adj_[0][u].push_back(v);
    g.adj_[1][v].push_back(u);
  }
  for (auto& side : g.adj_)
    for (auto& list : side) list.shrink_to_fit();
  g.edge_count_ = edges.size();
  for (size_t s = 0; s < 2; ++s) {
    g.ids_[s].resize(g.adj_[s].size());
    for (size_t v = 0; v < g.ids_[s].size(); ++v) g.ids_[s][v] = v + 1;
  }
  return g;
}

uint32_t BipartiteGraph::max_degree() const {
  uint32_t best = 0;
  for (const auto& side : adj_)
    for (const auto& list : side) best = std::max(best, static_cast<uint32_t>(list.size()));
  return best;
}

bool BipartiteGraph::adjacent(Side s, uint32_t v, uint32_t u) const {
  const auto& list = adj_[side_index(s)][v];
  return std::binary_search(list.begin(), list.end(), u);
}

bool BipartiteGraph::index_of(Side s, uint64_t id, uint32_t& out) const {
  const auto& ids = ids_[side_index(s)];
  for (uint32_t v = 0; v < ids.size(); ++v) {
    if (ids[v] == id) {
      out = v;
      return true;
    }
  }
  return false;
}

void BipartiteGraph::set_original_ids(std::vector<uint64_t> left_ids,
                                      std::vector<uint64_t> right_ids) {
  if (left_ids.size() != adj_[0].size() || right_ids.size() != adj_[1].size())
    throw std::invalid_argument("id table size mismatch");
  ids_[0] = std::move(left_ids);
  ids_[1] = std::move(right_ids);
}

BipartiteGraph load_konect(std::istream& in) {
  std::array<std::unordered_map<uint64_t, uint32_t>, 2> remap;
  std::array<std::vector<uint64_t>, 2> ids;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  auto intern = [&](size_t s, uint64_t id) {
    auto [it, inserted] = remap[s].emplace(id, static_cast<uint32_t>(ids[s].size()));
    if (inserted) ids[s].push_back(id);
    return it->second;
  };

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '%') continue;

    std::istringstream fields(line);
    long long raw_u = 0, raw_v = 0;
    if (!(fields >> raw_u >> raw_v))
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected two integer ids");
    if (raw_u <= 0 || raw_v <= 0)
      throw std::runtime_error("line " + std::to_string(line_no) + ": ids must be positive");
    uint32_t u = intern(0, static_cast<uint64_t>(raw_u));
    uint32_t v = intern(1, static_cast<uint64_t>(raw_v));
    edges.emplace_back(u, v);
  }

  auto g = BipartiteGraph::from_edges(static_cast<uint32_t>(ids[0].size()),
                                      static_cast<uint32_t>(ids[1].size()), std::move(edges));
  g.set_original_ids(std::move(ids[0]), std::move(ids[1]));
  return g;
}

void save_konect(const BipartiteGraph& g, std::ostream& out) {
  out << "% bip " << g.left_count() << ' ' << g.right_count() << ' ' << g.edge_count() << '\n';
  std::vector<std::pair<uint64_t, uint64_t>> lines;
  lines.reserve(g.edge_count());
  for (uint32_t u = 0; u < g.left_count(); ++u)
    for (uint32_t v : g.neighbors(Side::Left, u))
      lines.emplace_back(g.original_id(Side::Left, u), g.original_id(Side::Right, v));
  std::sort(lines.begin(), lines.end());
  for (auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

NormalizedGraph normalize_sides(const BipartiteGraph& g) {
  if (g.left_count() <= g.right_count()) return {g, false};
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(g.edge_count());
  for (uint32_t u = 0; u < g.left_count(); ++u)
    for (uint32_t v : g.neighbors(Side::Left, u)) edges.emplace_back(v, u);
  auto swapped = BipartiteGraph::from_edges(g.right_count(), g.left_count(), std::move(edges));
  std::vector<uint64_t> left_ids(g.right_count()), right_ids(g.left_count());
  for (uint32_t v = 0; v < g.right_count(); ++v) left_ids[v] = g.original_id(Side::Right, v);
  for (uint32_t u = 0; u < g.left_count(); ++u) right_ids[u] = g.original_id(Side::Left, u);
  swapped.set_original_ids(std::move(left_ids), std::move(right_ids));
  return {std::move(swapped), true};
}

BipartiteGraph gen_crown(uint32_t half) {
  if (half < 2) throw std::invalid_argument("crown generator needs half >= 2");
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(static_cast<size_t>(half) * (half - 1));
  for (uint32_t i = 0; i < half; ++i)
    for (uint32_t j = 0; j < half; ++j)
      if (i != j) edges.emplace_back(i, j);
  return BipartiteGraph::from_edges(half, half, std::move(edges));
}

BipartiteGraph gen_random_bipartite(uint32_t left, uint32_t right, double p, uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in [0,1]");
  StableRng rng(seed);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < left; ++u)
    for (uint32_t v = 0; v < right; ++v)
      if (rng.next_double() < p) edges.emplace_back(u, v);
  return BipartiteGraph::from_edges(left, right, std::move(edges));
}

BipartiteGraph gen_random_2biplex(uint32_t left, uint32_t right, uint64_t seed) {
  if (left < 1 || right < 1) throw std::invalid_argument("both sides must be nonempty");
  StableRng rng(seed);

  std::array<std::vector<uint32_t>, 2> pool;
  pool[0].resize(left);
  pool[1].resize(right);
  for (size_t s = 0; s < 2; ++s) {
    for (uint32_t i = 0; i < pool[s].size(); ++i) pool[s][i] = i;
    rng.shuffle(pool[s]);
  }

  // Complement components are stitched from the back of the shuffled pools.
  // Each entry of a component alternates sides starting at start_side.
  std::vector<std::pair<VertexRef, VertexRef>> non_edges;
  auto take = [&](size_t s) {
    uint32_t v = pool[s].back();
    pool[s].pop_back();
    return VertexRef{static_cast<Side>(s), v};
  };

  while (!pool[0].empty() && !pool[1].empty()) {
    uint32_t both = static_cast<uint32_t>(std::min(pool[0].size(), pool[1].size()));
    uint32_t kind = rng.next_below(4);
    if (kind == 0) {  // isolated vertex on a random side
      size_t s = rng.next_below(2);
      if (pool[s].empty()) s ^= 1;
      take(s);
    } else if (kind == 1 && both >= 2) {  // even cycle of length 2k >= 4
      uint32_t k = 2 + rng.next_below(both - 1);
      std::vector<VertexRef> cyc;
      for (uint32_t i = 0; i < k; ++i) {
        cyc.push_back(take(0));
        cyc.push_back(take(1));
      }
      for (uint32_t i = 0; i < cyc.size(); ++i)
        non_edges.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    } else {  // alternating path, length >= 2
      size_t s = rng.next_below(2);
      uint32_t longest = both * 2;  // safe for either starting side
      uint32_t len = 2 + rng.next_below(std::max(1u, longest - 1));
      std::vector<VertexRef> path;
      for (uint32_t i = 0; i < len; ++i) {
        if (pool[s].empty()) break;
        path.push_back(take(s));
        s ^= 1;
      }
      if (path.size() < 2) continue;  // lone leftover acts as isolated
      for (uint32_t i = 0; i + 1 < path.size(); ++i)
        non_edges.emplace_back(path[i], path[i + 1]);
    }
  }

  std::vector<std::vector<bool>> missing(left, std::vector<bool>(right, false));
  for (auto& [a, b] : non_edges) {
    VertexRef l = a.side == Side::Left ? a : b;
    VertexRef r = a.side == Side::Left ? b : a;
    missing[l.index][r.index] = true;
  }
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < left; ++u)
    for (uint32_t v = 0; v < right; ++v)
      if (!missing[u][v]) edges.emplace_back(u, v);
  auto g = BipartiteGraph::from_edges(left, right, std::move(edges));
  if (!is_two_biplex(g)) throw std::logic_error("2-biplex generator postcondition failed");
  return g;
}

uint32_t complement_degree(const BipartiteGraph& g, VertexRef v, std::span<const uint32_t> pool) {
  auto nbrs = g.neighbors(v);
  size_t hits = 0, i = 0, j = 0;
  while (i < pool.size() && j < nbrs.size()) {
    if (pool[i] < nbrs[j]) {
      ++i;
    } else if (pool[i] > nbrs[j]) {
      ++j;
    } else {
      ++hits;
      ++i;
      ++j;
    }
  }
  return static_cast<uint32_t>(pool.size() - hits);
}

bool is_two_biplex(const BipartiteGraph& g) {
  for (uint32_t u = 0; u < g.left_count(); ++u)
    if (g.right_count() - g.degree(Side::Left, u) > 2) return false;
  for (uint32_t v = 0; v < g.right_count(); ++v)
    if (g.left_count() - g.degree(Side::Right, v) > 2) return false;
  return true;
}

}  // namespace mbe
