#include "mbe/ie.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "enum_driver.hpp"

namespace mbe {

namespace {

// Min-degree peeling over an explicit adjacency view; returns vertices in
// peel order. Ties break on the (degree, side, index) tuple.
std::vector<VertexRef> peel_bipartite(const BipartiteGraph& g) {
  std::set<std::tuple<uint32_t, Side, uint32_t>> queue;
  std::array<std::vector<uint32_t>, 2> deg;
  std::array<std::vector<bool>, 2> gone;
  for (Side s : {Side::Left, Side::Right}) {
    deg[side_index(s)].resize(g.count(s));
    gone[side_index(s)].assign(g.count(s), false);
    for (uint32_t v = 0; v < g.count(s); ++v) {
      deg[side_index(s)][v] = g.degree(s, v);
      queue.emplace(g.degree(s, v), s, v);
    }
  }
  std::vector<VertexRef> order;
  order.reserve(g.total_count());
  while (!queue.empty()) {
    auto [d, s, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[side_index(s)][v] = true;
    order.push_back({s, v});
    const Side os = opposite(s);
    for (uint32_t u : g.neighbors(s, v)) {
      if (gone[side_index(os)][u]) continue;
      auto& du = deg[side_index(os)][u];
      queue.erase({du, os, u});
      --du;
      queue.emplace(du, os, u);
    }
  }
  return order;
}

std::vector<uint32_t> left_two_hop(const BipartiteGraph& g, uint32_t v,
                                   std::vector<uint8_t>& mark) {
  std::vector<uint32_t> out;
  for (uint32_t w : g.neighbors(Side::Left, v)) {
    for (uint32_t u : g.neighbors(Side::Right, w)) {
      if (u == v || mark[u]) continue;
      mark[u] = 1;
      out.push_back(u);
    }
  }
  for (uint32_t u : out) mark[u] = 0;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexOrdering order_vertices(const BipartiteGraph& g, OrderKind kind) {
  const uint32_t n = g.left_count();
  VertexOrdering ord;
  ord.kind = kind;
  ord.order.resize(n);
  for (uint32_t v = 0; v < n; ++v) ord.order[v] = v;

  switch (kind) {
    case OrderKind::Arbitrary:
      break;
    case OrderKind::Degree:
      std::sort(ord.order.begin(), ord.order.end(), [&](uint32_t a, uint32_t b) {
        return std::pair(g.degree(Side::Left, a), a) < std::pair(g.degree(Side::Left, b), b);
      });
      break;
    case OrderKind::Degeneracy: {
      ord.order.clear();
      for (VertexRef v : peel_bipartite(g))
        if (v.side == Side::Left) ord.order.push_back(v.index);
      break;
    }
    case OrderKind::Unilateral: {
      // Peel the projection: left vertices adjacent iff they share a
      // right-side neighbor. A stand-in for the one-mode ordering.
      std::vector<uint8_t> mark(n, 0);
      std::vector<std::vector<uint32_t>> proj(n);
      for (uint32_t v = 0; v < n; ++v) proj[v] = left_two_hop(g, v, mark);

      std::set<std::pair<uint32_t, uint32_t>> queue;
      std::vector<uint32_t> deg(n);
      std::vector<bool> gone(n, false);
      for (uint32_t v = 0; v < n; ++v) {
        deg[v] = static_cast<uint32_t>(proj[v].size());
        queue.emplace(deg[v], v);
      }
      ord.order.clear();
      while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        gone[v] = true;
        ord.order.push_back(v);
        for (uint32_t u : proj[v]) {
          if (gone[u]) continue;
          queue.erase({deg[u], u});
          --deg[u];
          queue.emplace(deg[u], u);
        }
      }
      break;
    }
  }
  return ord;
}

IeInstance build_instance(const BipartiteGraph& g, const VertexOrdering& ord, uint32_t i) {
  if (i >= ord.order.size()) throw std::invalid_argument("instance position out of range");
  std::vector<uint32_t> pos(g.left_count());
  for (uint32_t r = 0; r < ord.order.size(); ++r) pos[ord.order[r]] = r;

  IeInstance inst;
  const uint32_t v = ord.order[i];
  inst.seed_vertex = {Side::Left, v};
  auto n1 = g.neighbors(Side::Left, v);
  inst.c_right.assign(n1.begin(), n1.end());

  std::vector<uint8_t> mark(g.left_count(), 0);
  for (uint32_t u : left_two_hop(g, v, mark)) {
    if (pos[u] > i)
      inst.c_left.push_back(u);
    else
      inst.x_left.push_back(u);
  }
  return inst;
}

uint32_t gamma(const BipartiteGraph& g, const VertexOrdering& ord) {
  uint32_t best = 0;
  for (uint32_t i = 0; i < ord.order.size(); ++i) {
    const auto inst = build_instance(g, ord, i);
    best = std::max(best, static_cast<uint32_t>(inst.c_left.size() + inst.c_right.size() +
                                                inst.x_left.size()));
  }
  return best;
}

namespace {

OrderKind order_kind_of(IeMode mode) {
  switch (mode) {
    case IeMode::Arbitrary:
      return OrderKind::Arbitrary;
    case IeMode::Degree:
      return OrderKind::Degree;
    case IeMode::Degeneracy:
      return OrderKind::Degeneracy;
    case IeMode::Unilateral:
      return OrderKind::Unilateral;
    case IeMode::Off:
      break;
  }
  throw std::invalid_argument("instance decomposition is off");
}

Branch instance_branch(const BipartiteGraph& g, const IeInstance& inst, Workspace& ws) {
  return make_branch(g, {inst.seed_vertex.index}, {}, inst.c_left, inst.c_right, inst.x_left,
                     {}, ws);
}

}  // namespace

EnumStats enumerate_ie(const BipartiteGraph& g, const EnumConfig& cfg, const ResultSink& sink,
                       BranchObserver* observer) {
  const auto ordering = order_vertices(g, order_kind_of(cfg.ie_mode));

  if (!cfg.parallel_instances) {
    detail::EnumDriver driver(g, cfg, sink, observer);
    for (uint32_t i = 0; i < ordering.order.size() && !driver.stopped(); ++i) {
      const auto inst = build_instance(g, ordering, i);
      Branch root = instance_branch(g, inst, driver.workspace());
      driver.run(root, 0);
    }
    return driver.stats();
  }

  // Parallel mode: instances are independent; deliveries are serialized and
  // may interleave across instances. Counters merge associatively.
  const uint32_t workers =
      std::max(1u, std::min(std::thread::hardware_concurrency(),
                            static_cast<uint32_t>(ordering.order.size())));
  std::mutex sink_mutex;
  std::atomic<bool> halt{false};
  uint64_t shared_outputs = 0;  // guarded by sink_mutex
  ResultSink locked_sink = [&](std::span<const uint32_t> l, std::span<const uint32_t> r) {
    std::lock_guard lock(sink_mutex);
    if (halt.load(std::memory_order_relaxed)) return false;
    const bool keep_going = sink(l, r);
    ++shared_outputs;
    if (!keep_going || (cfg.emit_limit && shared_outputs >= *cfg.emit_limit)) {
      halt.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  };

  std::vector<EnumStats> partials(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (uint32_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      detail::EnumDriver driver(g, cfg, locked_sink, observer);
      for (uint32_t i = w; i < ordering.order.size() && !driver.stopped(); i += workers) {
        if (halt.load(std::memory_order_relaxed)) break;
        const auto inst = build_instance(g, ordering, i);
        Branch root = instance_branch(g, inst, driver.workspace());
        driver.run(root, 0);
      }
      partials[w] = std::move(driver.stats());
    });
  }
  for (auto& t : pool) t.join();

  EnumStats merged;
  for (auto& p : partials) merged.merge_from(p);
  merged.delay_samples.clear();  // meaningless when interleaved
  return merged;
}

}  // namespace mbe
