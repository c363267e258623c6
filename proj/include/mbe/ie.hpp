#pragma once

#include <vector>

#include "mbe/enumerate.hpp"
#include "mbe/graph.hpp"

namespace mbe {

enum class OrderKind { Arbitrary, Degree, Degeneracy, Unilateral };

/// A permutation of the left side's indices along which instances are cut.
struct VertexOrdering {
  OrderKind kind = OrderKind::Arbitrary;
  std::vector<uint32_t> order;
};

/// Root sets of the i-th decomposed instance: the seed becomes S, its 1-hop
/// neighbors plus remaining 2-hop neighbors become C, and its 2-hop
/// neighbors that come earlier in the ordering become X (always left-sided).
struct IeInstance {
  VertexRef seed_vertex{Side::Left, 0};
  std::vector<uint32_t> c_left;
  std::vector<uint32_t> c_right;
  std::vector<uint32_t> x_left;
};

/// Arbitrary keeps input index order. Degree sorts ascending by degree then
/// index. Degeneracy peels the globally minimum-degree vertex of the whole
/// bipartite graph (ties: Left before Right, then index) and keeps the left
/// subsequence. Unilateral approximates the one-mode variant by peeling the
/// left projection (two left vertices adjacent iff they share a neighbor).
VertexOrdering order_vertices(const BipartiteGraph& g, OrderKind kind);

/// Instance for position i of the ordering; throws std::invalid_argument
/// when i is out of range.
IeInstance build_instance(const BipartiteGraph& g, const VertexOrdering& ord, uint32_t i);

/// Size of the largest instance root, max over i of |C_i| + |X_i|; 0 when
/// the left side is empty. Bounded by min(n - 1, max_degree^2 + max_degree - 1).
uint32_t gamma(const BipartiteGraph& g, const VertexOrdering& ord);

/// Runs the branch search once per instance; every maximal biclique of g is
/// delivered exactly once across all instances. Sequential in ordering
/// position by default; with cfg.parallel_instances the instances run on a
/// thread pool and deliveries are serialized through a lock.
EnumStats enumerate_ie(const BipartiteGraph& g, const EnumConfig& cfg, const ResultSink& sink,
                       BranchObserver* observer = nullptr);

}  // namespace mbe
